#pragma once

#include <string>
#include <vector>

#include "folgeo/representation.hpp"

namespace folgeo {

// deterministic JSON writer: insertion order preserved, doubles printed with
// 17 significant digits so they round-trip bit-exactly
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long v);
    JsonWriter& value(unsigned long long v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s);
    JsonWriter& null();

    std::string str() const { return out_; }

    static std::string format_double(double v);

private:
    void comma();
    std::string out_;
    std::vector<bool> need_comma_;
    bool after_key_ = false;
};

std::string escape_json(const std::string& s);

// representation schema: { "genus": int, "generators": [[4 floats] x 2g], "label": str }
std::string rep_to_json(const Representation& rep);
Representation rep_from_json(const std::string& text);

// builtin registry: bolza | trivial | rotation:<2g angles> |
// free_quotient[:l1,psi1,l2,psi2] | twist:<builtin>,<k>
Representation builtin_rep(const std::string& spec);

}  // namespace folgeo
