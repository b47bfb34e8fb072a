#include "folgeo/jsonio.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace folgeo {

void JsonWriter::comma() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!need_comma_.empty()) {
        if (need_comma_.back()) out_ += ',';
        need_comma_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += '{';
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    need_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma();
    out_ += '[';
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    comma();
    out_ += '"';
    out_ += escape_json(k);
    out_ += "\":";
    after_key_ = true;
    return *this;
}

std::string JsonWriter::format_double(double v) {
    if (!std::isfinite(v)) return v > 0 ? "1e999" : (v < 0 ? "-1e999" : "null");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

JsonWriter& JsonWriter::value(double v) {
    comma();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(long v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(unsigned long long v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    comma();
    out_ += '"';
    out_ += escape_json(s);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(const char* s) { return value(std::string(s)); }

JsonWriter& JsonWriter::null() {
    comma();
    out_ += "null";
    return *this;
}

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string rep_to_json(const Representation& rep) {
    JsonWriter w;
    w.begin_object();
    w.key("genus").value(rep.genus);
    w.key("generators").begin_array();
    for (const auto& g : rep.gens) {
        w.begin_array();
        w.value(g.a).value(g.b).value(g.c).value(g.d);
        w.end_array();
    }
    w.end_array();
    w.key("label").value(rep.label);
    w.end_object();
    std::string s = w.str();
    s += '\n';
    return s;
}

Representation rep_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("representation JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("genus") || !j.contains("generators"))
        throw std::invalid_argument("representation JSON: expected {genus, generators, label}");
    int genus = j.at("genus").get<int>();
    std::vector<MoebiusElement> gens;
    for (const auto& row : j.at("generators")) {
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("representation JSON: generator rows must have 4 entries");
        gens.push_back(MoebiusElement::from_matrix(row[0].get<double>(), row[1].get<double>(),
                                                   row[2].get<double>(), row[3].get<double>()));
    }
    std::string label = j.value("label", std::string("unnamed"));
    Representation rep = Representation::make(genus, std::move(gens), std::move(label));
    if (!(rep.relator_residual < 1e-8))
        throw std::invalid_argument("representation JSON: relator residual " +
                                    std::to_string(rep.relator_residual) + " exceeds 1e-8");
    return rep;
}

namespace {

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stod(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

// translation of length l along the axis through i at rotation parameter psi
MoebiusElement tilted_translation(double l, double psi) {
    MoebiusElement r = MoebiusElement::rotation(psi);
    return r * MoebiusElement::translation(l) * r.inverse();
}

}  // namespace

Representation builtin_rep(const std::string& spec) {
    std::string name = spec;
    std::string args;
    if (size_t colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    if (name == "bolza") return bolza();
    if (name == "trivial") return trivial_rep(2);
    if (name == "rotation") {
        if (args.empty()) throw std::invalid_argument("builtin rotation needs angles: rotation:a,b,c,d");
        auto angles = parse_doubles(args);
        if (angles.size() % 2 != 0 || angles.size() < 4)
            throw std::invalid_argument("builtin rotation needs 2*genus angles (genus >= 2)");
        return rotation_rep(static_cast<int>(angles.size()) / 2, angles);
    }
    if (name == "free_quotient") {
        // two hyperbolic translations (length, axis angle); the default pair
        // crosses at i and is non-elementary
        double l1 = 1.2, p1 = 0.0, l2 = 1.2, p2 = M_PI / 3.0;
        if (!args.empty()) {
            auto v = parse_doubles(args);
            if (v.size() != 4)
                throw std::invalid_argument("builtin free_quotient takes l1,psi1,l2,psi2");
            l1 = v[0]; p1 = v[1]; l2 = v[2]; p2 = v[3];
        }
        return free_quotient_rep(tilted_translation(l1, p1), tilted_translation(l2, p2));
    }
    if (name == "twist") {
        size_t comma = args.rfind(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("builtin twist takes base,k (e.g. twist:bolza,1)");
        Representation base = builtin_rep(args.substr(0, comma));
        int k = std::stoi(args.substr(comma + 1));
        return twist(base, k);
    }
    throw std::invalid_argument("unknown builtin representation '" + spec + "'");
}

}  // namespace folgeo
