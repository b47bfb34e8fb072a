#include "folgeo/folgeo.h"

#include <cstring>
#include <new>
#include <string>

#include "folgeo/experiments.hpp"
#include "folgeo/jsonio.hpp"
#include "folgeo/skewflow.hpp"

struct folgeo_rep {
    folgeo::Representation rep;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
folgeo_status guarded(F&& f) {
    try {
        f();
        return FOLGEO_OK;
    } catch (const folgeo::NumericalGuard& e) {
        g_last_error = e.what();
        return FOLGEO_ERR_NUMERIC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FOLGEO_ERR_INVALID;
    }
}

folgeo::MoebiusElement element_from(const double mat[4]) {
    return folgeo::MoebiusElement::from_matrix(mat[0], mat[1], mat[2], mat[3]);
}

}  // namespace

extern "C" {

const char* folgeo_version(void) {
    static std::string v = folgeo::version_string();
    return v.c_str();
}

const char* folgeo_last_error(void) { return g_last_error.c_str(); }

void folgeo_string_free(char* s) { delete[] s; }

folgeo_status folgeo_rep_builtin(const char* spec, folgeo_rep** out) {
    return guarded([&] {
        if (!spec || !out) throw std::invalid_argument("folgeo_rep_builtin: null argument");
        *out = new folgeo_rep{folgeo::builtin_rep(spec)};
    });
}

folgeo_status folgeo_rep_from_json(const char* json_text, folgeo_rep** out) {
    return guarded([&] {
        if (!json_text || !out) throw std::invalid_argument("folgeo_rep_from_json: null argument");
        *out = new folgeo_rep{folgeo::rep_from_json(json_text)};
    });
}

folgeo_status folgeo_rep_to_json(const folgeo_rep* rep, char** out_text) {
    return guarded([&] {
        if (!rep || !out_text) throw std::invalid_argument("folgeo_rep_to_json: null argument");
        *out_text = dup_string(folgeo::rep_to_json(rep->rep));
    });
}

void folgeo_rep_free(folgeo_rep* rep) { delete rep; }

int folgeo_rep_genus(const folgeo_rep* rep) { return rep ? rep->rep.genus : 0; }

double folgeo_rep_relator_residual(const folgeo_rep* rep) {
    return rep ? rep->rep.relator_residual : -1.0;
}

const char* folgeo_rep_label(const folgeo_rep* rep) {
    return rep ? rep->rep.label.c_str() : "";
}

folgeo_status folgeo_classify(const double mat[4], int* out) {
    return guarded([&] {
        if (!mat || !out) throw std::invalid_argument("folgeo_classify: null argument");
        *out = static_cast<int>(folgeo::classify(element_from(mat)));
    });
}

folgeo_status folgeo_translation_length(const double mat[4], double* out) {
    return guarded([&] {
        if (!mat || !out) throw std::invalid_argument("folgeo_translation_length: null argument");
        *out = folgeo::translation_length(element_from(mat));
    });
}

folgeo_status folgeo_euler_number(const folgeo_rep* rep, int* out) {
    return guarded([&] {
        if (!rep || !out) throw std::invalid_argument("folgeo_euler_number: null argument");
        *out = folgeo::euler_number(rep->rep);
    });
}

folgeo_status folgeo_spectrum_csv(const folgeo_rep* rho, const folgeo_rep* hol_or_null,
                                  int max_len, int include_meta, char** out_csv) {
    return guarded([&] {
        if (!rho || !out_csv) throw std::invalid_argument("folgeo_spectrum_csv: null argument");
        *out_csv = dup_string(folgeo::spectrum_csv(
            rho->rep, hol_or_null ? &hol_or_null->rep : nullptr, max_len, include_meta != 0));
    });
}

folgeo_status folgeo_dominate_json(const folgeo_rep* rho, const folgeo_rep* hol, int max_len,
                                   char** out_json) {
    return guarded([&] {
        if (!rho || !hol || !out_json)
            throw std::invalid_argument("folgeo_dominate_json: null argument");
        *out_json = dup_string(folgeo::dominate_json(rho->rep, hol->rep, max_len));
    });
}

folgeo_status folgeo_exponent_json(const folgeo_rep* rho, const folgeo_rep* hol, double T,
                                   double dt, unsigned long long seed, int n_seeds,
                                   char** out_json) {
    return guarded([&] {
        if (!rho || !hol || !out_json)
            throw std::invalid_argument("folgeo_exponent_json: null argument");
        *out_json = dup_string(folgeo::exponent_json(rho->rep, hol->rep, T, dt, seed, n_seeds));
    });
}

folgeo_status folgeo_exponent_series_csv(const folgeo_rep* rho, const folgeo_rep* hol, double T,
                                         double dt, unsigned long long seed, int include_meta,
                                         char** out_csv) {
    return guarded([&] {
        if (!rho || !hol || !out_csv)
            throw std::invalid_argument("folgeo_exponent_series_csv: null argument");
        *out_csv = dup_string(
            folgeo::exponent_series_csv(rho->rep, hol->rep, T, dt, seed, include_meta != 0));
    });
}

folgeo_status folgeo_srb_json(const folgeo_rep* rho, const folgeo_rep* hol, double T,
                              int n_orbits, int bins, unsigned long long seed, char** out_json) {
    return guarded([&] {
        if (!rho || !hol || !out_json) throw std::invalid_argument("folgeo_srb_json: null argument");
        *out_json = dup_string(folgeo::srb_json(rho->rep, hol->rep, T, n_orbits, bins, seed));
    });
}

folgeo_status folgeo_sections_csv(const folgeo_rep* rho, const folgeo_rep* hol, int n_dir,
                                  int n_steps, double step, double t_back, int include_meta,
                                  char** out_csv) {
    return guarded([&] {
        if (!rho || !hol || !out_csv)
            throw std::invalid_argument("folgeo_sections_csv: null argument");
        *out_csv = dup_string(folgeo::sections_csv(rho->rep, hol->rep, n_dir, n_steps, step,
                                                   t_back, include_meta != 0));
    });
}

folgeo_status folgeo_pair_json(const folgeo_rep* rho, const folgeo_rep* hol, double T,
                               int max_len, unsigned long long seed, char** out_json) {
    return guarded([&] {
        if (!rho || !hol || !out_json) throw std::invalid_argument("folgeo_pair_json: null argument");
        *out_json = dup_string(folgeo::pair_json(rho->rep, hol->rep, T, max_len, seed));
    });
}

folgeo_status folgeo_detect_json(const folgeo_rep* hol, char** out_json) {
    return guarded([&] {
        if (!hol || !out_json) throw std::invalid_argument("folgeo_detect_json: null argument");
        *out_json = dup_string(folgeo::detect_json(hol->rep));
    });
}

}  // extern "C"
