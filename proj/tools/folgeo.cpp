// folgeo command line front end; talks to the core exclusively through the
// C API in folgeo/folgeo.h
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "folgeo/folgeo.h"

namespace {

struct RepHandle {
    folgeo_rep* rep = nullptr;
    ~RepHandle() { folgeo_rep_free(rep); }
};

struct CString {
    char* s = nullptr;
    ~CString() { folgeo_string_free(s); }
};

int fail(folgeo_status st) {
    std::fprintf(stderr, "folgeo: error: %s\n", folgeo_last_error());
    return static_cast<int>(st);
}

// `builtin:NAME[:params]` or a path to a representation JSON file
int load_rep(const std::string& spec, RepHandle& out) {
    folgeo_status st;
    if (spec.rfind("builtin:", 0) == 0) {
        st = folgeo_rep_builtin(spec.substr(8).c_str(), &out.rep);
    } else {
        std::ifstream in(spec);
        if (!in) {
            std::fprintf(stderr, "folgeo: error: cannot open '%s'\n", spec.c_str());
            return 1;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        st = folgeo_rep_from_json(ss.str().c_str(), &out.rep);
    }
    if (st != FOLGEO_OK) return fail(st);
    return 0;
}

int write_output(const std::string& path, const char* text) {
    if (path.empty() || path == "-") {
        std::fputs(text, stdout);
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "folgeo: error: cannot write '%s'\n", path.c_str());
        return 1;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for foliated geodesic flows over hyperbolic surfaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(folgeo_version()));

    std::string rho_spec, hol_spec, rep_spec, out_path;
    double T = 1e4, dt = 0.5, t_back = 20.0, section_step = 0.5;
    int max_len = 6, n_seeds = 1, n_orbits = 8, bins = 8, n_dir = 8, n_steps = 0;
    unsigned long long seed = 0;
    bool no_meta = false, series = false;

    auto add_common = [&](CLI::App* cmd, bool needs_pair) {
        if (needs_pair) {
            cmd->add_option("--rho", rho_spec, "base representation (file or builtin:NAME)")
                ->required();
            cmd->add_option("--hol", hol_spec, "holonomy representation (file or builtin:NAME)")
                ->required();
        }
        cmd->add_option("--out,-o", out_path, "output file (default stdout)");
    };

    auto* c_spectrum = app.add_subcommand("spectrum", "conjugacy census with marked lengths (CSV)");
    c_spectrum->add_option("--rho", rho_spec)->required();
    c_spectrum->add_option("--hol", hol_spec);
    c_spectrum->add_option("--max-len", max_len);
    c_spectrum->add_flag("--no-meta", no_meta, "omit the timestamp header line");
    add_common(c_spectrum, false);

    auto* c_dominate = app.add_subcommand("dominate", "domination report (JSON)");
    add_common(c_dominate, true);
    c_dominate->add_option("--max-len", max_len);

    auto* c_euler = app.add_subcommand("euler", "Euler number of a representation");
    c_euler->add_option("--rep", rep_spec)->required();
    add_common(c_euler, false);

    auto* c_exponent = app.add_subcommand("exponent", "transverse Lyapunov exponent (JSON or CSV series)");
    add_common(c_exponent, true);
    c_exponent->add_option("--T", T);
    c_exponent->add_option("--dt", dt);
    c_exponent->add_option("--seed", seed);
    c_exponent->add_option("--seeds", n_seeds, "number of independent seeds");
    c_exponent->add_flag("--series", series, "emit the running-mean time series as CSV");
    c_exponent->add_flag("--no-meta", no_meta);

    auto* c_srb = app.add_subcommand("srb", "empirical SRB histogram (JSON)");
    add_common(c_srb, true);
    c_srb->add_option("--T", T);
    c_srb->add_option("--n-orbits", n_orbits);
    c_srb->add_option("--bins", bins);
    c_srb->add_option("--seed", seed);

    auto* c_sections = app.add_subcommand("sections", "attracting-section table over a frame grid (CSV)");
    add_common(c_sections, true);
    c_sections->add_option("--n-dir", n_dir, "directions at the base point");
    c_sections->add_option("--n-steps", n_steps, "flow steps per direction");
    c_sections->add_option("--step", section_step, "flow time between rows");
    c_sections->add_option("--t-back", t_back);
    c_sections->add_flag("--no-meta", no_meta);

    auto* c_pair = app.add_subcommand("pair", "Fuchsian pair: lambda vs -chi cross check (JSON)");
    add_common(c_pair, true);
    c_pair->add_option("--T", T);
    c_pair->add_option("--max-len", max_len);
    c_pair->add_option("--seed", seed);

    auto* c_detect = app.add_subcommand("detect", "invariant-measure witness search (JSON)");
    c_detect->add_option("--rep", rep_spec)->required();
    add_common(c_detect, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    folgeo_status st = FOLGEO_OK;
    CString text;

    if (c_spectrum->parsed()) {
        RepHandle rho, hol;
        if (int rc = load_rep(rho_spec, rho)) return rc;
        if (!hol_spec.empty())
            if (int rc = load_rep(hol_spec, hol)) return rc;
        st = folgeo_spectrum_csv(rho.rep, hol.rep, max_len, !no_meta, &text.s);
    } else if (c_dominate->parsed()) {
        RepHandle rho, hol;
        if (int rc = load_rep(rho_spec, rho)) return rc;
        if (int rc = load_rep(hol_spec, hol)) return rc;
        st = folgeo_dominate_json(rho.rep, hol.rep, max_len, &text.s);
    } else if (c_euler->parsed()) {
        RepHandle rep;
        if (int rc = load_rep(rep_spec, rep)) return rc;
        int e = 0;
        st = folgeo_euler_number(rep.rep, &e);
        if (st == FOLGEO_OK) {
            std::string line = std::to_string(e) + "\n";
            return write_output(out_path, line.c_str());
        }
    } else if (c_exponent->parsed()) {
        RepHandle rho, hol;
        if (int rc = load_rep(rho_spec, rho)) return rc;
        if (int rc = load_rep(hol_spec, hol)) return rc;
        st = series ? folgeo_exponent_series_csv(rho.rep, hol.rep, T, dt, seed, !no_meta, &text.s)
                    : folgeo_exponent_json(rho.rep, hol.rep, T, dt, seed, n_seeds, &text.s);
    } else if (c_srb->parsed()) {
        RepHandle rho, hol;
        if (int rc = load_rep(rho_spec, rho)) return rc;
        if (int rc = load_rep(hol_spec, hol)) return rc;
        st = folgeo_srb_json(rho.rep, hol.rep, T, n_orbits, bins, seed, &text.s);
    } else if (c_sections->parsed()) {
        RepHandle rho, hol;
        if (int rc = load_rep(rho_spec, rho)) return rc;
        if (int rc = load_rep(hol_spec, hol)) return rc;
        st = folgeo_sections_csv(rho.rep, hol.rep, n_dir, n_steps, section_step, t_back, !no_meta,
                                 &text.s);
    } else if (c_pair->parsed()) {
        RepHandle rho, hol;
        if (int rc = load_rep(rho_spec, rho)) return rc;
        if (int rc = load_rep(hol_spec, hol)) return rc;
        st = folgeo_pair_json(rho.rep, hol.rep, T, max_len, seed, &text.s);
    } else if (c_detect->parsed()) {
        RepHandle rep;
        if (int rc = load_rep(rep_spec, rep)) return rc;
        st = folgeo_detect_json(rep.rep, &text.s);
    }

    if (st != FOLGEO_OK) return fail(st);
    if (text.s) return write_output(out_path, text.s);
    return 0;
}
