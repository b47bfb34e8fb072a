#include "folgeo/experiments.hpp"

#include <cmath>
#include <ctime>

#include "folgeo/fuchsian_pair.hpp"
#include "folgeo/jsonio.hpp"

namespace folgeo {

std::string version_string() { return "0.1.0"; }

namespace {

std::string csv_meta(const std::string& what) {
    char buf[64];
    std::time_t now = std::time(nullptr);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return "# folgeo " + version_string() + " " + what + " " + buf + "\n";
}

void provenance(JsonWriter& w, const Representation& rho, const Representation* hol) {
    w.key("provenance").begin_object();
    w.key("version").value(version_string());
    w.key("rho").value(rho.label);
    if (hol) w.key("hol").value(hol->label);
    w.end_object();
}

std::string fmt(double v) { return JsonWriter::format_double(v); }

}  // namespace

std::string spectrum_csv(const Representation& rho, const Representation* hol, int max_len,
                         bool meta) {
    ClassCensus census = enumerate_classes(rho.genus, max_len);
    auto rows = spectrum_rows(rho, hol, census);
    std::string out;
    if (meta) out += csv_meta("spectrum max_len=" + std::to_string(max_len));
    out += hol ? "class,l_rho,l_hol,ratio\n" : "class,l_rho\n";
    for (const auto& r : rows) {
        out += r.cls.str();
        out += ',';
        out += fmt(r.l_rho);
        if (hol) {
            out += ',';
            out += fmt(r.l_hol);
            out += ',';
            out += fmt(r.ratio);
        }
        out += '\n';
    }
    return out;
}

std::string dominate_json(const Representation& rho, const Representation& hol, int max_len) {
    DominationReport rep = domination_report(rho, hol, max_len);
    JsonWriter w;
    w.begin_object();
    w.key("kappa_hat").value(rep.kappa_hat);
    w.key("worst_class").begin_array();
    for (int c : rep.worst_class.letters) w.value(c);
    w.end_array();
    w.key("worst_class_str").value(rep.worst_class.str());
    w.key("census_size").value(rep.census_size);
    w.key("excluded").value(rep.excluded);
    w.key("verdict").value(to_string(rep.verdict));
    w.key("max_len").value(max_len);
    provenance(w, rho, &hol);
    w.end_object();
    return w.str() + "\n";
}

namespace {

void exponent_fields(JsonWriter& w, const ExponentEstimate& e) {
    w.begin_object();
    w.key("value").value(e.value);
    w.key("stderr").value(e.stderr_);
    w.key("horizon").value(e.horizon);
    w.key("batches").value(e.batches);
    w.end_object();
}

}  // namespace

std::string exponent_json(const Representation& rho, const Representation& hol, double T,
                          double dt, std::uint64_t seed, int n_seeds) {
    auto estimates = transverse_exponent_seeds(rho, hol, T, seed, n_seeds, dt);
    double mean = 0.0;
    for (const auto& e : estimates) mean += e.value;
    mean /= static_cast<double>(estimates.size());
    double pooled_se;
    if (estimates.size() > 1) {
        double var = 0.0;
        for (const auto& e : estimates) var += (e.value - mean) * (e.value - mean);
        var /= static_cast<double>(estimates.size() - 1);
        pooled_se = std::sqrt(var / static_cast<double>(estimates.size()));
    } else {
        pooled_se = estimates[0].stderr_;
    }
    JsonWriter w;
    w.begin_object();
    w.key("value").value(mean);
    w.key("stderr").value(pooled_se);
    w.key("estimates").begin_array();
    for (const auto& e : estimates) exponent_fields(w, e);
    w.end_array();
    w.key("T").value(T);
    w.key("dt").value(dt);
    w.key("seed").value(static_cast<unsigned long long>(seed));
    w.key("n_seeds").value(n_seeds);
    provenance(w, rho, &hol);
    w.end_object();
    return w.str() + "\n";
}

std::string exponent_series_csv(const Representation& rho, const Representation& hol, double T,
                                double dt, std::uint64_t seed, bool meta) {
    auto [est, series] = transverse_exponent_series(rho, hol, T, seed, dt);
    std::string out;
    if (meta) out += csv_meta("exponent seed=" + std::to_string(seed));
    out += "t,running_mean,batch_id\n";
    for (const auto& p : series) {
        out += fmt(p.t);
        out += ',';
        out += fmt(p.running_mean);
        out += ',';
        out += std::to_string(p.batch_id);
        out += '\n';
    }
    return out;
}

std::string srb_json(const Representation& rho, const Representation& hol, double T, int n_orbits,
                     int bins, std::uint64_t seed) {
    SrbResult res = srb_histogram(rho, hol, T, n_orbits, bins, seed);
    JsonWriter w;
    w.begin_object();
    w.key("grid").begin_object();
    w.key("n_dist").value(res.aggregate.n_dist);
    w.key("n_dir").value(res.aggregate.n_dir);
    w.key("n_fiber").value(res.aggregate.n_fiber);
    w.key("dist_max").value(res.aggregate.dist_max);
    w.end_object();
    w.key("total").value(res.aggregate.total);
    w.key("counts").begin_array();
    for (double c : res.aggregate.counts) w.value(c);
    w.end_array();
    w.key("tv_matrix").begin_array();
    for (const auto& row : res.tv) {
        w.begin_array();
        for (double v : row) w.value(v);
        w.end_array();
    }
    w.end_array();
    w.key("T").value(T);
    w.key("n_orbits").value(n_orbits);
    w.key("bins").value(bins);
    w.key("seed").value(static_cast<unsigned long long>(seed));
    provenance(w, rho, &hol);
    w.end_object();
    return w.str() + "\n";
}

std::string sections_csv(const Representation& rho, const Representation& hol, int n_dir,
                         int n_steps, double step, double t_back, bool meta) {
    SkewSystem sys(rho, hol);
    std::string out;
    if (meta) out += csv_meta("sections t_back=" + fmt(t_back));
    out += "dir_index,flow_time,re_z,im_z,psi,theta_section,xi_plus\n";
    for (int k = 0; k < n_dir; ++k) {
        Frame f = Frame::standard();
        f.g = f.g * MoebiusElement::rotation(M_PI * k / n_dir);
        double t_acc = 0.0;
        for (int s = 0; s <= n_steps; ++s) {
            CircleAngle sec = attracting_section(sys, f, t_back);
            std::complex<double> z = basepoint(f);
            out += std::to_string(k) + ',' + fmt(t_acc) + ',' + fmt(z.real()) + ',' +
                   fmt(z.imag()) + ',' + fmt(direction_angle(f)) + ',' + fmt(sec.theta) + ',' +
                   fmt(triple_coords(f).xi_plus.theta) + '\n';
            if (s < n_steps) {
                auto [next, map] = sys.transport(f, step);
                f = next;
                t_acc += step;
            }
        }
    }
    return out;
}

std::string pair_json(const Representation& rho, const Representation& hol, double T, int max_len,
                      std::uint64_t seed) {
    TheoremEReport rep = theorem_e_check(rho, hol, T, max_len, seed);
    JsonWriter w;
    w.begin_object();
    w.key("lambda_hat").value(rep.lambda_hat);
    w.key("stderr").value(rep.stderr_);
    w.key("chi_hat").value(rep.chi_hat);
    w.key("spread").value(rep.spread);
    w.key("discrepancy").value(rep.discrepancy);
    w.key("pass").value(rep.pass);
    w.key("provenance").begin_object();
    w.key("version").value(version_string());
    w.key("rho").value(rho.label);
    w.key("hol").value(hol.label);
    w.key("seeds").begin_array().value(static_cast<unsigned long long>(rep.seed)).end_array();
    w.key("T").value(rep.T);
    w.key("max_len").value(rep.max_len);
    w.end_object();
    w.end_object();
    return w.str() + "\n";
}

std::string detect_json(const Representation& hol) {
    InvariantWitness wit = detect_invariant_measure(hol);
    JsonWriter w;
    w.begin_object();
    w.key("witness").value(to_string(wit.kind));
    w.key("angles").begin_array();
    for (const auto& a : wit.angles) w.value(a.theta);
    w.end_array();
    provenance(w, hol, nullptr);
    w.end_object();
    return w.str() + "\n";
}

}  // namespace folgeo
