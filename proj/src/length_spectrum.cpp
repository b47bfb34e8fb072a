#include "folgeo/length_spectrum.hpp"

#include <cmath>
#include <cstdio>

namespace folgeo {

int letter_rank(int c) {
    int k = std::abs(c);
    return 2 * (k - 1) + (c < 0 ? 1 : 0);
}

namespace {

// lexicographic comparison in letter_rank order
int compare_words(const std::vector<int>& u, const std::vector<int>& v) {
    size_t n = std::min(u.size(), v.size());
    for (size_t i = 0; i < n; ++i) {
        int ru = letter_rank(u[i]), rv = letter_rank(v[i]);
        if (ru != rv) return ru < rv ? -1 : 1;
    }
    if (u.size() == v.size()) return 0;
    return u.size() < v.size() ? -1 : 1;
}

// is w the minimal representative among all rotations of w and of w^{-1}?
bool is_canonical(const std::vector<int>& w) {
    const size_t n = w.size();
    std::vector<int> r(n), wi(n);
    for (size_t i = 0; i < n; ++i) wi[i] = -w[n - 1 - i];
    for (size_t s = 0; s < n; ++s) {
        for (size_t i = 0; i < n; ++i) r[i] = w[(i + s) % n];
        if (s > 0 && compare_words(r, w) < 0) return false;
        for (size_t i = 0; i < n; ++i) r[i] = wi[(i + s) % n];
        if (compare_words(r, w) < 0) return false;
    }
    return true;
}

void extend(std::vector<int>& w, size_t n, int n_letters, std::vector<Word>& out) {
    if (w.size() == n) {
        if (w.front() == -w.back()) return;  // not cyclically reduced
        if (!is_canonical(w)) return;
        Word cls;
        cls.letters = w;
        cls.cyclic = true;
        out.push_back(std::move(cls));
        return;
    }
    int min_rank = letter_rank(w.front());
    for (int rank = min_rank; rank < 2 * n_letters; ++rank) {
        int k = rank / 2 + 1;
        int c = (rank % 2 == 0) ? k : -k;
        if (c == -w.back()) continue;  // free reduction
        w.push_back(c);
        extend(w, n, n_letters, out);
        w.pop_back();
    }
}

}  // namespace

ClassCensus enumerate_classes(int genus, int max_len) {
    if (genus < 2) throw std::invalid_argument("enumerate_classes: genus must be >= 2");
    if (max_len < 1) throw std::invalid_argument("enumerate_classes: max_len must be >= 1");
    if (max_len > 16) throw std::invalid_argument("enumerate_classes: max_len above hard cap 16");
    if (max_len > 12)
        std::fprintf(stderr, "folgeo: warning: census max_len %d above soft cap 12, proceeding\n",
                     max_len);
    ClassCensus census;
    census.genus = genus;
    census.max_len = max_len;
    const int n_letters = 2 * genus;
    for (int n = 1; n <= max_len; ++n) {
        // the minimal rotation starts with the minimal-rank letter of the
        // word, so only first letters of minimal rank within the word survive;
        // extend() enforces rank(w[i]) >= rank(w[0])
        for (int rank0 = 0; rank0 < 2 * n_letters; ++rank0) {
            int k = rank0 / 2 + 1;
            std::vector<int> w{(rank0 % 2 == 0) ? k : -k};
            extend(w, static_cast<size_t>(n), n_letters, census.classes);
        }
    }
    return census;
}

double marked_length(const Representation& rep, const Word& w) {
    return translation_length(evaluate(rep, w));
}

const char* to_string(DominationVerdict v) {
    switch (v) {
        case DominationVerdict::DominatedAtCensus: return "DominatedAtCensus";
        case DominationVerdict::NotDominated: return "NotDominated";
        case DominationVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::vector<SpectrumRow> spectrum_rows(const Representation& rho, const Representation* hol,
                                       const ClassCensus& census) {
    std::vector<SpectrumRow> rows;
    rows.reserve(census.classes.size());
    for (const Word& w : census.classes) {
        SpectrumRow row;
        row.cls = w;
        row.l_rho = marked_length(rho, w);
        if (hol) {
            row.l_hol = marked_length(*hol, w);
            row.ratio = row.l_rho >= 1e-9 ? row.l_hol / row.l_rho : 0.0;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

DominationReport domination_report(const Representation& rho, const Representation& hol,
                                   int max_len) {
    if (rho.genus != hol.genus)
        throw std::invalid_argument("domination_report: genus mismatch");
    ClassCensus census = enumerate_classes(rho.genus, max_len);
    DominationReport report;
    report.census_size = static_cast<int>(census.classes.size());
    for (const Word& w : census.classes) {
        double lr = marked_length(rho, w);
        if (lr < 1e-9) {
            ++report.excluded;
            continue;
        }
        double ratio = marked_length(hol, w) / lr;
        if (ratio > report.kappa_hat) {
            report.kappa_hat = ratio;
            report.worst_class = w;
        }
    }
    if (report.kappa_hat >= 1.0)
        report.verdict = DominationVerdict::NotDominated;
    else if (report.kappa_hat < 1.0 - 1e-9 && report.excluded == 0)
        report.verdict = DominationVerdict::DominatedAtCensus;
    else
        report.verdict = DominationVerdict::Inconclusive;
    return report;
}

}  // namespace folgeo
