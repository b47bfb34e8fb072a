#pragma once

#include "folgeo/representation.hpp"

namespace folgeo {

// one cyclically reduced representative per conjugacy-or-inversion class of
// the free group on a1..bg, up to max_len; deterministic order
// (length, then lexicographic in the letter ranking below)
struct ClassCensus {
    int genus = 0;
    int max_len = 0;
    std::vector<Word> classes;
};

// total order on letters used for canonical representatives:
// a1 < A1 < b1 < B1 < a2 < ...
int letter_rank(int c);

// soft cap 12 (warns on stderr, proceeds), hard cap 16
ClassCensus enumerate_classes(int genus, int max_len);

double marked_length(const Representation& rep, const Word& w);

enum class DominationVerdict { DominatedAtCensus, NotDominated, Inconclusive };
const char* to_string(DominationVerdict v);

struct DominationReport {
    double kappa_hat = 0.0;  // sup over census of l_hol/l_rho, zero-length rho classes excluded
    Word worst_class;
    int census_size = 0;
    int excluded = 0;        // classes with l_rho below the exclusion floor 1e-9
    DominationVerdict verdict = DominationVerdict::Inconclusive;
};

struct SpectrumRow {
    Word cls;
    double l_rho = 0.0;
    double l_hol = 0.0;  // only meaningful when a second representation was given
    double ratio = 0.0;
};

std::vector<SpectrumRow> spectrum_rows(const Representation& rho, const Representation* hol,
                                       const ClassCensus& census);

DominationReport domination_report(const Representation& rho, const Representation& hol,
                                   int max_len);

}  // namespace folgeo
