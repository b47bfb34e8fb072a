#pragma once

#include <string>
#include <vector>

#include "folgeo/moebius.hpp"

namespace folgeo {

// word in the surface group: signed generator indices, letter +-k with
// 1 <= k <= 2g, positive = generator, negative = its inverse; always kept
// freely reduced
struct Word {
    std::vector<int> letters;
    bool cyclic = false;  // set when the word is known cyclically reduced

    static Word from_letters(std::vector<int> ls);  // freely reduces
    static Word empty() { return Word{}; }

    int length() const { return static_cast<int>(letters.size()); }
    bool is_empty() const { return letters.empty(); }
    bool is_cyclically_reduced() const;

    Word inverse() const;
    Word power(int k) const;
    Word cyclically_reduced() const;

    std::string str() const;  // a1 b1 A1 ... (capital = inverse)

    friend Word operator*(const Word& u, const Word& v);
    friend bool operator==(const Word& u, const Word& v) { return u.letters == v.letters; }
};

// genus g surface group representation into PSL2(R): images of the standard
// generators a1,b1,...,ag,bg in that order
struct Representation {
    int genus = 0;
    std::vector<MoebiusElement> gens;
    double relator_residual = 0.0;
    std::string label;

    static Representation make(int genus, std::vector<MoebiusElement> gens, std::string label);

    const MoebiusElement& gen(int index1) const { return gens.at(index1 - 1); }
};

// the canonical relator [a1,b1]...[ag,bg] as a word
Word relator_word(int genus);

MoebiusElement evaluate(const Representation& rep, const Word& w);

// built-in families ---------------------------------------------------------

// genus-2 Fuchsian group of the regular hyperbolic octagon (all vertex angles
// pi/4, opposite sides paired by translations of length 2*acosh(1+sqrt 2));
// the standard quadruple below is a Nielsen change of basis of those pairings
Representation bolza();

// the four octagon side-pairing translations themselves (t0..t3)
std::vector<MoebiusElement> bolza_octagon_pairings();

// genus 2, a1 -> g1, b1 -> g2, a2 -> g2, b2 -> g1; the relator collapses
// identically, so this factors through a free group and has Euler number 0
Representation free_quotient_rep(const MoebiusElement& g1, const MoebiusElement& g2);

// all generators rotations about i; commuting family, preserves the fiber
// Lebesgue measure in the theta chart
Representation rotation_rep(int genus, const std::vector<double>& angles);

Representation trivial_rep(int genus = 2);

// precomposition with the automorphism b1 -> b1*a1^k (all other generators
// fixed); preserves relator, Euler number, and the image group
Representation twist(const Representation& rep, int k);

// simultaneous conjugation of all generator images by h
Representation conjugated(const Representation& rep, const MoebiusElement& h);

// Euler number of the representation, via the integer translation of the
// lifted relator; satisfies |e| <= 2*genus - 2 (Milnor-Wood)
int euler_number(const Representation& rep);

}  // namespace folgeo
