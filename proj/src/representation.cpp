#include "folgeo/representation.hpp"

#include <cmath>

namespace folgeo {

Word Word::from_letters(std::vector<int> ls) {
    Word w;
    for (int c : ls) {
        if (c == 0) throw std::invalid_argument("Word: zero letter");
        if (!w.letters.empty() && w.letters.back() == -c)
            w.letters.pop_back();
        else
            w.letters.push_back(c);
    }
    return w;
}

bool Word::is_cyclically_reduced() const {
    if (letters.size() < 2) return true;
    return letters.front() != -letters.back();
}

Word Word::inverse() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    w.cyclic = cyclic;
    return w;
}

Word Word::power(int k) const {
    Word out;
    const Word base = k >= 0 ? *this : inverse();
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
}

Word Word::cyclically_reduced() const {
    Word w = *this;
    while (w.letters.size() >= 2 && w.letters.front() == -w.letters.back()) {
        w.letters.erase(w.letters.begin());
        w.letters.pop_back();
    }
    w.cyclic = true;
    return w;
}

std::string Word::str() const {
    std::string s;
    for (int c : letters) {
        if (!s.empty()) s += ' ';
        int k = std::abs(c);
        char base = (k % 2 == 1) ? 'a' : 'b';
        if (c < 0) base = static_cast<char>(base - 'a' + 'A');
        s += base;
        s += std::to_string((k + 1) / 2);
    }
    if (s.empty()) s = "e";
    return s;
}

Word operator*(const Word& u, const Word& v) {
    std::vector<int> ls = u.letters;
    ls.insert(ls.end(), v.letters.begin(), v.letters.end());
    return Word::from_letters(std::move(ls));
}

Word relator_word(int genus) {
    std::vector<int> ls;
    for (int i = 0; i < genus; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        ls.insert(ls.end(), {a, b, -a, -b});
    }
    return Word::from_letters(std::move(ls));
}

MoebiusElement evaluate(const Representation& rep, const Word& w) {
    MoebiusElement m = MoebiusElement::identity();
    const int n = 2 * rep.genus;
    for (int c : w.letters) {
        int k = std::abs(c);
        if (k < 1 || k > n) throw std::invalid_argument("evaluate: letter out of range");
        const MoebiusElement& g = rep.gens[static_cast<size_t>(k - 1)];
        m = m * (c > 0 ? g : g.inverse());
    }
    return m;
}

Representation Representation::make(int genus, std::vector<MoebiusElement> gens, std::string label) {
    if (genus < 2) throw std::invalid_argument("Representation: genus must be >= 2");
    if (gens.size() != static_cast<size_t>(2 * genus))
        throw std::invalid_argument("Representation: expected 2*genus generators");
    Representation rep;
    rep.genus = genus;
    rep.gens = std::move(gens);
    rep.label = std::move(label);
    rep.relator_residual =
        psl_distance(evaluate(rep, relator_word(genus)), MoebiusElement::identity());
    if (!(rep.relator_residual < 1e-6))
        throw std::invalid_argument("Representation: relator residual too large (" +
                                    std::to_string(rep.relator_residual) + ")");
    return rep;
}

std::vector<MoebiusElement> bolza_octagon_pairings() {
    // regular octagon centered at i, vertex angle pi/4: apothem d with
    // cosh d = 1 + sqrt 2; opposite sides are paired by translations of
    // length 2d along the four axes through i at angles k*pi/4
    const double d = std::acosh(1.0 + std::sqrt(2.0));
    const MoebiusElement t0 = MoebiusElement::translation(2.0 * d);
    std::vector<MoebiusElement> t;
    for (int k = 0; k < 4; ++k) {
        MoebiusElement r = MoebiusElement::rotation(k * M_PI / 8.0);
        t.push_back(r * t0 * r.inverse());
    }
    return t;
}

Representation bolza() {
    auto t = bolza_octagon_pairings();
    auto ti = [&](int k) { return t[static_cast<size_t>(k)].inverse(); };
    // change of basis from the pairing translations to a standard quadruple:
    // the commutator relator of (a1,b1,a2,b2) below reduces, in the free group
    // on t0..t3, to a cyclic rotation of the octagon vertex relation
    // t0 t1^-1 t2 t3^-1 t0^-1 t1 t2^-1 t3
    MoebiusElement a1 = ti(1) * t[0];
    MoebiusElement b1 = t[1];
    MoebiusElement a2 = ti(3) * t[2];
    MoebiusElement b2 = ti(1) * t[0] * t[3];
    return Representation::make(2, {a1, b1, a2, b2}, "bolza");
}

Representation free_quotient_rep(const MoebiusElement& g1, const MoebiusElement& g2) {
    return Representation::make(2, {g1.normalized(), g2.normalized(), g2.normalized(), g1.normalized()},
                                "free_quotient");
}

Representation rotation_rep(int genus, const std::vector<double>& angles) {
    if (genus < 2) throw std::invalid_argument("rotation_rep: genus must be >= 2");
    if (angles.size() != static_cast<size_t>(2 * genus))
        throw std::invalid_argument("rotation_rep: expected 2*genus angles");
    std::vector<MoebiusElement> gens;
    gens.reserve(angles.size());
    for (double a : angles) gens.push_back(MoebiusElement::rotation(a));
    return Representation::make(genus, std::move(gens), "rotation");
}

Representation trivial_rep(int genus) {
    std::vector<MoebiusElement> gens(static_cast<size_t>(2 * genus), MoebiusElement::identity());
    return Representation::make(genus, std::move(gens), "trivial");
}

Representation twist(const Representation& rep, int k) {
    Representation out = rep;
    MoebiusElement ak = MoebiusElement::identity();
    const MoebiusElement& a1 = rep.gens[0];
    for (int i = 0; i < std::abs(k); ++i) ak = ak * (k > 0 ? a1 : a1.inverse());
    out.gens[1] = rep.gens[1] * ak;
    out.label = rep.label + "+twist" + std::to_string(k);
    return Representation::make(out.genus, std::move(out.gens), std::move(out.label));
}

Representation conjugated(const Representation& rep, const MoebiusElement& h) {
    std::vector<MoebiusElement> gens;
    gens.reserve(rep.gens.size());
    MoebiusElement hi = h.inverse();
    for (const auto& g : rep.gens) gens.push_back(h * g * hi);
    return Representation::make(rep.genus, std::move(gens), rep.label + "+conj");
}

int euler_number(const Representation& rep) {
    if (!(rep.relator_residual < 1e-8))
        throw std::invalid_argument("euler_number: relator residual too large");
    std::vector<LiftedCircleMap> lifts;
    lifts.reserve(rep.gens.size());
    for (const auto& g : rep.gens) lifts.push_back(LiftedCircleMap::canonical(g));
    std::vector<LiftedCircleMap> rel;
    for (int i = 0; i < rep.genus; ++i) {
        const auto& A = lifts[static_cast<size_t>(2 * i)];
        const auto& B = lifts[static_cast<size_t>(2 * i + 1)];
        rel.push_back(A);
        rel.push_back(B);
        rel.push_back(A.inverse());
        rel.push_back(B.inverse());
    }
    return lift_relator(rel);
}

}  // namespace folgeo
