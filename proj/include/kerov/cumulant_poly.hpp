#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// Indeterminate family: R_2, R_3, ... (free cumulants) or B_2, B_3, ...
// (Boolean cumulants). Mixing families in one expression is a bug.
enum class Family { Free, Boolean };

char family_letter(Family f);

// Sparse polynomial in a cumulant family. The monomial prod X_i^{m_i} is
// keyed by the partition with m_i parts equal to i (parts >= 2); the empty
// partition keys the constant term. Weighted degree of a monomial = |key|.
class CumulantPoly {
public:
    using TermMap = std::map<Partition, Rational, MonomialOrder>;

    explicit CumulantPoly(Family f = Family::Free) : family_(f) {}

    static CumulantPoly zero(Family f) { return CumulantPoly(f); }
    static CumulantPoly constant(Family f, const Rational& c);
    static CumulantPoly one(Family f) { return constant(f, 1); }
    static CumulantPoly monomial(Family f, const Partition& key, const Rational& coeff);
    static CumulantPoly indeterminate(Family f, int index, const Rational& coeff = 1);

    Family family() const { return family_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    Rational coefficient(const Partition& key) const;

    // Max |key| over stored terms; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int d) const;
    std::set<int> indices() const;

    CumulantPoly& operator+=(const CumulantPoly& other);
    CumulantPoly& operator-=(const CumulantPoly& other);
    CumulantPoly& operator*=(const Rational& c);

    CumulantPoly homogeneous_part(int d) const;

    // Ring homomorphism sending X_i to images.at(i). Every index appearing
    // in the polynomial must have an image; images must share one family
    // (which becomes the result family). `fallback` fixes the result family
    // when the polynomial is constant and no image gets used.
    CumulantPoly substitute(const std::map<int, CumulantPoly>& images,
                            std::optional<Family> fallback = std::nullopt) const;

    // p/n, defined only when every coefficient is an integer divisible by n.
    CumulantPoly div_exact_integer(const BigInt& n) const;

    bool all_coefficients_integer() const;
    bool has_negative_coefficient() const;

    // Numeric evaluation; values[i] is the value of X_i.
    Rational evaluate(const std::vector<Rational>& values) const;

    void add_term(const Partition& key, const Rational& coeff);  // accumulate, drop zeros
    void keep_terms_with_weight_at_most(int max_weight);

    // Canonical rendering, e.g. "R7 + 35*R5 + 35*R3*R2 + 84*R3".
    std::string render_text() const;
    // Display-style rendering, e.g. "R_7 + 35R_5 + 35R_3 R_2 + 84R_3".
    std::string render_latex() const;

    bool operator==(const CumulantPoly& other) const {
        return family_ == other.family_ && terms_ == other.terms_;
    }

private:
    void require_same_family(const CumulantPoly& other) const;

    Family family_;
    TermMap terms_;
};

CumulantPoly operator+(CumulantPoly a, const CumulantPoly& b);
CumulantPoly operator-(CumulantPoly a, const CumulantPoly& b);
CumulantPoly operator-(CumulantPoly a);
CumulantPoly operator*(const CumulantPoly& a, const CumulantPoly& b);
CumulantPoly operator*(CumulantPoly a, const Rational& c);
CumulantPoly operator*(const Rational& c, CumulantPoly a);

}  // namespace kerov
