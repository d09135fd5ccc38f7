#pragma once

#include <map>
#include <vector>

#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// Monomial symmetric function m_nu evaluated at a finite integer vector:
// the sum over all distinct assignments of the exponent multiset to
// positions of x. m_() is identically 1.
Rational eval_monomial(const Partition& nu, const std::vector<int>& x);

// m_lambda at x_i = i for i = 1..k-1 and 0 beyond.
Rational mhat(const Partition& lambda, int k);

// Finite rational linear combination of monomial symmetric functions.
class SymmetricFn {
public:
    using TermMap = std::map<Partition, Rational, MonomialOrder>;

    SymmetricFn() = default;
    static SymmetricFn constant(const Rational& c);

    void set_term(const Partition& nu, const Rational& coeff);  // drops zeros
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max |nu| over stored terms; -1 for the zero function

    Rational evaluate(const Partition& mu) const;
    Rational evaluate(const std::vector<int>& x) const;

    bool operator==(const SymmetricFn& other) const { return terms_ == other.terms_; }

private:
    TermMap terms_;
};

}  // namespace kerov
