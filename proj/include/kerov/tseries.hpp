#pragma once

#include <vector>

#include "kerov/cumulant_poly.hpp"

namespace kerov {

// Power series in t truncated at a fixed order, with cumulant-polynomial
// coefficients. Binary operations truncate to the smaller order.
class TSeries {
public:
    TSeries(Family f, int order);
    TSeries(Family f, std::vector<CumulantPoly> coeffs);

    static TSeries constant_one(Family f, int order);

    Family family() const { return family_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const CumulantPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    CumulantPoly& at(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    TSeries scaled(const Rational& c) const;

    // Series b with (*this) * b = 1 up to the truncation order. The constant
    // coefficient must be the constant polynomial 1.
    TSeries reciprocal() const;

    // D = t d/dt: multiplies the coefficient of t^n by n.
    TSeries euler_d() const;

    bool operator==(const TSeries& other) const {
        return family_ == other.family_ && coeffs_ == other.coeffs_;
    }

private:
    Family family_;
    std::vector<CumulantPoly> coeffs_;
};

TSeries operator+(const TSeries& a, const TSeries& b);
TSeries operator-(const TSeries& a, const TSeries& b);
TSeries operator*(const TSeries& a, const TSeries& b);  // Cauchy product

}  // namespace kerov
