#include "kerov/lassalle.hpp"

#include <algorithm>
#include <sstream>

#include "kerov/exact_linear.hpp"

namespace kerov {

namespace {

void require_parts_at_least_two(const Partition& mu) {
    if (!mu.empty() && mu.parts().back() < 2)
        throw PartTooSmall("parts of mu must be >= 2");
}

// script-R_mu is diag(mu) times the R-monomial keyed by mu.
Rational diagonal_factor(const Partition& mu) {
    Rational d = 1;
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int mult = static_cast<int>(j - i);
        d *= pow_rational(Rational(parts[i] - 1), mult);
        d /= Rational(factorial(mult));
        i = j;
    }
    return d;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string partition_text(const Partition& mu) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < mu.parts().size(); ++i) {
        if (i) os << ',';
        os << mu.parts()[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

CumulantPoly script_r_mu(const Partition& mu) {
    require_parts_at_least_two(mu);
    return CumulantPoly::monomial(Family::Free, mu, diagonal_factor(mu));
}

CumulantPoly q_poly(int i) {
    if (i < 2) throw PreconditionViolated("q_poly indices start at 2");
    CumulantPoly out(Family::Free);
    for (const Partition& mu : partitions_of(i, 2))
        out += script_r_mu(mu) * Rational(factorial(mu.length() - 1));
    return out;
}

CumulantPoly script_q_mu(const Partition& mu) {
    require_parts_at_least_two(mu);
    CumulantPoly out = CumulantPoly::one(Family::Free);
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int mult = static_cast<int>(j - i);
        CumulantPoly q = q_poly(parts[i]);
        for (int e = 0; e < mult; ++e) out = out * q;
        out *= Rational(1) / Rational(factorial(mult));
        i = j;
    }
    return out;
}

std::map<Partition, Rational, MonomialOrder> expand_in_q_basis(const CumulantPoly& p, int weight) {
    if (p.family() != Family::Free) throw FamilyMismatch("Q-basis expansion is for free cumulants");
    if (!p.is_homogeneous(weight))
        throw NotHomogeneous("polynomial is not homogeneous of weight " + std::to_string(weight));

    std::vector<Partition> mus = partitions_of(weight, 2);
    std::stable_sort(mus.begin(), mus.end(),
                     [](const Partition& a, const Partition& b) { return a.length() < b.length(); });

    // Q_i = (i-1) R_i + longer products, so eliminating by increasing length
    // reads each coordinate off the R-monomial with the same key.
    std::map<Partition, Rational, MonomialOrder> out;
    CumulantPoly residual = p;
    for (const Partition& mu : mus) {
        Rational c = residual.coefficient(mu) / diagonal_factor(mu);
        out[mu] = c;
        if (c != 0) residual -= script_q_mu(mu) * c;
    }
    if (!residual.is_zero())
        throw SingularBasis("Q-basis elimination left a nonzero residual");
    return out;
}

std::map<Partition, Rational, MonomialOrder> extract_f_values(int k, int g,
                                                              const CumulantPoly& genus_part) {
    BigInt bin = binomial(k + 1, 3);
    if (bin == 0) throw DegenerateK("binom(k+1,3) vanishes for k = " + std::to_string(k));
    const int w = k + 1 - 2 * g;
    if (!genus_part.is_homogeneous(w))
        throw NotHomogeneous("genus part is not homogeneous of weight " + std::to_string(w));
    std::map<Partition, Rational, MonomialOrder> out;
    for (const Partition& mu : partitions_of(w, 2)) {
        Rational coordinate = genus_part.coefficient(mu) / diagonal_factor(mu);
        out[mu] = coordinate / (Rational(bin) * Rational(factorial(mu.length() + 2 * g - 2)));
    }
    return out;
}

std::map<Partition, Rational, MonomialOrder> extract_h_values(int k, int g,
                                                              const CumulantPoly& genus_part) {
    BigInt bin = binomial(k + 1, 3);
    if (bin == 0) throw DegenerateK("binom(k+1,3) vanishes for k = " + std::to_string(k));
    const int w = k + 1 - 2 * g;
    auto coords = expand_in_q_basis(genus_part, w);
    std::map<Partition, Rational, MonomialOrder> out;
    for (const auto& [mu, c] : coords)
        out[mu] = c / (Rational(bin) * pow_rational(Rational(2 * g - 1), mu.length()));
    return out;
}

namespace {

std::vector<Partition> monomial_basis_up_to(int degree_bound) {
    std::vector<Partition> basis;
    for (int d = 0; d <= degree_bound; ++d)
        for (const Partition& nu : partitions_of(d, 1)) basis.push_back(nu);
    return basis;
}

SymmetricFn fit_symmetric_impl(const std::vector<std::pair<Partition, Rational>>& values,
                               int degree_bound, std::size_t* rank_out) {
    if (values.empty()) throw PreconditionViolated("no values to fit");
    if (degree_bound < 0) throw PreconditionViolated("degree bound must be >= 0");
    std::vector<Partition> basis = monomial_basis_up_to(degree_bound);

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    a.reserve(values.size());
    for (const auto& [mu, v] : values) {
        std::vector<Rational> row;
        row.reserve(basis.size());
        for (const Partition& nu : basis) row.push_back(eval_monomial(nu, mu.parts()));
        a.push_back(std::move(row));
        b.push_back(v);
    }

    auto outcome = solve_exact(a, b);
    if (rank_out) *rank_out = outcome.rank;
    if (outcome.status == ExactSolveOutcome::Status::Inconsistent) {
        // Walk forward to name a witness equation.
        for (std::size_t n = 1; n <= values.size(); ++n) {
            std::vector<std::vector<Rational>> ap(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
            std::vector<Rational> bp(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n));
            if (solve_exact(ap, bp).status == ExactSolveOutcome::Status::Inconsistent) {
                throw Inconsistent("value at mu = " + partition_text(values[n - 1].first) +
                                   " contradicts the earlier equations");
            }
        }
        throw Inconsistent("value system is inconsistent");
    }
    if (outcome.status == ExactSolveOutcome::Status::Underdetermined) {
        std::vector<Partition> dirs;
        std::ostringstream os;
        os << "unconstrained basis directions:";
        for (std::size_t col : outcome.free_columns) {
            dirs.push_back(basis[col]);
            os << ' ' << 'm' << partition_text(basis[col]);
        }
        throw Underdetermined(os.str(), std::move(dirs));
    }

    SymmetricFn fn;
    for (std::size_t j = 0; j < basis.size(); ++j) fn.set_term(basis[j], outcome.solution[j]);
    return fn;
}

}  // namespace

SymmetricFn fit_symmetric(const std::vector<std::pair<Partition, Rational>>& values,
                          int degree_bound) {
    return fit_symmetric_impl(values, degree_bound, nullptr);
}

FitReport lassalle_report(int g, const std::vector<int>& k_range, FitBasis basis,
                          const SigmaProvider& provider) {
    if (g < 1) throw PreconditionViolated("lassalle_report: g >= 1");
    SigmaProvider sig = provider ? provider : SigmaProvider([](int k) { return sigma(k); });

    std::vector<std::pair<Partition, Rational>> values;
    for (int k : k_range) {
        if (k < 2 * g + 1)
            throw PreconditionViolated("lassalle_report needs k >= 2g+1, got k = " +
                                       std::to_string(k));
        KerovPolynomial kp = sig(k);
        CumulantPoly part = genus_part(kp, g);
        auto vals = basis == FitBasis::R ? extract_f_values(k, g, part)
                                         : extract_h_values(k, g, part);
        for (const auto& [mu, v] : vals) values.emplace_back(mu, v);
    }

    FitReport report;
    report.g = g;
    report.basis = basis;
    report.degree_bound = 4 * (g - 1);
    std::size_t rank = 0;
    report.fitted = fit_symmetric_impl(values, report.degree_bound, &rank);
    report.equations_used = static_cast<int>(rank);
    report.residual_equations_checked = static_cast<int>(values.size() - rank);
    report.consistent = true;
    for (const auto& [mu, v] : values) {
        if (report.fitted.evaluate(mu) != v) {
            report.consistent = false;
            break;
        }
    }
    report.tilde_note = "tilde functions: multiply by k*binom(k+1,3) at k = |mu|+2g-1";
    return report;
}

CumulantPoly reassemble_genus_part(int k, int g, const SymmetricFn& fn, FitBasis basis) {
    const int w = k + 1 - 2 * g;
    if (w < 0) throw PreconditionViolated("k+1-2g must be >= 0");
    Rational bin(binomial(k + 1, 3));
    CumulantPoly out(Family::Free);
    for (const Partition& mu : partitions_of(w, 2)) {
        Rational value = fn.evaluate(mu);
        if (basis == FitBasis::R) {
            out += script_r_mu(mu) * (bin * Rational(factorial(mu.length() + 2 * g - 2)) * value);
        } else {
            out += script_q_mu(mu) * (bin * pow_rational(Rational(2 * g - 1), mu.length()) * value);
        }
    }
    return out;
}

DivisibilityResult divisibility_check(int p, const SigmaProvider& provider) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw PreconditionViolated("divisibility_check needs an odd prime");
    SigmaProvider sig = provider ? provider : SigmaProvider([](int k) { return sigma(k); });

    auto r = [](int i) { return CumulantPoly::indeterminate(Family::Free, i); };
    CumulantPoly e1 = sig(p).poly - r(p + 1) + r(2) * Rational(2);
    CumulantPoly e2 = sig(p - 1).poly - r(p);
    CumulantPoly e3 = sig(p + 1).poly - r(p + 2) + r(3);

    DivisibilityResult out;
    out.p = p;
    out.q1 = e1.div_exact_integer(p);
    out.q2 = e2.div_exact_integer(p);
    out.q3 = e3.div_exact_integer(p);
    for (const CumulantPoly* q : {&out.q1, &out.q2, &out.q3}) {
        if (q->has_negative_coefficient())
            throw NegativeCoefficient("divisibility quotient has a negative coefficient");
    }
    return out;
}

}  // namespace kerov
