#include "kerov/rational.hpp"

#include "kerov/errors.hpp"

namespace kerov {

Rational rat(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseFailure("not a rational: '" + s + "'");
    }
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt factorial(int n) {
    if (n < 0) throw PreconditionViolated("factorial of negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational pow_rational(const Rational& base, int exponent) {
    if (exponent < 0) throw PreconditionViolated("negative exponent");
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt pow_int(long base, int exponent) {
    if (exponent < 0) throw PreconditionViolated("negative exponent");
    BigInt b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

}  // namespace kerov
