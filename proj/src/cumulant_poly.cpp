#include "kerov/cumulant_poly.hpp"

#include <functional>
#include <sstream>

#include "kerov/errors.hpp"

namespace kerov {

char family_letter(Family f) { return f == Family::Free ? 'R' : 'B'; }

CumulantPoly CumulantPoly::constant(Family f, const Rational& c) {
    CumulantPoly p(f);
    p.add_term(Partition(), c);
    return p;
}

CumulantPoly CumulantPoly::monomial(Family f, const Partition& key, const Rational& coeff) {
    if (!key.empty() && key.parts().back() < 2)
        throw InvalidPartition("cumulant monomial keys need parts >= 2");
    CumulantPoly p(f);
    p.add_term(key, coeff);
    return p;
}

CumulantPoly CumulantPoly::indeterminate(Family f, int index, const Rational& coeff) {
    if (index < 2) throw InvalidPartition("cumulant indices start at 2");
    return monomial(f, Partition({index}), coeff);
}

bool CumulantPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

Rational CumulantPoly::coefficient(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

int CumulantPoly::degree() const {
    // Canonical order puts the heaviest key first.
    return terms_.empty() ? -1 : terms_.begin()->first.weight();
}

bool CumulantPoly::is_homogeneous(int d) const {
    for (const auto& [key, c] : terms_)
        if (key.weight() != d) return false;
    return true;
}

std::set<int> CumulantPoly::indices() const {
    std::set<int> out;
    for (const auto& [key, c] : terms_)
        for (int p : key.parts()) out.insert(p);
    return out;
}

void CumulantPoly::require_same_family(const CumulantPoly& other) const {
    if (family_ != other.family_)
        throw FamilyMismatch("mixing cumulant families in one expression");
}

void CumulantPoly::add_term(const Partition& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

CumulantPoly& CumulantPoly::operator+=(const CumulantPoly& other) {
    require_same_family(other);
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

CumulantPoly& CumulantPoly::operator-=(const CumulantPoly& other) {
    require_same_family(other);
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
}

CumulantPoly& CumulantPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

CumulantPoly operator+(CumulantPoly a, const CumulantPoly& b) {
    a += b;
    return a;
}

CumulantPoly operator-(CumulantPoly a, const CumulantPoly& b) {
    a -= b;
    return a;
}

CumulantPoly operator-(CumulantPoly a) {
    a *= Rational(-1);
    return a;
}

CumulantPoly operator*(const CumulantPoly& a, const CumulantPoly& b) {
    if (a.family() != b.family())
        throw FamilyMismatch("mixing cumulant families in one expression");
    CumulantPoly out(a.family());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term(ka.merged(kb), ca * cb);
    return out;
}

CumulantPoly operator*(CumulantPoly a, const Rational& c) {
    a *= c;
    return a;
}

CumulantPoly operator*(const Rational& c, CumulantPoly a) {
    a *= c;
    return a;
}

CumulantPoly CumulantPoly::homogeneous_part(int d) const {
    CumulantPoly out(family_);
    for (const auto& [key, c] : terms_)
        if (key.weight() == d) out.add_term(key, c);
    return out;
}

CumulantPoly CumulantPoly::substitute(const std::map<int, CumulantPoly>& images,
                                      std::optional<Family> fallback) const {
    Family target = family_;
    if (!images.empty()) {
        target = images.begin()->second.family();
        for (const auto& [i, img] : images)
            if (img.family() != target)
                throw FamilyMismatch("substitution images must share one family");
    } else if (fallback) {
        target = *fallback;
    }
    if (fallback && !images.empty() && target != *fallback)
        throw FamilyMismatch("substitution images disagree with requested family");

    // Monomial images share suffixes (key minus its largest part), so cache
    // products keyed by the remaining partition.
    std::map<Partition, CumulantPoly, MonomialOrder> memo;
    memo.emplace(Partition(), CumulantPoly::one(target));

    auto image_of = [&](int index) -> const CumulantPoly& {
        auto it = images.find(index);
        if (it == images.end())
            throw MissingImage("no substitution image for index " + std::to_string(index));
        return it->second;
    };

    // Iterative resolution: compute the product for `key` from its tail.
    std::function<const CumulantPoly&(const Partition&)> product_for =
        [&](const Partition& key) -> const CumulantPoly& {
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<int> tail(key.parts().begin() + 1, key.parts().end());
        const CumulantPoly& rest = product_for(Partition(std::move(tail)));
        CumulantPoly prod = image_of(key.parts().front()) * rest;
        return memo.emplace(key, std::move(prod)).first->second;
    };

    CumulantPoly out(target);
    for (const auto& [key, c] : terms_) out += product_for(key) * c;
    return out;
}

CumulantPoly CumulantPoly::div_exact_integer(const BigInt& n) const {
    if (n == 0) throw PreconditionViolated("division by zero");
    CumulantPoly out(family_);
    for (const auto& [key, c] : terms_) {
        if (!is_integer(c))
            throw NotDivisible("coefficient " + kerov::to_string(c) + " is not an integer");
        if (!mpz_divisible_p(c.get_num().get_mpz_t(), n.get_mpz_t()))
            throw NotDivisible("coefficient " + kerov::to_string(c) + " not divisible by " +
                               n.get_str());
        BigInt q = c.get_num() / n;
        out.add_term(key, Rational(q));
    }
    return out;
}

bool CumulantPoly::all_coefficients_integer() const {
    for (const auto& [key, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

bool CumulantPoly::has_negative_coefficient() const {
    for (const auto& [key, c] : terms_)
        if (c < 0) return true;
    return false;
}

Rational CumulantPoly::evaluate(const std::vector<Rational>& values) const {
    Rational total = 0;
    for (const auto& [key, c] : terms_) {
        Rational term = c;
        for (int p : key.parts()) {
            if (static_cast<std::size_t>(p) >= values.size())
                throw MissingImage("no value supplied for index " + std::to_string(p));
            term *= values[static_cast<std::size_t>(p)];
        }
        total += term;
    }
    return total;
}

void CumulantPoly::keep_terms_with_weight_at_most(int max_weight) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.weight() > max_weight)
            it = terms_.erase(it);
        else
            ++it;
    }
}

namespace {

std::string monomial_text(char letter, const Partition& key) {
    std::ostringstream os;
    const auto& parts = key.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i > 0) os << '*';
        os << letter << parts[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

std::string monomial_latex(char letter, const Partition& key) {
    std::ostringstream os;
    const auto& parts = key.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i > 0) os << ' ';
        os << letter << '_';
        if (parts[i] >= 10)
            os << '{' << parts[i] << '}';
        else
            os << parts[i];
        std::size_t m = j - i;
        if (m > 1) {
            os << '^';
            if (m >= 10)
                os << '{' << m << '}';
            else
                os << m;
        }
        i = j;
    }
    return os.str();
}

std::string latex_number(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

}  // namespace

std::string CumulantPoly::render_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (key.empty()) {
            os << kerov::to_string(a);
        } else if (a == 1) {
            os << monomial_text(family_letter(family_), key);
        } else {
            os << kerov::to_string(a) << '*' << monomial_text(family_letter(family_), key);
        }
    }
    return os.str();
}

std::string CumulantPoly::render_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (key.empty()) {
            os << latex_number(a);
        } else if (a == 1) {
            os << monomial_latex(family_letter(family_), key);
        } else {
            os << latex_number(a) << monomial_latex(family_letter(family_), key);
        }
    }
    return os.str();
}

}  // namespace kerov
