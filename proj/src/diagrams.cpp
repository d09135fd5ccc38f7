#include "kerov/diagrams.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kerov/cumulants.hpp"
#include "kerov/errors.hpp"

namespace kerov {

YoungDiagram YoungDiagram::parse(const std::string& text) {
    std::vector<int> rows;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            rows.push_back(v);
        } catch (const std::exception&) {
            throw ParseFailure("bad row length '" + tok + "'");
        }
    }
    if (rows.empty()) throw ParseFailure("empty diagram description");
    try {
        return YoungDiagram(Partition(std::move(rows)));
    } catch (const InvalidPartition& e) {
        throw ParseFailure(e.what());
    }
}

YoungDiagram dilate(const YoungDiagram& lambda, int s) {
    if (s < 1) throw PreconditionViolated("dilation factor must be >= 1");
    std::vector<int> rows;
    rows.reserve(lambda.rows.parts().size() * static_cast<std::size_t>(s));
    for (int r : lambda.rows.parts())
        for (int copy = 0; copy < s; ++copy) rows.push_back(r * s);
    return YoungDiagram(Partition(std::move(rows)));
}

InterlacingCoords interlacing(const YoungDiagram& lambda) {
    const auto& r = lambda.rows.parts();
    const int rows = static_cast<int>(r.size());
    InterlacingCoords out;
    for (int i = 0; i <= rows; ++i) {
        bool addable = (i == rows) || (i == 0) || (r[static_cast<std::size_t>(i - 1)] > r[static_cast<std::size_t>(i)]);
        if (addable) out.minima.push_back((i < rows ? r[static_cast<std::size_t>(i)] : 0) - i);
    }
    for (int i = 0; i < rows; ++i) {
        bool removable = (i == rows - 1) || (r[static_cast<std::size_t>(i)] > r[static_cast<std::size_t>(i + 1)]);
        if (removable) out.maxima.push_back(r[static_cast<std::size_t>(i)] - 1 - i);
    }
    std::reverse(out.minima.begin(), out.minima.end());
    std::reverse(out.maxima.begin(), out.maxima.end());
    return out;
}

namespace {

// Murnaghan-Nakayama over beta-sets: removing a border strip of size r is
// moving one beta value down by r; the sign counts the values jumped over.
struct CharacterCalculator {
    std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;

    BigInt chi(const std::vector<int>& shape, const std::vector<int>& rho) {
        if (shape.empty()) return 1;
        auto key = std::make_pair(shape, rho);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        const int r = rho[0];
        const std::vector<int> rest(rho.begin() + 1, rho.end());
        const int len = static_cast<int>(shape.size());
        std::vector<int> beta(shape.size());
        for (int i = 0; i < len; ++i)
            beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

        BigInt total = 0;
        for (int i = 0; i < len; ++i) {
            int from = beta[static_cast<std::size_t>(i)];
            int to = from - r;
            if (to < 0) continue;
            bool occupied = false;
            int crossed = 0;
            for (int j = 0; j < len; ++j) {
                if (j == i) continue;
                int b = beta[static_cast<std::size_t>(j)];
                if (b == to) occupied = true;
                if (b > to && b < from) ++crossed;
            }
            if (occupied) continue;
            std::vector<int> nb = beta;
            nb[static_cast<std::size_t>(i)] = to;
            std::sort(nb.begin(), nb.end(), std::greater<int>());
            std::vector<int> next_shape;
            for (int j = 0; j < len; ++j) {
                int part = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
                if (part > 0) next_shape.push_back(part);
            }
            BigInt sub = chi(next_shape, rest);
            if (crossed % 2 == 1)
                total -= sub;
            else
                total += sub;
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

std::vector<Rational> mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                int order) {
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            out[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return out;
}

std::vector<Rational> reciprocal_series(const std::vector<Rational>& a, int order) {
    if (a.empty() || a[0] != 1) throw NonUnitConstantTerm("series reciprocal needs constant 1");
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    out[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (int j = 1; j <= n && j < static_cast<int>(a.size()); ++j)
            acc += a[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(n - j)];
        out[static_cast<std::size_t>(n)] = -acc;
    }
    return out;
}

// prod (1 - root u) as an exact polynomial, truncated at the given order.
std::vector<Rational> linear_product(const std::vector<int>& roots, int order) {
    std::vector<Rational> out{Rational(1)};
    for (int root : roots) {
        std::vector<Rational> next(std::min(out.size() + 1, static_cast<std::size_t>(order) + 1),
                                   Rational(0));
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < next.size()) next[i] += out[i];
            if (i + 1 < next.size()) next[i + 1] -= Rational(root) * out[i];
        }
        out = std::move(next);
    }
    out.resize(static_cast<std::size_t>(order) + 1, Rational(0));
    return out;
}

}  // namespace

BigInt character_value(const YoungDiagram& lambda, const Partition& rho) {
    if (rho.weight() != lambda.boxes())
        throw PreconditionViolated("cycle type must have the same size as the diagram");
    CharacterCalculator calc;
    return calc.chi(lambda.rows.parts(), rho.parts());
}

Rational normalized_character(const YoungDiagram& lambda, int k) {
    if (k < 1) throw PreconditionViolated("normalized_character: k >= 1");
    const int n = lambda.boxes();
    if (k > n) return 0;

    std::vector<int> rho_parts{k};
    for (int i = 0; i < n - k; ++i) rho_parts.push_back(1);
    Partition rho(std::move(rho_parts));

    CharacterCalculator calc;
    BigInt chi_val = calc.chi(lambda.rows.parts(), rho.parts());
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    BigInt dim = calc.chi(lambda.rows.parts(), ones);

    BigInt falling = 1;
    for (int i = 0; i < k; ++i) falling *= BigInt(n - i);
    Rational out(falling * chi_val, dim);
    out.canonicalize();
    return out;
}

std::vector<Rational> free_cumulants_of(const YoungDiagram& lambda, int max_index) {
    if (max_index < 2) throw PreconditionViolated("max_index >= 2");
    InterlacingCoords coords = interlacing(lambda);

    // Ghat(u) = prod_j (1 - y_j u) / prod_i (1 - x_i u) is the moment series
    // of the transition measure; B_j = -[u^j] (1/Ghat).
    auto numerator = linear_product(coords.maxima, max_index);
    auto denominator = linear_product(coords.minima, max_index);
    auto ghat = mul_trunc(numerator, reciprocal_series(denominator, max_index), max_index);
    auto inv = reciprocal_series(ghat, max_index);

    std::vector<Rational> boolean(static_cast<std::size_t>(max_index) + 1, Rational(0));
    for (int j = 2; j <= max_index; ++j)
        boolean[static_cast<std::size_t>(j)] = -inv[static_cast<std::size_t>(j)];

    auto table = boolean_to_free(max_index);
    std::vector<Rational> out(static_cast<std::size_t>(max_index) + 1, Rational(0));
    for (int j = 2; j <= max_index; ++j)
        out[static_cast<std::size_t>(j)] = table.at(j).evaluate(boolean);
    return out;
}

}  // namespace kerov
