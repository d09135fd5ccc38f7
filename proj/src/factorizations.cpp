#include "kerov/factorizations.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

#include "kerov/errors.hpp"

namespace kerov {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
            throw PreconditionViolated("not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::long_cycle(int k) {
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % k;
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        img[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(img));
}

int Permutation::cycle_count() const {
    std::vector<char> seen(images_.size(), 0);
    int count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = 1;
    }
    return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = 1;
            cyc.push_back(static_cast<int>(j));
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) throw PreconditionViolated("size mismatch");
    std::vector<int> img(static_cast<std::size_t>(outer.size()));
    for (int x = 0; x < outer.size(); ++x) img[static_cast<std::size_t>(x)] = outer(inner(x));
    return Permutation(std::move(img));
}

namespace {

// Subset machinery over the cycles of sigma2. For each cycle, which cycles
// of sigma1 it meets, as a bitmask; or_mask/popcount are then built over
// all subsets by peeling the lowest bit.
struct MarriageScanner {
    int m = 0;
    std::vector<std::uint32_t> cycle_mask;  // per sigma2-cycle
    std::vector<int> meets;                 // popcount of OR over subset

    MarriageScanner(const std::vector<std::vector<int>>& cycles2,
                    const std::vector<int>& elem_to_c1) {
        m = static_cast<int>(cycles2.size());
        cycle_mask.resize(cycles2.size());
        for (std::size_t j = 0; j < cycles2.size(); ++j) {
            std::uint32_t mask = 0;
            for (int e : cycles2[j]) mask |= (1u << elem_to_c1[static_cast<std::size_t>(e)]);
            cycle_mask[j] = mask;
        }
        std::size_t total = static_cast<std::size_t>(1) << m;
        std::vector<std::uint32_t> or_mask(total, 0);
        meets.assign(total, 0);
        for (std::size_t s = 1; s < total; ++s) {
            std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
            or_mask[s] = or_mask[s & (s - 1)] | cycle_mask[low];
            meets[s] = std::popcount(or_mask[s]);
        }
    }

    bool passes(const std::vector<int>& colors) const {
        std::size_t total = static_cast<std::size_t>(1) << m;
        std::vector<int> excess(total, 0);  // sum over subset of (q-1)
        for (std::size_t s = 1; s + 1 < total; ++s) {
            std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
            excess[s] = excess[s & (s - 1)] + colors[low] - 1;
            if (meets[s] <= excess[s]) return false;
        }
        return true;
    }
};

std::vector<int> element_to_cycle_index(const std::vector<std::vector<int>>& cycles, int k) {
    std::vector<int> out(static_cast<std::size_t>(k), -1);
    for (std::size_t j = 0; j < cycles.size(); ++j)
        for (int e : cycles[j]) out[static_cast<std::size_t>(e)] = static_cast<int>(j);
    return out;
}

using CountMap = std::map<Partition, unsigned long long, MonomialOrder>;

// Enumerate colorings (colors >= 2 summing to c1 + m) and count the ones
// passing the marriage condition.
void count_colorings(const MarriageScanner& scanner, int extra, std::vector<int>& colors,
                     std::size_t pos, CountMap& counts) {
    if (pos + 1 == colors.size()) {
        colors[pos] = 2 + extra;
        if (scanner.passes(colors)) {
            std::vector<int> key = colors;
            std::sort(key.begin(), key.end(), std::greater<int>());
            ++counts[Partition(std::move(key))];
        }
        return;
    }
    for (int e = 0; e <= extra; ++e) {
        colors[pos] = 2 + e;
        count_colorings(scanner, extra - e, colors, pos + 1, counts);
    }
}

void process_sigma2(const Permutation& sigma2, const Permutation& cycle, CountMap& counts) {
    Permutation sigma1 = compose(cycle, sigma2.inverse());
    auto cycles2 = sigma2.cycles();
    int m = static_cast<int>(cycles2.size());
    int c1 = sigma1.cycle_count();
    if (c1 < m) return;  // colors >= 2 cannot sum to c1 + m
    auto elem_to_c1 = element_to_cycle_index(sigma1.cycles(), sigma1.size());
    MarriageScanner scanner(cycles2, elem_to_c1);
    std::vector<int> colors(static_cast<std::size_t>(m));
    count_colorings(scanner, c1 - m, colors, 0, counts);
}

std::vector<int> unrank_permutation(int k, unsigned long long rank) {
    std::vector<unsigned long long> fact(static_cast<std::size_t>(k) + 1, 1);
    for (int i = 1; i <= k; ++i)
        fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<unsigned long long>(i);
    std::vector<int> avail(static_cast<std::size_t>(k));
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        unsigned long long f = fact[static_cast<std::size_t>(i)];
        std::size_t d = static_cast<std::size_t>(rank / f);
        rank %= f;
        img.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return img;
}

CountMap count_range(int k, unsigned long long lo, unsigned long long hi) {
    CountMap counts;
    Permutation cycle = Permutation::long_cycle(k);
    std::vector<int> img = unrank_permutation(k, lo);
    for (unsigned long long r = lo; r < hi; ++r) {
        process_sigma2(Permutation(img), cycle, counts);
        std::next_permutation(img.begin(), img.end());
    }
    return counts;
}

}  // namespace

bool marriage_check(const Permutation& sigma1, const Permutation& sigma2,
                    const std::vector<int>& colors) {
    if (sigma1.size() != sigma2.size()) throw PreconditionViolated("size mismatch");
    auto cycles2 = sigma2.cycles();
    if (colors.size() != cycles2.size())
        throw PreconditionViolated("one color per cycle of sigma2");
    for (int c : colors)
        if (c < 2) throw PreconditionViolated("colors start at 2");
    auto elem_to_c1 = element_to_cycle_index(sigma1.cycles(), sigma1.size());
    return MarriageScanner(cycles2, elem_to_c1).passes(colors);
}

CumulantPoly brute_kerov(int k, const BruteOptions& options) {
    if (k < 1) throw PreconditionViolated("brute_kerov: k >= 1");
    if (k > options.bound)
        throw BoundExceeded("k = " + std::to_string(k) + " exceeds the enumeration bound " +
                            std::to_string(options.bound));
    unsigned long long total = 1;
    for (int i = 2; i <= k; ++i) total *= static_cast<unsigned long long>(i);

    int threads = std::max(1, options.threads);
    CountMap counts;
    if (threads == 1 || total < 1024) {
        counts = count_range(k, 0, total);
    } else {
        std::vector<CountMap> partial(static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        unsigned long long chunk = (total + static_cast<unsigned long long>(threads) - 1) /
                                   static_cast<unsigned long long>(threads);
        for (int t = 0; t < threads; ++t) {
            unsigned long long lo = chunk * static_cast<unsigned long long>(t);
            unsigned long long hi = std::min(total, lo + chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&partial, t, k, lo, hi] {
                partial[static_cast<std::size_t>(t)] = count_range(k, lo, hi);
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial)
            for (const auto& [key, n] : p) counts[key] += n;
    }

    CumulantPoly out(Family::Free);
    for (const auto& [key, n] : counts)
        out.add_term(key, Rational(BigInt(static_cast<unsigned long>(n))));
    return out;
}

}  // namespace kerov
