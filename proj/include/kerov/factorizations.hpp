#pragma once

#include <vector>

#include "kerov/cumulant_poly.hpp"

namespace kerov {

// Bijection on {0..k-1}.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int k);
    static Permutation long_cycle(int k);  // 0 -> 1 -> ... -> k-1 -> 0

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    int cycle_count() const;
    // Cycles ordered by their smallest element.
    std::vector<std::vector<int>> cycles() const;

    bool operator==(const Permutation& other) const { return images_ == other.images_; }

private:
    std::vector<int> images_;
};

// outer(inner(x)): inner acts first.
Permutation compose(const Permutation& outer, const Permutation& inner);

// Condition on a colored factorization: every nontrivial subset A of the
// cycles of sigma2 must meet strictly more than sum_{i in A} (q(i)-1)
// cycles of sigma1. colors[i] is the color of the i-th cycle of sigma2 in
// canonical (smallest-element) order, each >= 2.
bool marriage_check(const Permutation& sigma1, const Permutation& sigma2,
                    const std::vector<int>& colors);

struct BruteOptions {
    int bound = 9;
    int threads = 1;
};

// Kerov polynomial by direct triple counting: enumerate sigma2 over S_k,
// set sigma1 = c o sigma2^{-1} for the long cycle c, color the cycles of
// sigma2 with colors >= 2 summing to |C(sigma1)| + |C(sigma2)|, and count
// the colorings passing the marriage condition into the monomial keyed by
// the color multiset.
CumulantPoly brute_kerov(int k, const BruteOptions& options = {});

}  // namespace kerov
