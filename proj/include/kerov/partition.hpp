#pragma once

#include <vector>

namespace kerov {

// Weakly decreasing sequence of positive integers; the universal index type.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }                    // |mu|
    int length() const { return static_cast<int>(parts_.size()); }  // l(mu)
    int multiplicity(int i) const;                            // m_i(mu)
    bool empty() const { return parts_.empty(); }

    // Multiset union of parts.
    Partition merged(const Partition& other) const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    bool lex_greater(const Partition& other) const { return parts_ > other.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Canonical order for storage and display: heavier monomials first, ties
// broken lexicographically descending. The empty partition sorts last.
struct MonomialOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.weight() != b.weight()) return a.weight() > b.weight();
        return a.lex_greater(b);
    }
};

// All partitions of n with every part >= min_part, lexicographically
// decreasing. n = 0 yields the single empty partition.
std::vector<Partition> partitions_of(int n, int min_part = 1);

}  // namespace kerov
