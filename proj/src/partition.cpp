#include "kerov/partition.hpp"

#include <algorithm>
#include <numeric>

#include "kerov/errors.hpp"

namespace kerov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        int p = parts_[i];
        if (p < 1) throw InvalidPartition("partition parts must be positive");
        if (i > 0 && p > prev) throw InvalidPartition("partition parts must be weakly decreasing");
        prev = p;
        weight_ += p;
    }
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> out;
    out.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out), std::greater<int>());
    return Partition(std::move(out));
}

namespace {

void emit_partitions(int remaining, int max_part, int min_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= min_part; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, min_part, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int min_part) {
    if (n < 0 || min_part < 1) throw PreconditionViolated("partitions_of: n >= 0, min_part >= 1");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(n, n, min_part, stack, out);
    return out;
}

}  // namespace kerov
