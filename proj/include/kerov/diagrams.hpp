#pragma once

#include <string>
#include <vector>

#include "kerov/partition.hpp"
#include "kerov/rational.hpp"

namespace kerov {

struct YoungDiagram {
    Partition rows;

    YoungDiagram() = default;
    explicit YoungDiagram(Partition r) : rows(std::move(r)) {}

    int boxes() const { return rows.weight(); }

    // Comma-separated row lengths, e.g. "4,2,1".
    static YoungDiagram parse(const std::string& text);
};

// Contents of the outer corners (minima) and inner corners (maxima) of the
// diagram in Russian convention; content = column - row, zero-based.
// Strictly interlacing: x_0 < y_1 < x_1 < ... < x_m.
struct InterlacingCoords {
    std::vector<int> minima;  // m+1 values
    std::vector<int> maxima;  // m values
};

// Each box replaced by an s x s grid.
YoungDiagram dilate(const YoungDiagram& lambda, int s);

InterlacingCoords interlacing(const YoungDiagram& lambda);

// Sigma_k(lambda) = n(n-1)...(n-k+1) * chi(k-cycle)/dim, zero when k > n.
// Characters come from the Murnaghan-Nakayama recursion (memoized per call).
Rational normalized_character(const YoungDiagram& lambda, int k);

// Character of lambda on the conjugacy class of cycle type rho (|rho| = n).
BigInt character_value(const YoungDiagram& lambda, const Partition& rho);

// R_2 .. R_max of the diagram via its transition measure: H = 1/G expanded
// from the interlacing coordinates, Boolean cumulants read off, then mapped
// through the Boolean-to-free polynomials. values[j] = R_j.
std::vector<Rational> free_cumulants_of(const YoungDiagram& lambda, int max_index);

}  // namespace kerov
