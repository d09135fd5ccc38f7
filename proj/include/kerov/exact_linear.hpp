#pragma once

#include <cstddef>
#include <vector>

#include "kerov/rational.hpp"

namespace kerov {

struct ExactSolveOutcome {
    enum class Status { Unique, Inconsistent, Underdetermined };
    Status status = Status::Unique;
    std::vector<Rational> solution;        // valid when Unique
    std::vector<std::size_t> free_columns; // valid when Underdetermined
    std::size_t rank = 0;
    std::size_t bad_row = 0;               // first contradictory row when Inconsistent
};

// Gauss-Jordan over the rationals. a is row-major with rows of equal length.
ExactSolveOutcome solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace kerov
