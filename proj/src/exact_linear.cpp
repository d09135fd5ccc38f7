#include "kerov/exact_linear.hpp"

#include "kerov/errors.hpp"

namespace kerov {

ExactSolveOutcome solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw PreconditionViolated("rhs length mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw PreconditionViolated("ragged matrix");

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        Rational inv = Rational(1) / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[row][j];
            b[r] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }

    ExactSolveOutcome out;
    out.rank = row;
    for (std::size_t r = row; r < rows; ++r) {
        if (b[r] != 0) {
            out.status = ExactSolveOutcome::Status::Inconsistent;
            out.bad_row = r;
            return out;
        }
    }
    if (out.rank < cols) {
        out.status = ExactSolveOutcome::Status::Underdetermined;
        std::size_t next = 0;
        for (std::size_t col = 0; col < cols; ++col) {
            if (next < pivot_col.size() && pivot_col[next] == col)
                ++next;
            else
                out.free_columns.push_back(col);
        }
        return out;
    }
    out.solution.assign(cols, Rational(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) out.solution[pivot_col[r]] = b[r];
    return out;
}

}  // namespace kerov
