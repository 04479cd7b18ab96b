#include "cpconv/rational_solve.hpp"

#include <utility>

#include "cpconv/errors.hpp"

namespace cpconv {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Ratio(0)) {}

void RationalMatrix::swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

LinearSolution solve_exact(RationalMatrix a, std::vector<Ratio> b) {
    if (b.size() != a.rows()) throw UsageError("solve_exact: rhs length does not match rows");
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    LinearSolution out;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t best = rows;
        Ratio best_mag = 0;
        for (std::size_t i = row; i < rows; ++i) {
            const Ratio mag = abs(a(i, col));
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        if (best == rows) continue;
        a.swap_rows(row, best);
        std::swap(b[row], b[best]);

        const Ratio pivot = a(row, col);
        for (std::size_t j = col; j < cols; ++j) a(row, j) /= pivot;
        b[row] /= pivot;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a(i, col) == 0) continue;
            const Ratio factor = a(i, col);
            for (std::size_t j = col; j < cols; ++j) a(i, j) -= factor * a(row, j);
            b[i] -= factor * b[row];
        }
        pivot_cols.push_back(col);
        ++row;
    }

    out.rank = pivot_cols.size();
    if (out.rank < cols) {
        out.status = SolveStatus::rank_deficient;
        return out;
    }
    for (std::size_t i = out.rank; i < rows; ++i) {
        if (b[i] != 0) {
            out.status = SolveStatus::inconsistent;
            return out;
        }
    }
    out.status = SolveStatus::unique;
    out.x.assign(cols, Ratio(0));
    for (std::size_t i = 0; i < out.rank; ++i) {
        out.x[pivot_cols[i]] = b[i];
        out.x[pivot_cols[i]].canonicalize();
    }
    return out;
}

} // namespace cpconv
