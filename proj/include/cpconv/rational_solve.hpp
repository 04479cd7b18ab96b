#pragma once

#include <cstddef>
#include <vector>

#include "cpconv/arith.hpp"

namespace cpconv {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Ratio& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Ratio& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t k);

private:
    std::size_t rows_, cols_;
    std::vector<Ratio> data_;
};

enum class SolveStatus { unique, inconsistent, rank_deficient };

struct LinearSolution {
    SolveStatus status = SolveStatus::rank_deficient;
    std::size_t rank = 0;
    /// Filled only when status == unique.
    std::vector<Ratio> x;
};

/// Exact Gauss-Jordan elimination of a (possibly overdetermined) system
/// A x = b with largest-magnitude pivoting. Rank deficiency is reported
/// before inconsistency.
LinearSolution solve_exact(RationalMatrix a, std::vector<Ratio> b);

} // namespace cpconv
