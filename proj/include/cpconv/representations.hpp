#pragma once

// Counters of representations (u, v, x, y) in B(n) or B'(n) where u^r and v^s
// are split as a + c and b + d, optionally through coprime splits of divisors.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cpconv/arith.hpp"

namespace cpconv {

enum class Counter { L, M, Lprime, Mprime };

std::string_view to_string(Counter c);
/// Accepts L, M, Lp/Lprime, Mp/Mprime.
Counter parse_counter(std::string_view text);

/// Validated (counter, r, s, n) with r, s >= 1 and n >= 2.
class CountSpec {
public:
    CountSpec(Counter which, unsigned r, unsigned s, Natural n);

    Counter which() const noexcept { return which_; }
    unsigned r() const noexcept { return r_; }
    unsigned s() const noexcept { return s_; }
    Natural n() const noexcept { return n_; }

private:
    Counter which_;
    unsigned r_, s_;
    Natural n_;
};

inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

/// sum of u^r v^s over B(n) for L and M, over B'(n) for L' and M'.
Integer count_fast(const CountSpec& spec);

/// Enumerates the split tuples directly. Throws ResourceError when the number
/// of candidate tuples exceeds `budget`.
Integer count_raw(const CountSpec& spec, std::uint64_t budget = kDefaultTupleBudget);

/// Pairs (a, c) with a >= 0, c >= 1, a + c = total. Counted one by one.
Integer count_splits(const Integer& total);
/// As count_splits with gcd(a, c) = 1, taking gcd(0, c) = c.
Integer count_coprime_splits(const Integer& total);

struct LmRow {
    Natural n = 0;
    /// Indexed by Counter.
    std::array<Integer, 4> fast;
    std::array<std::optional<Integer>, 4> raw;
    Integer sigma_convolution;
    Integer sigma_prime_convolution;
    bool pass = false;
    bool raw_skipped = false;
};

struct LmReport {
    unsigned r = 0, s = 0;
    std::vector<LmRow> rows;
    bool all_pass = true;
    std::size_t skipped = 0;
};

/// For every n: raw = fast for all four counters, L = M = sum sigma_r sigma_s,
/// L' = M' = sum sigma'_{r,s}. Raw counts over budget are recorded as skipped.
LmReport verify_lm(unsigned r, unsigned s, Natural lo, Natural hi,
                   std::uint64_t budget = kDefaultTupleBudget, unsigned jobs = 1,
                   bool with_raw = true);

} // namespace cpconv
