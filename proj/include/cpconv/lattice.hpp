#pragma once

// Solutions (a, b, x, y) of ax + by = n, optionally with gcd(a,b) = gcd(x,y) = 1.

#include <array>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <string_view>

#include "cpconv/arith.hpp"
#include "cpconv/errors.hpp"

namespace cpconv {

struct Quadruple {
    Natural a, b, x, y;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
    friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

/// B: all positive solutions. Bprime: additionally gcd(a,b) = gcd(x,y) = 1.
enum class SolutionSet { B, Bprime };

std::string_view to_string(SolutionSet set);
SolutionSet parse_solution_set(std::string_view text);

/// Visits every quadruple of the set once, ordered by a, then x, then b.
/// Returns the number visited.
template <std::invocable<const Quadruple&> Visitor>
std::uint64_t enumerate(Natural n, SolutionSet set, Visitor&& visit) {
    if (n < 2) throw DomainError("enumerate: n must be >= 2");
    std::uint64_t count = 0;
    for (Natural a = 1; a < n; ++a) {
        for (Natural x = 1; a * x < n; ++x) {
            const Natural m = n - a * x;
            for (Natural b : divisors(m)) {
                const Natural y = m / b;
                if (set == SolutionSet::Bprime && (std::gcd(a, b) != 1 || std::gcd(x, y) != 1)) {
                    continue;
                }
                visit(Quadruple{a, b, x, y});
                ++count;
            }
        }
    }
    return count;
}

/// sum of d^r e^s over d | m, e | n with gcd(d, e) = gcd(m/d, n/e) = 1.
/// Zero when m <= 0 or n <= 0.
Integer sigma_prime(unsigned r, unsigned s, std::int64_t m, std::int64_t n);

/// Bprime: sum of x^r y^s over B'(n). B: sum of a^r b^s over B(n).
Integer brute_convolution(unsigned r, unsigned s, Natural n, SolutionSet set);

/// sum_{m=1}^{n-1} sigma'_{r,s}(m, n - m), computed divisor by divisor.
Integer sigma_prime_convolution(unsigned r, unsigned s, Natural n);

/// sum_{m=1}^{n-1} sigma_r(m) sigma_s(n - m).
Integer sigma_convolution(unsigned r, unsigned s, Natural n);

struct PreIdentityReport {
    unsigned r = 0, s = 0;
    Natural n = 0;
    /// sigma' convolution (r,s), (s,r); then x^r y^s, x^s y^r, a^r b^s, a^s b^r over B'(n).
    std::array<Integer, 6> values;
    bool all_equal = false;
};

inline constexpr std::array<std::string_view, 6> kPreIdentityLabels{
    "sigma_prime_rs", "sigma_prime_sr", "xr_ys", "xs_yr", "ar_bs", "as_br"};

PreIdentityReport check_pre_identity(unsigned r, unsigned s, Natural n);

} // namespace cpconv
