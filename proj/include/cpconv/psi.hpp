#pragma once

// psi_s(n) = sum_{d | n} mu(d) d^s, and power sums over residues coprime to n.

#include <string>
#include <string_view>
#include <vector>

#include "cpconv/arith.hpp"

namespace cpconv {

/// Nonzero order s of psi_s.
class PsiOrder {
public:
    explicit PsiOrder(int s);
    int value() const noexcept { return s_; }

private:
    int s_;
};

/// psi_s(n) as an exact rational (s < 0 gives fractions).
Ratio psi(PsiOrder s, Natural n);

/// Product form prod_{p | n} (1 - p^s); equals psi for every n >= 1.
Ratio psi_product(PsiOrder s, Natural n);

/// coefficient * n^n_power * psi_{psi_order}(n)
struct ClosedFormTerm {
    Ratio coefficient;
    unsigned n_power = 0;
    int psi_order = -1;

    friend bool operator==(const ClosedFormTerm&, const ClosedFormTerm&) = default;
};

/// A finite sum of ClosedFormTerm, evaluated exactly at n.
class ClosedForm {
public:
    ClosedForm() = default;
    ClosedForm(std::initializer_list<ClosedFormTerm> terms);
    explicit ClosedForm(std::vector<ClosedFormTerm> terms);

    const std::vector<ClosedFormTerm>& terms() const noexcept { return terms_; }
    Ratio evaluate(Natural n) const;
    ClosedForm scaled(const Ratio& factor) const;
    std::string to_string() const;

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

private:
    std::vector<ClosedFormTerm> terms_;
};

enum class PowerSumMethod { direct, moebius_faulhaber, closed_table };

std::string_view to_string(PowerSumMethod m);
PowerSumMethod parse_power_sum_method(std::string_view text);

inline constexpr unsigned kClosedTableMaxK = 12;

/// S_k(n) = sum of t^k over 1 <= t < n with gcd(t, n) = 1.
Integer coprime_power_sum(unsigned k, Natural n, PowerSumMethod method);

/// Closed ClosedForm expression of S_k for 0 <= k <= 12.
const ClosedForm& closed_power_sum(unsigned k);

/// sum_{d | n} mu(d) d^k F(n/d) where F(N) = sum_{j=1}^{N} j^k (or N-1 when
/// upper_minus_one), with F expanded through Bernoulli numbers.
Integer moebius_faulhaber_sum(unsigned k, Natural n, bool upper_minus_one = false);

/// sum_{j=1}^{N} j^k via Faulhaber; exact.
Integer faulhaber(unsigned k, Natural upper);

} // namespace cpconv
