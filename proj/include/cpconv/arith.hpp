#pragma once

// Exact integer/rational types and the classical arithmetic functions.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace cpconv {

using Integer = mpz_class;
/// Always canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Ratio = mpq_class;

/// Desk-scale index type for n, m, d, t. Sums and values are Integer.
using Natural = std::uint64_t;

struct PrimePower {
    Natural prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing, exponents >= 1. Empty for n = 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> parts);

    std::span<const PrimePower> parts() const& noexcept { return parts_; }
    std::vector<PrimePower> parts() && { return std::move(parts_); }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }
    bool squarefree() const noexcept;
    Natural value() const noexcept;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> parts_;
};

/// Canonical rational num/den. Throws DomainError on den = 0.
Ratio make_ratio(const Integer& num, const Integer& den);

Integer ipow(Natural base, unsigned exponent);
Integer ipow(std::int64_t base, unsigned exponent);
Integer binomial(unsigned n, unsigned k);

/// Trial division over a 2,3,5 wheel; memoized.
Factorization factorize(Natural n);

/// Ascending; first 1, last n.
std::vector<Natural> divisors(Natural n);

int mobius(Natural n);
Natural totient(Natural n);

/// Sum of k-th powers of the divisors of n; 0 for n <= 0.
Integer sigma_k(unsigned k, std::int64_t n);

/// B_j with B_1 = -1/2; memoized.
Ratio bernoulli(unsigned j);

} // namespace cpconv
