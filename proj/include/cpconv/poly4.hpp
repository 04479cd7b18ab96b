#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

#include "cpconv/arith.hpp"

namespace cpconv {

/// Integer-coefficient polynomial in (a, b, x, y). Zero coefficients are never stored.
class Poly4 {
public:
    /// Exponents of a, b, x, y in that order.
    using Exponents = std::array<unsigned, 4>;

    Poly4() = default;

    /// Parses e.g. "1 x^1 y^5 - 10 x^3 y^3". Throws UsageError on malformed text.
    static Poly4 parse(std::string_view text);

    static Poly4 monomial(const Integer& coefficient, Exponents exponents);

    void add_term(const Integer& coefficient, Exponents exponents);

    const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer evaluate(std::int64_t a, std::int64_t b, std::int64_t x, std::int64_t y) const;

    /// f(x, y, a, b)
    Poly4 swapped() const;
    /// f(sa*a, sb*b, sx*x, sy*y) with each sign +1 or -1.
    Poly4 sign_flipped(int sa, int sb, int sx, int sy) const;

    Poly4& operator+=(const Poly4& other);
    Poly4& operator-=(const Poly4& other);
    friend Poly4 operator+(Poly4 lhs, const Poly4& rhs) { return lhs += rhs; }
    friend Poly4 operator-(Poly4 lhs, const Poly4& rhs) { return lhs -= rhs; }
    friend bool operator==(const Poly4&, const Poly4&) = default;

    /// Same grammar as parse(); "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::map<Exponents, Integer> terms_;
};

/// f(a,b,x,y) - f(x,y,a,b) == f(-a,-b,x,y) - f(x,y,-a,-b) as polynomials.
bool symmetry_holds(const Poly4& f);

/// Random polynomial satisfying the symmetry condition by construction:
/// a swap-symmetric part h + h(x,y,a,b) plus monomials of even degree in
/// (a,b) and in (x,y).
Poly4 random_symmetric_poly(std::mt19937_64& rng, unsigned max_exponent = 4,
                            unsigned max_terms = 3);

} // namespace cpconv
