#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "cpconv/lattice.hpp"

using namespace cpconv;

namespace {

// Quadruple loop over a, b, x, y in [1, n).
std::vector<Quadruple> naive_set(Natural n, SolutionSet set) {
    std::vector<Quadruple> out;
    for (Natural a = 1; a < n; ++a)
        for (Natural x = 1; a * x < n; ++x)
            for (Natural b = 1; b < n; ++b)
                for (Natural y = 1; y < n; ++y) {
                    if (a * x + b * y != n) continue;
                    if (set == SolutionSet::Bprime && (std::gcd(a, b) != 1 || std::gcd(x, y) != 1)) continue;
                    out.push_back({a, b, x, y});
                }
    return out;
}

std::vector<Quadruple> collect(Natural n, SolutionSet set) {
    std::vector<Quadruple> out;
    enumerate(n, set, [&](const Quadruple& q) { out.push_back(q); });
    return out;
}

Integer naive_sigma_prime(unsigned r, unsigned s, Natural m, Natural n) {
    Integer total = 0;
    for (Natural d = 1; d <= m; ++d)
        for (Natural e = 1; e <= n; ++e) {
            if (m % d || n % e) continue;
            if (std::gcd(d, e) != 1 || std::gcd(m / d, n / e) != 1) continue;
            total += ipow(d, r) * ipow(e, s);
        }
    return total;
}

} // namespace

TEST_CASE("enumerate examples") {
    CHECK(collect(2, SolutionSet::Bprime) == std::vector<Quadruple>{{1, 1, 1, 1}});
    const std::vector<Quadruple> three{{1, 1, 1, 2}, {1, 2, 1, 1}, {1, 1, 2, 1}, {2, 1, 1, 1}};
    CHECK(collect(3, SolutionSet::Bprime) == three);
    CHECK(collect(3, SolutionSet::B) == three);
    CHECK(enumerate(3, SolutionSet::Bprime, [](const Quadruple&) {}) == 4);
    CHECK_THROWS_AS(enumerate(1, SolutionSet::B, [](const Quadruple&) {}), DomainError);
}

TEST_CASE("enumerate matches a quadruple loop and visits in a, x, b order") {
    for (Natural n = 2; n <= 40; ++n) {
        for (auto set : {SolutionSet::B, SolutionSet::Bprime}) {
            const auto got = collect(n, set);
            auto expected = naive_set(n, set);
            const std::set<Quadruple> unique(got.begin(), got.end());
            REQUIRE(unique.size() == got.size());
            REQUIRE(unique == std::set<Quadruple>(expected.begin(), expected.end()));
            const bool ordered = std::is_sorted(got.begin(), got.end(), [](const Quadruple& l, const Quadruple& r) {
                return std::tie(l.a, l.x, l.b) < std::tie(r.a, r.x, r.b);
            });
            REQUIRE(ordered);
            for (const auto& q : got) REQUIRE(q.a * q.x + q.b * q.y == n);
        }
    }
}

TEST_CASE("B'(n) is closed under both swaps") {
    for (Natural n = 2; n <= 60; ++n) {
        const auto v = collect(n, SolutionSet::Bprime);
        const std::set<Quadruple> s(v.begin(), v.end());
        for (const auto& q : v) {
            REQUIRE(s.count({q.x, q.y, q.a, q.b}) == 1);
            REQUIRE(s.count({q.b, q.a, q.y, q.x}) == 1);
        }
    }
}

TEST_CASE("|B(n)| = sum d(m) d(n - m)") {
    for (Natural n = 2; n <= 60; ++n) {
        Natural expected = 0;
        for (Natural m = 1; m < n; ++m) expected += divisors(m).size() * divisors(n - m).size();
        CHECK(enumerate(n, SolutionSet::B, [](const Quadruple&) {}) == expected);
    }
}

TEST_CASE("sigma_prime examples") {
    CHECK(sigma_prime(1, 1, 1, 1) == 1);
    CHECK(sigma_prime(1, 1, 2, 2) == 4);
    CHECK(sigma_prime(1, 3, 2, 2) == 10);
    CHECK(sigma_prime(1, 1, 0, 5) == 0);
    CHECK(sigma_prime(1, 1, 5, -2) == 0);
}

TEST_CASE("sigma_prime matches definition and its symmetry") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Natural> arg(1, 200);
    std::uniform_int_distribution<unsigned> ord(0, 5);
    for (int i = 0; i < 300; ++i) {
        const Natural m = arg(rng), n = arg(rng);
        const unsigned r = ord(rng), s = ord(rng);
        const auto mi = static_cast<std::int64_t>(m), ni = static_cast<std::int64_t>(n);
        CHECK(sigma_prime(r, s, mi, ni) == naive_sigma_prime(r, s, m, n));
        CHECK(sigma_prime(r, s, mi, ni) == sigma_prime(s, r, ni, mi));
    }
}

TEST_CASE("brute convolution examples") {
    CHECK(brute_convolution(1, 1, 3, SolutionSet::Bprime) == 6);
    CHECK(brute_convolution(1, 3, 2, SolutionSet::Bprime) == 1);
    CHECK(brute_convolution(3, 3, 3, SolutionSet::Bprime) == 18);
    CHECK_THROWS_AS(brute_convolution(1, 1, 1, SolutionSet::B), DomainError);
}

TEST_CASE("brute convolution over B is the sigma_r sigma_s convolution") {
    for (Natural n = 2; n <= 50; ++n) {
        for (unsigned r = 0; r <= 3; ++r) {
            for (unsigned s = 0; s <= 3; ++s) {
                REQUIRE(brute_convolution(r, s, n, SolutionSet::B) == sigma_convolution(r, s, n));
            }
        }
    }
}

TEST_CASE("pre-identity examples") {
    const auto a = check_pre_identity(1, 3, 3);
    CHECK(a.all_equal);
    CHECK(a.values[0] == 12);
    const auto b = check_pre_identity(1, 1, 2);
    CHECK(b.all_equal);
    CHECK(b.values[0] == 1);

    // Oracle: the quadruple loop, independent of the divisor-based enumeration.
    Integer expected = 0;
    for (const auto& q : naive_set(10, SolutionSet::Bprime)) expected += ipow(q.x, 2) * ipow(q.y, 5);
    const auto c = check_pre_identity(2, 5, 10);
    CHECK(c.all_equal);
    for (const auto& v : c.values) CHECK(v == expected);
    CHECK_THROWS_AS(check_pre_identity(1, 1, 1), DomainError);
}

TEST_CASE("pre-identity on a small grid") {
    for (Natural n = 2; n <= 25; ++n)
        for (unsigned r = 0; r <= 5; ++r)
            for (unsigned s = 0; s <= 5; ++s) REQUIRE(check_pre_identity(r, s, n).all_equal);
}

TEST_CASE("solution set names") {
    CHECK(parse_solution_set("B") == SolutionSet::B);
    CHECK(parse_solution_set("Bprime") == SolutionSet::Bprime);
    CHECK_THROWS_AS(parse_solution_set("C"), UsageError);
}
