#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "cpconv/errors.hpp"
#include "cpconv/psi.hpp"

using namespace cpconv;

namespace {

Integer brute_power_sum(unsigned k, Natural n) {
    Integer total = 0;
    for (Natural t = 1; t < n; ++t) {
        if (std::gcd(t, n) == 1) {
            Integer p = 1;
            for (unsigned i = 0; i < k; ++i) p *= static_cast<unsigned long>(t);
            total += p;
        }
    }
    return total;
}

} // namespace

TEST_CASE("psi examples") {
    for (int s : {-3, -1, 1, 2, 7}) CHECK(psi(PsiOrder(s), 1) == 1);
    CHECK(psi(PsiOrder(-1), 2) == make_ratio(1, 2));
    CHECK(psi(PsiOrder(3), 6) == 182);
    CHECK_THROWS_AS(PsiOrder(0), DomainError);
    CHECK_THROWS_AS(psi(PsiOrder(1), 0), DomainError);
}

TEST_CASE("psi equals its product form") {
    for (Natural n = 1; n <= 2000; ++n) {
        for (int s : {-3, -2, -1, 1, 2, 3, 5}) {
            REQUIRE(psi(PsiOrder(s), n) == psi_product(PsiOrder(s), n));
        }
    }
}

TEST_CASE("totient is n psi_{-1}(n)") {
    for (Natural n = 2; n <= 3000; ++n) {
        const Ratio v = Ratio(Integer(static_cast<unsigned long>(n))) * psi(PsiOrder(-1), n);
        REQUIRE(v == Ratio(Integer(static_cast<unsigned long>(totient(n)))));
        REQUIRE(coprime_power_sum(0, n, PowerSumMethod::direct) == totient(n));
    }
}

TEST_CASE("psi is multiplicative on coprime arguments") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Natural> dist(1, 3000);
    int tested = 0;
    while (tested < 300) {
        const Natural m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1) continue;
        ++tested;
        for (int s : {-1, 1, 3}) {
            CHECK(psi(PsiOrder(s), m * n) == psi(PsiOrder(s), m) * psi(PsiOrder(s), n));
        }
    }
}

TEST_CASE("power sum examples") {
    for (auto m : {PowerSumMethod::direct, PowerSumMethod::moebius_faulhaber, PowerSumMethod::closed_table}) {
        CHECK(coprime_power_sum(0, 10, m) == 4);
        CHECK(coprime_power_sum(1, 4, m) == 4);
        CHECK(coprime_power_sum(2, 3, m) == 5);
    }
}

TEST_CASE("power sum errors") {
    CHECK_THROWS_AS(coprime_power_sum(2, 1, PowerSumMethod::direct), DomainError);
    CHECK_THROWS_AS(coprime_power_sum(2, 0, PowerSumMethod::moebius_faulhaber), DomainError);
    CHECK_THROWS_AS(coprime_power_sum(13, 10, PowerSumMethod::closed_table), UnsupportedError);
    CHECK(coprime_power_sum(13, 10, PowerSumMethod::moebius_faulhaber) ==
          coprime_power_sum(13, 10, PowerSumMethod::direct));
    CHECK_THROWS_AS(parse_power_sum_method("fast"), UsageError);
}

TEST_CASE("all methods agree with a brute oracle") {
    for (Natural n = 2; n <= 120; ++n) {
        for (unsigned k = 0; k <= kClosedTableMaxK; ++k) {
            const Integer expected = brute_power_sum(k, n);
            REQUIRE(coprime_power_sum(k, n, PowerSumMethod::direct) == expected);
            REQUIRE(coprime_power_sum(k, n, PowerSumMethod::moebius_faulhaber) == expected);
            REQUIRE(coprime_power_sum(k, n, PowerSumMethod::closed_table) == expected);
        }
    }
}

TEST_CASE("Moebius sums with upper limit N and N - 1 agree") {
    for (Natural n = 2; n <= 300; ++n) {
        for (unsigned k = 0; k <= 12; ++k) {
            REQUIRE(moebius_faulhaber_sum(k, n, false) == moebius_faulhaber_sum(k, n, true));
        }
    }
}

TEST_CASE("faulhaber matches direct summation") {
    for (unsigned k = 0; k <= 14; ++k) {
        Integer running = 0;
        CHECK(faulhaber(k, 0) == 0);
        for (Natural upper = 1; upper <= 40; ++upper) {
            Integer p = 1;
            for (unsigned i = 0; i < k; ++i) p *= static_cast<unsigned long>(upper);
            running += p;
            REQUIRE(faulhaber(k, upper) == running);
        }
    }
}

TEST_CASE("closed table equals the Bernoulli expansion term by term") {
    // S_k(n) = 1/(k+1) sum_{j != 1} C(k+1, j) B_j n^{k+1-j} psi_{j-1}(n)
    for (unsigned k = 0; k <= kClosedTableMaxK; ++k) {
        std::vector<ClosedFormTerm> expected;
        for (unsigned j = 0; j <= k; ++j) {
            if (j == 1) continue;
            const Ratio c = Ratio(binomial(k + 1, j)) * bernoulli(j) / Ratio(k + 1);
            if (c == 0) continue;
            expected.push_back({c, k + 1 - j, j == 0 ? -1 : static_cast<int>(j) - 1});
        }
        CHECK_MESSAGE(closed_power_sum(k) == ClosedForm(expected), "k = " << k);
    }
}

TEST_CASE("closed form rendering") {
    CHECK(closed_power_sum(2).to_string() == "1/3*n^3*psi_-1(n) + 1/6*n^1*psi_1(n)");
    CHECK(ClosedForm().to_string() == "0");
    CHECK(closed_power_sum(4).scaled(make_ratio(30, 1)).evaluate(7) ==
          Ratio(30) * closed_power_sum(4).evaluate(7));
}
