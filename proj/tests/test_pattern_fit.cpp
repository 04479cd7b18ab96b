#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpconv/errors.hpp"
#include "cpconv/identity.hpp"
#include "cpconv/lattice.hpp"
#include "cpconv/pattern_fit.hpp"
#include "cpconv/rational_solve.hpp"

using namespace cpconv;

namespace {

PatternCoeffs coeffs(Ratio a, Ratio b, Ratio c, Ratio d, bool degenerate = false) {
    return PatternCoeffs{a, b, c, d, degenerate};
}

} // namespace

TEST_CASE("fit examples") {
    const auto f11 = fit(1, 1, kDefaultTrainNs);
    REQUIRE(f11.coefficients);
    CHECK(*f11.coefficients == coeffs(make_ratio(5, 12), make_ratio(-1, 2), make_ratio(1, 12), 0, true));

    const auto f33 = fit(3, 3, kDefaultTrainNs);
    REQUIRE(f33.coefficients);
    CHECK(*f33.coefficients == coeffs(make_ratio(1, 120), 0, make_ratio(-1, 120), 0, true));

    const auto f13 = fit(1, 3, kDefaultTrainNs);
    REQUIRE(f13.coefficients);
    CHECK(*f13.coefficients ==
          coeffs(make_ratio(7, 80), make_ratio(-1, 8), make_ratio(-1, 240), make_ratio(1, 24)));
    CHECK(*f13.coefficients ==
          pattern_from_closed_form(theorem_closed_form({Theorem::t13, Variant::corrected}), 1, 3));
}

TEST_CASE("fit warns about training set composition") {
    const auto f = fit(1, 1, kDefaultTrainNs);
    CHECK(f.warnings.size() == 1);  // no semiprime in {2,3,4,5,7,9}
    CHECK(fit(1, 1, {2, 3, 4, 6, 7}).warnings.empty());
}

TEST_CASE("validate examples") {
    const PatternCoeffs t15 =
        coeffs(make_ratio(5, 126), make_ratio(-1, 12), make_ratio(1, 504), make_ratio(1, 24));
    CHECK(t15 == pattern_from_closed_form(theorem_closed_form({Theorem::t15}), 1, 5));
    const auto report = validate(t15, 1, 5, {11, 13, 16});
    CHECK(report.verdict == FitVerdict::consistent);
    REQUIRE(report.residuals.size() == 3);
    for (const auto& r : report.residuals) CHECK(r == 0);

    const PatternCoeffs printed =
        pattern_from_closed_form(theorem_closed_form({Theorem::t13, Variant::as_printed}), 1, 3);
    const auto bad = validate(printed, 1, 3, {2});
    CHECK(bad.verdict == FitVerdict::inconsistent);
    REQUIRE(bad.residuals.size() == 1);
    CHECK(bad.residuals[0] == 7);
}

TEST_CASE("fit and validate recovers every proven case") {
    for (Theorem t : kAllTheorems) {
        const auto [r, s] = theorem_orders(t);
        const auto report = fit_and_validate(r, s, kDefaultTrainNs, kDefaultTestNs);
        CHECK(report.verdict == FitVerdict::consistent);
        REQUIRE(report.coefficients);
        CHECK(*report.coefficients == pattern_from_closed_form(theorem_closed_form({t}), r, s));
    }
}

TEST_CASE("fit and validate errors") {
    const PatternCoeffs c = *fit(1, 1, kDefaultTrainNs).coefficients;
    CHECK_THROWS_AS(validate(c, 1, 1, {}), UsageError);
    CHECK_THROWS_AS(validate(c, 1, 1, {9, 11}, kDefaultTrainNs), UsageError);
    CHECK_THROWS_AS(fit(1, 3, {2, 3, 4, 5}), UsageError);
    CHECK_THROWS_AS(fit(1, 3, {2, 3, 4, 5, 5}), UsageError);
    CHECK_THROWS_AS(fit(1, 3, {1, 3, 4, 5, 7}), UsageError);
    CHECK_THROWS_AS(fit(0, 3, kDefaultTrainNs), DomainError);
}

TEST_CASE("inconsistent training data") {
    const auto oracle = [](Natural n) { return Ratio(ipow(n, 9) + 1); };
    const auto report = fit(1, 3, {2, 3, 4, 5, 6, 7, 8, 9, 10}, oracle);
    CHECK(report.verdict == FitVerdict::inconsistent);
    CHECK_FALSE(report.coefficients);
}

TEST_CASE("scale freedom") {
    const auto base = brute_oracle(1, 5);
    const Ratio k = make_ratio(-7, 3);
    const auto scaled = [&](Natural n) { return Ratio(k * base(n)); };
    const auto a = *fit(1, 5, kDefaultTrainNs, base).coefficients;
    const auto b = *fit(1, 5, kDefaultTrainNs, scaled).coefficients;
    CHECK(b.a == k * a.a);
    CHECK(b.b == k * a.b);
    CHECK(b.c == k * a.c);
    CHECK(b.d == k * a.d);
}

TEST_CASE("exact solver") {
    RationalMatrix m(3, 2);
    m(0, 0) = 1; m(0, 1) = 2;
    m(1, 0) = 3; m(1, 1) = 4;
    m(2, 0) = 5; m(2, 1) = 6;
    const auto unique = solve_exact(m, {Ratio(5), Ratio(11), Ratio(17)});
    REQUIRE(unique.status == SolveStatus::unique);
    CHECK(unique.x == std::vector<Ratio>{Ratio(1), Ratio(2)});
    CHECK(solve_exact(m, {Ratio(5), Ratio(11), Ratio(18)}).status == SolveStatus::inconsistent);

    RationalMatrix d(3, 2);
    d(0, 0) = 1; d(0, 1) = 2;
    d(1, 0) = 2; d(1, 1) = 4;
    d(2, 0) = 3; d(2, 1) = 6;
    const auto deficient = solve_exact(d, {Ratio(1), Ratio(3), Ratio(0)});
    CHECK(deficient.status == SolveStatus::rank_deficient);
    CHECK(deficient.rank == 1);

    RationalMatrix q(2, 2);
    q(0, 0) = make_ratio(1, 3); q(0, 1) = make_ratio(1, 7);
    q(1, 0) = make_ratio(2, 5); q(1, 1) = 0;
    const auto frac = solve_exact(q, {make_ratio(1, 2), make_ratio(1, 11)});
    REQUIRE(frac.status == SolveStatus::unique);
    CHECK(q(0, 0) * frac.x[0] + q(0, 1) * frac.x[1] == make_ratio(1, 2));
    CHECK(q(1, 0) * frac.x[0] == make_ratio(1, 11));
}

TEST_CASE("weight 10 probes") {
    const auto p55 = probe_weight10(5, 5, kDefaultTrainNs, kDefaultProbeTestNs);
    CHECK(p55.evidence_only);
    CHECK(p55.degenerate);
    if (p55.coefficients) CHECK(p55.coefficients->degenerate);
    CHECK(p55.verdict != FitVerdict::untested);

    const auto p19 = probe_weight10(9, 1, kDefaultTrainNs, kDefaultProbeTestNs);
    CHECK(p19.evidence_only);
    CHECK(p19.r == 1);
    CHECK(p19.verdict != FitVerdict::untested);
    CHECK_THROWS_AS(probe_weight10(2, 8, kDefaultTrainNs, kDefaultProbeTestNs), UsageError);
}
