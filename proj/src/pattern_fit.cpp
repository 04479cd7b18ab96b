#include "cpconv/pattern_fit.hpp"

#include <algorithm>
#include <set>

#include "cpconv/errors.hpp"
#include "cpconv/lattice.hpp"
#include "cpconv/rational_solve.hpp"

namespace cpconv {

namespace {

std::vector<Ratio> basis_row(unsigned r, unsigned s, Natural n) {
    const Ratio psi_inv = psi(PsiOrder(-1), n);
    std::vector<Ratio> row{
        Ratio(ipow(n, r + s + 1)) * psi_inv,
        Ratio(Integer(static_cast<unsigned long>(n))) * psi_inv,
        Ratio(ipow(n, r)) * psi(PsiOrder(static_cast<int>(s)), n),
    };
    if (r != s) row.push_back(Ratio(ipow(n, s)) * psi(PsiOrder(static_cast<int>(r)), n));
    return row;
}

void check_orders(unsigned r, unsigned s) {
    if (r == 0 || s == 0) throw DomainError("pattern: r and s must be >= 1");
}

std::vector<std::string> composition_warnings(const std::vector<Natural>& ns) {
    std::size_t primes = 0;
    bool prime_power = false;
    bool semiprime = false;
    for (Natural n : ns) {
        const Factorization f = factorize(n);
        if (f.size() == 1 && f.parts()[0].exponent == 1) ++primes;
        if (f.size() == 1 && f.parts()[0].exponent >= 2) prime_power = true;
        if (f.size() == 2 && f.squarefree()) semiprime = true;
    }
    std::vector<std::string> out;
    if (primes < 2) out.emplace_back("training set has fewer than two primes");
    if (!prime_power) out.emplace_back("training set has no prime power p^k with k >= 2");
    if (!semiprime) out.emplace_back("training set has no product of two distinct primes");
    return out;
}

} // namespace

std::string_view to_string(FitVerdict v) {
    switch (v) {
    case FitVerdict::consistent: return "consistent";
    case FitVerdict::inconsistent: return "inconsistent";
    case FitVerdict::untested: return "untested";
    }
    return "?";
}

ConvolutionOracle brute_oracle(unsigned r, unsigned s) {
    return [r, s](Natural n) { return Ratio(brute_convolution(r, s, n, SolutionSet::Bprime)); };
}

Ratio pattern_value(const PatternCoeffs& coeffs, unsigned r, unsigned s, Natural n) {
    const std::vector<Ratio> row = basis_row(r, s, n);
    Ratio v = coeffs.a * row[0] + coeffs.b * row[1] + coeffs.c * row[2];
    if (row.size() == 4) v += coeffs.d * row[3];
    v.canonicalize();
    return v;
}

FitReport fit(unsigned r, unsigned s, const std::vector<Natural>& train_ns) {
    return fit(r, s, train_ns, brute_oracle(r, s));
}

FitReport fit(unsigned r, unsigned s, const std::vector<Natural>& train_ns,
              const ConvolutionOracle& oracle) {
    check_orders(r, s);
    if (train_ns.size() < 5) {
        throw UsageError("fit: need at least 5 training points for 4 unknowns, got " +
                         std::to_string(train_ns.size()));
    }
    if (std::set<Natural>(train_ns.begin(), train_ns.end()).size() != train_ns.size()) {
        throw UsageError("fit: training points must be distinct");
    }
    if (std::any_of(train_ns.begin(), train_ns.end(), [](Natural n) { return n < 2; })) {
        throw UsageError("fit: training points must be >= 2");
    }

    const bool degenerate = r == s;
    const std::size_t unknowns = degenerate ? 3 : 4;
    RationalMatrix m(train_ns.size(), unknowns);
    std::vector<Ratio> rhs;
    for (std::size_t i = 0; i < train_ns.size(); ++i) {
        const std::vector<Ratio> row = basis_row(r, s, train_ns[i]);
        for (std::size_t j = 0; j < unknowns; ++j) m(i, j) = row[j];
        rhs.push_back(oracle(train_ns[i]));
    }

    FitReport report;
    report.r = r;
    report.s = s;
    report.train_ns = train_ns;
    report.degenerate = degenerate;
    report.warnings = composition_warnings(train_ns);

    const LinearSolution sol = solve_exact(std::move(m), std::move(rhs));
    switch (sol.status) {
    case SolveStatus::rank_deficient:
        throw UsageError("fit: degenerate basis, rank " + std::to_string(sol.rank) + " < " +
                         std::to_string(unknowns) +
                         " unknowns; add structurally different n (primes, prime powers, "
                         "semiprimes)");
    case SolveStatus::inconsistent:
        report.verdict = FitVerdict::inconsistent;
        return report;
    case SolveStatus::unique:
        break;
    }
    PatternCoeffs c;
    c.a = sol.x[0];
    c.b = sol.x[1];
    c.c = sol.x[2];
    c.d = degenerate ? Ratio(0) : sol.x[3];
    c.degenerate = degenerate;
    report.coefficients = c;
    return report;
}

FitReport validate(const PatternCoeffs& coeffs, unsigned r, unsigned s,
                   const std::vector<Natural>& test_ns, const std::vector<Natural>& train_ns) {
    check_orders(r, s);
    if (test_ns.empty()) throw UsageError("validate: empty test set");
    for (Natural n : test_ns) {
        if (n < 2) throw UsageError("validate: test points must be >= 2");
        if (std::find(train_ns.begin(), train_ns.end(), n) != train_ns.end()) {
            throw UsageError("validate: test point " + std::to_string(n) +
                             " also appears in the training set");
        }
    }
    FitReport report;
    report.r = r;
    report.s = s;
    report.coefficients = coeffs;
    report.degenerate = coeffs.degenerate;
    report.train_ns = train_ns;
    report.test_ns = test_ns;
    bool all_zero = true;
    for (Natural n : test_ns) {
        Ratio residual = pattern_value(coeffs, r, s, n) -
                         Ratio(brute_convolution(r, s, n, SolutionSet::Bprime));
        residual.canonicalize();
        all_zero = all_zero && residual == 0;
        report.residuals.push_back(residual);
    }
    report.verdict = all_zero ? FitVerdict::consistent : FitVerdict::inconsistent;
    return report;
}

FitReport fit_and_validate(unsigned r, unsigned s, const std::vector<Natural>& train_ns,
                           const std::vector<Natural>& test_ns) {
    FitReport fitted = fit(r, s, train_ns);
    if (!fitted.coefficients) {
        if (test_ns.empty()) throw UsageError("validate: empty test set");
        for (Natural n : test_ns) {
            if (std::find(train_ns.begin(), train_ns.end(), n) != train_ns.end()) {
                throw UsageError("validate: test point " + std::to_string(n) +
                                 " also appears in the training set");
            }
        }
        fitted.test_ns = test_ns;
        return fitted;
    }
    FitReport report = validate(*fitted.coefficients, r, s, test_ns, train_ns);
    report.warnings = std::move(fitted.warnings);
    return report;
}

FitReport probe_weight10(unsigned r, unsigned s, const std::vector<Natural>& train_ns,
                         const std::vector<Natural>& test_ns) {
    if (r > s) std::swap(r, s);
    if (r + s != 10 || r % 2 == 0) {
        throw UsageError("probe10: pair must be one of 1,9 3,7 5,5");
    }
    FitReport report = fit_and_validate(r, s, train_ns, test_ns);
    report.evidence_only = true;
    return report;
}

PatternCoeffs pattern_from_closed_form(const ClosedForm& form, unsigned r, unsigned s) {
    check_orders(r, s);
    PatternCoeffs c;
    c.degenerate = r == s;
    for (const auto& t : form.terms()) {
        const auto sr = static_cast<int>(r);
        const auto ss = static_cast<int>(s);
        if (t.psi_order == -1 && t.n_power == r + s + 1) c.a += t.coefficient;
        else if (t.psi_order == -1 && t.n_power == 1) c.b += t.coefficient;
        else if (t.psi_order == ss && t.n_power == r) c.c += t.coefficient;
        else if (t.psi_order == sr && t.n_power == s) c.d += t.coefficient;
        else throw UsageError("closed form term outside the pattern basis: n^" +
                              std::to_string(t.n_power) + " psi_" + std::to_string(t.psi_order));
    }
    if (c.degenerate) {
        c.c += c.d;
        c.d = 0;
    }
    return c;
}

} // namespace cpconv
