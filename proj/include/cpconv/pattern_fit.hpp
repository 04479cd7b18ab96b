#pragma once

// Exact fit of
//   sum_m sigma'_{r,s}(m, n-m) = (A n^{r+s+1} + B n) psi_{-1}(n) + C n^r psi_s(n) + D n^s psi_r(n)
// against the brute-force convolution oracle.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpconv/arith.hpp"
#include "cpconv/psi.hpp"

namespace cpconv {

/// For r == s the last two basis columns coincide: C holds C + D and D is 0.
struct PatternCoeffs {
    Ratio a, b, c, d;
    bool degenerate = false;

    friend bool operator==(const PatternCoeffs&, const PatternCoeffs&) = default;
};

enum class FitVerdict { consistent, inconsistent, untested };

std::string_view to_string(FitVerdict v);

struct FitReport {
    unsigned r = 0, s = 0;
    /// Absent when the training system is inconsistent.
    std::optional<PatternCoeffs> coefficients;
    std::vector<Natural> train_ns;
    std::vector<Natural> test_ns;
    /// Ansatz minus oracle at each test n.
    std::vector<Ratio> residuals;
    FitVerdict verdict = FitVerdict::untested;
    /// r == s: the C and D columns coincide and only C + D is fitted.
    bool degenerate = false;
    /// Advisory notes, e.g. a training set lacking a semiprime.
    std::vector<std::string> warnings;
    /// Set for the open weight-10 cases: the verdict is numerical evidence only.
    bool evidence_only = false;
};

using ConvolutionOracle = std::function<Ratio(Natural)>;

/// Oracle used by default: brute_convolution(r, s, n, Bprime).
ConvolutionOracle brute_oracle(unsigned r, unsigned s);

Ratio pattern_value(const PatternCoeffs& coeffs, unsigned r, unsigned s, Natural n);

/// Needs >= 5 distinct training points >= 2 and a full-rank basis, else UsageError.
FitReport fit(unsigned r, unsigned s, const std::vector<Natural>& train_ns);
FitReport fit(unsigned r, unsigned s, const std::vector<Natural>& train_ns,
              const ConvolutionOracle& oracle);

/// Residuals on test_ns; test_ns must be nonempty and disjoint from train_ns.
FitReport validate(const PatternCoeffs& coeffs, unsigned r, unsigned s,
                   const std::vector<Natural>& test_ns,
                   const std::vector<Natural>& train_ns = {});

/// fit then validate, in one report.
FitReport fit_and_validate(unsigned r, unsigned s, const std::vector<Natural>& train_ns,
                           const std::vector<Natural>& test_ns);

/// (r, s) with r + s = 10, r <= s, both odd. Report is flagged evidence_only.
FitReport probe_weight10(unsigned r, unsigned s, const std::vector<Natural>& train_ns,
                         const std::vector<Natural>& test_ns);

/// Reads A, B, C, D off a closed form written in the pattern's basis.
PatternCoeffs pattern_from_closed_form(const ClosedForm& form, unsigned r, unsigned s);

inline const std::vector<Natural> kDefaultTrainNs{2, 3, 4, 5, 7, 9};
inline const std::vector<Natural> kDefaultTestNs{11, 13, 16, 25, 30};
inline const std::vector<Natural> kDefaultProbeTestNs{11, 13, 25};

} // namespace cpconv
