#pragma once

// Both sides of the six-term convolution identity, the closed-form theorem
// table, and the classical Besge/Glaisher checks.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpconv/lattice.hpp"
#include "cpconv/poly4.hpp"
#include "cpconv/psi.hpp"

namespace cpconv {

struct IdentitySides {
    Integer lhs;
    Integer rhs;
    bool holds() const { return lhs == rhs; }
};

/// LHS: sum over the set of
///   f(a,b,x,-y) - f(a,-b,x,y) + f(a,a-b,x+y,y) - f(a,a+b,y-x,y) + f(b-a,b,x,x+y) - f(a+b,b,x,x-y).
/// RHS for Bprime: sum over 1 <= t < n, gcd(t,n) = 1 of
///   f(1,0,n,t) - f(n,t,1,0) + f(0,1,t,n) - f(t,n,0,1) + f(1,1,n-t,-t) - f(n-t,-t,1,1).
/// RHS for B: sum over d | n, 1 <= x < d of
///   f(0,n/d,x,d) + f(n/d,0,d,x) + f(n/d,n/d,d-x,-x) - f(x,x-d,n/d,n/d) - f(x,d,0,n/d) - f(d,x,n/d,0).
/// Throws PreconditionError unless symmetry_holds(f).
IdentitySides main_identity_sides(const Poly4& f, Natural n, SolutionSet set);

/// The nine test polynomials whose identities yield the closed forms.
struct ProofPolynomial {
    unsigned r, s;
    std::string text;
};
const std::vector<ProofPolynomial>& proof_polynomials();

enum class Theorem { t11, t13, t15, t33, t17, t35, t111, t39, t57 };
enum class Variant { as_printed, corrected };

/// Variant only distinguishes anything for t13; the other forms were never misprinted.
struct TheoremId {
    Theorem tag = Theorem::t11;
    Variant variant = Variant::corrected;

    friend bool operator==(const TheoremId&, const TheoremId&) = default;
};

inline constexpr Theorem kAllTheorems[] = {Theorem::t11, Theorem::t13,  Theorem::t15,
                                           Theorem::t33, Theorem::t17,  Theorem::t35,
                                           Theorem::t111, Theorem::t39, Theorem::t57};

std::string to_string(TheoremId id);
/// "t13", "t13:printed", "t13:corrected".
TheoremId parse_theorem_id(std::string_view text);

std::pair<unsigned, unsigned> theorem_orders(Theorem tag);
const ClosedForm& theorem_closed_form(TheoremId id);
std::optional<Theorem> theorem_for_orders(unsigned r, unsigned s);

Ratio eval_theorem(TheoremId id, Natural n);

struct TheoremCheck {
    Natural n = 0;
    Ratio closed;
    Integer oracle;
    bool pass = false;
    /// closed / oracle; absent when the oracle is zero.
    std::optional<Ratio> ratio;
};

struct TheoremReport {
    TheoremId id;
    std::vector<TheoremCheck> checks;
    bool all_pass = true;
    std::optional<Natural> first_counterexample;
};

/// Closed form against brute_convolution(r, s, n, Bprime) for lo <= n <= hi.
TheoremReport verify_theorem(TheoremId id, Natural lo, Natural hi, unsigned jobs = 1);

struct ClassicalCheck {
    Integer lhs;
    Ratio rhs;
    bool holds() const { return Ratio(lhs) == rhs; }
};

/// sum sigma(m) sigma(n-m) = (5 sigma_3(n) + (1 - 6n) sigma(n)) / 12
ClassicalCheck besge(Natural n);
/// sum sigma(m) sigma_3(n-m) = (21 sigma_5(n) + (10 - 30n) sigma_3(n) - sigma(n)) / 240
ClassicalCheck glaisher(Natural n);

bool besge_check(Natural n);
bool glaisher_check(Natural n);

} // namespace cpconv
