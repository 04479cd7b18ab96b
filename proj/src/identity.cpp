#include "cpconv/identity.hpp"

#include <array>
#include <numeric>

#include "cpconv/errors.hpp"
#include "cpconv/parallel.hpp"

namespace cpconv {

namespace {

using I64 = std::int64_t;

ClosedFormTerm term(long num, long den, unsigned n_power, int psi_order) {
    return {make_ratio(num, den), n_power, psi_order};
}

struct TheoremEntry {
    Theorem tag;
    std::string_view name;
    unsigned r, s;
    ClosedForm printed;
};

const std::array<TheoremEntry, 9>& theorem_table() {
    static const std::array<TheoremEntry, 9> table{{
        {Theorem::t11, "t11", 1, 1,
         ClosedForm{term(5, 12, 3, -1), term(-6, 12, 1, -1), term(1, 12, 1, 1)}},
        {Theorem::t13, "t13", 1, 3,
         ClosedForm{term(7, 10, 5, -1), term(-10, 10, 1, -1), term(1, 3, 3, 1),
                    term(-1, 30, 1, 3)}},
        {Theorem::t15, "t15", 1, 5,
         ClosedForm{term(540, 13608, 7, -1), term(-1134, 13608, 1, -1), term(1, 24, 5, 1),
                    term(9, 4536, 1, 5)}},
        {Theorem::t33, "t33", 3, 3, ClosedForm{term(1, 120, 7, -1), term(-1, 120, 3, 3)}},
        {Theorem::t17, "t17", 1, 7,
         ClosedForm{term(176, 7680, 9, -1), term(-480, 7680, 1, -1), term(1, 24, 7, 1),
                    term(-1, 480, 1, 7)}},
        {Theorem::t35, "t35", 3, 5,
         ClosedForm{term(11, 5040, 9, -1), term(-1, 240, 5, 3), term(1, 504, 3, 5)}},
        {Theorem::t111, "t111", 1, 11,
         ClosedForm{term(5223960, 495331200, 13, -1), term(-20638800, 495331200, 1, -1),
                    term(1, 24, 11, 1), term(-691, 65520, 1, 11)}},
        {Theorem::t39, "t39", 3, 9,
         ClosedForm{term(1, 2640, 13, -1), term(-1, 240, 9, 3), term(1, 264, 3, 9)}},
        {Theorem::t57, "t57", 5, 7,
         ClosedForm{term(1, 10080, 13, -1), term(1, 504, 7, 5), term(-1, 480, 5, 7)}},
    }};
    return table;
}

const TheoremEntry& entry(Theorem tag) {
    for (const auto& e : theorem_table()) {
        if (e.tag == tag) return e;
    }
    throw UsageError("unknown theorem tag");
}

// The printed (1,3) form is exactly 8 times the convolution sum.
const ClosedForm& corrected_t13() {
    static const ClosedForm form = entry(Theorem::t13).printed.scaled(make_ratio(1, 8));
    return form;
}

Integer lhs_term(const Poly4& f, const Quadruple& q) {
    const I64 a = static_cast<I64>(q.a), b = static_cast<I64>(q.b);
    const I64 x = static_cast<I64>(q.x), y = static_cast<I64>(q.y);
    return f.evaluate(a, b, x, -y) - f.evaluate(a, -b, x, y) + f.evaluate(a, a - b, x + y, y) -
           f.evaluate(a, a + b, y - x, y) + f.evaluate(b - a, b, x, x + y) -
           f.evaluate(a + b, b, x, x - y);
}

Integer coprime_rhs(const Poly4& f, Natural n_nat) {
    const I64 n = static_cast<I64>(n_nat);
    Integer total = 0;
    for (I64 t = 1; t < n; ++t) {
        if (std::gcd(t, n) != 1) continue;
        total += f.evaluate(1, 0, n, t) - f.evaluate(n, t, 1, 0) + f.evaluate(0, 1, t, n) -
                 f.evaluate(t, n, 0, 1) + f.evaluate(1, 1, n - t, -t) - f.evaluate(n - t, -t, 1, 1);
    }
    return total;
}

Integer divisor_rhs(const Poly4& f, Natural n_nat) {
    Integer total = 0;
    for (Natural d_nat : divisors(n_nat)) {
        const I64 d = static_cast<I64>(d_nat);
        const I64 q = static_cast<I64>(n_nat / d_nat);
        for (I64 x = 1; x < d; ++x) {
            total += f.evaluate(0, q, x, d) + f.evaluate(q, 0, d, x) + f.evaluate(q, q, d - x, -x) -
                     f.evaluate(x, x - d, q, q) - f.evaluate(x, d, 0, q) - f.evaluate(d, x, q, 0);
        }
    }
    return total;
}

} // namespace

IdentitySides main_identity_sides(const Poly4& f, Natural n, SolutionSet set) {
    if (n < 2) throw DomainError("main_identity_sides: n must be >= 2");
    if (!symmetry_holds(f)) {
        throw PreconditionError("polynomial '" + f.to_string() +
                                "' violates f(a,b,x,y)-f(x,y,a,b) = f(-a,-b,x,y)-f(x,y,-a,-b)");
    }
    IdentitySides sides;
    sides.lhs = 0;
    enumerate(n, set, [&](const Quadruple& q) { sides.lhs += lhs_term(f, q); });
    sides.rhs = set == SolutionSet::Bprime ? coprime_rhs(f, n) : divisor_rhs(f, n);
    return sides;
}

const std::vector<ProofPolynomial>& proof_polynomials() {
    static const std::vector<ProofPolynomial> family{
        {1, 1, "x^2"},
        {1, 3, "x^2 y^2"},
        {1, 5, "x y^5 - 10 x^3 y^3"},
        {3, 3, "x y^5 - x^3 y^3"},
        {1, 7, "-22 x^7 y + 112 x^5 y^3"},
        {3, 5, "x^7 y - x^5 y^3"},
        {1, 11, "271 x^11 y - 1540 x^9 y^3 + 1584 x^7 y^5"},
        {3, 9, "-2 x^11 y + 11 x^9 y^3 - 9 x^7 y^5"},
        {5, 7, "8 x^11 y - 35 x^9 y^3 + 27 x^7 y^5"},
    };
    return family;
}

std::string to_string(TheoremId id) {
    std::string name(entry(id.tag).name);
    if (id.tag == Theorem::t13) {
        name += id.variant == Variant::as_printed ? ":printed" : ":corrected";
    }
    return name;
}

TheoremId parse_theorem_id(std::string_view text) {
    TheoremId id;
    std::string_view tag = text;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        tag = text.substr(0, colon);
        const std::string_view variant = text.substr(colon + 1);
        if (variant == "printed" || variant == "as_printed") id.variant = Variant::as_printed;
        else if (variant == "corrected") id.variant = Variant::corrected;
        else throw UsageError("unknown theorem variant '" + std::string(variant) + "'");
    }
    for (const auto& e : theorem_table()) {
        if (e.name == tag) {
            id.tag = e.tag;
            return id;
        }
    }
    throw UsageError("unknown theorem '" + std::string(tag) + "'");
}

std::pair<unsigned, unsigned> theorem_orders(Theorem tag) {
    const auto& e = entry(tag);
    return {e.r, e.s};
}

std::optional<Theorem> theorem_for_orders(unsigned r, unsigned s) {
    for (const auto& e : theorem_table()) {
        if ((e.r == r && e.s == s) || (e.r == s && e.s == r)) return e.tag;
    }
    return std::nullopt;
}

const ClosedForm& theorem_closed_form(TheoremId id) {
    if (id.tag == Theorem::t13 && id.variant == Variant::corrected) return corrected_t13();
    return entry(id.tag).printed;
}

Ratio eval_theorem(TheoremId id, Natural n) {
    if (n < 2) throw DomainError("eval_theorem: n must be >= 2");
    return theorem_closed_form(id).evaluate(n);
}

TheoremReport verify_theorem(TheoremId id, Natural lo, Natural hi, unsigned jobs) {
    if (lo > hi) throw UsageError("verify_theorem: empty range");
    if (lo < 2) throw DomainError("verify_theorem: range must start at n >= 2");
    const auto [r, s] = theorem_orders(id.tag);
    TheoremReport report;
    report.id = id;
    report.checks = map_range(lo, hi, jobs, [&, r = r, s = s](Natural n) {
        TheoremCheck c;
        c.n = n;
        c.closed = eval_theorem(id, n);
        c.oracle = brute_convolution(r, s, n, SolutionSet::Bprime);
        c.pass = c.closed == Ratio(c.oracle);
        if (c.oracle != 0) {
            Ratio q = c.closed / Ratio(c.oracle);
            q.canonicalize();
            c.ratio = q;
        }
        return c;
    });
    for (const auto& c : report.checks) {
        if (!c.pass && !report.first_counterexample) report.first_counterexample = c.n;
        report.all_pass = report.all_pass && c.pass;
    }
    return report;
}

ClassicalCheck besge(Natural n) {
    if (n < 2) throw DomainError("besge_check: n must be >= 2");
    const auto nn = static_cast<I64>(n);
    ClassicalCheck c;
    c.lhs = sigma_convolution(1, 1, n);
    c.rhs = make_ratio(5 * sigma_k(3, nn) + (1 - 6 * nn) * sigma_k(1, nn), 12);
    return c;
}

ClassicalCheck glaisher(Natural n) {
    if (n < 2) throw DomainError("glaisher_check: n must be >= 2");
    const auto nn = static_cast<I64>(n);
    ClassicalCheck c;
    c.lhs = sigma_convolution(1, 3, n);
    c.rhs = make_ratio(21 * sigma_k(5, nn) + (10 - 30 * nn) * sigma_k(3, nn) - sigma_k(1, nn), 240);
    return c;
}

bool besge_check(Natural n) { return besge(n).holds(); }
bool glaisher_check(Natural n) { return glaisher(n).holds(); }

} // namespace cpconv
