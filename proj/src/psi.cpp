#include "cpconv/psi.hpp"

#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cpconv/errors.hpp"

namespace cpconv {

namespace {

void require_power_sum_domain(Natural n) {
    if (n < 2) throw DomainError("coprime_power_sum: n must be >= 2");
}

Integer to_integer(const Ratio& q, const char* what) {
    if (q.get_den() != 1) {
        throw std::logic_error(std::string(what) + ": non-integral value " + q.get_str());
    }
    return q.get_num();
}

ClosedFormTerm term(long num, long den, unsigned n_power, int psi_order) {
    return {make_ratio(num, den), n_power, psi_order};
}

// Coprime-residue power sums S_0 .. S_12 in the psi basis.
const std::array<ClosedForm, kClosedTableMaxK + 1>& closed_table() {
    static const std::array<ClosedForm, kClosedTableMaxK + 1> table{
        ClosedForm{term(1, 1, 1, -1)},
        ClosedForm{term(1, 2, 2, -1)},
        ClosedForm{term(1, 3, 3, -1), term(1, 6, 1, 1)},
        ClosedForm{term(1, 4, 4, -1), term(1, 4, 2, 1)},
        ClosedForm{term(1, 5, 5, -1), term(1, 3, 3, 1), term(-1, 30, 1, 3)},
        ClosedForm{term(1, 6, 6, -1), term(5, 12, 4, 1), term(-1, 12, 2, 3)},
        ClosedForm{term(1, 7, 7, -1), term(1, 2, 5, 1), term(-1, 6, 3, 3), term(1, 42, 1, 5)},
        ClosedForm{term(1, 8, 8, -1), term(7, 12, 6, 1), term(-7, 24, 4, 3), term(7, 84, 2, 5)},
        ClosedForm{term(1, 9, 9, -1), term(2, 3, 7, 1), term(-7, 15, 5, 3), term(2, 9, 3, 5),
                   term(-1, 30, 1, 7)},
        ClosedForm{term(1, 10, 10, -1), term(3, 4, 8, 1), term(-7, 10, 6, 3), term(1, 2, 4, 5),
                   term(-3, 20, 2, 7)},
        ClosedForm{term(1, 11, 11, -1), term(5, 6, 9, 1), term(-1, 1, 7, 3), term(1, 1, 5, 5),
                   term(-1, 2, 3, 7), term(5, 66, 1, 9)},
        ClosedForm{term(1, 12, 12, -1), term(11, 12, 10, 1), term(-11, 8, 8, 3),
                   term(11, 6, 6, 5), term(-11, 8, 4, 7), term(5, 12, 2, 9)},
        ClosedForm{term(1, 13, 13, -1), term(1, 1, 11, 1), term(-11, 6, 9, 3), term(22, 7, 7, 5),
                   term(-33, 10, 5, 7), term(5, 3, 3, 9), term(-691, 2730, 1, 11)},
    };
    return table;
}

} // namespace

PsiOrder::PsiOrder(int s) : s_(s) {
    if (s == 0) throw DomainError("psi: order s must be nonzero");
}

Ratio psi(PsiOrder s, Natural n) {
    if (n == 0) throw DomainError("psi: n must be >= 1");
    const int order = s.value();
    const auto magnitude = static_cast<unsigned>(order < 0 ? -order : order);
    Ratio total = 0;
    for (Natural d : divisors(n)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        const Integer dp = ipow(d, magnitude);
        const Ratio term = order > 0 ? Ratio(dp) : make_ratio(1, dp);
        if (mu > 0) total += term;
        else total -= term;
    }
    total.canonicalize();
    return total;
}

Ratio psi_product(PsiOrder s, Natural n) {
    if (n == 0) throw DomainError("psi: n must be >= 1");
    const int order = s.value();
    const auto magnitude = static_cast<unsigned>(order < 0 ? -order : order);
    Ratio product = 1;
    for (const auto& pp : factorize(n).parts()) {
        const Integer pe = ipow(pp.prime, magnitude);
        product *= order > 0 ? Ratio(1 - pe) : Ratio(1) - make_ratio(1, pe);
    }
    product.canonicalize();
    return product;
}

ClosedForm::ClosedForm(std::initializer_list<ClosedFormTerm> terms) : terms_(terms) {}

ClosedForm::ClosedForm(std::vector<ClosedFormTerm> terms) : terms_(std::move(terms)) {}

Ratio ClosedForm::evaluate(Natural n) const {
    Ratio total = 0;
    for (const auto& t : terms_) {
        total += t.coefficient * Ratio(ipow(n, t.n_power)) * psi(PsiOrder(t.psi_order), n);
    }
    total.canonicalize();
    return total;
}

ClosedForm ClosedForm::scaled(const Ratio& factor) const {
    std::vector<ClosedFormTerm> out = terms_;
    for (auto& t : out) {
        t.coefficient *= factor;
        t.coefficient.canonicalize();
    }
    return ClosedForm(std::move(out));
}

std::string ClosedForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = sgn(t.coefficient) < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        os << Ratio(abs(t.coefficient)).get_str() << "*n^" << t.n_power << "*psi_" << t.psi_order
           << "(n)";
    }
    return os.str();
}

std::string_view to_string(PowerSumMethod m) {
    switch (m) {
    case PowerSumMethod::direct: return "direct";
    case PowerSumMethod::moebius_faulhaber: return "moebius";
    case PowerSumMethod::closed_table: return "closed";
    }
    return "?";
}

PowerSumMethod parse_power_sum_method(std::string_view text) {
    if (text == "direct") return PowerSumMethod::direct;
    if (text == "moebius" || text == "moebius_faulhaber") return PowerSumMethod::moebius_faulhaber;
    if (text == "closed" || text == "closed_table") return PowerSumMethod::closed_table;
    throw UsageError("unknown power-sum method '" + std::string(text) + "'");
}

Integer faulhaber(unsigned k, Natural upper) {
    if (upper == 0) return 0;
    Ratio total = 0;
    for (unsigned j = 0; j <= k; ++j) {
        // (-1)^j B_j turns the B_1 = -1/2 convention into the sum ending at `upper`.
        Ratio b = bernoulli(j);
        if (j % 2 == 1) b = -b;
        if (b == 0) continue;
        total += Ratio(binomial(k + 1, j)) * b * Ratio(ipow(upper, k + 1 - j));
    }
    total /= static_cast<unsigned long>(k + 1);
    total.canonicalize();
    return to_integer(total, "faulhaber");
}

Integer moebius_faulhaber_sum(unsigned k, Natural n, bool upper_minus_one) {
    if (n == 0) throw DomainError("moebius_faulhaber_sum: n must be >= 1");
    Integer total = 0;
    for (Natural d : divisors(n)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        const Natural upper = n / d - (upper_minus_one ? 1 : 0);
        const Integer term = ipow(d, k) * faulhaber(k, upper);
        if (mu > 0) total += term;
        else total -= term;
    }
    return total;
}

const ClosedForm& closed_power_sum(unsigned k) {
    if (k > kClosedTableMaxK) {
        throw UnsupportedError("closed power-sum table covers 0 <= k <= 12, got k = " +
                               std::to_string(k));
    }
    return closed_table()[k];
}

Integer coprime_power_sum(unsigned k, Natural n, PowerSumMethod method) {
    require_power_sum_domain(n);
    switch (method) {
    case PowerSumMethod::direct: {
        Integer total = 0;
        for (Natural t = 1; t < n; ++t) {
            if (std::gcd(t, n) == 1) total += ipow(t, k);
        }
        return total;
    }
    case PowerSumMethod::moebius_faulhaber:
        return moebius_faulhaber_sum(k, n);
    case PowerSumMethod::closed_table:
        return to_integer(closed_power_sum(k).evaluate(n), "closed power sum");
    }
    throw UsageError("unknown power-sum method");
}

} // namespace cpconv
