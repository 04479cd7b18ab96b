#include "cpconv/lattice.hpp"

#include <algorithm>
#include <string>

namespace cpconv {

std::string_view to_string(SolutionSet set) {
    return set == SolutionSet::B ? "B" : "Bprime";
}

SolutionSet parse_solution_set(std::string_view text) {
    if (text == "B") return SolutionSet::B;
    if (text == "Bprime" || text == "Bp" || text == "B'") return SolutionSet::Bprime;
    throw UsageError("unknown solution set '" + std::string(text) + "' (expected B or Bprime)");
}

Integer sigma_prime(unsigned r, unsigned s, std::int64_t m, std::int64_t n) {
    if (m <= 0 || n <= 0) return 0;
    const auto mm = static_cast<Natural>(m);
    const auto nn = static_cast<Natural>(n);
    const std::vector<Natural> dm = divisors(mm);
    const std::vector<Natural> dn = divisors(nn);
    Integer total = 0;
    for (Natural d : dm) {
        for (Natural e : dn) {
            if (std::gcd(d, e) == 1 && std::gcd(mm / d, nn / e) == 1) {
                total += ipow(d, r) * ipow(e, s);
            }
        }
    }
    return total;
}

Integer brute_convolution(unsigned r, unsigned s, Natural n, SolutionSet set) {
    Integer total = 0;
    if (set == SolutionSet::Bprime) {
        enumerate(n, set, [&](const Quadruple& q) { total += ipow(q.x, r) * ipow(q.y, s); });
    } else {
        enumerate(n, set, [&](const Quadruple& q) { total += ipow(q.a, r) * ipow(q.b, s); });
    }
    return total;
}

Integer sigma_prime_convolution(unsigned r, unsigned s, Natural n) {
    if (n < 2) throw DomainError("sigma_prime_convolution: n must be >= 2");
    Integer total = 0;
    for (Natural m = 1; m < n; ++m) {
        total += sigma_prime(r, s, static_cast<std::int64_t>(m), static_cast<std::int64_t>(n - m));
    }
    return total;
}

Integer sigma_convolution(unsigned r, unsigned s, Natural n) {
    if (n < 2) throw DomainError("sigma_convolution: n must be >= 2");
    Integer total = 0;
    for (Natural m = 1; m < n; ++m) {
        total += sigma_k(r, static_cast<std::int64_t>(m)) *
                 sigma_k(s, static_cast<std::int64_t>(n - m));
    }
    return total;
}

PreIdentityReport check_pre_identity(unsigned r, unsigned s, Natural n) {
    if (n < 2) throw DomainError("check_pre_identity: n must be >= 2");
    PreIdentityReport report;
    report.r = r;
    report.s = s;
    report.n = n;
    auto& v = report.values;
    v[0] = sigma_prime_convolution(r, s, n);
    v[1] = sigma_prime_convolution(s, r, n);
    for (std::size_t i = 2; i < 6; ++i) v[i] = 0;
    enumerate(n, SolutionSet::Bprime, [&](const Quadruple& q) {
        v[2] += ipow(q.x, r) * ipow(q.y, s);
        v[3] += ipow(q.x, s) * ipow(q.y, r);
        v[4] += ipow(q.a, r) * ipow(q.b, s);
        v[5] += ipow(q.a, s) * ipow(q.b, r);
    });
    report.all_equal =
        std::all_of(v.begin(), v.end(), [&](const Integer& value) { return value == v[0]; });
    return report;
}

} // namespace cpconv
