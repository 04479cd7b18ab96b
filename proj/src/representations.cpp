#include "cpconv/representations.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "cpconv/errors.hpp"
#include "cpconv/lattice.hpp"
#include "cpconv/parallel.hpp"

namespace cpconv {

namespace {

SolutionSet set_for(Counter c) {
    return (c == Counter::L || c == Counter::M) ? SolutionSet::B : SolutionSet::Bprime;
}

bool uses_coprime_splits(Counter c) { return c == Counter::M || c == Counter::Mprime; }

Natural to_natural(const Integer& v) {
    if (v < 0 || !v.fits_ulong_p()) throw ResourceError("split total exceeds machine range");
    return v.get_ui();
}

// Candidate (k, e, a, c) tuples for one side: sum of e over e | total.
Integer candidate_count(Natural total, bool coprime) {
    if (!coprime) return Integer(total);
    Integer sum = 0;
    for (Natural e : divisors(total)) sum += e;
    return sum;
}

class SideCounter {
public:
    explicit SideCounter(bool coprime) : coprime_(coprime) {}

    Integer operator()(Natural total) {
        if (auto it = memo_.find(total); it != memo_.end()) return it->second;
        Integer count = 0;
        if (!coprime_) {
            count = count_splits(total);
        } else {
            // k * e = total; k is determined by e.
            for (Natural e : divisors(total)) count += count_coprime_splits(e);
        }
        memo_.emplace(total, count);
        return count;
    }

private:
    bool coprime_;
    std::unordered_map<Natural, Integer> memo_;
};

} // namespace

std::string_view to_string(Counter c) {
    switch (c) {
    case Counter::L: return "L";
    case Counter::M: return "M";
    case Counter::Lprime: return "Lp";
    case Counter::Mprime: return "Mp";
    }
    return "?";
}

Counter parse_counter(std::string_view text) {
    if (text == "L") return Counter::L;
    if (text == "M") return Counter::M;
    if (text == "Lp" || text == "Lprime" || text == "L'") return Counter::Lprime;
    if (text == "Mp" || text == "Mprime" || text == "M'") return Counter::Mprime;
    throw UsageError("unknown counter '" + std::string(text) + "' (expected L, M, Lp or Mp)");
}

CountSpec::CountSpec(Counter which, unsigned r, unsigned s, Natural n)
    : which_(which), r_(r), s_(s), n_(n) {
    if (r == 0 || s == 0) throw DomainError("count: r and s must be >= 1");
    if (n < 2) throw DomainError("count: n must be >= 2");
}

Integer count_splits(const Integer& total) {
    if (total <= 0) return 0;
    const Natural t = to_natural(total);
    Integer count = 0;
    for (Natural a = 0; a < t; ++a) {
        const Natural c = t - a;
        if (c >= 1) ++count;
    }
    return count;
}

Integer count_coprime_splits(const Integer& total) {
    if (total <= 0) return 0;
    const Natural t = to_natural(total);
    Integer count = 0;
    for (Natural a = 0; a < t; ++a) {
        if (std::gcd(a, t - a) == 1) ++count;
    }
    return count;
}

Integer count_fast(const CountSpec& spec) {
    Integer total = 0;
    enumerate(spec.n(), set_for(spec.which()), [&](const Quadruple& q) {
        total += ipow(q.a, spec.r()) * ipow(q.b, spec.s());
    });
    return total;
}

Integer count_raw(const CountSpec& spec, std::uint64_t budget) {
    const SolutionSet set = set_for(spec.which());
    const bool coprime = uses_coprime_splits(spec.which());

    // The tuple set over one quadruple is the product of its left and right
    // split sets, so the candidate count is the product of the side sizes.
    Integer candidates = 0;
    enumerate(spec.n(), set, [&](const Quadruple& q) {
        const Natural left = to_natural(ipow(q.a, spec.r()));
        const Natural right = to_natural(ipow(q.b, spec.s()));
        candidates += candidate_count(left, coprime) * candidate_count(right, coprime);
    });
    if (candidates > Integer(static_cast<unsigned long>(budget))) {
        throw ResourceError("raw enumeration needs " + candidates.get_str() +
                            " tuples, budget is " + std::to_string(budget));
    }

    SideCounter side(coprime);
    Integer total = 0;
    enumerate(spec.n(), set, [&](const Quadruple& q) {
        total += side(to_natural(ipow(q.a, spec.r()))) * side(to_natural(ipow(q.b, spec.s())));
    });
    return total;
}

LmReport verify_lm(unsigned r, unsigned s, Natural lo, Natural hi, std::uint64_t budget,
                   unsigned jobs, bool with_raw) {
    if (lo > hi) throw UsageError("verify_lm: empty range");
    if (lo < 2) throw DomainError("verify_lm: range must start at n >= 2");
    constexpr Counter kCounters[] = {Counter::L, Counter::M, Counter::Lprime, Counter::Mprime};

    LmReport report;
    report.r = r;
    report.s = s;
    report.rows = map_range(lo, hi, jobs, [&](Natural n) {
        LmRow row;
        row.n = n;
        row.sigma_convolution = sigma_convolution(r, s, n);
        row.sigma_prime_convolution = sigma_prime_convolution(r, s, n);
        for (Counter c : kCounters) {
            const CountSpec spec(c, r, s, n);
            const auto i = static_cast<std::size_t>(c);
            row.fast[i] = count_fast(spec);
            if (!with_raw) continue;
            try {
                row.raw[i] = count_raw(spec, budget);
            } catch (const ResourceError&) {
                row.raw_skipped = true;
            }
        }
        const auto& f = row.fast;
        bool ok = f[0] == row.sigma_convolution && f[1] == row.sigma_convolution &&
                  f[2] == row.sigma_prime_convolution && f[3] == row.sigma_prime_convolution;
        for (std::size_t i = 0; i < 4; ++i) {
            if (row.raw[i]) ok = ok && *row.raw[i] == f[i];
        }
        row.pass = ok;
        return row;
    });
    for (const auto& row : report.rows) {
        report.all_pass = report.all_pass && row.pass;
        if (row.raw_skipped) ++report.skipped;
    }
    return report;
}

} // namespace cpconv
