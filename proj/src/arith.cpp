#include "cpconv/arith.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "cpconv/errors.hpp"

namespace cpconv {

namespace {

void require_positive(Natural n, const char* op) {
    if (n == 0) {
        throw DomainError(std::string(op) + ": argument must be >= 1");
    }
}

Factorization trial_divide(Natural n) {
    std::vector<PrimePower> parts;
    auto take = [&](Natural p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) parts.push_back({p, e});
    };
    take(2);
    take(3);
    take(5);
    // Residues mod 30 coprime to 30, starting from 7.
    static constexpr std::array<Natural, 8> gaps{4, 2, 4, 2, 4, 6, 2, 6};
    Natural p = 7;
    for (std::size_t i = 0; p <= n / p; p += gaps[i], i = (i + 1) % gaps.size()) {
        take(p);
    }
    if (n > 1) parts.push_back({n, 1});
    return Factorization(std::move(parts));
}

class FactorMemo {
public:
    Factorization get(Natural n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(n); it != cache_.end()) return it->second;
        }
        Factorization f = trial_divide(n);
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(n, std::move(f)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<Natural, Factorization> cache_;
};

class BernoulliMemo {
public:
    Ratio get(unsigned j) {
        std::lock_guard lock(mutex_);
        while (table_.size() <= j) {
            const auto m = static_cast<unsigned>(table_.size());
            Ratio acc = 0;
            for (unsigned k = 0; k < m; ++k) {
                acc += Ratio(binomial(m + 1, k)) * table_[k];
            }
            acc /= -static_cast<long>(m + 1);
            acc.canonicalize();
            table_.push_back(acc);
        }
        return table_[j];
    }

private:
    std::mutex mutex_;
    std::vector<Ratio> table_{Ratio(1)};
};

} // namespace

Factorization::Factorization(std::vector<PrimePower> parts) : parts_(std::move(parts)) {}

bool Factorization::squarefree() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

Natural Factorization::value() const noexcept {
    Natural v = 1;
    for (const auto& [p, e] : parts_) {
        for (unsigned i = 0; i < e; ++i) v *= p;
    }
    return v;
}

Ratio make_ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("make_ratio: zero denominator");
    Ratio q(num, den);
    q.canonicalize();
    return q;
}

Integer ipow(Natural base, unsigned exponent) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

Integer ipow(std::int64_t base, unsigned exponent) {
    Integer r;
    const Integer b(static_cast<long>(base));
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Factorization factorize(Natural n) {
    require_positive(n, "factorize");
    static FactorMemo memo;
    return memo.get(n);
}

std::vector<Natural> divisors(Natural n) {
    require_positive(n, "divisors");
    std::vector<Natural> out{1};
    for (const auto& [p, e] : factorize(n).parts()) {
        const std::size_t base = out.size();
        Natural pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(Natural n) {
    require_positive(n, "mobius");
    const Factorization f = factorize(n);
    if (!f.squarefree()) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

Natural totient(Natural n) {
    require_positive(n, "totient");
    Natural phi = n;
    for (const auto& pp : factorize(n).parts()) {
        phi = phi / pp.prime * (pp.prime - 1);
    }
    return phi;
}

Integer sigma_k(unsigned k, std::int64_t n) {
    if (n <= 0) return 0;
    Integer total = 0;
    for (Natural d : divisors(static_cast<Natural>(n))) total += ipow(d, k);
    return total;
}

Ratio bernoulli(unsigned j) {
    static BernoulliMemo memo;
    return memo.get(j);
}

} // namespace cpconv
