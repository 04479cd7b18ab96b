#include "cpconv/poly4.hpp"

#include <cctype>
#include <sstream>

#include "cpconv/errors.hpp"

namespace cpconv {

namespace {

constexpr std::string_view kVariables = "abxy";

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly4 run() {
        skip_space();
        if (pos_ == text_.size()) fail("empty polynomial");
        Poly4 out;
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            skip_space();
            parse_term(sign, out);
        }
        return out;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }

    void skip_space() {
        while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw UsageError("malformed polynomial at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string digits() {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
        return d;
    }

    void parse_term(int sign, Poly4& out) {
        Integer coefficient = 1;
        bool seen_anything = false;
        if (const std::string d = digits(); !d.empty()) {
            coefficient = Integer(d);
            seen_anything = true;
        }
        Poly4::Exponents exps{0, 0, 0, 0};
        while (true) {
            skip_space();
            if (peek() == '*') {
                if (!seen_anything) fail("'*' without a left operand");
                get();
                skip_space();
                if (kVariables.find(peek()) == std::string_view::npos) fail("expected variable after '*'");
            }
            const auto slot = kVariables.find(peek());
            if (peek() == '\0' || slot == std::string_view::npos) break;
            get();
            unsigned e = 1;
            skip_space();
            if (peek() == '^') {
                get();
                skip_space();
                const std::string d = digits();
                if (d.empty()) fail("expected exponent after '^'");
                if (d.size() > 4) fail("exponent too large");
                e = static_cast<unsigned>(std::stoul(d));
            }
            exps[slot] += e;
            seen_anything = true;
        }
        if (!seen_anything) fail("expected coefficient or variable");
        out.add_term(sign * coefficient, exps);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int parity_sign(unsigned e, int s) { return (s < 0 && e % 2 == 1) ? -1 : 1; }

} // namespace

Poly4 Poly4::parse(std::string_view text) { return Parser(text).run(); }

Poly4 Poly4::monomial(const Integer& coefficient, Exponents exponents) {
    Poly4 p;
    p.add_term(coefficient, exponents);
    return p;
}

void Poly4::add_term(const Integer& coefficient, Exponents exponents) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer Poly4::evaluate(std::int64_t a, std::int64_t b, std::int64_t x, std::int64_t y) const {
    const std::array<std::int64_t, 4> point{a, b, x, y};
    Integer total = 0;
    for (const auto& [exps, c] : terms_) {
        Integer term = c;
        for (std::size_t v = 0; v < 4; ++v) {
            if (exps[v] == 0) continue;
            if (point[v] == 0) {
                term = 0;
                break;
            }
            term *= ipow(point[v], exps[v]);
        }
        total += term;
    }
    return total;
}

Poly4 Poly4::swapped() const {
    Poly4 out;
    for (const auto& [e, c] : terms_) out.add_term(c, {e[2], e[3], e[0], e[1]});
    return out;
}

Poly4 Poly4::sign_flipped(int sa, int sb, int sx, int sy) const {
    Poly4 out;
    for (const auto& [e, c] : terms_) {
        const int sign = parity_sign(e[0], sa) * parity_sign(e[1], sb) * parity_sign(e[2], sx) *
                         parity_sign(e[3], sy);
        out.add_term(sign * c, e);
    }
    return out;
}

Poly4& Poly4::operator+=(const Poly4& other) {
    for (const auto& [e, c] : other.terms_) add_term(c, e);
    return *this;
}

Poly4& Poly4::operator-=(const Poly4& other) {
    for (const auto& [e, c] : other.terms_) add_term(-c, e);
    return *this;
}

std::string Poly4::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        os << Integer(abs(c)).get_str();
        for (std::size_t v = 0; v < 4; ++v) {
            if (e[v] > 0) os << ' ' << kVariables[v] << '^' << e[v];
        }
    }
    return os.str();
}

bool symmetry_holds(const Poly4& f) {
    const Poly4 swapped = f.swapped();
    const Poly4 lhs = f - swapped;
    // f(x,y,-a,-b) is swapped() evaluated at (-a,-b,x,y).
    const Poly4 rhs = f.sign_flipped(-1, -1, 1, 1) - swapped.sign_flipped(-1, -1, 1, 1);
    return (lhs - rhs).is_zero();
}

Poly4 random_symmetric_poly(std::mt19937_64& rng, unsigned max_exponent, unsigned max_terms) {
    std::uniform_int_distribution<unsigned> exp_dist(0, max_exponent);
    std::uniform_int_distribution<unsigned> count_dist(1, max_terms);
    std::uniform_int_distribution<long> coeff_dist(-9, 9);

    auto random_coefficient = [&] {
        long c = 0;
        while (c == 0) c = coeff_dist(rng);
        return Integer(c);
    };
    auto random_exponents = [&] {
        return Poly4::Exponents{exp_dist(rng), exp_dist(rng), exp_dist(rng), exp_dist(rng)};
    };

    Poly4 f;
    while (f.is_zero()) {
        Poly4 h;
        for (unsigned i = count_dist(rng); i > 0; --i) {
            h.add_term(random_coefficient(), random_exponents());
        }
        f = h + h.swapped();
        for (unsigned i = count_dist(rng); i > 0; --i) {
            Poly4::Exponents e = random_exponents();
            if ((e[0] + e[1]) % 2 == 1) e[1] += 1;
            if ((e[2] + e[3]) % 2 == 1) e[3] += 1;
            f.add_term(random_coefficient(), e);
        }
    }
    return f;
}

} // namespace cpconv
