#pragma once

// Text grammar for field elements, theta-polynomials and rational functions.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' ['-'] integer)?
//   atom  := integer | 'w' | VAR | '(' expr ')'
//
// VAR is `T` for theta and `t` for the module variable. Integers are read
// mod p; `w` is the root of the declared modulus. Whitespace is ignored.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ratfunc.hpp"

namespace drinrel {

namespace detail {

class ExprParser {
public:
    ExprParser(const FieldPtr& f, std::string_view src, char var) : f_(f), s_(src), var_(var) {}

    RatFunc parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        RatFunc r = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc acc = term();
        while (true) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = unary();
        while (true) {
            skip();
            const std::size_t at = pos_;
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                RatFunc d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (!accept('^')) return base;
        skip();
        const bool negative = accept('-');
        skip();
        const std::size_t at = pos_;
        const long n = integer();
        if (negative && base.is_zero()) throw ParseError("division by zero", at);
        return base.pow(negative ? -n : n);
    }

    long integer() {
        skip();
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000L) throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected integer", start);
        return v;
    }

    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            const auto p = static_cast<std::int64_t>(f_->p());
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = (v * 10 + (s_[pos_] - '0')) % p;
                ++pos_;
            }
            return RatFunc::constant(f_, f_->from_int(v));
        }
        if (c == var_) {
            ++pos_;
            return RatFunc::theta(f_);
        }
        if (c == 'w') {
            if (f_->e() == 1) throw ParseError("generator 'w' needs an extension field (e > 1)", pos_);
            ++pos_;
            return RatFunc::constant(f_, f_->generator());
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    const FieldPtr& f_;
    std::string_view s_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an element of F_q(theta), e.g. "(T^2 + 1)/(T)".
inline RatFunc parse_ratfunc(const FieldPtr& f, std::string_view src) {
    return detail::ExprParser(f, src, ThetaVar::symbol).parse();
}

/// Parse a polynomial in theta; rejects proper fractions.
inline ThetaPoly parse_theta_poly(const FieldPtr& f, std::string_view src) {
    RatFunc r = parse_ratfunc(f, src);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial", 0);
    return r.num();
}

/// Parse a polynomial in t over F_q, e.g. "t^2 + w*t + 1".
inline TPoly parse_tpoly(const FieldPtr& f, std::string_view src) {
    RatFunc r = detail::ExprParser(f, src, TVar::symbol).parse();
    if (!r.is_polynomial()) throw ParseError("expected a polynomial in t", 0);
    return TPoly(f, r.num().coeffs());
}

/// Parse ell comma-separated t-polynomials.
inline std::vector<TPoly> parse_tpoly_list(const FieldPtr& f, std::string_view src) {
    std::vector<TPoly> out;
    std::size_t start = 0, depth = 0;
    for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i < src.size() && src[i] == '(') ++depth;
        if (i < src.size() && src[i] == ')' && depth > 0) --depth;
        if (i == src.size() || (src[i] == ',' && depth == 0)) {
            try {
                out.push_back(parse_tpoly(f, src.substr(start, i - start)));
            } catch (const ParseError& e) {
                throw ParseError("entry " + std::to_string(out.size() + 1) + ": " + e.message(),
                                 start + e.position());
            }
            start = i + 1;
        }
    }
    return out;
}

/// Parse a modulus in `w` over F_p into low-to-high integer coefficients.
inline std::vector<std::uint32_t> parse_modulus(std::uint64_t p, std::string_view src) {
    FieldPtr fp = Field::prime(p);
    RatFunc r = detail::ExprParser(fp, src, 'w').parse();
    if (!r.is_polynomial()) throw ParseError("modulus must be a polynomial", 0);
    std::vector<std::uint32_t> out;
    for (Fq c : r.num().coeffs()) out.push_back(c.raw);
    return out;
}

}  // namespace drinrel
