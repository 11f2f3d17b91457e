/*
   Copyright 2026 The ratsym Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   Map expressions: rationals, i, w(m,k) = zeta_m^k, the variable z,
   + - * / ^ and parentheses.

   Precedence: ^ (right-associative, integer constant exponents) over unary
   minus over * / over + -. Values are rational functions over Q(zeta_m);
   operands from different fields meet in the lcm field.
*/

#ifndef RATSYM_EXPR_HPP
#define RATSYM_EXPR_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "rational_map.hpp"

namespace ratsym {

/// Error carrying the byte offset of the offending token.
class ParseError : public Error {
   public:
    ParseError(Errc c, size_t offset, const std::string& msg)
        : Error(c, msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    size_t offset() const { return offset_; }

   private:
    size_t offset_;
};

namespace detail {

/// Unreduced quotient of polynomials used while evaluating an expression.
struct RatFunc {
    Poly num, den;

    static RatFunc constant(const CycloNum& c) {
        return {Poly::constant(c), Poly::constant(CycloNum::one(c.order()))};
    }
    int order() const { return std::lcm(field_order(num), field_order(den)); }
    bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }
    CycloNum constant_value() const { return num[0] / den[0]; }

    RatFunc rebased(int m) const { return {rebase(num, m), rebase(den, m)}; }
    RatFunc reduced() const {
        if (num.is_zero()) return {num, Poly::constant(CycloNum::one(order()))};
        const Poly g = gcd(num, den);
        Poly n = num.exact_div(g), d = den.exact_div(g);
        const CycloNum lead = d.leading();
        return {n * lead.inverse(), d * lead.inverse()};
    }
};

inline std::pair<RatFunc, RatFunc> common_field(const RatFunc& x, const RatFunc& y) {
    const int m = std::lcm(x.order(), y.order());
    return {x.rebased(m), y.rebased(m)};
}

inline RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    auto [a, b] = common_field(x, y);
    return RatFunc{a.num * b.den + b.num * a.den, a.den * b.den}.reduced();
}
inline RatFunc operator-(const RatFunc& x) { return {-x.num, x.den}; }
inline RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }
inline RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    auto [a, b] = common_field(x, y);
    return RatFunc{a.num * b.num, a.den * b.den}.reduced();
}
inline RatFunc reciprocal(const RatFunc& x) {
    if (x.num.is_zero()) throw Error(Errc::DivisionByZero, "division by zero expression");
    return RatFunc{x.den, x.num}.reduced();
}

class ExprParser {
   public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

   private:
    std::string_view s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(Errc::SyntaxError, pos_, what); }

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
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (accept('+')) v = v + term();
            else if (accept('-')) v = v - term();
            else return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            if (accept('*')) v = v * unary();
            else if (accept('/')) {
                const size_t at = pos_;
                const RatFunc d = unary();
                if (d.num.is_zero()) throw ParseError(Errc::DivisionByZero, at, "division by zero");
                v = v * reciprocal(d);
            } else {
                return v;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        skip();
        if (!accept('^')) return base;
        skip();
        const size_t at = pos_;
        const RatFunc e = unary_exponent();
        if (!e.is_constant()) throw ParseError(Errc::NonRationalExpression, at, "exponent depends on z");
        const CycloNum c = e.constant_value();
        if (!c.is_rational() || c.coords()[0].get_den() != 1)
            throw ParseError(Errc::NonRationalExpression, at, "exponent must be an integer");
        const Rational& q = c.coords()[0];
        if (abs(q) > 100000) throw ParseError(Errc::InvalidArgument, at, "exponent too large");
        const long k = q.get_num().get_si();
        if (k < 0 && base.num.is_zero()) throw ParseError(Errc::DivisionByZero, at, "zero to a negative power");
        const RatFunc b = k >= 0 ? base : reciprocal(base);
        const long n = k >= 0 ? k : -k;
        return RatFunc{b.num.pow(static_cast<int>(n)), b.den.pow(static_cast<int>(n))}.reduced();
    }

    // the exponent of ^ binds like a signed power (so 2^-1 and 2^3^2 work)
    RatFunc unary_exponent() {
        if (accept('-')) return -unary_exponent();
        if (accept('+')) return unary_exponent();
        return power();
    }

    RatFunc primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return RatFunc::constant(CycloNum(number()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string_view id = s_.substr(start, pos_ - start);
            if (id == "z") return {Poly::identity(CycloNum(0)), Poly::constant(CycloNum(1))};
            if (id == "i") return RatFunc::constant(i_unit());
            if (id == "w") return root_call(start);
            pos_ = start;
            fail("unknown identifier '" + std::string(id) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rational number() {
        const size_t start = pos_;
        std::string digits;
        long scale = 0;
        bool dot = false;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
            if (s_[pos_] == '.') {
                if (dot) fail("malformed number");
                dot = true;
            } else {
                digits += s_[pos_];
                if (dot) ++scale;
            }
            ++pos_;
        }
        if (digits.empty()) {
            pos_ = start;
            fail("malformed number");
        }
        Rational q(mpz_class(digits, 10), 1);
        if (scale > 0) {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
            q /= Rational(den);
        }
        q.canonicalize();
        return q;
    }

    long integer_arg() {
        skip();
        bool neg = accept('-');
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("integer too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    RatFunc root_call(size_t start) {
        expect('(');
        const long m = integer_arg();
        expect(',');
        const long k = integer_arg();
        expect(')');
        if (m < 1 || m > 1000) throw ParseError(Errc::InvalidArgument, start, "w(m,k) needs 1 <= m <= 1000");
        return RatFunc::constant(root_of_unity(static_cast<int>(m), k));
    }
};

}  // namespace detail

/// Parse and reduce a map expression.
inline RationalMap parse_map_expr(std::string_view text) {
    const auto v = detail::ExprParser(text).parse();
    return RationalMap::reduce(v.num, v.den);
}

/// Parse an expression that must not involve z.
inline CycloNum parse_constant(std::string_view text) {
    const auto v = detail::ExprParser(text).parse();
    if (!v.is_constant()) throw ParseError(Errc::NonRationalExpression, 0, "constant expected");
    return v.constant_value();
}

/// Split at commas outside parentheses (w(m,k) contains one).
inline std::vector<std::string> split_top_level(std::string_view text, char sep = ',') {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

namespace detail {

inline std::string poly_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string mono = k == 0 ? "" : k == 1 ? "z" : "z^" + std::to_string(k);
        if (mono.empty()) out += "(" + p[k].to_string() + ")";
        else if (p[k].is_one()) out += mono;
        else out += "(" + p[k].to_string() + ")*" + mono;
    }
    return out;
}

}  // namespace detail

/// Expression text that parses back to the same map.
inline std::string print_map_expr(const RationalMap& f) {
    const std::string num = detail::poly_text(f.numer());
    if (f.denom().degree() == 0 && f.denom()[0].is_one()) return num;
    return "(" + num + ")/(" + detail::poly_text(f.denom()) + ")";
}

}  // namespace ratsym

#endif  // RATSYM_EXPR_HPP
