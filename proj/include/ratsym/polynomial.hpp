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

#ifndef RATSYM_POLYNOMIAL_HPP
#define RATSYM_POLYNOMIAL_HPP

#include <algorithm>
#include <complex>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"

namespace ratsym {

/* scalar traits: the two coefficient domains are exact CycloNum and floating complex */

template <class T>
struct field_traits;

template <>
struct field_traits<CycloNum> {
    static constexpr bool exact = true;
    static CycloNum zero_like(const CycloNum& x) { return CycloNum::zero(x.order()); }
    static CycloNum one_like(const CycloNum& x) { return CycloNum::one(x.order()); }
    static CycloNum from_int(const CycloNum& like, long v) { return CycloNum(like.order(), Rational(v)); }
    static bool is_zero(const CycloNum& x) { return x.is_zero(); }
    static CycloNum conj(const CycloNum& x) { return x.conj(); }
    static Complex to_complex(const CycloNum& x) { return x.to_complex(); }
};

template <class R>
struct field_traits<std::complex<R>> {
    using C = std::complex<R>;
    static constexpr bool exact = false;
    static C zero_like(const C&) { return C(0); }
    static C one_like(const C&) { return C(1); }
    static C from_int(const C&, long v) { return C(static_cast<R>(v)); }
    static bool is_zero(const C& x) { return x == C(0); }
    static C conj(const C& x) { return std::conj(x); }
    static Complex to_complex(const C& x) { return Complex(static_cast<double>(x.real()), static_cast<double>(x.imag())); }
};

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial, coefficients in ascending powers, no trailing zeros.
template <class T>
class Polynomial {
    using traits = field_traits<T>;

   public:
    using value_type = T;

    explicit Polynomial(T zero = T()) : zero_(traits::zero_like(zero)) {}
    Polynomial(std::vector<T> coeffs, const T& zero) : c_(std::move(coeffs)), zero_(traits::zero_like(zero)) { prune(); }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}, c); }
    static Polynomial monomial(const T& c, int k) {
        std::vector<T> v(static_cast<size_t>(k) + 1, traits::zero_like(c));
        v.back() = c;
        return Polynomial(std::move(v), c);
    }
    /// The variable z in the field of `like`.
    static Polynomial identity(const T& like) { return monomial(traits::one_like(like), 1); }

    int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& zero() const noexcept { return zero_; }
    T one() const { return traits::one_like(zero_); }

    /// Coefficient of z^k; zero outside the stored range.
    T operator[](int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero_;
        return c_[static_cast<size_t>(k)];
    }
    const T& leading() const {
        if (c_.empty()) throw Error(Errc::InvalidArgument, "leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Zero-padded coefficient list of formal length deg + 1.
    std::vector<T> padded(int deg) const {
        std::vector<T> v(static_cast<size_t>(deg) + 1, zero_);
        for (size_t k = 0; k < c_.size() && k < v.size(); ++k) v[k] = c_[k];
        return v;
    }

    /// Lowest power with nonzero coefficient (0 for the zero polynomial).
    int valuation() const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (!traits::is_zero(c_[k])) return static_cast<int>(k);
        return 0;
    }

    T operator()(const T& x) const {
        T acc = zero_;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        prune();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        prune();
        return *this;
    }
    Polynomial& operator*=(const T& s) {
        if (traits::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_);
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (traits::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (traits::is_zero(b.c_[j])) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(r), a.zero_);
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int e) const {
        Polynomial r = constant(one());
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial(zero_);
        std::vector<T> r(c_.size() - 1, zero_);
        for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * traits::from_int(zero_, static_cast<long>(k));
        return Polynomial(std::move(r), zero_);
    }

    /// p(z^n).
    Polynomial substitute_power(int n) const {
        if (n < 1) throw Error(Errc::InvalidArgument, "substitute_power needs n >= 1");
        if (c_.empty()) return *this;
        std::vector<T> r((c_.size() - 1) * static_cast<size_t>(n) + 1, zero_);
        for (size_t k = 0; k < c_.size(); ++k) r[k * static_cast<size_t>(n)] = c_[k];
        return Polynomial(std::move(r), zero_);
    }

    /// Coefficient-wise complex conjugate.
    Polynomial conj_poly() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = traits::conj(v);
        return r;
    }

    /// z^deg * p(1/z) for a formal degree deg >= degree().
    Polynomial reversed(int deg) const {
        auto v = padded(deg);
        std::reverse(v.begin(), v.end());
        return Polynomial(std::move(v), zero_);
    }

    /// p(c z).
    Polynomial scale_variable(const T& c) const {
        Polynomial r = *this;
        T f = one();
        for (auto& v : r.c_) {
            v *= f;
            f *= c;
        }
        r.prune();
        return r;
    }

    /// Divide by z^k; requires valuation() >= k.
    Polynomial shift_down(int k) const {
        if (k <= 0) return *this;
        std::vector<T> r(c_.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(c_.size())), c_.end());
        return Polynomial(std::move(r), zero_);
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        T inv = one() / leading();
        return *this * inv;
    }

    /// Euclidean division; returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
        Polynomial rem = *this;
        if (degree() < d.degree()) return {Polynomial(zero_), rem};
        std::vector<T> q(static_cast<size_t>(degree() - d.degree()) + 1, zero_);
        const T inv = one() / d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            const int shift = rem.degree() - d.degree();
            T f = rem.leading() * inv;
            q[static_cast<size_t>(shift)] = f;
            for (size_t k = 0; k < d.c_.size(); ++k) {
                if (traits::is_zero(d.c_[k])) continue;
                rem.c_[k + static_cast<size_t>(shift)] -= f * d.c_[k];
            }
            // the leading term cancels exactly in exact arithmetic; drop it for floats too
            rem.c_.pop_back();
            rem.prune();
        }
        return {Polynomial(std::move(q), zero_), rem};
    }

    /// Exact quotient; throws if the remainder is nonzero.
    Polynomial exact_div(const Polynomial& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division is not exact");
        return q;
    }

    template <class F>
    auto map_coeffs(F&& f) const {
        using U = std::decay_t<decltype(f(std::declval<T>()))>;
        std::vector<U> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(f(v));
        return Polynomial<U>(std::move(r), f(zero_));
    }

   private:
    std::vector<T> c_;
    T zero_;

    void prune() {
        while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
    }
};

using Poly = Polynomial<CycloNum>;
using CPoly = Polynomial<Complex>;

/// Embed an exact polynomial into floating complex coefficients.
inline CPoly to_complex(const Poly& p) {
    return p.map_coeffs([](const CycloNum& c) { return c.to_complex(); });
}

/// Represent every coefficient in Q(zeta_m).
inline Poly rebase(const Poly& p, int m) {
    return p.map_coeffs([m](const CycloNum& c) { return c.rebase(m); });
}

/// Field order shared by the coefficients (1 when all are rational).
inline int field_order(const Poly& p) {
    int m = p.zero().order();
    for (const auto& c : p.coeffs()) m = std::lcm(m, c.order());
    return m;
}

/// Monic gcd. Euclid over the field with monic remainders to keep the rational coordinates small.
template <class T>
Polynomial<T> gcd(const Polynomial<T>& p, const Polynomial<T>& q) {
    if (p.is_zero() && q.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
    Polynomial<T> a = p.monic(), b = q.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Resultant at formal degrees (deg_p, deg_q): determinant of the Sylvester matrix, fraction-free (Bareiss).
template <class T>
T resultant(const Polynomial<T>& p, const Polynomial<T>& q, int deg_p, int deg_q) {
    using traits = field_traits<T>;
    if (deg_p < p.degree() || deg_q < q.degree())
        throw Error(Errc::InvalidArgument, "formal degree below actual degree");
    const T zero = p.zero();
    const int n = deg_p + deg_q;
    if (n == 0) return traits::one_like(zero);
    std::vector<std::vector<T>> m(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n), zero));
    // rows: deg_q shifted copies of p, then deg_p shifted copies of q; columns in descending powers
    for (int r = 0; r < deg_q; ++r)
        for (int k = 0; k <= deg_p; ++k) m[static_cast<size_t>(r)][static_cast<size_t>(r + deg_p - k)] = p[k];
    for (int r = 0; r < deg_p; ++r)
        for (int k = 0; k <= deg_q; ++k) m[static_cast<size_t>(deg_q + r)][static_cast<size_t>(r + deg_q - k)] = q[k];

    T prev = traits::one_like(zero);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        auto K = static_cast<size_t>(k);
        if (traits::is_zero(m[K][K])) {
            size_t piv = K + 1;
            while (piv < static_cast<size_t>(n) && traits::is_zero(m[piv][K])) ++piv;
            if (piv == static_cast<size_t>(n)) return zero;
            std::swap(m[K], m[piv]);
            negate = !negate;
        }
        for (size_t i = K + 1; i < static_cast<size_t>(n); ++i) {
            for (size_t j = K + 1; j < static_cast<size_t>(n); ++j)
                m[i][j] = (m[K][K] * m[i][j] - m[i][K] * m[K][j]) / prev;
            m[i][K] = zero;
        }
        prev = m[K][K];
    }
    T det = m[static_cast<size_t>(n) - 1][static_cast<size_t>(n) - 1];
    return negate ? -det : det;
}

/// Square-free decomposition (Yun): pairs (factor, multiplicity) with monic pairwise coprime factors.
template <class T>
std::vector<std::pair<Polynomial<T>, int>> squarefree_decomposition(const Polynomial<T>& f) {
    std::vector<std::pair<Polynomial<T>, int>> out;
    if (f.degree() < 1) return out;
    auto fm = f.monic();
    auto df = fm.derivative();
    auto a = gcd(fm, df);
    auto b = fm.exact_div(a);
    auto c = df.exact_div(a);
    auto d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        auto g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace ratsym

#endif  // RATSYM_POLYNOMIAL_HPP
