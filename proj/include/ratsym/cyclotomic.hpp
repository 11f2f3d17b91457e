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
   Exact arithmetic in cyclotomic fields Q(zeta_m).

   An element is stored by its rational coordinates over the power basis
   1, zeta, ..., zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial. The
   representation is canonical, so equality is coordinate equality.
*/

#ifndef RATSYM_CYCLOTOMIC_HPP
#define RATSYM_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace ratsym {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline int totient(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

/// Powers zeta_m^k (0 <= k < m) reduced to the power basis; integer coordinates.
struct CycloTables {
    int m = 1;
    int phi = 1;
    std::vector<std::vector<long long>> power;
};

inline std::vector<long long> cyclotomic_polynomial(int m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, exact division over Z.
    std::vector<long long> num(static_cast<size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto den = cyclotomic_polynomial(d);
        // den is monic; long division
        std::vector<long long> q(num.size() - den.size() + 1, 0);
        for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
            long long c = num[static_cast<size_t>(i)];
            size_t qi = static_cast<size_t>(i) - (den.size() - 1);
            q[qi] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
        }
        num = std::move(q);
    }
    return num;
}

inline std::shared_ptr<const CycloTables> build_tables(int m) {
    auto t = std::make_shared<CycloTables>();
    t->m = m;
    t->phi = totient(m);
    const auto cyc = cyclotomic_polynomial(m);
    const int phi = t->phi;
    t->power.assign(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(phi), 0));
    std::vector<long long> cur(static_cast<size_t>(phi), 0);
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
        t->power[static_cast<size_t>(k)] = cur;
        // cur *= x, then eliminate x^phi using the monic cyclotomic polynomial
        long long top = cur[static_cast<size_t>(phi) - 1];
        for (int j = phi - 1; j > 0; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j) - 1];
        cur[0] = 0;
        if (top != 0)
            for (int j = 0; j < phi; ++j) cur[static_cast<size_t>(j)] -= top * cyc[static_cast<size_t>(j)];
    }
    return t;
}

inline const CycloTables& tables(int m) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, build_tables(m)).first;
    return *it->second;
}

}  // namespace detail

/// Element of Q(zeta_m). Elements of order 1 are plain rationals and combine with any field.
class CycloNum {
   public:
    CycloNum() : m_(1), c_(1) {}
    CycloNum(long v) : m_(1), c_(1, Rational(v)) {}  // NOLINT(google-explicit-constructor)
    CycloNum(int v) : CycloNum(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    CycloNum(const Rational& q) : m_(1), c_(1, q) {}  // NOLINT(google-explicit-constructor)
    CycloNum(int order, const Rational& q) : m_(check_order(order)), c_(static_cast<size_t>(totient(order))) {
        c_[0] = q;
    }

    static CycloNum zero(int order) { return CycloNum(order, Rational(0)); }
    static CycloNum one(int order) { return CycloNum(order, Rational(1)); }

    static CycloNum from_coords(int order, std::vector<Rational> coords) {
        check_order(order);
        if (static_cast<int>(coords.size()) != totient(order))
            throw Error(Errc::InvalidArgument, "coordinate count must equal phi(m)");
        CycloNum x;
        x.m_ = order;
        x.c_ = std::move(coords);
        for (auto& q : x.c_) q.canonicalize();
        return x;
    }

    /// zeta_m^k as an element of Q(zeta_m).
    static CycloNum root_of_unity(int m, long k) {
        check_order(m);
        const auto& t = detail::tables(m);
        long e = ((k % m) + m) % m;
        CycloNum x = zero(m);
        const auto& p = t.power[static_cast<size_t>(e)];
        for (size_t j = 0; j < p.size(); ++j) x.c_[j] = static_cast<long>(p[j]);
        return x;
    }

    int order() const noexcept { return m_; }
    const std::vector<Rational>& coords() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (sgn(q) != 0) return false;
        return true;
    }
    bool is_one() const { return is_rational() && c_[0] == 1; }
    /// True iff the element lies in Q.
    bool is_rational() const {
        for (size_t j = 1; j < c_.size(); ++j)
            if (sgn(c_[j]) != 0) return false;
        return true;
    }
    Rational rational_part() const { return c_[0]; }

    /// Same complex number represented in Q(zeta_{m_new}); requires m | m_new.
    CycloNum rebase(int m_new) const {
        check_order(m_new);
        if (m_new % m_ != 0)
            throw Error(Errc::NotASubfield,
                        "Q(zeta_" + std::to_string(m_) + ") is not a subfield of Q(zeta_" + std::to_string(m_new) + ")");
        if (m_new == m_) return *this;
        const int step = m_new / m_;
        std::vector<Rational> buf(static_cast<size_t>(m_new));
        for (size_t j = 0; j < c_.size(); ++j)
            if (sgn(c_[j]) != 0) buf[(j * static_cast<size_t>(step)) % static_cast<size_t>(m_new)] += c_[j];
        return reduce_buffer(m_new, buf);
    }

    /// Complex conjugate: zeta -> zeta^{-1}.
    CycloNum conj() const {
        if (m_ <= 2) return *this;
        std::vector<Rational> buf(static_cast<size_t>(m_));
        for (size_t j = 0; j < c_.size(); ++j)
            if (sgn(c_[j]) != 0) buf[(static_cast<size_t>(m_) - j) % static_cast<size_t>(m_)] += c_[j];
        return reduce_buffer(m_, buf);
    }

    bool is_unimodular() const { return (*this * conj()).is_one(); }
    bool is_real() const { return conj() == *this; }

    Complex to_complex() const {
        Complex s = 0;
        const double base = 2.0 * std::numbers::pi / m_;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (sgn(c_[j]) == 0) continue;
            s += c_[j].get_d() * std::polar(1.0, base * static_cast<double>(j));
        }
        return s;
    }

    CycloNum inverse() const {
        if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
        if (is_rational()) return CycloNum(m_, Rational(1) / c_[0]);
        // Solve (x * y) = 1 for the coordinates of y via the multiplication matrix of x.
        const int phi = static_cast<int>(c_.size());
        std::vector<std::vector<Rational>> a(static_cast<size_t>(phi), std::vector<Rational>(static_cast<size_t>(phi) + 1));
        for (int j = 0; j < phi; ++j) {
            CycloNum col = *this * basis(m_, j);
            for (int i = 0; i < phi; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.c_[static_cast<size_t>(i)];
        }
        a[0][static_cast<size_t>(phi)] = 1;
        for (int col = 0; col < phi; ++col) {
            int piv = col;
            while (piv < phi && sgn(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]) == 0) ++piv;
            std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
            auto& prow = a[static_cast<size_t>(col)];
            Rational inv = Rational(1) / prow[static_cast<size_t>(col)];
            for (auto& v : prow) v *= inv;
            for (int r = 0; r < phi; ++r) {
                if (r == col) continue;
                auto& row = a[static_cast<size_t>(r)];
                Rational f = row[static_cast<size_t>(col)];
                if (sgn(f) == 0) continue;
                for (int k = col; k <= phi; ++k) row[static_cast<size_t>(k)] -= f * prow[static_cast<size_t>(k)];
            }
        }
        CycloNum y = zero(m_);
        for (int i = 0; i < phi; ++i) y.c_[static_cast<size_t>(i)] = a[static_cast<size_t>(i)][static_cast<size_t>(phi)];
        return y;
    }

    CycloNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycloNum result = one(m_), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }

    CycloNum& operator+=(const CycloNum& o) {
        if (o.m_ == 1 && m_ != 1) {
            c_[0] += o.c_[0];
            return *this;
        }
        if (m_ == 1 && o.m_ != 1) *this = rebase(o.m_);
        require_same(o);
        for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
        return *this;
    }
    CycloNum& operator-=(const CycloNum& o) { return *this += -o; }
    CycloNum& operator*=(const CycloNum& o) {
        *this = *this * o;
        return *this;
    }
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        if (a.m_ == 1 || b.m_ == 1) {
            const CycloNum& scalar = a.m_ == 1 ? a : b;
            CycloNum r = a.m_ == 1 ? b : a;
            const Rational& s = scalar.c_[0];
            if (s == 1) return r;
            for (auto& q : r.c_) q *= s;
            return r;
        }
        a.require_same(b);
        const size_t m = static_cast<size_t>(a.m_);
        std::vector<Rational> buf(m);
        bool any = false;
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                buf[(i + j) % m] += a.c_[i] * b.c_[j];
                any = true;
            }
        }
        if (!any) return zero(a.m_);
        return reduce_buffer(a.m_, buf);
    }

    /// Equality of complex numbers; operands of different orders are compared in a common field.
    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        if (a.m_ == b.m_) return a.c_ == b.c_;
        const int l = std::lcm(a.m_, b.m_);
        return a.rebase(l).c_ == b.rebase(l).c_;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Text in the expression grammar: rationals, `i` and `w(m,k)`.
    std::string to_string() const {
        if (is_rational()) return rational_text(c_[0]);
        std::ostringstream os;
        bool first = true;
        for (size_t j = 0; j < c_.size(); ++j) {
            const Rational& q = c_[j];
            if (sgn(q) == 0) continue;
            Rational mag = abs(q);
            if (!first) os << (sgn(q) < 0 ? " - " : " + ");
            else if (sgn(q) < 0) os << "-";
            first = false;
            std::string unit;
            if (j > 0) unit = (m_ == 4 && j == 1) ? std::string("i") : "w(" + std::to_string(m_) + "," + std::to_string(j) + ")";
            if (j == 0) os << rational_text(mag);
            else if (mag == 1) os << unit;
            else os << rational_text(mag) << "*" << unit;
        }
        return os.str();
    }

   private:
    int m_;
    std::vector<Rational> c_;

    static int check_order(int m) {
        if (m < 1) throw Error(Errc::InvalidArgument, "field order must be positive");
        return m;
    }

    static std::string rational_text(const Rational& q) {
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }

    static CycloNum basis(int m, int j) {
        CycloNum x = zero(m);
        x.c_[static_cast<size_t>(j)] = 1;
        return x;
    }

    /// Reduce sum_k buf[k] zeta^k (0 <= k < m) to canonical coordinates.
    static CycloNum reduce_buffer(int m, const std::vector<Rational>& buf) {
        const auto& t = detail::tables(m);
        CycloNum x = zero(m);
        for (size_t k = 0; k < buf.size(); ++k) {
            if (sgn(buf[k]) == 0) continue;
            if (k < static_cast<size_t>(t.phi)) {
                x.c_[k] += buf[k];
                continue;
            }
            const auto& p = t.power[k];
            for (size_t j = 0; j < p.size(); ++j)
                if (p[j] != 0) x.c_[j] += buf[k] * static_cast<long>(p[j]);
        }
        return x;
    }

    void require_same(const CycloNum& o) const {
        if (m_ != o.m_)
            throw Error(Errc::FieldMismatch,
                        "operands in Q(zeta_" + std::to_string(m_) + ") and Q(zeta_" + std::to_string(o.m_) + ")");
    }
};

inline CycloNum conj(const CycloNum& x) { return x.conj(); }

inline CycloNum root_of_unity(int m, long k) { return CycloNum::root_of_unity(m, k); }

inline bool is_unimodular(const CycloNum& x) { return x.is_unimodular(); }

/// Smallest field order containing both operands.
inline int common_order(int a, int b) { return std::lcm(a, b); }

inline CycloNum i_unit() { return CycloNum::root_of_unity(4, 1); }

/// e^{i*pi*p/q} as an element of Q(zeta_{2q}).
inline CycloNum unit_from_angle(long p, long q) {
    if (q <= 0) throw Error(Errc::InvalidArgument, "angle denominator must be positive");
    return CycloNum::root_of_unity(static_cast<int>(2 * q), p);
}

}  // namespace ratsym

#endif  // RATSYM_CYCLOTOMIC_HPP
