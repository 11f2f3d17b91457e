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

#ifndef RATSYM_RATIONAL_MAP_HPP
#define RATSYM_RATIONAL_MAP_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "moebius.hpp"
#include "polynomial.hpp"
#include "roots.hpp"

namespace ratsym {

/* ---- conjugation on coefficient pairs ---- */

/// Coefficients of g o (P/Q) o g^{-1} at formal degree d, unreduced.
///
/// For antiholomorphic g = (M, s) the result is M o conj(phi) o M^{-1}, where conj(phi)
/// conjugates the coefficients. Homogeneous substitution keeps infinity in the same chart.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> conjugate_pair(const Polynomial<T>& P, const Polynomial<T>& Q, int d,
                                                       const ExtendedMoebius<T>& g) {
    using Pl = Polynomial<T>;
    T zero = field_traits<T>::zero_like(P.zero());
    for (const auto& e : g.entries()) zero = zero + field_traits<T>::zero_like(e);
    const auto& [a, b, c, dd] = g.entries();
    const Pl p = g.antiholomorphic() ? P.conj_poly() : P;
    const Pl q = g.antiholomorphic() ? Q.conj_poly() : Q;
    // M^{-1}(z) = (dd z - b) / (-c z + a)
    const Pl U(std::vector<T>{-b, dd}, zero);
    const Pl V(std::vector<T>{a, -c}, zero);
    std::vector<Pl> up{Pl::constant(field_traits<T>::one_like(zero))}, vp{up[0]};
    for (int k = 1; k <= d; ++k) {
        up.push_back(up.back() * U);
        vp.push_back(vp.back() * V);
    }
    Pl N(zero), D(zero);
    for (int k = 0; k <= d; ++k) {
        const T pk = p[k], qk = q[k];
        if (field_traits<T>::is_zero(pk) && field_traits<T>::is_zero(qk)) continue;
        const Pl term = up[static_cast<size_t>(k)] * vp[static_cast<size_t>(d - k)];
        if (!field_traits<T>::is_zero(pk)) N += term * pk;
        if (!field_traits<T>::is_zero(qk)) D += term * qk;
    }
    return {N * a + D * b, N * c + D * dd};
}

/* ---- exact maps ---- */

/// phi = P/Q with gcd(P, Q) = 1, stored over one cyclotomic field, denominator monic
/// (numerator monic when the map is the constant infinity).
class RationalMap {
   public:
    /// Cancel the gcd and normalize. Throws ZeroMap when both are zero.
    static RationalMap reduce(const Poly& P, const Poly& Q) {
        if (P.is_zero() && Q.is_zero()) throw Error(Errc::ZeroMap, "numerator and denominator are both zero");
        const int m = std::lcm(ratsym::field_order(P), ratsym::field_order(Q));
        Poly p = rebase(P, m), q = rebase(Q, m);
        const Poly g = gcd(p, q);
        if (g.degree() > 0) {
            p = p.exact_div(g);
            q = q.exact_div(g);
        }
        const CycloNum s = q.is_zero() ? p.leading().inverse() : q.leading().inverse();
        return RationalMap(p * s, q * s);
    }

    RationalMap() : RationalMap(Poly::identity(CycloNum(0)), Poly::constant(CycloNum(1))) {}

    const Poly& numer() const { return P_; }
    const Poly& denom() const { return Q_; }
    int degree() const { return d_; }
    int field_order() const { return m_; }
    CycloNum a(int k) const { return P_[k]; }
    CycloNum b(int k) const { return Q_[k]; }
    bool is_polynomial() const { return Q_.degree() == 0; }

    ExactPoint evaluate(const ExactPoint& z) const {
        const CycloNum zero = CycloNum::zero(m_);
        if (z.infinite) {
            const int dp = P_.degree(), dq = Q_.degree();
            if (dp > dq) return ExactPoint::at_infinity(zero);
            if (dp < dq) return ExactPoint::finite(zero);
            return ExactPoint::finite(P_.leading() / Q_.leading());
        }
        const CycloNum x = z.value + zero;
        const CycloNum den = Q_(x);
        if (den.is_zero()) return ExactPoint::at_infinity(zero);
        return ExactPoint::finite(P_(x) / den);
    }

    CPoint evaluate(const CPoint& z) const {
        if (z.infinite) {
            const ExactPoint e = evaluate(ExactPoint::at_infinity(CycloNum(0)));
            return e.infinite ? CPoint::at_infinity(0.0) : CPoint::finite(e.value.to_complex());
        }
        const CPoly p = to_complex(P_), q = to_complex(Q_);
        const Complex den = q(z.value);
        if (den == Complex(0)) return CPoint::at_infinity(0.0);
        return CPoint::finite(p(z.value) / den);
    }

    /// this o other
    RationalMap compose(const RationalMap& other) const {
        const int m = std::lcm(m_, other.m_);
        const Poly p = rebase(other.P_, m), q = rebase(other.Q_, m);
        const CycloNum zero = CycloNum::zero(m);
        std::vector<Poly> pp{Poly::constant(CycloNum::one(m))}, qp{pp[0]};
        for (int k = 1; k <= d_; ++k) {
            pp.push_back(pp.back() * p);
            qp.push_back(qp.back() * q);
        }
        Poly N(zero), D(zero);
        for (int k = 0; k <= d_; ++k) {
            const Poly t = pp[static_cast<size_t>(k)] * qp[static_cast<size_t>(d_ - k)];
            N += t * P_[k].rebase(m);
            D += t * Q_[k].rebase(m);
        }
        return reduce(N, D);
    }

    /// The coefficient-conjugate map, J o phi o J.
    RationalMap conj_map() const { return RationalMap(P_.conj_poly(), Q_.conj_poly()); }

    /// Coefficient vector (a_0..a_d, b_0..b_d).
    std::vector<CycloNum> coefficient_vector() const {
        auto v = P_.padded(d_);
        auto w = Q_.padded(d_);
        v.insert(v.end(), w.begin(), w.end());
        return v;
    }

    friend bool operator==(const RationalMap& x, const RationalMap& y) { return x.P_ == y.P_ && x.Q_ == y.Q_; }

   private:
    RationalMap(Poly P, Poly Q) : P_(std::move(P)), Q_(std::move(Q)) {
        d_ = std::max(P_.degree(), Q_.degree());
        m_ = std::lcm(ratsym::field_order(P_), ratsym::field_order(Q_));
        if (d_ < 0) d_ = 0;
    }

    Poly P_, Q_;
    int d_ = 0;
    int m_ = 1;
};

inline RationalMap make_map(const Poly& P, const Poly& Q) { return RationalMap::reduce(P, Q); }

/// g o phi o g^{-1}.
inline RationalMap conjugate_by(const RationalMap& phi, const Moebius& g) {
    const int m = std::lcm(phi.field_order(), field_order(g));
    const Moebius h = rebase(g, m);
    auto [N, D] = conjugate_pair(rebase(phi.numer(), m), rebase(phi.denom(), m), phi.degree(), h);
    return RationalMap::reduce(N, D);
}

/// Same degree and proportional coefficient vectors.
inline bool equals_projective(const RationalMap& x, const RationalMap& y) {
    if (x.degree() != y.degree()) return false;
    const int m = std::lcm(x.field_order(), y.field_order());
    auto u = x.coefficient_vector(), v = y.coefficient_vector();
    for (auto& c : u) c = c.rebase(m);
    for (auto& c : v) c = c.rebase(m);
    size_t k = 0;
    while (k < u.size() && u[k].is_zero()) ++k;
    if (k == u.size() || v[k].is_zero()) return false;
    const CycloNum r = v[k] / u[k];
    for (size_t j = 0; j < u.size(); ++j)
        if (!(u[j] * r == v[j])) return false;
    return true;
}

/* ---- numeric maps ---- */

/// Floating coefficient pair at formal degree d; used by the numeric automorphism search.
struct NumericMap {
    CPoly P, Q;
    int d = 0;

    CPoint evaluate(const CPoint& z) const {
        if (z.infinite) {
            const Complex a = P[d], b = Q[d];
            if (std::abs(b) <= 1e-300) return CPoint::at_infinity(0.0);
            return CPoint::finite(a / b);
        }
        const Complex den = Q(z.value);
        if (den == Complex(0)) return CPoint::at_infinity(0.0);
        return CPoint::finite(P(z.value) / den);
    }

    std::vector<Complex> coefficient_vector() const {
        auto v = P.padded(d);
        auto w = Q.padded(d);
        v.insert(v.end(), w.begin(), w.end());
        return v;
    }
};

inline NumericMap to_numeric(const RationalMap& phi) {
    return {to_complex(phi.numer()), to_complex(phi.denom()), phi.degree()};
}

/// Relative distance between coefficient vectors after the best common scalar.
inline double projective_distance(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    if (u.size() != v.size()) return INFINITY;
    Complex num = 0;
    double vv = 0, uu = 0;
    for (size_t k = 0; k < u.size(); ++k) {
        num += std::conj(v[k]) * u[k];
        vv += std::norm(v[k]);
        uu += std::norm(u[k]);
    }
    if (vv == 0 || uu == 0) return INFINITY;
    const Complex l = num / vv;
    double err = 0;
    for (size_t k = 0; k < u.size(); ++k) err += std::norm(u[k] - l * v[k]);
    return std::sqrt(err / uu);
}

inline bool equals_projective(const NumericMap& x, const NumericMap& y, double tol) {
    return x.d == y.d && projective_distance(x.coefficient_vector(), y.coefficient_vector()) <= tol;
}

inline NumericMap conjugate_by(const NumericMap& phi, const CMoebius& g) {
    auto [N, D] = conjugate_pair(phi.P, phi.Q, phi.d, g);
    return {N, D, phi.d};
}

/* ---- fixed points, critical points ---- */

/// zQ - P; its roots (with infinity when the formal degree d+1 is not attained) are the fixed points.
inline Poly fixed_point_polynomial(const RationalMap& phi) {
    return Poly::identity(CycloNum::zero(phi.field_order())) * phi.denom() - phi.numer();
}

/// P'Q - PQ'; formal degree 2d - 2.
inline Poly critical_point_polynomial(const RationalMap& phi) {
    return phi.numer().derivative() * phi.denom() - phi.numer() * phi.denom().derivative();
}

struct LabeledPoint {
    CPoint point;
    int fixed_multiplicity = 0;     // 0 when not fixed
    int critical_multiplicity = 0;  // local degree minus one
    bool critical_value = false;    // added only to reach three points
    double multiplier_abs = -1.0;   // |phi'| at a fixed point, -1 otherwise

    bool fixed() const { return fixed_multiplicity > 0; }
    bool critical() const { return critical_multiplicity > 0; }
};

namespace detail {

inline void merge_point(std::vector<LabeledPoint>& S, const LabeledPoint& p, double tol) {
    for (auto& q : S) {
        if (chordal_distance(q.point, p.point) <= tol) {
            q.fixed_multiplicity = std::max(q.fixed_multiplicity, p.fixed_multiplicity);
            q.critical_multiplicity = std::max(q.critical_multiplicity, p.critical_multiplicity);
            q.critical_value = q.critical_value || p.critical_value;
            if (p.multiplier_abs >= 0) q.multiplier_abs = p.multiplier_abs;
            return;
        }
    }
    S.push_back(p);
}

}  // namespace detail

/// Fix(phi) union Crit(phi), numerically, with labels; extended by critical values when
/// fewer than three points arise.
inline std::vector<LabeledPoint> distinguished_points(const RationalMap& phi, double tol = 1e-8) {
    const int d = phi.degree();
    if (d < 2) throw Error(Errc::BadDegree, "distinguished points need degree >= 2");
    std::vector<LabeledPoint> S;
    const CPoly P = to_complex(phi.numer()), Q = to_complex(phi.denom());
    const CPoly W = to_complex(critical_point_polynomial(phi));

    const Poly F = fixed_point_polynomial(phi);
    if (F.degree() >= 1) {
        for (const auto& r : roots_numeric(F)) {
            LabeledPoint lp;
            lp.point = CPoint::finite(r.value);
            lp.fixed_multiplicity = r.multiplicity;
            const Complex q = Q(r.value);
            lp.multiplier_abs = r.multiplicity > 1 ? 1.0 : std::abs(W(r.value) / (q * q));
            detail::merge_point(S, lp, tol);
        }
    }
    if (F.degree() < d + 1) {
        LabeledPoint lp;
        lp.point = CPoint::at_infinity(0.0);
        lp.fixed_multiplicity = d + 1 - F.degree();
        if (lp.fixed_multiplicity > 1) lp.multiplier_abs = 1.0;
        else if (phi.denom().degree() == d - 1) lp.multiplier_abs = std::abs(Q[d - 1] / P[d]);
        else lp.multiplier_abs = 0.0;
        detail::merge_point(S, lp, tol);
    }

    const Poly Wx = critical_point_polynomial(phi);
    if (Wx.degree() >= 1) {
        for (const auto& r : roots_numeric(Wx)) {
            LabeledPoint lp;
            lp.point = CPoint::finite(r.value);
            lp.critical_multiplicity = r.multiplicity;
            detail::merge_point(S, lp, tol);
        }
    }
    if (Wx.degree() < 2 * d - 2) {
        LabeledPoint lp;
        lp.point = CPoint::at_infinity(0.0);
        lp.critical_multiplicity = 2 * d - 2 - std::max(Wx.degree(), 0);
        detail::merge_point(S, lp, tol);
    }

    if (S.size() < 3) {
        const NumericMap nm = to_numeric(phi);
        std::vector<LabeledPoint> extra;
        for (const auto& p : S)
            if (p.critical()) {
                LabeledPoint lp;
                lp.point = nm.evaluate(p.point);
                lp.critical_value = true;
                extra.push_back(lp);
            }
        for (const auto& e : extra) detail::merge_point(S, e, tol);
    }
    if (S.size() < 3) throw Error(Errc::DegenerateSet, "fewer than three distinguished points");
    return S;
}

/// A fixed point whose full preimage is itself (local degree d there).
inline bool is_polynomial_like(const RationalMap& phi) {
    const int d = phi.degree();
    if (d < 2) throw Error(Errc::BadDegree, "is_polynomial_like needs degree >= 2");
    const Poly F = fixed_point_polynomial(phi);
    const Poly W = critical_point_polynomial(phi);
    // infinity: fixed and critical of multiplicity d - 1
    if (F.degree() < d + 1 && 2 * d - 2 - std::max(W.degree(), 0) == d - 1) return true;
    if (W.is_zero()) return false;
    for (const auto& [factor, mult] : squarefree_decomposition(W))
        if (mult == d - 1 && gcd(factor, F).degree() >= 1) return true;
    return false;
}

/* ---- coefficient JSON ---- */

namespace detail {

inline nlohmann::json coeffs_json(const Poly& p, int d, int m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p.padded(d)) {
        nlohmann::json coords = nlohmann::json::array();
        const CycloNum x = c.rebase(m);
        for (const auto& q : x.coords()) coords.push_back(q.get_str());
        out.push_back(coords);
    }
    return out;
}

inline Poly coeffs_from_json(const nlohmann::json& arr, int m) {
    std::vector<CycloNum> cs;
    for (const auto& c : arr) {
        std::vector<Rational> coords;
        for (const auto& q : c) {
            Rational r;
            const std::string s = q.is_string() ? q.get<std::string>() : q.dump();
            if (r.set_str(s, 10) != 0) throw Error(Errc::InvalidArgument, "bad rational '" + s + "'");
            r.canonicalize();
            coords.push_back(r);
        }
        cs.push_back(CycloNum::from_coords(m, std::move(coords)));
    }
    return Poly(std::move(cs), CycloNum::zero(m));
}

}  // namespace detail

/// {"field_order": m, "numer": [[coords...], ...], "denom": [[coords...], ...]}, rationals as strings.
inline nlohmann::ordered_json to_coeff_json(const RationalMap& phi) {
    nlohmann::ordered_json j;
    j["field_order"] = phi.field_order();
    j["numer"] = detail::coeffs_json(phi.numer(), phi.degree(), phi.field_order());
    j["denom"] = detail::coeffs_json(phi.denom(), phi.degree(), phi.field_order());
    return j;
}

inline RationalMap from_coeff_json(const nlohmann::json& j) {
    try {
        const int m = j.at("field_order").get<int>();
        return RationalMap::reduce(detail::coeffs_from_json(j.at("numer"), m),
                                   detail::coeffs_from_json(j.at("denom"), m));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::InvalidArgument, std::string("coefficient JSON: ") + e.what());
    }
}

}  // namespace ratsym

#endif  // RATSYM_RATIONAL_MAP_HPP
