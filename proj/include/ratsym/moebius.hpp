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
   Holomorphic and antiholomorphic automorphisms of the Riemann sphere.

   An ExtendedMoebius<T> is a projective 2x2 matrix M plus an orientation flag.
   Convention: the flag set means "conjugate first, then apply M", z -> M(conj z).
   Composition g o h therefore has matrix M_g * s_g(M_h), where s_g conjugates
   the entries iff g is antiholomorphic, and flag XOR.
*/

#ifndef RATSYM_MOEBIUS_HPP
#define RATSYM_MOEBIUS_HPP

#include <array>
#include <cmath>
#include <optional>
#include <numeric>
#include <string>
#include <type_traits>

#include "cyclotomic.hpp"
#include "polynomial.hpp"

namespace ratsym {

template <class T>
struct SpherePoint {
    T value{};
    bool infinite = false;

    static SpherePoint finite(const T& v) { return {v, false}; }
    static SpherePoint at_infinity(const T& like) { return {field_traits<T>::zero_like(like), true}; }
};

using CPoint = SpherePoint<Complex>;
using ExactPoint = SpherePoint<CycloNum>;

/// Chordal distance on the sphere (0 <= d <= 2).
inline double chordal_distance(const CPoint& p, const CPoint& q) {
    if (p.infinite && q.infinite) return 0.0;
    if (p.infinite) return 2.0 / std::sqrt(1.0 + std::norm(q.value));
    if (q.infinite) return 2.0 / std::sqrt(1.0 + std::norm(p.value));
    return 2.0 * std::abs(p.value - q.value) / std::sqrt((1.0 + std::norm(p.value)) * (1.0 + std::norm(q.value)));
}

template <class T>
class ExtendedMoebius {
    using traits = field_traits<T>;

   public:
    ExtendedMoebius(const T& a, const T& b, const T& c, const T& d, bool antiholomorphic = false)
        : m_{a, b, c, d}, anti_(antiholomorphic) {
        if (traits::is_zero(a * d - b * c)) throw Error(Errc::InvalidArgument, "Moebius matrix is singular");
    }

    static ExtendedMoebius identity(const T& like) {
        return {traits::one_like(like), traits::zero_like(like), traits::zero_like(like), traits::one_like(like)};
    }
    /// J(z) = conj(z).
    static ExtendedMoebius reflection_J(const T& like) {
        auto g = identity(like);
        g.anti_ = true;
        return g;
    }

    const T& a() const { return m_[0]; }
    const T& b() const { return m_[1]; }
    const T& c() const { return m_[2]; }
    const T& d() const { return m_[3]; }
    const std::array<T, 4>& entries() const { return m_; }
    bool antiholomorphic() const { return anti_; }
    T det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    SpherePoint<T> apply(const SpherePoint<T>& p) const {
        const T zero = traits::zero_like(m_[0]);
        if (p.infinite) {
            // M(inf) = a / c
            if (traits::is_zero(m_[2])) return SpherePoint<T>::at_infinity(zero);
            return SpherePoint<T>::finite(m_[0] / m_[2]);
        }
        T z = anti_ ? traits::conj(p.value) : p.value;
        T num = m_[0] * z + m_[1];
        T den = m_[2] * z + m_[3];
        if (traits::is_zero(den)) return SpherePoint<T>::at_infinity(zero);
        return SpherePoint<T>::finite(num / den);
    }
    SpherePoint<T> operator()(const SpherePoint<T>& p) const { return apply(p); }

    /// this o h
    ExtendedMoebius compose(const ExtendedMoebius& h) const {
        if constexpr (std::is_same_v<T, CycloNum>) {
            const int m = std::lcm(field_order(), h.field_order());
            if (m != field_order() || m != h.field_order()) return rebased(m).compose(h.rebased(m));
        }
        std::array<T, 4> n = h.m_;
        if (anti_)
            for (auto& v : n) v = traits::conj(v);
        ExtendedMoebius r = *this;
        r.m_ = {m_[0] * n[0] + m_[1] * n[2], m_[0] * n[1] + m_[1] * n[3], m_[2] * n[0] + m_[3] * n[2],
                m_[2] * n[1] + m_[3] * n[3]};
        r.anti_ = anti_ != h.anti_;
        return r;
    }
    friend ExtendedMoebius operator*(const ExtendedMoebius& g, const ExtendedMoebius& h) { return g.compose(h); }

    ExtendedMoebius inverse() const {
        // holomorphic: adj(M). antiholomorphic: g^{-1}(w) = conj(M^{-1} w) = conj(adj M) applied to conj(w).
        ExtendedMoebius r = *this;
        r.m_ = {m_[3], -m_[1], -m_[2], m_[0]};
        if (anti_)
            for (auto& v : r.m_) v = traits::conj(v);
        return r;
    }

    ExtendedMoebius power(int k) const {
        if (k < 0) return inverse().power(-k);
        ExtendedMoebius r = identity(m_[0]);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    int field_order() const
        requires(std::is_same_v<T, CycloNum>)
    {
        int m = 1;
        for (const auto& v : m_) m = std::lcm(m, v.order());
        return m;
    }

    /// Entries represented in Q(zeta_m).
    ExtendedMoebius rebased(int m) const
        requires(std::is_same_v<T, CycloNum>)
    {
        ExtendedMoebius r = *this;
        for (auto& v : r.m_) v = v.rebase(m);
        return r;
    }

    /// Exact mode: scale so the first nonzero entry (row-major) is 1.
    /// Numeric mode: unit Frobenius norm with the first significant entry real positive.
    ExtendedMoebius normalized() const {
        ExtendedMoebius r = *this;
        if constexpr (traits::exact) {
            for (const auto& v : m_) {
                if (!traits::is_zero(v)) {
                    T inv = traits::one_like(v) / v;
                    for (auto& w : r.m_) w = w * inv;
                    break;
                }
            }
        } else {
            double norm = 0;
            for (const auto& v : m_) norm += std::norm(v);
            norm = std::sqrt(norm);
            for (const auto& v : m_) {
                if (std::abs(v) > 1e-8 * norm) {
                    T phase = v / std::abs(v);
                    for (auto& w : r.m_) w = w / (phase * static_cast<typename T::value_type>(norm));
                    break;
                }
            }
        }
        return r;
    }

    /// Exact projective equality (same orientation, proportional matrices).
    bool projectively_equal(const ExtendedMoebius& o) const
        requires(field_traits<T>::exact)
    {
        if (anti_ != o.anti_) return false;
        const int m = std::lcm(field_order(), o.field_order());
        if (m != field_order() || m != o.field_order()) return rebased(m).projectively_equal(o.rebased(m));
        return m_[0] * o.m_[1] == m_[1] * o.m_[0] && m_[0] * o.m_[2] == m_[2] * o.m_[0] &&
               m_[0] * o.m_[3] == m_[3] * o.m_[0] && m_[1] * o.m_[2] == m_[2] * o.m_[1] &&
               m_[1] * o.m_[3] == m_[3] * o.m_[1] && m_[2] * o.m_[3] == m_[3] * o.m_[2];
    }

    bool is_identity() const
        requires(field_traits<T>::exact)
    {
        return !anti_ && traits::is_zero(m_[1]) && traits::is_zero(m_[2]) && m_[0] == m_[3];
    }

    friend bool operator==(const ExtendedMoebius& x, const ExtendedMoebius& y)
        requires(field_traits<T>::exact)
    {
        return x.projectively_equal(y);
    }

   private:
    std::array<T, 4> m_;
    bool anti_;
};

using Moebius = ExtendedMoebius<CycloNum>;
using CMoebius = ExtendedMoebius<Complex>;

/// Relative projective distance min_l |M - l N| / |M| (orientation mismatch gives +inf).
inline double projective_distance(const CMoebius& g, const CMoebius& h) {
    if (g.antiholomorphic() != h.antiholomorphic()) return INFINITY;
    Complex num = 0;
    double nn = 0, mm = 0;
    for (size_t k = 0; k < 4; ++k) {
        num += std::conj(h.entries()[k]) * g.entries()[k];
        nn += std::norm(h.entries()[k]);
        mm += std::norm(g.entries()[k]);
    }
    Complex l = num / nn;
    double err = 0;
    for (size_t k = 0; k < 4; ++k) err += std::norm(g.entries()[k] - l * h.entries()[k]);
    return std::sqrt(err / mm);
}

inline bool approx_identity(const CMoebius& g, double tol = 1e-7) {
    return projective_distance(g, CMoebius::identity(Complex(0))) <= tol;
}

inline CMoebius to_numeric(const Moebius& g) {
    return {g.a().to_complex(), g.b().to_complex(), g.c().to_complex(), g.d().to_complex(), g.antiholomorphic()};
}

inline Moebius rebase(const Moebius& g, int m) { return g.rebased(m); }

inline int field_order(const Moebius& g) { return g.field_order(); }

/// Least k <= bound with g^k the identity; nullopt when none (infinite within bound).
inline std::optional<int> order(const Moebius& g, int bound) {
    if (bound < 1) throw Error(Errc::InvalidArgument, "order bound must be >= 1");
    Moebius p = g;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_identity()) return k;
        p = p * g;
    }
    return std::nullopt;
}

inline std::optional<int> order(const CMoebius& g, int bound, double tol = 1e-7) {
    if (bound < 1) throw Error(Errc::InvalidArgument, "order bound must be >= 1");
    CMoebius p = g.normalized();
    const CMoebius gn = p;
    for (int k = 1; k <= bound; ++k) {
        if (approx_identity(p, tol)) return k;
        p = (p * gn).normalized();
    }
    return std::nullopt;
}

enum class InvolutionKind { Reflection, ImaginaryReflection };

inline std::string to_string(InvolutionKind k) {
    return k == InvolutionKind::Reflection ? "Reflection" : "ImaginaryReflection";
}

/// Sign of the real scalar l with M conj(M) = l I decides the type (l > 0 reflection).
inline InvolutionKind classify_involution(const Moebius& g) {
    if (!g.antiholomorphic() || !(g * g).is_identity())
        throw Error(Errc::NotAnInvolution, "not an antiholomorphic involution");
    const CycloNum l = g.a() * g.a().conj() + g.b() * g.c().conj();
    return l.to_complex().real() > 0 ? InvolutionKind::Reflection : InvolutionKind::ImaginaryReflection;
}

inline InvolutionKind classify_involution(const CMoebius& g, double tol = 1e-7) {
    if (!g.antiholomorphic() || !approx_identity(g * g, tol))
        throw Error(Errc::NotAnInvolution, "not an antiholomorphic involution");
    const CMoebius n = g.normalized();
    const Complex l = n.a() * std::conj(n.a()) + n.b() * std::conj(n.c());
    return l.real() > 0 ? InvolutionKind::Reflection : InvolutionKind::ImaginaryReflection;
}

namespace detail {

/// Holomorphic map sending (z1, z2, z3) to (0, 1, inf).
template <class T>
ExtendedMoebius<T> to_standard_triple(const SpherePoint<T>& z1, const SpherePoint<T>& z2, const SpherePoint<T>& z3,
                                      const T& like) {
    using tr = field_traits<T>;
    const T one = tr::one_like(like), zero = tr::zero_like(like);
    auto same = [](const SpherePoint<T>& p, const SpherePoint<T>& q) {
        if (p.infinite || q.infinite) return p.infinite == q.infinite;
        return tr::is_zero(p.value - q.value);
    };
    if (same(z1, z2) || same(z1, z3) || same(z2, z3)) throw Error(Errc::DegenerateTriple, "triple is not distinct");
    if (z1.infinite) return {zero, z2.value - z3.value, one, -z3.value};
    if (z2.infinite) return {one, -z1.value, one, -z3.value};
    if (z3.infinite) return {one, -z1.value, zero, z2.value - z1.value};
    const T u = z2.value - z3.value, v = z2.value - z1.value;
    return {u, -z1.value * u, v, -z3.value * v};
}

}  // namespace detail

/// The unique (extended) Moebius map with the given orientation sending sources[i] to targets[i].
template <class T>
ExtendedMoebius<T> from_three_points(const std::array<SpherePoint<T>, 3>& sources,
                                     const std::array<SpherePoint<T>, 3>& targets, bool antiholomorphic) {
    using tr = field_traits<T>;
    T like = sources[0].value;
    for (const auto& p : sources)
        if (!p.infinite) like = p.value;
    for (const auto& p : targets)
        if (!p.infinite) like = like + tr::zero_like(p.value);
    auto src = sources;
    if (antiholomorphic)
        for (auto& p : src)
            if (!p.infinite) p.value = tr::conj(p.value);
    auto s = detail::to_standard_triple(src[0], src[1], src[2], like);
    auto t = detail::to_standard_triple(targets[0], targets[1], targets[2], like);
    auto g = t.inverse() * s;
    if (antiholomorphic) g = g * ExtendedMoebius<T>::reflection_J(like);
    return g;
}

/// (z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3)), with factors containing infinity dropped.
template <class T>
SpherePoint<T> cross_ratio(const SpherePoint<T>& z1, const SpherePoint<T>& z2, const SpherePoint<T>& z3,
                           const SpherePoint<T>& z4) {
    using tr = field_traits<T>;
    T like = z1.value;
    for (const auto* p : {&z1, &z2, &z3, &z4})
        if (!p->infinite) like = like + tr::zero_like(p->value);
    const T one = tr::one_like(like);
    auto diff = [&](const SpherePoint<T>& p, const SpherePoint<T>& q) -> std::pair<T, bool> {
        // second: factor involves infinity and is dropped
        if (p.infinite && q.infinite) return {tr::zero_like(like), false};
        if (p.infinite || q.infinite) return {one, true};
        return {p.value - q.value, false};
    };
    auto [n1, i1] = diff(z1, z3);
    auto [n2, i2] = diff(z2, z4);
    auto [d1, j1] = diff(z1, z4);
    auto [d2, j2] = diff(z2, z3);
    (void)i1, (void)i2, (void)j1, (void)j2;
    T num = n1 * n2, den = d1 * d2;
    if (tr::is_zero(num) && tr::is_zero(den)) throw Error(Errc::TooManyCoincidences, "cross ratio is undefined");
    if (tr::is_zero(den)) return SpherePoint<T>::at_infinity(like);
    return SpherePoint<T>::finite(num / den);
}

enum class NamedGenerator { T, A, B, C, D };

/// The standard generators of the finite subgroups of PSL2(C):
/// T_n(z) = w_n z, A(z) = 1/z, and the order-two maps B (over Q(zeta_12)),
/// C (over Q(zeta_8)) and D (over Q(zeta_20)) pairing with T_3, T_4, T_5.
inline Moebius named_generator(NamedGenerator which, int n = 1) {
    switch (which) {
        case NamedGenerator::T: {
            if (n < 1) throw Error(Errc::InvalidArgument, "T_n needs n >= 1");
            return {CycloNum::root_of_unity(n, 1), CycloNum::zero(n), CycloNum::zero(n), CycloNum::one(n)};
        }
        case NamedGenerator::A:
            return {CycloNum(0), CycloNum(1), CycloNum(1), CycloNum(0)};
        case NamedGenerator::B: {
            // sqrt(3) = zeta_12 + zeta_12^{-1}
            const CycloNum s = CycloNum::root_of_unity(12, 1) + CycloNum::root_of_unity(12, 11) - CycloNum(1);
            return {s, s * s, CycloNum::zero(12) + CycloNum(2), -s};
        }
        case NamedGenerator::C: {
            // sqrt(2) = zeta_8 + zeta_8^{-1}
            const CycloNum t = CycloNum::root_of_unity(8, 1) + CycloNum::root_of_unity(8, 7) + CycloNum(1);
            return {-t, t * t, CycloNum::one(8), t};
        }
        case NamedGenerator::D: {
            // sqrt(2 - w5 - w5^4) = -i (zeta_10 - zeta_10^{-1}) = 2 sin(pi/5)
            const CycloNum i = CycloNum::root_of_unity(20, 5);
            const CycloNum root = -i * (CycloNum::root_of_unity(20, 2) - CycloNum::root_of_unity(20, 18));
            const CycloNum u = CycloNum(1) + root;
            const CycloNum v = CycloNum(1) - CycloNum::root_of_unity(20, 4) - CycloNum::root_of_unity(20, 16);
            return {-u, u * u, v, u};
        }
    }
    throw Error(Errc::InvalidArgument, "unknown generator");
}

}  // namespace ratsym

#endif  // RATSYM_MOEBIUS_HPP
