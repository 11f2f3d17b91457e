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
   Automorphism groups of rational maps.

   Search: every (anti)holomorphic automorphism permutes the fixed points and the
   critical points, preserving fixed/critical multiplicities and |multiplier|.
   A source triple taken from the smallest label classes is sent to every
   compatible target triple; each interpolating map is screened on the whole
   distinguished set and then checked on the conjugated coefficients.
*/

#ifndef RATSYM_AUTGROUP_HPP
#define RATSYM_AUTGROUP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "moebius.hpp"
#include "rational_map.hpp"
#include "recognize.hpp"

namespace ratsym {

struct AutOptions {
    double match_tol = 1e-8;   // projective coefficient match
    double dedup_tol = 1e-7;   // element identification
    double point_tol = 1e-6;   // chordal distance when screening S -> S
    size_t max_points = 256;   // cap on |S|
    bool certify = false;      // recognize entries and verify exactly
};

enum class HoloKind { Trivial, Cyclic, Dihedral, A4, S4, A5 };

struct HoloType {
    HoloKind kind = HoloKind::Trivial;
    int n = 1;

    int order() const {
        switch (kind) {
            case HoloKind::Trivial: return 1;
            case HoloKind::Cyclic: return n;
            case HoloKind::Dihedral: return 2 * n;
            case HoloKind::A4: return 12;
            case HoloKind::S4: return 24;
            case HoloKind::A5: return 60;
        }
        return 0;
    }
    std::string to_string() const {
        switch (kind) {
            case HoloKind::Trivial: return "Trivial";
            case HoloKind::Cyclic: return "Cyclic(" + std::to_string(n) + ")";
            case HoloKind::Dihedral: return "Dihedral(" + std::to_string(n) + ")";
            case HoloKind::A4: return "A4";
            case HoloKind::S4: return "S4";
            case HoloKind::A5: return "A5";
        }
        return "?";
    }
    bool trivial_or_cyclic() const { return kind == HoloKind::Trivial || kind == HoloKind::Cyclic; }
    friend bool operator==(const HoloType&, const HoloType&) = default;
};

struct AutElement {
    CMoebius numeric = CMoebius::identity(Complex(0));
    std::optional<Moebius> exact;  // set when certified
    int order = 1;
};

struct AutGroupReport {
    std::vector<AutElement> elements;  // holomorphic first, then antiholomorphic
    HoloType holo_type;
    bool exact_mode = false;
    double tol = 1e-8;
    bool certified = false;

    size_t holomorphic_count() const {
        return static_cast<size_t>(std::count_if(elements.begin(), elements.end(),
                                                 [](const AutElement& e) { return !e.numeric.antiholomorphic(); }));
    }
    size_t antiholomorphic_count() const { return elements.size() - holomorphic_count(); }
};

/* ---- exact verification ---- */

/// conjugate_by(phi, g) == phi projectively, by exact expansion.
inline bool verify_automorphism_exact(const RationalMap& phi, const Moebius& g) {
    return equals_projective(conjugate_by(phi, g), phi);
}

namespace detail {

// Labels only prune candidates (every survivor is matched on coefficients), so this is loose:
// multipliers inherit the root error amplified by |phi''| and drift near 1e-6 at degree 13.
inline constexpr double kMultiplierLabelTol = 1e-4;

inline bool same_label(const LabeledPoint& x, const LabeledPoint& y) {
    if (x.fixed_multiplicity != y.fixed_multiplicity || x.critical_multiplicity != y.critical_multiplicity ||
        x.critical_value != y.critical_value)
        return false;
    if ((x.multiplier_abs < 0) != (y.multiplier_abs < 0)) return false;
    if (x.multiplier_abs < 0) return true;
    return std::abs(x.multiplier_abs - y.multiplier_abs) <= kMultiplierLabelTol * std::max(1.0, x.multiplier_abs);
}

inline bool point_less(const CPoint& a, const CPoint& b) {
    if (a.infinite != b.infinite) return b.infinite;
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
}

inline int find_or_add(std::vector<CMoebius>& found, const CMoebius& g, double tol) {
    for (size_t k = 0; k < found.size(); ++k)
        if (projective_distance(found[k], g) <= tol) return static_cast<int>(k);
    found.push_back(g);
    return -1;
}

inline std::vector<CMoebius> search(const RationalMap& phi, bool anti, const AutOptions& opt) {
    if (phi.degree() < 2) throw Error(Errc::BadDegree, "automorphism search needs degree >= 2");
    const auto S = distinguished_points(phi);
    if (S.size() > opt.max_points)
        throw Error(Errc::SearchBoundExceeded, "distinguished set has " + std::to_string(S.size()) + " points");
    const NumericMap nm = to_numeric(phi);
    const auto target = nm.coefficient_vector();

    std::vector<size_t> class_size(S.size(), 0);
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = 0; j < S.size(); ++j)
            if (same_label(S[i], S[j])) ++class_size[i];
    std::vector<size_t> idx(S.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
        if (class_size[x] != class_size[y]) return class_size[x] < class_size[y];
        return point_less(S[x].point, S[y].point);
    });
    const std::array<size_t, 3> src{idx[0], idx[1], idx[2]};
    const std::array<CPoint, 3> src_pts{S[src[0]].point, S[src[1]].point, S[src[2]].point};

    auto maps_S_to_S = [&](const CMoebius& g) {
        for (const auto& p : S) {
            const CPoint q = g(p.point);
            bool hit = false;
            for (const auto& t : S)
                if (same_label(p, t) && chordal_distance(q, t.point) <= opt.point_tol) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };

    std::vector<CMoebius> found;
    for (size_t t0 = 0; t0 < S.size(); ++t0) {
        if (!same_label(S[src[0]], S[t0])) continue;
        for (size_t t1 = 0; t1 < S.size(); ++t1) {
            if (t1 == t0 || !same_label(S[src[1]], S[t1])) continue;
            for (size_t t2 = 0; t2 < S.size(); ++t2) {
                if (t2 == t0 || t2 == t1 || !same_label(S[src[2]], S[t2])) continue;
                const CMoebius g =
                    from_three_points<Complex>(src_pts, {S[t0].point, S[t1].point, S[t2].point}, anti).normalized();
                if (!maps_S_to_S(g)) continue;
                const NumericMap c = conjugate_by(nm, g);
                if (projective_distance(c.coefficient_vector(), target) > opt.match_tol) continue;
                find_or_add(found, g, opt.dedup_tol);
            }
        }
    }
    return found;
}

}  // namespace detail

/// All Moebius T with T o phi o T^{-1} = phi (numeric, identity included).
inline std::vector<CMoebius> holomorphic_automorphisms(const RationalMap& phi, const AutOptions& opt = {}) {
    return detail::search(phi, false, opt);
}

/// All antiholomorphic Q with Q o phi o Q^{-1} = phi (numeric).
inline std::vector<CMoebius> antiholomorphic_automorphisms(const RationalMap& phi, const AutOptions& opt = {}) {
    return detail::search(phi, true, opt);
}

/* ---- group structure ---- */

/// Label the holomorphic part by order and element-order profile.
inline HoloType classify_group_type(const std::vector<CMoebius>& elements, double tol = 1e-7) {
    const size_t N = elements.size();
    if (N == 0) throw Error(Errc::NotAGroup, "empty element list");
    auto contains = [&](const CMoebius& g) {
        for (const auto& h : elements)
            if (projective_distance(g, h) <= tol) return true;
        return false;
    };
    for (const auto& g : elements) {
        if (g.antiholomorphic()) throw Error(Errc::NotAGroup, "antiholomorphic element in holomorphic part");
        if (!contains(g.inverse().normalized())) throw Error(Errc::NotAGroup, "not closed under inverses");
        for (const auto& h : elements)
            if (!contains((g * h).normalized())) throw Error(Errc::NotAGroup, "not closed under composition");
    }
    if (!contains(CMoebius::identity(Complex(0)))) throw Error(Errc::NotAGroup, "identity missing");

    std::map<int, int> profile;
    const int bound = static_cast<int>(N) + 1;
    for (const auto& g : elements) {
        auto o = order(g, bound, tol);
        if (!o) throw Error(Errc::NotAGroup, "element of infinite order");
        ++profile[*o];
    }
    const int n = static_cast<int>(N);
    if (n == 1) return {HoloKind::Trivial, 1};
    if (profile.count(n)) return {HoloKind::Cyclic, n};
    if (n % 2 == 0) {
        const int h = n / 2;
        // dihedral: a cyclic part of order h plus h involutions outside it
        int involutions = profile.count(2) ? profile[2] : 0;
        const bool cyclic_part = h == 2 ? involutions == 3 : profile.count(h) > 0;
        const int expected_involutions = h + (h % 2 == 0 ? 1 : 0);
        if (cyclic_part && involutions == expected_involutions) return {HoloKind::Dihedral, h};
    }
    auto is_profile = [&](std::map<int, int> want) { return profile == want; };
    if (n == 12 && is_profile({{1, 1}, {2, 3}, {3, 8}})) return {HoloKind::A4, 12};
    if (n == 24 && is_profile({{1, 1}, {2, 9}, {3, 8}, {4, 6}})) return {HoloKind::S4, 24};
    if (n == 60 && is_profile({{1, 1}, {2, 15}, {3, 20}, {5, 24}})) return {HoloKind::A5, 60};
    throw Error(Errc::NotAGroup, "order " + std::to_string(n) + " matches no finite subgroup of PSL2(C)");
}

/* ---- exact certification ---- */

/// Try to lift a numeric element to Q(zeta_M) for a few natural M; verified exactly.
inline std::optional<Moebius> certify_element(const RationalMap& phi, const CMoebius& g, int order_hint) {
    double big = 0;
    for (const auto& v : g.entries()) big = std::max(big, std::abs(v));
    Complex pivot = 0;
    for (const auto& v : g.entries())
        if (std::abs(v) > 1e-6 * big) {
            pivot = v;
            break;
        }
    std::array<Complex, 4> e;
    for (size_t k = 0; k < 4; ++k) e[k] = g.entries()[k] / pivot;

    const int base = std::lcm(std::lcm(phi.field_order(), 4), 2 * std::max(order_hint, 1));
    std::vector<int> fields{base};
    for (int extra : {3, 5, 8}) {
        const int M = std::lcm(base, extra);
        if (M <= 240 && std::find(fields.begin(), fields.end(), M) == fields.end()) fields.push_back(M);
    }
    using Recognizer = std::optional<CycloNum> (*)(Complex, int, double, long);
    const Recognizer lattice = [](Complex v, int M, double tol, long) { return recognize_by_lattice(v, M, tol); };
    const Recognizer structured = [](Complex v, int M, double tol, long) { return recognize_cyclotomic(v, M, tol); };
    for (int M : fields)
        for (const Recognizer rec : {lattice, structured}) {
            std::array<CycloNum, 4> x;
            bool ok = true;
            for (size_t k = 0; k < 4 && ok; ++k) {
                auto r = rec(e[k], M, 1e-9, 0);
                if (!r) ok = false;
                else x[k] = *r;
            }
            if (!ok || (x[0] * x[3] - x[1] * x[2]).is_zero()) continue;
            const Moebius h(x[0], x[1], x[2], x[3], g.antiholomorphic());
            if (verify_automorphism_exact(phi, h)) return h.normalized();
        }
    return std::nullopt;
}

namespace detail {

inline bool element_less(const AutElement& x, const AutElement& y) {
    if (x.numeric.antiholomorphic() != y.numeric.antiholomorphic()) return !x.numeric.antiholomorphic();
    if (x.order != y.order) return x.order < y.order;
    const auto a = x.numeric.normalized().entries(), b = y.numeric.normalized().entries();
    for (size_t k = 0; k < 4; ++k) {
        const double ar = std::round(a[k].real() * 1e9), br = std::round(b[k].real() * 1e9);
        if (ar != br) return ar < br;
        const double ai = std::round(a[k].imag() * 1e9), bi = std::round(b[k].imag() * 1e9);
        if (ai != bi) return ai < bi;
    }
    return false;
}

}  // namespace detail

/// Full group of (anti)holomorphic automorphisms with its holomorphic type.
inline AutGroupReport automorphism_group(const RationalMap& phi, const AutOptions& opt = {}) {
    AutGroupReport rep;
    rep.exact_mode = opt.certify;
    rep.tol = opt.match_tol;
    const auto holo = holomorphic_automorphisms(phi, opt);
    const auto anti = antiholomorphic_automorphisms(phi, opt);
    rep.holo_type = classify_group_type(holo, opt.dedup_tol * 10);
    if (!anti.empty() && anti.size() != holo.size())
        throw Error(Errc::NotAGroup, "antiholomorphic coset size differs from the holomorphic part");
    const int bound = 2 * (phi.degree() + 1) + 2;
    for (const auto* list : {&holo, &anti})
        for (const auto& g : *list) {
            AutElement e;
            e.numeric = g.normalized();
            auto o = order(g, std::max(bound, 2 * static_cast<int>(holo.size()) + 2), opt.dedup_tol * 10);
            if (!o) throw Error(Errc::NotAGroup, "automorphism of infinite order");
            e.order = *o;
            rep.elements.push_back(e);
        }
    std::sort(rep.elements.begin(), rep.elements.end(), detail::element_less);
    if (opt.certify) {
        rep.certified = true;
        for (auto& e : rep.elements) {
            e.exact = certify_element(phi, e.numeric, e.order);
            if (!e.exact) rep.certified = false;
        }
    }
    return rep;
}

/* ---- power relations ---- */

/// Data of rho_k = c * s^{e_k}: g = gcd of exponent differences and S = s^g (S = 1 when g = 0).
struct PowerSolution {
    int g = 0;
    CycloNum S;
};

namespace detail {

inline CycloNum signed_pow(const CycloNum& x, long e) { return e >= 0 ? x.pow(e) : x.inverse().pow(-e); }

}  // namespace detail

/// Decide whether nonzero values rho_k = c * s^{e_k} for some c, s != 0.
inline std::optional<PowerSolution> solve_power_relations(const std::vector<std::pair<int, CycloNum>>& data) {
    if (data.empty()) return PowerSolution{0, CycloNum(1)};
    const int e0 = data[0].first;
    const CycloNum r0 = data[0].second;
    // Bezout combination of the differences, built incrementally
    int g = 0;
    CycloNum S(1);  // S = s^g
    for (size_t k = 1; k < data.size(); ++k) {
        const int delta = data[k].first - e0;
        if (delta == 0) {
            if (!(data[k].second == r0)) return std::nullopt;
            continue;
        }
        const CycloNum q = data[k].second / r0;  // = s^delta
        if (g == 0) {
            g = delta;
            S = q;
            if (g < 0) g = -g, S = S.inverse();
            continue;
        }
        // extended gcd of g and delta
        long x0 = 1, y0 = 0, x1 = 0, y1 = 1, a = g, b = delta;
        while (b != 0) {
            const long t = a / b;
            std::tie(a, b) = std::make_pair(b, a - t * b);
            std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
            std::tie(y0, y1) = std::make_pair(y1, y0 - t * y1);
        }
        // a = x0 g + y0 delta
        CycloNum Snew = detail::signed_pow(S, x0) * detail::signed_pow(q, y0);
        if (a < 0) a = -a, Snew = Snew.inverse();
        g = static_cast<int>(a);
        S = Snew;
    }
    for (size_t k = 1; k < data.size(); ++k) {
        const int delta = data[k].first - e0;
        if (delta == 0) continue;
        if (!(detail::signed_pow(S, delta / g) * r0 == data[k].second)) return std::nullopt;
    }
    return PowerSolution{g, S};
}

/* ---- cyclic normal form ---- */

struct CanonicalCyclicForm {
    int n = 1;
    RationalMap psi;
    int r = 0;
    char case_tag = 'a';
    Moebius conjugator = Moebius::identity(CycloNum(0));
    bool flipped = false;  // the 1/z flip was applied
};

namespace detail {

/// Square root of x inside some cyclotomic field containing it, verified by squaring.
inline std::optional<CycloNum> exact_sqrt(const CycloNum& x) {
    if (x.is_zero()) return x;
    const Complex s = std::sqrt(x.to_complex());
    for (int k : {1, 4, 8, 3, 12, 24, 5, 20}) {
        const int M = std::lcm(x.order(), k);
        if (M > 240) continue;
        for (int sign : {1, -1}) {
            auto r = recognize_cyclotomic(Complex(sign) * s, M, 1e-9);
            if (r && (*r) * (*r) == x) return r;
        }
    }
    return std::nullopt;
}

/// A root of c z^2 + (d - a) z - b recognized from its floating value and checked exactly (c != 0).
inline std::optional<CycloNum> recognize_fixed_point(const Moebius& T) {
    const Complex a = T.a().to_complex(), b = T.b().to_complex(), c = T.c().to_complex(), d = T.d().to_complex();
    const Complex s = std::sqrt((d - a) * (d - a) + 4.0 * b * c);
    const int base = T.field_order();
    for (const Complex z : {(a - d + s) / (2.0 * c), (a - d - s) / (2.0 * c)})
        for (int k : {1, 4, 8, 3, 12, 24, 5, 20}) {
            const int M = std::lcm(base, k);
            if (M > 240) continue;
            auto r = recognize_cyclotomic(z, M, 1e-9);
            if (!r) continue;
            const CycloNum x = r->rebase(M);
            if ((T.c().rebase(M) * x * x + (T.d().rebase(M) - T.a().rebase(M)) * x - T.b().rebase(M)).is_zero()) return x;
        }
    return std::nullopt;
}

struct PsiExtraction {
    Poly A, B;
};

inline PsiExtraction extract_psi(const RationalMap& f, int n) {
    const int m = f.field_order();
    Poly N = f.numer();
    Poly D = Poly::identity(CycloNum::zero(m)) * f.denom();
    const int v = std::min(N.is_zero() ? D.valuation() : N.valuation(), D.valuation());
    N = N.shift_down(v);
    D = D.shift_down(v);
    auto every_nth = [n, m](const Poly& p) {
        std::vector<CycloNum> c;
        for (int k = 0; k <= p.degree(); ++k) {
            if (k % n != 0) {
                if (!p[k].is_zero()) throw Error(Errc::NotCanonical, "map is not of the form z psi(z^n)");
                continue;
            }
            c.push_back(p[k]);
        }
        return Poly(c, CycloNum::zero(m));
    };
    return {every_nth(N), every_nth(D)};
}

}  // namespace detail

/// Bring phi with holomorphic automorphism T of order n >= 2 into the form z psi(z^n).
inline CanonicalCyclicForm canonicalize_cyclic(const RationalMap& phi, const Moebius& T) {
    if (T.antiholomorphic()) throw Error(Errc::NotAnAutomorphism, "T must be holomorphic");
    const auto n_opt = order(T, 2 * (phi.degree() + 1) + 2);
    if (!n_opt || *n_opt < 2) throw Error(Errc::OrderMismatch, "T must have finite order >= 2");
    if (!verify_automorphism_exact(phi, T)) throw Error(Errc::NotAnAutomorphism, "T does not commute with phi");
    const int n = *n_opt;

    // fixed points of T: c z^2 + (d - a) z - b = 0
    const CycloNum a = T.a(), b = T.b(), c = T.c(), d = T.d();
    ExactPoint p, q;
    if (c.is_zero()) {
        p = ExactPoint::finite(b / (d - a));
        q = ExactPoint::at_infinity(a);
    } else {
        const CycloNum disc = (d - a) * (d - a) + CycloNum(4) * b * c;
        const CycloNum two_c = CycloNum(2) * c;
        // the fixed points usually have smaller height than sqrt(disc), so try them first
        if (auto fp = detail::recognize_fixed_point(T)) {
            p = ExactPoint::finite(*fp);
            q = ExactPoint::finite((a - d) / c - *fp);
        } else if (const auto root = detail::exact_sqrt(disc)) {
            p = ExactPoint::finite(((a - d) + *root) / two_c);
            q = ExactPoint::finite(((a - d) - *root) / two_c);
        } else {
            throw Error(Errc::FixedPointsNotInField, "fixed points of T are not cyclotomic");
        }
    }

    auto attempt = [&](const ExactPoint& zero_pt, const ExactPoint& inf_pt) {
        const CycloNum one = CycloNum::one(zero_pt.infinite ? inf_pt.value.order() : zero_pt.value.order());
        const CycloNum z0 = one * CycloNum(0);
        Moebius L = Moebius::identity(one);
        if (inf_pt.infinite) L = Moebius(one, -zero_pt.value, z0, one);
        else if (zero_pt.infinite) L = Moebius(z0, one, one, -inf_pt.value);
        else L = Moebius(one, -zero_pt.value, one, -inf_pt.value);
        return L;
    };

    for (int pass = 0; pass < 2; ++pass) {
        const Moebius L = pass == 0 ? attempt(p, q) : attempt(q, p);
        const RationalMap f = conjugate_by(phi, L);
        const auto ex = detail::extract_psi(f, n);
        const RationalMap psi = RationalMap::reduce(ex.A, ex.B);
        const int r = psi.degree();
        const bool ar = !psi.numer()[r].is_zero();
        const bool b0 = !psi.denom()[0].is_zero();
        if (!ar && b0 && pass == 0) continue;  // fold case (iii) into (b) by the flip
        CanonicalCyclicForm form;
        form.n = n;
        form.psi = psi;
        form.r = r;
        form.conjugator = L.normalized();
        form.flipped = pass == 1;
        if (ar && b0) form.case_tag = 'a';
        else if (ar) form.case_tag = 'b';
        else form.case_tag = 'c';
        const int d = phi.degree();
        const int expect = form.case_tag == 'a' ? n * r + 1 : form.case_tag == 'b' ? n * r : n * r - 1;
        if (expect != d) throw Error(Errc::NotCanonical, "degree does not match the normal-form case");
        return form;
    }
    throw Error(Errc::NotCanonical, "no normal form found");
}

/// z psi(z^n) as a rational map.
inline RationalMap from_psi(const RationalMap& psi, int n) {
    const int m = psi.field_order();
    return RationalMap::reduce(Poly::identity(CycloNum::zero(m)) * psi.numer().substitute_power(n),
                               psi.denom().substitute_power(n));
}

/// 1/psi(1/u) at formal degree r = deg psi.
inline RationalMap flip_psi(const RationalMap& psi) {
    const int r = psi.degree();
    return RationalMap::reduce(psi.denom().reversed(r), psi.numer().reversed(r));
}

/// Action of the normalizer of <z -> w_n z> on psi: psi(u/t), and with flip 1/psi(1/(t u)).
inline RationalMap normalizer_action(const RationalMap& psi, const CycloNum& t, bool flip) {
    if (t.is_zero()) throw Error(Errc::InvalidArgument, "t must be nonzero");
    const int m = std::lcm(psi.field_order(), t.order());
    const CycloNum s = t.rebase(m).inverse();
    const RationalMap scaled = RationalMap::reduce(rebase(psi.numer(), m).scale_variable(s),
                                                   rebase(psi.denom(), m).scale_variable(s));
    return flip ? flip_psi(scaled) : scaled;
}

/// Whether psi2 = normalizer_action(psi1, t, flip) for some nonzero complex t and flip.
inline bool same_normalizer_orbit(const RationalMap& psi1, const RationalMap& psi2) {
    if (psi1.degree() != psi2.degree()) return false;
    const int r = psi1.degree();
    for (bool flip : {false, true}) {
        const RationalMap base = flip ? flip_psi(psi1) : psi1;
        const int m = std::lcm(base.field_order(), psi2.field_order());
        const auto x = base.coefficient_vector(), y = psi2.coefficient_vector();
        std::vector<std::pair<int, CycloNum>> data;
        bool pattern = true;
        for (size_t k = 0; k < x.size(); ++k) {
            if (x[k].is_zero() != y[k].is_zero()) {
                pattern = false;
                break;
            }
            if (x[k].is_zero()) continue;
            const int e = static_cast<int>(k) % (r + 1);
            data.emplace_back(e, y[k].rebase(m) / x[k].rebase(m));
        }
        if (pattern && solve_power_relations(data)) return true;
    }
    return false;
}

}  // namespace ratsym

#endif  // RATSYM_AUTGROUP_HPP
