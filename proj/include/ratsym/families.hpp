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

#ifndef RATSYM_FAMILIES_HPP
#define RATSYM_FAMILIES_HPP

#include <string>
#include <vector>

#include "autgroup.hpp"
#include "classify.hpp"

namespace ratsym {

/// i ((z - 1) / (z + 1))^d for odd d >= 3, expanded over Q(i).
inline RationalMap silverman(int d) {
    if (d < 3 || d % 2 == 0) throw Error(Errc::BadDegree, "silverman needs odd d >= 3");
    const CycloNum zero = CycloNum::zero(4);
    const Poly num = Poly(std::vector<CycloNum>{CycloNum(-1).rebase(4), CycloNum::one(4)}, zero).pow(d) * i_unit();
    const Poly den = Poly(std::vector<CycloNum>{CycloNum::one(4), CycloNum::one(4)}, zero).pow(d);
    return RationalMap::reduce(num, den);
}

struct T4Params {
    int n = 6;
    int r = 2;
    CycloNum theta = CycloNum(1);  // e^{i theta}
    std::vector<CycloNum> a;       // a_0 .. a_r
};

namespace detail {

/// Whether x_k = l * y_{r-k} * s^{r-k} has a solution with s != 0 (the two sequences swapped likewise).
inline bool reflected_scaling_exists(const RationalMap& psi) {
    const int r = psi.degree();
    std::vector<std::pair<int, CycloNum>> data;
    for (int k = 0; k <= r; ++k) {
        const CycloNum ak = psi.a(k), bk = psi.b(k), br = psi.b(r - k), ar = psi.a(r - k);
        if (ak.is_zero() != br.is_zero() || bk.is_zero() != ar.is_zero()) return false;
        if (!ak.is_zero()) data.emplace_back(r - k, ak / br);
        if (!bk.is_zero()) data.emplace_back(r - k, bk / ar);
    }
    return solve_power_relations(data).has_value();
}

/// psi(z) = rho(z^m) for some m >= 2.
inline bool is_power_substitution(const RationalMap& psi) {
    const int r = psi.degree();
    for (int m = 2; m <= r; ++m) {
        bool all = true;
        for (int k = 0; k <= r && all; ++k)
            if (k % m != 0 && (!psi.a(k).is_zero() || !psi.b(k).is_zero())) all = false;
        if (all) return true;
    }
    return false;
}

}  // namespace detail

/// The psi-parameter of the family: a_k over (-1)^k e^{i theta} conj(a_{r-k}).
inline RationalMap t4_psi(const T4Params& p) {
    if (p.n < 6) throw Error(Errc::ConditionViolation, "n >= 6 required");
    if (p.r < 2 || p.r % 2 != 0) throw Error(Errc::ConditionViolation, "r must be even and >= 2");
    if (static_cast<int>(p.a.size()) != p.r + 1) throw Error(Errc::ConditionViolation, "need r + 1 coefficients");
    if (!p.theta.is_unimodular()) throw Error(Errc::ConditionViolation, "e^{i theta} must be unimodular");
    int m = p.theta.order();
    for (const auto& x : p.a) m = std::lcm(m, x.order());
    const CycloNum th = p.theta.rebase(m);
    std::vector<CycloNum> a, b;
    for (const auto& x : p.a) a.push_back(x.rebase(m));
    if ((a[1] * a[static_cast<size_t>(p.r)]).is_zero()) throw Error(Errc::ConditionViolation, "a_1 a_r must be nonzero");
    const CycloNum prod = a[0] * a[static_cast<size_t>(p.r)];
    if (prod == th * th * prod.conj())
        throw Error(Errc::ConditionViolation, "a_0 a_r must differ from e^{2 i theta} conj(a_0 a_r)");
    for (int k = 0; k <= p.r; ++k) {
        const CycloNum c = th * a[static_cast<size_t>(p.r - k)].conj();
        b.push_back(k % 2 == 0 ? c : -c);
    }
    const CycloNum zero = CycloNum::zero(m);
    const Poly A(a, zero), B(b, zero);
    const RationalMap psi = RationalMap::reduce(A, B);
    if (psi.degree() != p.r) throw Error(Errc::ConditionViolation, "psi degenerates (common factor)");

    // (1) no psi = rho(z^m)
    if (detail::is_power_substitution(psi)) throw Error(Errc::ConditionViolation, "psi is a function of z^m");
    // (2) psi(z) != 1/psi(s/z) for every s
    if (detail::reflected_scaling_exists(psi)) throw Error(Errc::ConditionViolation, "psi(z) = 1/psi(s/z) for some s");
    // (3) conj(psi)(z) = 1/psi(-1/z)
    const RationalMap lhs = psi.conj_map();
    const RationalMap rhs = RationalMap::reduce(psi.denom().scale_variable(CycloNum(-1)).reversed(p.r),
                                                psi.numer().scale_variable(CycloNum(-1)).reversed(p.r));
    if (!equals_projective(lhs, rhs)) throw Error(Errc::ConditionViolation, "conj(psi)(z) != 1/psi(-1/z)");
    return psi;
}

/// z psi(z^n); pseudo-real of degree nr + 1 with cyclic holomorphic group of order n.
inline RationalMap t4_family(const T4Params& p) { return from_psi(t4_psi(p), p.n); }

inline T4Params example13_params() {
    return {6, 2, CycloNum(1), {CycloNum(1), CycloNum(1), i_unit()}};
}

/// The degree-13 map z (1 + z^6 + i z^12) / (-i - z^6 + z^12).
inline RationalMap example13() { return t4_family(example13_params()); }

/// w psi(w)^n from a normal form.
inline RationalMap quotient_map(const CanonicalCyclicForm& form) {
    if (form.n < 2) throw Error(Errc::NotCanonical, "quotient needs n >= 2");
    const int m = form.psi.field_order();
    return RationalMap::reduce(Poly::identity(CycloNum::zero(m)) * form.psi.numer().pow(form.n),
                               form.psi.denom().pow(form.n));
}

/// phi(z)^n = phi_hat(z^n) as rational functions.
inline bool verify_semiconjugacy(const RationalMap& phi, const RationalMap& phi_hat, int n) {
    if (n < 2) throw Error(Errc::InvalidArgument, "n >= 2 required");
    const int m = std::lcm(phi.field_order(), phi_hat.field_order());
    const Poly lp = rebase(phi.numer(), m).pow(n), lq = rebase(phi.denom(), m).pow(n);
    const Poly rp = rebase(phi_hat.numer(), m).substitute_power(n), rq = rebase(phi_hat.denom(), m).substitute_power(n);
    return lp * rq == rp * lq;
}

}  // namespace ratsym

#endif  // RATSYM_FAMILIES_HPP
