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
   Closed-form moduli bookkeeping for degree-d rational maps.

   Cyclic locus: maps with a Z_n symmetry are z psi(z^n) with psi of degree r
   and d in {nr + 1, nr, nr - 1}; dimensions count psi-coefficients modulo
   scaling of coefficients and the normalizer action.
*/

#ifndef RATSYM_MODULI_HPP
#define RATSYM_MODULI_HPP

#include <optional>
#include <string>
#include <vector>

#include "families.hpp"

namespace ratsym {

struct CyclicCase {
    int r = 0;
    char case_tag = 'a';  // a: d = nr + 1, b: d = nr, c: d = nr - 1
    int complex_dimension = 0;
};

/// Every (r, case) consistent with d and n (several when congruences coincide, e.g. n = 2).
inline std::vector<CyclicCase> admissible_cyclic_params(int d, int n) {
    if (d < 2 || n < 2) throw Error(Errc::InvalidArgument, "need d >= 2 and n >= 2");
    std::vector<CyclicCase> out;
    if ((d - 1) % n == 0 && (d - 1) / n >= 1) out.push_back({(d - 1) / n, 'a', 2 * (d - 1) / n});
    if (d % n == 0) out.push_back({d / n, 'b', (2 * d - n) / n});
    if ((d + 1) % n == 0) out.push_back({(d + 1) / n, 'c', 2 * (d + 1 - n) / n});
    return out;
}

/// Complex dimension of the Z_n-symmetric locus in M_d; nullopt when d is not 0, 1 or -1 mod n.
inline std::optional<int> dim_Md_cyclic(int d, int n) {
    const auto cases = admissible_cyclic_params(d, n);
    if (cases.empty()) return std::nullopt;
    for (const auto& c : cases)
        if (c.complex_dimension != cases.front().complex_dimension)
            throw Error(Errc::ConsistencyViolation, "coinciding congruences give different dimensions");
    return cases.front().complex_dimension;
}

struct Feasibility {
    bool feasible = false;
    std::vector<int> even_r;  // admissible even r (even n only)
    std::string reason;
};

/// Necessary conditions for an antiholomorphic automorphism of order 2n in degree d.
inline Feasibility antiholo_feasibility(int d, int n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "n >= 1 required");
    Feasibility f;
    if (n == 1) {
        f.feasible = d % 2 == 1;
        f.reason = f.feasible ? "odd degree" : "imaginary reflection needs odd degree";
        return f;
    }
    if (n % 2 == 1) {
        const bool congruence = (d - 1) % n == 0 || d % n == 0 || (d + 1) % n == 0;
        f.feasible = d % 2 == 1 && congruence;
        f.reason = d % 2 == 0 ? "odd n: the n-th power is an imaginary reflection, so d must be odd"
                   : congruence ? "odd degree and d = 0, +-1 mod n"
                                : "d is not 0, +-1 mod n";
        return f;
    }
    for (int num : {d - 1, d, d + 1})
        if (num > 0 && num % n == 0 && (num / n) % 2 == 0) f.even_r.push_back(num / n);
    f.feasible = !f.even_r.empty();
    f.reason = f.feasible ? "even r available" : "no even r in {(d-1)/n, d/n, (d+1)/n}";
    return f;
}

enum class Connectivity { Connected, Unknown };

struct LocusDescriptor {
    std::string locus;
    int real_dimension = 0;
    Connectivity connected = Connectivity::Unknown;
    std::string notes;
};

/// Dimension table for odd d (connectivity flags are recorded facts, not computed).
inline std::vector<LocusDescriptor> locus_dimensions(int d, std::optional<int> n = std::nullopt) {
    if (d < 3 || d % 2 == 0) throw Error(Errc::BadDegree, "locus dimensions need odd d >= 3");
    std::vector<LocusDescriptor> out{
        {"A_d", 2 * d + 1, Connectivity::Connected, "maps with tau(z) = -1/conj(z) as automorphism"},
        {"calA_d", 2 * d - 2, Connectivity::Connected, "classes of A_d in moduli"},
        {"A_d_real", d + 1, Connectivity::Unknown, "maps of A_d that are also real"},
        {"calA_d_real", d - 2, Connectivity::Unknown, "classes of A_d_real in moduli"},
    };
    std::vector<int> ns;
    if (n) ns.push_back(*n);
    else
        for (int k = 2; k <= d + 1; k += 2) ns.push_back(k);
    for (int k : ns) {
        if (k >= 2) {
            if (auto dim = dim_Md_cyclic(d, k))
                out.push_back({"M_d_cyclic(" + std::to_string(k) + ")", 2 * *dim, Connectivity::Unknown,
                               "complex dimension " + std::to_string(*dim)});
        }
        if (k % 2 != 0) continue;
        const auto f = antiholo_feasibility(d, k);
        for (int r : f.even_r) {
            out.push_back({"B_d(" + std::to_string(k) + ")", 2 * r + 1, Connectivity::Connected,
                           "r = " + std::to_string(r)});
            out.push_back({"calB_d(" + std::to_string(k) + ")", 2 * r - 2, Connectivity::Unknown,
                           "classes, r = " + std::to_string(r)});
        }
    }
    return out;
}

/// P = sum a_k z^k, Q = sum (-1)^k e^{i theta} conj(a_{d-k}) z^k; refuses pairs with a common root.
inline RationalMap parameterize_Ad(const CycloNum& theta, const std::vector<CycloNum>& a) {
    const int d = static_cast<int>(a.size()) - 1;
    if (d < 1 || d % 2 == 0) throw Error(Errc::BadDegree, "parameterization needs odd degree");
    if (!theta.is_unimodular()) throw Error(Errc::InvalidArgument, "e^{i theta} must be unimodular");
    int m = theta.order();
    for (const auto& x : a) m = std::lcm(m, x.order());
    std::vector<CycloNum> p, q;
    for (int k = 0; k <= d; ++k) {
        p.push_back(a[static_cast<size_t>(k)].rebase(m));
        const CycloNum c = theta.rebase(m) * a[static_cast<size_t>(d - k)].rebase(m).conj();
        q.push_back(k % 2 == 0 ? c : -c);
    }
    const Poly P(p, CycloNum::zero(m)), Q(q, CycloNum::zero(m));
    if (resultant(P, Q, d, d).is_zero()) throw Error(Errc::OnHypersurface, "P and Q share a root");
    return RationalMap::reduce(P, Q);
}

enum class ComponentStatus { Witnessed, CandidateOnly };

inline std::string to_string(ComponentStatus s) {
    return s == ComponentStatus::Witnessed ? "Witnessed" : "CandidateOnly";
}

struct ComponentCandidate {
    int s = 0;  // antiholomorphic order 2^{s+1}
    ComponentStatus status = ComponentStatus::CandidateOnly;
    std::string witness;
    int witness_n = 0;
    int witness_r = 0;
};

struct ComponentBound {
    std::vector<ComponentCandidate> candidates;
    int witnessed = 0;
    int upper = 0;
};

namespace detail {

/// w_{2n}/conj(z) as an exact extended Moebius map.
inline Moebius tau_n(int n) {
    const int m = std::lcm(4, 2 * n);
    return Moebius(CycloNum::zero(m), root_of_unity(m, m / (2 * n)), CycloNum::one(m), CycloNum::zero(m), true);
}

/// Exact pseudo-real certificate for phi carrying tau_n.
inline bool certifies_pseudo_real(const RationalMap& phi, int n) {
    if (!verify_automorphism_exact(phi, tau_n(n))) return false;
    ClassifyOptions o;
    o.exact = true;
    try {
        return classify_map(phi, o).verdict == Verdict::PseudoReal;
    } catch (const Error&) {
        return false;
    }
}

/// Family map with a = (1, 1, 0, ..., 0, i), theta = 0.
inline RationalMap t4_witness_map(int n, int r) {
    T4Params p;
    p.n = n;
    p.r = r;
    p.theta = CycloNum(1);
    p.a.assign(static_cast<size_t>(r) + 1, CycloNum(0));
    p.a[0] = CycloNum(1);
    p.a[1] = CycloNum(1);
    p.a[static_cast<size_t>(r)] = i_unit();
    return t4_family(p);
}

/// z psi(z^n) with even r and psi(u) conj(psi)(-1/u) = 1, so that w_{2n}/conj(z) is an automorphism.
/// b_0 = 0 gives degree nr - 1, otherwise nr + 1; shift varies the coefficients.
inline RationalMap reflected_witness_map(int n, int r, bool zero_b0, int shift) {
    const CycloNum i = i_unit();
    std::vector<CycloNum> a, b;
    for (int j = 0; j <= r; ++j) b.push_back(CycloNum(j + 1 + shift) + i * CycloNum((j * j + shift) % 3));
    if (zero_b0) b[0] = CycloNum::zero(4);
    for (int j = 0; j <= r; ++j) {
        const CycloNum c = b[static_cast<size_t>(r - j)].conj();
        a.push_back((r - j) % 2 == 0 ? c : -c);
    }
    return from_psi(RationalMap::reduce(Poly(a, CycloNum::zero(4)), Poly(b, CycloNum::zero(4))), n);
}

}  // namespace detail

/// Interval [witnessed, upper] for the number of s >= 0 such that some pseudo-real map of degree d
/// has an antiholomorphic automorphism of order 2^{s+1}. Upper counts the s passing the necessary
/// conditions; a witness is an explicit map checked exactly.
inline ComponentBound pseudo_real_component_bound(int d) {
    if (d < 3 || d % 2 == 0) throw Error(Errc::BadDegree, "component bound needs odd d >= 3");
    ComponentBound out;
    out.candidates.push_back({0, ComponentStatus::Witnessed, "silverman(" + std::to_string(d) + ")", 1, 0});
    for (int s = 1; (1 << s) <= d + 1; ++s) {
        const int n = 1 << s;
        const auto feas = antiholo_feasibility(d, n);
        if (!feas.feasible) continue;
        ComponentCandidate c{s, ComponentStatus::CandidateOnly, "", 0, 0};
        auto accept = [&](const std::string& what, int wn, int wr) {
            c.status = ComponentStatus::Witnessed;
            c.witness = what;
            c.witness_n = wn;
            c.witness_r = wr;
        };
        // the family with n = 2^s q, q odd: tau_{n q}^q has order 2^{s+1}
        for (int q = 1; n * q <= d - 1 && c.status != ComponentStatus::Witnessed; q += 2) {
            const int nn = n * q;
            if (nn < 6 || (d - 1) % nn != 0) continue;
            const int r = (d - 1) / nn;
            if (r < 2 || r % 2 != 0) continue;
            if (detail::certifies_pseudo_real(detail::t4_witness_map(nn, r), nn))
                accept("t4(n=" + std::to_string(nn) + ", r=" + std::to_string(r) + ")", nn, r);
        }
        // psi with the reflected symmetry at n = 2^s
        for (int r : feas.even_r) {
            if (c.status == ComponentStatus::Witnessed) break;
            const bool zero_b0 = n * r - 1 == d;
            if (!zero_b0 && n * r + 1 != d) continue;
            for (int shift = 0; shift < 3 && c.status != ComponentStatus::Witnessed; ++shift) {
                const RationalMap phi = detail::reflected_witness_map(n, r, zero_b0, shift);
                if (phi.degree() == d && detail::certifies_pseudo_real(phi, n))
                    accept("z psi(z^" + std::to_string(n) + "), r=" + std::to_string(r), n, r);
            }
        }
        out.candidates.push_back(c);
    }
    for (const auto& c : out.candidates)
        if (c.status == ComponentStatus::Witnessed) ++out.witnessed;
    out.upper = static_cast<int>(out.candidates.size());
    return out;
}

}  // namespace ratsym

#endif  // RATSYM_MODULI_HPP
