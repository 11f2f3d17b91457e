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

#ifndef RATSYM_CLASSIFY_HPP
#define RATSYM_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "autgroup.hpp"

namespace ratsym {

enum class Verdict { Real, PseudoReal, NoAntiholomorphic };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Real: return "Real";
        case Verdict::PseudoReal: return "PseudoReal";
        case Verdict::NoAntiholomorphic: return "NoAntiholomorphic";
    }
    return "?";
}

/// All c with lhs_k = c * rhs_k for every k, kept only when unimodular (at most one).
inline std::vector<CycloNum> solve_unimodular_identity(const std::vector<CycloNum>& lhs,
                                                       const std::vector<CycloNum>& rhs) {
    if (lhs.size() != rhs.size()) throw Error(Errc::InvalidArgument, "sequences differ in length");
    std::optional<CycloNum> c;
    for (size_t k = 0; k < rhs.size(); ++k)
        if (!rhs[k].is_zero()) {
            c = lhs[k] / rhs[k];
            break;
        }
    if (!c) return {};  // rhs identically zero
    for (size_t k = 0; k < rhs.size(); ++k)
        if (!(lhs[k] == (*c) * rhs[k])) return {};
    if (!c->is_unimodular()) return {};
    return {*c};
}

/// e^{i theta} with b_k = (-1)^k e^{i theta} conj(a_{d-k}) for all k; odd degree only.
/// Such a witness means tau(z) = -1/conj(z) is an automorphism.
inline std::optional<CycloNum> has_tau_automorphism(const RationalMap& phi) {
    const int d = phi.degree();
    if (d % 2 == 0) return std::nullopt;
    std::vector<CycloNum> lhs, rhs;
    for (int k = 0; k <= d; ++k) {
        lhs.push_back(phi.b(k));
        const CycloNum c = phi.a(d - k).conj();
        rhs.push_back(k % 2 == 0 ? c : -c);
    }
    auto sol = solve_unimodular_identity(lhs, rhs);
    if (sol.empty()) return std::nullopt;
    return sol.front();
}

/// The exact cyclic-case certificate.
struct Teo7Result {
    bool condition_a = false;  // psi(z) != conj(psi)(c z) for every unimodular c
    std::optional<CycloNum> a_failure_witness;  // c^g for the identity that breaks (a)
    int a_gcd = 0;
    bool condition_b = false;  // some beta != 1 on the unit circle with psi(z) conj(psi)(beta/z) = 1
    int b_gcd = 0;             // beta^b_gcd = b_power (b_gcd = 0: beta free)
    std::optional<CycloNum> b_power;
    std::optional<CycloNum> beta;  // explicit beta when it lies in the field
    std::optional<CycloNum> lambda;
    bool pseudo_real_evidence() const { return condition_a && condition_b; }
};

/// Decide conditions (a) and (b) on the psi-parameter of a normal form.
inline Teo7Result teo7_check(const CanonicalCyclicForm& form) {
    if (form.n < 2) throw Error(Errc::NotCanonical, "normal form needs n >= 2");
    const RationalMap& psi = form.psi;
    const int r = psi.degree();
    Teo7Result out;

    // (a): (a_k, b_k) = l * (conj a_k, conj b_k) * c^k
    {
        std::vector<std::pair<int, CycloNum>> data;
        for (int k = 0; k <= r; ++k)
            for (const CycloNum& x : {psi.a(k), psi.b(k)})
                if (!x.is_zero()) data.emplace_back(k, x / x.conj());
        const auto sol = solve_power_relations(data);
        // the ratios are unimodular, so any solution yields a unimodular c
        out.condition_a = !sol.has_value();
        if (sol) {
            out.a_gcd = sol->g;
            out.a_failure_witness = sol->S;
        }
    }

    // (b): a_k = l conj(b_{r-k}) beta^{r-k}, b_k = l conj(a_{r-k}) beta^{r-k}
    {
        std::vector<std::pair<int, CycloNum>> data;
        bool pattern = true;
        for (int k = 0; k <= r && pattern; ++k) {
            const CycloNum ak = psi.a(k), bk = psi.b(k);
            const CycloNum bc = psi.b(r - k).conj(), ac = psi.a(r - k).conj();
            if (ak.is_zero() != bc.is_zero() || bk.is_zero() != ac.is_zero()) {
                pattern = false;
                break;
            }
            if (!ak.is_zero()) data.emplace_back(r - k, ak / bc);
            if (!bk.is_zero()) data.emplace_back(r - k, bk / ac);
        }
        const auto sol = pattern ? solve_power_relations(data) : std::nullopt;
        if (sol) {
            out.b_gcd = sol->g;
            out.b_power = sol->S;
            if (sol->g == 0) {
                out.condition_b = true;
                out.beta = CycloNum(-1);
            } else if (sol->S.is_unimodular()) {
                out.condition_b = sol->g >= 2 || !sol->S.is_one();
                if (sol->g == 1) out.beta = sol->S;
            }
            if (out.beta) {
                // l from the first relation
                const auto& [e, rho] = data.front();
                out.lambda = rho / out.beta->rebase(std::lcm(out.beta->order(), rho.order())).pow(e);
            }
        }
    }
    return out;
}

struct ClassifyOptions {
    AutOptions aut;
    bool exact = false;  // certify the group and run the exact cyclic certificate
};

struct Classification {
    Verdict verdict = Verdict::NoAntiholomorphic;
    int degree = 0;
    AutGroupReport group;
    std::optional<CycloNum> theta;  // tau witness
    std::optional<AutElement> reflection;
    std::optional<AutElement> imaginary_reflection;
    std::optional<CanonicalCyclicForm> normal_form;
    std::optional<Teo7Result> teo7;
    bool polynomial_like = false;
    bool exact_mode = false;
    bool certified = false;
    std::vector<std::string> consistency_notes;
};

/// Real / pseudo-real decision from the full automorphism group.
inline Classification classify_map(const RationalMap& phi, const ClassifyOptions& opts = {}) {
    const int d = phi.degree();
    if (d < 2) throw Error(Errc::BadDegree, "classification needs degree >= 2");
    Classification c;
    c.degree = d;
    c.exact_mode = opts.exact;
    AutOptions ao = opts.aut;
    ao.certify = opts.exact;
    c.group = automorphism_group(phi, ao);
    c.certified = c.group.certified;
    c.theta = has_tau_automorphism(phi);
    c.polynomial_like = is_polynomial_like(phi);

    // every antiholomorphic involution of the closed group is examined
    for (const auto& e : c.group.elements) {
        if (!e.numeric.antiholomorphic() || e.order != 2) continue;
        const InvolutionKind k = e.exact ? classify_involution(*e.exact) : classify_involution(e.numeric);
        if (k == InvolutionKind::Reflection && !c.reflection) c.reflection = e;
        if (k == InvolutionKind::ImaginaryReflection && !c.imaginary_reflection) c.imaginary_reflection = e;
    }
    if (c.group.antiholomorphic_count() == 0) c.verdict = Verdict::NoAntiholomorphic;
    else if (c.reflection) c.verdict = Verdict::Real;
    else c.verdict = Verdict::PseudoReal;

    // cross-checks
    if (c.theta) {
        c.consistency_notes.push_back("tau-coefficient identity holds");
        if (c.group.antiholomorphic_count() == 0)
            throw Error(Errc::ConsistencyViolation, "tau identity holds but no antiholomorphic element was found");
    }
    if (c.group.holo_type.kind == HoloKind::Trivial && c.group.antiholomorphic_count() > 0) {
        // the antiholomorphic coset is a single involution
        const bool imaginary = c.imaginary_reflection.has_value();
        if ((c.verdict == Verdict::PseudoReal) != imaginary)
            throw Error(Errc::ConsistencyViolation, "trivial group: verdict disagrees with the involution type");
        c.consistency_notes.push_back("trivial holomorphic group: single antiholomorphic involution");
    }
    if (opts.exact && c.group.holo_type.kind == HoloKind::Cyclic && c.group.holo_type.n >= 2) {
        const int n = c.group.holo_type.n;
        const AutElement* gen = nullptr;
        for (const auto& e : c.group.elements)
            if (!e.numeric.antiholomorphic() && e.order == n && e.exact) {
                gen = &e;
                break;
            }
        if (!gen) {
            c.consistency_notes.push_back("cyclic generator not certified; exact certificate skipped");
        } else {
            try {
                c.normal_form = canonicalize_cyclic(phi, *gen->exact);
                c.teo7 = teo7_check(*c.normal_form);
                const bool exact_pr = c.teo7->pseudo_real_evidence();
                if (exact_pr != (c.verdict == Verdict::PseudoReal))
                    throw Error(Errc::ConsistencyViolation, "exact cyclic certificate disagrees with the group verdict");
                c.consistency_notes.push_back("exact cyclic certificate agrees");
            } catch (const Error& err) {
                if (err.code() == Errc::ConsistencyViolation) throw;
                c.consistency_notes.push_back(std::string("exact certificate unavailable: ") + err.what());
            }
        }
    }
    if (c.verdict == Verdict::PseudoReal) {
        if (d % 2 == 0 || d < 3) throw Error(Errc::ConsistencyViolation, "pseudo-real verdict in even degree");
        if (c.polynomial_like) throw Error(Errc::ConsistencyViolation, "pseudo-real verdict for a polynomial-like map");
        if (!c.group.holo_type.trivial_or_cyclic())
            throw Error(Errc::ConsistencyViolation, "pseudo-real verdict with non-cyclic holomorphic group");
        c.consistency_notes.push_back("pseudo-real necessary conditions hold");
    }
    return c;
}

/// phi is conjugate to its coefficient conjugate iff it has an antiholomorphic automorphism.
inline bool is_conjugate_to_conjugate(const RationalMap& phi, const AutOptions& opt = {}) {
    return !antiholomorphic_automorphisms(phi, opt).empty();
}

}  // namespace ratsym

#endif  // RATSYM_CLASSIFY_HPP
