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

#include <gtest/gtest.h>

#include <random>

#include "ratsym/classify.hpp"
#include "test_support.hpp"

using namespace ratsym;
using namespace testing_support;

namespace {

const CycloNum I = i_unit();
const CycloNum O(0), U(1);

Moebius tau() { return Moebius(O, CycloNum(-1), U, O, true); }

ClassifyOptions exact_opts() {
    ClassifyOptions o;
    o.exact = true;
    return o;
}

/// Random member of the tau-symmetric family, built from the coefficient rule directly.
RationalMap random_tau_map(std::mt19937_64& rng, int d) {
    for (;;) {
        std::vector<CycloNum> a, b;
        for (int k = 0; k <= d; ++k) a.push_back(random_cyclo(rng, 4, 3));
        const CycloNum th = I;
        for (int k = 0; k <= d; ++k) {
            const CycloNum c = th * a[static_cast<size_t>(d - k)].conj();
            b.push_back(k % 2 == 0 ? c : -c);
        }
        const RationalMap f = RationalMap::reduce(Poly(a, CycloNum::zero(4)), Poly(b, CycloNum::zero(4)));
        if (f.degree() == d) return f;
    }
}

}  // namespace

TEST(Classify, PowerMapIsReal) {
    const auto c = classify_map(map({O, O, O, U}, {U}), exact_opts());
    EXPECT_EQ(c.verdict, Verdict::Real);
    EXPECT_EQ(c.group.holo_type, (HoloType{HoloKind::Dihedral, 2}));
    EXPECT_TRUE(c.reflection.has_value());
    EXPECT_TRUE(c.polynomial_like);
    EXPECT_TRUE(c.certified);
}

TEST(Classify, DegreeThreeTauMapIsPseudoReal) {
    // i ((z - 1)/(z + 1))^3, expanded by hand
    const RationalMap f = silverman_by_hand(3);
    const auto c = classify_map(f, exact_opts());
    EXPECT_EQ(c.verdict, Verdict::PseudoReal);
    EXPECT_EQ(c.group.holo_type.kind, HoloKind::Trivial);
    EXPECT_EQ(c.group.antiholomorphic_count(), 1u);
    ASSERT_TRUE(c.imaginary_reflection.has_value());
    EXPECT_FALSE(c.reflection.has_value());
    ASSERT_TRUE(c.imaginary_reflection->exact.has_value());
    EXPECT_TRUE(c.imaginary_reflection->exact->projectively_equal(tau()));
    ASSERT_TRUE(c.theta.has_value());
    EXPECT_TRUE(verify_automorphism_exact(f, tau()));
    EXPECT_FALSE(c.polynomial_like);
}

TEST(Classify, GenericMapHasNoAntiholomorphic) {
    const RationalMap f = map({U, CycloNum(2), I, U}, {CycloNum(3), I, U, CycloNum(2)});
    const auto c = classify_map(f);
    EXPECT_EQ(c.verdict, Verdict::NoAntiholomorphic);
    EXPECT_FALSE(is_conjugate_to_conjugate(f));
}

TEST(Classify, RealCoefficientsAreReal) {
    const RationalMap f = map({U, CycloNum(2), CycloNum(-1)}, {CycloNum(3), O, U});
    const auto c = classify_map(f);
    EXPECT_EQ(c.verdict, Verdict::Real);
    EXPECT_TRUE(is_conjugate_to_conjugate(f));
}

TEST(Classify, InverseSquareIsReal) {
    // 1/z^2 has an exceptional 2-cycle {0, inf} and no totally invariant point
    const RationalMap f = map({U}, {O, O, U});
    EXPECT_FALSE(is_polynomial_like(f));
    const auto c = classify_map(f);
    EXPECT_EQ(c.verdict, Verdict::Real);
    EXPECT_EQ(c.group.holo_type, (HoloType{HoloKind::Dihedral, 3}));
}

TEST(Classify, RealCyclicFormFailsConditionA) {
    // z psi(z^2) with psi = (1 + 2u)/(3 + u): real coefficients
    const RationalMap psi = map({U, CycloNum(2)}, {CycloNum(3), U});
    const RationalMap f = from_psi(psi, 2);
    const auto c = classify_map(f, exact_opts());
    EXPECT_EQ(c.verdict, Verdict::Real);
    ASSERT_TRUE(c.teo7.has_value());
    EXPECT_FALSE(c.teo7->condition_a);
    EXPECT_FALSE(c.teo7->pseudo_real_evidence());
}

TEST(HasTau, SolveUnimodularIdentity) {
    EXPECT_EQ(solve_unimodular_identity({I, CycloNum(2) * I}, {U, CycloNum(2)}), std::vector<CycloNum>{I});
    EXPECT_TRUE(solve_unimodular_identity({CycloNum(2), CycloNum(4)}, {U, CycloNum(2)}).empty());
    EXPECT_TRUE(solve_unimodular_identity({U, U}, {U, CycloNum(2)}).empty());
    EXPECT_TRUE(solve_unimodular_identity({O, O}, {O, O}).empty());
    EXPECT_THROW(solve_unimodular_identity({U}, {U, U}), Error);
}

TEST(HasTau, EvenDegreeNever) {
    EXPECT_FALSE(has_tau_automorphism(map({O, O, U}, {U})).has_value());
}

TEST(HasTau, MatchesExactVerificationOnFamily) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = trial % 2 == 0 ? 3 : 5;
        const RationalMap f = random_tau_map(rng, d);
        EXPECT_TRUE(has_tau_automorphism(f).has_value());
        EXPECT_TRUE(verify_automorphism_exact(f, tau()));
    }
}

TEST(HasTau, MatchesExactVerificationOnRandomMaps) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = trial % 2 == 0 ? 3 : 5;
        const RationalMap f = random_map(rng, d, 4, 2);
        EXPECT_EQ(has_tau_automorphism(f).has_value(), verify_automorphism_exact(f, tau()));
    }
}

TEST(Classify, VerdictInvariantUnderConjugation) {
    std::mt19937_64 rng(47);
    const std::vector<RationalMap> maps{silverman_by_hand(3), map({O, O, O, U}, {U}),
                                        map({U, CycloNum(2), CycloNum(-1)}, {CycloNum(3), O, U}),
                                        map({U, CycloNum(2), I, U}, {CycloNum(3), I, U, CycloNum(2)})};
    for (const auto& f : maps) {
        const auto base = classify_map(f);
        for (int trial = 0; trial < 3; ++trial) {
            const Moebius g = random_moebius(rng, 4, trial == 2);
            const auto c = classify_map(conjugate_by(f, g));
            EXPECT_EQ(c.verdict, base.verdict);
            EXPECT_EQ(c.group.holo_type, base.group.holo_type);
            EXPECT_EQ(c.group.elements.size(), base.group.elements.size());
        }
    }
}

TEST(Classify, PseudoRealOnlyInOddDegree) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalMap f = random_map(rng, 2 + 2 * (trial % 2), 4, 2);
        EXPECT_NE(classify_map(f).verdict, Verdict::PseudoReal);
    }
}

TEST(Classify, RandomTauMapsArePseudoRealOrReal) {
    std::mt19937_64 rng(59);
    int pseudo = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const RationalMap f = random_tau_map(rng, 3);
        const auto c = classify_map(f);
        EXPECT_NE(c.verdict, Verdict::NoAntiholomorphic);
        ASSERT_TRUE(c.theta.has_value());
        if (c.verdict == Verdict::PseudoReal) {
            ++pseudo;
            EXPECT_TRUE(c.group.holo_type.trivial_or_cyclic());
            EXPECT_TRUE(c.imaginary_reflection.has_value() || c.group.holo_type.kind != HoloKind::Trivial);
        }
    }
    EXPECT_GT(pseudo, 0);
}

TEST(CyclicCriterion, BetaAdmissibilityRule) {
    // psi(u) = (1 + 2u)/(2 + u) at n = 2: psi(u) conj(psi)(1/u) = 1 holds only for beta = 1
    CanonicalCyclicForm form;
    form.n = 2;
    form.psi = map({U, CycloNum(2)}, {CycloNum(2), U});
    form.r = 1;
    const auto t = teo7_check(form);
    EXPECT_EQ(t.b_gcd, 1);
    ASSERT_TRUE(t.b_power.has_value());
    EXPECT_TRUE(t.b_power->is_one());
    EXPECT_FALSE(t.condition_b);
}

TEST(CyclicCriterion, CubicWithInvolutionCanBePseudoReal) {
    // psi = (conj(b2) - conj(b1) u)/(b1 u + b2 u^2) satisfies psi(u) conj(psi)(-1/u) = 1,
    // so z psi(z^2) (degree 3) carries i/conj(z) of order 4 and no reflection
    const CycloNum b1 = U + I, b2 = CycloNum(2) - I;
    CanonicalCyclicForm form;
    form.n = 2;
    form.psi = map({b2.conj(), -b1.conj()}, {O, b1, b2});
    form.r = 2;
    const auto t = teo7_check(form);
    EXPECT_TRUE(t.condition_b);
    ASSERT_TRUE(t.beta.has_value());
    EXPECT_EQ(*t.beta, CycloNum(-1));
    EXPECT_TRUE(t.condition_a);
    const RationalMap f = from_psi(form.psi, 2);
    ASSERT_EQ(f.degree(), 3);
    const Moebius q(O, I, U, O, true);
    EXPECT_TRUE(verify_automorphism_exact(f, q));
    EXPECT_EQ(order(q, 10), std::optional<int>(4));
    const auto c = classify_map(f, exact_opts());
    EXPECT_EQ(c.verdict, Verdict::PseudoReal);
    EXPECT_EQ(c.group.holo_type, (HoloType{HoloKind::Cyclic, 2}));
    EXPECT_TRUE(c.certified);
    EXPECT_FALSE(c.reflection.has_value());
}

TEST(CyclicCriterion, MismatchedZeroPatternHasNoBeta) {
    // psi = -i / (-i/2 u + u^2): a_r = 0 while conj(b_0) = 0 but b_r != 0 and conj(a_0) != 0
    CanonicalCyclicForm form;
    form.n = 2;
    form.r = 2;
    form.case_tag = 'c';
    form.psi = map({-I}, {O, CycloNum(Rational(-1, 2)) * I, U});
    const auto t = teo7_check(form);
    EXPECT_FALSE(t.condition_b);
    EXPECT_FALSE(t.beta.has_value());
}

TEST(CyclicCriterion, RejectsDegenerateForm) {
    CanonicalCyclicForm form;
    form.n = 1;
    EXPECT_THROW(teo7_check(form), Error);
}

TEST(Classify, RejectsDegreeOne) {
    EXPECT_THROW(classify_map(map({U, U}, {CycloNum(2), U})), Error);
}
