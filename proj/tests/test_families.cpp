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

#include <functional>
#include <random>

#include "ratsym/families.hpp"
#include "test_support.hpp"

using namespace ratsym;
using namespace testing_support;

namespace {

const CycloNum I = i_unit();
const CycloNum O(0), U(1);

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

Moebius tau_n(int n) {
    const int m = std::lcm(4, 2 * n);
    return Moebius(CycloNum::zero(m), root_of_unity(m, m / (2 * n)), CycloNum::one(m), CycloNum::zero(m), true);
}

T4Params random_t4(std::mt19937_64& rng, int n, int r) {
    std::uniform_int_distribution<int> u(-3, 3);
    for (;;) {
        T4Params p;
        p.n = n;
        p.r = r;
        p.theta = CycloNum(1);
        for (int k = 0; k <= r; ++k) p.a.push_back(CycloNum(u(rng)) + I * CycloNum(u(rng)));
        try {
            t4_psi(p);
            return p;
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST(Silverman, MatchesBinomialExpansion) {
    for (int d = 3; d <= 13; d += 2) EXPECT_TRUE(equals_projective(silverman(d), silverman_by_hand(d))) << d;
}

TEST(Silverman, DegreeThreeCoefficients) {
    // i (z - 1)^3 / (z + 1)^3
    const RationalMap f = silverman(3);
    EXPECT_EQ(f.degree(), 3);
    EXPECT_TRUE(equals_projective(f, map({-I, CycloNum(3) * I, CycloNum(-3) * I, I}, {U, CycloNum(3), CycloNum(3), U})));
}

TEST(Silverman, RejectsBadDegree) {
    EXPECT_EQ(code_of([] { silverman(4); }), Errc::BadDegree);
    EXPECT_EQ(code_of([] { silverman(1); }), Errc::BadDegree);
}

TEST(Silverman, TauIsAutomorphism) {
    for (int d = 3; d <= 9; d += 2) EXPECT_TRUE(verify_automorphism_exact(silverman(d), tau_n(1)));
}

TEST(Example13, Coefficients) {
    // z (1 + z^6 + i z^12) / (-i - z^6 + z^12)
    std::vector<CycloNum> num(14, CycloNum::zero(4)), den(13, CycloNum::zero(4));
    num[1] = CycloNum::one(4);
    num[7] = CycloNum::one(4);
    num[13] = I;
    den[0] = -I;
    den[6] = CycloNum(-1).rebase(4);
    den[12] = CycloNum::one(4);
    const RationalMap want = RationalMap::reduce(Poly(num, CycloNum::zero(4)), Poly(den, CycloNum::zero(4)));
    EXPECT_TRUE(equals_projective(example13(), want));
    EXPECT_EQ(example13().degree(), 13);
}

TEST(Example13, Symmetries) {
    const RationalMap f = example13();
    EXPECT_TRUE(verify_automorphism_exact(f, tau_n(6)));
    EXPECT_TRUE(verify_automorphism_exact(f, Moebius(root_of_unity(12, 2), CycloNum::zero(12), CycloNum::zero(12),
                                                     CycloNum::one(12))));
    EXPECT_EQ(order(tau_n(6), 20), std::optional<int>(12));
}

TEST(Example13, ClassifiedPseudoRealCyclicSix) {
    ClassifyOptions o;
    o.exact = true;
    const auto c = classify_map(example13(), o);
    EXPECT_EQ(c.verdict, Verdict::PseudoReal);
    EXPECT_EQ(c.group.holo_type, (HoloType{HoloKind::Cyclic, 6}));
    EXPECT_TRUE(c.certified);
    ASSERT_TRUE(c.teo7.has_value());
    EXPECT_TRUE(c.teo7->condition_a);
    EXPECT_TRUE(c.teo7->condition_b);
    ASSERT_TRUE(c.teo7->beta.has_value());
    EXPECT_EQ(*c.teo7->beta, CycloNum(-1));
    bool order12 = false;
    for (const auto& e : c.group.elements) order12 = order12 || (e.numeric.antiholomorphic() && e.order == 12);
    EXPECT_TRUE(order12);
}

TEST(T4, ConditionViolations) {
    auto base = example13_params();
    auto with = [&](auto edit) {
        T4Params p = base;
        edit(p);
        return code_of([&] { t4_psi(p); });
    };
    EXPECT_EQ(with([](T4Params& p) { p.n = 5; }), Errc::ConditionViolation);
    EXPECT_EQ(with([](T4Params& p) {
                  p.r = 3;
                  p.a.push_back(U);
              }),
              Errc::ConditionViolation);
    EXPECT_EQ(with([](T4Params& p) { p.a.pop_back(); }), Errc::ConditionViolation);
    EXPECT_EQ(with([](T4Params& p) { p.theta = CycloNum(2); }), Errc::ConditionViolation);
    EXPECT_EQ(with([](T4Params& p) { p.a[1] = O; }), Errc::ConditionViolation);
    // a_0 a_r real with theta = 0
    EXPECT_EQ(with([](T4Params& p) { p.a[2] = U; }), Errc::ConditionViolation);
    // common factor between numerator and denominator
    EXPECT_EQ(with([](T4Params& p) {
                  p.theta = I;
                  p.a = {U, U, CycloNum(-1)};
              }),
              Errc::ConditionViolation);
}

TEST(T4, FamilyProperties) {
    std::mt19937_64 rng(61);
    for (int n : {6, 8, 10}) {
        for (int trial = 0; trial < 2; ++trial) {
            const T4Params p = random_t4(rng, n, 2);
            const RationalMap f = t4_family(p);
            EXPECT_EQ(f.degree(), n * p.r + 1);
            EXPECT_TRUE(verify_automorphism_exact(f, tau_n(n)));
            const auto c = classify_map(f);
            EXPECT_EQ(c.verdict, Verdict::PseudoReal);
            EXPECT_EQ(c.group.holo_type, (HoloType{HoloKind::Cyclic, n}));
        }
    }
}

TEST(T4, ReflectedCoefficientRule) {
    const RationalMap psi = t4_psi(example13_params());
    // conj(psi)(z) = 1/psi(-1/z)
    const int r = psi.degree();
    const RationalMap rhs = RationalMap::reduce(psi.denom().scale_variable(CycloNum(-1)).reversed(r),
                                                psi.numer().scale_variable(CycloNum(-1)).reversed(r));
    EXPECT_TRUE(equals_projective(psi.conj_map(), rhs));
}

TEST(Quotient, Example13Semiconjugacy) {
    const RationalMap f = example13();
    const Moebius T(root_of_unity(12, 2), CycloNum::zero(12), CycloNum::zero(12), CycloNum::one(12));
    const auto form = canonicalize_cyclic(f, T);
    EXPECT_EQ(form.n, 6);
    const RationalMap q = quotient_map(form);
    EXPECT_EQ(q.degree(), 13);
    EXPECT_TRUE(verify_semiconjugacy(conjugate_by(f, form.conjugator), q, 6));
}

TEST(Quotient, Example13QuotientIsPseudoRealTrivial) {
    const RationalMap f = example13();
    const Moebius T(root_of_unity(12, 2), CycloNum::zero(12), CycloNum::zero(12), CycloNum::one(12));
    const RationalMap q = quotient_map(canonicalize_cyclic(f, T));
    ClassifyOptions o;
    o.exact = true;
    const auto c = classify_map(q, o);
    EXPECT_EQ(c.verdict, Verdict::PseudoReal);
    EXPECT_EQ(c.group.holo_type.kind, HoloKind::Trivial);
    EXPECT_TRUE(c.certified);
}

TEST(Quotient, SemiconjugacyProperty) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 4;
        const RationalMap psi = random_map(rng, 1 + trial % 2, 4, 3);
        CanonicalCyclicForm form;
        form.n = n;
        form.psi = psi;
        form.r = psi.degree();
        const RationalMap f = from_psi(psi, n);
        const RationalMap q = quotient_map(form);
        EXPECT_TRUE(verify_semiconjugacy(f, q, n));
        // a perturbed quotient breaks it
        const RationalMap bad = RationalMap::reduce(q.numer() + Poly::constant(CycloNum::one(q.field_order())), q.denom());
        EXPECT_FALSE(verify_semiconjugacy(f, bad, n));
    }
}

TEST(Quotient, RejectsBadInput) {
    CanonicalCyclicForm form;
    EXPECT_EQ(code_of([&] { quotient_map(form); }), Errc::NotCanonical);
    EXPECT_EQ(code_of([] { verify_semiconjugacy(silverman(3), silverman(3), 1); }), Errc::InvalidArgument);
}
