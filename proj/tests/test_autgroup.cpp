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

#include "ratsym/autgroup.hpp"
#include "ratsym/expr.hpp"
#include "test_support.hpp"

using namespace ratsym;
using namespace testing_support;

namespace {

const CycloNum I = i_unit();
const CycloNum O(0), U(1);

RationalMap power_map(int d) {
    std::vector<CycloNum> c(static_cast<size_t>(d) + 1, O);
    c.back() = U;
    return RationalMap::reduce(Poly(c, O), Poly::constant(U));
}

/// z psi(z^n) for a random psi of degree r in the given case.
RationalMap random_cyclic(std::mt19937_64& rng, int n, int r, char tag, RationalMap* psi_out = nullptr) {
    for (;;) {
        std::vector<CycloNum> a = random_poly(rng, r, 4, 3).padded(r), b = random_poly(rng, r, 4, 3).padded(r);
        if (tag != 'a') b[0] = CycloNum::zero(4);
        if (tag == 'c') a[static_cast<size_t>(r)] = CycloNum::zero(4);
        const RationalMap psi = RationalMap::reduce(Poly(a, CycloNum::zero(4)), Poly(b, CycloNum::zero(4)));
        if (psi.degree() != r) continue;
        const bool ar = !psi.a(r).is_zero(), b0 = !psi.b(0).is_zero();
        if ((tag == 'a') != (ar && b0) || (tag == 'b' && !(ar && !b0)) || (tag == 'c' && (ar || b0))) continue;
        const RationalMap f = from_psi(psi, n);
        const int expect = tag == 'a' ? n * r + 1 : tag == 'b' ? n * r : n * r - 1;
        if (f.degree() != expect) continue;
        if (psi_out) *psi_out = psi;
        return f;
    }
}

}  // namespace

TEST(AutGroup, PowerMapGroupOrder) {
    const std::vector<HoloType> want{{HoloKind::Cyclic, 2}, {HoloKind::Dihedral, 2}, {HoloKind::Dihedral, 3},
                                     {HoloKind::Dihedral, 4}};
    for (int d = 2; d <= 5; ++d) {
        const auto holo = holomorphic_automorphisms(power_map(d));
        EXPECT_EQ(holo.size(), static_cast<size_t>(2 * (d - 1))) << "d = " << d;
        EXPECT_EQ(classify_group_type(holo), want[static_cast<size_t>(d - 2)]) << "d = " << d;
    }
}

TEST(AutGroup, PowerMapCertified) {
    AutOptions opt;
    opt.certify = true;
    const auto rep = automorphism_group(power_map(4), opt);
    EXPECT_TRUE(rep.certified);
    EXPECT_EQ(rep.holomorphic_count(), 6u);
    EXPECT_EQ(rep.antiholomorphic_count(), 6u);
    for (const auto& e : rep.elements) {
        ASSERT_TRUE(e.exact.has_value());
        EXPECT_TRUE(verify_automorphism_exact(power_map(4), *e.exact));
    }
}

TEST(AutGroup, IdentityFirstAndSorted) {
    const auto rep = automorphism_group(power_map(3));
    ASSERT_FALSE(rep.elements.empty());
    EXPECT_TRUE(approx_identity(rep.elements.front().numeric, 1e-9));
    bool seen_anti = false;
    for (const auto& e : rep.elements) {
        if (e.numeric.antiholomorphic()) seen_anti = true;
        else EXPECT_FALSE(seen_anti) << "holomorphic element after an antiholomorphic one";
    }
}

TEST(AutGroup, GenericMapHasTrivialGroup) {
    const RationalMap f = map({U, CycloNum(2), I}, {CycloNum(3), I, U});
    const auto rep = automorphism_group(f);
    EXPECT_EQ(rep.holo_type.kind, HoloKind::Trivial);
    EXPECT_EQ(rep.antiholomorphic_count(), 0u);
}

TEST(AutGroup, VerifyExactRejectsNonAutomorphism) {
    EXPECT_FALSE(verify_automorphism_exact(power_map(3), Moebius(U, U, O, U)));
    EXPECT_TRUE(verify_automorphism_exact(power_map(3), Moebius(O, U, U, O)));
}

TEST(AutGroup, ClassifyGroupTypeRejectsNonGroups) {
    const CMoebius rot(Complex(0, 1), 0, 0, 1);
    EXPECT_THROW(classify_group_type({CMoebius::identity(Complex(0)), rot}), Error);
    try {
        classify_group_type({CMoebius::identity(Complex(0)), rot});
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotAGroup);
    }
}

TEST(AutGroup, ClassifyGroupTypeFromGenerators) {
    // the rotation group of the octahedron from z -> iz and z -> (z + 1)/(-z + 1)
    std::vector<CMoebius> g{CMoebius::identity(Complex(0))};
    const std::vector<CMoebius> gens{CMoebius(Complex(0, 1), 0, 0, 1), CMoebius(1, 1, -1, 1)};
    for (size_t k = 0; k < g.size() && g.size() < 100; ++k)
        for (const auto& s : gens) {
            const CMoebius h = (g[k] * s).normalized();
            bool have = false;
            for (const auto& x : g) have = have || projective_distance(x, h) < 1e-9;
            if (!have) g.push_back(h);
        }
    ASSERT_EQ(g.size(), 24u);
    EXPECT_EQ(classify_group_type(g).kind, HoloKind::S4);
}

TEST(AutGroup, SearchFindsGroupAfterConjugation) {
    std::mt19937_64 rng(11);
    const RationalMap base = power_map(3);
    for (int trial = 0; trial < 5; ++trial) {
        const Moebius g = random_moebius(rng, 4, false);
        const RationalMap f = conjugate_by(base, g);
        const auto rep = automorphism_group(f);
        EXPECT_EQ(rep.holo_type, (HoloType{HoloKind::Dihedral, 2}));
        EXPECT_EQ(rep.antiholomorphic_count(), 4u);
    }
}

TEST(AutGroup, GroupIsClosedProperty) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const RationalMap f = random_cyclic(rng, 2 + trial % 3, 1 + trial % 2, 'a');
        const auto rep = automorphism_group(f);
        for (const auto& x : rep.elements)
            for (const auto& y : rep.elements) {
                const CMoebius xy = (x.numeric * y.numeric).normalized();
                bool found = false;
                for (const auto& z : rep.elements) found = found || projective_distance(z.numeric, xy) < 1e-6;
                EXPECT_TRUE(found);
            }
    }
}

TEST(AutGroup, TranslatedDegreeThirteenKeepsCyclicSix) {
    // z psi(z^6) moved by z + 1; fixed-point multipliers in one orbit differ by ~1e-6 relative
    const RationalMap f = parse_map_expr(
        "((12/13 - 21/13*i) + (-186/13 + 228/13*i)*z + (1272/13 - 1017/13*i)*z^2 + (-4707/13 + 3099/13*i)*z^3"
        " + (11350/13 - 6960/13*i)*z^4 + (-19290/13 + 11898/13*i)*z^5 + (24032/13 - 15549/13*i)*z^6"
        " + (-22311/13 + 15459/13*i)*z^7 + (1188 - 891*i)*z^8 + (-605 + 495*i)*z^9 + (220 - 198*i)*z^10"
        " + (-54 + 54*i)*z^11 + (8 - 9*i)*z^12 + (-7/13 + 9/13*i)*z^13)/((6/13 + 9/13*i) + (-6)*z + (51)*z^2"
        " + (-200)*z^3 + (480)*z^4 + (-786)*z^5 + (923)*z^6 + (-792)*z^7 + (495)*z^8 + (-220)*z^9 + (66)*z^10"
        " + (-12)*z^11 + z^12)");
    EXPECT_EQ(classify_group_type(holomorphic_automorphisms(f)), (HoloType{HoloKind::Cyclic, 6}));
}

TEST(AutGroup, CertifyElementRecoversRotation) {
    const RationalMap f = power_map(4);
    const CMoebius g(Complex(-0.5, std::sqrt(3.0) / 2), 0, 0, 1);
    const auto ex = certify_element(f, g, 3);
    ASSERT_TRUE(ex.has_value());
    EXPECT_EQ(order(*ex, 10), std::optional<int>(3));
}

TEST(PowerRelations, Examples) {
    auto sol = solve_power_relations({{0, U}, {2, CycloNum(4)}, {4, CycloNum(16)}});
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->g, 2);
    EXPECT_EQ(sol->S, CycloNum(4));

    sol = solve_power_relations({{0, U}, {2, CycloNum(4)}, {3, CycloNum(8)}});
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->g, 1);
    EXPECT_EQ(sol->S, CycloNum(2));

    EXPECT_FALSE(solve_power_relations({{0, U}, {2, CycloNum(4)}, {3, CycloNum(9)}}));
    EXPECT_FALSE(solve_power_relations({{1, U}, {1, CycloNum(2)}}));

    sol = solve_power_relations({{1, I}, {1, I}});
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->g, 0);
}

TEST(PowerRelations, RandomConsistentSystems) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        CycloNum s = random_cyclo(rng, 4, 3), c = random_cyclo(rng, 4, 3);
        if (s.is_zero() || c.is_zero()) continue;
        std::vector<std::pair<int, CycloNum>> data;
        for (int k = 0; k < 4; ++k) {
            const int ek = e(rng);
            data.emplace_back(ek, c * s.pow(ek));
        }
        const auto sol = solve_power_relations(data);
        ASSERT_TRUE(sol);
        if (sol->g > 0) {
            EXPECT_EQ(sol->S, s.pow(sol->g));
        }
    }
}

TEST(Canonical, RecoversPsiAfterConjugation) {
    std::mt19937_64 rng(17);
    for (char tag : {'a', 'b', 'c'}) {
        for (int trial = 0; trial < 4; ++trial) {
            RationalMap psi;
            const int n = 2 + trial % 2;
            const RationalMap base = random_cyclic(rng, n, 2, tag, &psi);
            const Moebius L = random_moebius(rng, 4, false);
            const RationalMap f = conjugate_by(base, L);
            const Moebius rot(root_of_unity(4 * n, 4), CycloNum::zero(4 * n), CycloNum::zero(4 * n),
                              CycloNum::one(4 * n));
            const Moebius T = L * rot * L.inverse();
            const auto form = canonicalize_cyclic(f, T);
            EXPECT_EQ(form.n, n);
            EXPECT_EQ(form.r, 2);
            EXPECT_EQ(form.case_tag, tag);
            EXPECT_TRUE(equals_projective(from_psi(form.psi, n), conjugate_by(f, form.conjugator)));
            EXPECT_TRUE(same_normalizer_orbit(psi, form.psi)) << "case " << tag;
        }
    }
}

TEST(Canonical, FlipFoldsThirdCase) {
    // a_r = 0 with b_0 != 0: psi = 1 / (1 + u + u^2) at n = 2 gives degree 5 = nr + 1 after the flip
    const RationalMap psi = map({U}, {U, U, U});
    const RationalMap f = from_psi(psi, 2);
    const Moebius T(CycloNum(-1), O, O, U);
    const auto form = canonicalize_cyclic(f, T);
    EXPECT_TRUE(form.flipped);
    EXPECT_EQ(form.case_tag, 'b');
    EXPECT_TRUE(equals_projective(from_psi(form.psi, 2), conjugate_by(f, form.conjugator)));
}

TEST(Canonical, AffineGenerator) {
    // T(z) = zeta_3 (z - 1) + 1 fixes 1 and infinity
    std::mt19937_64 rng(89);
    RationalMap psi;
    const RationalMap f0 = random_cyclic(rng, 3, 1, 'a', &psi);
    const CycloNum z3 = root_of_unity(3, 1), one = CycloNum::one(3);
    const Moebius shift(one, one, CycloNum::zero(3), one);
    const RationalMap f = conjugate_by(f0, shift);
    const Moebius T(z3, one - z3, CycloNum::zero(3), one);
    ASSERT_TRUE(verify_automorphism_exact(f, T));
    const auto form = canonicalize_cyclic(f, T);
    EXPECT_EQ(form.n, 3);
    EXPECT_TRUE(same_normalizer_orbit(form.psi, psi));
}

TEST(Canonical, Errors) {
    const RationalMap f = power_map(3);
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvalidArgument;
    };
    EXPECT_EQ(code([&] { canonicalize_cyclic(f, Moebius(CycloNum(2), O, O, U)); }), Errc::OrderMismatch);
    EXPECT_EQ(code([&] { canonicalize_cyclic(f, Moebius(CycloNum(-1), U, O, U)); }), Errc::NotAnAutomorphism);
    EXPECT_EQ(code([&] { canonicalize_cyclic(f, Moebius(O, U, U, O, true)); }), Errc::NotAnAutomorphism);
    // z^3 / 7 commutes with 7/z, whose fixed points +-sqrt(7) lie outside the fields tried
    const RationalMap g = map({O, O, O, U}, {CycloNum(7)});
    ASSERT_TRUE(verify_automorphism_exact(g, Moebius(O, CycloNum(7), U, O)));
    EXPECT_EQ(code([&] { canonicalize_cyclic(g, Moebius(O, CycloNum(7), U, O)); }), Errc::FixedPointsNotInField);
}

TEST(Canonical, SquareRootFixedPointsInField) {
    // z^3 / 2 commutes with 2/z; fixed points +-sqrt(2) lie in Q(zeta_8)
    const RationalMap g = map({O, O, O, U}, {CycloNum(2)});
    const auto form = canonicalize_cyclic(g, Moebius(O, CycloNum(2), U, O));
    EXPECT_EQ(form.n, 2);
    EXPECT_TRUE(equals_projective(from_psi(form.psi, 2), conjugate_by(g, form.conjugator)));
}

TEST(Normalizer, FlipExample) {
    const RationalMap psi = map({U, U}, {U, CycloNum(-1)});  // (1 + u)/(1 - u)
    EXPECT_TRUE(equals_projective(flip_psi(psi), map({CycloNum(-1), U}, {U, U})));  // (u - 1)/(u + 1)
}

TEST(Normalizer, ActionMatchesConjugation) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        RationalMap psi;
        const int n = 2 + trial % 3;
        const RationalMap f = random_cyclic(rng, n, 2, 'a', &psi);
        CycloNum s = random_cyclo(rng, 4, 2);
        if (s.is_zero()) continue;
        // s f(z/s) = z psi(z^n / s^n)
        const RationalMap scaled = conjugate_by(f, Moebius(s, CycloNum::zero(4), CycloNum::zero(4), CycloNum::one(4)));
        EXPECT_TRUE(equals_projective(scaled, from_psi(normalizer_action(psi, s.pow(n), false), n)));
        // 1/f(1/z) = z flip(psi)(z^n)
        const RationalMap flipped = conjugate_by(f, Moebius(O, U, U, O));
        EXPECT_TRUE(equals_projective(flipped, from_psi(normalizer_action(psi, U, true), n)));
        EXPECT_TRUE(same_normalizer_orbit(psi, normalizer_action(psi, s, trial % 2 == 0)));
    }
}

TEST(Normalizer, DistinctOrbits) {
    const RationalMap p1 = map({U, U, U}, {U, CycloNum(2)});
    const RationalMap p2 = map({U, CycloNum(3), U}, {U, CycloNum(2)});
    EXPECT_FALSE(same_normalizer_orbit(p1, p2));
    EXPECT_THROW(normalizer_action(p1, O, false), Error);
}
