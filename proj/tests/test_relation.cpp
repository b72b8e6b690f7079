#include <gtest/gtest.h>

#include "support.hpp"

using namespace drinrel;
using namespace drinrel::testing;

namespace {

void expect_oracle_agrees(const DrinfeldModule& E, const std::vector<RatFunc>& pts, const RelationBasis& rb) {
    const FieldPtr& f = E.field();
    for (long delta = 0; delta <= rb.bound; ++delta)
        EXPECT_EQ(relation_slice(f, rb.vectors, pts.size(), delta), oracle_relations(E, pts, delta).space)
            << "delta " << delta;
}

}  // namespace

TEST(LinearSystem, WorkedExample) {
    const auto [E, P] = worked_example();
    const FieldPtr f = E.field();
    const LinearSystem sys = build_linear_system(E, P);
    EXPECT_EQ(sys.d, 3);
    EXPECT_EQ(sys.ell, 2);
    EXPECT_EQ(sys.B.cols(), 5u);
    EXPECT_LE(sys.B.max_deg(), 1);
    EXPECT_TRUE(leq(sys.masser.D, sys.Dtilde));
    EXPECT_EQ(sys.gamma.dimension, static_cast<long>(sys.B.rows()));

    const RelationBasis rb = relation_basis_of(E, P, sys);
    EXPECT_EQ(rb.bound, 5);
    EXPECT_EQ(rb.rank_B, 5u);
    EXPECT_TRUE(rb.vectors.empty());
    EXPECT_EQ(oracle_relations(E, P, 5).space.dim(), 0u);
    expect_oracle_agrees(E, P, rb);

    const IndependenceReport rep = is_independent(E, P, true);
    EXPECT_TRUE(rep.independent);
    EXPECT_TRUE(rep.audited);
    EXPECT_EQ(rep.oracle_dim, 0u);
}

TEST(Verify, WorkedExampleCandidates) {
    const auto [E, P] = worked_example();
    const FieldPtr f = E.field();
    const TPoly t = TPoly::x(f), one = TPoly::one(f), zero(f);
    EXPECT_FALSE(verify_relation(E, P, {one, zero}));
    EXPECT_FALSE(verify_relation(E, P, {t + one, one}));
    EXPECT_FALSE(recover_g(E, P, {t, one}).has_value());
    EXPECT_FALSE(recover_g(E, P, {one, zero}).has_value());
    EXPECT_THROW(recover_g(E, P, {zero, zero}), InputError);
    EXPECT_THROW(verify_relation(E, P, {one}), InputError);
    EXPECT_EQ(combine_points(P, {t, one}), PolyTOverK({P[1], P[0]}));
}

TEST(Verify, EncodingRoundTrip) {
    Rng rng(89);
    const FieldPtr f = small_field(3);
    for (int it = 0; it < 50; ++it) {
        const PolyVec a{random_t_poly(f, 3, rng), random_t_poly(f, 2, rng)};
        EXPECT_EQ(decode_relation(f, encode_relation(f, a, 4), 2, 4), a);
    }
    EXPECT_THROW(encode_relation(f, {TPoly::x(f)}, 0), InputError);
}

TEST(Torsion, SinglePointBasisIsT) {
    Rng rng(97);
    for (int it = 0; it < 25; ++it) {
        const auto [E, P] = torsion_instance(rng);
        const FieldPtr f = E.field();
        EXPECT_TRUE(E.act_t(P[0]).is_zero());
        const RelationBasis rb = relation_basis(E, P);
        ASSERT_EQ(rb.vectors.size(), 1u);
        EXPECT_EQ(rb.vectors[0], PolyVec{TPoly::x(f)});
        const auto g = recover_g(E, P, rb.vectors[0]);
        ASSERT_TRUE(g.has_value());
        EXPECT_EQ(*g, PolyTOverK({-P[0]}));
        EXPECT_TRUE(difference_residual(E, *g, combine_points(P, rb.vectors[0])).is_zero());
        expect_oracle_agrees(E, P, rb);
    }
}

TEST(Planted, RelationsAreFoundAndCertified) {
    Rng rng(101);
    for (int it = 0; it < 30; ++it) {
        const Planted pl = planted_instance(rng, 16);
        const auto& E = pl.inst.E;
        const auto& P = pl.inst.points;
        const RelationBasis rb = relation_basis(E, P);
        EXPECT_EQ(rb.bound, pl.bound);
        ASSERT_FALSE(rb.vectors.empty());
        EXPECT_TRUE(in_span({pl.c, -pl.b}, rb.vectors));
        for (const auto& m : rb.vectors) {
            EXPECT_LE(vec_degree(m), rb.bound);
            EXPECT_TRUE(verify_relation(E, P, m));
            const auto g = recover_g(E, P, m);
            ASSERT_TRUE(g.has_value());
            EXPECT_TRUE(difference_residual(E, *g, combine_points(P, m)).is_zero());
        }
        expect_oracle_agrees(E, P, rb);
    }
}

TEST(Independence, RandomInstancesAgreeWithOracle) {
    Rng rng(103);
    int done = 0;
    while (done < 20) {
        const auto inst = random_instance(rng);
        const auto sys = build_linear_system(inst.E, inst.points);
        if (sys.d + sys.ell > 12) continue;
        ++done;
        const RelationBasis rb = relation_basis_of(inst.E, inst.points, sys);
        expect_oracle_agrees(inst.E, inst.points, rb);
        EXPECT_NO_THROW(is_independent(inst.E, inst.points, true));
    }
}

TEST(Independence, SinglePoint) {
    const auto [E, P] = worked_example();
    const IndependenceReport rep = is_independent(E, {P[0]}, true);
    EXPECT_TRUE(rep.independent);
    EXPECT_EQ(rep.basis.ell, 1);
}

TEST(Invariance, TwistKeepsDegree) {
    const auto [E, P] = worked_example();
    const FieldPtr f = E.field();
    const auto [a, b] = invariance_check(E, P, RatFunc::theta(f));
    EXPECT_EQ(a, 2);
    EXPECT_EQ(b, 2);
    EXPECT_THROW(invariance_check(E, P, RatFunc::zero(f)), InputError);
    Rng rng(107);
    for (int it = 0; it < 30; ++it) {
        const auto inst = random_instance(rng);
        const auto [d1, d2] = invariance_check(inst.E, inst.points, random_ratfunc(inst.E.field(), 3, rng));
        EXPECT_EQ(d1, d2);
    }
}
