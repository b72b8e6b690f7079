#include <gtest/gtest.h>

#include "support.hpp"

using namespace drinrel;
using namespace drinrel::testing;

namespace {

TwistedPoly random_twisted(const FieldPtr& f, std::size_t deg, Rng& rng) {
    std::vector<RatFunc> c;
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(random_ratfunc(f, 2, rng));
    return TwistedPoly(std::move(c));
}

}  // namespace

TEST(TwistedPoly, Commutation) {
    const FieldPtr f = Field::prime(3);
    const RatFunc T = RatFunc::theta(f);
    const RatFunc c = T + RatFunc::one(f);
    const TwistedPoly lhs = twisted_mul(TwistedPoly::tau(f), TwistedPoly::constant(c));
    EXPECT_EQ(lhs, TwistedPoly::tau(f).scaled(c.pow(3)));
    EXPECT_EQ(twisted_mul(TwistedPoly::constant(c), TwistedPoly::tau(f)), TwistedPoly::tau(f).scaled(c));
    EXPECT_TRUE(twisted_mul(TwistedPoly{}, TwistedPoly::tau(f)).is_zero());
}

TEST(TwistedPoly, SquareOfPhiT) {
    const FieldPtr f = Field::prime(2);
    const RatFunc T = RatFunc::theta(f);
    const TwistedPoly p({T, RatFunc::one(f)});
    const TwistedPoly sq = twisted_mul(p, p);
    EXPECT_EQ(sq, TwistedPoly({T * T, T + T * T, RatFunc::one(f)}));
    const auto [E, P] = worked_example();
    EXPECT_EQ(twisted_mul(E.phi_t(), E.phi_t()).degree(), 4);
    EXPECT_EQ(phi_of_a(E, TPoly::x(f).pow(2)), twisted_mul(E.phi_t(), E.phi_t()));
}

TEST(DrinfeldModule, WorkedExample) {
    const auto [E, P] = worked_example();
    const FieldPtr f = E.field();
    const RatFunc T = RatFunc::theta(f);
    EXPECT_EQ(E.rank(), 2);
    EXPECT_EQ(E.act_t(T), T * T + T + T.pow(4));
    EXPECT_EQ(evaluate(E.phi_t(), T), E.act_t(T));
    EXPECT_EQ(j_invariant(E), T.pow(-3));
    EXPECT_EQ(act(E, TPoly::one(f), P[1]), P[1]);
    EXPECT_TRUE(act(E, TPoly(f), P[1]).is_zero());
}

TEST(DrinfeldModule, JInvariantAndRankErrors) {
    const FieldPtr f = Field::prime(2);
    const RatFunc T = RatFunc::theta(f);
    EXPECT_TRUE(j_invariant(DrinfeldModule(f, {RatFunc::zero(f), T})).is_zero());
    EXPECT_THROW(j_invariant(DrinfeldModule(f, {T})), InputError);
    EXPECT_THROW(DrinfeldModule(f, {}), InputError);
}

TEST(DrinfeldModule, TwistExample) {
    const auto [E, P] = worked_example();
    const FieldPtr f = E.field();
    const RatFunc T = RatFunc::theta(f);
    const DrinfeldModule E2 = twist_by_unit(E, T);
    EXPECT_EQ(E2.kappa(1), T.pow(-2));
    EXPECT_EQ(E2.kappa(2), T.pow(-3));
    EXPECT_EQ(j_invariant(E2), j_invariant(E));
    EXPECT_THROW(twist_by_unit(E, RatFunc::zero(f)), InputError);
}

TEST(DrinfeldModule, PhiIsARingHomomorphism) {
    Rng rng(59);
    for (int it = 0; it < 100; ++it) {
        const FieldPtr f = small_field(it % 2 ? 3 : 2);
        const DrinfeldModule E = random_module(f, 1 + it % 2, 2, rng);
        const TPoly a = random_t_poly(f, 2, rng), b = random_t_poly(f, 2, rng);
        PhiPowers cache(E);
        EXPECT_EQ(phi_of_a(E, a * b, cache), twisted_mul(phi_of_a(E, a, cache), phi_of_a(E, b, cache)));
        EXPECT_EQ(phi_of_a(E, a + b, cache), phi_of_a(E, a, cache) + phi_of_a(E, b, cache));
        if (!a.is_zero()) { EXPECT_EQ(phi_of_a(E, a, cache).degree(), a.degree().value() * E.rank()); }
    }
}

TEST(DrinfeldModule, EvaluationComposes) {
    Rng rng(61);
    for (int it = 0; it < 100; ++it) {
        const FieldPtr f = small_field(it % 3 == 0 ? 3 : 2);
        const TwistedPoly F = random_twisted(f, 2, rng), G = random_twisted(f, 1, rng);
        const RatFunc P = random_ratfunc(f, 2, rng), Q = random_ratfunc(f, 2, rng);
        EXPECT_EQ(evaluate(twisted_mul(F, G), P), evaluate(F, evaluate(G, P)));
        EXPECT_EQ(evaluate(F, P + Q), evaluate(F, P) + evaluate(F, Q));
        const Fq c = random_elem(f, rng);
        EXPECT_EQ(evaluate(F, P.scaled(c)), evaluate(F, P).scaled(c));

        const DrinfeldModule E = random_module(f, 2, 1, rng);
        const TPoly a = random_t_poly(f, 2, rng), b = random_t_poly(f, 1, rng);
        EXPECT_EQ(act(E, a, P), evaluate(phi_of_a(E, a), P));
        EXPECT_EQ(act(E, a * b, P), act(E, a, act(E, b, P)));
    }
}

TEST(DrinfeldModule, TwistIntertwines) {
    Rng rng(67);
    for (int it = 0; it < 100; ++it) {
        const FieldPtr f = small_field(it % 2 ? 3 : 2);
        const DrinfeldModule E = random_module(f, 1 + it % 3, 2, rng);
        const RatFunc u = random_ratfunc(f, 2, rng);
        const DrinfeldModule E2 = twist_by_unit(E, u);
        const TwistedPoly U = TwistedPoly::constant(u);
        EXPECT_EQ(twisted_mul(U, E.phi_t()), twisted_mul(E2.phi_t(), U));
        const RatFunc P = random_ratfunc(f, 2, rng);
        const TPoly a = random_t_poly(f, 2, rng);
        EXPECT_EQ(u * act(E, a, P), act(E2, a, u * P));
        if (E.rank() == 2) { EXPECT_EQ(j_invariant(E2), j_invariant(E)); }
        EXPECT_EQ(twist_by_unit(E2, u.inverse()), E);
    }
}

TEST(Frobenius, TwistIsAFieldHomomorphism) {
    Rng rng(71);
    for (int it = 0; it < 100; ++it) {
        const FieldPtr f = small_field(it % 2 ? 4 : 3);
        const RatFunc a = random_ratfunc(f, 3, rng), b = random_ratfunc(f, 3, rng);
        const unsigned n = 1 + static_cast<unsigned>(it % 3);
        EXPECT_EQ((a + b).frobenius(n), a.frobenius(n) + b.frobenius(n));
        EXPECT_EQ((a * b).frobenius(n), a.frobenius(n) * b.frobenius(n));
        EXPECT_EQ(a.frobenius(n).frobenius(1), a.frobenius(n + 1));
        EXPECT_EQ(a.frobenius(1), a.pow(static_cast<long>(f->q())));
        const PolyTOverK g({a, b}), h({b});
        EXPECT_EQ((g * h).frobenius(n), g.frobenius(n) * h.frobenius(n));
        EXPECT_EQ((g + h).frobenius(n), g.frobenius(n) + h.frobenius(n));
    }
}
