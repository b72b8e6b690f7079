#include <gtest/gtest.h>

#include "support.hpp"

using namespace drinrel;
using namespace drinrel::testing;

namespace {

ThetaPoly tp(const FieldPtr& f, std::initializer_list<std::int64_t> c) { return ThetaPoly::from_ints(f, c); }

}  // namespace

TEST(Field, AxiomsOnRandomTriples) {
    Rng rng(11);
    for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
        const FieldPtr f = small_field(q);
        for (int it = 0; it < 300; ++it) {
            const Fq a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
            EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            EXPECT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
            EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            EXPECT_EQ(f->add(a, f->neg(a)), f->zero());
            if (a.raw != 0) { EXPECT_EQ(f->mul(a, f->inv(a)), f->one()); }
        }
    }
}

TEST(Field, FrobeniusFixesElementsAndRejectsBadModulus) {
    const FieldPtr f = small_field(9);
    for (std::uint64_t i = 0; i < 9; ++i) EXPECT_EQ(f->pow(f->element(i), 9), f->element(i));
    EXPECT_THROW(Field::make(2, 2, {1, 0, 1}), InputError);  // w^2 + 1 = (w + 1)^2
    EXPECT_THROW(Field::make(4, 1), InputError);
    EXPECT_THROW(f->inv(f->zero()), InputError);
}

TEST(RatFunc, NormalizeExamples) {
    const FieldPtr f = Field::prime(2);
    EXPECT_EQ(ratfunc_normalize(tp(f, {0, 1, 1}), tp(f, {0, 1})), RatFunc(tp(f, {1, 1})));
    const RatFunc z = ratfunc_normalize(ThetaPoly(f), tp(f, {1, 1}));
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.den().is_one());
    const RatFunc inv = ratfunc_normalize(tp(f, {0, 1}), tp(f, {0, 0, 1}));
    EXPECT_TRUE(inv.num().is_one());
    EXPECT_EQ(inv.den(), tp(f, {0, 1}));
    // cross-multiplication check
    EXPECT_EQ(inv.num() * tp(f, {0, 0, 1}), inv.den() * tp(f, {0, 1}));
    EXPECT_THROW(ratfunc_normalize(tp(f, {1}), ThetaPoly(f)), InputError);
}

TEST(RatFunc, NormalizeIsIdempotentAndMakesDenominatorMonic) {
    Rng rng(3);
    const FieldPtr f = small_field(5);
    for (int it = 0; it < 200; ++it) {
        const RatFunc x = random_ratfunc(f, 4, rng);
        EXPECT_TRUE(x.den().is_monic());
        EXPECT_TRUE(poly_gcd(x.num(), x.den()).is_one());
        EXPECT_EQ(ratfunc_normalize(x.num(), x.den()), x);
        const Fq s = random_unit(f, rng);
        EXPECT_EQ(ratfunc_normalize(x.num().scaled(s), x.den().scaled(s)), x);
    }
}

TEST(RatFunc, FieldOperations) {
    Rng rng(5);
    const FieldPtr f = small_field(4);
    for (int it = 0; it < 200; ++it) {
        const RatFunc a = random_ratfunc(f, 3, rng), b = random_ratfunc(f, 3, rng), c = random_ratfunc(f, 3, rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - b) + b, a);
        EXPECT_EQ(a / a, RatFunc::one(f));
        EXPECT_EQ((a * b) / b, a);
    }
}

TEST(FrobeniusTwist, Examples) {
    const FieldPtr f = Field::prime(2);
    const RatFunc T = RatFunc::theta(f);
    EXPECT_EQ(frobenius_twist(T, 1), T * T);
    const FieldPtr f4 = small_field(4);
    const RatFunc c = RatFunc::constant(f4, f4->generator());
    EXPECT_EQ(frobenius_twist(c, 3), c);
    // ((1/T) t + T)^(1) = (1/T^2) t + T^2
    const PolyTOverK h({T, T.inverse()});
    EXPECT_EQ(frobenius_twist(h, 1), PolyTOverK({T * T, (T * T).inverse()}));
    EXPECT_THROW(frobenius_twist(T, -1), InputError);
}

TEST(FrobeniusTwist, RingHomomorphismAndComposition) {
    Rng rng(7);
    for (std::uint64_t q : {2, 3, 4}) {
        const FieldPtr f = small_field(q);
        for (int it = 0; it < 100; ++it) {
            const RatFunc a = random_ratfunc(f, 3, rng), b = random_ratfunc(f, 3, rng);
            const long m = std::uniform_int_distribution<long>(0, 2)(rng);
            const long n = std::uniform_int_distribution<long>(0, 2)(rng);
            EXPECT_EQ(frobenius_twist(a * b, n), frobenius_twist(a, n) * frobenius_twist(b, n));
            EXPECT_EQ(frobenius_twist(a + b, n), frobenius_twist(a, n) + frobenius_twist(b, n));
            EXPECT_EQ(frobenius_twist(frobenius_twist(a, m), n), frobenius_twist(a, m + n));
            // twisting is the q^n-th power
            EXPECT_EQ(frobenius_twist(a, 1), a.pow(static_cast<long>(q)));
        }
    }
}

TEST(Poly, GcdExamples) {
    const FieldPtr f = Field::prime(2);
    EXPECT_EQ(poly_gcd(tp(f, {1, 0, 1}), tp(f, {1, 1})), tp(f, {1, 1}));
    const FieldPtr f3 = Field::prime(3);
    EXPECT_EQ(poly_gcd(tp(f3, {1, 2, 2}), ThetaPoly(f3)), tp(f3, {2, 1, 1}));
    EXPECT_TRUE(poly_gcd(tp(f, {1}), tp(f, {0, 0, 0, 0, 0, 1})).is_one());
    EXPECT_THROW(poly_gcd(ThetaPoly(f), ThetaPoly(f)), InputError);
}

TEST(Poly, DivisionIdentity) {
    Rng rng(9);
    const FieldPtr f = small_field(3);
    for (int it = 0; it < 200; ++it) {
        const ThetaPoly a = random_theta_poly(f, 80, rng), b = random_theta_poly(f, 60, rng);
        if (b.is_zero()) continue;
        const auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Poly, KaratsubaAgreesWithSchoolbook) {
    Rng rng(13);
    const FieldPtr f = small_field(4);
    for (int it = 0; it < 20; ++it) {
        const ThetaPoly a = random_theta_poly(f, 150, rng), b = random_theta_poly(f, 97, rng);
        std::vector<Fq> c(a.size() + b.size(), f->zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f->add(c[i + j], f->mul(a.coeff(i), b.coeff(j)));
        EXPECT_EQ(a * b, ThetaPoly(f, c));
    }
}

TEST(Poly, ZeroHasNegativeInfiniteDegree) {
    const FieldPtr f = Field::prime(2);
    const ThetaPoly z(f);
    EXPECT_TRUE(z.degree().is_neg_inf());
    EXPECT_THROW((void)z.degree().value(), InputError);
    EXPECT_LT(z.degree(), ThetaPoly::one(f).degree());
    EXPECT_TRUE((z.degree() + Degree(3)).is_neg_inf());
}

TEST(Factor, Examples) {
    const FieldPtr f = Field::prime(2);
    const auto a = factor_into_irreducibles(tp(f, {0, 1, 1}));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].first, tp(f, {0, 1}));
    EXPECT_EQ(a[1].first, tp(f, {1, 1}));
    EXPECT_EQ(a[0].second, 1u);
    const auto b = factor_into_irreducibles(tp(f, {0, 1}));
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].first, tp(f, {0, 1}));
    const auto c = factor_into_irreducibles(tp(f, {1, 1, 1}));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].first, tp(f, {1, 1, 1}));
    EXPECT_THROW(factor_into_irreducibles(ThetaPoly(f)), InputError);
}

TEST(Factor, RoundTripOnRandomPolynomials) {
    Rng rng(17);
    for (std::uint64_t q : {2, 3, 4, 5, 9}) {
        const FieldPtr f = small_field(q);
        for (int it = 0; it < 200; ++it) {
            const ThetaPoly a = random_theta_poly(f, 8, rng);
            if (a.is_zero()) continue;
            ThetaPoly prod = ThetaPoly::constant(f, a.lead());
            for (const auto& [pi, m] : factor_into_irreducibles(a)) {
                EXPECT_TRUE(pi.is_monic());
                EXPECT_TRUE(is_irreducible(pi));
                prod *= pi.pow(m);
            }
            EXPECT_EQ(prod, a);
        }
    }
}

TEST(Factor, IrreducibleCountsMatchNecklaceFormula) {
    // number of monic irreducibles of degree n over F_q
    const FieldPtr f = Field::prime(2);
    const int expected[] = {0, 2, 1, 2, 3, 6, 9, 18};
    for (int n = 1; n <= 7; ++n) {
        int count = 0;
        for (ThetaPoly p = ThetaPoly::monomial(f, f->one(), static_cast<std::size_t>(n)); p.deg() == n; p = next_monic(p))
            count += is_irreducible(p) ? 1 : 0;
        EXPECT_EQ(count, expected[n]) << "degree " << n;
    }
}

TEST(Parse, GrammarAndPositions) {
    const FieldPtr f = Field::prime(3);
    EXPECT_EQ(parse_ratfunc(f, "T^3 + 2*T + 1"), RatFunc(tp(f, {1, 2, 0, 1})));
    EXPECT_EQ(parse_ratfunc(f, " ( T^2 + 1 ) / ( T ) "), RatFunc(tp(f, {1, 0, 1}), tp(f, {0, 1})));
    EXPECT_EQ(parse_ratfunc(f, "T^-2"), RatFunc(tp(f, {1}), tp(f, {0, 0, 1})));
    EXPECT_EQ(parse_ratfunc(f, "-T + 5"), RatFunc(tp(f, {2, 2})));
    const FieldPtr f4 = small_field(4);
    EXPECT_EQ(parse_ratfunc(f4, "w^2*T + w"), parse_ratfunc(f4, "(w + 1)*T + w"));
    try {
        parse_ratfunc(f, "T^2 + * 3");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6u);
        EXPECT_NE(std::string(e.what()).find("column 7"), std::string::npos);
    }
    EXPECT_THROW(parse_ratfunc(f, "T/0"), ParseError);
    EXPECT_THROW(parse_ratfunc(f, "w"), ParseError);
    EXPECT_THROW(parse_ratfunc(f, "(T + 1"), ParseError);
    EXPECT_THROW(parse_ratfunc(f, ""), ParseError);
    EXPECT_EQ(parse_modulus(2, "w^2 + w + 1"), (std::vector<std::uint32_t>{1, 1, 1}));
    const auto rel = parse_tpoly_list(f, "t + 1, (t^2), 2");
    ASSERT_EQ(rel.size(), 3u);
    EXPECT_EQ(rel[1], TPoly::monomial(f, f->one(), 2));
}

TEST(Parse, PrintedFormsParseBack) {
    Rng rng(19);
    for (std::uint64_t q : {2, 3, 4, 9}) {
        const FieldPtr f = small_field(q);
        for (int it = 0; it < 100; ++it) {
            const RatFunc x = random_ratfunc(f, 4, rng);
            EXPECT_EQ(parse_ratfunc(f, x.to_string()), x) << x.to_string();
            const TPoly a = random_t_poly(f, 4, rng);
            EXPECT_EQ(parse_tpoly(f, a.to_string()), a);
        }
    }
}
