#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "ibialg/scalar.hpp"
#include "ibialg/text.hpp"

using namespace ibialg;

namespace
{

const lambda_poly L = lambda_poly::lambda();

lambda_poly random_poly(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> deg(0, 4), num(-6, 6), den(1, 5), count(0, 4);
    std::vector<lambda_poly::term> terms;
    for (int i = count(rng); i > 0; --i)
        terms.emplace_back(deg(rng), make_rational(num(rng), den(rng)));
    return lambda_poly::from_terms(std::move(terms));
}

} // namespace

TEST(LambdaPoly, AdditionExamples)
{
    EXPECT_EQ(ring_add(L + 1, -L), lambda_poly(1));
    const lambda_poly p = 3 * L * L - make_rational(2, 7);
    EXPECT_EQ(ring_add(lambda_poly(), p), p);
    const lambda_poly half = lambda_poly::monomial(1, make_rational(1, 2));
    EXPECT_EQ(ring_add(half, half), L);
}

TEST(LambdaPoly, MultiplicationExamples)
{
    EXPECT_EQ(ring_mul(L, L), lambda_poly::monomial(2, 1));
    const lambda_poly p = L - 5;
    EXPECT_EQ(ring_mul(1, p), p);
    EXPECT_EQ(ring_mul(L + 1, L - 1), lambda_poly::monomial(2, 1) - 1);
}

TEST(LambdaPoly, SpecializeExamples)
{
    EXPECT_EQ(specialize(L + 2, -1), rational(1));
    EXPECT_EQ(specialize(lambda_poly(7), 5), rational(7));
    EXPECT_EQ(specialize(L * L, make_rational(1, 2)), make_rational(1, 4));
    EXPECT_EQ(specialize(lambda_poly(), 3), rational(0));
}

TEST(LambdaPoly, NoZeroCoefficientsAreStored)
{
    const lambda_poly p = (L + 1) - L - 1;
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.terms().empty());
    const lambda_poly q = lambda_poly::from_terms({{2, 1}, {0, 3}, {2, -1}, {1, 0}});
    ASSERT_EQ(q.terms().size(), 1u);
    EXPECT_EQ(q.terms()[0].first, 0u);
}

TEST(LambdaPoly, RingAxiomsOnRandomSample)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        EXPECT_EQ((p + q) + r, p + (q + r));
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ(p * q, q * p);
        EXPECT_TRUE((p - p).is_zero());
    }
}

TEST(LambdaPoly, SpecializeIsARingHomomorphism)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_poly(rng), q = random_poly(rng);
        const rational v = make_rational(num(rng), den(rng));
        EXPECT_EQ(specialize(p + q, v), specialize(p, v) + specialize(q, v));
        EXPECT_EQ(specialize(p * q, v), specialize(p, v) * specialize(q, v));
    }
}

TEST(LambdaPoly, RenormalizingIsIdentity)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng);
        const std::vector<lambda_poly::term> terms(p.terms().begin(), p.terms().end());
        EXPECT_EQ(lambda_poly::from_terms(terms), p);
    }
}

TEST(LambdaPoly, ArbitraryPrecision)
{
    lambda_poly p(1);
    for (int i = 0; i < 40; ++i)
        p *= lambda_poly(rational(1000003));
    EXPECT_EQ(p.constant_value()->get_num() % 1000003, 0);
    EXPECT_GT(to_string(p).size(), 200u);
}

TEST(LambdaPoly, TextForm)
{
    EXPECT_EQ(to_string(lambda_poly()), "0");
    EXPECT_EQ(to_string(2 * L - make_rational(1, 3)), "2*L - 1/3");
    EXPECT_EQ(to_string(-(L * L) + L), "-L^2 + L");
    EXPECT_EQ(to_string(lambda_poly(make_rational(-5, 2))), "-5/2");
}

TEST(LambdaPoly, TextRoundTrip)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng);
        EXPECT_EQ(parse_scalar(to_string(p)), p) << to_string(p);
    }
}
