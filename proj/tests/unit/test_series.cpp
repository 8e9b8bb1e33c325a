#include <gtest/gtest.h>

#include <random>

#include "treeinv/errors.hpp"
#include "treeinv/registry.hpp"
#include "treeinv/series.hpp"

using namespace treeinv;

namespace {

IntSeries make(std::size_t order, std::initializer_list<long> c)
{
    std::vector<BigInt> v;
    for (long x : c)
        v.emplace_back(x);
    return IntSeries(order, v);
}

} // namespace

TEST(IntSeries, Basics)
{
    EXPECT_THROW(make(3, {1, 1}), std::invalid_argument);
    EXPECT_THROW(make(2, {0, 1, 0, 5}), std::invalid_argument);
    EXPECT_NO_THROW(make(2, {0, 1, 0, 0}));
    EXPECT_EQ(make(4, {0, -1, 1, -2}).to_string(), "-t + t^2 - 2t^3");
    EXPECT_EQ(IntSeries(3).to_string(), "0");
    EXPECT_TRUE(IntSeries::identity(5).is_identity());
    EXPECT_EQ(make(4, {0, 0, 0, 3}).lowest_term(), 3u);
    EXPECT_FALSE(IntSeries(4).lowest_term());
    EXPECT_THROW(make(3, {0, 1}) + make(4, {0, 1}), std::invalid_argument);
}

TEST(Compose, KnownCases)
{
    const auto t = IntSeries::identity(6);
    auto f = make(6, {0, 1, 1});
    EXPECT_EQ(compose(f, t), f);
    EXPECT_EQ(compose(t, f), f);
    // (t + t^2) o (t + t^2) = t + 2t^2 + 2t^3 + t^4
    EXPECT_EQ(compose(f, f), make(6, {0, 1, 2, 2, 1}));
}

TEST(Invert, RoundTrip)
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const std::size_t order = 1 + rng() % 12;
        std::vector<BigInt> c(order + 1, 0);
        c[1] = rng() % 2 ? 1 : -1;
        for (std::size_t j = 2; j <= order; ++j)
            c[j] = static_cast<long>(rng() % 21) - 10;
        IntSeries f(order, c);
        IntSeries g = invert(f);
        EXPECT_TRUE(compose(f, g).is_identity());
        EXPECT_TRUE(compose(g, f).is_identity());
        EXPECT_EQ(invert(g), f);
    }
    EXPECT_THROW(invert(make(4, {0, 2, 1})), NotInvertible);
    EXPECT_THROW(invert(make(4, {0, 0, 1})), NotInvertible);
}

TEST(Invert, Catalan)
{
    // -t + t^2 inverts to the alternating Catalan series
    auto g = invert(make(8, {0, -1, 1}));
    EXPECT_EQ(g, make(8, {0, -1, 1, -2, 5, -14, 42, -132, 429}));
}

TEST(Expand, RationalForms)
{
    RationalForm minus_t_over{{0, -1}, {1, 1}};
    EXPECT_EQ(expand(minus_t_over, 5), make(5, {0, -1, 1, -1, 1, -1}));
    EXPECT_TRUE(compose(expand(minus_t_over, 9), expand(minus_t_over, 9)).is_identity());
    EXPECT_THROW(expand(RationalForm{{0, 1}, {2, 1}}, 3), std::invalid_argument);
    EXPECT_THROW(expand(RationalForm{{1, 1}, {1}}, 3), std::invalid_argument);
}

TEST(Alternating, SignsAndLength)
{
    std::vector<BigInt> a{1, 2, 6, 22};
    EXPECT_EQ(alternating_series(a, 4), make(4, {0, -1, 2, -6, 22}));
    EXPECT_THROW(alternating_series(a, 5), std::invalid_argument);
}

TEST(Lacunary, Variants)
{
    std::vector<BigInt> a{1, 1, 3, 12};
    // k = 3: (k+1)n is always even, so every G coefficient is negative
    EXPECT_EQ(lacunary_series(a, 3, LacunaryVariant::F, 7), make(7, {0, -1, 0, 1, 0, -3, 0, 12}));
    EXPECT_EQ(lacunary_series(a, 3, LacunaryVariant::G, 7), make(7, {0, -1, 0, -1, 0, -3, 0, -12}));
    EXPECT_EQ(lacunary_series(a, 4, LacunaryVariant::G, 7), make(7, {0, -1, 0, 0, 1, 0, 0, -3}));
    EXPECT_EQ(lacunary_terms_needed(4, 19), 7u);
    EXPECT_THROW(lacunary_series(a, 3, LacunaryVariant::F, 9), std::invalid_argument);
}

TEST(VerifyInversion, RegistryHolds)
{
    for (const auto& e : example_registry()) {
        const std::size_t order = e.key == "i" ? 5 : e.default_order;
        auto r = verify_inversion(e.x, order);
        EXPECT_TRUE(r.holds) << e.key << ": " << r.residual.to_string();
        EXPECT_TRUE(r.residual.coefficients() == IntSeries(order).coefficients());
    }
}

TEST(VerifyInversion, RandomSets)
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 40; ++i) {
        const int k = 2 + static_cast<int>(rng() % 2);
        PatternSet x = random_pattern_set(Alphabet::numbered(1 + rng() % 2), k, rng);
        EXPECT_TRUE(verify_inversion(x, 8).holds);
    }
}

TEST(VerifyInversion, DetectsWrongCounts)
{
    // Feeding the counts of X as if they were those of Z breaks the identity.
    auto x = find_example("c").x;
    auto r = verify_inversion(x, 8);
    auto bad = compose(r.outer, r.outer);
    EXPECT_FALSE(bad.is_identity());
}

TEST(FunctionalEquation, Catalan)
{
    EXPECT_TRUE(functional_equation_check(FunctionalEquation::Catalan, 12));
    std::vector<BigInt> wrong{1, 1, 2, 5, 14, 43, 132, 429};
    EXPECT_FALSE(functional_equation_holds(FunctionalEquation::Catalan, wrong, 7));
}

TEST(FunctionalEquation, SuperCatalan)
{
    auto c = functional_equation_coefficients(FunctionalEquation::SuperCatalan, 6);
    std::vector<BigInt> expected{1, 1, 3, 11, 45, 197, 903};
    EXPECT_EQ(c, expected);
    EXPECT_TRUE(functional_equation_check(FunctionalEquation::SuperCatalan, 12));
}
