#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "treeinv/avoidance.hpp"
#include "treeinv/errors.hpp"
#include "treeinv/koszul.hpp"
#include "treeinv/registry.hpp"
#include "treeinv/series.hpp"

using namespace treeinv;
using treeinv::testing::corolla;
using treeinv::testing::leaf;

namespace {

PatternSet only_left()
{
    const Alphabet one = Alphabet::numbered(1);
    return PatternSet(one, 2, {Pattern::binary(Assoc::L, label_at(0), label_at(0))});
}

// Dense rank over Q of a small matrix, for cross-checking the sparse elimination.
std::size_t dense_rank(const SparseMatrix& m)
{
    std::vector<std::vector<mpq_class>> a(m.rows, std::vector<mpq_class>(m.cols, 0));
    for (std::size_t c = 0; c < m.cols; ++c)
        for (std::size_t k = m.col_start[c]; k < m.col_start[c + 1]; ++k)
            a[m.row_index[k]][c] = m.value[k];
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t p = rank;
        while (p < m.rows && a[p][c] == 0)
            ++p;
        if (p == m.rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows; ++r)
            if (r != rank && a[r][c] != 0) {
                mpq_class f = a[r][c] / a[rank][c];
                for (std::size_t j = c; j < m.cols; ++j)
                    a[r][j] -= f * a[rank][j];
            }
        ++rank;
    }
    return rank;
}

} // namespace

TEST(Face, Rules)
{
    const PatternSet x = only_left();
    ChainBasisElement e{corolla(0), {leaf(), leaf()}};
    auto f = face(e, 1, x);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->z, leaf());
    ASSERT_EQ(f->attachments.size(), 1u);
    EXPECT_EQ(f->attachments[0], corolla(0));
    EXPECT_EQ(f->weight(), e.weight());

    // vertex 2 of a left comb is not a cup
    ChainBasisElement comb{LabelledTree::graft({corolla(0), leaf()}, label_at(0)), {leaf(), leaf(), leaf()}};
    EXPECT_FALSE(face(comb, 2, x));
    EXPECT_TRUE(face(comb, 1, x));

    // grafting a corolla on the left makes the pattern (R;1,1), which lies in Z
    ChainBasisElement bad{corolla(0), {corolla(0), leaf()}};
    EXPECT_FALSE(face(bad, 1, x));
    ChainBasisElement good{corolla(0), {leaf(), corolla(0)}};
    EXPECT_TRUE(face(good, 1, x));

    EXPECT_THROW(face(e, 0, x), std::out_of_range);
    EXPECT_THROW(face(e, 2, x), std::out_of_range);
}

TEST(Complex, LeftCombWeightTwo)
{
    auto c = build_complex(only_left(), 2);
    EXPECT_EQ(c.dimensions(), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_TRUE(check_d_squared(c));
    EXPECT_EQ(homology_ranks(c), (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(euler_characteristic(c), 0);
    auto dec = extremal_decomposition(c);
    std::size_t total = 0;
    for (const auto& b : dec.blocks)
        total += b.size;
    EXPECT_EQ(total, 4u);
}

TEST(Complex, WeightZero)
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 5; ++i) {
        auto c = build_complex(random_pattern_set(Alphabet::numbered(2), 2, rng), 0);
        EXPECT_EQ(c.dimensions(), std::vector<std::size_t>{1});
        auto e = c.element(1, 0);
        EXPECT_TRUE(e.z.is_leaf());
        EXPECT_TRUE(e.attachments.at(0).is_leaf());
        EXPECT_TRUE(check_d_squared(c));
        EXPECT_EQ(homology_ranks(c), std::vector<std::size_t>{1});
        EXPECT_EQ(euler_characteristic(c), -1);
        auto dec = extremal_decomposition(c);
        ASSERT_EQ(dec.blocks.size(), 1u);
        EXPECT_EQ(dec.blocks[0].cups, 0u);
    }
}

TEST(Complex, EmptyZIsConcentratedInDegreeOne)
{
    auto x = find_example("b").x;
    for (std::size_t w = 1; w <= 4; ++w) {
        auto c = build_complex(x, w);
        EXPECT_EQ(c.dimension(1), count_dp(x, w));
        // Z_1 = Y_1 x I by convention, so degree 2 is Z_1 x X_i x X_j
        BigInt deg2 = 0;
        for (std::size_t i = 0; i + 1 <= w; ++i)
            deg2 += count_dp(x, i) * count_dp(x, w - 1 - i);
        EXPECT_EQ(c.dimension(2), deg2);
        for (std::size_t d = 3; d <= w + 1; ++d)
            EXPECT_EQ(c.dimension(d), 0u);
    }
}

TEST(Complex, DimensionsMatchCounts)
{
    auto x = find_example("h").x;
    auto a = coefficient_sequence(x, 4);
    auto b = coefficient_sequence(complement(x), 4);
    auto c = build_complex(x, 4);
    EXPECT_EQ(c.dimension(5), b[4]);        // Z_4 x X_0^5
    EXPECT_EQ(c.dimension(1), a[4]);        // Z_0 x X_4
}

TEST(Complex, BasisIndexRoundTrip)
{
    auto c = build_complex(find_example("c").x, 4);
    for (std::size_t d = 1; d <= c.top_degree(); ++d)
        for (std::size_t i = 0; i < c.dimension(d); ++i) {
            auto e = c.element(d, i);
            EXPECT_EQ(e.degree(), d);
            EXPECT_EQ(e.weight(), 4u);
            EXPECT_EQ(c.index_of(e), i);
        }
    EXPECT_THROW(c.element(2, c.dimension(2)), std::out_of_range);
}

TEST(Complex, MatricesAgreeWithTreeLevelFaces)
{
    std::mt19937_64 rng(6);
    for (int s = 0; s < 6; ++s) {
        PatternSet x = random_pattern_set(Alphabet::numbered(2), 2, rng);
        auto c = build_complex(x, 3);
        for (std::size_t n = 1; n <= c.weight(); ++n) {
            const auto& m = c.boundary(n);
            for (std::size_t col = 0; col < m.cols; ++col) {
                auto e = c.element(n + 1, col);
                std::size_t nonzero = 0;
                for (std::size_t v = 1; v <= n; ++v) {
                    auto f = face(e, v, x);
                    if (!f)
                        continue;
                    ++nonzero;
                    auto row = c.index_of(*f);
                    ASSERT_TRUE(row);
                    EXPECT_EQ(m.at(*row, col), v % 2 == 0 ? 1 : -1);
                }
                EXPECT_EQ(m.col_start[col + 1] - m.col_start[col], nonzero);
            }
        }
    }
}

TEST(Complex, CorruptedMatrixIsCaught)
{
    auto c = build_complex(find_example("d").x, 3);
    ASSERT_TRUE(check_d_squared(c));
    // flip the sign of one entry of D_n in a column reached by D_{n+1}
    for (std::size_t n = 1; n < c.weight(); ++n) {
        SparseMatrix m = c.boundary(n);
        const SparseMatrix& upper = c.boundary(n + 1);
        for (std::size_t k = 0; k < upper.nonzeros(); ++k) {
            const std::size_t mid = upper.row_index[k];
            if (m.col_start[mid + 1] == m.col_start[mid])
                continue;
            const std::size_t row = m.row_index[m.col_start[mid]];
            m.set(row, mid, -m.at(row, mid));
            c.replace_boundary(n, m);
            EXPECT_FALSE(check_d_squared(c));
            return;
        }
    }
    FAIL() << "no composable pair of boundary entries";
}

TEST(Complex, RandomAcyclicity)
{
    std::mt19937_64 rng(10);
    for (int s = 0; s < 10; ++s) {
        PatternSet x = random_pattern_set(Alphabet::numbered(1 + rng() % 2), 2, rng);
        auto cs = build_complexes(x, 4);
        auto xc = coefficient_sequence(x, 4);
        auto zc = coefficient_sequence(complement(x), 4);
        auto composite = compose(alternating_series(zc, 5), alternating_series(xc, 5));
        for (const auto& c : cs) {
            const std::size_t w = c.weight();
            EXPECT_TRUE(check_d_squared(c));
            auto ranks = homology_ranks(c);
            for (std::size_t d = 0; d < ranks.size(); ++d)
                EXPECT_EQ(ranks[d], w == 0 && d == 0 ? 1u : 0u);
            const long long chi = euler_characteristic(c);
            EXPECT_EQ(composite.coefficient(w + 1), BigInt(static_cast<long>(w % 2 == 0 ? -chi : chi)));
            EXPECT_NO_THROW(extremal_decomposition(c));
        }
    }
}

TEST(Extremal, BlocksAreCubes)
{
    auto c = build_complex(find_example("e").x, 4);
    auto dec = extremal_decomposition(c);
    std::size_t total = 0;
    for (const auto& b : dec.blocks) {
        EXPECT_EQ(b.size, std::size_t{1} << b.cups);
        EXPECT_TRUE(c.is_extremal(b.degree, b.index));
        EXPECT_EQ(c.cup_count(b.degree, b.index), b.cups);
        total += b.size;
    }
    std::size_t dim = 0;
    for (auto d : c.dimensions())
        dim += d;
    EXPECT_EQ(total, dim);
}

TEST(Extremal, MatchesPreimageSearch)
{
    // is_extremal against a direct scan of all faces one degree up
    auto c = build_complex(find_example("d").x, 4);
    for (std::size_t d = 1; d <= c.top_degree(); ++d) {
        std::vector<bool> hit(c.dimension(d), false);
        if (d < c.top_degree()) {
            const auto& m = c.boundary(d);
            for (std::size_t k = 0; k < m.nonzeros(); ++k)
                hit[m.row_index[k]] = true;
        }
        for (std::size_t i = 0; i < c.dimension(d); ++i)
            EXPECT_EQ(c.is_extremal(d, i), !hit[i]) << "degree " << d << " index " << i;
    }
}

TEST(Rank, SparseAgreesWithDense)
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        SparseMatrix m;
        m.rows = 1 + rng() % 8;
        m.cols = 1 + rng() % 8;
        m.col_start.assign(m.cols + 1, 0);
        for (std::size_t c = 0; c < m.cols; ++c)
            for (std::size_t r = 0; r < m.rows; ++r)
                if (rng() % 3 == 0)
                    m.set(r, c, static_cast<std::int32_t>(rng() % 5) - 2);
        EXPECT_EQ(rank_over_rationals(m), dense_rank(m));
    }
}

TEST(Limits, BoundsAreEnforced)
{
    auto x = find_example("c").x;
    EXPECT_THROW(build_complex(x, 7), SizeLimitError);
    KoszulLimits tight;
    tight.max_basis = 100;
    try {
        build_complex(find_example("i").x, 3, tight);
        FAIL();
    } catch (const SizeLimitError& e) {
        EXPECT_EQ(e.bound(), "max-basis");
    }
    EXPECT_THROW(build_complex(find_example("kc").x, 2), std::invalid_argument);
}

TEST(Triplets, OneLinePerEntry)
{
    auto c = build_complex(only_left(), 2);
    std::ostringstream out;
    write_triplets(c, out);
    std::size_t entries = 0;
    for (std::size_t n = 1; n <= 2; ++n)
        entries += c.boundary(n).nonzeros();
    std::istringstream in(out.str());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        std::istringstream f(line);
        int degree, row, col, value;
        ASSERT_TRUE(f >> degree >> row >> col >> value) << line;
        EXPECT_TRUE(value == 1 || value == -1);
        ++lines;
    }
    EXPECT_EQ(lines, entries);
}
