#include "treeinv/koszul.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include <gmpxx.h>

#include "treeinv/avoidance.hpp"
#include "treeinv/errors.hpp"

namespace treeinv {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::uint64_t saturating_mul_add(std::uint64_t acc, std::uint64_t a, std::uint64_t b)
{
    std::uint64_t v;
    if (__builtin_mul_overflow(a, b, &v) || __builtin_add_overflow(v, acc, &v))
        return std::numeric_limits<std::uint64_t>::max();
    return v;
}

} // namespace

// Trees of X and Z up to the maximal weight plus the face and cup-insertion
// tables of Z, shared by all weights.
class KoszulCatalog {
public:
    KoszulCatalog(const PatternSet& x, std::size_t max_weight)
        : x(x), z(complement(x)), xs(x, max_weight), zs(z, max_weight), max_weight(max_weight)
    {
        const std::size_t m = x.alphabet_size();
        for (std::size_t i = 0; i <= max_weight; ++i)
            x_sizes.push_back(xs.size(i));

        tuples.assign(max_weight + 2, std::vector<std::uint64_t>(max_weight + 1, 0));
        tuples[0][0] = 1;
        for (std::size_t p = 1; p <= max_weight + 1; ++p)
            for (std::size_t w = 0; w <= max_weight; ++w) {
                std::uint64_t acc = 0;
                for (std::size_t i = 0; i <= w; ++i)
                    acc = saturating_mul_add(acc, x_sizes[i], tuples[p - 1][w - i]);
                tuples[p][w] = acc;
            }

        zface.resize(max_weight + 1);
        zlabel.resize(max_weight + 1);
        zcups.resize(max_weight + 1);
        insertable.resize(max_weight + 1);
        for (std::size_t n = 0; n <= max_weight; ++n) {
            const auto& level = zs.level(n);
            zface[n].assign(level.size() * n, kNone);
            zlabel[n].resize(level.size() * n);
            zcups[n].assign(level.size(), 0);
            for (std::size_t t = 0; t < level.size(); ++t) {
                const LabelledTree& tree = level[t];
                auto labels = tree.labels();
                std::copy(labels.begin(), labels.end(), zlabel[n].begin() + static_cast<long>(t * n));
                for (std::size_t v : cups(tree)) {
                    auto found = zs.find(tree.delete_cup(v));
                    if (!found)
                        throw InvariantViolation("deleting a cup of " + tree.encode(x.alphabet()) +
                                                 " left Z");
                    zface[n][t * n + (v - 1)] = found->index;
                    ++zcups[n][t];
                }
            }
            if (n < max_weight) {
                // insertable[n][(t * (n+1) + leaf) * m + u]: a cup labelled u at `leaf` stays in Z.
                insertable[n].assign(level.size() * (n + 1) * m, 0);
                for (std::size_t t = 0; t < level.size(); ++t)
                    for (std::size_t leaf = 0; leaf <= n; ++leaf)
                        for (std::size_t u = 0; u < m; ++u)
                            insertable[n][(t * (n + 1) + leaf) * m + u] =
                                z.admits(level[t].insert_cup(leaf, label_at(u))) ? 1 : 0;
            }
        }
    }

    PatternSet x;
    PatternSet z;
    AvoidanceCatalog xs;
    AvoidanceCatalog zs;
    std::size_t max_weight;
    std::vector<std::uint64_t> x_sizes;
    std::vector<std::vector<std::uint64_t>> tuples; ///< [parts][weight]
    std::vector<std::vector<std::uint32_t>> zface;  ///< [n][t * n + v - 1]
    std::vector<std::vector<Label>> zlabel;         ///< [n][t * n + v - 1]
    std::vector<std::vector<std::uint8_t>> zcups;   ///< [n][t]
    std::vector<std::vector<std::uint8_t>> insertable;
};

std::size_t ChainBasisElement::weight() const noexcept
{
    std::size_t w = z.degree();
    for (const auto& x : attachments)
        w += x.degree();
    return w;
}

std::optional<ChainBasisElement> face(const ChainBasisElement& e, std::size_t vertex, const PatternSet& x)
{
    const std::size_t n = e.z.degree();
    if (vertex < 1 || vertex > n)
        throw std::out_of_range("face index " + std::to_string(vertex) + " outside 1.." + std::to_string(n));
    if (e.attachments.size() != n + 1)
        throw std::invalid_argument("chain element needs one attachment per leaf of z");
    auto c = cups(e.z);
    if (!std::binary_search(c.begin(), c.end(), vertex))
        return std::nullopt;
    LabelledTree grafted =
        LabelledTree::graft({e.attachments[vertex - 1], e.attachments[vertex]}, e.z.label(vertex));
    if (!x.admits(grafted))
        return std::nullopt;
    ChainBasisElement out{e.z.delete_cup(vertex), {}};
    out.attachments.reserve(n);
    for (std::size_t j = 0; j + 1 < vertex; ++j)
        out.attachments.push_back(e.attachments[j]);
    out.attachments.push_back(std::move(grafted));
    for (std::size_t j = vertex + 1; j <= n; ++j)
        out.attachments.push_back(e.attachments[j]);
    return out;
}

// --- SparseMatrix ----------------------------------------------------------

std::int32_t SparseMatrix::at(std::size_t row, std::size_t col) const
{
    if (row >= rows || col >= cols)
        throw std::out_of_range("matrix index out of range");
    auto first = row_index.begin() + static_cast<long>(col_start[col]);
    auto last = row_index.begin() + static_cast<long>(col_start[col + 1]);
    auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(row));
    if (it == last || *it != row)
        return 0;
    return value[static_cast<std::size_t>(it - row_index.begin())];
}

void SparseMatrix::set(std::size_t row, std::size_t col, std::int32_t v)
{
    if (row >= rows || col >= cols)
        throw std::out_of_range("matrix index out of range");
    auto first = row_index.begin() + static_cast<long>(col_start[col]);
    auto last = row_index.begin() + static_cast<long>(col_start[col + 1]);
    auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(row));
    const auto pos = static_cast<std::size_t>(it - row_index.begin());
    if (it != last && *it == row) {
        if (v != 0) {
            value[pos] = v;
            return;
        }
        row_index.erase(it);
        value.erase(value.begin() + static_cast<long>(pos));
        for (std::size_t c = col + 1; c <= cols; ++c)
            --col_start[c];
        return;
    }
    if (v == 0)
        return;
    row_index.insert(it, static_cast<std::uint32_t>(row));
    value.insert(value.begin() + static_cast<long>(pos), v);
    for (std::size_t c = col + 1; c <= cols; ++c)
        ++col_start[c];
}

std::size_t rank_over_rationals(const SparseMatrix& m)
{
    using Entry = std::pair<std::uint32_t, mpq_class>;
    using Column = std::vector<Entry>;
    // Column reduction keyed on the lowest (largest) row index of each column.
    std::vector<Column> pivots;
    std::vector<std::uint32_t> pivot_of_row(m.rows, kNone);
    Column work, merged;
    for (std::size_t c = 0; c < m.cols; ++c) {
        work.clear();
        for (std::size_t k = m.col_start[c]; k < m.col_start[c + 1]; ++k)
            if (m.value[k] != 0)
                work.emplace_back(m.row_index[k], mpq_class(m.value[k]));
        while (!work.empty()) {
            const std::uint32_t low = work.back().first;
            const std::uint32_t p = pivot_of_row[low];
            if (p == kNone) {
                pivot_of_row[low] = static_cast<std::uint32_t>(pivots.size());
                pivots.push_back(work);
                break;
            }
            const Column& pivot = pivots[p];
            mpq_class factor = work.back().second / pivot.back().second;
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < work.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < work.size() && work[i].first < pivot[j].first)) {
                    merged.push_back(std::move(work[i++]));
                } else if (i == work.size() || pivot[j].first < work[i].first) {
                    merged.emplace_back(pivot[j].first, -factor * pivot[j].second);
                    ++j;
                } else {
                    mpq_class v = work[i].second - factor * pivot[j].second;
                    if (v != 0)
                        merged.emplace_back(work[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            work.swap(merged);
        }
    }
    return pivots.size();
}

// --- WeightedComplex -------------------------------------------------------

const PatternSet& WeightedComplex::patterns() const noexcept { return catalog_->x; }

std::size_t WeightedComplex::dimension(std::size_t degree) const
{
    if (degree < 1 || degree > levels_.size())
        return 0;
    return levels_[degree - 1].size;
}

std::vector<std::size_t> WeightedComplex::dimensions() const
{
    std::vector<std::size_t> out;
    for (const auto& l : levels_)
        out.push_back(l.size);
    return out;
}

std::uint64_t WeightedComplex::rank_of(std::size_t degree, const std::uint32_t* e) const
{
    const auto& cat = *catalog_;
    const Level& level = levels_[degree - 1];
    std::size_t remaining = weight_ - level.z_degree;
    std::size_t parts = degree;
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < degree; ++j) {
        const std::size_t deg = e[1 + 2 * j];
        const std::uint64_t idx = e[2 + 2 * j];
        --parts;
        for (std::size_t i = 0; i < deg; ++i)
            r += cat.x_sizes[i] * cat.tuples[parts][remaining - i];
        r += idx * cat.tuples[parts][remaining - deg];
        remaining -= deg;
    }
    return std::uint64_t{e[0]} * level.tuples_per_z + r;
}

ChainBasisElement WeightedComplex::element(std::size_t degree, std::size_t index) const
{
    if (index >= dimension(degree))
        throw std::out_of_range("basis index out of range");
    const auto& cat = *catalog_;
    const Level& level = levels_[degree - 1];
    const std::uint32_t* e = level.data.data() + index * stride(degree);
    ChainBasisElement out{cat.zs.level(level.z_degree)[e[0]], {}};
    for (std::size_t j = 0; j < degree; ++j)
        out.attachments.push_back(cat.xs.tree({e[1 + 2 * j], e[2 + 2 * j]}));
    return out;
}

std::optional<std::size_t> WeightedComplex::index_of(const ChainBasisElement& e) const
{
    const std::size_t degree = e.degree();
    if (degree > levels_.size() || e.attachments.size() != degree || e.weight() != weight_)
        return std::nullopt;
    const auto& cat = *catalog_;
    auto zref = cat.zs.find(e.z);
    if (!zref)
        return std::nullopt;
    std::vector<std::uint32_t> flat{zref->index};
    for (const auto& x : e.attachments) {
        auto ref = cat.xs.find(x);
        if (!ref)
            return std::nullopt;
        flat.push_back(ref->degree);
        flat.push_back(ref->index);
    }
    return static_cast<std::size_t>(rank_of(degree, flat.data()));
}

const SparseMatrix& WeightedComplex::boundary(std::size_t n) const
{
    if (n < 1 || n > boundaries_.size())
        throw std::out_of_range("boundary D_" + std::to_string(n) + " does not exist at weight " +
                                std::to_string(weight_));
    return boundaries_[n - 1];
}

void WeightedComplex::replace_boundary(std::size_t n, SparseMatrix m)
{
    if (n < 1 || n > boundaries_.size())
        throw std::out_of_range("boundary index out of range");
    boundaries_[n - 1] = std::move(m);
}

std::size_t WeightedComplex::cup_count(std::size_t degree, std::size_t index) const
{
    if (index >= dimension(degree))
        throw std::out_of_range("basis index out of range");
    const Level& level = levels_[degree - 1];
    return catalog_->zcups[level.z_degree][level.data[index * stride(degree)]];
}

bool WeightedComplex::is_extremal(std::size_t degree, std::size_t index) const
{
    if (index >= dimension(degree))
        throw std::out_of_range("basis index out of range");
    const auto& cat = *catalog_;
    const Level& level = levels_[degree - 1];
    const std::size_t n = level.z_degree;
    const std::size_t m = cat.x.alphabet_size();
    const std::uint32_t* e = level.data.data() + index * stride(degree);
    for (std::size_t leaf = 0; leaf < degree; ++leaf) {
        const std::uint32_t deg = e[1 + 2 * leaf];
        if (deg == 0)
            continue;
        // A preimage would carry z with a cup at `leaf`, labelled by the root of this attachment.
        const Label u = cat.xs.root_label({deg, e[2 + 2 * leaf]});
        if (cat.insertable[n][(std::size_t{e[0]} * (n + 1) + leaf) * m + treeinv::index(u)])
            return false;
    }
    return true;
}

// --- construction ----------------------------------------------------------

namespace {

std::vector<BigInt> weight_dimensions(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                      std::size_t w)
{
    // dim K_{n+1} = #Z_n * [t^(w-n)] A(t)^(n+1)
    std::vector<BigInt> dims;
    std::vector<BigInt> power{1};
    for (std::size_t n = 0; n <= w; ++n) {
        std::vector<BigInt> next(w + 1, 0);
        for (std::size_t i = 0; i < power.size(); ++i)
            for (std::size_t j = 0; i + j <= w && j < a.size(); ++j)
                next[i + j] += power[i] * a[j];
        power = std::move(next);
        dims.push_back(b[n] * power[w - n]);
    }
    return dims;
}

} // namespace

std::vector<WeightedComplex> build_complexes(const PatternSet& x, std::size_t max_weight,
                                             const KoszulLimits& limits)
{
    if (x.arity() != 2)
        throw std::invalid_argument("the Koszul complex is built for binary pattern sets only");
    if (max_weight > limits.max_weight)
        throw SizeLimitError("max-weight", "weight " + std::to_string(max_weight) +
                                               " exceeds the bound max-weight=" +
                                               std::to_string(limits.max_weight));
    {
        auto a = coefficient_sequence(x, max_weight);
        auto b = coefficient_sequence(complement(x), max_weight);
        for (std::size_t w = 0; w <= max_weight; ++w) {
            BigInt total = 0;
            for (const auto& d : weight_dimensions(a, b, w))
                total += d;
            if (total > static_cast<unsigned long>(limits.max_basis))
                throw SizeLimitError("max-basis", "weight " + std::to_string(w) + " has " + to_string(total) +
                                                      " basis elements, above the bound max-basis=" +
                                                      std::to_string(limits.max_basis));
        }
    }

    auto catalog = std::make_shared<const KoszulCatalog>(x, max_weight);
    const auto& cat = *catalog;
    std::vector<WeightedComplex> out;
    for (std::size_t w = 0; w <= max_weight; ++w) {
        WeightedComplex c;
        c.catalog_ = catalog;
        c.weight_ = w;
        c.levels_.resize(w + 1);
        for (std::size_t d = 1; d <= w + 1; ++d) {
            auto& level = c.levels_[d - 1];
            const std::size_t n = d - 1;
            const std::size_t budget = w - n;
            level.z_degree = n;
            level.tuples_per_z = cat.tuples[d][budget];
            level.size = static_cast<std::size_t>(cat.zs.size(n) * level.tuples_per_z);
            level.data.reserve(level.size * c.stride(d));
            std::vector<std::uint32_t> current(c.stride(d));
            std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t slot, std::size_t left) {
                if (slot == d) {
                    level.data.insert(level.data.end(), current.begin(), current.end());
                    return;
                }
                for (std::size_t deg = 0; deg <= left; ++deg) {
                    if (cat.tuples[d - slot - 1][left - deg] == 0)
                        continue;
                    current[1 + 2 * slot] = static_cast<std::uint32_t>(deg);
                    for (std::size_t i = 0; i < cat.x_sizes[deg]; ++i) {
                        current[2 + 2 * slot] = static_cast<std::uint32_t>(i);
                        fill(slot + 1, left - deg);
                    }
                }
            };
            for (std::size_t t = 0; t < cat.zs.size(n); ++t) {
                current[0] = static_cast<std::uint32_t>(t);
                fill(0, budget);
            }
            if (level.data.size() != level.size * c.stride(d))
                throw InvariantViolation("basis enumeration size mismatch in degree " + std::to_string(d));
        }

        // D_n : K_{n+1} -> K_n
        for (std::size_t n = 1; n <= w; ++n) {
            const std::size_t src = n + 1;
            const auto& from = c.levels_[src - 1];
            SparseMatrix mat;
            mat.rows = c.levels_[n - 1].size;
            mat.cols = from.size;
            mat.col_start.assign(1, 0);
            std::vector<std::uint32_t> target(c.stride(n));
            std::vector<std::pair<std::uint32_t, std::int32_t>> column;
            for (std::size_t col = 0; col < from.size; ++col) {
                const std::uint32_t* e = from.data.data() + col * c.stride(src);
                const std::uint32_t zt = e[0];
                column.clear();
                for (std::size_t v = 1; v <= n; ++v) {
                    const std::uint32_t zf = cat.zface[n][std::size_t{zt} * n + (v - 1)];
                    if (zf == kNone)
                        continue;
                    const Label eps = cat.zlabel[n][std::size_t{zt} * n + (v - 1)];
                    AvoidanceCatalog::Ref left{e[1 + 2 * (v - 1)], e[2 + 2 * (v - 1)]};
                    AvoidanceCatalog::Ref right{e[1 + 2 * v], e[2 + 2 * v]};
                    auto grafted = cat.xs.graft(left, eps, right);
                    if (!grafted)
                        continue;
                    target[0] = zf;
                    std::size_t k = 1;
                    for (std::size_t j = 0; j + 1 < v; ++j, k += 2) {
                        target[k] = e[1 + 2 * j];
                        target[k + 1] = e[2 + 2 * j];
                    }
                    target[k] = grafted->degree;
                    target[k + 1] = grafted->index;
                    k += 2;
                    for (std::size_t j = v + 1; j <= n; ++j, k += 2) {
                        target[k] = e[1 + 2 * j];
                        target[k + 1] = e[2 + 2 * j];
                    }
                    const std::uint64_t row = c.rank_of(n, target.data());
                    if (row >= mat.rows)
                        throw InvariantViolation("face image outside the weight-" + std::to_string(w) + " basis");
                    column.emplace_back(static_cast<std::uint32_t>(row), v % 2 == 0 ? 1 : -1);
                }
                std::sort(column.begin(), column.end());
                for (std::size_t i = 0; i < column.size(); ++i) {
                    if (i + 1 < column.size() && column[i].first == column[i + 1].first)
                        throw InvariantViolation("two faces of one element coincide");
                    mat.row_index.push_back(column[i].first);
                    mat.value.push_back(column[i].second);
                }
                mat.col_start.push_back(mat.row_index.size());
            }
            c.boundaries_.push_back(std::move(mat));
        }
        out.push_back(std::move(c));
    }
    return out;
}

WeightedComplex build_complex(const PatternSet& x, std::size_t weight, const KoszulLimits& limits)
{
    auto all = build_complexes(x, weight, limits);
    return std::move(all.back());
}

// --- checks ----------------------------------------------------------------

bool check_d_squared(const WeightedComplex& c, std::size_t samples, std::uint64_t seed)
{
    const std::size_t w = c.weight();
    // D_n D_{n+1} = 0
    std::unordered_map<std::uint32_t, long long> acc;
    for (std::size_t n = 1; n + 1 <= w; ++n) {
        const SparseMatrix& lower = c.boundary(n);
        const SparseMatrix& upper = c.boundary(n + 1);
        for (std::size_t col = 0; col < upper.cols; ++col) {
            acc.clear();
            for (std::size_t k = upper.col_start[col]; k < upper.col_start[col + 1]; ++k) {
                const std::size_t mid = upper.row_index[k];
                for (std::size_t q = lower.col_start[mid]; q < lower.col_start[mid + 1]; ++q)
                    acc[lower.row_index[q]] += static_cast<long long>(upper.value[k]) * lower.value[q];
            }
            for (const auto& [row, v] : acc)
                if (v != 0)
                    return false;
        }
    }

    // presimplicial relation on sampled elements, computed on trees
    std::vector<std::size_t> degrees;
    for (std::size_t d = 3; d <= c.top_degree(); ++d)
        if (c.dimension(d) > 0)
            degrees.push_back(d);
    if (degrees.empty())
        return true;
    std::mt19937_64 rng(seed);
    const PatternSet& x = c.patterns();
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t d = degrees[rng() % degrees.size()];
        const ChainBasisElement e = c.element(d, rng() % c.dimension(d));
        const std::size_t n = e.z.degree();
        for (std::size_t j = 2; j <= n; ++j)
            for (std::size_t i = 1; i < j; ++i) {
                auto after_j = face(e, j, x);
                auto lhs = after_j ? face(*after_j, i, x) : std::nullopt;
                auto after_i = face(e, i, x);
                auto rhs = after_i ? face(*after_i, j - 1, x) : std::nullopt;
                if (lhs != rhs)
                    return false;
            }
    }
    return true;
}

std::vector<std::size_t> homology_ranks(const WeightedComplex& c)
{
    const std::size_t w = c.weight();
    // ranks[n] = rank D_n, with D_0 = D_{w+1} = 0
    std::vector<std::size_t> ranks(w + 2, 0);
    for (std::size_t n = 1; n <= w; ++n)
        ranks[n] = rank_over_rationals(c.boundary(n));
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d <= w + 1; ++d) {
        const std::size_t dim = c.dimension(d);
        const std::size_t lost = ranks[d - 1] + ranks[d];
        if (lost > dim)
            throw InvariantViolation("boundary ranks exceed the dimension in degree " + std::to_string(d));
        out.push_back(dim - lost);
    }
    return out;
}

long long euler_characteristic(const WeightedComplex& c)
{
    long long chi = 0;
    for (std::size_t d = 1; d <= c.top_degree(); ++d) {
        const auto dim = static_cast<long long>(c.dimension(d));
        chi += d % 2 == 0 ? dim : -dim;
    }
    return chi;
}

ExtremalDecomposition extremal_decomposition(const WeightedComplex& c)
{
    const std::size_t top = c.top_degree();
    ExtremalDecomposition out;
    out.block_of.resize(top);
    for (std::size_t d = 1; d <= top; ++d)
        out.block_of[d - 1].assign(c.dimension(d), kNone);

    std::vector<std::pair<std::size_t, std::size_t>> frontier, next;
    for (std::size_t d = top; d >= 1; --d) {
        for (std::size_t i = 0; i < c.dimension(d); ++i) {
            if (!c.is_extremal(d, i))
                continue;
            const auto id = static_cast<std::uint32_t>(out.blocks.size());
            ExtremalBlock block{d, i, c.cup_count(d, i), {}, 0};
            if (out.block_of[d - 1][i] != kNone)
                throw InvariantViolation("extremal element (" + std::to_string(d) + ", " + std::to_string(i) +
                                         ") lies below another extremal element");
            out.block_of[d - 1][i] = id;
            frontier.assign(1, {d, i});
            while (!frontier.empty()) {
                block.level_sizes.push_back(frontier.size());
                next.clear();
                for (const auto& [fd, fi] : frontier) {
                    if (fd == 1)
                        continue;
                    const SparseMatrix& dm = c.boundary(fd - 1);
                    for (std::size_t k = dm.col_start[fi]; k < dm.col_start[fi + 1]; ++k) {
                        const std::size_t row = dm.row_index[k];
                        auto& owner = out.block_of[fd - 2][row];
                        if (owner == id)
                            continue;
                        if (owner != kNone)
                            throw InvariantViolation("basis element (" + std::to_string(fd - 1) + ", " +
                                                     std::to_string(row) + ") lies in two extremal blocks");
                        owner = id;
                        next.emplace_back(fd - 1, row);
                    }
                }
                frontier.swap(next);
            }
            if (block.level_sizes.size() != block.cups + 1) {
                throw InvariantViolation("extremal block at (" + std::to_string(d) + ", " + std::to_string(i) +
                                         ") has depth " + std::to_string(block.level_sizes.size() - 1) +
                                         " but " + std::to_string(block.cups) + " cups");
            }
            BigInt binom;
            for (std::size_t r = 0; r <= block.cups; ++r) {
                mpz_bin_uiui(binom.get_mpz_t(), block.cups, r);
                if (binom != static_cast<unsigned long>(block.level_sizes[r]))
                    throw InvariantViolation("extremal block at (" + std::to_string(d) + ", " +
                                             std::to_string(i) + ") has " +
                                             std::to_string(block.level_sizes[r]) + " elements " +
                                             std::to_string(r) + " steps down, expected " + binom.get_str());
                block.size += block.level_sizes[r];
            }
            out.blocks.push_back(std::move(block));
        }
        if (d == 1)
            break;
    }

    for (std::size_t d = 1; d <= top; ++d)
        for (std::size_t i = 0; i < c.dimension(d); ++i)
            if (out.block_of[d - 1][i] == kNone)
                throw InvariantViolation("basis element (" + std::to_string(d) + ", " + std::to_string(i) +
                                         ") lies in no extremal block");

    for (std::size_t n = 1; n + 1 <= top; ++n) {
        const SparseMatrix& dm = c.boundary(n);
        for (std::size_t col = 0; col < dm.cols; ++col)
            for (std::size_t k = dm.col_start[col]; k < dm.col_start[col + 1]; ++k)
                if (out.block_of[n - 1][dm.row_index[k]] != out.block_of[n][col])
                    throw InvariantViolation("boundary entry crosses extremal blocks");
    }
    return out;
}

void write_triplets(const WeightedComplex& c, std::ostream& out)
{
    for (std::size_t n = 1; n <= c.weight(); ++n) {
        const SparseMatrix& dm = c.boundary(n);
        for (std::size_t col = 0; col < dm.cols; ++col)
            for (std::size_t k = dm.col_start[col]; k < dm.col_start[col + 1]; ++k)
                out << (n + 1) << ' ' << dm.row_index[k] << ' ' << col << ' ' << dm.value[k] << '\n';
    }
}

} // namespace treeinv
