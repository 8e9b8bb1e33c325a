#include "treeinv/avoidance.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "treeinv/errors.hpp"

namespace treeinv {

namespace {

struct Edge {
    std::size_t parent; // vertex numbers, 0-based here
    std::size_t child;
    int position;
};

// Parent-child edges of a shape under the vertex numbering.
std::vector<Edge> shape_edges(const TreeShape& shape)
{
    std::vector<Edge> edges;
    std::function<std::size_t(const TreeShape&, std::size_t)> rec = [&](const TreeShape& s,
                                                                        std::size_t offset) {
        auto kids = s.children();
        std::size_t own = offset + kids[0].degree();
        std::size_t next = own + 1;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            std::size_t base = i == 0 ? offset : next;
            if (!kids[i].is_leaf())
                edges.push_back({own, rec(kids[i], base), static_cast<int>(i + 1)});
            if (i > 0)
                next += kids[i].degree();
        }
        return own;
    };
    if (!shape.is_leaf())
        rec(shape, 0);
    return edges;
}

// Calls fn(shape, labels) for every labelling of every degree-n shape admitted by x.
void for_each_admitted(const PatternSet& x, std::size_t n, std::size_t max_brute,
                       const std::function<void(const TreeShape&, const std::vector<Label>&)>& fn)
{
    if (n > max_brute)
        throw SizeLimitError("max-brute", "brute-force enumeration of degree " + std::to_string(n) +
                                              " exceeds the bound max-brute=" +
                                              std::to_string(max_brute));
    const std::size_t m = x.alphabet_size();
    if (n > 0 && m == 0)
        return;
    std::vector<Label> labels(n, label_at(0));
    for (const auto& shape : enumerate_shapes(x.arity(), n)) {
        auto edges = shape_edges(shape);
        std::fill(labels.begin(), labels.end(), label_at(0));
        while (true) {
            bool ok = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
                return x.contains(e.position, labels[e.parent], labels[e.child]);
            });
            if (ok)
                fn(shape, labels);
            std::size_t i = 0;
            for (; i < n; ++i) {
                std::size_t v = index(labels[i]) + 1;
                if (v < m) {
                    labels[i] = label_at(v);
                    break;
                }
                labels[i] = label_at(0);
            }
            if (i == n)
                break;
        }
    }
}

// counts[p] = #X_p for p <= n.
std::vector<BigInt> dp_counts(const PatternSet& x, std::size_t n)
{
    const std::size_t m = x.alphabet_size();
    const auto k = static_cast<std::size_t>(x.arity());
    std::vector<BigInt> counts(n + 1, 0);
    counts[0] = 1;
    if (m == 0)
        return counts;

    // rooted[p][r]: trees of X_p with root label r.
    std::vector<std::vector<BigInt>> rooted(n + 1, std::vector<BigInt>(m, 0));
    // side[s][r][d]: ways to fill child slot s of a root labelled r with a degree-d tree.
    std::vector<std::vector<std::vector<BigInt>>> side(
        k, std::vector<std::vector<BigInt>>(m, std::vector<BigInt>(n + 1, 0)));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t r = 0; r < m; ++r)
            side[s][r][0] = 1;

    std::vector<BigInt> acc, next;
    for (std::size_t p = 1; p <= n; ++p) {
        const std::size_t d = p - 1;
        if (d >= 1)
            for (std::size_t s = 0; s < k; ++s)
                for (std::size_t r = 0; r < m; ++r) {
                    BigInt sum = 0;
                    for (std::size_t u = 0; u < m; ++u)
                        if (x.contains(static_cast<int>(s + 1), label_at(r), label_at(u)))
                            sum += rooted[d][u];
                    side[s][r][d] = sum;
                }
        for (std::size_t r = 0; r < m; ++r) {
            // coefficient of t^d in the product of the k slot series
            acc.assign(side[0][r].begin(), side[0][r].begin() + static_cast<long>(d + 1));
            for (std::size_t s = 1; s < k; ++s) {
                next.assign(d + 1, 0);
                for (std::size_t i = 0; i <= d; ++i) {
                    if (acc[i] == 0)
                        continue;
                    for (std::size_t j = 0; i + j <= d; ++j)
                        next[i + j] += acc[i] * side[s][r][j];
                }
                acc.swap(next);
            }
            rooted[p][r] = acc[d];
            counts[p] += acc[d];
        }
    }
    return counts;
}

} // namespace

AvoidanceClass generate(const PatternSet& x, std::size_t n, std::size_t max_brute)
{
    AvoidanceClass out{x, n, {}, 0};
    for_each_admitted(x, n, max_brute, [&](const TreeShape& shape, const std::vector<Label>& labels) {
        out.trees.emplace_back(shape, labels);
    });
    std::sort(out.trees.begin(), out.trees.end());
    out.count = static_cast<unsigned long>(out.trees.size());
    return out;
}

BigInt count_brute(const PatternSet& x, std::size_t n, std::size_t max_brute)
{
    unsigned long count = 0;
    for_each_admitted(x, n, max_brute, [&](const TreeShape&, const std::vector<Label>&) { ++count; });
    return BigInt(count);
}

BigInt count_dp(const PatternSet& x, std::size_t n) { return dp_counts(x, n)[n]; }

std::vector<BigInt> coefficient_sequence(const PatternSet& x, std::size_t max_degree)
{
    return dp_counts(x, max_degree);
}

// --- AvoidanceCatalog ------------------------------------------------------

std::size_t AvoidanceCatalog::KeyHash::operator()(const Key& k) const noexcept
{
    std::uint64_t h = k.left_index;
    h = h * 0x9E3779B97F4A7C15ull ^ k.right_index;
    h = h * 0x9E3779B97F4A7C15ull ^ (std::uint64_t{k.label} << 16 | std::uint64_t{k.left_degree} << 8 |
                                     k.right_degree);
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
}

AvoidanceCatalog::AvoidanceCatalog(const PatternSet& x, std::size_t max_degree,
                                   std::size_t max_level_size)
    : x_(x)
{
    if (x.arity() != 2)
        throw std::invalid_argument("AvoidanceCatalog supports binary pattern sets only");
    if (max_degree > 200)
        throw SizeLimitError("max-degree", "catalog degree " + std::to_string(max_degree) + " too large");
    auto counts = dp_counts(x, max_degree);
    for (std::size_t p = 0; p <= max_degree; ++p)
        if (counts[p] > static_cast<unsigned long>(max_level_size))
            throw SizeLimitError("max-level-size", "#X_" + std::to_string(p) + " = " + to_string(counts[p]) +
                                                       " exceeds the catalog bound " +
                                                       std::to_string(max_level_size));

    const std::size_t m = x.alphabet_size();
    levels_.resize(max_degree + 1);
    nodes_.resize(max_degree + 1);
    levels_[0].emplace_back(2);
    nodes_[0].push_back(NodeInfo{});
    for (std::size_t p = 1; p <= max_degree; ++p) {
        auto& level = levels_[p];
        auto& nodes = nodes_[p];
        level.reserve(counts[p].get_ui());
        nodes.reserve(counts[p].get_ui());
        for (std::size_t a = 0; a < p; ++a) {
            const std::size_t b = p - 1 - a;
            for (std::size_t li = 0; li < levels_[a].size(); ++li) {
                for (std::size_t r = 0; r < m; ++r) {
                    const Label root = label_at(r);
                    if (a > 0 && !x.contains(1, root, nodes_[a][li].label))
                        continue;
                    for (std::size_t ri = 0; ri < levels_[b].size(); ++ri) {
                        if (b > 0 && !x.contains(2, root, nodes_[b][ri].label))
                            continue;
                        const auto idx = static_cast<std::uint32_t>(level.size());
                        Ref lref{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(li)};
                        Ref rref{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(ri)};
                        level.push_back(LabelledTree::graft({levels_[a][li], levels_[b][ri]}, root));
                        nodes.push_back(NodeInfo{root, lref, rref});
                        lookup_.emplace(Key{lref.index, rref.index, static_cast<std::uint16_t>(r),
                                            static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)},
                                        idx);
                    }
                }
            }
        }
    }
}

std::optional<AvoidanceCatalog::Ref> AvoidanceCatalog::graft(Ref left, Label l, Ref right) const
{
    const std::size_t p = std::size_t{left.degree} + right.degree + 1;
    if (p > max_degree())
        return std::nullopt;
    auto it = lookup_.find(Key{left.index, right.index, static_cast<std::uint16_t>(index(l)),
                               static_cast<std::uint8_t>(left.degree),
                               static_cast<std::uint8_t>(right.degree)});
    if (it == lookup_.end())
        return std::nullopt;
    return Ref{static_cast<std::uint32_t>(p), it->second};
}

std::optional<AvoidanceCatalog::Ref> AvoidanceCatalog::find(const LabelledTree& t) const
{
    if (t.arity() != 2)
        return std::nullopt;
    if (t.is_leaf())
        return Ref{0, 0};
    auto kids = t.children();
    auto l = find(kids[0]);
    auto r = find(kids[1]);
    if (!l || !r)
        return std::nullopt;
    return graft(*l, t.root_label(), *r);
}

} // namespace treeinv
