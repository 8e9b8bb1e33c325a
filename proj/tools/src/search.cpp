#include "treeinv_cli/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "treeinv/avoidance.hpp"
#include "treeinv/errors.hpp"
#include "treeinv/series.hpp"

namespace treeinv::cli {

namespace {

std::vector<bool> bitmask(const PatternSet& x)
{
    std::vector<bool> bits;
    for (const auto& p : x.universe())
        bits.push_back(x.contains(p));
    return bits;
}

} // namespace

PatternSet relabel(const PatternSet& x, std::span<const std::size_t> perm)
{
    if (perm.size() != x.alphabet_size())
        throw std::invalid_argument("permutation size differs from the alphabet size");
    PatternSet out(x.alphabet(), x.arity());
    for (const auto& p : x.members())
        out.insert(Pattern{p.arity, p.position, label_at(perm[index(p.parent)]), label_at(perm[index(p.child)])});
    return out;
}

PatternSet canonical_relabelling(const PatternSet& x)
{
    std::vector<std::size_t> perm(x.alphabet_size());
    std::iota(perm.begin(), perm.end(), 0);
    PatternSet best = x;
    std::vector<bool> best_bits = bitmask(x);
    while (std::next_permutation(perm.begin(), perm.end())) {
        PatternSet y = relabel(x, perm);
        auto bits = bitmask(y);
        if (bits < best_bits) {
            best = std::move(y);
            best_bits = std::move(bits);
        }
    }
    return best;
}

SearchResult search_interpretations(std::span<const BigInt> a, std::size_t max_alphabet)
{
    if (a.empty())
        throw std::invalid_argument("the search needs at least one term");
    if (a[0] != 1)
        throw NotInvertible("a_0 = " + a[0].get_str() + "; the alternating series has a non-unit linear coefficient");

    SearchResult result;
    const std::size_t top = a.size() - 1;
    const IntSeries inverse = invert(alternating_series(a, a.size()));
    for (std::size_t n = 0; n <= top; ++n) {
        BigInt c = inverse.coefficient(n + 1);
        result.target_z.push_back(n % 2 == 0 ? BigInt(-c) : c);
    }
    if (top < 1)
        return result;
    if (a[1] < 0 || a[1] > static_cast<unsigned long>(max_alphabet))
        return result;
    const std::size_t m = a[1].get_ui();
    result.alphabet_size = m;
    const Alphabet ab = Alphabet::numbered(m);
    const std::size_t universe = 2 * m * m;
    if (universe > 24)
        throw std::invalid_argument("alphabet too large for exhaustive search");
    if (top >= 2 && (a[2] < 0 || a[2] > static_cast<unsigned long>(universe)))
        return result;
    // Z is the complement, so the inverse must already predict #Z = 2m^2 - #X.
    if (top >= 2 && result.target_z[2] != static_cast<unsigned long>(universe - a[2].get_ui()))
        return result;

    for (auto& x : all_pattern_sets(ab, 2)) {
        if (top >= 2 && x.size() != a[2])
            continue;
        if (!(canonical_relabelling(x) == x))
            continue;
        ++result.examined;
        const PatternSet z = complement(x);
        auto z_counts = coefficient_sequence(z, top);
        if (!std::equal(z_counts.begin(), z_counts.end(), result.target_z.begin()))
            continue;
        result.hits.push_back({x, coefficient_sequence(x, top), std::move(z_counts)});
    }
    return result;
}

} // namespace treeinv::cli
