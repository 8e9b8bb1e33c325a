#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "treeinv/bigint.hpp"
#include "treeinv/pattern_set.hpp"

namespace treeinv::cli {

/// Applies the label permutation old -> perm[old] to every pattern.
PatternSet relabel(const PatternSet& x, std::span<const std::size_t> perm);

/// The smallest relabelling of x, comparing member bitmasks in universe order.
PatternSet canonical_relabelling(const PatternSet& x);

struct SearchHit {
    PatternSet x; ///< canonical representative of its relabelling class
    std::vector<BigInt> x_counts;
    std::vector<BigInt> z_counts;
};

struct SearchResult {
    std::vector<BigInt> target_z; ///< signed-back coefficients of the inverse series
    std::size_t alphabet_size = 0;
    std::size_t examined = 0;     ///< candidates whose counts were computed
    std::vector<SearchHit> hits;
};

/// Looks for binary X over #I = a_1 labels (a_1 <= max_alphabet) with
/// #X = a_2 whose complement counts equal the coefficients of the inverse of
/// the alternating series of `a`, up to the available order. Relabellings of
/// one set are tried once. Throws NotInvertible unless a_0 = 1.
SearchResult search_interpretations(std::span<const BigInt> a, std::size_t max_alphabet);

} // namespace treeinv::cli
