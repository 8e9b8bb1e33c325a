#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "treeinv/bigint.hpp"
#include "treeinv/pattern_set.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

inline constexpr std::size_t kDefaultMaxBrute = 8;

/// X_n: the degree-n labelled trees all of whose local patterns lie in X.
struct AvoidanceClass {
    PatternSet base;
    std::size_t degree;
    std::vector<LabelledTree> trees; ///< canonical order
    BigInt count;
};

/// Lists X_n by enumerating every shape and labelling. Throws SizeLimitError
/// when n > max_brute.
AvoidanceClass generate(const PatternSet& x, std::size_t n, std::size_t max_brute = kDefaultMaxBrute);

/// #X_n by exhaustive enumeration over shapes and labellings, without building trees.
BigInt count_brute(const PatternSet& x, std::size_t n, std::size_t max_brute = kDefaultMaxBrute);

/// #X_n by dynamic programming over root labels, O(k n^2 m^2).
BigInt count_dp(const PatternSet& x, std::size_t n);

/// (#X_0, ..., #X_N).
std::vector<BigInt> coefficient_sequence(const PatternSet& x, std::size_t max_degree);

/// Binary trees of X_0..X_max indexed by (degree, position in canonical order),
/// with O(1) lookup of a grafted tree's index.
class AvoidanceCatalog {
public:
    struct Ref {
        std::uint32_t degree;
        std::uint32_t index;
        friend bool operator==(const Ref&, const Ref&) = default;
    };

    /// Binary pattern sets only. Throws SizeLimitError if any level exceeds max_level_size.
    AvoidanceCatalog(const PatternSet& x, std::size_t max_degree,
                     std::size_t max_level_size = std::size_t{1} << 26);

    const PatternSet& patterns() const noexcept { return x_; }
    std::size_t max_degree() const noexcept { return levels_.size() - 1; }
    std::size_t size(std::size_t degree) const { return levels_.at(degree).size(); }
    const std::vector<LabelledTree>& level(std::size_t degree) const { return levels_.at(degree); }
    const LabelledTree& tree(Ref r) const { return levels_[r.degree][r.index]; }

    /// Root label and children refs; only valid for degree >= 1.
    Label root_label(Ref r) const { return nodes_[r.degree][r.index].label; }
    Ref left(Ref r) const { return nodes_[r.degree][r.index].left; }
    Ref right(Ref r) const { return nodes_[r.degree][r.index].right; }

    /// Index of left v_l right, or nullopt if the grafted tree leaves X (or the catalog).
    std::optional<Ref> graft(Ref left, Label l, Ref right) const;

    /// Index of an arbitrary tree, or nullopt.
    std::optional<Ref> find(const LabelledTree& t) const;

private:
    struct NodeInfo {
        Label label;
        Ref left;
        Ref right;
    };
    struct Key {
        std::uint32_t left_index;
        std::uint32_t right_index;
        std::uint16_t label;
        std::uint8_t left_degree;
        std::uint8_t right_degree;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    PatternSet x_;
    std::vector<std::vector<LabelledTree>> levels_;
    std::vector<std::vector<NodeInfo>> nodes_;
    std::unordered_map<Key, std::uint32_t, KeyHash> lookup_;
};

} // namespace treeinv
