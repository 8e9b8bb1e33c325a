#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeinv/alphabet.hpp"
#include "treeinv/bigint.hpp"

namespace treeinv {

// Planar rooted trees whose internal vertices all have the same arity k >= 2.
//
// Leaves are numbered 0, 1, ... from left to right. Vertices are numbered
// 1..n in a left-to-right sweep that visits the first child subtree, then
// the vertex itself, then the remaining children. For binary trees this puts
// vertex i between leaves i-1 and i.
//
// Text encoding: a leaf is "()", an internal vertex is "(" followed by the
// encodings of its children and ")". A labelled tree appends ":" and the
// comma-separated label tokens in vertex order.

class TreeShape {
public:
    /// The leaf `|`.
    explicit TreeShape(int arity = 2);

    /// Joins the roots of `children` to a new vertex. Arity is children.size().
    static TreeShape graft(std::vector<TreeShape> children);

    int arity() const noexcept { return arity_; }
    std::size_t degree() const noexcept;
    std::size_t leaves() const noexcept;
    bool is_leaf() const noexcept { return node_ == nullptr; }
    std::span<const TreeShape> children() const noexcept;

    std::string encode() const;
    /// `arity` is used only when the text is a bare leaf; otherwise it is inferred.
    static TreeShape decode(std::string_view text, int arity = 2);

    friend bool operator==(const TreeShape& a, const TreeShape& b);
    /// Canonical order: degree, then the tuple of child degrees, then children left to right.
    friend std::strong_ordering operator<=>(const TreeShape& a, const TreeShape& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    int arity_;
};

class LabelledTree {
public:
    explicit LabelledTree(int arity = 2);
    /// `labels[i]` decorates vertex i+1. Throws std::invalid_argument on length mismatch.
    LabelledTree(const TreeShape& shape, std::span<const Label> labels);

    /// Throws ArityMismatch unless every child has arity children.size() >= 2.
    static LabelledTree graft(std::vector<LabelledTree> children, Label root);

    int arity() const noexcept { return arity_; }
    std::size_t degree() const noexcept;
    std::size_t leaves() const noexcept;
    bool is_leaf() const noexcept { return node_ == nullptr; }
    std::span<const LabelledTree> children() const noexcept;
    /// Throws std::logic_error on a leaf.
    Label root_label() const;

    TreeShape shape() const;
    /// Labels in vertex order.
    std::vector<Label> labels() const;
    Label label(std::size_t vertex) const;

    /// Replaces the cup at `vertex` by a leaf. Throws std::invalid_argument if it is not a cup.
    LabelledTree delete_cup(std::size_t vertex) const;
    /// Replaces leaf `leaf` by a degree-1 vertex labelled `l`.
    LabelledTree insert_cup(std::size_t leaf, Label l) const;

    std::string encode(const Alphabet& alphabet) const;
    static LabelledTree decode(std::string_view text, const Alphabet& alphabet, int arity = 2);

    friend bool operator==(const LabelledTree& a, const LabelledTree& b);
    /// Canonical order: degree, child degrees, first child, root label, remaining children.
    friend std::strong_ordering operator<=>(const LabelledTree& a, const LabelledTree& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    int arity_;
};

enum class Assoc { L, R };

/// A degree-2 labelled tree: a parent vertex whose child at `position`
/// (1-based) is the only internal child.
///
/// Binary naming: (L; i, j) is x v_i (y v_j z) (the composite hangs right,
/// the root is vertex 1), and (R; i, j) is (x v_i y) v_j z (the composite
/// hangs left, the root is vertex 2). In both, i and j are the labels of
/// vertices 1 and 2.
struct Pattern {
    int arity = 2;
    int position = 1;
    Label parent{};
    Label child{};

    static Pattern binary(Assoc assoc, Label v1, Label v2);

    Assoc assoc() const;
    Label v1() const;
    Label v2() const;

    LabelledTree to_tree() const;
    /// Throws std::invalid_argument unless `t` has degree 2.
    static Pattern from_tree(const LabelledTree& t);

    /// "(L;a,b)" for binary patterns, "(pos;parent,child)" otherwise.
    std::string to_string(const Alphabet& alphabet) const;

    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// All degree-n shapes of arity k in canonical order.
std::vector<TreeShape> enumerate_shapes(int arity, std::size_t degree);

/// Fuss-Catalan number C(kn, n) / ((k-1)n + 1).
BigInt count_shapes(int arity, std::size_t degree);

/// One pattern per parent-child pair of internal vertices, sorted.
std::vector<Pattern> local_patterns(const LabelledTree& t);

/// Vertex numbers whose children are all leaves, ascending.
std::vector<std::size_t> cups(const LabelledTree& t);

/// Leaf numbers under each child of the vertex numbered `vertex`, one range per child.
struct LeafRange {
    std::size_t first;
    std::size_t last;
};
std::vector<LeafRange> child_leaf_ranges(const TreeShape& shape, std::size_t vertex);

} // namespace treeinv
