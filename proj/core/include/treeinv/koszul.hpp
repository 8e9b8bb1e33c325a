#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "treeinv/pattern_set.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

// The Koszul complex of a binary pattern set X with complement Z.
//
// Chains of homological degree n+1 are spanned by tuples (z; x_0, ..., x_n)
// with z in Z_n and x_j in X_{i_j}; the weight n + i_0 + ... + i_n is
// preserved by the boundary, so the complex splits into finite pieces, one
// per weight w, living in degrees 1..w+1. The boundary is
// d = sum_{i=1}^{n} (-1)^i d_i where d_i collapses the cup at vertex i of z
// into a grafting x_{i-1} v x_i decorated by that vertex's label.

struct ChainBasisElement {
    LabelledTree z;
    std::vector<LabelledTree> attachments; ///< one per leaf of z

    std::size_t degree() const noexcept { return z.degree() + 1; }
    std::size_t weight() const noexcept;

    friend bool operator==(const ChainBasisElement&, const ChainBasisElement&) = default;
};

/// d_vertex(e), or nullopt when it is zero: the vertex is not a cup of z, or
/// the grafted attachment has a local pattern outside X.
/// Throws std::out_of_range unless 1 <= vertex <= deg z.
std::optional<ChainBasisElement> face(const ChainBasisElement& e, std::size_t vertex, const PatternSet& x);

/// Integer matrix in compressed sparse column form.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> col_start{0}; ///< size cols + 1
    std::vector<std::uint32_t> row_index;  ///< ascending within a column
    std::vector<std::int32_t> value;

    std::size_t nonzeros() const noexcept { return value.size(); }
    std::int32_t at(std::size_t row, std::size_t col) const;
    /// Sets one entry, inserting or erasing as needed.
    void set(std::size_t row, std::size_t col, std::int32_t v);
};

/// Rank over Q by exact column reduction.
std::size_t rank_over_rationals(const SparseMatrix& m);

struct KoszulLimits {
    std::size_t max_weight = 6;
    std::uint64_t max_basis = 4'000'000; ///< total basis size of one weight
};

class KoszulCatalog;

/// The weight-w piece of the Koszul complex.
///
/// Basis elements of each degree are ordered by z (canonical order within
/// Z_n), then attachments left to right, each by degree and then canonical
/// order within X_i.
class WeightedComplex {
public:
    std::size_t weight() const noexcept { return weight_; }
    std::size_t top_degree() const noexcept { return weight_ + 1; }
    const PatternSet& patterns() const noexcept;

    /// dim K_degree; zero outside 1..w+1.
    std::size_t dimension(std::size_t degree) const;
    /// Dimensions of degrees 1..w+1.
    std::vector<std::size_t> dimensions() const;

    ChainBasisElement element(std::size_t degree, std::size_t index) const;
    std::optional<std::size_t> index_of(const ChainBasisElement& e) const;

    /// D_n : K_{n+1} -> K_n for 1 <= n <= w.
    const SparseMatrix& boundary(std::size_t n) const;
    void replace_boundary(std::size_t n, SparseMatrix m);

    /// Number of cups of z for the given element.
    std::size_t cup_count(std::size_t degree, std::size_t index) const;

    /// True iff no basis element one degree up maps onto this one under a face,
    /// decided by re-inserting a cup at each leaf of z and splitting the attachment there.
    bool is_extremal(std::size_t degree, std::size_t index) const;

private:
    friend std::vector<WeightedComplex> build_complexes(const PatternSet&, std::size_t, const KoszulLimits&);

    struct Level {
        std::size_t z_degree = 0;
        std::uint64_t tuples_per_z = 0;
        std::size_t size = 0;
        std::vector<std::uint32_t> data; ///< stride 1 + 2 (z_degree + 1)
    };

    std::size_t stride(std::size_t degree) const { return 1 + 2 * degree; }
    std::uint64_t rank_of(std::size_t degree, const std::uint32_t* element) const;

    std::shared_ptr<const KoszulCatalog> catalog_;
    std::size_t weight_ = 0;
    std::vector<Level> levels_;           ///< index degree - 1
    std::vector<SparseMatrix> boundaries_; ///< index n - 1
};

/// Throws SizeLimitError when the weight or basis size exceeds the limits,
/// std::invalid_argument for a non-binary pattern set.
WeightedComplex build_complex(const PatternSet& x, std::size_t weight, const KoszulLimits& limits = {});

/// Complexes of weights 0..max_weight sharing one tree catalog.
std::vector<WeightedComplex> build_complexes(const PatternSet& x, std::size_t max_weight,
                                             const KoszulLimits& limits = {});

/// True iff D_n D_{n+1} = 0 for every n, and the presimplicial relation
/// d_i d_j = d_{j-1} d_i (i < j) holds on `samples` pseudo-randomly chosen elements.
bool check_d_squared(const WeightedComplex& c, std::size_t samples = 64, std::uint64_t seed = 1);

/// Ranks of H_1..H_{w+1} over Q.
std::vector<std::size_t> homology_ranks(const WeightedComplex& c);

/// sum over degrees d of (-1)^d dim K_d.
long long euler_characteristic(const WeightedComplex& c);

struct ExtremalBlock {
    std::size_t degree;               ///< degree of the extremal element
    std::size_t index;                ///< its index in that degree
    std::size_t cups;                 ///< number of cups of its z
    std::vector<std::size_t> level_sizes; ///< elements r face-steps down, r = 0..cups
    std::size_t size;
};

struct ExtremalDecomposition {
    std::vector<ExtremalBlock> blocks;
    /// block_of[degree - 1][index]
    std::vector<std::vector<std::uint32_t>> block_of;
};

/// Splits the basis into the face-closures of extremal elements and verifies
/// that they partition it, that a block with kappa cups has C(kappa, r)
/// elements r steps down, and that the boundary never crosses blocks.
/// Throws InvariantViolation on any failure.
ExtremalDecomposition extremal_decomposition(const WeightedComplex& c);

/// Boundary matrices as "degree row col entry" lines, one per nonzero entry,
/// where `degree` is the source degree n+1 of D_n.
void write_triplets(const WeightedComplex& c, std::ostream& out);

} // namespace treeinv
