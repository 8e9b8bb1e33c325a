#pragma once

#include <random>
#include <vector>

#include "treeinv/tree.hpp"

namespace treeinv::testing {

// Random shape of the given degree; splits the remaining vertices among the
// children uniformly at random (not uniform over shapes).
inline TreeShape random_shape(std::mt19937_64& rng, int arity, std::size_t degree)
{
    if (degree == 0)
        return TreeShape(arity);
    std::vector<std::size_t> parts(static_cast<std::size_t>(arity), 0);
    for (std::size_t i = 1; i < degree; ++i)
        ++parts[rng() % parts.size()];
    std::vector<TreeShape> kids;
    for (auto p : parts)
        kids.push_back(random_shape(rng, arity, p));
    return TreeShape::graft(std::move(kids));
}

inline LabelledTree random_tree(std::mt19937_64& rng, int arity, std::size_t alphabet_size, std::size_t degree)
{
    TreeShape s = random_shape(rng, arity, degree);
    std::vector<Label> labels;
    for (std::size_t i = 0; i < degree; ++i)
        labels.push_back(label_at(rng() % alphabet_size));
    return LabelledTree(s, labels);
}

inline LabelledTree leaf(int arity = 2) { return LabelledTree(arity); }

inline LabelledTree corolla(std::size_t label, int arity = 2)
{
    return LabelledTree::graft(std::vector<LabelledTree>(static_cast<std::size_t>(arity), leaf(arity)),
                               label_at(label));
}

} // namespace treeinv::testing
