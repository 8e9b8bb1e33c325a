#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "treeinv/bigint.hpp"
#include "treeinv/pattern_set.hpp"
#include "treeinv/series.hpp"

namespace treeinv {

/// A worked pattern set with its published counts.
struct ExampleEntry {
    std::string key;          ///< "a".."i" for binary sets, "ka", "ka4", "kb", "kc" for k-ary ones
    std::string summary;
    int arity = 2;
    PatternSet x;
    std::vector<BigInt> expected_x; ///< #X_0, #X_1, ...
    std::vector<BigInt> expected_z; ///< #Z_0, #Z_1, ...
    std::optional<RationalForm> g;  ///< closed form of the series of Z, if published
    std::size_t default_order = 10;

    PatternSet z() const { return complement(x); }
};

const std::vector<ExampleEntry>& example_registry();

/// Throws std::invalid_argument naming the known keys.
const ExampleEntry& find_example(const std::string& key);

/// Compass tokens of example (i), row by row: NW N NE W C E SW S SE.
Alphabet compass_alphabet();

} // namespace treeinv
