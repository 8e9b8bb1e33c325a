#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "treeinv/alphabet.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

/// A subset X of the k * m^2 degree-2 labelled trees of arity k over an alphabet of size m.
class PatternSet {
public:
    PatternSet(Alphabet alphabet, int arity);
    /// Throws std::invalid_argument if a member does not fit the alphabet or arity.
    PatternSet(Alphabet alphabet, int arity, const std::vector<Pattern>& members);

    static PatternSet full(Alphabet alphabet, int arity);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    int arity() const noexcept { return arity_; }
    std::size_t alphabet_size() const noexcept { return alphabet_.size(); }

    /// k * m^2.
    std::size_t universe_size() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return count_; }

    bool contains(const Pattern& p) const;
    bool contains(int position, Label parent, Label child) const
    {
        return bits_[slot(position, parent, child)];
    }

    void insert(const Pattern& p);
    void erase(const Pattern& p);

    /// Members in pattern order.
    std::vector<Pattern> members() const;
    /// Every pattern of the universe in pattern order.
    std::vector<Pattern> universe() const;

    /// True iff all local patterns of `t` are members.
    bool admits(const LabelledTree& t) const;

    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    std::size_t slot(int position, Label parent, Label child) const
    {
        const std::size_t m = alphabet_.size();
        return (static_cast<std::size_t>(position - 1) * m + index(parent)) * m + index(child);
    }
    void check(const Pattern& p) const;

    Alphabet alphabet_;
    int arity_;
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

/// The complement Z of X in the universe of degree-2 patterns.
PatternSet complement(const PatternSet& x);

/// Every pattern kept independently with probability 1/2.
PatternSet random_pattern_set(const Alphabet& alphabet, int arity, std::mt19937_64& rng);

/// All 2^(k m^2) subsets in bitmask order (bit i = i-th pattern of the universe).
/// Throws std::invalid_argument if the universe has more than 24 patterns.
std::vector<PatternSet> all_pattern_sets(const Alphabet& alphabet, int arity);

/// A pattern-set configuration as read from a JSON document:
///
///   {"arity": 2, "indices": ["1", "2"], "mode": "Z",
///    "patterns": [{"assoc": "L", "v1": "1", "v2": "1"}]}
///
/// With arity > 2 each pattern is {"pos": p, "parent": a, "child": b}.
/// `mode` says whether the listed patterns are X or its complement Z.
struct PatternConfig {
    PatternSet x;
    PatternSet z;
};

/// Throws ParseError naming the line or field at fault.
PatternConfig parse_pattern_config(const std::string& text);
PatternConfig load_pattern_config(const std::filesystem::path& path);

/// Inverse of parse_pattern_config, always written in the given mode.
std::string to_config_json(const PatternSet& listed, char mode);

} // namespace treeinv
