#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treeinv {

/// Index of a token in an Alphabet.
enum class Label : std::uint16_t {};

constexpr std::size_t index(Label l) noexcept { return static_cast<std::size_t>(l); }
constexpr Label label_at(std::size_t i) noexcept { return static_cast<Label>(i); }

/// The ordered index set I. Token order fixes the canonical order of labels.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws std::invalid_argument on duplicate, empty or reserved-character tokens.
    explicit Alphabet(std::vector<std::string> tokens);

    /// Tokens "1", ..., "m".
    static Alphabet numbered(std::size_t m);

    std::size_t size() const noexcept { return tokens_.size(); }
    bool empty() const noexcept { return tokens_.empty(); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    const std::string& token(Label l) const { return tokens_.at(index(l)); }

    std::optional<Label> find(std::string_view token) const;
    /// Like find, but throws std::invalid_argument naming the unknown token.
    Label at(std::string_view token) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> tokens_;
};

} // namespace treeinv
