#include "treeinv/alphabet.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace treeinv {

namespace {

bool reserved(char c)
{
    switch (c) {
    case ',': case ':': case '(': case ')': case ' ': case '\t': case '\n': case ';':
        return true;
    default:
        return false;
    }
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens))
{
    if (tokens_.size() > std::numeric_limits<std::uint16_t>::max())
        throw std::invalid_argument("alphabet too large");
    std::unordered_set<std::string> seen;
    for (const auto& t : tokens_) {
        if (t.empty())
            throw std::invalid_argument("empty label token");
        if (std::any_of(t.begin(), t.end(), reserved))
            throw std::invalid_argument("label token '" + t + "' contains a reserved character");
        if (!seen.insert(t).second)
            throw std::invalid_argument("duplicate label token '" + t + "'");
    }
}

Alphabet Alphabet::numbered(std::size_t m)
{
    std::vector<std::string> tokens;
    tokens.reserve(m);
    for (std::size_t i = 1; i <= m; ++i)
        tokens.push_back(std::to_string(i));
    return Alphabet(std::move(tokens));
}

std::optional<Label> Alphabet::find(std::string_view token) const
{
    auto it = std::find(tokens_.begin(), tokens_.end(), token);
    if (it == tokens_.end())
        return std::nullopt;
    return label_at(static_cast<std::size_t>(it - tokens_.begin()));
}

Label Alphabet::at(std::string_view token) const
{
    if (auto l = find(token))
        return *l;
    throw std::invalid_argument("unknown label token '" + std::string(token) + "'");
}

} // namespace treeinv
