#include "treeinv/bigint.hpp"

#include <cctype>

#include "treeinv/errors.hpp"

namespace treeinv {

std::string join_terms(std::span<const BigInt> terms, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0)
            out += sep;
        out += terms[i].get_str();
    }
    return out;
}

std::vector<BigInt> parse_terms(const std::string& text)
{
    std::vector<BigInt> out;
    std::string token;
    auto flush = [&](std::size_t where) {
        if (token.empty())
            throw ParseError("empty term before position " + std::to_string(where) + " in \"" + text + "\"");
        BigInt v;
        if (v.set_str(token, 10) != 0)
            throw ParseError("\"" + token + "\" is not an integer");
        out.push_back(std::move(v));
        token.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == ',') {
            flush(i);
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)) && !(c == '-' && token.empty()))
            throw ParseError(std::string("unexpected character '") + c + "' at position " + std::to_string(i));
        token += c;
    }
    if (!token.empty() || !out.empty())
        flush(text.size());
    return out;
}

} // namespace treeinv
