#include "treeinv/pattern_set.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "treeinv/errors.hpp"

namespace treeinv {

PatternSet::PatternSet(Alphabet alphabet, int arity)
    : alphabet_(std::move(alphabet)), arity_(arity)
{
    if (arity < 2)
        throw std::invalid_argument("arity must be at least 2");
    const std::size_t m = alphabet_.size();
    bits_.assign(static_cast<std::size_t>(arity) * m * m, false);
}

PatternSet::PatternSet(Alphabet alphabet, int arity, const std::vector<Pattern>& members)
    : PatternSet(std::move(alphabet), arity)
{
    for (const auto& p : members)
        insert(p);
}

PatternSet PatternSet::full(Alphabet alphabet, int arity)
{
    PatternSet s(std::move(alphabet), arity);
    std::fill(s.bits_.begin(), s.bits_.end(), true);
    s.count_ = s.bits_.size();
    return s;
}

void PatternSet::check(const Pattern& p) const
{
    if (p.arity != arity_)
        throw std::invalid_argument("pattern of arity " + std::to_string(p.arity) +
                                    " in a pattern set of arity " + std::to_string(arity_));
    if (p.position < 1 || p.position > arity_)
        throw std::invalid_argument("pattern child position out of range");
    if (index(p.parent) >= alphabet_.size() || index(p.child) >= alphabet_.size())
        throw std::invalid_argument("pattern label outside the alphabet");
}

bool PatternSet::contains(const Pattern& p) const
{
    check(p);
    return bits_[slot(p.position, p.parent, p.child)];
}

void PatternSet::insert(const Pattern& p)
{
    check(p);
    auto s = slot(p.position, p.parent, p.child);
    if (!bits_[s]) {
        bits_[s] = true;
        ++count_;
    }
}

void PatternSet::erase(const Pattern& p)
{
    check(p);
    auto s = slot(p.position, p.parent, p.child);
    if (bits_[s]) {
        bits_[s] = false;
        --count_;
    }
}

std::vector<Pattern> PatternSet::universe() const
{
    std::vector<Pattern> out;
    out.reserve(bits_.size());
    const std::size_t m = alphabet_.size();
    for (int pos = 1; pos <= arity_; ++pos)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                out.push_back(Pattern{arity_, pos, label_at(a), label_at(b)});
    return out;
}

std::vector<Pattern> PatternSet::members() const
{
    std::vector<Pattern> out;
    for (const auto& p : universe())
        if (bits_[slot(p.position, p.parent, p.child)])
            out.push_back(p);
    return out;
}

bool PatternSet::admits(const LabelledTree& t) const
{
    if (t.arity() != arity_)
        return false;
    for (const auto& p : local_patterns(t))
        if (!contains(p))
            return false;
    return true;
}

PatternSet complement(const PatternSet& x)
{
    PatternSet z(x.alphabet(), x.arity());
    for (const auto& p : x.universe())
        if (!x.contains(p))
            z.insert(p);
    return z;
}

PatternSet random_pattern_set(const Alphabet& alphabet, int arity, std::mt19937_64& rng)
{
    PatternSet s(alphabet, arity);
    for (const auto& p : s.universe())
        if (rng() & 1u)
            s.insert(p);
    return s;
}

std::vector<PatternSet> all_pattern_sets(const Alphabet& alphabet, int arity)
{
    PatternSet empty(alphabet, arity);
    auto universe = empty.universe();
    if (universe.size() > 24)
        throw std::invalid_argument("refusing to list 2^" + std::to_string(universe.size()) +
                                    " pattern sets");
    std::vector<PatternSet> out;
    const std::uint64_t total = std::uint64_t{1} << universe.size();
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        PatternSet s = empty;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1u)
                s.insert(universe[i]);
        out.push_back(std::move(s));
    }
    return out;
}

// --- configuration files ---------------------------------------------------

namespace {

using nlohmann::json;

std::string token_of(const json& v, const std::string& field)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw ParseError("field '" + field + "' must be a label token (string or integer)");
}

const json& require(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError("missing field '" + key + "' in " + where);
    return obj.at(key);
}

std::size_t line_of(const std::string& text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

} // namespace

PatternConfig parse_pattern_config(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("config line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
    if (!doc.is_object())
        throw ParseError("config must be a JSON object");

    const json& arity_v = require(doc, "arity", "config");
    if (!arity_v.is_number_integer() || arity_v.get<int>() < 2)
        throw ParseError("field 'arity' must be an integer >= 2");
    const int arity = arity_v.get<int>();

    const json& indices_v = require(doc, "indices", "config");
    if (!indices_v.is_array())
        throw ParseError("field 'indices' must be a list of tokens");
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < indices_v.size(); ++i)
        tokens.push_back(token_of(indices_v[i], "indices[" + std::to_string(i) + "]"));
    Alphabet alphabet;
    try {
        alphabet = Alphabet(std::move(tokens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("field 'indices': ") + e.what());
    }

    const json& mode_v = require(doc, "mode", "config");
    if (!mode_v.is_string() || (mode_v != "X" && mode_v != "Z"))
        throw ParseError("field 'mode' must be \"X\" or \"Z\"");

    const json& patterns_v = require(doc, "patterns", "config");
    if (!patterns_v.is_array())
        throw ParseError("field 'patterns' must be a list");

    PatternSet listed(alphabet, arity);
    for (std::size_t i = 0; i < patterns_v.size(); ++i) {
        const std::string where = "patterns[" + std::to_string(i) + "]";
        const json& p = patterns_v[i];
        auto lookup = [&](const std::string& key) {
            std::string tok = token_of(require(p, key, where), where + "." + key);
            auto l = alphabet.find(tok);
            if (!l)
                throw ParseError(where + "." + key + ": unknown label token '" + tok + "'");
            return *l;
        };
        if (arity == 2 && p.contains("assoc")) {
            const json& a = p.at("assoc");
            if (!a.is_string() || (a != "L" && a != "R"))
                throw ParseError(where + ".assoc must be \"L\" or \"R\"");
            listed.insert(Pattern::binary(a == "L" ? Assoc::L : Assoc::R, lookup("v1"), lookup("v2")));
        } else {
            const json& pos = require(p, "pos", where);
            if (!pos.is_number_integer() || pos.get<int>() < 1 || pos.get<int>() > arity)
                throw ParseError(where + ".pos must be an integer in 1.." + std::to_string(arity));
            listed.insert(Pattern{arity, pos.get<int>(), lookup("parent"), lookup("child")});
        }
    }

    if (mode_v == "X")
        return PatternConfig{listed, complement(listed)};
    return PatternConfig{complement(listed), listed};
}

PatternConfig load_pattern_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern_config(buf.str());
}

std::string to_config_json(const PatternSet& listed, char mode)
{
    json doc;
    doc["arity"] = listed.arity();
    doc["indices"] = listed.alphabet().tokens();
    doc["mode"] = std::string(1, mode);
    json patterns = json::array();
    const auto& a = listed.alphabet();
    for (const auto& p : listed.members()) {
        if (p.arity == 2)
            patterns.push_back({{"assoc", p.assoc() == Assoc::L ? "L" : "R"},
                                {"v1", a.token(p.v1())},
                                {"v2", a.token(p.v2())}});
        else
            patterns.push_back({{"pos", p.position}, {"parent", a.token(p.parent)}, {"child", a.token(p.child)}});
    }
    doc["patterns"] = patterns;
    return doc.dump(2);
}

} // namespace treeinv
