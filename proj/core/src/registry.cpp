#include "treeinv/registry.hpp"

#include <sstream>
#include <stdexcept>

namespace treeinv {

namespace {

std::vector<BigInt> terms(std::initializer_list<long> values)
{
    std::vector<BigInt> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

RationalForm rational(std::initializer_list<long> num, std::initializer_list<long> den)
{
    return RationalForm{terms(num), terms(den)};
}

// Binary patterns written "R a b" / "L a b", separated by commas.
std::vector<Pattern> binary_patterns(const Alphabet& ab, const std::string& text)
{
    std::vector<Pattern> out;
    std::istringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        std::istringstream fields(item);
        std::string assoc, v1, v2;
        if (!(fields >> assoc >> v1 >> v2) || (assoc != "L" && assoc != "R"))
            throw std::logic_error("bad registry pattern '" + item + "'");
        out.push_back(Pattern::binary(assoc == "L" ? Assoc::L : Assoc::R, ab.at(v1), ab.at(v2)));
    }
    return out;
}

PatternSet from_z(const Alphabet& ab, const std::string& z)
{
    return complement(PatternSet(ab, 2, binary_patterns(ab, z)));
}

PatternSet kary(int arity, std::initializer_list<int> positions, bool listed_is_x)
{
    const Alphabet ab = Alphabet::numbered(1);
    std::vector<Pattern> members;
    for (int p : positions)
        members.push_back(Pattern{arity, p, label_at(0), label_at(0)});
    PatternSet listed(ab, arity, members);
    return listed_is_x ? listed : complement(listed);
}

std::vector<ExampleEntry> build()
{
    std::vector<ExampleEntry> r;
    const Alphabet one = Alphabet::numbered(1);
    const Alphabet two = Alphabet::numbered(2);
    const Alphabet three = Alphabet::numbered(3);

    r.push_back({"a", "constant 1 versus itself", 2,
                 PatternSet(one, 2, binary_patterns(one, "L 1 1")),
                 terms({1, 1, 1, 1, 1, 1, 1}), terms({1, 1, 1, 1, 1, 1, 1}),
                 rational({0, -1}, {1, 1}), 10});
    r.push_back({"b", "Catalan numbers versus 1,1,0,...", 2, PatternSet::full(one, 2),
                 terms({1, 1, 2, 5, 14, 42, 132}), terms({1, 1, 0, 0, 0, 0, 0}),
                 rational({0, -1, 1}, {1}), 10});
    r.push_back({"c", "twice the Schroeder numbers versus 1,2,2,...", 2, from_z(two, "L 1 1, R 2 2"),
                 terms({1, 2, 6, 22, 90}), terms({1, 2, 2, 2, 2, 2, 2}),
                 rational({0, -1, 1}, {1, 1}), 10});
    r.push_back({"d", "1,2,6,21,80 versus 1,2,2,1,0,...", 2, from_z(two, "L 2 1, R 1 2"),
                 terms({1, 2, 6, 21, 80}), terms({1, 2, 2, 1, 0, 0, 0}),
                 rational({0, -1, 2, -2, 1}, {1}), 10});
    r.push_back({"e", "1,2,7,31,154 versus 1,2,1,1,...", 2, from_z(two, "L 1 1"),
                 terms({1, 2, 7, 31, 154}), terms({1, 2, 1, 1, 1, 1, 1}),
                 rational({0, -1, 1, 1}, {1, 1}), 10});
    r.push_back({"f", "1,3,17,121,965 versus 1,3,1,1,...", 2, from_z(three, "L 1 1"),
                 terms({1, 3, 17, 121, 965}), terms({1, 3, 1, 1, 1, 1, 1}),
                 rational({0, -1, 2, 2}, {1, 1}), 10});
    r.push_back({"g", "1,3,14,80,510 versus 1,3,4,5,...,n+2", 2, from_z(three, "L 1 1, L 2 1, R 2 2, R 3 3"),
                 terms({1, 3, 14, 80, 510}), terms({1, 3, 4, 5, 6, 7, 8}),
                 rational({0, -1, 1, 1}, {1, 2, 1}), 10});

    const Alphabet arrows({"NW", "NE", "SE", "SW"});
    r.push_back({"h", "1,4,23,156,1162 versus (n+1)^2", 2,
                 from_z(arrows, "R NW NW, R NE NW, L NE NE,"
                                "R SW NW, R SE NW, L SE NE,"
                                "R SW SW, L SE SW, L SE SE"),
                 terms({1, 4, 23, 156, 1162}), terms({1, 4, 9, 16, 25, 36, 49}),
                 rational({0, -1, 1}, {1, 3, 3, 1}), 10});

    const Alphabet compass = compass_alphabet();
    r.push_back({"i", "nine labels, 49 excluded patterns", 2,
                 from_z(compass, "R NW NW, R NE NW, L NE NE, R NE N, R NW N, R N NW, R N N,"
                                 "R SW NW, R SE NW, L SE NE, R SE N, R SW N, L S NW, R S N,"
                                 "R SW SW, L SE SW, L SE SE, R SE S, L SW S, L S SW, L S S,"
                                 "R SW W, R SE W, L SE E, R SE C, R SW C, L S W, R S C,"
                                 "R NW W, R NE W, L NE E, R NE C, R NW C, L N W, R N C,"
                                 "R W NW, L E NW, L E NE, R E N, L W N, L C NW, L C N,"
                                 "R W W, R E W, L E E, R E C, R W C, L C W, R C C"),
                 terms({1, 9, 113}), terms({1, 9, 49}), std::nullopt, 6});

    // k-ary sets over one label; patterns are given by the child position of the inner vertex.
    r.push_back({"ka", "ternary trees versus nothing", 3, PatternSet::full(one, 3),
                 terms({1, 1, 3, 12, 55}), terms({1, 1, 0, 0, 0}), std::nullopt, 12});
    r.push_back({"ka4", "quaternary trees versus nothing", 4, PatternSet::full(one, 4),
                 terms({1, 1, 4, 22, 140}), terms({1, 1, 0, 0, 0}), std::nullopt, 12});
    r.push_back({"kb", "Catalan numbers versus 1,1,1,... in arity 3", 3, kary(3, {2}, false),
                 terms({1, 1, 2, 5}), terms({1, 1, 1, 1, 1, 1}), std::nullopt, 12});
    r.push_back({"kc", "Catalan numbers versus themselves in arity 4", 4, kary(4, {1, 4}, true),
                 terms({1, 1, 2, 5, 14, 42, 132}), terms({1, 1, 2, 5, 14, 42, 132}), std::nullopt, 19});
    return r;
}

} // namespace

Alphabet compass_alphabet() { return Alphabet({"NW", "N", "NE", "W", "C", "E", "SW", "S", "SE"}); }

const std::vector<ExampleEntry>& example_registry()
{
    static const std::vector<ExampleEntry> registry = build();
    return registry;
}

const ExampleEntry& find_example(const std::string& key)
{
    for (const auto& e : example_registry())
        if (e.key == key)
            return e;
    std::string known;
    for (const auto& e : example_registry())
        known += (known.empty() ? "" : ", ") + e.key;
    throw std::invalid_argument("unknown example '" + key + "' (known: " + known + ")");
}

} // namespace treeinv
