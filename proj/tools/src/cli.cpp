#include "treeinv_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "treeinv/avoidance.hpp"
#include "treeinv/errors.hpp"
#include "treeinv/koszul.hpp"
#include "treeinv/oeis.hpp"
#include "treeinv/registry.hpp"
#include "treeinv/series.hpp"
#include "treeinv_cli/report.hpp"
#include "treeinv_cli/search.hpp"

#ifndef TREEINV_FIXTURE_DIR
#define TREEINV_FIXTURE_DIR ""
#endif

namespace treeinv::cli {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Brute-force enumeration is skipped once shapes * m^n exceeds this.
constexpr unsigned long kBruteWork = 4'000'000;

struct Options {
    std::string example;
    std::string config;
    bool random = false;
    std::size_t alphabet = 2;
    int arity = 2;
    std::uint64_t seed = 1;
    std::size_t max = 6;
    std::optional<std::size_t> order;
    std::size_t max_weight = 4;
    std::size_t max_brute = kDefaultMaxBrute;
    std::string format = "human";
    std::string oeis_mode = "fixtures";
    std::string fixtures;
    std::string record;
    std::string sequence;
    std::size_t max_alphabet = 2;
    std::string dump;
    std::string which = "x";
};

struct Source {
    std::string label;
    PatternSet x;
    const ExampleEntry* entry = nullptr;
};

Source resolve(const Options& o)
{
    const int chosen = !o.example.empty() + !o.config.empty() + o.random;
    if (chosen != 1)
        throw std::invalid_argument("give exactly one of --example, --config, --random");
    if (!o.example.empty()) {
        const auto& e = find_example(o.example);
        return {"example " + e.key, e.x, &e};
    }
    if (!o.config.empty())
        return {o.config, load_pattern_config(o.config).x, nullptr};
    if (o.arity < 2)
        throw std::invalid_argument("--arity must be at least 2");
    std::mt19937_64 rng(o.seed);
    PatternSet x = random_pattern_set(Alphabet::numbered(o.alphabet), o.arity, rng);
    return {"random set (m=" + std::to_string(o.alphabet) + ", k=" + std::to_string(o.arity) +
                ", seed=" + std::to_string(o.seed) + ")",
            x, nullptr};
}

json describe(const PatternSet& x)
{
    json members = json::array();
    for (const auto& p : x.members())
        members.push_back(p.to_string(x.alphabet()));
    return {{"arity", x.arity()}, {"alphabet", x.alphabet().tokens()}, {"x", members},
            {"x_size", x.size()}, {"z_size", x.universe_size() - x.size()}};
}

json to_json(const std::vector<BigInt>& terms)
{
    json out = json::array();
    for (const auto& t : terms)
        out.push_back(t.get_str());
    return out;
}

std::string pattern_list(const PatternSet& x)
{
    std::string out;
    for (const auto& p : x.members())
        out += (out.empty() ? "" : " ") + p.to_string(x.alphabet());
    return out.empty() ? "(none)" : out;
}

bool brute_feasible(const PatternSet& x, std::size_t n)
{
    BigInt work = count_shapes(x.arity(), n);
    BigInt labellings;
    mpz_ui_pow_ui(labellings.get_mpz_t(), x.alphabet_size(), n);
    return work * labellings <= kBruteWork;
}

// Compares DP counts with brute-force counts for every degree where that is cheap.
void brute_cross_check(Report& report, const PatternSet& x, const std::vector<BigInt>& counts,
                       std::size_t max_brute, const std::string& what)
{
    std::size_t checked = 0;
    for (std::size_t n = 0; n < counts.size() && n <= max_brute; ++n) {
        if (!brute_feasible(x, n))
            break;
        BigInt b = count_brute(x, n, max_brute);
        if (b != counts[n]) {
            report.verdict(what + " dp = brute force", false,
                           "degree " + std::to_string(n) + ": dp " + counts[n].get_str() + ", brute force " +
                               b.get_str());
            return;
        }
        ++checked;
    }
    report.results()[what + "_brute_checked_degrees"] = checked;
    report.verdict(what + " dp = brute force", true, "degrees 0.." + std::to_string(checked) + " exclusive");
}

void compare_prefix(Report& report, const std::string& name, const std::vector<BigInt>& computed,
                    const std::vector<BigInt>& expected)
{
    const std::size_t n = std::min(computed.size(), expected.size());
    for (std::size_t i = 0; i < n; ++i)
        if (computed[i] != expected[i]) {
            report.verdict(name, false,
                           "term " + std::to_string(i) + " is " + computed[i].get_str() + ", published " +
                               expected[i].get_str());
            return;
        }
    report.verdict(name, true, std::to_string(n) + " terms agree");
}

// Alternating series of the counts; lacunary for arity > 2.
IntSeries series_of(const std::vector<BigInt>& counts, int arity, LacunaryVariant variant, std::size_t order)
{
    if (arity == 2)
        return alternating_series(counts, std::min(order, counts.size()));
    return lacunary_series(counts, arity, variant, order);
}

// --- commands --------------------------------------------------------------

Report cmd_count(const Options& o, const std::vector<std::string>& args)
{
    Report report("count", args);
    const Source src = resolve(o);
    const auto start = Clock::now();
    const auto x_counts = coefficient_sequence(src.x, o.max);
    const auto z_counts = coefficient_sequence(complement(src.x), o.max);
    report.timing("count", ms_since(start));
    const int k = src.x.arity();
    const std::size_t order = k == 2 ? o.max + 1 : static_cast<std::size_t>(k - 1) * o.max + 1;
    const IntSeries fx = series_of(x_counts, k, LacunaryVariant::F, order);
    const IntSeries fz = series_of(z_counts, k, k == 2 ? LacunaryVariant::F : LacunaryVariant::G, order);

    auto& r = report.results();
    r["source"] = src.label;
    r["patterns"] = describe(src.x);
    r["x_counts"] = to_json(x_counts);
    r["z_counts"] = to_json(z_counts);
    r["x_series"] = fx.to_string();
    r["z_series"] = fz.to_string();
    report.say(src.label + ", arity " + std::to_string(k) + ", #I = " + std::to_string(src.x.alphabet_size()));
    report.say("X = " + pattern_list(src.x));
    report.say("#X_n, n = 0.." + std::to_string(o.max) + ": " + join_terms(x_counts));
    report.say("#Z_n, n = 0.." + std::to_string(o.max) + ": " + join_terms(z_counts));
    report.say(std::string(k == 2 ? "f(X,t)" : "f(X,t) lacunary") + " = " + fx.to_string() + " + O(t^" +
               std::to_string(order + 1) + ")");
    report.say(std::string(k == 2 ? "f(Z,t)" : "g(Z,t) lacunary") + " = " + fz.to_string() + " + O(t^" +
               std::to_string(order + 1) + ")");
    if (src.entry) {
        compare_prefix(report, "published X counts", x_counts, src.entry->expected_x);
        compare_prefix(report, "published Z counts", z_counts, src.entry->expected_z);
    }
    return report;
}

Report cmd_verify(const Options& o, const std::vector<std::string>& args)
{
    Report report("verify", args);
    const Source src = resolve(o);
    const std::size_t order = o.order ? *o.order : src.entry ? src.entry->default_order : 10;
    const auto start = Clock::now();
    const InversionReport inv = verify_inversion(src.x, order);
    report.timing("verify", ms_since(start));

    const bool binary = inv.arity == 2;
    auto& r = report.results();
    r["source"] = src.label;
    r["order"] = order;
    r["patterns"] = describe(src.x);
    r["x_counts"] = to_json(inv.x_counts);
    r["z_counts"] = to_json(inv.z_counts);
    r["outer"] = inv.outer.to_string();
    r["inner"] = inv.inner.to_string();
    r["composite"] = inv.composite.to_string();
    r["residual"] = inv.residual.to_string();
    report.say(src.label + ", arity " + std::to_string(inv.arity) + ", order " + std::to_string(order));
    report.say("X = " + pattern_list(src.x));
    report.say(std::string(binary ? "f(X,t)   = " : "g(Z,t)   = ") + inv.outer.to_string());
    report.say(std::string(binary ? "f(Z,t)   = " : "f(X,t)   = ") + inv.inner.to_string());
    report.say("composite = " + inv.composite.to_string());
    std::string detail = "composite = t mod t^" + std::to_string(order + 1);
    if (!inv.holds)
        detail = "residual " + inv.residual.to_string() + ", first bad exponent " +
                 std::to_string(*inv.first_bad_exponent);
    report.verdict(binary ? "f(X, f(Z,t)) = t" : "g(Z, f(X,t)) = t", inv.holds, detail);

    if (src.entry && src.entry->g) {
        const IntSeries expected = expand(*src.entry->g, order);
        const IntSeries& computed = binary ? inv.inner : inv.outer;
        r["closed_form"] = expected.to_string();
        report.say("closed form of the series of Z = " + expected.to_string());
        std::string d = "matches to order " + std::to_string(order);
        if (expected != computed)
            d = "differs at t^" + std::to_string(*(expected - computed).lowest_term());
        report.verdict("closed form of the series of Z", expected == computed, d);
    }
    if (src.entry) {
        compare_prefix(report, "published X counts", inv.x_counts, src.entry->expected_x);
        compare_prefix(report, "published Z counts", inv.z_counts, src.entry->expected_z);
    }
    if (o.random) {
        brute_cross_check(report, src.x, inv.x_counts, o.max_brute, "X");
        brute_cross_check(report, complement(src.x), inv.z_counts, o.max_brute, "Z");
    }
    return report;
}

Report cmd_koszul(const Options& o, const std::vector<std::string>& args)
{
    Report report("koszul", args);
    const Source src = resolve(o);
    if (src.x.arity() != 2)
        throw std::invalid_argument("the Koszul complex is only built for binary pattern sets");
    auto start = Clock::now();
    const auto complexes = build_complexes(src.x, o.max_weight);
    report.timing("build", ms_since(start));

    const std::size_t order = o.max_weight + 1;
    const auto xc = coefficient_sequence(src.x, o.max_weight);
    const auto zc = coefficient_sequence(complement(src.x), o.max_weight);
    const IntSeries composite =
        compose(alternating_series(zc, order), alternating_series(xc, order));

    auto& r = report.results();
    r["source"] = src.label;
    r["patterns"] = describe(src.x);
    r["weights"] = json::array();
    report.say(src.label + ", weights 0.." + std::to_string(o.max_weight));
    report.say("X = " + pattern_list(src.x));

    bool d2_all = true, acyclic = true, euler_all = true, blocks_all = true;
    std::string d2_bad, acyclic_bad, euler_bad, blocks_bad;
    start = Clock::now();
    for (const auto& c : complexes) {
        const std::size_t w = c.weight();
        const bool d2 = check_d_squared(c, 64, o.seed);
        const auto ranks = homology_ranks(c);
        const long long chi = euler_characteristic(c);
        const BigInt coeff = composite.coefficient(w + 1);
        const BigInt predicted = (w % 2 == 0) ? BigInt(static_cast<long>(-chi)) : BigInt(static_cast<long>(chi));
        std::vector<std::size_t> expected(w + 1, 0);
        if (w == 0)
            expected[0] = 1;

        json wj{{"weight", w}, {"dimensions", c.dimensions()}, {"d_squared_zero", d2},
                {"homology_ranks", ranks}, {"euler_characteristic", chi},
                {"composite_coefficient", coeff.get_str()}};
        std::string census;
        try {
            const auto dec = extremal_decomposition(c);
            std::map<std::size_t, std::size_t> sizes;
            for (const auto& b : dec.blocks)
                ++sizes[b.size];
            json sj = json::object();
            for (const auto& [size, count] : sizes) {
                sj[std::to_string(size)] = count;
                census += (census.empty() ? "" : " ") + std::to_string(count) + "x" + std::to_string(size);
            }
            wj["blocks"] = dec.blocks.size();
            wj["block_sizes"] = sj;
        } catch (const InvariantViolation& e) {
            blocks_all = false;
            blocks_bad += "w=" + std::to_string(w) + ": " + e.what() + "; ";
            wj["blocks_error"] = e.what();
            census = std::string("FAILED: ") + e.what();
        }
        r["weights"].push_back(wj);

        std::ostringstream line;
        line << "w=" << w << " dims=[";
        for (std::size_t i = 0; i < ranks.size(); ++i)
            line << (i ? "," : "") << c.dimension(i + 1);
        line << "] d2=" << (d2 ? "0" : "NONZERO") << " H=[";
        for (std::size_t i = 0; i < ranks.size(); ++i)
            line << (i ? "," : "") << ranks[i];
        line << "] chi=" << chi << " [t^" << (w + 1) << "]composite=" << coeff.get_str() << " blocks: " << census;
        report.say(line.str());

        if (!d2) {
            d2_all = false;
            d2_bad += " w=" + std::to_string(w);
        }
        if (ranks != expected) {
            acyclic = false;
            acyclic_bad += " w=" + std::to_string(w);
        }
        if (predicted != coeff) {
            euler_all = false;
            euler_bad += " w=" + std::to_string(w);
        }
        if (!o.dump.empty()) {
            std::filesystem::create_directories(o.dump);
            std::ofstream f(std::filesystem::path(o.dump) / ("boundary_w" + std::to_string(w) + ".txt"));
            write_triplets(c, f);
        }
    }
    report.timing("check", ms_since(start));
    report.verdict("d^2 = 0", d2_all, d2_all ? "" : "fails at" + d2_bad);
    report.verdict("homology is K in degree 1 at weight 0, zero elsewhere", acyclic,
                   acyclic ? "" : "fails at" + acyclic_bad);
    report.verdict("Euler characteristic = composite coefficient", euler_all,
                   euler_all ? "" : "fails at" + euler_bad);
    report.verdict("extremal blocks partition the basis", blocks_all, blocks_bad);
    return report;
}

Report cmd_identify(const Options& o, const std::vector<std::string>& args)
{
    Report report("identify", args);
    OeisOptions opts;
    opts.fixture_dir = o.fixtures;
    if (opts.fixture_dir.empty()) {
        if (const char* env = std::getenv("TREEINV_OEIS_FIXTURES"))
            opts.fixture_dir = env;
        else
            opts.fixture_dir = TREEINV_FIXTURE_DIR;
    }
    opts.record_dir = o.record;
    if (o.oeis_mode != "fixtures" && o.oeis_mode != "online")
        throw std::invalid_argument("--oeis-mode must be fixtures or online");
    const LookupMode mode = o.oeis_mode == "online" ? LookupMode::Online : LookupMode::Fixtures;
    OeisClient client(opts);

    std::vector<std::pair<std::string, std::vector<BigInt>>> queries;
    if (!o.sequence.empty()) {
        queries.emplace_back("sequence", parse_terms(o.sequence));
    } else {
        const Source src = resolve(o);
        report.results()["source"] = src.label;
        queries.emplace_back("X", coefficient_sequence(src.x, o.max));
        queries.emplace_back("Z", coefficient_sequence(complement(src.x), o.max));
    }
    report.results()["mode"] = o.oeis_mode;
    report.results()["queries"] = json::array();
    const auto start = Clock::now();
    for (const auto& [name, terms] : queries) {
        const auto matches = client.lookup(SequenceQuery{terms, 5}, mode);
        json mj = json::array();
        report.say(name + ": " + join_terms(terms));
        for (const auto& m : matches) {
            mj.push_back({{"accession", m.accession}, {"name", m.name},
                          {"matched_prefix_length", m.matched_prefix_length}});
            report.say("  " + m.accession + " (" + std::to_string(m.matched_prefix_length) + " terms) " + m.name);
        }
        if (matches.empty())
            report.say("  no match");
        report.results()["queries"].push_back({{"name", name}, {"terms", to_json(terms)}, {"matches", mj}});
    }
    report.timing("lookup", ms_since(start));
    return report;
}

Report cmd_search(const Options& o, const std::vector<std::string>& args)
{
    Report report("search", args);
    if (o.sequence.empty())
        throw std::invalid_argument("search needs --sequence");
    const auto a = parse_terms(o.sequence);
    const auto start = Clock::now();
    const SearchResult res = search_interpretations(a, o.max_alphabet);
    report.timing("search", ms_since(start));
    auto& r = report.results();
    r["sequence"] = to_json(a);
    r["target_z"] = to_json(res.target_z);
    r["max_alphabet"] = o.max_alphabet;
    r["alphabet_size"] = res.alphabet_size;
    r["examined"] = res.examined;
    r["hits"] = json::array();
    report.say("inverse series asks for #Z_n = " + join_terms(res.target_z));
    for (const auto& h : res.hits) {
        r["hits"].push_back({{"patterns", describe(h.x)}, {"x_counts", to_json(h.x_counts)},
                             {"z_counts", to_json(h.z_counts)}, {"config", json::parse(to_config_json(h.x, 'X'))}});
        report.say("hit: X = " + pattern_list(h.x) + "  (Z = " + pattern_list(complement(h.x)) + ")");
    }
    report.say(std::to_string(res.hits.size()) + " hit(s) among " + std::to_string(res.examined) +
               " candidates, up to relabelling");
    return report;
}

Report cmd_enumerate(const Options& o, const std::vector<std::string>& args)
{
    Report report("enumerate", args);
    const Source src = resolve(o);
    if (o.which != "x" && o.which != "z")
        throw std::invalid_argument("--which must be x or z");
    const PatternSet set = o.which == "x" ? src.x : complement(src.x);
    const auto start = Clock::now();
    const AvoidanceClass cls = generate(set, o.max, o.max_brute);
    report.timing("generate", ms_since(start));
    json trees = json::array();
    report.say(src.label + ": " + (o.which == "x" ? "X_" : "Z_") + std::to_string(o.max) + " has " +
               cls.count.get_str() + " tree(s)");
    for (const auto& t : cls.trees) {
        trees.push_back(t.encode(set.alphabet()));
        report.say("  " + t.encode(set.alphabet()));
    }
    auto& r = report.results();
    r["source"] = src.label;
    r["degree"] = o.max;
    r["count"] = cls.count.get_str();
    r["trees"] = trees;
    const BigInt dp = count_dp(set, o.max);
    report.verdict("listed trees = dp count", dp == cls.count, "dp gives " + dp.get_str());
    return report;
}

Report cmd_examples(const std::vector<std::string>& args)
{
    Report report("examples", args);
    json list = json::array();
    for (const auto& e : example_registry()) {
        json ej{{"key", e.key}, {"summary", e.summary}, {"patterns", describe(e.x)},
                {"expected_x", to_json(e.expected_x)}, {"expected_z", to_json(e.expected_z)},
                {"default_order", e.default_order}};
        list.push_back(ej);
        report.say(e.key + "  k=" + std::to_string(e.arity) + " #I=" + std::to_string(e.x.alphabet_size()) +
                   " #X=" + std::to_string(e.x.size()) + " #Z=" + std::to_string(e.z().size()) + "  " + e.summary);
    }
    report.results()["examples"] = list;
    return report;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pattern-avoiding planar trees, series inversion and Koszul complexes", "treeinv"};
    app.require_subcommand(1);
    Options o;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--example", o.example, "registry key (see `examples`)");
        sub->add_option("--config", o.config, "JSON pattern configuration file");
        sub->add_flag("--random", o.random, "draw X at random");
        sub->add_option("--alphabet", o.alphabet, "alphabet size for --random")->capture_default_str();
        sub->add_option("--arity", o.arity, "arity for --random")->capture_default_str();
        sub->add_option("--seed", o.seed, "seed for --random and sampling")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "human or structured")
            ->check(CLI::IsMember({"human", "structured"}))
            ->capture_default_str();
    };

    auto* count = app.add_subcommand("count", "counts of X_n and Z_n");
    add_source(count);
    add_format(count);
    count->add_option("--max", o.max, "largest degree")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "check that the two series are inverse");
    add_source(verify);
    add_format(verify);
    verify->add_option("--order", o.order, "truncation order");
    verify->add_option("--max-brute", o.max_brute, "largest degree to brute-force count")->capture_default_str();

    auto* koszul = app.add_subcommand("koszul", "Koszul complex checks per weight");
    add_source(koszul);
    add_format(koszul);
    koszul->add_option("--max-weight", o.max_weight, "largest weight")->capture_default_str();
    koszul->add_option("--dump", o.dump, "directory for boundary matrix triplets");

    auto* identify = app.add_subcommand("identify", "look sequences up in the OEIS");
    add_source(identify);
    add_format(identify);
    identify->add_option("--sequence", o.sequence, "comma-separated terms");
    identify->add_option("--max", o.max, "largest degree counted for an example")->capture_default_str();
    identify->add_option("--oeis-mode", o.oeis_mode, "fixtures or online")
        ->check(CLI::IsMember({"fixtures", "online"}))
        ->capture_default_str();
    identify->add_option("--fixtures", o.fixtures, "fixture directory");
    identify->add_option("--record", o.record, "save online responses as fixtures here");

    auto* search = app.add_subcommand("search", "find pattern sets whose complement counts invert a sequence");
    add_format(search);
    search->add_option("--sequence", o.sequence, "comma-separated a_0,a_1,...")->required();
    search->add_option("--max-alphabet", o.max_alphabet, "largest alphabet tried")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "list the trees of X_n or Z_n");
    add_source(enumerate);
    add_format(enumerate);
    enumerate->add_option("--max", o.max, "degree")->capture_default_str();
    enumerate->add_option("--which", o.which, "x or z")->capture_default_str();
    enumerate->add_option("--max-brute", o.max_brute, "largest degree enumerated")->capture_default_str();

    auto* examples = app.add_subcommand("examples", "list the example registry");
    add_format(examples);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::optional<Report> report;
        if (*count)
            report = cmd_count(o, args);
        else if (*verify)
            report = cmd_verify(o, args);
        else if (*koszul)
            report = cmd_koszul(o, args);
        else if (*identify)
            report = cmd_identify(o, args);
        else if (*search)
            report = cmd_search(o, args);
        else if (*enumerate)
            report = cmd_enumerate(o, args);
        else
            report = cmd_examples(args);
        report->write(out, o.format == "structured");
        return report->passed() ? 0 : 1;
    } catch (const NetworkError& e) {
        err << "network error (retriable): " << e.what() << '\n';
        return 3;
    } catch (const SizeLimitError& e) {
        err << "size bound " << e.bound() << " exceeded: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace treeinv::cli
