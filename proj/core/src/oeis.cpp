#include "treeinv/oeis.hpp"

#include <httplib.h>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace treeinv {

namespace {

using nlohmann::json;

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::string out;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        out += buf;
    }
    return out;
}

// Longest prefix of the query appearing as consecutive terms of the entry.
std::size_t matched_prefix(const std::vector<BigInt>& query, const std::vector<BigInt>& data)
{
    std::size_t best = 0;
    for (std::size_t start = 0; start < data.size(); ++start) {
        std::size_t len = 0;
        while (len < query.size() && start + len < data.size() && data[start + len] == query[len])
            ++len;
        best = std::max(best, len);
    }
    return best;
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

bool is_accession(const std::string& s)
{
    return s.size() == 7 && std::isupper(static_cast<unsigned char>(s[0])) &&
           std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct OeisClient::Throttle {
    std::mutex lock;
    std::chrono::steady_clock::time_point last{};
    bool used = false;
};

OeisClient::OeisClient(OeisOptions options) : options_(std::move(options)), throttle_(std::make_unique<Throttle>()) {}

OeisClient::~OeisClient() = default;

std::string OeisClient::fixture_name(const std::vector<BigInt>& terms)
{
    return sha256_hex(join_terms(terms)) + ".json";
}

std::vector<SequenceMatch> OeisClient::parse_response(const std::string& payload, const SequenceQuery& q)
{
    json doc;
    try {
        doc = json::parse(payload);
    } catch (const json::parse_error& e) {
        throw ResponseParseError(std::string("response is not JSON: ") + e.what(), payload);
    }
    const json* results = &doc;
    if (doc.is_object()) {
        auto it = doc.find("results");
        if (it == doc.end())
            throw ResponseParseError("response object has no \"results\" field", payload);
        results = &*it;
    }
    std::vector<SequenceMatch> out;
    if (results->is_null())
        return out;
    if (!results->is_array())
        throw ResponseParseError("\"results\" is not an array", payload);
    for (const auto& entry : *results) {
        if (!entry.is_object() || !entry.contains("number") || !entry["number"].is_number_integer())
            throw ResponseParseError("result entry without an integer \"number\"", payload);
        SequenceMatch m;
        char acc[16];
        std::snprintf(acc, sizeof acc, "A%06lld", entry["number"].get<long long>());
        m.accession = acc;
        if (!is_accession(m.accession))
            throw ResponseParseError("bad sequence number " + entry["number"].dump(), payload);
        m.name = entry.value("name", std::string{});
        std::vector<BigInt> data;
        if (entry.contains("data") && entry["data"].is_string()) {
            try {
                data = parse_terms(entry["data"].get<std::string>());
            } catch (const std::exception& e) {
                throw ResponseParseError("unreadable data field of " + m.accession + ": " + e.what(), payload);
            }
        }
        m.matched_prefix_length = matched_prefix(q.terms, data);
        out.push_back(std::move(m));
    }
    std::stable_sort(out.begin(), out.end(), [](const SequenceMatch& a, const SequenceMatch& b) {
        return a.matched_prefix_length > b.matched_prefix_length;
    });
    if (out.size() > q.max_results)
        out.resize(q.max_results);
    return out;
}

std::string OeisClient::fetch(const std::string& terms) const
{
    std::lock_guard guard(throttle_->lock);
    if (throttle_->used) {
        auto ready = throttle_->last + options_.min_interval;
        std::this_thread::sleep_until(ready);
    }
    httplib::SSLClient client(options_.host);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_follow_location(true);
    httplib::Params params{{"q", terms}, {"fmt", "json"}};
    auto res = client.Get("/search", params, httplib::Headers{});
    throttle_->last = std::chrono::steady_clock::now();
    throttle_->used = true;
    if (!res)
        throw NetworkError("request to " + options_.host + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw NetworkError("request to " + options_.host + " returned HTTP " + std::to_string(res->status));
    return res->body;
}

std::vector<SequenceMatch> OeisClient::lookup(const SequenceQuery& q, LookupMode mode) const
{
    if (q.terms.empty())
        throw std::invalid_argument("a sequence query needs at least one term");
    if (mode == LookupMode::Fixtures) {
        if (options_.fixture_dir.empty())
            return {};
        const auto path = options_.fixture_dir / fixture_name(q.terms);
        std::error_code ec;
        if (!std::filesystem::is_regular_file(path, ec))
            return {};
        return parse_response(read_file(path), q);
    }
    std::string payload = fetch(join_terms(q.terms));
    auto matches = parse_response(payload, q);
    if (!options_.record_dir.empty()) {
        std::filesystem::create_directories(options_.record_dir);
        std::ofstream(options_.record_dir / fixture_name(q.terms), std::ios::binary) << payload;
    }
    return matches;
}

} // namespace treeinv
