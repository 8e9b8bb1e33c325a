#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "treeinv/bigint.hpp"

namespace treeinv {

struct SequenceQuery {
    std::vector<BigInt> terms; ///< nonempty
    std::size_t max_results = 5;
};

struct SequenceMatch {
    std::string accession; ///< e.g. "A000108"
    std::string name;
    std::size_t matched_prefix_length = 0; ///< leading query terms found consecutively in the entry's data
};

enum class LookupMode { Online, Fixtures };

/// Transport failure; distinct from an empty result, and worth retrying.
class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    bool retriable() const noexcept { return true; }
};

/// The response body could not be understood. Keeps the payload.
class ResponseParseError : public std::runtime_error {
public:
    ResponseParseError(const std::string& what, std::string payload)
        : std::runtime_error(what), payload_(std::move(payload))
    {
    }
    const std::string& raw_payload() const noexcept { return payload_; }

private:
    std::string payload_;
};

/// True for a capital letter followed by six digits.
bool is_accession(const std::string& s);

struct OeisOptions {
    std::filesystem::path fixture_dir;  ///< store read in fixtures mode
    std::filesystem::path record_dir;   ///< if set, online responses are saved here
    std::string host = "oeis.org";
    std::chrono::milliseconds min_interval{1000};
    std::chrono::seconds timeout{20};
};

class OeisClient {
public:
    explicit OeisClient(OeisOptions options = {});
    ~OeisClient();
    OeisClient(const OeisClient&) = delete;
    OeisClient& operator=(const OeisClient&) = delete;

    /// Matches ordered by matched prefix length, then by the server's order.
    /// Fixtures mode never opens a connection; an unknown query gives no matches.
    std::vector<SequenceMatch> lookup(const SequenceQuery& q, LookupMode mode) const;

    const OeisOptions& options() const noexcept { return options_; }

    /// File name (without directory) of the fixture answering these terms.
    static std::string fixture_name(const std::vector<BigInt>& terms);

    /// Parses a search response: either a JSON array of entries, null, or an
    /// object with a "results" array. Throws ResponseParseError.
    static std::vector<SequenceMatch> parse_response(const std::string& payload, const SequenceQuery& q);

private:
    std::string fetch(const std::string& terms) const;

    OeisOptions options_;
    struct Throttle;
    std::unique_ptr<Throttle> throttle_;
};

} // namespace treeinv
