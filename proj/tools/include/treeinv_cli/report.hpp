#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace treeinv::cli {

/// Output of one command: human lines, structured fields, verdicts and timings.
class Report {
public:
    explicit Report(std::string command, std::vector<std::string> arguments = {});

    nlohmann::json& results() { return doc_["results"]; }
    const nlohmann::json& document() const { return doc_; }

    void say(std::string line) { lines_.push_back(std::move(line)); }
    void verdict(const std::string& name, bool pass, const std::string& detail = {});
    void timing(const std::string& name, double milliseconds);

    bool passed() const noexcept { return passed_; }

    /// Human text, or the JSON document when `structured`.
    void write(std::ostream& out, bool structured) const;

private:
    nlohmann::json doc_;
    std::vector<std::string> lines_;
    bool passed_ = true;
};

} // namespace treeinv::cli
