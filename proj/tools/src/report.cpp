#include "treeinv_cli/report.hpp"

#include <ostream>

namespace treeinv::cli {

Report::Report(std::string command, std::vector<std::string> arguments)
{
    doc_["command"] = std::move(command);
    doc_["arguments"] = std::move(arguments);
    doc_["results"] = nlohmann::json::object();
    doc_["verdicts"] = nlohmann::json::array();
    doc_["timings_ms"] = nlohmann::json::object();
}

void Report::verdict(const std::string& name, bool pass, const std::string& detail)
{
    doc_["verdicts"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    passed_ = passed_ && pass;
}

void Report::timing(const std::string& name, double milliseconds) { doc_["timings_ms"][name] = milliseconds; }

void Report::write(std::ostream& out, bool structured) const
{
    if (structured) {
        nlohmann::json doc = doc_;
        doc["status"] = passed_ ? "PASS" : "FAIL";
        out << doc.dump(2) << '\n';
        return;
    }
    for (const auto& l : lines_)
        out << l << '\n';
    for (const auto& v : doc_["verdicts"]) {
        out << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["name"].get<std::string>();
        const auto& detail = v["detail"].get_ref<const std::string&>();
        if (!detail.empty())
            out << ": " << detail;
        out << '\n';
    }
    if (!doc_["verdicts"].empty())
        out << (passed_ ? "overall PASS" : "overall FAIL") << '\n';
}

} // namespace treeinv::cli
