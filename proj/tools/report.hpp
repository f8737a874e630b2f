#pragma once

#include "balkit/bigint.hpp"
#include "balkit/identities.hpp"

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace balkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema = 1;

// One command invocation. Items are free-form JSON objects; the summary is
// kept in step with them by add().
class Report {
public:
    Report(std::string command, std::vector<std::string> argv);

    Json& parameters() { return parameters_; }
    const Json& items() const { return items_; }

    void add(Json item, bool ok);

    long checked() const { return checked_; }
    long passed() const { return passed_; }
    long failed() const { return failed_; }

    // Freezes the wall time.
    void finish();

    Json to_json() const;

private:
    std::string command_;
    std::vector<std::string> argv_;
    Json parameters_ = Json::object();
    Json items_ = Json::array();
    long checked_ = 0;
    long passed_ = 0;
    long failed_ = 0;
    std::chrono::steady_clock::time_point start_;
    long wall_time_us_ = 0;
};

// Big integers are always emitted as decimal strings.
inline Json big(const BigInt& x) { return x.get_str(); }
inline Json big(const Rat& x) { return to_string(x); }

Json verdict_json(const std::vector<long>& params, const Verdict& v);

// Compact decimal approximation for text output; exact values go to JSON.
std::string approx(const Rat& x, int digits = 12);

}  // namespace balkit::cli
