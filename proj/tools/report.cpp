#include "report.hpp"

#include <cstdio>
#include <gmpxx.h>

namespace balkit::cli {

Report::Report(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)), argv_(std::move(argv)), start_(std::chrono::steady_clock::now()) {}

void Report::add(Json item, bool ok) {
    items_.push_back(std::move(item));
    ++checked_;
    if (ok) ++passed_;
    else ++failed_;
}

void Report::finish() {
    wall_time_us_ = static_cast<long>(
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count());
}

Json Report::to_json() const {
    Json out;
    out["schema"] = report_schema;
    out["command"] = command_;
    out["argv"] = argv_;
    out["parameters"] = parameters_;
    out["items"] = items_;
    out["summary"] = {{"checked", checked_}, {"passed", passed_}, {"failed", failed_}};
    out["wall_time_us"] = wall_time_us_;
    return out;
}

Json verdict_json(const std::vector<long>& params, const Verdict& v) {
    Json item;
    item["params"] = params;
    item["holds"] = v.holds;
    if (v.witness) {
        item["witness"] = {{"params", v.witness->params},
                           {"relation", v.witness->relation},
                           {"lhs", big(v.witness->lhs)},
                           {"rhs", big(v.witness->rhs)}};
    }
    return item;
}

std::string approx(const Rat& x, int digits) {
    mpf_class f(x, 256);
    char* buf = nullptr;
    gmp_asprintf(&buf, "%.*Fg", digits, f.get_mpf_t());
    std::string s(buf);
    void (*free_fn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(buf, s.size() + 1);
    return s;
}

}  // namespace balkit::cli
