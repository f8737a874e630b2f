#pragma once

#include "balkit/identities.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace balkit::cli {

// A named identity with its default sweep.
struct IdentityEntry {
    std::string name;
    // Upper bound used when --max / --max-prime is not given.
    long default_max;
    // Bound is on primes (--max-prime) rather than on indices (--max).
    bool prime_bound;
    // Parameter tuples covered by a sweep up to `max`.
    std::function<std::vector<std::vector<long>>(long max)> grid;
    std::function<Verdict(const std::vector<long>&)> check;
};

const std::vector<IdentityEntry>& identity_catalog();
const IdentityEntry* find_identity(const std::string& name);

std::vector<long> odd_primes_up_to(long max);

// One check inside a verify-all group: nullopt on success, a diagnostic
// otherwise.
using Check = std::function<std::optional<std::string>()>;

struct CheckGroup {
    std::string name;
    std::vector<Check> checks;
};

struct GroupOutcome {
    std::string name;
    long checked = 0;
    long passed = 0;
    long failed = 0;
    // Not run because the time budget ran out.
    long skipped = 0;
    std::optional<std::string> first_failure;

    bool ok() const { return failed == 0 && skipped == 0; }
};

// Everything verify-all checks, grouped.
std::vector<CheckGroup> verify_all_groups();

std::vector<GroupOutcome> run_groups(const std::vector<CheckGroup>& groups, unsigned jobs,
                                     std::chrono::steady_clock::time_point deadline);

}  // namespace balkit::cli
