#include "sweeps.hpp"

#include "balkit/convolutions.hpp"
#include "balkit/errors.hpp"
#include "balkit/genfunc.hpp"
#include "balkit/quad_field.hpp"
#include "balkit/sequences.hpp"
#include "balkit/tail_floors.hpp"
#include "parallel.hpp"

#include <memory>

namespace balkit::cli {

namespace {

using Grid = std::vector<std::vector<long>>;

Grid range1(long from, long to) {
    Grid g;
    for (long n = from; n <= to; ++n) g.push_back({n});
    return g;
}

Grid square(long from, long to) {
    Grid g;
    for (long m = from; m <= to; ++m)
        for (long n = from; n <= to; ++n) g.push_back({m, n});
    return g;
}

// m <= n
Grid triangle(long from, long to) {
    Grid g;
    for (long n = from; n <= to; ++n)
        for (long m = from; m <= n; ++m) g.push_back({m, n});
    return g;
}

Grid primes(long max) {
    Grid g;
    for (long p : odd_primes_up_to(max)) g.push_back({p});
    return g;
}

Verdict check_kronecker(long p) {
    const KroneckerSign s = kronecker_p8(p);
    const BigInt mp = p;
    return VerdictBuilder({p})
        .expect_equal("(p/8) = B_p (mod p)", mod_floor(BigInt(s.value()), mp), mod_floor(B(p), mp))
        .finish();
}

std::vector<IdentityEntry> build_catalog() {
    std::vector<IdentityEntry> c;
    // (n, r) with 0 <= r <= n <= max
    c.push_back({"catalan", 100, false,
                 [](long max) {
                     Grid g;
                     for (long n = 0; n <= max; ++n)
                         for (long r = 0; r <= n; ++r) g.push_back({n, r});
                     return g;
                 },
                 [](const std::vector<long>& p) { return check_catalan(p[0], p[1]); }});
    c.push_back({"odd-sum", 60, false, [](long max) { return range1(1, max); },
                 [](const std::vector<long>& p) { return check_odd_sum(p[0]); }});
    c.push_back({"shifted-product", 40, false, [](long max) { return square(0, max); },
                 [](const std::vector<long>& p) { return check_shifted_product(p[0], p[1]); }});
    c.push_back({"addition", 60, false, [](long max) { return triangle(0, max); },
                 [](const std::vector<long>& p) { return check_addition(p[0], p[1]); }});
    c.push_back({"combination", 40, false, [](long max) { return square(1, max); },
                 [](const std::vector<long>& p) { return check_combination(p[0], p[1]); }});
    c.push_back({"gcd", 150, false, [](long max) { return square(1, max); },
                 [](const std::vector<long>& p) { return check_gcd(p[0], p[1]); }});
    c.push_back({"prime-congruence", 10000, true, primes,
                 [](const std::vector<long>& p) { return check_prime_congruences(p[0]); }});
    c.push_back({"kronecker", 10000, true, primes, [](const std::vector<long>& p) { return check_kronecker(p[0]); }});
    c.push_back({"mod-cm", 60, false, [](long max) { return range1(1, max); },
                 [](const std::vector<long>& p) { return check_mod_Cm(p[0]); }});
    c.push_back({"binomial-3k", 60, false, [](long max) { return range1(0, max); },
                 [](const std::vector<long>& p) { return check_binomial_3k(p[0]); }});
    c.push_back({"binomial-plain", 60, false, [](long max) { return range1(0, max); },
                 [](const std::vector<long>& p) { return check_binomial_plain(p[0]); }});
    c.push_back({"second-order-product", 200, false, [](long max) { return range1(4, max); },
                 [](const std::vector<long>& p) { return check_second_order_product(p[0]); }});
    c.push_back({"pell", 2000, false, [](long max) { return range1(0, max); },
                 [](const std::vector<long>& p) { return check_pell(p[0]); }});
    c.push_back({"balancing-product", 12, false, [](long max) { return triangle(2, max); },
                 [](const std::vector<long>& p) { return check_balancing_product(p[0], p[1]); }});
    return c;
}

std::string describe(const Verdict& v) {
    if (v.holds || !v.witness) return "holds";
    std::string params;
    for (long x : v.witness->params) params += (params.empty() ? "" : ",") + std::to_string(x);
    return v.witness->relation + " fails at (" + params + "): " + v.witness->lhs.get_str() +
           " != " + v.witness->rhs.get_str();
}

// Wraps a check so that library exceptions become diagnostics.
Check guarded(std::function<std::optional<std::string>()> f) {
    return [f = std::move(f)]() -> std::optional<std::string> {
        try {
            return f();
        } catch (const std::exception& e) {
            return std::string("exception: ") + e.what();
        }
    };
}

CheckGroup convolution_group() {
    CheckGroup g{"convolutions", {}};
    for (auto f : {ConvFamily::balancing, ConvFamily::lucas_balancing, ConvFamily::fibonacci, ConvFamily::lucas})
        for (long k = 1; k <= 5; ++k)
            for (long r = 0; r < k; ++r)
                for (long n = 0; n <= 40; ++n)
                    g.checks.push_back(guarded([f, k, r, n]() -> std::optional<std::string> {
                        const ConvParams p{k, r, n};
                        const GaussQuad v = closed_form_value(f, p);
                        const std::string where = to_string(f) + " k=" + std::to_string(k) +
                                                  " r=" + std::to_string(r) + " n=" + std::to_string(n);
                        if (!v.is_real() || !v.re().is_rational() || !is_integer(v.re().a()))
                            return where + ": closed form is " + v.to_string();
                        const BigInt brute = brute_conv(f, p);
                        if (v.re().a() != brute)
                            return where + ": closed " + to_string(v.re().a()) + " != brute " + brute.get_str();
                        return std::nullopt;
                    }));
    return g;
}

std::vector<TailSpec> tail_specs() {
    std::vector<TailSpec> specs;
    for (Shape s : all_shapes()) {
        if (s == Shape::plain) {
            for (long l = 1; l <= 3; ++l)
                for (auto fam : {TailFamily::balancing, TailFamily::lucas_balancing})
                    specs.push_back(TailSpec::plain(fam, l));
        } else if (is_gen_fib_shape(s)) {
            for (long a = 1; a <= 3; ++a) specs.push_back(TailSpec::gen_fib(s, a));
        } else {
            for (auto fam : {TailFamily::balancing, TailFamily::lucas_balancing})
                specs.push_back(TailSpec::alternating(fam, s));
        }
    }
    return specs;
}

CheckGroup tail_group() {
    CheckGroup g{"tail-floors", {}};
    for (const TailSpec& spec : tail_specs())
        for (long n = spec.threshold(); n <= 25; ++n)
            g.checks.push_back(guarded([spec, n]() -> std::optional<std::string> {
                const CertifiedFloor cert = certify_floor(spec, n, 16);
                const FloorResult closed = closed_floor(spec, n);
                if (cert.floor == closed) return std::nullopt;
                return spec.name() + " n=" + std::to_string(n) + ": closed " + closed.value.get_str() +
                       " != certified " + cert.floor.value.get_str();
            }));
    return g;
}

CheckGroup identity_group() {
    CheckGroup g{"identities", {}};
    for (const auto& entry : identity_catalog())
        for (auto& params : entry.grid(entry.default_max))
            g.checks.push_back(guarded([&entry, params]() -> std::optional<std::string> {
                const Verdict v = entry.check(params);
                if (v.holds) return std::nullopt;
                return entry.name + ": " + describe(v);
            }));
    return g;
}

CheckGroup genfunc_group() {
    CheckGroup g{"generating-functions", {}};
    for (auto f : {ConvFamily::balancing, ConvFamily::lucas_balancing, ConvFamily::fibonacci, ConvFamily::lucas})
        for (long k = 1; k <= 6; ++k)
            for (long r = 0; r < k; ++r)
                g.checks.push_back(guarded([f, k, r]() -> std::optional<std::string> {
                    const SequenceId seq = sequence_of(f);
                    const auto series = expand(gf(seq, k, r), 50);
                    const std::string where =
                        to_string(f) + " k=" + std::to_string(k) + " r=" + std::to_string(r);
                    for (long n = 0; n < 50; ++n)
                        if (series.coeffs[n] != term(seq, k * n + r))
                            return where + ": coefficient " + std::to_string(n) + " differs";
                    const auto sq = series_mul(series, series, 31);
                    for (long n = 0; n <= 30; ++n)
                        if (sq.coeffs[n] != brute_conv(f, {k, r, n}))
                            return where + ": squared coefficient " + std::to_string(n) + " differs";
                    return std::nullopt;
                }));
    return g;
}

CheckGroup kernel_group() {
    CheckGroup g{"kernel", {}};
    constexpr long fast_max = 5000;
    auto bs = std::make_shared<std::vector<IndexedTerm>>(stream(SequenceId::balancing(), 0, fast_max));
    auto cs = std::make_shared<std::vector<IndexedTerm>>(stream(SequenceId::lucas_balancing(), 0, fast_max));
    for (long n = 0; n <= fast_max; ++n)
        g.checks.push_back(guarded([bs, cs, n]() -> std::optional<std::string> {
            const auto [b, c] = pair_fast(n);
            if (b != (*bs)[n].v || c != (*cs)[n].v) return "pair_fast differs at n=" + std::to_string(n);
            if (n <= 2000 && c * c - 8 * b * b != 1) return "Pell invariant fails at n=" + std::to_string(n);
            return std::nullopt;
        }));
    for (long n = -50; n <= 200; ++n)
        g.checks.push_back(guarded([n]() -> std::optional<std::string> {
            const auto [b, c] = binet(n);
            if (b != B(n) || c != C(n)) return "binet differs at n=" + std::to_string(n);
            return std::nullopt;
        }));
    return g;
}

}  // namespace

const std::vector<IdentityEntry>& identity_catalog() {
    static const std::vector<IdentityEntry> catalog = build_catalog();
    return catalog;
}

const IdentityEntry* find_identity(const std::string& name) {
    for (const auto& e : identity_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<long> odd_primes_up_to(long max) {
    std::vector<long> out;
    if (max < 3) return out;
    std::vector<bool> composite(static_cast<std::size_t>(max) + 1, false);
    for (long p = 2; p <= max; ++p) {
        if (composite[p]) continue;
        if (p > 2) out.push_back(p);
        for (long q = p * p; q <= max; q += p) composite[q] = true;
    }
    return out;
}

std::vector<CheckGroup> verify_all_groups() {
    std::vector<CheckGroup> groups;
    groups.push_back(kernel_group());
    groups.push_back(identity_group());
    groups.push_back(genfunc_group());
    groups.push_back(convolution_group());
    groups.push_back(tail_group());
    return groups;
}

std::vector<GroupOutcome> run_groups(const std::vector<CheckGroup>& groups, unsigned jobs,
                                     std::chrono::steady_clock::time_point deadline) {
    struct Slot {
        std::size_t group;
        std::size_t index;
    };
    std::vector<Slot> slots;
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::size_t i = 0; i < groups[g].checks.size(); ++i) slots.push_back({g, i});

    enum class State : char { skipped, passed, failed };
    std::vector<State> state(slots.size(), State::skipped);
    std::vector<std::optional<std::string>> message(slots.size());

    parallel_for(slots.size(), jobs, [&](std::size_t s) {
        if (std::chrono::steady_clock::now() > deadline) return;
        auto result = groups[slots[s].group].checks[slots[s].index]();
        state[s] = result ? State::failed : State::passed;
        message[s] = std::move(result);
    });

    std::vector<GroupOutcome> out(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) out[g].name = groups[g].name;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        GroupOutcome& o = out[slots[s].group];
        switch (state[s]) {
        case State::skipped: ++o.skipped; break;
        case State::passed:
            ++o.checked;
            ++o.passed;
            break;
        case State::failed:
            ++o.checked;
            ++o.failed;
            if (!o.first_failure) o.first_failure = message[s];
            break;
        }
    }
    return out;
}

}  // namespace balkit::cli
