#pragma once

// Floors of reciprocals of infinite reciprocal-sum tails,
//
//     floor( (sum_{k >= n} s_k)^{-1} ),
//
// computed two ways: from closed forms in the sequence terms, and by
// certifying an exact rational bracket [lo, hi] of the tail. "Floor" is
// toward negative infinity, which matters for the negative tails of the
// alternating shapes at odd n.
//
// Summands (S is B or C, G is the generalized Fibonacci sequence G(a)):
//   plain(l)         1/S_{lk}
//   alt              (-1)^k / S_k
//   alt_sq           (-1)^k / S_k^2
//   alt_even_idx     (-1)^k / S_{2k}
//   alt_odd_idx      (-1)^k / S_{2k+1}
//   alt_consec_prod  (-1)^k / (S_k S_{k+1})
//   alt_even_sq      (-1)^k / S_{2k}^2
//   alt_odd_sq       (-1)^k / S_{2k-1}^2
//   alt_oddprod      (-1)^k / (S_{2k-1} S_{2k+1})
//   alt_evenprod     (-1)^k / (S_{2k} S_{2k+2})
//   gf_plain         1/G_k
//   gf_sq            1/G_k^2
//   gf_even_idx      1/G_{2k}
//   gf_odd_idx       1/G_{2k-1}

#include "balkit/bigint.hpp"

#include <string>
#include <vector>

namespace balkit {

enum class TailFamily { balancing, lucas_balancing, gen_fibonacci };

enum class Shape {
    plain,
    alt,
    alt_sq,
    alt_even_idx,
    alt_odd_idx,
    alt_consec_prod,
    alt_even_sq,
    alt_odd_sq,
    alt_oddprod,
    alt_evenprod,
    gf_plain,
    gf_sq,
    gf_even_idx,
    gf_odd_idx,
};

// Every shape, in declaration order.
const std::vector<Shape>& all_shapes();
bool is_alternating(Shape s);
bool is_gen_fib_shape(Shape s);
// CLI spelling: "alt-consec-prod", "gf-sq", ...
std::string shape_name(Shape s);

class TailSpec {
public:
    // 1/S_{lk}; l >= 1.
    static TailSpec plain(TailFamily family, long l);
    // One of the alt_* shapes over B or C.
    static TailSpec alternating(TailFamily family, Shape shape);
    // One of the gf_* shapes over G(a); a >= 1.
    static TailSpec gen_fib(Shape shape, long a);

    // Parses "alt-B", "alt-sq-C", "plain-B", "gf-plain", ... l and a are used
    // by plain-* and gf-* respectively. Throws ParameterError.
    static TailSpec parse(const std::string& name, long l, long a);

    TailFamily family() const { return family_; }
    Shape shape() const { return shape_; }
    // l for plain, a for gf_*, 0 otherwise.
    long param() const { return param_; }

    // Smallest n the closed form is stated for.
    long threshold() const;

    std::string name() const;

    friend bool operator==(const TailSpec&, const TailSpec&) = default;

private:
    TailSpec(TailFamily f, Shape s, long p) : family_(f), shape_(s), param_(p) {}
    TailFamily family_;
    Shape shape_;
    long param_;
};

// s_k = 1 / prod_i S_{step_i k + offset_i}
struct IndexMap {
    long step;
    long offset;
};

std::vector<IndexMap> summand_factors(const TailSpec& spec);

// The signed summand s_k, exactly.
Rat summand(const TailSpec& spec, long k);

struct RigorousInterval {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool excludes_zero() const { return lo > 0 || hi < 0; }
};

struct FloorResult {
    BigInt value;
    friend bool operator==(const FloorResult&, const FloorResult&) = default;
};

// Closed-form floor. Throws RangeError for n below spec.threshold().
FloorResult closed_floor(const TailSpec& spec, long n);

// The closed form exactly as originally stated. Differs from closed_floor
// only for the C consecutive-product, odd-product and even-product shapes,
// where the stated forms are off by a constant (see README).
FloorResult printed_floor(const TailSpec& spec, long n);

enum class BracketMethod {
    // Remainder bracketed in closed form from exact ratio envelopes of the
    // summands. Default.
    ratio_tail,
    // lo/hi from consecutive partial sums (alternating) or partial sum plus a
    // geometric tail bound from a fixed growth lemma (positive).
    partial_sums,
};

// Exact interval containing sum_{k >= n} s_k, built from `terms` explicit
// summands (k = n .. n+terms-1) plus a rigorous bound on the remainder.
RigorousInterval bracket_tail(const TailSpec& spec, long n, long terms,
                              BracketMethod method = BracketMethod::ratio_tail);

struct CertifiedFloor {
    FloorResult floor;
    RigorousInterval interval;
    long terms;
};

inline constexpr long default_term_budget = 64;

// Doubles the term count from 1 until floor(1/hi) == floor(1/lo). Throws
// UndecidedInterval when the budget is exhausted.
CertifiedFloor certify_floor(const TailSpec& spec, long n, long budget = default_term_budget,
                             BracketMethod method = BracketMethod::ratio_tail);

inline FloorResult verified_floor(const TailSpec& spec, long n, long budget = default_term_budget) {
    return certify_floor(spec, n, budget).floor;
}

}  // namespace balkit
