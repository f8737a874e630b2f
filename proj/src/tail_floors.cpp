#include "balkit/tail_floors.hpp"

#include "balkit/errors.hpp"
#include "balkit/sequences.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace balkit {

namespace {

struct ShapeInfo {
    Shape shape;
    const char* name;
    bool alternating;
    bool gen_fib;
};

constexpr std::array<ShapeInfo, 14> shape_table{{
    {Shape::plain, "plain", false, false},
    {Shape::alt, "alt", true, false},
    {Shape::alt_sq, "alt-sq", true, false},
    {Shape::alt_even_idx, "alt-even-idx", true, false},
    {Shape::alt_odd_idx, "alt-odd-idx", true, false},
    {Shape::alt_consec_prod, "alt-consec-prod", true, false},
    {Shape::alt_even_sq, "alt-even-sq", true, false},
    {Shape::alt_odd_sq, "alt-odd-sq", true, false},
    {Shape::alt_oddprod, "alt-oddprod", true, false},
    {Shape::alt_evenprod, "alt-evenprod", true, false},
    {Shape::gf_plain, "gf-plain", false, true},
    {Shape::gf_sq, "gf-sq", false, true},
    {Shape::gf_even_idx, "gf-even-idx", false, true},
    {Shape::gf_odd_idx, "gf-odd-idx", false, true},
}};

const ShapeInfo& info(Shape s) { return shape_table[static_cast<std::size_t>(s)]; }

SequenceId sequence_for(const TailSpec& spec) {
    switch (spec.family()) {
    case TailFamily::balancing: return SequenceId::balancing();
    case TailFamily::lucas_balancing: return SequenceId::lucas_balancing();
    case TailFamily::gen_fibonacci: return SequenceId::gen_fibonacci(spec.param());
    }
    return SequenceId::balancing();
}

// The closed form is
//   n even:  X(n) + even_offset
//   n odd:   X(n) + odd_offset         (positive series)
//           -(X(n) + odd_offset)       (alternating series)
// with X(n) = sum of coefficient * prod S_{step n + offset}.
struct Monomial {
    BigInt coefficient;
    std::vector<IndexMap> factors;
};

struct ClosedRule {
    std::vector<Monomial> x;
    long even_offset;
    long odd_offset;
};

enum class Edition { reconciled, printed };

ClosedRule closed_rule(const TailSpec& spec, Edition edition) {
    const long l = spec.param();
    const bool is_c = spec.family() == TailFamily::lucas_balancing;
    auto sum_of_two = [](IndexMap a, IndexMap b) { return std::vector<Monomial>{{1, {a}}, {1, {b}}}; };
    auto sum_of_squares = [](IndexMap a, IndexMap b) {
        return std::vector<Monomial>{{1, {a, a}}, {1, {b, b}}};
    };
    // Offsets for the alt_* family: B is (0, +1), C is (-1, 0).
    const long alt_even = is_c ? -1 : 0;
    const long alt_odd = is_c ? 0 : 1;

    switch (spec.shape()) {
    case Shape::plain:
        return {{{1, {{l, 0}}}, {-1, {{l, -l}}}}, is_c ? 0 : -1, is_c ? 0 : -1};
    case Shape::alt:
        return {sum_of_two({1, 0}, {1, -1}), alt_even, alt_odd};
    case Shape::alt_sq:
        return {sum_of_squares({1, 0}, {1, -1}), alt_even, alt_odd};
    case Shape::alt_even_idx:
        return {sum_of_two({2, 0}, {2, -2}), alt_even, alt_odd};
    case Shape::alt_odd_idx:
        return {sum_of_two({2, 1}, {2, -1}), alt_even, alt_odd};
    case Shape::alt_consec_prod: {
        std::vector<Monomial> x{{1, {{1, 0}, {1, 1}}}, {1, {{1, -1}, {1, 0}}}};
        if (is_c && edition == Edition::reconciled) return {x, -2, -1};
        return {x, alt_even, alt_odd};
    }
    case Shape::alt_even_sq:
        return {sum_of_squares({2, 0}, {2, -2}), alt_even, alt_odd};
    case Shape::alt_odd_sq:
        return {sum_of_squares({2, -1}, {2, -3}), alt_even, alt_odd};
    case Shape::alt_oddprod:
        if (is_c) return {sum_of_squares({2, 0}, {2, -2}), edition == Edition::reconciled ? 7 : -1,
                          edition == Edition::reconciled ? 8 : 0};
        return {sum_of_squares({2, 0}, {2, -2}), -1, 0};
    case Shape::alt_evenprod:
        if (is_c) return {sum_of_squares({2, 1}, {2, -1}), edition == Edition::reconciled ? 7 : -1,
                          edition == Edition::reconciled ? 8 : 0};
        return {sum_of_squares({2, 1}, {2, -1}), -1, 0};
    case Shape::gf_plain:
        return {{{1, {{1, 0}}}, {-1, {{1, -1}}}}, 0, -1};
    case Shape::gf_sq:
        return {{{BigInt(l), {{1, -1}, {1, 0}}}}, -1, 0};
    case Shape::gf_even_idx:
        return {{{1, {{2, 0}}}, {-1, {{2, -2}}}}, -1, -1};
    case Shape::gf_odd_idx:
        return {{{1, {{2, -1}}}, {-1, {{2, -3}}}}, 0, 0};
    }
    throw ParameterError("unknown shape");
}

FloorResult evaluate_rule(const TailSpec& spec, long n, Edition edition) {
    if (n < spec.threshold())
        throw RangeError(spec.name() + ": closed form needs n >= " + std::to_string(spec.threshold()) +
                         ", got " + std::to_string(n));
    const SequenceId seq = sequence_for(spec);
    const ClosedRule rule = closed_rule(spec, edition);
    BigInt x = 0;
    for (const auto& m : rule.x) {
        BigInt prod = m.coefficient;
        for (const auto& f : m.factors) prod *= term(seq, f.step * n + f.offset);
        x += prod;
    }
    if (n % 2 == 0) return {x + rule.even_offset};
    BigInt v = x + rule.odd_offset;
    if (is_alternating(spec.shape())) v = -v;
    return {v};
}

// Terms S_0..S_max of the spec's sequence.
std::vector<BigInt> term_table(const SequenceId& seq, long max_index) {
    std::vector<BigInt> out;
    for (auto& t : stream(seq, 0, max_index)) out.push_back(std::move(t.v));
    return out;
}

struct RatioEnvelope {
    Rat lo;
    Rat hi;
};

// Bounds on S_{m+p} / S_m valid for every m >= M.
//
// B and C: B_{m+1}/B_m decreases and C_{m+1}/C_m increases (Cassini:
// B_{m+1}^2 - B_m B_{m+2} = 1, C_{m+1}^2 - C_m C_{m+2} = -8), both toward
// alpha = 3 + 2 sqrt 2. So for m >= M >= 1 both p-step ratios lie in
// [C_{M+p}/C_M, B_{M+p}/B_M].
//
// G(a): r_m = G_{m+1}/G_m obeys r_{m+1} = a + 1/r_m. The map is decreasing
// and its square is increasing below the fixed point, so the interval
// spanned by r_M and r_{M+1} contains every later ratio.
RatioEnvelope ratio_envelope(const TailSpec& spec, long M, long p) {
    if (M < 1) throw ConsistencyError("ratio envelope needs M >= 1");
    if (spec.family() != TailFamily::gen_fibonacci) {
        return {make_rat(C(M + p), C(M)), make_rat(B(M + p), B(M))};
    }
    const SequenceId g = SequenceId::gen_fibonacci(spec.param());
    const Rat r0 = make_rat(term(g, M + 1), term(g, M));
    const Rat r1 = make_rat(term(g, M + 2), term(g, M + 1));
    Rat lo = std::min(r0, r1), hi = std::max(r0, r1);
    Rat lo_p = 1, hi_p = 1;
    for (long i = 0; i < p; ++i) {
        lo_p *= lo;
        hi_p *= hi;
    }
    return {lo_p, hi_p};
}

// Growth lemma used by the partial-sums bracket: S_{m+p} >= rho^p S_m.
// B, C: rho = 5 for m >= 1. G(a): rho = a + 1/(a+1) for m >= 2.
Rat growth_lower_bound(const TailSpec& spec, long M, long p) {
    Rat rho;
    if (spec.family() == TailFamily::gen_fibonacci) {
        if (M < 2) throw ConsistencyError("G growth lemma needs m >= 2");
        rho = Rat(spec.param()) + make_rat(1, spec.param() + 1);
    } else {
        if (M < 1) throw ConsistencyError("B/C growth lemma needs m >= 1");
        rho = 5;
    }
    Rat out = 1;
    for (long i = 0; i < p; ++i) out *= rho;
    return out;
}

}  // namespace

const std::vector<Shape>& all_shapes() {
    static const std::vector<Shape> shapes = [] {
        std::vector<Shape> v;
        for (const auto& s : shape_table) v.push_back(s.shape);
        return v;
    }();
    return shapes;
}

bool is_alternating(Shape s) { return info(s).alternating; }
bool is_gen_fib_shape(Shape s) { return info(s).gen_fib; }
std::string shape_name(Shape s) { return info(s).name; }

TailSpec TailSpec::plain(TailFamily family, long l) {
    if (family == TailFamily::gen_fibonacci) throw ParameterError("plain(l) is defined for B and C only");
    if (l < 1) throw ParameterError("plain(l) needs l >= 1");
    return TailSpec(family, Shape::plain, l);
}

TailSpec TailSpec::alternating(TailFamily family, Shape shape) {
    if (family == TailFamily::gen_fibonacci || !is_alternating(shape))
        throw ParameterError("alternating shapes are defined for B and C only");
    return TailSpec(family, shape, 0);
}

TailSpec TailSpec::gen_fib(Shape shape, long a) {
    if (!is_gen_fib_shape(shape)) throw ParameterError(shape_name(shape) + " is not a generalized-Fibonacci shape");
    if (a < 1) throw ParameterError("generalized Fibonacci needs a >= 1");
    return TailSpec(TailFamily::gen_fibonacci, shape, a);
}

TailSpec TailSpec::parse(const std::string& name, long l, long a) {
    for (const auto& s : shape_table) {
        if (s.gen_fib) {
            if (name == s.name) return gen_fib(s.shape, a);
            continue;
        }
        for (auto [suffix, fam] : {std::pair{"-B", TailFamily::balancing}, std::pair{"-C", TailFamily::lucas_balancing}}) {
            if (name != std::string(s.name) + suffix) continue;
            return s.shape == Shape::plain ? plain(fam, l) : alternating(fam, s.shape);
        }
    }
    throw ParameterError("unknown tail spec '" + name + "'");
}

long TailSpec::threshold() const {
    return (shape_ == Shape::alt_odd_sq || shape_ == Shape::gf_odd_idx) ? 2 : 1;
}

std::string TailSpec::name() const {
    std::string out = shape_name(shape_);
    switch (family_) {
    case TailFamily::balancing: out += "-B"; break;
    case TailFamily::lucas_balancing: out += "-C"; break;
    case TailFamily::gen_fibonacci: return out + "(a=" + std::to_string(param_) + ")";
    }
    if (shape_ == Shape::plain) out += "(l=" + std::to_string(param_) + ")";
    return out;
}

std::vector<IndexMap> summand_factors(const TailSpec& spec) {
    switch (spec.shape()) {
    case Shape::plain: return {{spec.param(), 0}};
    case Shape::alt: return {{1, 0}};
    case Shape::alt_sq: return {{1, 0}, {1, 0}};
    case Shape::alt_even_idx: return {{2, 0}};
    case Shape::alt_odd_idx: return {{2, 1}};
    case Shape::alt_consec_prod: return {{1, 0}, {1, 1}};
    case Shape::alt_even_sq: return {{2, 0}, {2, 0}};
    case Shape::alt_odd_sq: return {{2, -1}, {2, -1}};
    case Shape::alt_oddprod: return {{2, -1}, {2, 1}};
    case Shape::alt_evenprod: return {{2, 0}, {2, 2}};
    case Shape::gf_plain: return {{1, 0}};
    case Shape::gf_sq: return {{1, 0}, {1, 0}};
    case Shape::gf_even_idx: return {{2, 0}};
    case Shape::gf_odd_idx: return {{2, -1}};
    }
    return {};
}

Rat summand(const TailSpec& spec, long k) {
    if (k < 1) throw RangeError("summands are defined for k >= 1");
    const SequenceId seq = sequence_for(spec);
    BigInt den = 1;
    for (const auto& f : summand_factors(spec)) den *= term(seq, f.step * k + f.offset);
    if (is_alternating(spec.shape()) && k % 2 != 0) den = -den;
    return make_rat(1, den);
}

FloorResult closed_floor(const TailSpec& spec, long n) { return evaluate_rule(spec, n, Edition::reconciled); }

FloorResult printed_floor(const TailSpec& spec, long n) { return evaluate_rule(spec, n, Edition::printed); }

RigorousInterval bracket_tail(const TailSpec& spec, long n, long terms, BracketMethod method) {
    if (n < 1) throw RangeError(spec.name() + ": tails are defined for n >= 1");
    if (terms < 1) throw ParameterError("bracket_tail needs at least one explicit term");

    const auto factors = summand_factors(spec);
    const long first_omitted = n + terms;
    long max_index = 0;
    for (const auto& f : factors) max_index = std::max(max_index, f.step * (first_omitted + 1) + f.offset);
    const auto s = term_table(sequence_for(spec), max_index);

    // Magnitude of the k-th summand.
    auto magnitude = [&](long k) {
        BigInt den = 1;
        for (const auto& f : factors) den *= s[static_cast<std::size_t>(f.step * k + f.offset)];
        return make_rat(1, den);
    };
    const bool alternating = is_alternating(spec.shape());
    auto sign = [&](long k) { return (alternating && k % 2 != 0) ? -1 : 1; };

    Rat partial = 0;
    for (long k = n; k < first_omitted; ++k) partial += sign(k) * magnitude(k);
    const Rat a_first = magnitude(first_omitted);
    const int sign_first = sign(first_omitted);

    // Bounds on a_{k+1}/a_k for all k >= first_omitted.
    Rat q_lo = 1, q_hi = 1;
    for (const auto& f : factors) {
        const long M = f.step * first_omitted + f.offset;
        if (method == BracketMethod::ratio_tail) {
            const RatioEnvelope env = ratio_envelope(spec, M, f.step);
            q_lo /= env.hi;
            q_hi /= env.lo;
        } else {
            q_hi /= growth_lower_bound(spec, M, f.step);
        }
    }
    if (q_hi >= 1) throw ConsistencyError(spec.name() + ": summands are not provably decreasing");

    if (method == BracketMethod::partial_sums) {
        if (!alternating) return {partial, partial + a_first / (1 - q_hi)};
        for (long k = n; k < first_omitted; ++k)
            if (!(magnitude(k + 1) < magnitude(k)))
                throw ConsistencyError(spec.name() + ": alternating terms do not decrease strictly");
        const Rat next = partial + sign_first * a_first;
        return {std::min(partial, next), std::max(partial, next)};
    }

    if (!alternating) return {partial + a_first / (1 - q_lo), partial + a_first / (1 - q_hi)};

    // Remainder = sign_first * a_first * v with v = 1 - q_1 (1 - q_2 (1 - ...)),
    // q_i in [q_lo, q_hi]; v lies in the invariant interval of x -> 1 - q x.
    const Rat denom = 1 - q_lo * q_hi;
    const Rat v_lo = (1 - q_hi) / denom;
    const Rat v_hi = (1 - q_lo) / denom;
    const Rat r1 = sign_first * a_first * v_lo;
    const Rat r2 = sign_first * a_first * v_hi;
    return {partial + std::min(r1, r2), partial + std::max(r1, r2)};
}

CertifiedFloor certify_floor(const TailSpec& spec, long n, long budget, BracketMethod method) {
    for (long terms = 1; terms <= budget; terms *= 2) {
        RigorousInterval iv = bracket_tail(spec, n, terms, method);
        if (!iv.excludes_zero()) continue;
        // 1/x is decreasing on each half-line, so 1/S lies in [1/hi, 1/lo].
        BigInt from_hi = floor_of(1 / iv.hi);
        BigInt from_lo = floor_of(1 / iv.lo);
        if (from_hi == from_lo) return {{std::move(from_hi)}, std::move(iv), terms};
    }
    throw UndecidedInterval(spec.name() + " at n=" + std::to_string(n) + ": floor not separated within " +
                            std::to_string(budget) + " terms");
}

}  // namespace balkit
