#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantor/digitset.hpp"
#include "cantor/intervals.hpp"
#include "cantor/kernel.hpp"
#include "cantor/measure.hpp"
#include "cantor/radix.hpp"

namespace cantor {

// D_{α_k} for k = 1, 2, ... stored as preperiod + period of slice sets.
struct SliceSequence {
    std::vector<SliceSet> pre;
    std::vector<SliceSet> per;       // nonempty for exact codes
    Rat inf_offset;                  // Σ min(D ∩ (D+α_k)) n^{-k}
    bool prefix_only = false;

    const SliceSet& at(int k) const; // 1-indexed
    int pre_len() const { return static_cast<int>(pre.size()); }
    int per_len() const { return static_cast<int>(per.size()); }
};

SliceSequence slice_sequence(const DigitSet& ds, const PeriodicCode& alpha);

struct EquivalenceResult {
    bool decided = true;     // false when a prefix code ran out of digits
    bool equal = false;
    std::optional<int> witness_k; // first disagreeing slice index
};

// C(α) = C(γ) iff the normalized slice sequences agree (sparse D).
EquivalenceResult equivalent(const DigitSet& ds, const PeriodicCode& a, const PeriodicCode& b);

enum class rational_verdict { yes, undecided_prefix };

struct RationalEquivalenceResult {
    rational_verdict verdict = rational_verdict::yes;
    int k = 0;
    int q = 0;
    std::optional<PeriodicCode> gamma;
    // prefix mode: per candidate q, the largest index j in the prefix with
    // D_{α_j} ⊄ D_{α_{j+q}}; q missing means no violation was found for it
    std::map<int, int> violations;
    std::optional<std::pair<int, int>> candidate; // (k, q) satisfying the prefix
};

RationalEquivalenceResult rational_equivalent(const DigitSet& ds, const PeriodicCode& alpha,
                                              int kmax = 32, int qmax = 12);

struct FiniteResult {
    bool finite = false;
    std::vector<Rat> points; // digitwise points of C ∩ (C + value(α)), exact
    // extra touch points whose expansions need a carry; they only arise when
    // d_m = n-1 lets a value end in the top digit two ways
    std::vector<Rat> boundary_points;
    std::optional<PeriodicCode> gamma; // equivalent rational per the chain construction
};

FiniteResult is_finite(const DigitSet& ds, const PeriodicCode& alpha, const Budget& budget = {});

struct StrongPeriodicityResult {
    bool strongly_periodic = false;
    int q = 0;                                // witnessing lag
    int p = 0;                                // stabilization multiplier (period pq)
    std::vector<std::vector<int>> witnesses;  // D̃_{α_j} for j = 1..pq
};

StrongPeriodicityResult strongly_periodic(const DigitSet& ds, const PeriodicCode& alpha);

struct SimilarityMap {
    Rat ratio;  // n^{-pq}
    Rat offset; // b
};

enum class selfsim_verdict { finite, strongly_periodic, rational_equivalent, undecided_prefix };

const char* verdict_name(selfsim_verdict v);

struct SelfSimilarReport {
    selfsim_verdict verdict = selfsim_verdict::rational_equivalent;
    int base = 0;     // n
    int k = 0;        // preperiod length of the canonical Δ⁺ representative
    int q = 0;        // period length used for E
    Int e_base;       // n^q
    std::vector<Int> e;
    std::optional<Int> e2p_base; // n^{2p} variant when q equals the code period
    std::vector<Int> e2p;
    Int mu_k;                 // number of copies at level k
    std::vector<Rat> offsets; // left endpoints of the copies of n^{-k} C_{n^q,E}
    DimensionValue dim;
    MeasureValue measure;
    PeriodicCode alpha;        // canonical Δ⁺ representative driving the digits
    Rat shift;                 // C ∩ (C+t) = (C ∩ (C+value(alpha))) + shift
    std::vector<Rat> points;          // finite verdict only
    std::vector<Rat> boundary_points; // carry-expansion extras, finite verdict only
    std::optional<PeriodicCode> gamma; // equivalent rational (finite verdict)
    std::optional<StrongPeriodicityResult> sp;
    std::vector<SimilarityMap> maps; // strongly periodic verdict only
    bool hull_disjoint = false;      // similarity images of the convex hull disjoint
};

SelfSimilarReport self_similar_report(const DigitSet& ds, const PeriodicCode& code,
                                      const Budget& budget = {});

// Digit generator attached to a purely periodic α: substitutes δ at the chosen
// in-period index according to the supplied bit sequence.
struct GeneratorResult {
    PeriodicCode gamma_prefix; // first K digits, prefix code
    int index_i = 0;           // in-period substitution index
    std::vector<int> kept;     // h with bit h+1 = 1, i.e. D_{γ_{i+hp}} = D_{α_{i+hp}}
};

GeneratorResult generate_nonequivalent(const DigitSet& ds, const PeriodicCode& alpha, int delta,
                                       const std::vector<int>& bits, int depth);

std::vector<int> thue_morse_bits(int count);

// α̂_k = d_m - |α_k| for uniform D with n = d_m + 1, plus the (p, u, v)
// alignment witnessing the subset condition when one exists.
struct UniformHatResult {
    PeriodicCode hat;
    bool aligned = false;
    int p = 0;
    std::vector<int> u, v;
};

UniformHatResult uniform_hat(const DigitSet& ds, const PeriodicCode& alpha);

} // namespace cantor
