#pragma once

#include <optional>
#include <vector>

#include "cantor/digitset.hpp"
#include "cantor/radix.hpp"
#include "cantor/rational.hpp"

namespace cantor {

// σ states; ξ additionally emits ∓i factors but σ itself never reaches -i.
enum class sigma_value : int { zero, plus_one, minus_one, imag };
enum class xi_value : int { zero, plus_one, minus_one, imag, minus_imag };

const char* sigma_name(sigma_value v);

// Transition factor table, driven by |h| and the difference set.
xi_value xi(const DigitSet& ds, sigma_value state, int digit);

// σ(k+1) = ξ(σ(k), t_{k+1}) · σ(k) in the finite state set {0, ±1, i}.
sigma_value sigma_step(const DigitSet& ds, sigma_value state, int digit);

struct SigmaPeriod {
    int start = 0;  // first index the cycle is certified from
    int length = 0; // certified period of σ
};

struct SigmaTrace {
    std::vector<sigma_value> sigma; // σ(0..K)
    std::vector<Int> mu;            // μ(0..K'), frozen past the first σ ∉ {±1}
    int mu_defined_upto = 0;        // largest k with μ(k) defined
    bool all_pm_one = true;         // σ(k) ∈ {±1} for all computed k
    std::optional<SigmaPeriod> eventual_period; // certified on exact codes
};

SigmaTrace sigma_trace(const DigitSet& ds, const PeriodicCode& code, int depth);

// Certified σ(k) ∈ {±1} for every k >= 0, not just the computed ones. Exact
// codes only; the periodic certificate extends the finite check to infinity.
bool sigma_all_pm_one(const DigitSet& ds, const PeriodicCode& code);

// Common length of the surviving intervals at level k.
Rat ell(const DigitSet& ds, const PeriodicCode& code, int k);

struct PsiResult {
    PeriodicCode y; // σ_y ≡ 1; digits land in Δ⁺ when D is sparse
    Rat offset;     // c with C ∩ (C+t) = (C ∩ (C+y)) - c
};

// Digitwise recoding removing the -1 states of σ.
PsiResult psi(const DigitSet& ds, const PeriodicCode& code);

// Interaction counts of the n-ary intervals of C_k against C_k + ⌊t⌋_k.
// A cell can be in several cases at once; `empty_cases` counts cells in none.
struct CaseTable {
    int level = 0;
    Int total = 0;
    Int interval_cases = 0;
    Int potential_cases = 0;
    Int potentially_empty_cases = 0;
    Int empty_cases = 0;
    bool has_interval = false;
    bool has_potential = false;
};

} // namespace cantor
