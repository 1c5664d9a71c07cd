#pragma once

#include <string>
#include <vector>

#include "cantor/digitset.hpp"
#include "cantor/rational.hpp"

namespace cantor {

enum class alphabet_tag { nary, delta, delta_plus, d_only };

const char* alphabet_name(alphabet_tag a);
alphabet_tag alphabet_from_name(const std::string& s);

// Eventually periodic digit string 0.d1 d2 d3 ... in some base.
// Canonical exact codes always carry a nonempty period; a finite expansion is
// represented with period {0}. Prefix codes (period unknown) have an empty
// period and prefix_only set; their value is known only to |preperiod| digits.
struct PeriodicCode {
    int base = 10;
    alphabet_tag alphabet = alphabet_tag::nary;
    std::vector<int> preperiod;
    std::vector<int> period;
    bool prefix_only = false;
    int sign = 1; // sign of the value the user supplied; analysis runs on |t|

    // 1-indexed digit access, unrolling the period on demand.
    int digit_at(int k) const;
    bool finite_rep() const; // exact code whose tail is all zeros
    bool all_max_tail(int maxdigit) const;
    bool operator==(const PeriodicCode& o) const {
        return base == o.base && alphabet == o.alphabet && preperiod == o.preperiod &&
               period == o.period && prefix_only == o.prefix_only;
    }
};

// Minimal preperiod, primitive period; finite tails normalized to period {0}.
PeriodicCode canonical(PeriodicCode code);

// Digit range checks against the alphabet; needs the digit set for the
// restricted alphabets.
void validate_code(const DigitSet& ds, const PeriodicCode& code);

Rat value_of(const PeriodicCode& code);

// ⌊t⌋_k = 0.d1...dk exactly.
Rat truncate_value(const PeriodicCode& code, int k);

// Canonical eventually periodic code for a rational value. NARY uses long
// division (terminating form preferred). The restricted alphabets run a greedy
// digit search over the finite remainder graph and fail with not_representable
// when the value has no such expansion.
PeriodicCode code_from_rational(const Rat& value, int base, alphabet_tag alphabet,
                                const DigitSet* ds = nullptr);

// Digitwise |α_k|; Δ → Δ⁺ (translation-equivalent when D is sparse).
PeriodicCode abs_canonicalize(const DigitSet& ds, const PeriodicCode& code);

// CLI grammar: "PRE(PER)", digits '.'-separated when any digit >= 10 or
// negative; "p/q" rationals are handled by the callers.
PeriodicCode parse_code(const std::string& text, int base, alphabet_tag alphabet);
std::string format_code(const PeriodicCode& code);

} // namespace cantor
