#pragma once

#include <cstdint>
#include <vector>

#include "cantor/digitset.hpp"
#include "cantor/kernel.hpp"
#include "cantor/radix.hpp"
#include "cantor/rational.hpp"

namespace cantor {

struct Budget {
    long long max_items = 2'000'000;
};

// Disjoint closed intervals with exact endpoints, plus isolated points for the
// degenerate finite-expansion levels.
struct IntervalSet {
    int level = 0;
    Rat scale;                                // n^{-level}
    std::vector<std::pair<Rat, Rat>> intervals; // sorted, disjoint
    std::vector<Rat> points;                    // sorted, outside the intervals
};

// Per-cell interaction flags of the nonexcluded n-ary cells of C_k against
// C_k + ⌊t⌋_k. Cells in the empty case are only counted, not listed.
struct CellCase {
    Int h; // cell is [h, h+1] / n^k
    bool interval = false;
    bool potential = false;
    bool potentially_empty = false;
};

struct IntersectResult {
    CaseTable cases;
    std::vector<CellCase> cells;
    IntervalSet tight; // C_k ∩ (C_k + t) with the exact t
};

// C_k as m^k explicit cells.
IntervalSet build_level(const DigitSet& ds, int k, const Budget& budget = {});

IntersectResult intersect_level(const DigitSet& ds, const PeriodicCode& code, int k,
                                const Budget& budget = {});

// Left endpoints of the copies of n^{-k}[C ∩ (C + ...)] at level k.
std::vector<Rat> offsets(const DigitSet& ds, const PeriodicCode& code, int k,
                         const Budget& budget = {});

struct BoxPoint {
    int level = 0;
    Int count;   // μ_t(level)
    Rat length;  // ℓ_level (cell size for finite expansions)
    double slope = 0.0; // log(count) / -log(length)
};

struct BoxCurve {
    std::vector<BoxPoint> points;
    double regression_slope = 0.0; // least-squares fit of log(count) vs -log(length)
};

BoxCurve boxcount_curve(const DigitSet& ds, const PeriodicCode& code, int kmax);

} // namespace cantor
