#pragma once

#include <vector>

#include "cantor/digitset.hpp"
#include "cantor/radix.hpp"
#include "cantor/rational.hpp"

namespace cantor {

// β-expansion system over digits Ω in base N, β ∈ (0, 1/N].
struct BetaSystem {
    int N;
    std::vector<int> omega;
    Rat beta;

    BetaSystem(int N, std::vector<int> omega, Rat beta);
};

// g_β(Σ γ_k N^{-k}) = Σ γ_k β^k, exact over the period.
Rat g_beta(const BetaSystem& sys, const PeriodicCode& code);

// Conjugacy constant (1-β)/(β(N-1)) relating the attractor to g_β(C_{N,D});
// needs some integer multiple d·Ω to be a sparse digit set within the base.
Rat gamma_scale(const BetaSystem& sys);

struct TransportSample {
    Rat x, y;       // base-N values, x < y
    Rat gx, gy;     // their g_β images
};

struct TransportReport {
    bool preserved = false;  // monotonicity and the scale identity both held
    bool identity_at_inv_n = false; // g_{1/N} equals the base-N value map
    Rat scale;
    std::vector<TransportSample> samples;
};

// Order-preservation spot checks plus the attractor scale identity. The digit
// machinery itself never sees β, so structural verdicts transfer unchanged.
TransportReport transport_report(const BetaSystem& sys, const DigitSet& ds,
                                 const std::vector<PeriodicCode>& sample_codes);

} // namespace cantor
