#include "cantor/betaexp.hpp"

#include <algorithm>

namespace cantor {

BetaSystem::BetaSystem(int N_, std::vector<int> omega_, Rat beta_)
    : N(N_), omega(std::move(omega_)), beta(std::move(beta_)) {
    if (N < 2) fail(errc::invalid_argument, "base must be at least 2");
    if (omega.size() < 2) fail(errc::invalid_argument, "need at least two digits");
    for (size_t i = 0; i < omega.size(); ++i) {
        if (omega[i] < 0 || omega[i] >= N) fail(errc::invalid_argument, "digit out of range");
        if (i && omega[i] <= omega[i - 1])
            fail(errc::invalid_argument, "digits must be strictly increasing");
    }
    if (beta <= 0 || beta > Rat(1, N))
        fail(errc::not_applicable, "beta must lie in (0, 1/N]; larger betas overlap");
}

Rat g_beta(const BetaSystem& sys, const PeriodicCode& code) {
    if (code.prefix_only) fail(errc::undecided_prefix, "needs an exact code");
    if (code.base != sys.N) fail(errc::invalid_argument, "code base must match the system");
    PeriodicCode c = canonical(code);
    Rat v = 0;
    Rat scale = 1;
    for (int d : c.preperiod) {
        scale *= sys.beta;
        v += Rat(d) * scale;
    }
    if (!c.period.empty()) {
        Rat pv = 0;
        Rat ps = 1;
        for (int d : c.period) {
            ps *= sys.beta;
            pv += Rat(d) * ps;
        }
        Rat bp = pow_rat(sys.beta, static_cast<int>(c.period.size()));
        v += scale * pv / (Rat(1) - bp);
    }
    return v;
}

Rat gamma_scale(const BetaSystem& sys) {
    bool found = false;
    for (int d = 1; d * sys.omega.back() <= sys.N - 1 && !found; ++d) {
        std::vector<int> scaled;
        for (int w : sys.omega) scaled.push_back(d * w);
        if (scaled.front() != 0) continue;
        try {
            DigitSet ds(sys.N, scaled);
            if (ds.sparse()) found = true;
        } catch (const error&) {
        }
    }
    if (!found) fail(errc::not_applicable, "no integer multiple of the digits is sparse");
    return (Rat(1) - sys.beta) / (sys.beta * Rat(sys.N - 1));
}

TransportReport transport_report(const BetaSystem& sys, const DigitSet& ds,
                                 const std::vector<PeriodicCode>& sample_codes) {
    if (ds.base() != sys.N) fail(errc::invalid_argument, "digit set base must match the system");
    if (ds.max_digit() > sys.N - 1) fail(errc::invalid_argument, "digits exceed the base");

    TransportReport rep;
    rep.scale = (Rat(1) - sys.beta) / (sys.beta * Rat(sys.N - 1));

    std::vector<std::pair<Rat, Rat>> vals; // (value, image)
    for (const PeriodicCode& c : sample_codes) {
        validate_code(ds, c);
        vals.emplace_back(value_of(c), g_beta(sys, c));
    }
    std::sort(vals.begin(), vals.end());

    bool mono = true;
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
        if (vals[i].first == vals[i + 1].first) continue;
        rep.samples.push_back({vals[i].first, vals[i + 1].first, vals[i].second,
                               vals[i + 1].second});
        if (!(vals[i].second < vals[i + 1].second)) mono = false;
    }

    // β = 1/N collapses g_β to the identity on base-N values
    BetaSystem idsys(sys.N, sys.omega, Rat(1, sys.N));
    rep.identity_at_inv_n = true;
    for (const PeriodicCode& c : sample_codes)
        if (g_beta(idsys, c) != value_of(c)) rep.identity_at_inv_n = false;

    // attractor identity: Γ points equal scale * g_β on each sample
    bool scale_ok = true;
    for (const PeriodicCode& c : sample_codes) {
        PeriodicCode cc = canonical(c);
        // Γ point of the same digit stream: Σ x_k β^{k-1} (1-β)/(N-1)
        Rat gamma_pt = 0;
        Rat bpow = 1;
        for (int d : cc.preperiod) {
            gamma_pt += Rat(d) * bpow * (Rat(1) - sys.beta) / Rat(sys.N - 1);
            bpow *= sys.beta;
        }
        if (!cc.period.empty()) {
            Rat pv = 0;
            Rat ps = 1;
            for (size_t i = 0; i < cc.period.size(); ++i) {
                pv += Rat(cc.period[i]) * ps * (Rat(1) - sys.beta) / Rat(sys.N - 1);
                ps *= sys.beta;
            }
            Rat bp = pow_rat(sys.beta, static_cast<int>(cc.period.size()));
            gamma_pt += bpow * pv / (Rat(1) - bp);
        }
        if (gamma_pt != rep.scale * g_beta(sys, cc)) scale_ok = false;
    }

    rep.preserved = mono && scale_ok;
    return rep;
}

} // namespace cantor
