#include "cantor/kernel.hpp"

#include <algorithm>

namespace cantor {

const char* sigma_name(sigma_value v) {
    switch (v) {
    case sigma_value::zero: return "0";
    case sigma_value::plus_one: return "1";
    case sigma_value::minus_one: return "-1";
    case sigma_value::imag: return "i";
    }
    return "?";
}

xi_value xi(const DigitSet& ds, sigma_value state, int digit) {
    int n = ds.base();
    if (digit <= -n || digit >= n) fail(errc::invalid_argument, "xi digit out of range");
    int a = std::abs(digit);
    bool in_delta = ds.in_delta(a);            // |h| ∈ Δ
    bool in_delta_m1 = ds.in_delta(a + 1);     // |h| ∈ Δ-1
    bool in_ndelta = ds.in_delta(n - a);       // |h| ∈ n-Δ
    bool in_ndelta_m1 = ds.in_delta(n - a - 1); // |h| ∈ n-Δ-1

    switch (state) {
    case sigma_value::zero: return xi_value::zero;
    case sigma_value::plus_one:
        if (in_delta && !in_delta_m1) return xi_value::plus_one;
        if (in_delta_m1 && !in_delta) return xi_value::minus_one;
        if (in_delta && in_delta_m1) return xi_value::imag;
        return xi_value::zero;
    case sigma_value::minus_one:
        if (in_ndelta && !in_ndelta_m1) return xi_value::minus_one;
        if (in_ndelta_m1 && !in_ndelta) return xi_value::plus_one;
        if (in_ndelta && in_ndelta_m1) return xi_value::minus_imag;
        return xi_value::zero;
    case sigma_value::imag: {
        bool a1 = in_delta || in_ndelta;
        bool b1 = in_delta_m1 || in_ndelta_m1;
        if (a1 && !b1) return xi_value::minus_imag;
        if (b1 && !a1) return xi_value::imag;
        if (a1 && b1) return xi_value::plus_one;
        return xi_value::zero;
    }
    }
    return xi_value::zero;
}

namespace {

struct Cx {
    int re, im;
};

Cx to_cx(sigma_value v) {
    switch (v) {
    case sigma_value::zero: return {0, 0};
    case sigma_value::plus_one: return {1, 0};
    case sigma_value::minus_one: return {-1, 0};
    case sigma_value::imag: return {0, 1};
    }
    return {0, 0};
}

Cx to_cx(xi_value v) {
    switch (v) {
    case xi_value::zero: return {0, 0};
    case xi_value::plus_one: return {1, 0};
    case xi_value::minus_one: return {-1, 0};
    case xi_value::imag: return {0, 1};
    case xi_value::minus_imag: return {0, -1};
    }
    return {0, 0};
}

} // namespace

sigma_value sigma_step(const DigitSet& ds, sigma_value state, int digit) {
    Cx f = to_cx(xi(ds, state, digit));
    Cx s = to_cx(state);
    Cx p{f.re * s.re - f.im * s.im, f.re * s.im + f.im * s.re};
    if (p.re == 1 && p.im == 0) return sigma_value::plus_one;
    if (p.re == -1 && p.im == 0) return sigma_value::minus_one;
    if (p.re == 0 && p.im == 1) return sigma_value::imag;
    if (p.re == 0 && p.im == 0) return sigma_value::zero;
    // σ = -i never occurs; the table guarantees it
    fail(errc::invalid_argument, "sigma left the state set");
}

namespace {

void require_nary_range(const DigitSet& ds, const PeriodicCode& code) {
    auto check = [&](int d) {
        if (d < 0 || d >= ds.base())
            fail(errc::invalid_argument, "sigma needs digits in [0, n-1]; abs-canonicalize first");
    };
    for (int d : code.preperiod) check(d);
    for (int d : code.period) check(d);
}

Int mu_factor(const DigitSet& ds, sigma_value state, int digit) {
    int n = ds.base();
    Int count = 0;
    for (int d : ds.digits()) {
        if (state == sigma_value::plus_one) {
            int v = d - digit; // (D - t) ∩ (D ∪ (D+1))
            if (ds.contains(v) || ds.contains(v - 1)) ++count;
        } else {
            int v = d - n + digit; // (D - n + t) ∩ (D ∪ (D-1))
            if (ds.contains(v) || ds.contains(v + 1)) ++count;
        }
    }
    return count;
}

} // namespace

SigmaTrace sigma_trace(const DigitSet& ds, const PeriodicCode& code, int depth) {
    require_nary_range(ds, code);
    if (depth < 1) fail(errc::invalid_argument, "depth must be at least 1");
    int avail = code.prefix_only ? static_cast<int>(code.preperiod.size()) : depth;

    SigmaTrace tr;
    tr.sigma.push_back(sigma_value::plus_one);
    tr.mu.push_back(1);
    tr.mu_defined_upto = 0;
    bool frozen = false;
    int limit = std::min(depth, avail);
    for (int k = 0; k < limit; ++k) {
        sigma_value s = tr.sigma.back();
        int digit = code.digit_at(k + 1);
        if (!frozen) {
            if (s == sigma_value::plus_one || s == sigma_value::minus_one) {
                tr.mu.push_back(tr.mu.back() * mu_factor(ds, s, digit));
                tr.mu_defined_upto = k + 1;
            } else {
                frozen = true;
            }
        }
        sigma_value next = sigma_step(ds, s, digit);
        tr.sigma.push_back(next);
        if (next != sigma_value::plus_one && next != sigma_value::minus_one) tr.all_pm_one = false;
    }

    if (!code.prefix_only) {
        // certify the eventual period by matching states at period-aligned indices
        int k0 = static_cast<int>(code.preperiod.size());
        int p = std::max<size_t>(code.period.size(), 1);
        std::vector<sigma_value> s(1, sigma_value::plus_one);
        int need = k0 + 9 * p + 1;
        for (int k = 0; k < need; ++k) s.push_back(sigma_step(ds, s.back(), code.digit_at(k + 1)));
        for (int j2 = 1; j2 <= 8 && !tr.eventual_period; ++j2) {
            for (int j1 = 0; j1 < j2; ++j1) {
                if (s[k0 + j1 * p] == s[k0 + j2 * p]) {
                    tr.eventual_period = SigmaPeriod{k0 + j1 * p, (j2 - j1) * p};
                    break;
                }
            }
        }
    }
    return tr;
}

bool sigma_all_pm_one(const DigitSet& ds, const PeriodicCode& code) {
    if (code.prefix_only) fail(errc::undecided_prefix, "needs an exact code");
    require_nary_range(ds, code);
    int k0 = static_cast<int>(code.preperiod.size());
    int p = std::max<size_t>(code.period.size(), 1);
    int need = k0 + 9 * p + 1;
    sigma_value s = sigma_value::plus_one;
    for (int k = 0; k < need; ++k) {
        s = sigma_step(ds, s, code.digit_at(k + 1));
        if (s != sigma_value::plus_one && s != sigma_value::minus_one) return false;
    }
    // the trace is certified periodic within this window, so ±1 persists
    return true;
}

Rat ell(const DigitSet& ds, const PeriodicCode& code, int k) {
    PeriodicCode c = canonical(code);
    if (c.finite_rep() || c.all_max_tail(ds.base() - 1))
        fail(errc::finite_representation, "lengths degenerate for finite expansions");
    SigmaTrace tr = sigma_trace(ds, c, std::max(k, 1));
    if (k >= static_cast<int>(tr.sigma.size()))
        fail(errc::invalid_argument, "trace too short");
    sigma_value s = tr.sigma[k];
    if (s != sigma_value::plus_one && s != sigma_value::minus_one)
        fail(errc::sigma_not_pm, "requires sigma in {+1,-1}");
    Rat tail = value_of(c) - truncate_value(c, k);
    if (s == sigma_value::plus_one) return inv_pow(c.base, k) - tail;
    return tail;
}

PsiResult psi(const DigitSet& ds, const PeriodicCode& code) {
    require_nary_range(ds, code);
    PeriodicCode c = canonical(code);

    if (c.prefix_only) {
        // best-effort prefix image; no period claim
        int len = static_cast<int>(c.preperiod.size());
        sigma_value prev = sigma_value::plus_one;
        PeriodicCode y;
        y.base = c.base;
        y.alphabet = alphabet_tag::delta_plus;
        y.prefix_only = true;
        int n = c.base;
        for (int j = 1; j <= len; ++j) {
            int t = c.digit_at(j);
            sigma_value cur = sigma_step(ds, prev, t);
            if (cur != sigma_value::plus_one && cur != sigma_value::minus_one)
                fail(errc::sigma_not_pm, "requires sigma in {+1,-1}");
            int d;
            if (prev == sigma_value::plus_one)
                d = cur == sigma_value::plus_one ? t : t + 1;
            else
                d = cur == sigma_value::minus_one ? n - 1 - t : n - t;
            y.preperiod.push_back(d);
            prev = cur;
        }
        return {y, Rat(0)};
    }

    if (c.finite_rep())
        fail(errc::finite_representation, "psi is undefined for finite expansions");

    SigmaTrace tr = sigma_trace(ds, c, 1);
    if (!tr.eventual_period) fail(errc::invalid_argument, "no certified sigma period");
    int start = tr.eventual_period->start;
    int q = tr.eventual_period->length;

    int n = c.base;
    std::vector<sigma_value> s(1, sigma_value::plus_one);
    std::vector<int> ydig(1, 0); // 1-indexed
    for (int j = 1; j <= start + q; ++j) {
        int t = c.digit_at(j);
        sigma_value cur = sigma_step(ds, s.back(), t);
        if (cur != sigma_value::plus_one && cur != sigma_value::minus_one)
            fail(errc::sigma_not_pm, "requires sigma in {+1,-1}");
        if (s.back() == sigma_value::plus_one)
            ydig.push_back(cur == sigma_value::plus_one ? t : t + 1);
        else
            ydig.push_back(cur == sigma_value::minus_one ? n - 1 - t : n - t);
        s.push_back(cur);
    }

    PeriodicCode y;
    y.base = n;
    y.alphabet = alphabet_tag::delta_plus;
    y.preperiod.assign(ydig.begin() + 1, ydig.begin() + 1 + start);
    y.period.assign(ydig.begin() + 1 + start, ydig.begin() + 1 + start + q);
    y = canonical(y);

    Rat cshift = (value_of(y) - value_of(c)) / 2;
    return {y, cshift};
}

} // namespace cantor
