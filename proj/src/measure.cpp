#include "cantor/measure.hpp"

#include <cmath>

namespace cantor {

namespace {

// Largest d-th root when the value is a perfect d-th power.
bool nth_root_exact(const Int& v, int d, Int& root) {
    if (v <= 0) return false;
    Int lo = 1, hi = v;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        Int p = 1;
        bool over = false;
        for (int i = 0; i < d && !over; ++i) {
            p *= mid;
            if (p > v) over = true;
        }
        if (over) hi = mid - 1;
        else if (p == v) { root = mid; return true; }
        else lo = mid + 1;
    }
    Int p = 1;
    for (int i = 0; i < d; ++i) p *= lo;
    root = lo;
    return p == v;
}

} // namespace

DimensionValue make_dimension(Int count, Int logbase) {
    if (count < 1 || logbase < 2) fail(errc::invalid_argument, "bad dimension parameters");
    // reduce common powers: log_{c^d}(e^d) = log_c(e)
    bool reduced = true;
    while (reduced && count > 1) {
        reduced = false;
        int maxd = static_cast<int>(boost::multiprecision::msb(logbase)) + 1;
        for (int d = maxd; d >= 2; --d) {
            Int rb, rc;
            if (nth_root_exact(logbase, d, rb) && rb >= 2 && nth_root_exact(count, d, rc)) {
                logbase = rb;
                count = rc;
                reduced = true;
                break;
            }
        }
    }
    DimensionValue s;
    s.count = count;
    s.logbase = logbase;
    return s;
}

double DimensionValue::value() const {
    return std::log(to_double(count)) / std::log(to_double(logbase));
}

std::string DimensionValue::exact() const {
    if (count == 1) return "0";
    if (count == logbase) return "1";
    return "log_" + logbase.str() + "(" + count.str() + ")";
}

bool DimensionValue::operator==(const DimensionValue& o) const {
    return count == o.count && logbase == o.logbase;
}

MeasureValue undefined_measure(std::string reason) {
    MeasureValue m;
    m.defined = false;
    m.reason = std::move(reason);
    return m;
}

MeasureValue make_measure(Rat factor, Rat base_arg, DimensionValue s) {
    if (factor <= 0 || base_arg <= 0) fail(errc::invalid_argument, "measure parts must be positive");
    // fold powers of the log base into the rational factor: (N^j * a)^s = r^j * a^s
    if (s.count > 1) {
        Int p = num(base_arg), q = den(base_arg);
        while (p % s.logbase == 0) {
            p /= s.logbase;
            factor *= s.count;
        }
        while (q % s.logbase == 0) {
            q /= s.logbase;
            factor /= s.count;
        }
        base_arg = Rat(p, q);
    } else {
        base_arg = 1; // s = 0: a^0 = 1
    }
    MeasureValue m;
    m.defined = true;
    m.factor = factor;
    m.base_arg = base_arg;
    m.s = s;
    return m;
}

double MeasureValue::value() const {
    if (!defined) return std::nan("");
    return to_double(factor) * std::pow(to_double(base_arg), s.value());
}

std::string MeasureValue::exact() const {
    if (!defined) return "undefined";
    if (base_arg == 1) return rat_str(factor);
    std::string pw = "(" + rat_str(base_arg) + ")^" + s.exact();
    if (factor == 1) return pw;
    return rat_str(factor) + " * " + pw;
}

DimensionValue dimension(const DigitSet& ds, const PeriodicCode& code, const SigmaTrace& trace) {
    PeriodicCode c = canonical(code);
    if (c.prefix_only) fail(errc::undecided_prefix, "dimension needs an exact code");
    int q = static_cast<int>(c.period.size());
    for (size_t k = 0; k < trace.sigma.size(); ++k)
        if (trace.sigma[k] != sigma_value::plus_one)
            fail(errc::sigma_not_pm, "dimension formula needs sigma identically 1");
    Int prod = 1;
    for (int d : c.period) prod *= Int(ds.raw_slice(d).size());
    if (prod == 0) fail(errc::not_in_f, "a period digit has empty D ∩ (D+digit)");
    return make_dimension(prod, pow_int(ds.base(), static_cast<unsigned>(q)));
}

namespace {

// code with σ ≡ 1 describing the same intersection, or the input when the
// trace is already all ones
PeriodicCode all_ones_form(const DigitSet& ds, const PeriodicCode& code) {
    PeriodicCode c = canonical(code);
    if (c.prefix_only) fail(errc::undecided_prefix, "needs an exact code");
    if (c.finite_rep())
        fail(errc::finite_representation, "apply the report pipeline to finite expansions");
    if (!sigma_all_pm_one(ds, c)) fail(errc::sigma_not_pm, "trace leaves {+1,-1}");
    int k0 = static_cast<int>(c.preperiod.size());
    int p = std::max<size_t>(c.period.size(), 1);
    sigma_value s = sigma_value::plus_one;
    bool ones = true;
    for (int k = 0; k < k0 + 9 * p + 1 && ones; ++k) {
        s = sigma_step(ds, s, c.digit_at(k + 1));
        if (s != sigma_value::plus_one) ones = false;
    }
    return ones ? c : psi(ds, c).y;
}

} // namespace

DimensionValue dimension_of(const DigitSet& ds, const PeriodicCode& code) {
    PeriodicCode y = all_ones_form(ds, code);
    SigmaTrace tr = sigma_trace(ds, y, 1);
    return dimension(ds, y, tr);
}

MeasureValue measure_of(const DigitSet& ds, const PeriodicCode& code) {
    PeriodicCode y = all_ones_form(ds, code);
    DimensionValue s = dimension_of(ds, y);
    int q = static_cast<int>(y.period.size());
    int k = static_cast<int>(y.preperiod.size());

    // base set of the decomposition into mu copies of n^{-k} C_{n^q,E}
    std::vector<Int> e{0};
    for (int d : y.period) {
        std::vector<Int> next;
        for (const Int& val : e)
            for (int u : ds.raw_slice(d)) next.push_back(val * ds.base() + u);
        e = std::move(next);
        if (e.size() > 4096) return undefined_measure("base digit set too large");
    }
    std::sort(e.begin(), e.end());
    if (e.size() != 2)
        return undefined_measure("closed form requires a two-digit base set");
    Int mu = 1;
    for (int d : y.preperiod) mu *= Int(ds.raw_slice(d).size());
    Int nq = pow_int(ds.base(), static_cast<unsigned>(q));
    MeasureValue base = make_measure(1, Rat(e[1] - e[0], nq - 1), s);
    return measure_scaled(mu, ds.base(), k, s, base);
}

MeasureValue measure_two_digit(int n, int a, int b) {
    if (n < 3 || a < 0 || a >= b || b >= n) fail(errc::invalid_argument, "need 0 <= a < b < n");
    DimensionValue s = make_dimension(2, n);
    return make_measure(1, Rat(b - a, n - 1), s);
}

MeasureValue measure_scaled(const Int& mu_k, int base, int k, const DimensionValue& s,
                            const MeasureValue& base_measure) {
    if (!base_measure.defined) return base_measure;
    if (mu_k < 1 || k < 0) fail(errc::invalid_argument, "bad scaling parameters");
    if (!(base_measure.s == s)) fail(errc::invalid_argument, "dimension mismatch in scaling");
    // mu_k copies of n^{-k} B: mu_k * (n^{-k})^s * H^s(B)
    Rat arg = base_measure.base_arg * inv_pow(base, k);
    return make_measure(base_measure.factor * Rat(mu_k), arg, s);
}

} // namespace cantor
