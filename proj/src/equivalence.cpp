#include "cantor/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cantor {

namespace {

Rat value_from_digits(int base, std::vector<int> pre, std::vector<int> per) {
    PeriodicCode c;
    c.base = base;
    c.preperiod = std::move(pre);
    c.period = std::move(per);
    if (c.period.empty()) c.period = {0};
    return value_of(c);
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Accepts Δ⁺-valued digit streams; Δ codes are folded through |.| first.
PeriodicCode to_delta_plus(const DigitSet& ds, const PeriodicCode& code) {
    PeriodicCode c = canonical(code);
    if (c.alphabet == alphabet_tag::delta) return abs_canonicalize(ds, c);
    if (c.alphabet == alphabet_tag::nary) {
        for (int d : c.preperiod)
            if (!ds.in_delta_plus(d))
                fail(errc::invalid_argument, "n-ary digits outside the difference set");
        for (int d : c.period)
            if (!ds.in_delta_plus(d))
                fail(errc::invalid_argument, "n-ary digits outside the difference set");
        c.alphabet = alphabet_tag::delta_plus;
        return c;
    }
    validate_code(ds, c);
    c.alphabet = alphabet_tag::delta_plus;
    return c;
}

bool member_c(const DigitSet& ds, const Rat& x) {
    if (x < 0 || x > 1) return false;
    try {
        code_from_rational(x, ds.base(), alphabet_tag::d_only, &ds);
        return true;
    } catch (const error&) {
        return false;
    }
}

} // namespace

const SliceSet& SliceSequence::at(int k) const {
    if (k < 1) fail(errc::invalid_argument, "slice index starts at 1");
    if (k <= pre_len()) return pre[k - 1];
    if (per.empty()) fail(errc::undecided_prefix, "slice beyond the known prefix");
    return per[(k - pre_len() - 1) % per.size()];
}

SliceSequence slice_sequence(const DigitSet& ds, const PeriodicCode& alpha) {
    if (!ds.sparse()) fail(errc::not_sparse, "requires a sparse digit set");
    PeriodicCode c = alpha.prefix_only ? alpha : to_delta_plus(ds, alpha);
    SliceSequence out;
    out.prefix_only = c.prefix_only;
    std::vector<int> mins_pre, mins_per;
    for (int d : c.preperiod) {
        out.pre.push_back(ds.slice(d));
        if (out.pre.back().empty()) fail(errc::not_in_f, "empty slice: digit not a difference");
        mins_pre.push_back(out.pre.back().min_raw);
    }
    for (int d : c.period) {
        out.per.push_back(ds.slice(d));
        if (out.per.back().empty()) fail(errc::not_in_f, "empty slice: digit not a difference");
        mins_per.push_back(out.per.back().min_raw);
    }
    out.inf_offset = value_from_digits(ds.base(), mins_pre, mins_per);
    return out;
}

EquivalenceResult equivalent(const DigitSet& ds, const PeriodicCode& a, const PeriodicCode& b) {
    if (!ds.sparse()) fail(errc::not_sparse, "requires a sparse digit set");
    EquivalenceResult res;
    if (a.prefix_only || b.prefix_only) {
        const PeriodicCode& pa = a;
        const PeriodicCode& pb = b;
        int len = std::min<int>(
            pa.prefix_only ? pa.preperiod.size() : 1 << 20,
            pb.prefix_only ? pb.preperiod.size() : 1 << 20);
        res.decided = false;
        res.equal = true;
        for (int k = 1; k <= len; ++k) {
            if (!(ds.slice(std::abs(pa.digit_at(k))).members ==
                  ds.slice(std::abs(pb.digit_at(k))).members)) {
                res.decided = true;
                res.equal = false;
                res.witness_k = k;
                return res;
            }
        }
        return res;
    }
    PeriodicCode ca = to_delta_plus(ds, a);
    PeriodicCode cb = to_delta_plus(ds, b);
    int pa = std::max<int>(1, ca.period.size());
    int pb = std::max<int>(1, cb.period.size());
    int window = std::max<int>(ca.preperiod.size(), cb.preperiod.size()) + std::lcm(pa, pb);
    for (int k = 1; k <= window; ++k) {
        if (!(ds.slice(ca.digit_at(k)).members == ds.slice(cb.digit_at(k)).members)) {
            res.equal = false;
            res.witness_k = k;
            return res;
        }
    }
    res.equal = true;
    return res;
}

RationalEquivalenceResult rational_equivalent(const DigitSet& ds, const PeriodicCode& alpha,
                                              int kmax, int qmax) {
    if (!ds.sparse()) fail(errc::not_sparse, "requires a sparse digit set");
    RationalEquivalenceResult res;
    if (!alpha.prefix_only) {
        PeriodicCode c = to_delta_plus(ds, alpha);
        res.verdict = rational_verdict::yes;
        res.k = static_cast<int>(c.preperiod.size());
        res.q = static_cast<int>(c.period.size());
        res.gamma = c;
        return res;
    }

    res.verdict = rational_verdict::undecided_prefix;
    int len = static_cast<int>(alpha.preperiod.size());
    std::vector<std::vector<int>> slices;
    slices.reserve(len);
    for (int k = 1; k <= len; ++k) {
        SliceSet s = ds.slice(std::abs(alpha.digit_at(k)));
        if (s.empty()) fail(errc::not_in_f, "empty slice: digit not a difference");
        slices.push_back(s.members);
    }
    for (int q = 1; q <= qmax; ++q) {
        int last_violation = 0;
        for (int j = 1; j + q <= len; ++j)
            if (!subset(slices[j - 1], slices[j + q - 1])) last_violation = j;
        if (last_violation > 0) res.violations[q] = last_violation;
        // a candidate only needs the condition past some k <= kmax
        if (last_violation <= kmax && len > q && !res.candidate)
            res.candidate = {last_violation, q};
    }
    return res;
}

FiniteResult is_finite(const DigitSet& ds, const PeriodicCode& alpha, const Budget& budget) {
    if (!ds.sparse()) fail(errc::not_sparse, "requires a sparse digit set");
    if (alpha.prefix_only) fail(errc::undecided_prefix, "needs an eventually periodic code");
    PeriodicCode c = to_delta_plus(ds, alpha);
    SliceSequence sl = slice_sequence(ds, c);

    FiniteResult res;
    for (const SliceSet& s : sl.per)
        if (s.size() > 1) return res; // infinite

    res.finite = true;
    int n = ds.base();

    // equivalent rational: keep the prefix through the last fat slice, then d_m forever
    int K = 0;
    for (int k = 1; k <= sl.pre_len(); ++k)
        if (sl.at(k).size() > 1) K = k;
    PeriodicCode gamma;
    gamma.base = n;
    gamma.alphabet = alphabet_tag::delta_plus;
    for (int k = 1; k <= K; ++k) gamma.preperiod.push_back(c.digit_at(k));
    gamma.period = {ds.max_digit()};
    res.gamma = canonical(gamma);

    // digitwise points: product over the fat prefix, fixed tail beyond
    std::vector<int> tail_pre, tail_per;
    for (int k = K + 1; k <= sl.pre_len(); ++k) tail_pre.push_back(sl.at(k).min_raw);
    for (const SliceSet& s : sl.per) tail_per.push_back(s.min_raw);
    Rat tail = value_from_digits(n, tail_pre, tail_per) * inv_pow(n, K);

    std::vector<Rat> pts{tail};
    for (int k = 1; k <= K; ++k) {
        std::vector<Rat> next;
        const SliceSet& s = sl.at(k);
        Rat scale = inv_pow(n, k);
        for (const Rat& p : pts)
            for (int m : s.members) next.push_back(p + Rat(m + s.min_raw) * scale);
        pts = std::move(next);
        if (static_cast<long long>(pts.size()) > budget.max_items)
            fail(errc::budget_exceeded, "too many points");
    }

    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // boundary completion: touching points exist only when d_m = n-1
    Rat v = value_of(c);
    std::vector<Rat> extra;
    auto is_new = [&](const Rat& p) {
        return !std::binary_search(pts.begin(), pts.end(), p);
    };
    if (ds.max_digit() == n - 1) {
        if (member_c(ds, Rat(1) - v) && is_new(Rat(1))) extra.push_back(Rat(1));
        // n-adic values additionally admit cell-corner touch points
        int adic = -1;
        Rat scaled = v;
        for (int k = 0; k <= 64; ++k) {
            if (den(scaled) == 1) { adic = k; break; }
            scaled *= n;
        }
        if (adic >= 0) {
            int L = adic + sl.pre_len() + 2 * std::max(1, sl.per_len()) + 4;
            for (int tries = 0; tries < 64; ++tries, ++L) {
                IntersectResult ir = intersect_level(ds, c, L, budget);
                if (!ir.tight.intervals.empty()) continue;
                for (const Rat& p : ir.tight.points)
                    if (is_new(p) && member_c(ds, p) && member_c(ds, p - v)) extra.push_back(p);
                break;
            }
        }
    }
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());

    res.points = std::move(pts);
    res.boundary_points = std::move(extra);
    return res;
}

namespace {

// Slice pattern period within the periodic zone (divides the code period).
int slice_period(const SliceSequence& sl) {
    int P = sl.per_len();
    for (int d = 1; d <= P; ++d) {
        if (P % d) continue;
        bool ok = true;
        for (int i = 0; i < P && ok; ++i)
            if (!(sl.per[i].members == sl.per[i % d].members)) ok = false;
        if (ok) return d;
    }
    return std::max(P, 1);
}

} // namespace

StrongPeriodicityResult strongly_periodic(const DigitSet& ds, const PeriodicCode& alpha) {
    if (!ds.sparse()) fail(errc::not_sparse, "requires a sparse digit set");
    if (alpha.prefix_only) fail(errc::undecided_prefix, "needs an eventually periodic code");
    PeriodicCode c = to_delta_plus(ds, alpha);
    SliceSequence sl = slice_sequence(ds, c);
    bool uniform = ds.uniform();
    int k0 = sl.pre_len();
    int P = std::max(1, sl.per_len());
    int Pp = slice_period(sl);
    int bound = 4 * P + k0 + 1;

    StrongPeriodicityResult res;
    for (int q = 1; q <= bound; ++q) {
        // violations repeat with the slice pattern, so a finite window decides
        int window = k0 + std::lcm(q, Pp);
        bool ok = true;
        for (int j = 1; j <= window && ok; ++j) {
            const auto& from = sl.at(j).members;
            const auto& to = sl.at(j + q).members;
            if (uniform) {
                ok = subset(from, to);
            } else {
                ok = sumset_decompose(to, from).has_value();
            }
        }
        if (!ok) continue;

        res.strongly_periodic = true;
        res.q = q;
        // stabilization multiplier: slices constant at lag pq beyond pq
        int p = 1;
        while (p * q < k0 || (p * q) % Pp != 0) ++p;
        res.p = p;
        for (int j = 1; j <= p * q; ++j) {
            auto w = sumset_decompose(sl.at(j + p * q).members, sl.at(j).members);
            if (!w) fail(errc::invalid_argument, "witness aggregation failed");
            res.witnesses.push_back(*w);
        }
        return res;
    }
    return res;
}

const char* verdict_name(selfsim_verdict v) {
    switch (v) {
    case selfsim_verdict::finite: return "FINITE";
    case selfsim_verdict::strongly_periodic: return "STRONGLY_PERIODIC";
    case selfsim_verdict::rational_equivalent: return "RATIONAL_EQUIVALENT";
    case selfsim_verdict::undecided_prefix: return "UNDECIDED_PREFIX";
    }
    return "?";
}

namespace {

// Reduce any exact input code to a Δ⁺ representative plus the translate
// relating the two intersections: C ∩ (C+t) = (C ∩ (C+value(alpha))) + shift.
struct DeltaPlusForm {
    PeriodicCode alpha;
    Rat shift;
    int source_period = 0;
};

Rat negative_part(const PeriodicCode& signed_code) {
    std::vector<int> pre, per;
    for (int d : signed_code.preperiod) pre.push_back(std::min(d, 0));
    for (int d : signed_code.period) per.push_back(std::min(d, 0));
    return value_from_digits(signed_code.base, pre, per);
}

DeltaPlusForm delta_plus_form(const DigitSet& ds, const PeriodicCode& code) {
    PeriodicCode c = canonical(code);
    DeltaPlusForm out;
    out.source_period = static_cast<int>(c.period.size());
    switch (c.alphabet) {
    case alphabet_tag::delta_plus:
    case alphabet_tag::d_only:
        validate_code(ds, c);
        out.alpha = c;
        out.alpha.alphabet = alphabet_tag::delta_plus;
        out.shift = 0;
        return out;
    case alphabet_tag::delta: {
        validate_code(ds, c);
        out.alpha = abs_canonicalize(ds, c);
        out.shift = negative_part(c);
        return out;
    }
    case alphabet_tag::nary: break;
    }
    for (int d : c.preperiod)
        if (d < 0 || d >= ds.base()) fail(errc::invalid_argument, "digit out of range");
    for (int d : c.period)
        if (d < 0 || d >= ds.base()) fail(errc::invalid_argument, "digit out of range");

    if (c.finite_rep()) {
        Rat v = value_of(c);
        try {
            out.alpha = code_from_rational(v, ds.base(), alphabet_tag::delta_plus, &ds);
            out.shift = 0;
            return out;
        } catch (const error&) {
        }
        try {
            PeriodicCode signed_code = code_from_rational(v, ds.base(), alphabet_tag::delta, &ds);
            out.alpha = abs_canonicalize(ds, signed_code);
            out.shift = negative_part(signed_code);
            return out;
        } catch (const error&) {
            fail(errc::not_in_f, "value is not a difference of two set points");
        }
    }

    if (!sigma_all_pm_one(ds, c)) fail(errc::not_in_f, "sigma leaves {+1,-1}: empty intersection");
    PsiResult pr = psi(ds, c);
    out.alpha = pr.y;
    out.shift = -pr.offset;
    return out;
}

bool sparse_int_digits(const std::vector<Int>& e) {
    std::set<Int> deltas;
    for (const Int& a : e)
        for (const Int& b : e) deltas.insert(a - b);
    Int prev;
    bool first = true;
    for (const Int& d : deltas) {
        if (!first && d - prev < 2) return false;
        prev = d;
        first = false;
    }
    return true;
}

} // namespace

SelfSimilarReport self_similar_report(const DigitSet& ds, const PeriodicCode& code,
                                      const Budget& budget) {
    if (!ds.sparse()) fail(errc::not_sparse, "requires a sparse digit set");
    SelfSimilarReport rep;
    rep.base = ds.base();

    if (code.prefix_only) {
        rep.verdict = selfsim_verdict::undecided_prefix;
        rep.alpha = code;
        return rep;
    }

    DeltaPlusForm form = delta_plus_form(ds, code);
    rep.alpha = form.alpha;
    rep.shift = form.shift;
    SliceSequence sl = slice_sequence(ds, rep.alpha);
    rep.k = sl.pre_len();
    rep.q = std::max(1, sl.per_len());

    // μ at the preperiod boundary and the copy offsets
    rep.mu_k = 1;
    std::vector<Rat> offs{form.shift};
    for (int j = 1; j <= rep.k; ++j) {
        const SliceSet& s = sl.at(j);
        rep.mu_k *= Int(s.size());
        if (rep.mu_k > budget.max_items) fail(errc::budget_exceeded, "too many copies");
        std::vector<Rat> next;
        Rat scale = inv_pow(ds.base(), j);
        for (const Rat& o : offs)
            for (int m : s.members) next.push_back(o + Rat(m + s.min_raw) * scale);
        offs = std::move(next);
    }
    std::sort(offs.begin(), offs.end());
    rep.offsets = std::move(offs);

    // digit set E in base n^q from the period slices
    rep.e_base = pow_int(ds.base(), static_cast<unsigned>(rep.q));
    std::vector<Int> e{0};
    for (int j = 1; j <= rep.q; ++j) {
        const SliceSet& s = sl.per[(j - 1) % sl.per_len()];
        std::vector<Int> next;
        for (const Int& val : e)
            for (int m : s.members) next.push_back(val * ds.base() + (m + s.min_raw));
        e = std::move(next);
        if (static_cast<long long>(e.size()) > budget.max_items)
            fail(errc::budget_exceeded, "digit set E too large");
    }
    std::sort(e.begin(), e.end());
    rep.e = std::move(e);
    if (!sparse_int_digits(rep.e))
        fail(errc::invalid_argument, "constructed E is not sparse; sparsity propagation failed");

    if (rep.q == form.source_period && rep.e.size() * rep.e.size() <= 65536) {
        rep.e2p_base = rep.e_base * rep.e_base;
        for (const Int& a : rep.e)
            for (const Int& b : rep.e) rep.e2p.push_back(a * rep.e_base + b);
        std::sort(rep.e2p.begin(), rep.e2p.end());
    }

    SigmaTrace trace = sigma_trace(ds, rep.alpha, std::max(1, rep.k + rep.q));
    rep.dim = dimension(ds, rep.alpha, trace);

    FiniteResult fin = is_finite(ds, rep.alpha, budget);
    if (fin.finite) {
        rep.verdict = selfsim_verdict::finite;
        for (const Rat& p : fin.points) rep.points.push_back(p + form.shift);
        for (const Rat& p : fin.boundary_points) rep.boundary_points.push_back(p + form.shift);
        rep.gamma = fin.gamma;
        size_t count = fin.points.size() + fin.boundary_points.size();
        rep.measure = make_measure(Rat(Int(count)), 1, rep.dim); // counting measure
        return rep;
    }

    // Hausdorff measure via the two-digit closed form when it applies
    if (rep.e.size() == 2) {
        MeasureValue base_m = make_measure(1, Rat(rep.e[1] - rep.e[0], rep.e_base - 1), rep.dim);
        rep.measure = measure_scaled(rep.mu_k, ds.base(), rep.k, rep.dim, base_m);
    } else {
        rep.measure = undefined_measure("closed form requires a two-digit base set");
    }

    StrongPeriodicityResult sp = strongly_periodic(ds, rep.alpha);
    rep.sp = sp;
    if (!sp.strongly_periodic) {
        rep.verdict = selfsim_verdict::rational_equivalent;
        return rep;
    }

    rep.verdict = selfsim_verdict::strongly_periodic;
    int pq = sp.p * sp.q;
    Rat ratio = inv_pow(ds.base(), pq);
    std::vector<Rat> bs{0};
    for (int j = 1; j <= pq; ++j) {
        const auto& y_opts = sl.at(j).members;
        const auto& z_opts = sp.witnesses[j - 1];
        Rat scale = inv_pow(ds.base(), j);
        std::vector<Rat> next;
        for (const Rat& b : bs)
            for (int y : y_opts)
                for (int z : z_opts) next.push_back(b + (Rat(y) + Rat(z) * ratio) * scale);
        bs = std::move(next);
        if (static_cast<long long>(bs.size()) > budget.max_items)
            fail(errc::budget_exceeded, "too many similarity maps");
    }
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());

    // hull of C(alpha): [0, Σ max(D_{α_k}) n^{-k}]
    std::vector<int> mx_pre, mx_per;
    for (const SliceSet& s : sl.pre) mx_pre.push_back(s.members.back());
    for (const SliceSet& s : sl.per) mx_per.push_back(s.members.back());
    Rat hull = value_from_digits(ds.base(), mx_pre, mx_per);

    rep.hull_disjoint = true;
    for (size_t i = 0; i < bs.size(); ++i) {
        rep.maps.push_back({ratio, bs[i]});
        if (i + 1 < bs.size() && bs[i + 1] < bs[i] + hull * ratio) rep.hull_disjoint = false;
    }
    return rep;
}

std::vector<int> thue_morse_bits(int count) {
    std::vector<int> bits(count);
    for (int h = 0; h < count; ++h) bits[h] = __builtin_popcount(static_cast<unsigned>(h)) & 1;
    return bits;
}

GeneratorResult generate_nonequivalent(const DigitSet& ds, const PeriodicCode& alpha, int delta,
                                       const std::vector<int>& bits, int depth) {
    if (!ds.sparse()) fail(errc::not_sparse, "requires a sparse digit set");
    PeriodicCode c = to_delta_plus(ds, alpha);
    if (!c.preperiod.empty())
        fail(errc::invalid_argument, "generator needs a purely periodic code");
    int p = static_cast<int>(c.period.size());

    // first in-period index whose slice is bigger than {0}
    int idx = 0;
    for (int j = 1; j <= p; ++j)
        if (ds.slice(c.digit_at(j)).size() > 1) { idx = j; break; }
    if (idx == 0) fail(errc::invalid_argument, "the intersection is finite; nothing to vary");

    if (!ds.in_delta_plus(delta)) fail(errc::bad_delta, "delta must lie in the difference set");
    if (subset(ds.slice(c.digit_at(idx)).members, ds.slice(delta).members))
        fail(errc::bad_delta, "slice at the chosen index embeds into the delta slice");

    GeneratorResult out;
    out.index_i = idx;
    out.gamma_prefix.base = ds.base();
    out.gamma_prefix.alphabet = alphabet_tag::delta_plus;
    out.gamma_prefix.prefix_only = true;
    for (int j = 1; j <= depth; ++j) {
        int digit = c.digit_at(j);
        if ((j - idx) % p == 0 && j >= idx) {
            int h = (j - idx) / p;
            if (h >= static_cast<int>(bits.size()))
                fail(errc::invalid_argument, "bit sequence too short for the depth");
            if (bits[h] == 1) {
                out.kept.push_back(h);
            } else {
                digit = delta;
            }
        }
        out.gamma_prefix.preperiod.push_back(digit);
    }
    return out;
}

UniformHatResult uniform_hat(const DigitSet& ds, const PeriodicCode& alpha) {
    if (!ds.uniform()) fail(errc::not_uniform, "requires a uniform digit set");
    if (ds.base() != ds.max_digit() + 1)
        fail(errc::not_applicable, "requires base = max digit + 1");
    PeriodicCode c = canonical(alpha);
    if (c.prefix_only) fail(errc::undecided_prefix, "needs an eventually periodic code");
    for (int d : c.preperiod)
        if (!ds.in_delta(d)) fail(errc::invalid_argument, "digits must lie in the difference set");
    for (int d : c.period)
        if (!ds.in_delta(d)) fail(errc::invalid_argument, "digits must lie in the difference set");

    UniformHatResult out;
    out.hat.base = c.base;
    out.hat.alphabet = alphabet_tag::d_only;
    for (int d : c.preperiod) out.hat.preperiod.push_back(ds.max_digit() - std::abs(d));
    for (int d : c.period) out.hat.period.push_back(ds.max_digit() - std::abs(d));
    // digit stream of the hat, un-canonicalized so alignment indices are stable
    PeriodicCode stream = out.hat;
    out.hat = canonical(out.hat);

    int k0 = static_cast<int>(stream.preperiod.size());
    int P = std::max<size_t>(stream.period.size(), 1);
    int bound = 2 * (k0 + P) + 2;
    for (int p = 1; p <= bound && !out.aligned; ++p) {
        int window = k0 + std::lcm(p, P) + p;
        bool periodic = true;
        for (int j = p + 1; j + p <= window && periodic; ++j)
            if (stream.digit_at(j) != stream.digit_at(j + p)) periodic = false;
        if (!periodic) continue;
        bool mono = true;
        for (int j = 1; j <= p && mono; ++j)
            if (stream.digit_at(j) > stream.digit_at(j + p)) mono = false;
        if (!mono) continue;
        out.aligned = true;
        out.p = p;
        for (int j = 1; j <= p; ++j) {
            out.u.push_back(stream.digit_at(j));
            out.v.push_back(stream.digit_at(j + p));
        }
    }
    return out;
}

} // namespace cantor
