#include "cantor/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cantor {

IntervalSet build_level(const DigitSet& ds, int k, const Budget& budget) {
    if (k < 0) fail(errc::invalid_argument, "level must be nonnegative");
    Int count = pow_int(ds.size(), static_cast<unsigned>(k));
    if (count > budget.max_items) fail(errc::budget_exceeded, "level has too many intervals");

    std::vector<Int> lefts{0};
    for (int j = 0; j < k; ++j) {
        std::vector<Int> next;
        next.reserve(lefts.size() * ds.size());
        for (const Int& h : lefts)
            for (int d : ds.digits()) next.push_back(h * ds.base() + d);
        lefts = std::move(next);
    }
    IntervalSet out;
    out.level = k;
    out.scale = inv_pow(ds.base(), k);
    out.intervals.reserve(lefts.size());
    for (const Int& h : lefts) out.intervals.emplace_back(Rat(h) * out.scale, Rat(h + 1) * out.scale);
    return out;
}

namespace {

// Pair (h, delta): C-cell [h, h+1] against translate cell [h+delta+rho, h+delta+1+rho]
// in units of n^{-level}. Only |delta| <= 1 can interact.
using PairSet = std::set<std::pair<Int, int>>;

// Refine the pair system one level. `shift_digit` is the new digit of the
// translate offset at this level.
PairSet refine(const DigitSet& ds, const PairSet& pairs, int shift_digit, bool allow_plus_one,
               const Budget& budget) {
    PairSet next;
    int n = ds.base();
    for (const auto& [h, delta] : pairs) {
        for (int d : ds.digits()) {
            for (int d2 : ds.digits()) {
                long long nd = static_cast<long long>(delta) * n + d2 + shift_digit - d;
                if (nd < -1 || nd > 1) continue;
                if (nd == 1 && !allow_plus_one) continue;
                next.emplace(h * n + d, static_cast<int>(nd));
            }
        }
        if (static_cast<long long>(next.size()) > budget.max_items)
            fail(errc::budget_exceeded, "too many surviving interval pairs");
    }
    return next;
}

struct LevelGeometry {
    Int t_floor; // floor(v * n^k)
    Rat rho;     // v*n^k - t_floor, in [0,1)
};

LevelGeometry level_geometry(const Rat& v, int base, int k) {
    Rat scaled = v * pow_int(base, static_cast<unsigned>(k));
    Int fl = floor_rat(scaled);
    return {fl, scaled - Rat(fl)};
}

// Digits of floor(v * n^k) as successive "carry digits": tau_k = T_k - n*T_{k-1}.
int floor_digit(const Rat& v, int base, int k) {
    LevelGeometry cur = level_geometry(v, base, k);
    LevelGeometry prev = level_geometry(v, base, k - 1);
    return static_cast<int>(cur.t_floor - prev.t_floor * base);
}

IntervalSet pairs_to_set(const PairSet& pairs, int base, int level, const Rat& rho) {
    IntervalSet out;
    out.level = level;
    out.scale = inv_pow(base, level);
    std::vector<std::pair<Rat, Rat>> pieces;
    std::vector<Rat> pts;
    for (const auto& [h, delta] : pairs) {
        Rat left = Rat(h) * out.scale;
        if (rho != 0) {
            if (delta == 0) pieces.emplace_back(left + rho * out.scale, Rat(h + 1) * out.scale);
            else if (delta == -1) pieces.emplace_back(left, left + rho * out.scale);
        } else {
            if (delta == 0) pieces.emplace_back(left, Rat(h + 1) * out.scale);
            else if (delta == -1) pts.push_back(left);
            else pts.push_back(Rat(h + 1) * out.scale);
        }
    }
    std::sort(pieces.begin(), pieces.end());
    for (auto& p : pieces) {
        if (!out.intervals.empty() && out.intervals.back().second >= p.first)
            out.intervals.back().second = std::max(out.intervals.back().second, p.second);
        else
            out.intervals.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Rat& p : pts) {
        bool inside = false;
        for (auto& iv : out.intervals)
            if (iv.first <= p && p <= iv.second) { inside = true; break; }
        if (!inside) out.points.push_back(p);
    }
    return out;
}

// Exact-translate pair system for C_k ∩ (C_k + v) at every level up to k.
std::vector<PairSet> exact_pairs(const DigitSet& ds, const Rat& v, int k, const Budget& budget) {
    std::vector<PairSet> levels;
    PairSet cur;
    LevelGeometry g0 = level_geometry(v, ds.base(), 0);
    int d0 = static_cast<int>(g0.t_floor); // 0, or 1 when v = 1
    if (g0.rho != 0) {
        if (d0 >= -1 && d0 <= 0) cur.emplace(0, d0);
    } else {
        if (d0 >= -1 && d0 <= 1) cur.emplace(0, d0);
    }
    levels.push_back(cur);
    for (int j = 1; j <= k; ++j) {
        Rat rho = level_geometry(v, ds.base(), j).rho;
        cur = refine(ds, cur, floor_digit(v, ds.base(), j), rho == 0, budget);
        levels.push_back(cur);
    }
    return levels;
}

// Digit-truncation pair system classifying cells against C_k + ⌊t⌋_k.
PairSet case_pairs(const DigitSet& ds, const PeriodicCode& code, int k, const Budget& budget) {
    PairSet cur;
    cur.emplace(0, 0);
    for (int j = 1; j <= k; ++j) cur = refine(ds, cur, code.digit_at(j), true, budget);
    return cur;
}

} // namespace

IntersectResult intersect_level(const DigitSet& ds, const PeriodicCode& code, int k,
                                const Budget& budget) {
    if (k < 0) fail(errc::invalid_argument, "level must be nonnegative");
    PeriodicCode c = canonical(code);
    for (int d : c.preperiod)
        if (d < 0 || d >= ds.base()) fail(errc::invalid_argument, "digits must lie in [0, n-1]");
    for (int d : c.period)
        if (d < 0 || d >= ds.base()) fail(errc::invalid_argument, "digits must lie in [0, n-1]");
    Rat v = value_of(c);

    IntersectResult out;

    // case table against the digit truncation
    PairSet cp = case_pairs(ds, c, k, budget);
    std::map<Int, CellCase> cells;
    for (const auto& [h, delta] : cp) {
        auto& cell = cells[h];
        cell.h = h;
        // the translate cell immediately left of J carries the short piece
        // once deeper digits push the translate off the grid; the one to the
        // right loses contact. That orientation is what makes the state
        // machine's -1 branch line up with the surviving intervals.
        if (delta == 0) cell.interval = true;
        else if (delta == -1) cell.potential = true;
        else cell.potentially_empty = true;
    }
    out.cases.level = k;
    out.cases.total = pow_int(ds.size(), static_cast<unsigned>(k));
    for (auto& [h, cell] : cells) {
        out.cells.push_back(cell);
        if (cell.interval) ++out.cases.interval_cases;
        if (cell.potential) ++out.cases.potential_cases;
        if (cell.potentially_empty) ++out.cases.potentially_empty_cases;
    }
    out.cases.empty_cases = out.cases.total - Int(cells.size());
    out.cases.has_interval = out.cases.interval_cases > 0;
    out.cases.has_potential = out.cases.potential_cases > 0;

    // exact tight set
    auto levels = exact_pairs(ds, v, k, budget);
    out.tight = pairs_to_set(levels.back(), ds.base(), k, level_geometry(v, ds.base(), k).rho);
    return out;
}

std::vector<Rat> offsets(const DigitSet& ds, const PeriodicCode& code, int k,
                         const Budget& budget) {
    PeriodicCode c = canonical(code);
    SigmaTrace tr = sigma_trace(ds, c, std::max(k, 1));
    if (k >= static_cast<int>(tr.sigma.size())) fail(errc::invalid_argument, "trace too short");
    sigma_value s = tr.sigma[k];
    if (s != sigma_value::plus_one && s != sigma_value::minus_one)
        fail(errc::sigma_not_pm, "requires sigma in {+1,-1}");

    Rat v = value_of(c);
    auto levels = exact_pairs(ds, v, k, budget);
    LevelGeometry g = level_geometry(v, ds.base(), k);
    Rat scale = inv_pow(ds.base(), k);
    std::vector<Rat> out;
    for (const auto& [h, delta] : levels.back()) {
        if (g.rho != 0) {
            // sigma = +1 copies live in delta = 0 cells at h; sigma = -1 copies
            // in delta = -1 cells, shifted back by the unused part of the cell
            if (s == sigma_value::plus_one && delta == 0) out.push_back(Rat(h) * scale);
            if (s == sigma_value::minus_one && delta == -1)
                out.push_back(Rat(h - 1) * scale + g.rho * scale);
        } else {
            if (delta == 0) out.push_back(Rat(h) * scale);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BoxCurve boxcount_curve(const DigitSet& ds, const PeriodicCode& code, int kmax) {
    if (kmax < 1) fail(errc::invalid_argument, "kmax must be at least 1");
    PeriodicCode c = canonical(code);
    SigmaTrace tr = sigma_trace(ds, c, kmax);
    Rat v = value_of(c);
    bool finite_tail = c.finite_rep() || c.all_max_tail(ds.base() - 1);

    BoxCurve curve;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int npts = 0;
    for (int k = 1; k <= kmax; ++k) {
        sigma_value s = tr.sigma[k];
        if (s != sigma_value::plus_one && s != sigma_value::minus_one)
            fail(errc::sigma_not_pm, "requires sigma in {+1,-1} through kmax");
        BoxPoint bp;
        bp.level = k;
        bp.count = tr.mu[k];
        if (finite_tail) {
            bp.length = inv_pow(ds.base(), k);
        } else {
            Rat tail = v - truncate_value(c, k);
            bp.length = s == sigma_value::plus_one ? inv_pow(ds.base(), k) - tail : tail;
        }
        double x = -std::log(to_double(bp.length));
        double y = std::log(to_double(bp.count));
        bp.slope = y / x;
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++npts;
        curve.points.push_back(bp);
    }
    double denom = npts * sxx - sx * sx;
    curve.regression_slope = denom != 0 ? (npts * sxy - sx * sy) / denom : 0.0;
    return curve;
}

} // namespace cantor
