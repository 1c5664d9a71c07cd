#include "cantor/digitset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace cantor {

namespace {

Classification classify_impl(int base, const std::vector<int>& digits, const DifferenceSet& diff) {
    Classification c;

    // uniform: constant consecutive gap >= 2
    bool uniform = digits.size() >= 2;
    int gap = digits.size() >= 2 ? digits[1] - digits[0] : 0;
    for (size_t i = 1; i + 1 < digits.size(); ++i)
        if (digits[i + 1] - digits[i] != gap) uniform = false;
    uniform = uniform && gap >= 2;
    c.uniform = uniform;
    if (uniform) c.gap = gap;

    // regular: contained in a uniform digit set, i.e. all digits congruent mod some g >= 2
    for (int g = 2; g < base && !c.regular; ++g) {
        bool ok = true;
        for (int d : digits)
            if ((d - digits[0]) % g != 0) { ok = false; break; }
        if (ok) c.regular = true;
    }

    // sparse: distinct elements of Δ differ by at least 2
    bool sparse = true;
    for (size_t i = 0; i + 1 < diff.deltas.size(); ++i)
        if (diff.deltas[i + 1] - diff.deltas[i] < 2) sparse = false;
    c.sparse = sparse;
    return c;
}

} // namespace

DigitSet::DigitSet(int base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {
    if (base_ < 3) fail(errc::invalid_argument, "base must be at least 3");
    if (digits_.size() < 2) fail(errc::invalid_argument, "need at least two digits");
    if (static_cast<int>(digits_.size()) >= base_)
        fail(errc::invalid_argument, "need fewer digits than the base");
    for (size_t i = 0; i + 1 < digits_.size(); ++i)
        if (digits_[i] >= digits_[i + 1])
            fail(errc::invalid_argument, "digits must be strictly increasing");
    if (digits_.front() != 0) fail(errc::invalid_argument, "first digit must be 0");
    if (digits_.back() >= base_) fail(errc::invalid_argument, "digits must be below the base");

    std::set<int> ds;
    for (int a : digits_)
        for (int b : digits_) ds.insert(a - b);
    diff_.deltas.assign(ds.begin(), ds.end());
    for (int d : diff_.deltas)
        if (d >= 0) diff_.deltas_plus.push_back(d);
    classify_ = classify_impl(base_, digits_, diff_);
}

bool DigitSet::contains(int d) const {
    return std::binary_search(digits_.begin(), digits_.end(), d);
}

bool DigitSet::in_delta(int v) const {
    return std::binary_search(diff_.deltas.begin(), diff_.deltas.end(), v);
}

bool DigitSet::in_delta_plus(int v) const { return v >= 0 && in_delta(v); }

Classification DigitSet::classify() const { return classify_; }

std::vector<int> DigitSet::raw_slice(int delta) const {
    std::vector<int> out;
    for (int d : digits_)
        if (contains(d - delta)) out.push_back(d);
    return out;
}

SliceSet DigitSet::slice(int delta) const {
    SliceSet s;
    s.delta = delta;
    auto raw = raw_slice(delta);
    if (raw.empty()) return s;
    s.min_raw = raw.front();
    for (int d : raw) s.members.push_back(d - s.min_raw);
    return s;
}

std::optional<std::vector<int>> sumset_decompose(const std::vector<int>& target,
                                                 const std::vector<int>& base) {
    if (target.empty() || base.empty()) return std::nullopt;
    // Any valid S satisfies S ⊆ target (0 ∈ base), so enumerate subsets of target
    // containing 0, smallest cardinality first, lexicographic within a size.
    if (target.front() != 0 || base.front() != 0) return std::nullopt;
    std::vector<int> pool(target.begin() + 1, target.end());
    size_t n = pool.size();

    auto valid = [&](const std::vector<int>& s) {
        std::set<int> sum;
        for (int b : base)
            for (int x : s) sum.insert(b + x);
        return std::equal(sum.begin(), sum.end(), target.begin(), target.end()) &&
               sum.size() == target.size();
    };

    std::vector<int> cand;
    // lexicographically ordered size-k subsets of pool via recursive first-fit
    std::function<bool(size_t, size_t)> pick = [&](size_t from, size_t remaining) -> bool {
        if (remaining == 0) return valid(cand);
        for (size_t i = from; i + remaining <= n + 1 && i < n; ++i) {
            cand.push_back(pool[i]);
            if (pick(i + 1, remaining - 1)) return true;
            cand.pop_back();
        }
        return false;
    };

    for (size_t k = 0; k <= n; ++k) {
        cand.assign(1, 0);
        if (pick(0, k)) return cand;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> sumset_decompose(const SliceSet& target, const SliceSet& base) {
    if (target.empty() || base.empty())
        fail(errc::invalid_argument, "sumset_decompose needs nonempty slice sets");
    return sumset_decompose(target.members, base.members);
}

} // namespace cantor
