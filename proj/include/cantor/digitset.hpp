#pragma once

#include <optional>
#include <vector>

#include "cantor/error.hpp"

namespace cantor {

struct DifferenceSet {
    std::vector<int> deltas;      // D - D, sorted, symmetric around 0
    std::vector<int> deltas_plus; // deltas >= 0
};

// D ∩ (D+δ) shifted so its least element is 0; empty when D ∩ (D+δ) is empty.
struct SliceSet {
    int delta = 0;
    std::vector<int> members; // normalized, sorted, 0 first when nonempty
    int min_raw = 0;          // min(D ∩ (D+δ)), meaningful only when nonempty

    bool empty() const { return members.empty(); }
    size_t size() const { return members.size(); }
    bool operator==(const SliceSet& o) const { return members == o.members; }
};

struct Classification {
    bool sparse = false;
    bool regular = false;
    bool uniform = false;
    std::optional<int> gap; // constant gap when uniform
};

class DigitSet {
public:
    DigitSet(int base, std::vector<int> digits);

    int base() const { return base_; }
    const std::vector<int>& digits() const { return digits_; }
    int size() const { return static_cast<int>(digits_.size()); }
    int max_digit() const { return digits_.back(); }
    bool contains(int d) const;

    const DifferenceSet& differences() const { return diff_; }
    bool in_delta(int v) const;      // v ∈ Δ
    bool in_delta_plus(int v) const; // v ∈ Δ⁺

    Classification classify() const;
    bool sparse() const { return classify_.sparse; }
    bool uniform() const { return classify_.uniform; }

    // D ∩ (D+δ), un-normalized.
    std::vector<int> raw_slice(int delta) const;
    SliceSet slice(int delta) const;

private:
    int base_;
    std::vector<int> digits_;
    DifferenceSet diff_;
    Classification classify_;
};

// Smallest S (by cardinality, ties broken lexicographically) with
// base.members + S = target.members as an exact sumset; nullopt when none exists.
std::optional<std::vector<int>> sumset_decompose(const SliceSet& target, const SliceSet& base);
std::optional<std::vector<int>> sumset_decompose(const std::vector<int>& target,
                                                 const std::vector<int>& base);

} // namespace cantor
