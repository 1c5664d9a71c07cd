#pragma once

#include <string>

#include "cantor/digitset.hpp"
#include "cantor/kernel.hpp"
#include "cantor/radix.hpp"
#include "cantor/rational.hpp"

namespace cantor {

// s = log_base(count), kept exact as the reduced integer pair.
struct DimensionValue {
    Int count = 1;
    Int logbase = 2;

    double value() const;
    std::string exact() const;
    bool operator==(const DimensionValue& o) const;
};

DimensionValue make_dimension(Int count, Int logbase);

// q * a^s with q, a rational; powers of the dimension's log base are folded
// into the rational factor, so equal values get equal representations.
struct MeasureValue {
    bool defined = false;
    std::string reason; // set when undefined
    Rat factor = 1;     // q
    Rat base_arg = 1;   // a
    DimensionValue s;

    double value() const;
    std::string exact() const;
};

MeasureValue undefined_measure(std::string reason);
MeasureValue make_measure(Rat factor, Rat base_arg, DimensionValue s);

// (1/q) Σ log_n #(D ∩ (D + x_j)) over the period digits of a σ ≡ 1 code.
DimensionValue dimension(const DigitSet& ds, const PeriodicCode& code, const SigmaTrace& trace);

// Dimension and measure straight from the state trace, recoding first when
// the trace has -1 states. Works for non-sparse digit sets too, as long as
// the trace stays in {+1,-1}; sparsity is only needed by the full report.
DimensionValue dimension_of(const DigitSet& ds, const PeriodicCode& code);
MeasureValue measure_of(const DigitSet& ds, const PeriodicCode& code);

// H^s(C_{n,{a,b}}) = ((b-a)/(n-1))^s with s = log_n 2.
MeasureValue measure_two_digit(int n, int a, int b);

// Measure of mu_k disjoint copies of n^{-k} B.
MeasureValue measure_scaled(const Int& mu_k, int base, int k, const DimensionValue& s,
                            const MeasureValue& base_measure);

} // namespace cantor
