#pragma once

#include <json.hpp>

#include "cantor/betaexp.hpp"
#include "cantor/digitset.hpp"
#include "cantor/equivalence.hpp"
#include "cantor/intervals.hpp"
#include "cantor/kernel.hpp"
#include "cantor/measure.hpp"
#include "cantor/radix.hpp"

namespace cantor {

using json = nlohmann::json;

json to_json(const Classification& c);
json to_json(const DigitSet& ds);
json to_json(const SliceSet& s);
json to_json(const PeriodicCode& c);
PeriodicCode code_from_json(const json& j);
json to_json(const SigmaTrace& tr, const DigitSet& ds, const PeriodicCode& code, int depth);
json to_json(const CaseTable& ct);
json to_json(const IntervalSet& s);
json to_json(const IntersectResult& r);
json to_json(const BoxCurve& c);
json to_json(const DimensionValue& d);
json to_json(const MeasureValue& m);
json to_json(const EquivalenceResult& r);
json to_json(const RationalEquivalenceResult& r);
json to_json(const SelfSimilarReport& r);
json to_json(const GeneratorResult& r);
json to_json(const UniformHatResult& r);
json to_json(const TransportReport& r);
json to_json(const PsiResult& r);

} // namespace cantor
