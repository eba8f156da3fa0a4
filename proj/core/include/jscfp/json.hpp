#pragma once

#include <nlohmann/json.hpp>

#include "jscfp/oracle.hpp"

namespace jscfp {

using Json = nlohmann::ordered_json;

// Finite reals become numbers, infinities the strings "inf" and "-inf".
// Labels become integers.

void to_json(Json& j, const ExtReal& v);
void from_json(const Json& j, ExtReal& v);

void to_json(Json& j, const Point& p);
void to_json(Json& j, const PairPoint& p);

void to_json(Json& j, const Witness& w);
void to_json(Json& j, const CheckReport& r);
void to_json(Json& j, const DeltaEstimate& d);
void to_json(Json& j, const DeltaBounds& d);
void to_json(Json& j, const ContractionSample& s);
void to_json(Json& j, const ContractionEstimate& e);
void to_json(Json& j, const OrderCondition& o);
void to_json(Json& j, const HypothesisReport& h);
void to_json(Json& j, const Trajectory& t);
void to_json(Json& j, const SolveReport& r);
void to_json(Json& j, const RateReport& r);
void to_json(Json& j, const DecayCurve& c);
void to_json(Json& j, const ProbeReport& r);
void to_json(Json& j, const OracleRun& r);
void to_json(Json& j, const OracleReport& r);

/// Fixture layout {labels, distance, leq, f}.
void to_json(Json& j, const FiniteInstance& inst);
/// Throws BadParams on malformed fixtures.
void from_json(const Json& j, FiniteInstance& inst);

/// A point from a number, an infinity string, a ratio string, or (for
/// labelled spaces) a nonnegative integer. Throws BadParams.
Point point_from_json(const Json& j, bool labelled);

} // namespace jscfp
