#pragma once

#include <nlohmann/json.hpp>

#include "typeb/cumulants.hpp"
#include "typeb/dual_scalar.hpp"
#include "typeb/limit_theorems.hpp"
#include "typeb/matrix_model.hpp"
#include "typeb/series.hpp"

namespace typeb {

// Key order is part of the output contract (golden files), hence ordered_json.
using Json = nlohmann::ordered_json;

// DualScalar <-> ["p/q", "r/s"]
Json to_json(const DualScalar& a);
DualScalar dual_from_json(const Json& j);

// Series <-> {"order": N, "coeffs": [pair, ...]}
Json to_json(const CSeries& f);
CSeries cseries_from_json(const Json& j);
Json to_json(const UnitSeries& f);
UnitSeries unit_series_from_json(const Json& j);

// Sequences <-> plain arrays of pairs
Json to_json(const MomentSequence& m);
Json to_json(const CumulantSequence& k);
MomentSequence moments_from_json(const Json& j);
CumulantSequence cumulants_from_json(const Json& j);

// {"N": n, "cumulants": [...], "limit": [...], "deviation": [...]}
Json to_json(const LimitReportEntry& e);

// {"dimension": d, "weights": [[...], ...]}
Json to_json(const MatrixModel& m);
MatrixModel matrix_model_from_json(const Json& j);
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

}  // namespace typeb
