#include "typeb/json_io.hpp"

#include "typeb/errors.hpp"

namespace typeb {

namespace {

std::string expect_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": expected a rational string");
  return j.get<std::string>();
}

std::vector<DualScalar> dual_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<DualScalar> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(dual_from_json(item));
  return out;
}

}  // namespace

Json to_json(const DualScalar& a) {
  return Json::array({rational_to_string(a.x), rational_to_string(a.t)});
}

DualScalar dual_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("expected a pair of rational strings");
  return {parse_rational(expect_string(j[0], "pair")), parse_rational(expect_string(j[1], "pair"))};
}

Json to_json(const CSeries& f) {
  Json coeffs = Json::array();
  for (int k = 1; k <= f.order(); ++k) coeffs.push_back(to_json(f.coeff(k)));
  return Json{{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

CSeries cseries_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ParseError("series: expected {order, coeffs}");
  return CSeries(j["order"].get<int>(), dual_array(j["coeffs"], "series"));
}

Json to_json(const UnitSeries& f) {
  Json coeffs = Json::array();
  for (int k = 0; k <= f.order(); ++k) coeffs.push_back(to_json(f.coeff(k)));
  return Json{{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

UnitSeries unit_series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ParseError("series: expected {order, coeffs}");
  return UnitSeries(j["order"].get<int>(), dual_array(j["coeffs"], "series"));
}

Json to_json(const MomentSequence& m) {
  Json out = Json::array();
  for (int k = 1; k <= m.order(); ++k) out.push_back(to_json(m.value(k)));
  return out;
}

Json to_json(const CumulantSequence& k) {
  Json out = Json::array();
  for (int i = 1; i <= k.order(); ++i) out.push_back(to_json(k.value(i)));
  return out;
}

MomentSequence moments_from_json(const Json& j) {
  auto v = dual_array(j, "moments");
  const int order = static_cast<int>(v.size());
  return MomentSequence(order, std::move(v));
}

CumulantSequence cumulants_from_json(const Json& j) {
  auto v = dual_array(j, "cumulants");
  const int order = static_cast<int>(v.size());
  return CumulantSequence(order, std::move(v));
}

Json to_json(const LimitReportEntry& e) {
  Json deviation = Json::array();
  for (const auto& d : e.deviation) deviation.push_back(to_json(d));
  return Json{{"N", e.n_summands},
              {"cumulants", to_json(e.cumulants)},
              {"limit", to_json(e.limit)},
              {"deviation", std::move(deviation)}};
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(rational_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected rows");
  const int dim = static_cast<int>(j.size());
  RationalMatrix out(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[static_cast<size_t>(i)].is_array() ||
        j[static_cast<size_t>(i)].size() != static_cast<size_t>(dim))
      throw ParseError("matrix: row " + std::to_string(i) + " is not length " + std::to_string(dim));
    for (int c = 0; c < dim; ++c)
      out.at(i, c) =
          parse_rational(expect_string(j[static_cast<size_t>(i)][static_cast<size_t>(c)], "matrix"));
  }
  return out;
}

Json to_json(const MatrixModel& m) {
  return Json{{"dimension", m.dim()}, {"weights", to_json(m.weights)}};
}

MatrixModel matrix_model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("weights")) throw ParseError("model: expected {dimension, weights}");
  RationalMatrix w = matrix_from_json(j["weights"]);
  if (j.contains("dimension") && j["dimension"].get<int>() != w.dim())
    throw ParseError("model: dimension does not match weights");
  return MatrixModel(std::move(w));
}

}  // namespace typeb
