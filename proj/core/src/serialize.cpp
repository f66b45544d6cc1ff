#include "dilbasis/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dilbasis {

namespace {

using nlohmann::ordered_json;

ordered_json profile_json(const ProfileSpec& s) {
  ordered_json j;
  j["family"] = s.name();
  if (s.kind() != ProfileKind::Jump) j["param"] = s.param();
  return j;
}

ordered_json torus_json(const TorusMinResult& t) {
  ordered_json j;
  j["mu"] = t.mu;
  j["argmin"] = t.argmin;
  j["method"] = t.method == MinMethod::ClosedForm ? "ClosedForm" : "GridRefine";
  j["grid_resolution"] = t.grid_resolution;
  j["refine_tolerance"] = t.refine_tolerance;
  j["grid_mu"] = t.grid_mu;
  return j;
}

ordered_json criterion_json(const CriterionReport& r) {
  ordered_json j;
  j["profile"] = profile_json(r.profile);
  j["support"] = r.support;
  j["support_coeffs"] = r.support_coeffs;
  j["k"] = r.k;
  j["mu"] = r.mu;
  j["mu_raw"] = r.mu_raw;
  j["phi"] = r.phi;
  j["sum_F_abs"] = r.sum_F_abs;
  j["correction"] = r.correction;
  j["cond1_margin"] = r.cond1_margin;
  j["cond2_value"] = r.cond2_value;
  j["verdict"] = to_string(r.verdict);
  j["torus"] = torus_json(r.torus);
  return j;
}

ordered_json root_json(const RootResult& r) {
  ordered_json j;
  j["root"] = r.root;
  j["lo"] = r.lo;
  j["hi"] = r.hi;
  j["f_lo"] = r.f_lo;
  j["f_hi"] = r.f_hi;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  return j;
}

ordered_json threshold_json(const ThresholdValue& v) {
  ordered_json j;
  j["name"] = v.name;
  j["parameter"] = v.parameter;
  j["value"] = v.value;
  if (v.k >= 0) j["k"] = v.k;
  if (v.d > 0) j["d"] = v.d;
  j["margin"] = v.description;
  j["bisection"] = root_json(v.root);
  return j;
}

std::string dump(const ordered_json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string to_json(const CriterionReport& r, int indent) { return dump(criterion_json(r), indent); }

std::string to_json(const TwoTermReport& r, int indent) {
  ordered_json j;
  j["profile"] = profile_json(r.profile);
  j["prime"] = r.prime;
  j["k"] = r.k;
  j["f1"] = r.f1;
  j["fp"] = r.fp;
  j["fp2"] = r.fp2;
  j["coefficient_gate"] = r.coefficient_gate;
  j["regime"] = r.regime;
  j["mu"] = r.mu;
  j["rest_bound"] = r.rest_bound;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["verdict"] = to_string(r.verdict);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return dump(j, indent);
}

std::string to_json(const PSineMultiTermReport& r, int indent) {
  ordered_json j;
  j["p"] = r.p;
  j["d"] = r.d;
  j["k"] = r.k;
  j["value"] = r.value;
  j["mu"] = r.mu;
  j["main_sum"] = r.main_sum;
  j["main_margin"] = r.main_margin;
  j["verdict"] = to_string(r.verdict);
  j["criterion"] = criterion_json(r.criterion);
  return dump(j, indent);
}

std::string to_json(const PSineThreeTermReport& r, int indent) {
  ordered_json j;
  j["p"] = r.p;
  j["k"] = r.k;
  j["s1"] = r.s1;
  j["s3"] = r.s3;
  j["s9"] = r.s9;
  j["cond1_margin"] = r.cond1_margin;
  j["cond2_margin"] = r.cond2_margin;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["verdict"] = to_string(r.verdict);
  return dump(j, indent);
}

std::string to_json(const ThresholdValue& v, int indent) { return dump(threshold_json(v), indent); }

std::string to_json(const std::map<std::string, ThresholdValue>& values, int indent) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, v] : values) j[name] = threshold_json(v);
  return dump(j, indent);
}

std::string to_json(const BoundResult& r, int indent) {
  ordered_json j;
  j["k"] = r.k;
  j["p"] = r.p;
  j["placement"] = r.scheme.placement == Placement::Uniform ? "uniform" : "uniform-in-value";
  j["m_minus"] = r.scheme.m_minus;
  j["m_plus"] = r.scheme.m_plus;
  ordered_json segs = ordered_json::array();
  for (const auto& s : r.scheme.partition.decreasing) segs.push_back({{"lo", s.lo}, {"hi", s.hi}});
  j["decreasing_segments"] = segs;
  segs = ordered_json::array();
  for (const auto& s : r.scheme.partition.increasing) segs.push_back({{"lo", s.lo}, {"hi", s.hi}});
  j["increasing_segments"] = segs;
  ordered_json chords = ordered_json::array();
  for (const auto& c : r.chord_terms) chords.push_back({{"y", c.y}, {"x", c.x}, {"value", c.value}});
  j["chord_terms"] = chords;
  ordered_json tangents = ordered_json::array();
  for (const auto& t : r.tangent_terms) {
    tangents.push_back({{"s", t.s}, {"t", t.t}, {"j1", t.j1}, {"j2", t.j2}, {"g", t.g}});
  }
  j["tangent_terms"] = tangents;
  if (r.has_final_tangent) {
    j["final_tangent_term"] = {{"s", r.final_tangent.s}, {"j1", r.final_tangent.j1}, {"g", r.final_tangent.g}};
  }
  j["bracket"] = r.bracket;
  j["total"] = r.total;
  return dump(j, indent);
}

std::string to_json(const IntervalBound& r, int indent) {
  ordered_json j;
  j["k"] = r.k;
  j["lambda"] = r.lambda;
  j["at_lambda"] = r.at_lambda;
  j["scan_min"] = r.scan_min;
  j["scan_argmin"] = r.scan_argmin;
  j["grid"] = r.grid;
  j["skipped"] = r.skipped;
  j["resolved_p_min"] = r.resolved_p_min;
  return dump(j, indent);
}

std::string to_json(const WitnessResult& r, int indent) {
  ordered_json j;
  j["holds"] = r.holds;
  j["tail_sum"] = r.tail_sum;
  j["first"] = r.first;
  return dump(j, indent);
}

std::string to_json(const Table& t, int indent) {
  ordered_json j;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return dump(j, indent);
}

std::string format_number(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", std::clamp(digits, 1, 17), x);
  return buf;
}

void write_csv(std::ostream& out, const Table& t, int digits) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c], digits);
    out << '\n';
  }
}

Table read_csv(std::istream& in) {
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV input");
  std::stringstream header(line);
  for (std::string cell; std::getline(header, cell, ',');) t.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') throw std::invalid_argument("bad CSV number '" + cell + "'");
      row.push_back(v);
    }
    if (row.size() != t.columns.size()) throw std::invalid_argument("CSV row width does not match the header");
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace dilbasis
