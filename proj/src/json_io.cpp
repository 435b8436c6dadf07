#include "steinchar/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace steinchar {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(key).dump() << sep;
        write(os, value, indent, depth + 1);
      }
      os << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      bool first = true;
      for (const auto& value : j) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        write(os, value, indent, depth + 1);
      }
      os << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float: os << format_double(j.get<double>()); return;
    default: os << j.dump(); return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

Json signature_json(const Signature& s) { return Json(s.parts()); }

Json bound_json(const BoundReport& r) {
  Json j;
  j["theta"] = r.theta;
  j["a"] = r.a;
  j["term1"] = r.term1;
  j["term2"] = r.term2;
  j["total"] = r.total;
  j["limit_term1"] = r.limit_term1 ? Json(*r.limit_term1) : Json(nullptr);
  j["limit_coeff_term2"] = r.limit_coeff_term2 ? Json(*r.limit_coeff_term2) : Json(nullptr);
  return j;
}

Json limit_json(const LimitReport& r) {
  Json j;
  j["family"] = family_name(r.family);
  j["n"] = r.n;
  j["paper_bound"] = r.stated_bound;
  j["exact_limit"] = r.exact_limit;
  j["extrapolated_limit"] = r.extrapolated_limit;
  j["limit_coeff_term2"] = r.term2_coefficient;
  j["extrapolated_coeff_term2"] = r.extrapolated_term2_coefficient;
  return j;
}

Json moments_json(const MomentReport& m) {
  Json j;
  j["e2"] = m.e2;
  j["e4"] = m.e4;
  j["condvar"] = m.condvar;
  return j;
}

Json kolmogorov_json(const KolmogorovReport& r) {
  Json j;
  j["d_stat"] = r.d_stat;
  j["count"] = r.count;
  j["delta"] = r.delta;
  j["dkw_epsilon"] = r.dkw_epsilon;
  j["bound_compared"] = r.bound_compared;
  j["passed"] = r.passed;
  return j;
}

namespace {

Json component_json(const DecompositionTable& t, const IrrepComponent& c, const ClassParameter& p) {
  Json j;
  j["label"] = c.label;
  j["signature"] = c.signature ? signature_json(*c.signature) : Json(nullptr);
  j["multiplicity"] = c.multiplicity;
  j["dim"] = c.dim;
  j["hilbert_dim"] = t.hilbert_dim(c);
  j["is_trivial"] = c.is_trivial;
  j["ratio_at_theta"] = c.ratio(p);
  return j;
}

}  // namespace

Json table_json(const DecompositionTable& t, const ClassParameter& p) {
  Json j;
  j["family"] = t.family ? Json(family_name(*t.family)) : Json(nullptr);
  j["n"] = t.n;
  j["case"] = t.case_kind == CaseKind::Real ? "real" : "complex";
  if (t.alpha_param) j["alpha_param"] = *t.alpha_param;
  j["theta"] = p.value();
  j["a"] = t.a(p);
  j["tau"] = component_json(t, t.tau, p);
  j["components"] = Json::array();
  for (const auto& c : t.components) j["components"].push_back(component_json(t, c, p));
  return j;
}

}  // namespace steinchar
