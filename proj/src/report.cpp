#include "toruscalc/report.hpp"

#include <limits>
#include <string>

namespace toruscalc {

Json json_int(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) return v.str();
  return static_cast<long long>(v);
}

Json json_invariants(const AbelianInvariants& a) {
  Json out = Json::array();
  for (const BigInt& d : a.invariant_factors) out.push_back(json_int(d));
  return out;
}

Json json_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_int(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json json_outcome(const EnumerationOutcome& o) {
  Json out;
  out["status"] =
      o.completed() ? "completed" : "budget_exceeded";
  out["index"] = o.completed() ? Json(o.index) : Json(nullptr);
  out["cosets_defined"] = o.cosets_defined;
  out["budget"] = o.budget;
  return out;
}

Json verification_report(std::string_view command, std::string_view claim,
                         const SphereVerification& v) {
  Json out;
  out["command"] = command;
  out["claim"] = claim;
  out["params"] = {{"m", v.params[0]},
                   {"n", v.params[1]},
                   {"mp", v.params[2]},
                   {"np", v.params[3]}};
  out["chi"] = v.chi;
  out["h1"] = json_invariants(v.h1);
  out["enumeration"] = json_outcome(v.enumeration);
  out["presentation"] = to_string(v.presentation);
  out["verdict"] = to_string(v.verdict);
  out["elapsed_ms"] = nullptr;
  return out;
}

}  // namespace toruscalc
