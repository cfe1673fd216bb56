#include "gwbez/json_io.hpp"

namespace gwbez {

using nlohmann::json;

json gw_to_json(const GWElement& x) {
  json diag = json::array();
  switch (x.tag().kind) {
    case FieldTag::Kind::Q:
      for (const auto& d : x.q_diag()) diag.push_back(d.str());
      break;
    case FieldTag::Kind::Fp:
      for (const auto& d : x.fp_diag()) diag.push_back(d.str());
      break;
    case FieldTag::Kind::Ct:
      for (const auto& d : x.ct_diag()) diag.push_back(d.str());
      break;
  }
  return {{"field", x.tag().str()}, {"rank", x.rank()}, {"diag", diag}, {"pretty", x.str()}};
}

json invariants_to_json(const InvariantVector& iv) {
  json j{{"rank", iv.rank}};
  if (iv.signature) j["signature"] = *iv.signature;
  if (iv.disc_q) j["disc"] = iv.disc_q->get_str();
  if (iv.d2) j["d2"] = *iv.d2;
  if (iv.disc_square) j["disc_square"] = *iv.disc_square;
  if (iv.disc_parity) j["disc_parity"] = *iv.disc_parity;
  if (!iv.dp.empty()) {
    json dp = json::array();
    for (const auto& [p, w] : iv.dp)
      dp.push_back({{"p", p}, {"a", w.a}, {"b", w.b}});
    j["dp"] = dp;
  }
  return j;
}

json degree_to_json(const LocalDegreeResult& r) {
  json j{{"method", method_name(r.method)},
         {"multiplicity", r.multiplicity},
         {"degree", gw_to_json(r.degree)}};
  if (!r.unit.empty()) j["unit"] = r.unit;
  if (r.char_warning) j["char_warning"] = true;
  return j;
}

json point_to_json(const PointSummary& p) {
  return {{"chart", p.chart},
          {"min_poly", p.min_poly},
          {"coords", p.coords},
          {"field_degree", p.field_degree},
          {"multiplicity", p.multiplicity},
          {"transverse", p.transverse},
          {"on_divisor_x0", p.on_divisor_x0},
          {"degree", degree_to_json(p.degree)}};
}

json orientability_to_json(const OrientabilityReport& r) {
  json j{{"n", r.n},
         {"degrees", r.degrees},
         {"line_bundle_degree", r.N},
         {"orientable", r.orientable}};
  if (!r.divisor_note.empty()) j["divisor_note"] = r.divisor_note;
  return j;
}

json report_to_json(const VerificationReport& rep) {
  json points = json::array();
  for (const auto& p : rep.points) points.push_back(point_to_json(p));
  json verdicts = json::object();
  for (const auto& [name, v] : rep.verdicts) verdicts[name] = v;
  return {{"orientability", orientability_to_json(rep.orientability)},
          {"applicable", rep.applicable},
          {"points", points},
          {"total", gw_to_json(rep.total)},
          {"total_invariants", invariants_to_json(gw_invariants(rep.total))},
          {"expected", gw_to_json(rep.expected)},
          {"verdicts", verdicts},
          {"pass", rep.pass}};
}

json tally_to_json(const CrossingTally& t) {
  return {{"positive", t.positive},
          {"negative", t.negative},
          {"zero_contribution", t.zero_contribution},
          {"balanced", t.balanced()}};
}

json fq_to_json(const FqReport& r) {
  return {{"tally",
           {{"pos_even", r.tally.pos_even},
            {"pos_odd", r.tally.pos_odd},
            {"neg_even", r.tally.neg_even},
            {"neg_odd", r.tally.neg_odd},
            {"statistic", r.tally.statistic()}}},
          {"case_even", r.case_even},
          {"parity_ok", r.parity_ok},
          {"disc_ok", r.disc_ok},
          {"pass", r.pass()}};
}

json qconditions_to_json(const QConditions& q) {
  json primes = json::array();
  for (const auto& pc : q.primes)
    primes.push_back({{"p", pc.p},
                      {"mod4", pc.mod4},
                      {"residue", {{"a", pc.residue.a}, {"b", pc.residue.b}}},
                      {"ok", pc.ok}});
  return {{"signature_sum", q.signature_sum},
          {"sign_ok", q.sign_ok},
          {"d2_sum", q.d2_sum},
          {"d2_ok", q.d2_ok},
          {"primes", primes},
          {"residues_ok", q.residues_ok},
          {"pass", q.pass}};
}

json lineconic_to_json(const LineConicReport& r) {
  return {{"sign_s", r.sign_s},
          {"sign_t", r.sign_t},
          {"signs_opposed", r.signs_opposed},
          {"v2_match", r.v2_match},
          {"residues_match", r.residues_match},
          {"consistent", r.consistent}};
}

json with_schema(const std::string& kind, json payload) {
  payload["schema_version"] = "1";
  payload["kind"] = kind;
  return payload;
}

}  // namespace gwbez
