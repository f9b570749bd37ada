#include "cantorsum/json_report.hpp"

namespace cantorsum {

std::string rational_str(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json digits_to_json(const Digits& d) {
  json arr = json::array();
  for (uint32_t v : d) arr.push_back(v);
  return arr;
}

json table_to_json(const GeneratorTable& t) {
  json j;
  j["p"] = t.p;
  if (t.source.rfind("seed:", 0) == 0)
    j["seed"] = std::stoull(t.source.substr(5));
  else
    j["alpha"] = t.source;
  j["n"] = t.n;
  if (t.materialized()) {
    json xs = json::array(), ss = json::array();
    for (const auto& v : t.x) xs.push_back(v.get_str());
    for (const auto& v : t.s) ss.push_back(v.get_str());
    j["x"] = std::move(xs);
    j["s"] = std::move(ss);
  }
  j["delta"] = t.delta;
  j["policy"] = t.materialized() ? "materialize" : "deltas_only";
  return j;
}

json gaps_to_json(const std::vector<Gap>& gs) {
  json arr = json::array();
  for (const Gap& g : gs)
    arr.push_back({{"left", g.left}, {"right", g.right}, {"missing", g.missing()}});
  return arr;
}

json shift_invariance_to_json(const ShiftInvarianceReport& r) {
  json j;
  j["pass"] = r.pass;
  j["gap_count"] = r.checks.size();
  j["unresolved"] = r.unresolved;
  if (r.first_violation >= 0) j["first_violation"] = r.first_violation;
  json checks = json::array();
  for (const GapCheck& c : r.checks) {
    const char* status = c.status == GapStatus::kOk           ? "ok"
                         : c.status == GapStatus::kViolated   ? "violated"
                                                              : "unresolved";
    checks.push_back({{"left", c.gap.left},
                      {"right", c.gap.right},
                      {"missing", c.gap.missing()},
                      {"block_start", c.block_start},
                      {"shift", c.shift},
                      {"status", status}});
  }
  j["checks"] = std::move(checks);
  return j;
}

json ap_witness_to_json(const APWitness& ap) {
  return {{"start", ap.start}, {"diff", ap.diff}, {"length", ap.length}};
}

json vdw_certificate_to_json(const VdwCertificate& c) {
  json j;
  j["s"] = c.s;
  j["k"] = c.k;
  j["W"] = c.W;
  json w = json::array();
  for (uint8_t v : c.witness) w.push_back(v);
  j["witness_coloring"] = std::move(w);
  j["verified"] = c.verified;
  j["nodes"] = c.nodes;
  return j;
}

json bounded_gap_extract_to_json(const BoundedGapExtract& e) {
  json j;
  j["ap"] = ap_witness_to_json(e.ap);
  j["target_length"] = e.target_length;
  j["table_limited"] = e.table_limited;
  j["color"] = e.color;
  return j;
}

json sum_witness_to_json(const SumWitness& w) {
  json j;
  j["x"] = w.x.get_str();
  j["u"] = w.u.get_str();
  j["v"] = w.v.get_str();
  j["left"] = w.left;
  j["right"] = w.right;
  return j;
}

json y_membership_to_json(const YMembershipReport& r) {
  json j;
  j["pass"] = r.pass;
  j["checked"] = r.checked;
  if (r.first_fail >= 0) j["first_fail"] = r.first_fail;
  j["per_k"] = r.per_k;
  return j;
}

json ap_content_to_json(const APContentReport& r) {
  json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["m"] = r.m;
  j["ratio"] = r.ratio;
  j["predicted"] = r.predicted;
  j["K"] = r.K;
  j["has_ap"] = r.has_ap;
  if (r.has_ap) {
    j["extraction"] = bounded_gap_extract_to_json(r.extraction);
    j["anchor_delta"] = r.anchor_delta;
    if (r.ap_start_absolute)
      j["ap_start_absolute"] = r.ap_start_absolute->get_str();
  }
  return j;
}

json sumset_cover_to_json(const SumsetCoverReport& r) {
  json j;
  j["pass"] = r.pass;
  j["depth"] = r.depth;
  j["s_n"] = r.s_n;
  j["bound"] = r.bound;
  if (!r.pass) j["first_missing"] = r.first_missing;
  return j;
}

json density_report_to_json(const DensityReport& r) {
  json j;
  j["p"] = r.p;
  j["N"] = r.N;
  if (r.t) j["t"] = *r.t;
  if (r.predicted_base) {
    j["predicted_base"] = rational_str(*r.predicted_base);
    j["predicted_base_value"] = r.predicted_base->get_d();
  }
  json rows = json::array();
  for (const DensityRow& row : r.rows) {
    json jr;
    jr["scale"] = row.scale;
    jr["base"] = rational_str(row.base);
    jr["base_value"] = row.base.get_d();
    if (row.sum) {
      jr["sum"] = rational_str(*row.sum);
      jr["sum_value"] = row.sum->get_d();
    }
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j;
}

json recovered_to_json(const RecoveredGenerators& r) {
  json j;
  j["B"] = r.generators;
  j["resolvable_bound"] = r.resolvable_bound;
  j["validated"] = r.validated;
  if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
  return j;
}

}  // namespace cantorsum
