#include "birkhoff/serialize.hpp"

namespace birkhoff {

Json certificate_json(const IrreducibilityCertificate& cert) {
  Json out;
  out["schema"] = 1;
  out["m"] = cert.m;
  out["d0"] = cert.d0;
  out["d1"] = cert.d1;
  out["prime"] = cert.prime;
  out["seed"] = cert.seed;
  out["samples_per_stratum"] = cert.samples;
  out["maximal_pair"] = cert.maximal.str();
  Json strata = Json::array();
  for (const StratumRecord& r : cert.strata) {
    Json s;
    s["pair"] = r.report.pair.str();
    s["stratum_dim"] = r.report.stratum_dimension;
    s["orbit_dim"] = r.report.orbit_dimension;
    s["dense_in_stratum"] = r.report.dense_in_stratum;
    s["gorenstein_projective"] = r.report.gorenstein_projective;
    s["is_maximal"] = r.is_maximal;
    s["hom_order_ok"] = r.hom_order_ok;
    s["reached_maximal_by_moves"] = r.reached_maximal;
    s["samples_total"] = r.samples_total;
    s["samples_isomorphic"] = r.samples_isomorphic;
    strata.push_back(std::move(s));
  }
  out["strata"] = std::move(strata);
  Json edges = Json::array();
  for (const DegenerationEdge& e : cert.edges) {
    Json j;
    j["from"] = e.from.str();
    j["to"] = e.to.str();
    j["mechanism"] = move_kind_name(e.kind);
    j["j1"] = e.j1;
    j["j2"] = e.j2;
    j["witnessed"] = e.witnessed;
    edges.push_back(std::move(j));
  }
  out["edges"] = std::move(edges);
  Json checks;
  checks["unique_max_dimension"] = cert.unique_max_dimension;
  checks["all_hom_order"] = cert.all_hom_order;
  checks["all_samples_isomorphic"] = cert.all_samples_isomorphic;
  checks["all_dense_orbit"] = cert.all_dense;
  out["checks"] = std::move(checks);
  out["verdict"] = cert.verdict;
  return out;
}

Json sweep_json(const SweepSummary& summary) {
  Json out;
  out["m_max"] = summary.m_max;
  out["d_max"] = summary.d_max;
  Json checks = Json::array();
  for (const CheckResult& c : summary.checks) {
    Json j;
    j["name"] = c.name;
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["all_passed"] = summary.all_passed();
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace birkhoff
