#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "zerosum/abelian.hpp"
#include "zerosum/davenport.hpp"
#include "zerosum/invariant_bridge.hpp"
#include "zerosum/molien.hpp"
#include "zerosum/monoid_props.hpp"

namespace zerosum {

using Json = nlohmann::ordered_json;  // stable field order for byte-identical runs

inline Json sequence_json(const Sequence& S, const GroupTable* G = nullptr) {
  Json j;
  auto base = S.to_json();
  j["alphabet"] = base["alphabet"];
  j["mult"] = base["mult"];
  if (G) j["pretty"] = S.to_string(G);
  return j;
}

inline Json budget_json(const Budget& b) {
  Json j;
  j["max_nodes"] = b.max_nodes;
  j["max_memo"] = b.max_memo;
  if (b.max_millis >= 0) j["max_millis"] = b.max_millis;
  return j;
}

inline Json group_report(const GroupTable& G) {
  Json j;
  j["group"] = G.spec;
  j["order"] = G.order;
  j["abelian"] = G.is_abelian();
  j["exponent"] = G.exponent();
  int e = 0;
  for (int g = 0; g < G.order; ++g) e = std::max(e, G.elt_order[g]);
  j["max_element_order"] = e;
  Subgroup Gp = commutator_subgroup(G);
  j["commutator_order"] = Gp.order();
  Abelianization ab = abelianization(G);
  j["abelianization"] = ab.invariant_factors;
  if (G.is_abelian()) j["invariant_factors"] = abelian_structure(G).invariant_factors;
  auto auts = automorphisms(G);
  if (!auts.empty()) j["automorphisms"] = auts.size();
  j["labels"] = [&] {
    std::vector<std::string> v;
    for (int g = 0; g < G.order; ++g) v.push_back(G.label(g));
    return v;
  }();
  return j;
}

inline Json invariant_report_json(const InvariantReport& rep, const GroupTable& G,
                                  const Budget& budget, bool timings, long long millis) {
  Json j;
  j["group"] = rep.group_spec;
  j["g0"] = rep.g0;
  Json c;
  c["D"] = rep.D;
  c["d"] = rep.d;
  c["e"] = rep.e;
  c["exponent"] = rep.exponent;
  c["eta"] = rep.eta;
  c["s"] = rep.s.has_value() ? Json(*rep.s) : Json(nullptr);
  c["E"] = rep.E.has_value() ? Json(*rep.E) : Json(nullptr);
  j["constants"] = c;
  Json w;
  for (int k = 1; k <= rep.kmax; ++k) {
    w["D_" + std::to_string(k)] = sequence_json(rep.D_witness[k - 1], &G);
    w["d_" + std::to_string(k)] = sequence_json(rep.d_witness[k - 1], &G);
  }
  w["eta"] = sequence_json(rep.eta_witness, &G);
  j["witnesses"] = w;
  Json st;
  st["nodes"] = rep.stats.nodes;
  st["memo_entries"] = rep.stats.memo_entries;
  if (timings) st["millis"] = millis;
  j["stats"] = st;
  j["budget"] = budget_json(budget);
  return j;
}

/// CSV flattening of an invariant report: constants only, one row per k.
inline std::string invariant_report_csv(const InvariantReport& rep) {
  std::string out = "group,k,D,d,e,eta,s,E\n";
  for (int k = 1; k <= rep.kmax; ++k) {
    out += rep.group_spec + "," + std::to_string(k) + "," + std::to_string(rep.D[k - 1]) + "," +
           std::to_string(rep.d[k - 1]) + "," + std::to_string(rep.e) + "," +
           std::to_string(rep.eta) + ",";
    out += rep.s ? std::to_string(*rep.s) : "";
    out += ",";
    out += rep.E ? std::to_string(*rep.E) : "";
    out += "\n";
  }
  return out;
}

inline Json verdict_json(const SaturationVerdict& v, const GroupTable& G) {
  Json j;
  j["property"] = "saturated";
  j["bound"] = v.bound;
  if (v.proved_saturated)
    j["verdict"] = "saturated (proved)";
  else if (v.counterexample)
    j["verdict"] = "counterexample";
  else
    j["verdict"] = "saturated-up-to-" + std::to_string(v.bound);
  if (v.counterexample) {
    j["witness"] = Json::object();
    j["witness"]["S"] = sequence_json(v.counterexample->first, &G);
    j["witness"]["T"] = sequence_json(v.counterexample->second, &G);
  }
  return j;
}

inline Json verdict_json(const SeminormalVerdict& v, const GroupTable& G) {
  Json j;
  j["property"] = "seminormal";
  j["bound"] = v.bound;
  if (v.proved_seminormal)
    j["verdict"] = "seminormal (proved)";
  else if (v.counterexample)
    j["verdict"] = "counterexample";
  else
    j["verdict"] = "seminormal-up-to-" + std::to_string(v.bound);
  if (v.counterexample) j["witness"] = sequence_json(*v.counterexample, &G);
  return j;
}

inline Json krull_json(const KrullReport& rep, const GroupTable& G) {
  Json j;
  j["property"] = "krull";
  j["property_P"] = rep.property_P;
  j["span_abelian"] = rep.span_abelian;
  j["method"] = rep.method;
  j["verdict"] = rep.krull.has_value() ? Json(*rep.krull ? "krull" : "not-krull")
                                       : Json("undecided-at-bound");
  j["saturation"] = verdict_json(rep.saturation, G);
  if (!rep.atoms_of_G0.empty()) {
    Json a = Json::array();
    for (const auto& A : rep.atoms_of_G0) a.push_back(sequence_json(A, &G));
    j["atoms"] = a;
  }
  return j;
}

inline Json class_group_json(const ClassGroupResult& r) {
  Json j;
  j["property"] = "class-group";
  j["invariant_factors"] = r.class_group.invariant_factors;
  j["classes_seen"] = r.classes_seen;
  j["surjective"] = r.surjective;
  j["pairs_verified"] = r.pairs_verified;
  j["verdict"] = r.verified ? "verified" : "FAILED";
  return j;
}

inline Json reduction_report_json(const ReductionReport& rep) {
  Json j;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row;
    row["id"] = r.id;
    row["instance"] = r.instance;
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["holds"] = r.holds;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["violations"] = rep.violations;
  j["notices"] = rep.notices;
  return j;
}

inline Json savchev_json(const SavchevChenReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["threshold"] = rep.threshold;
  j["sequences_checked"] = rep.sequences_checked;
  j["orbit_representatives"] = rep.orbit_representatives;
  j["long_atoms_checked"] = rep.long_atoms_checked;
  j["ok"] = rep.all_ok();
  Json gens = Json::array();
  for (const auto& [S, smallest, working] : rep.representative_generators) {
    Json row;
    row["sequence"] = sequence_json(S);
    row["generator"] = smallest;
    row["working_generators"] = working;
    gens.push_back(row);
  }
  j["decompositions"] = gens;
  return j;
}

// --- regression table ------------------------------------------------------------

struct RegressionRow {
  std::string claim;
  std::string computed;
  std::string expected;
  bool pass = false;
};

inline Json regression_rows_json(const std::vector<RegressionRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["claim"] = r.claim;
    j["computed"] = r.computed;
    j["expected"] = r.expected;
    j["status"] = r.pass ? "pass" : "FAIL";
    arr.push_back(j);
  }
  return arr;
}

inline std::string regression_rows_markdown(const std::vector<RegressionRow>& rows) {
  std::string out = "| claim | computed | expected | status |\n|---|---|---|---|\n";
  for (const auto& r : rows)
    out += "| " + r.claim + " | " + r.computed + " | " + r.expected + " | " +
           (r.pass ? "pass" : "FAIL") + " |\n";
  return out;
}

inline std::string regression_rows_csv(const std::vector<RegressionRow>& rows) {
  auto quote = [](std::string s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::string out = "claim,computed,expected,status\n";
  for (const auto& r : rows)
    out += quote(r.claim) + "," + quote(r.computed) + "," + quote(r.expected) + "," +
           (r.pass ? "pass" : "FAIL") + "\n";
  return out;
}

}  // namespace zerosum
