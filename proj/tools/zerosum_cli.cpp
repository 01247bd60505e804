// Command-line front end: computes zero-sum invariants of finite groups,
// decides structural properties of their product-one monoids, and bridges to
// invariant theory (Noether numbers, Molien series, degree monoids).
//
// Exit codes: 0 success, 1 usage or data error, 2 resource budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zerosum/regression.hpp"
#include "zerosum/report.hpp"

using namespace zerosum;

namespace {

struct CommonOpts {
  std::string out;
  std::string format = "json";
  bool timings = false;
  std::uint64_t budget_nodes = Budget{}.max_nodes;
  std::uint64_t budget_memo = Budget{}.max_memo;
  std::int64_t budget_ms = -1;
  std::uint64_t seed = 12345;
  int threads = 1;

  Budget budget() const {
    Budget b;
    b.max_nodes = budget_nodes;
    b.max_memo = budget_memo;
    b.max_millis = budget_ms;
    return b;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--out", o.out, "write the report to this path instead of stdout");
  cmd->add_option("--format", o.format, "output format: json (default), csv, markdown");
  cmd->add_flag("--timings", o.timings, "include wall-clock timings in reports");
  cmd->add_option("--budget-nodes", o.budget_nodes, "search node budget per invocation");
  cmd->add_option("--budget-memo", o.budget_memo, "memo entry budget");
  cmd->add_option("--budget-ms", o.budget_ms, "wall-clock budget in ms (off by default)");
  cmd->add_option("--seed", o.seed, "seed for sampled property sweeps");
  cmd->add_option("--threads", o.threads, "worker threads for the verify suite");
}

void emit_text(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
    f << text;
  }
}

void emit(const CommonOpts& o, const Json& j) { emit_text(o, j.dump(2)); }

std::vector<int> parse_g0(const std::string& text, const GroupTable& G) {
  if (text == "all" || text.empty()) {
    std::vector<int> v(G.order);
    for (int i = 0; i < G.order; ++i) v[i] = i;
    return v;
  }
  std::vector<int> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int g = std::stoi(tok);
    if (g < 0 || g >= G.order) throw std::invalid_argument("g0 index out of range: " + tok);
    v.push_back(g);
  }
  if (v.empty()) throw std::invalid_argument("empty g0");
  return v;
}

EigenRep load_rep(const std::string& name, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open representation file: " + file);
    nlohmann::json j;
    in >> j;
    return EigenRep::from_json(j);
  }
  if (!name.empty()) return builtin_rep(name);
  throw std::invalid_argument("specify --rep <builtin-name> or --rep-file <path>");
}

CharacterModule load_module(const std::string& inline_json, const std::string& file) {
  nlohmann::json j;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open module file: " + file);
    in >> j;
  } else if (!inline_json.empty()) {
    j = nlohmann::json::parse(inline_json);
  } else {
    throw std::invalid_argument("specify --module '<json>' or --module-file <path>");
  }
  return module_from_json(j);
}

int run(int argc, char** argv) {
  CLI::App app{"zero-sum invariants of finite groups and their invariant-theory bridges"};
  app.require_subcommand(1);

  // ---- group ----
  auto* cmd_group = app.add_subcommand("group", "build a group and report its structure");
  CommonOpts o_group;
  std::string group_spec;
  cmd_group->add_option("--spec", group_spec, "group spec, e.g. cyclic:5, dihedral:4")->required();
  add_common(cmd_group, o_group);
  cmd_group->callback([&] {
    GroupTable G = build_group(group_spec);
    emit(o_group, group_report(G));
  });

  // ---- seq ----
  auto* cmd_seq = app.add_subcommand("seq", "evaluate product sets of a sequence");
  CommonOpts o_seq;
  std::string seq_group, seq_literal;
  cmd_seq->add_option("--group", seq_group, "group spec")->required();
  cmd_seq->add_option("--seq", seq_literal, "sequence literal, e.g. \"[g1^2, g3]\"")->required();
  add_common(cmd_seq, o_seq);
  cmd_seq->callback([&] {
    GroupTable G = build_group(seq_group);
    Sequence S = parse_sequence(seq_literal);
    Budget b = o_seq.budget();
    Json j;
    j["group"] = seq_group;
    j["sequence"] = sequence_json(S, &G);
    j["length"] = S.length();
    ElemSet pi = product_set(G, S, b);
    j["product_set"] = pi.to_vector();
    j["product_one"] = pi.test(0);
    ElemSet Pi = subsequence_products(G, S, b);
    j["subsequence_products"] = Pi.to_vector();
    j["product_one_free"] = S.is_trivial() ? true : !Pi.test(0);
    if (pi.test(0) && G.order <= 64) {
      ProductEngine eng(G, S.support(), b);
      auto m = eng.to_mult(S);
      j["max_factorization_length"] = eng.max_factorization_length(m);
      j["min_factorization_length"] = eng.min_factorization_length(m);
      if (S.length() <= 63) {
        std::uint64_t ls = eng.length_set(m);
        std::vector<int> lengths;
        for (int l = 0; l <= 63; ++l)
          if ((ls >> l) & 1) lengths.push_back(l);
        j["length_set"] = lengths;
      }
    }
    j["budget"] = budget_json(b);
    emit(o_seq, j);
  });

  // ---- davenport ----
  auto* cmd_dav = app.add_subcommand("davenport", "Davenport-type constants with witnesses");
  CommonOpts o_dav;
  std::string dav_group, dav_g0 = "all";
  int dav_k = 1;
  bool dav_egz = false, dav_autprune = false;
  cmd_dav->add_option("--group", dav_group, "group spec")->required();
  cmd_dav->add_option("--g0", dav_g0, "alphabet: comma-separated indices or 'all'");
  cmd_dav->add_option("--k", dav_k, "compute D_k and d_k for k = 1..K");
  cmd_dav->add_flag("--egz", dav_egz, "also compute s(G) and E(G) (needs --g0 all)");
  cmd_dav->add_flag("--aut-prune", dav_autprune, "enable automorphism-orbit pruning");
  add_common(cmd_dav, o_dav);
  cmd_dav->callback([&] {
    GroupTable G = build_group(dav_group);
    auto g0 = parse_g0(dav_g0, G);
    Budget b = o_dav.budget();
    auto t0 = std::chrono::steady_clock::now();
    InvariantReport rep;
    if (dav_autprune) {
      rep.group_spec = G.spec;
      rep.g0 = g0;
      rep.kmax = dav_k;
      DavenportSearcher s(G, g0, b);
      s.set_automorphism_pruning(true);
      auto [expG, e] = exponent_and_e(G, g0);
      rep.exponent = expG;
      rep.e = e;
      for (int k = 1; k <= dav_k; ++k) {
        auto D = s.large_davenport(k);
        rep.D.push_back(D.value);
        rep.D_witness.push_back(D.witness);
        auto d = s.small_davenport(k);
        rep.d.push_back(d.value);
        rep.d_witness.push_back(d.witness);
      }
      auto eta = s.eta_constant();
      rep.eta = eta.value;
      rep.eta_witness = eta.witness;
      rep.stats = s.stats();
    } else {
      rep = compute_invariants(G, g0, dav_k, b, dav_egz);
    }
    auto t1 = std::chrono::steady_clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (o_dav.format == "csv")
      emit_text(o_dav, invariant_report_csv(rep));
    else
      emit(o_dav, invariant_report_json(rep, G, b, o_dav.timings, ms));
  });

  // ---- monoid ----
  auto* cmd_mon = app.add_subcommand("monoid", "structural properties of B(G0)");
  CommonOpts o_mon;
  std::string mon_group, mon_g0 = "all";
  int mon_bound = 0;
  cmd_mon->add_option("--group", mon_group, "group spec")->required();
  cmd_mon->add_option("--g0", mon_g0, "alphabet: comma-separated indices or 'all'");
  cmd_mon->add_option("--bound", mon_bound, "search bound L (default 3|G|)");
  add_common(cmd_mon, o_mon);
  cmd_mon->callback([&] {
    GroupTable G = build_group(mon_group);
    auto g0 = parse_g0(mon_g0, G);
    Budget b = o_mon.budget();
    int L = mon_bound > 0 ? mon_bound : 3 * G.order;
    Json j;
    j["group"] = mon_group;
    j["g0"] = g0;
    j["bound"] = L;
    j["saturation"] = verdict_json(is_saturated_up_to(G, g0, L, b), G);
    j["krull"] = krull_json(property_P_and_krull_criterion(G, g0, L, b), G);
    j["seminormal"] = verdict_json(is_seminormal_up_to(G, g0, L, b), G);
    if (int(g0.size()) == G.order)
      j["class_group"] = class_group_json(class_group_of_BG(G, 4, 8, b));
    j["budget"] = budget_json(b);
    emit(o_mon, j);
  });

  // ---- abelian ----
  auto* cmd_ab = app.add_subcommand("abelian", "abelian zero-sum machinery");
  cmd_ab->require_subcommand(1);
  CommonOpts o_ab;

  auto* ab_dstar = cmd_ab->add_subcommand("dstar", "d*(G) and comparison with d(G)");
  std::string ab_group;
  ab_dstar->add_option("--group", ab_group, "abelian group spec")->required();
  add_common(ab_dstar, o_ab);
  ab_dstar->callback([&] {
    GroupTable G = build_group(ab_group);
    auto chk = verify_dstar_equals_d(G, o_ab.budget());
    Json j;
    j["group"] = ab_group;
    j["d_star"] = chk.d_star_value;
    j["d"] = chk.d_value;
    j["equal"] = chk.equal;
    j["witness"] = sequence_json(chk.witness, &G);
    emit(o_ab, j);
  });

  auto* ab_dk = cmd_ab->add_subcommand("dkcheck", "d_k = d + (k-1) exp(G) for rank <= 2");
  std::string abdk_group;
  int abdk_k = 2;
  ab_dk->add_option("--group", abdk_group)->required();
  ab_dk->add_option("--k", abdk_k);
  add_common(ab_dk, o_ab);
  ab_dk->callback([&] {
    auto chk = dk_formula_check(build_group(abdk_group), abdk_k, o_ab.budget());
    Json j;
    j["group"] = abdk_group;
    j["k"] = chk.k;
    j["computed_dk"] = chk.computed_dk;
    j["formula_value"] = chk.formula_value;
    j["equal"] = chk.equal;
    emit(o_ab, j);
  });

  auto* ab_index = cmd_ab->add_subcommand("index", "index of a sequence over a cyclic group");
  std::string abi_group, abi_seq;
  ab_index->add_option("--group", abi_group)->required();
  ab_index->add_option("--seq", abi_seq)->required();
  add_common(ab_index, o_ab);
  ab_index->callback([&] {
    GroupTable G = build_group(abi_group);
    Sequence S = parse_sequence(abi_seq);
    Rational ind = sequence_index(G, S);
    Json j;
    j["group"] = abi_group;
    j["sequence"] = sequence_json(S, &G);
    j["index_num"] = boost::multiprecision::numerator(ind).convert_to<long long>();
    j["index_den"] = boost::multiprecision::denominator(ind).convert_to<long long>();
    emit(o_ab, j);
  });

  auto* ab_sav = cmd_ab->add_subcommand("savchev", "structure of long zero-sum free sequences");
  int abs_n = 5, abs_cap = 14;
  ab_sav->add_option("--n", abs_n)->required();
  ab_sav->add_option("--cap", abs_cap);
  add_common(ab_sav, o_ab);
  ab_sav->callback(
      [&] { emit(o_ab, savchev_json(savchev_chen_verify(abs_n, o_ab.budget(), abs_cap))); });

  auto* ab_count = cmd_ab->add_subcommand("count", "number of minimal zero-sum sequences");
  int abc_n = 5, abc_len = 4;
  ab_count->add_option("--n", abc_n)->required();
  ab_count->add_option("--len", abc_len)->required();
  add_common(ab_count, o_ab);
  ab_count->callback([&] {
    auto r = count_minimal_zero_sum(abc_n, abc_len, o_ab.budget());
    Json j;
    j["n"] = r.n;
    j["length"] = r.length;
    j["formula"] = r.formula ? Json(*r.formula) : Json(nullptr);
    j["brute_force"] = r.brute ? Json(*r.brute) : Json(nullptr);
    emit(o_ab, j);
  });

  auto* ab_tr = cmd_ab->add_subcommand("transfer", "collapsing transfer homomorphism");
  std::string abt_group, abt_g1, abt_g2;
  int abt_samples = 100;
  ab_tr->add_option("--group", abt_group)->required();
  ab_tr->add_option("--g1", abt_g1, "collapsed part of the alphabet")->required();
  ab_tr->add_option("--g2", abt_g2, "untouched part of the alphabet");
  ab_tr->add_option("--samples", abt_samples, "length-set preservation samples");
  add_common(ab_tr, o_ab);
  ab_tr->callback([&] {
    GroupTable G = build_group(abt_group);
    auto g1 = parse_g0(abt_g1, G);
    std::vector<int> g2;
    if (!abt_g2.empty()) g2 = parse_g0(abt_g2, G);
    auto t = transfer_theta(G, g1, g2, o_ab.budget());
    Json j;
    j["group"] = abt_group;
    Json evals = Json::object();
    for (auto& [g, e] : t.e_of) evals[std::to_string(g)] = e;
    j["e"] = evals;
    j["characterizations_agree"] = t.characterizations_agree;
    j["image_alphabet"] = t.image_alphabet;
    if (abt_samples > 0) {
      auto chk = transfer_preserves_lengths_check(t, abt_samples, o_ab.seed, 10, o_ab.budget());
      j["length_sets_checked"] = chk.samples_checked;
      j["length_sets_preserved"] = chk.ok();
    }
    emit(o_ab, j);
  });

  // ---- invariants ----
  auto* cmd_inv = app.add_subcommand("invariants", "invariant-theory bridge for abelian groups");
  cmd_inv->require_subcommand(1);
  CommonOpts o_inv;
  std::string inv_module, inv_module_file, inv_group;
  int inv_k = 1, inv_degree = 8;

  auto add_module_opts = [&](CLI::App* sub) {
    sub->add_option("--module", inv_module, "module spec as inline JSON {group, chars}");
    sub->add_option("--module-file", inv_module_file, "module spec JSON file");
  };

  auto* inv_beta = cmd_inv->add_subcommand("beta", "Noether numbers beta_k");
  add_module_opts(inv_beta);
  inv_beta->add_option("--group", inv_group, "abelian group (regular module)");
  inv_beta->add_option("--k", inv_k);
  add_common(inv_beta, o_inv);
  inv_beta->callback([&] {
    Json j;
    if (!inv_group.empty()) {
      GroupTable G = build_group(inv_group);
      j["group"] = inv_group;
      j["k"] = inv_k;
      j["beta"] = noether_number_of_group(G, inv_k, o_inv.budget());
    } else {
      CharacterModule M = load_module(inv_module, inv_module_file);
      j["group"] = M.group.spec;
      j["k"] = inv_k;
      j["beta"] = noether_number(M, inv_k, o_inv.budget());
      j["beta_via_monomials"] = noether_number_via_monomials(M, inv_k, o_inv.budget());
      j["multiplicity_free"] = M.multiplicity_free;
    }
    emit(o_inv, j);
  });

  auto* inv_atoms = cmd_inv->add_subcommand("atoms", "atoms of the invariant monomial monoid");
  add_module_opts(inv_atoms);
  add_common(inv_atoms, o_inv);
  inv_atoms->callback([&] {
    CharacterModule M = load_module(inv_module, inv_module_file);
    auto A = invariant_atoms(M, o_inv.budget());
    Json j;
    j["group"] = M.group.spec;
    j["total"] = A.total;
    Json base = Json::array();
    for (std::size_t i = 0; i < A.base_atoms.size(); ++i) {
      Json row;
      row["atom"] = sequence_json(A.base_atoms[i], &M.ghat);
      row["pullbacks"] = A.pullback_counts[i];
      base.push_back(row);
    }
    j["base_atoms"] = base;
    if (!A.exponent_vectors.empty()) j["exponent_vectors"] = A.exponent_vectors;
    emit(o_inv, j);
  });

  auto* inv_exp = cmd_inv->add_subcommand("exponents", "ramification exponents e(x_i)");
  add_module_opts(inv_exp);
  add_common(inv_exp, o_inv);
  inv_exp->callback([&] {
    CharacterModule M = load_module(inv_module, inv_module_file);
    Json j;
    j["group"] = M.group.spec;
    j["e"] = ramification_exponents(M);
    emit(o_inv, j);
  });

  auto* inv_cg =
      cmd_inv->add_subcommand("classgroup", "class group of M^G with prime-bearing classes");
  add_module_opts(inv_cg);
  add_common(inv_cg, o_inv);
  inv_cg->callback([&] {
    CharacterModule M = load_module(inv_module, inv_module_file);
    auto C = class_group_MG(M);
    Json j;
    j["group"] = M.group.spec;
    j["invariant_factors"] = C.invariant_factors;
    j["subgroup_members"] = C.subgroup_members;
    j["prime_bearing"] = C.prime_bearing;
    emit(o_inv, j);
  });

  auto* inv_diag = cmd_inv->add_subcommand("diagram", "commutativity of the transfer diagram");
  add_module_opts(inv_diag);
  inv_diag->add_option("--degree", inv_degree, "monomial degree bound");
  add_common(inv_diag, o_inv);
  inv_diag->callback([&] {
    CharacterModule M = load_module(inv_module, inv_module_file);
    auto chk = diagram_commutes_check(M, inv_degree, o_inv.budget());
    Json j;
    j["group"] = M.group.spec;
    j["monomials_checked"] = chk.monomials_checked;
    j["transfer_e_agrees"] = chk.transfer_e_agrees;
    j["ok"] = chk.ok();
    emit(o_inv, j);
  });

  auto* inv_se = cmd_inv->add_subcommand("sigma-eta", "sigma(G) and eta(G) for abelian G");
  inv_se->add_option("--group", inv_group)->required();
  add_common(inv_se, o_inv);
  inv_se->callback([&] {
    GroupTable G = build_group(inv_group);
    auto rep = sigma_eta_abelian(G, o_inv.budget());
    Json j;
    j["group"] = inv_group;
    j["sigma"] = rep.sigma;
    j["eta"] = rep.eta;
    emit(o_inv, j);
  });

  // ---- molien ----
  auto* cmd_mol = app.add_subcommand("molien", "exact Hilbert series and degree monoids");
  cmd_mol->require_subcommand(1);
  CommonOpts o_mol;
  std::string mol_rep, mol_rep_file;
  int mol_degree = 0, mol_k = 1, mol_summand = 0;  // 0: use the default truncation
  bool mol_multi = false;
  auto degree_of = [&](const EigenRep& rep) {
    return mol_degree > 0 ? mol_degree : default_truncation(rep);
  };

  auto add_rep_opts = [&](CLI::App* sub) {
    sub->add_option("--rep", mol_rep, "built-in representation name");
    sub->add_option("--rep-file", mol_rep_file, "representation JSON file");
  };

  auto* mol_list = cmd_mol->add_subcommand("list", "list built-in representations");
  add_common(mol_list, o_mol);
  mol_list->callback([&] {
    Json j;
    j["builtins"] = {"a5_icosahedral", "binary_tetrahedral", "pauli"};
    emit(o_mol, j);
  });

  auto* mol_series = cmd_mol->add_subcommand("series", "series coefficients");
  add_rep_opts(mol_series);
  mol_series->add_option("--degree", mol_degree);
  mol_series->add_flag("--multi", mol_multi, "multigraded coefficients");
  add_common(mol_series, o_mol);
  mol_series->callback([&] {
    EigenRep rep = load_rep(mol_rep, mol_rep_file);
    int N = degree_of(rep);
    Json j;
    j["rep"] = rep.to_json();
    j["degree"] = N;
    if (mol_multi) {
      Json arr = Json::array();
      for (const auto& [a, coef] : molien_series_multi(rep, N)) {
        Json row;
        row["multidegree"] = a;
        row["coefficient"] = coef;
        arr.push_back(row);
      }
      j["coefficients"] = arr;
    } else {
      j["coefficients"] = molien_series(rep, N);
    }
    emit(o_mol, j);
  });

  auto* mol_mon = cmd_mol->add_subcommand("monoid", "extract the monoid of degrees");
  add_rep_opts(mol_mon);
  mol_mon->add_option("--degree", mol_degree);
  add_common(mol_mon, o_mol);
  mol_mon->callback([&] {
    EigenRep rep = load_rep(mol_rep, mol_rep_file);
    int N = degree_of(rep);
    Json j;
    j["degree"] = N;
    if (rep.summands() == 1) {
      NumericalMonoid M = block_monoid_from_series(molien_series(rep, N));
      j["monoid"] = M.to_json();
      j["status"] = "certified to " + std::to_string(M.certified_to);
    } else {
      auto M = block_monoid_from_series(molien_series_multi(rep, N), rep.summands(), N);
      j["monoid"] = M.to_json();
      j["status"] = "certified to " + std::to_string(M.certified_to);
    }
    emit(o_mol, j);
  });

  auto* mol_dav = cmd_mol->add_subcommand("davenport", "D_k of the degree monoid");
  add_rep_opts(mol_dav);
  mol_dav->add_option("--degree", mol_degree);
  mol_dav->add_option("--k", mol_k);
  add_common(mol_dav, o_mol);
  mol_dav->callback([&] {
    EigenRep rep = load_rep(mol_rep, mol_rep_file);
    auto bound = beta_lower_bound(rep, mol_k, degree_of(rep));
    Json j;
    j["k"] = bound.k;
    j["davenport"] = bound.bound;
    j["certified_to"] = bound.certified_to;
    j["note"] = "lower bound for the corresponding Noether number";
    emit(o_mol, j);
  });

  auto* mol_content = cmd_mol->add_subcommand("content", "scalar subgroup order per summand");
  add_rep_opts(mol_content);
  mol_content->add_option("--summand", mol_summand);
  add_common(mol_content, o_mol);
  mol_content->callback([&] {
    EigenRep rep = load_rep(mol_rep, mol_rep_file);
    Json j;
    j["summand"] = mol_summand;
    j["scalar_content"] = scalar_content(rep, mol_summand);
    emit(o_mol, j);
  });

  // ---- verify ----
  auto* cmd_ver = app.add_subcommand("verify", "run the regression suite");
  CommonOpts o_ver;
  std::string suite = "paper";
  cmd_ver->add_option("--suite", suite, "paper (full) or quick");
  add_common(cmd_ver, o_ver);
  cmd_ver->callback([&] {
    auto results = run_suite(suite, o_ver.budget(), o_ver.threads, o_ver.seed);
    bool all_pass = true;
    for (const auto& c : results)
      if (!c.pass) all_pass = false;
    if (o_ver.format == "markdown") {
      std::string txt;
      for (const auto& c : results) {
        txt += "## " + std::to_string(c.number) + ". " + c.title + "\n\n";
        txt += regression_rows_markdown(c.rows) + "\n";
      }
      emit_text(o_ver, txt);
    } else if (o_ver.format == "csv") {
      emit_text(o_ver, regression_rows_csv(flatten_rows(results)));
    } else {
      Json j;
      Json arr = Json::array();
      for (const auto& c : results) {
        Json cj;
        cj["criterion"] = c.number;
        cj["title"] = c.title;
        cj["status"] = c.pass ? "pass" : "FAIL";
        if (o_ver.timings) cj["millis"] = c.millis;
        cj["rows"] = regression_rows_json(c.rows);
        if (!c.notices.empty()) cj["notices"] = c.notices;
        arr.push_back(cj);
      }
      j["suite"] = suite;
      j["criteria"] = arr;
      j["pass"] = all_pass;
      emit(o_ver, j);
    }
    if (!all_pass) {
      for (const auto& c : results)
        for (const auto& r : c.rows)
          if (!r.pass)
            std::cerr << "FAIL [" << c.number << "] " << r.claim << ": computed " << r.computed
                      << ", expected " << r.expected << "\n";
      throw std::runtime_error("regression suite reported failures");
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const budget_error& e) {
    std::cerr << Json{{"error", {{"code", "budget"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const inconsistency_error& e) {
    std::cerr << Json{{"error", {{"code", "inconsistent-data"}, {"message", e.what()}}}}.dump()
              << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << Json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", {{"code", "failure"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
}
