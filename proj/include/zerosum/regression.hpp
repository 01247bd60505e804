#pragma once

#include <chrono>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "zerosum/report.hpp"

namespace zerosum {

/// Every group of order at most 12, by construction spec.
inline std::vector<std::string> catalog_up_to_order_12() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 12; ++n) specs.push_back("cyclic:" + std::to_string(n));
  specs.push_back("abelian:2,2");
  specs.push_back("abelian:2,4");
  specs.push_back("abelian:2,2,2");
  specs.push_back("abelian:3,3");
  specs.push_back("abelian:2,6");
  for (int n = 3; n <= 6; ++n) specs.push_back("dihedral:" + std::to_string(n));
  specs.push_back("dicyclic:2");
  specs.push_back("dicyclic:3");
  specs.push_back("alternating:4");
  return specs;
}

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<RegressionRow> rows;
  bool pass = true;
  double millis = 0;
  std::vector<std::string> notices;

  void recompute() {
    pass = true;
    for (const auto& r : rows)
      if (!r.pass) pass = false;
  }
};

namespace detail {

inline std::vector<int> all_of(const GroupTable& G) {
  std::vector<int> v(G.order);
  for (int i = 0; i < G.order; ++i) v[i] = i;
  return v;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline void row(CriterionResult& c, const std::string& claim, const std::string& computed,
                const std::string& expected) {
  c.rows.push_back({claim, computed, expected, computed == expected});
}
inline void row_bool(CriterionResult& c, const std::string& claim, bool ok) {
  c.rows.push_back({claim, ok ? "true" : "false", "true", ok});
}

inline bool is_cyclic(const GroupTable& G) {
  for (int g = 0; g < G.order; ++g)
    if (G.elt_order[g] == G.order) return true;
  return G.order == 1;
}

inline bool is_odd_dihedral(const GroupTable& G) {
  if (G.order % 2 || G.order < 6) return false;
  int n = G.order / 2;
  if (n % 2 == 0) return false;
  GroupTable D = build_group("dihedral:" + std::to_string(n));
  return find_isomorphism(G, D).has_value();
}

}  // namespace detail

// --- the twelve acceptance criteria ----------------------------------------------

inline CriterionResult criterion_cyclic_davenport(Budget budget) {
  CriterionResult c{1, "cyclic groups: D(C_n) = n and d(C_n) = n-1 for n in [2,20]"};
  for (int n = 2; n <= 20; ++n) {
    GroupTable G = build_group("cyclic:" + std::to_string(n));
    auto all = detail::all_of(G);
    auto d = small_davenport(G, all, 1, budget);
    auto D = large_davenport(G, all, 1, budget);
    detail::row(c, "D(C_" + std::to_string(n) + "), d(C_" + std::to_string(n) + ")",
                detail::str(D.value) + "," + detail::str(d.value),
                detail::str(n) + "," + detail::str(n - 1));
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_index2_cyclic(Budget budget) {
  CriterionResult c{2, "groups with a cyclic index-2 subgroup: d = |G|/2, D = d + |G'|"};
  std::vector<std::string> specs;
  for (int n = 2; n <= 6; ++n) specs.push_back("dihedral:" + std::to_string(n));
  specs.push_back("dicyclic:2");
  specs.push_back("dicyclic:3");
  specs.push_back("semidirect:6,2,5");  // C_6 x| C_2 with inversion
  for (const auto& spec : specs) {
    GroupTable G = build_group(spec);
    auto all = detail::all_of(G);
    DavenportSearcher s(G, all, budget);
    int d = s.small_davenport(1).value;
    int D = s.large_davenport(1).value;
    int commutator = commutator_subgroup(G).order();
    detail::row(c, "d(" + spec + "), D(" + spec + ")",
                detail::str(d) + "," + detail::str(D),
                detail::str(G.order / 2) + "," + detail::str(G.order / 2 + commutator));
  }
  {
    GroupTable G = build_group("dicyclic:2");
    auto all = detail::all_of(G);
    detail::row(c, "d(H_8)", detail::str(small_davenport(G, all, 1, budget).value), "4");
    detail::row(c, "D(H_8)", detail::str(large_davenport(G, all, 1, budget).value), "6");
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_pq_groups(Budget budget) {
  CriterionResult c{3, "non-abelian pq groups: D = 2q, d = q + p - 2"};
  struct Case {
    const char* spec;
    int p, q;
  };
  for (auto [spec, p, q] : {Case{"symmetric:3", 2, 3}, Case{"dihedral:5", 2, 5}}) {
    GroupTable G = build_group(spec);
    auto all = detail::all_of(G);
    DavenportSearcher s(G, all, budget);
    detail::row(c, "D(" + std::string(spec) + ")", detail::str(s.large_davenport(1).value),
                detail::str(2 * q));
    detail::row(c, "d(" + std::string(spec) + ")", detail::str(s.small_davenport(1).value),
                detail::str(q + p - 2));
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_dichotomy(Budget budget) {
  CriterionResult c{4, "D(G) = |G| exactly for cyclic groups and odd dihedral groups (order <= 12)"};
  for (const auto& spec : catalog_up_to_order_12()) {
    GroupTable G = build_group(spec);
    auto all = detail::all_of(G);
    int D = large_davenport(G, all, 1, budget).value;
    bool expected_full = detail::is_cyclic(G) || detail::is_odd_dihedral(G);
    detail::row(c, "D(" + spec + ") = |G| iff cyclic or odd dihedral",
                D == G.order ? "full" : "less", expected_full ? "full" : "less");
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_kth_constants(Budget budget) {
  CriterionResult c{5, "kth constants: D_k(C_n) = kn, D_3(C_2+C_2) = 7, and d_k = D_k - 1"};
  for (int n = 2; n <= 6; ++n) {
    GroupTable G = build_group("cyclic:" + std::to_string(n));
    auto all = detail::all_of(G);
    DavenportSearcher s(G, all, budget);
    for (int k = 1; k <= 3; ++k) {
      int D = s.large_davenport(k).value;
      int d = s.small_davenport(k).value;
      detail::row(c, "D_" + std::to_string(k) + "(C_" + std::to_string(n) + ")", detail::str(D),
                  detail::str(k * n));
      detail::row(c, "d_k = D_k - 1 at C_" + std::to_string(n) + ", k=" + std::to_string(k),
                  detail::str(d), detail::str(D - 1));
    }
  }
  {
    GroupTable G = build_group("abelian:2,2");
    auto all = detail::all_of(G);
    DavenportSearcher s(G, all, budget);
    detail::row(c, "D_3(C_2+C_2)", detail::str(s.large_davenport(3).value), "7");
    detail::row(c, "d_3(C_2+C_2)", detail::str(s.small_davenport(3).value), "6");
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_krull_saturation(Budget budget) {
  CriterionResult c{6, "saturation dichotomy for reflection pairs; seminormality witnesses"};
  for (int n = 2; n <= 8; ++n) {
    GroupTable G = build_group("dihedral:" + std::to_string(n));
    int b = n, ab_idx = n + 1;
    auto verdict = is_saturated_up_to(G, {ab_idx, b}, 3 * G.order, budget);
    std::string computed, expected;
    if (n == 2) {
      computed = verdict.proved_saturated ? "saturated" : "other";
      expected = "saturated";
    } else if (n % 2 == 0) {
      computed = !verdict.proved_saturated && verdict.saturated_up_to_bound() ? "saturated-bounded"
                                                                              : "other";
      expected = "saturated-bounded";
    } else {
      bool ok = false;
      if (verdict.counterexample) {
        auto [S, T] = *verdict.counterexample;
        ok = is_product_one(G, S, budget) && is_product_one(G, T, budget) && T.divides(S) &&
             !is_product_one(G, S.sub(T), budget);
      }
      computed = ok ? "counterexample-validated" : "other";
      expected = "counterexample-validated";
    }
    detail::row(c, "B({ab, b}) in D_" + std::to_string(2 * n) + " saturated iff n even (n=" +
                       std::to_string(n) + ")",
                computed, expected);
  }
  {
    GroupTable G = build_group("dihedral:3");
    auto verdict = is_seminormal_up_to(G, {1, 3}, 3 * G.order, budget);
    Sequence expect = Sequence::single(1).mul(Sequence::single(3, 2));  // a b^2
    detail::row(c, "D_6 over {a,b} seminormality counterexample",
                verdict.counterexample ? verdict.counterexample->to_string(&G) : "none",
                expect.to_string(&G));
  }
  {
    GroupTable G = build_group("dicyclic:2");
    auto A = atoms(G, {1, 4}, budget);
    std::vector<Sequence> expected = {
        parse_sequence("[g1^4]"),       parse_sequence("[g4^4]"),
        parse_sequence("[g1^2, g4^2]"), parse_sequence("[g1^4, g4^2]"),
        parse_sequence("[g1^2, g4^4]"),
    };
    std::sort(A.begin(), A.end());
    std::sort(expected.begin(), expected.end());
    detail::row_bool(c, "A({I,J}) in H_8 is the documented 5-element list", A == expected);
    auto semi = is_seminormal_up_to(G, {1, 4}, 12, budget);
    detail::row_bool(c, "B({I,J}) in H_8 seminormal up to 12",
                     !semi.proved_seminormal && semi.seminormal_up_to_bound());
    auto sat = is_saturated_up_to(G, {1, 4}, 3 * G.order, budget);
    detail::row_bool(c, "B({I,J}) in H_8 not saturated", sat.counterexample.has_value());
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_class_groups(Budget budget) {
  CriterionResult c{7, "class group of B(G) is G/G' (S_3, D_8, H_8, A_4)"};
  struct Case {
    const char* spec;
    std::vector<int> factors;
  };
  for (auto [spec, factors] : {Case{"symmetric:3", {2}}, Case{"dihedral:4", {2, 2}},
                               Case{"dicyclic:2", {2, 2}}, Case{"alternating:4", {3}}}) {
    GroupTable G = build_group(spec);
    auto res = class_group_of_BG(G, 4, 8, budget);
    std::string computed = detail::str(Json(res.class_group.invariant_factors).dump()) +
                           (res.verified && res.surjective ? " verified" : " FAILED");
    detail::row(c, "class group of B(" + std::string(spec) + ")", computed,
                detail::str(Json(factors).dump()) + " verified");
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_counting(Budget budget) {
  CriterionResult c{8, "minimal zero-sum counts over C_n match Phi(n) p_l(n)"};
  for (int n = 5; n <= 10; ++n)
    for (int l = n / 2 + 2; l <= n; ++l) {
      auto r = count_minimal_zero_sum(n, l, budget);
      detail::row(c, "count(n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")",
                  detail::str(*r.brute), detail::str(*r.formula));
    }
  c.recompute();
  return c;
}

inline CriterionResult criterion_savchev_chen(Budget budget) {
  CriterionResult c{9, "structure of long zero-sum free sequences over C_n, n in [3,12]"};
  for (int n = 3; n <= 12; ++n) {
    auto rep = savchev_chen_verify(n, budget);
    detail::row(c, "n=" + std::to_string(n) + " (" + std::to_string(rep.sequences_checked) +
                       " sequences, " + std::to_string(rep.long_atoms_checked) + " long atoms)",
                rep.all_ok() ? "ok" : "failures", "ok");
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_invariant_bridge(Budget budget) {
  CriterionResult c{10, "Noether numbers via Davenport constants; divisor data of M^G"};
  std::vector<std::string> abelian_specs = {"cyclic:1",     "cyclic:2",  "cyclic:3",  "cyclic:4",
                                            "cyclic:5",     "cyclic:6",  "cyclic:7",  "cyclic:8",
                                            "cyclic:9",     "cyclic:10", "cyclic:11", "cyclic:12",
                                            "abelian:2,2",  "abelian:2,4", "abelian:2,2,2",
                                            "abelian:3,3",  "abelian:2,6"};
  for (const auto& spec : abelian_specs) {
    GroupTable G = build_group(spec);
    auto all = detail::all_of(G);
    int beta = noether_number_of_group(G, 1, budget);
    int D = large_davenport(G, all, 1, budget).value;
    detail::row(c, "beta(" + spec + ") = D", detail::str(beta), detail::str(D));
  }
  // kth Noether numbers on the smaller abelian groups
  for (const auto& spec : {"cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
                           "abelian:2,2", "abelian:2,4", "abelian:3,3", "abelian:2,2,2"}) {
    GroupTable G = build_group(spec);
    auto all = detail::all_of(G);
    DavenportSearcher s(G, all, budget);
    for (int k = 2; k <= 3; ++k)
      detail::row(c, "beta_" + std::to_string(k) + "(" + std::string(spec) + ") = D_k",
                  detail::str(noether_number_of_group(G, k, budget)),
                  detail::str(s.large_davenport(k).value));
  }
  detail::row(c, "beta_3(C_2+C_2)",
              detail::str(noether_number_of_group(build_group("abelian:2,2"), 3, budget)), "7");
  // the D_4 value that caps the degree bound chain for the order-24 symmetric group
  detail::row(c, "D_4(C_2+C_2)",
              detail::str(noether_number_of_group(build_group("abelian:2,2"), 4, budget)), "9");
  {
    // one-character module over C_3 with chi repeated three times
    GroupTable G = build_group("cyclic:3");
    CharacterModule M = make_character_module(G, {{{1}}, {{1}}, {{1}}});
    detail::row(c, "e(x_i) for C_3 chi,chi,chi", detail::str(Json(ramification_exponents(M)).dump()),
                "[1,1,1]");
    auto C3 = class_group_MG(M);
    detail::row(c, "class group of M^G (C_3 module)", detail::str(Json(C3.invariant_factors).dump()),
                "[3]");
    detail::row(c, "prime-bearing classes (C_3 module)", detail::str(Json(C3.prime_bearing).dump()),
                detail::str(Json(std::vector<int>{M.weight_index[0]}).dump()));
  }
  {
    GroupTable G = build_group("cyclic:5");
    CharacterModule M = make_character_module(G, {{{1}}, {{2}}, {{3}}});
    detail::row(c, "e(x_i) for C_5 chi,chi^2,chi^3",
                detail::str(Json(ramification_exponents(M)).dump()), "[1,1,1]");
    auto C5 = class_group_MG(M);
    detail::row(c, "class group of M^G (C_5 module)", detail::str(Json(C5.invariant_factors).dump()),
                "[5]");
    std::vector<int> expect = M.weight_index;
    std::sort(expect.begin(), expect.end());
    detail::row(c, "prime-bearing classes (C_5 module)", detail::str(Json(C5.prime_bearing).dump()),
                detail::str(Json(expect).dump()));
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_molien(Budget) {
  CriterionResult c{11, "exact Molien series and extracted degree monoids"};
  const int N = 40;
  {
    auto coeffs = molien_series(a5_icosahedral(), N);
    // oracle: (1 + T^15) / ((1-T^2)(1-T^6)(1-T^10))
    std::vector<long long> oracle(std::size_t(N) + 1, 0);
    oracle[0] = 1;
    oracle[15] = 1;
    for (int b : {2, 6, 10})
      for (int d = b; d <= N; ++d) oracle[std::size_t(d)] += oracle[std::size_t(d - b)];
    detail::row_bool(c, "A_5 icosahedral series matches the closed form to degree 40",
                     coeffs == oracle);
    NumericalMonoid M = block_monoid_from_series(coeffs);
    detail::row(c, "gap set of the A_5 degree monoid", detail::str(Json(M.gaps).dump()),
                "[1,3,5,7,9,11,13]");
    detail::row(c, "D of the A_5 degree monoid", detail::str(numerical_davenport(M, 1).value),
                "15");
  }
  {
    auto coeffs = molien_series(binary_tetrahedral_2d(), N);
    std::vector<long long> support;
    for (int d = 0; d <= N; ++d)
      if (coeffs[std::size_t(d)]) support.push_back(d);
    std::vector<long long> expected = {0, 6, 8};
    for (long long d = 12; d <= N; d += 2) expected.push_back(d);
    detail::row(c, "binary tetrahedral support to degree 40", detail::str(Json(support).dump()),
                detail::str(Json(expected).dump()));
  }
  {
    // the reflection group generated by the three 2x2 sign/swap matrices has
    // a free invariant ring on two degree-4 generators
    auto coeffs = molien_series(pauli_2d(), N);
    std::vector<long long> oracle(std::size_t(N) + 1, 0);
    oracle[0] = 1;
    for (int b : {4, 4})
      for (int d = b; d <= N; ++d) oracle[std::size_t(d)] += oracle[std::size_t(d - b)];
    detail::row_bool(c, "Pauli-group series matches 1/(1-T^4)^2 to degree 40", coeffs == oracle);
    NumericalMonoid M = block_monoid_from_series(coeffs);
    long long Dm = numerical_davenport(M, 1).value;
    detail::row(c, "Pauli degree monoid: content and D, consistent with the degree bound 7",
                detail::str(M.content) + "," + detail::str(Dm) + "," + (Dm <= 7 ? "le" : "gt"),
                "4,4,le");
  }
  c.recompute();
  return c;
}

inline CriterionResult criterion_property_sweeps(Budget budget, std::uint64_t seed = 12345) {
  CriterionResult c{12, "property sweeps: product-set oracle, reduction inequalities, transfers"};
  // (a) DP product sets against the ordering oracle
  {
    std::vector<std::string> specs = {"cyclic:12",  "symmetric:3",  "dicyclic:3",
                                      "alternating:4", "dihedral:6", "abelian:2,6"};
    Rng rng(seed);
    int mismatches = 0, trials_total = 0;
    for (const auto& spec : specs) {
      GroupTable G = build_group(spec);
      int per = 10000 / int(specs.size());
      for (int t = 0; t < per; ++t) {
        int len = 1 + int(rng.below(8));
        std::vector<int> elems;
        for (int i = 0; i < len; ++i) elems.push_back(int(rng.below(G.order)));
        Sequence S = Sequence::from_elements(elems);
        if (!(product_set(G, S, budget) == product_set_by_orderings(G, S))) ++mismatches;
        ++trials_total;
      }
    }
    detail::row(c, "pi DP vs ordering enumeration on " + std::to_string(trials_total) +
                       " random sequences",
                detail::str(mismatches) + " mismatches", "0 mismatches");
  }
  // (b) reduction inequalities over the catalog
  {
    std::vector<std::string> small_catalog = {
        "cyclic:1",  "cyclic:2",  "cyclic:3",  "cyclic:4",     "cyclic:5",   "cyclic:6",
        "cyclic:7",  "cyclic:8",  "abelian:2,2", "abelian:2,4", "abelian:2,2,2",
        "dihedral:3", "dihedral:4", "dicyclic:2"};
    auto rep = verify_reduction_inequalities(small_catalog, 3, budget);
    detail::row(c, "reduction inequalities, orders <= 8, k,l <= 3 (" +
                       std::to_string(rep.rows.size()) + " instances, " +
                       std::to_string(rep.notices.size()) + " skipped)",
                detail::str(rep.violations) + " violations", "0 violations");
    for (const auto& n : rep.notices) c.notices.push_back(n);
    std::vector<std::string> larger = {"abelian:3,3", "cyclic:9", "cyclic:10", "cyclic:12",
                                       "abelian:2,6", "dihedral:5", "dihedral:6", "dicyclic:3",
                                       "alternating:4"};
    auto rep2 = verify_reduction_inequalities(larger, 2, budget);
    detail::row(c, "reduction inequalities, orders <= 12, k,l <= 2 (" +
                       std::to_string(rep2.rows.size()) + " instances, " +
                       std::to_string(rep2.notices.size()) + " skipped)",
                detail::str(rep2.violations) + " violations", "0 violations");
    for (const auto& n : rep2.notices) c.notices.push_back(n);
  }
  // (c) transfers preserve sets of lengths
  {
    struct Inst {
      const char* spec;
      std::vector<int> g1, g2;
    };
    std::vector<Inst> instances = {{"cyclic:4", {1}, {}},
                                   {"cyclic:6", {2}, {1, 3}},
                                   {"cyclic:6", {1}, {5}},
                                   {"cyclic:8", {2}, {1}},
                                   {"cyclic:12", {2}, {3, 4}}};
    int mismatches = 0, checked = 0;
    for (const auto& inst : instances) {
      GroupTable G = build_group(inst.spec);
      auto t = transfer_theta(G, inst.g1, inst.g2, budget);
      auto chk = transfer_preserves_lengths_check(t, 200, seed, 10, budget);
      checked += chk.samples_checked;
      mismatches += int(chk.mismatches.size());
      if (!t.characterizations_agree) ++mismatches;
    }
    detail::row(c, "transfer maps preserve length sets on " + std::to_string(checked) + " samples",
                detail::str(mismatches) + " mismatches", "0 mismatches");
  }
  c.recompute();
  return c;
}

inline CriterionResult run_criterion(int number, Budget budget, std::uint64_t seed = 12345) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (number) {
    case 1: r = criterion_cyclic_davenport(budget); break;
    case 2: r = criterion_index2_cyclic(budget); break;
    case 3: r = criterion_pq_groups(budget); break;
    case 4: r = criterion_dichotomy(budget); break;
    case 5: r = criterion_kth_constants(budget); break;
    case 6: r = criterion_krull_saturation(budget); break;
    case 7: r = criterion_class_groups(budget); break;
    case 8: r = criterion_counting(budget); break;
    case 9: r = criterion_savchev_chen(budget); break;
    case 10: r = criterion_invariant_bridge(budget); break;
    case 11: r = criterion_molien(budget); break;
    case 12: r = criterion_property_sweeps(budget, seed); break;
    default: throw std::invalid_argument("no such criterion");
  }
  auto t1 = std::chrono::steady_clock::now();
  r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

/// "paper": all twelve criteria. "quick": a fast subset used for smoke tests.
inline std::vector<CriterionResult> run_suite(const std::string& suite, Budget budget,
                                              int threads = 1, std::uint64_t seed = 12345) {
  std::vector<int> numbers;
  if (suite == "paper") {
    for (int i = 1; i <= 12; ++i) numbers.push_back(i);
  } else if (suite == "quick") {
    numbers = {1, 3, 7, 11};
  } else {
    throw std::invalid_argument("unknown suite: " + suite + " (expected paper or quick)");
  }
  std::vector<CriterionResult> out(numbers.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < numbers.size(); ++i) out[i] = run_criterion(numbers[i], budget, seed);
    return out;
  }
  std::vector<std::future<CriterionResult>> futs;
  for (std::size_t i = 0; i < numbers.size(); ++i)
    futs.push_back(std::async(std::launch::async, [&, i] { return run_criterion(numbers[i], budget, seed); }));
  for (std::size_t i = 0; i < numbers.size(); ++i) out[i] = futs[i].get();
  return out;
}

inline std::vector<RegressionRow> flatten_rows(const std::vector<CriterionResult>& results) {
  std::vector<RegressionRow> rows;
  for (const auto& c : results)
    for (const auto& r : c.rows) rows.push_back(r);
  return rows;
}

}  // namespace zerosum
