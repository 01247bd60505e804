#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/davenport.hpp"
#include "zerosum/group.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

/// d*(G) = sum (n_i - 1) over the invariant factors of an abelian group.
inline int d_star(const GroupTable& G) {
  AbelianStructure A = abelian_structure(G);
  int s = 0;
  for (int n : A.invariant_factors) s += n - 1;
  return s;
}

inline int abelian_rank(const GroupTable& G) {
  return int(abelian_structure(G).invariant_factors.size());
}

struct DStarCheck {
  int d_star_value = 0;
  int d_value = 0;
  bool equal = false;
  Sequence witness;  // a product-one free sequence of length d
};

inline DStarCheck verify_dstar_equals_d(const GroupTable& G, Budget budget = {}) {
  DStarCheck c;
  c.d_star_value = d_star(G);
  std::vector<int> all(G.order);
  for (int i = 0; i < G.order; ++i) all[i] = i;
  auto r = small_davenport(G, all, 1, budget);
  c.d_value = r.value;
  c.witness = r.witness;
  c.equal = c.d_value == c.d_star_value;
  return c;
}

struct DkFormulaCheck {
  int k = 1;
  int computed_dk = 0;
  int formula_value = 0;  // d(G) + (k-1) exp(G)
  bool equal = false;
};

/// For abelian G of rank <= 2, d_k(G) = d(G) + (k-1) exp(G); this computes
/// both sides independently.
inline DkFormulaCheck dk_formula_check(const GroupTable& G, int k, Budget budget = {}) {
  if (!G.is_abelian()) throw std::invalid_argument("dk_formula_check: abelian groups only");
  if (abelian_rank(G) > 2)
    throw std::invalid_argument("dk_formula_check: the closed formula needs rank <= 2");
  std::vector<int> all(G.order);
  for (int i = 0; i < G.order; ++i) all[i] = i;
  DkFormulaCheck c;
  c.k = k;
  c.computed_dk = small_davenport(G, all, k, budget).value;
  c.formula_value = small_davenport(G, all, 1, budget).value + (k - 1) * G.exponent();
  c.equal = c.computed_dk == c.formula_value;
  return c;
}

// --- the index of a sequence over a cyclic group ----------------------------

namespace detail {

inline std::vector<int> cyclic_generators(const GroupTable& G) {
  std::vector<int> gens;
  for (int g = 0; g < G.order; ++g)
    if (G.elt_order[g] == G.order) gens.push_back(g);
  if (gens.empty() && G.order == 1) gens.push_back(0);
  return gens;
}

/// x = m * g with m in [1, n]; the identity maps to n by convention.
inline int dlog_in_window(const GroupTable& G, int g, int x) {
  int cur = 0;
  for (int m = 1; m <= G.order; ++m) {
    cur = G.op(cur, g);
    if (cur == x) return m;
  }
  throw std::logic_error("dlog: generator does not generate");
}

}  // namespace detail

/// ||S||_g = (sum of the digits of S base g) / n, digits in [1, n].
inline Rational norm_wrt_generator(const GroupTable& G, const Sequence& S, int g) {
  long long total = 0;
  for (auto& [x, k] : S.terms) total += (long long)detail::dlog_in_window(G, g, x) * k;
  return Rational(total, G.order);
}

/// ind(S) = min over generators g of ||S||_g. G must be cyclic of order >= 2.
inline Rational sequence_index(const GroupTable& G, const Sequence& S) {
  if (G.order < 2) throw std::invalid_argument("sequence_index: order must be >= 2");
  auto gens = detail::cyclic_generators(G);
  if (gens.empty()) throw std::invalid_argument("sequence_index: group is not cyclic");
  std::optional<Rational> best;
  for (int g : gens) {
    Rational v = norm_wrt_generator(G, S, g);
    if (!best || v < *best) best = v;
  }
  return *best;
}

// --- partition counting ------------------------------------------------------

/// Number of integer partitions of n into exactly l parts, by the standard
/// recurrence p(n, l) = p(n-1, l-1) + p(n-l, l).
inline long long partitions_into_parts(int n, int l) {
  if (n < 0 || l < 0) return 0;
  if (n == 0) return l == 0 ? 1 : 0;
  if (l == 0 || l > n) return 0;
  std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(l + 1, 0));
  p[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, l); ++j)
      p[i][j] = p[i - 1][j - 1] + (i - j >= 0 ? p[i - j][j] : 0);
  return p[n][l];
}

struct MinimalZeroSumCount {
  int n = 0, length = 0;
  std::optional<long long> formula;  // Phi(n) * p_l(n), when l >= floor(n/2) + 2
  std::optional<long long> brute;    // atom count by enumeration, within budget
};

/// Number of minimal zero-sum sequences over C_n of length l: closed formula
/// in the long range, with a brute-force enumeration cross-check.
inline MinimalZeroSumCount count_minimal_zero_sum(int n, int l, Budget budget = {},
                                                  bool with_brute = true) {
  if (l < 2 || l > n) throw std::invalid_argument("count_minimal_zero_sum: need 2 <= l <= n");
  MinimalZeroSumCount out;
  out.n = n;
  out.length = l;
  if (l >= n / 2 + 2) out.formula = euler_phi(n) * partitions_into_parts(n, l);
  if (with_brute) {
    GroupTable G = build_group("cyclic:" + std::to_string(n));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    long long count = 0;
    for (const auto& A : atoms(G, all, budget))
      if (A.length() == l) ++count;
    out.brute = count;
  }
  return out;
}

// --- Savchev-Chen structure ---------------------------------------------------

struct SavchevChenReport {
  int n = 0;
  int threshold = 0;          // least length covered by the structure check
  int sequences_checked = 0;  // zero-sum free S with |S| >= threshold
  int orbit_representatives = 0;
  // per representative: the smallest generator realizing the decomposition
  // and how many generators work (several may)
  std::vector<std::tuple<Sequence, int, int>> representative_generators;
  std::vector<Sequence> failures;  // no valid decomposition found (expected empty)
  // second part: atoms of length >= floor(n/2) + 2 all have index 1
  int long_atoms_checked = 0;
  std::vector<Sequence> index_failures;  // expected empty
  bool all_ok() const { return failures.empty() && index_failures.empty(); }
};

namespace detail {

struct SavchevDecomposition {
  int generator = -1;
  std::vector<int> digits;  // m_1 <= ... ; contains 1; sum < n
};

/// Check the structure statement for one zero-sum free S and one generator g.
inline bool savchev_holds_for(const GroupTable& G, const Sequence& S, int g) {
  int n = G.order;
  std::vector<int> digits;
  long long sum = 0;
  for (auto& [x, k] : S.terms) {
    int m = dlog_in_window(G, g, x);
    for (int i = 0; i < k; ++i) digits.push_back(m);
    sum += (long long)m * k;
  }
  if (std::find(digits.begin(), digits.end(), 1) == digits.end()) return false;
  if (sum >= n) return false;
  // subsequence sums must be exactly {g, 2g, ..., (sum) g}, i.e. all of
  // [1, sum] as digit subset sums
  std::vector<char> reachable(std::size_t(sum) + 1, 0);
  reachable[0] = 1;
  for (int m : digits)
    for (long long v = sum - m; v >= 0; --v)
      if (reachable[v]) reachable[v + m] = 1;
  for (long long v = 1; v <= sum; ++v)
    if (!reachable[v]) return false;
  return true;
}

}  // namespace detail

/// Exhaustively verifies the structure of long zero-sum free sequences over
/// C_n. Enumeration runs once per orbit under multiplication by units; each
/// representative's orbit is then re-expanded and re-verified elementwise.
inline SavchevChenReport savchev_chen_verify(int n, Budget budget = {}, int cap = 14) {
  if (n < 3) throw std::invalid_argument("savchev_chen_verify: n must be >= 3");
  if (n > cap) throw budget_error("savchev_chen_verify: n exceeds the configured cap");
  GroupTable G = build_group("cyclic:" + std::to_string(n));
  SavchevChenReport rep;
  rep.n = n;
  rep.threshold = n / 2 + 1;  // least integer length with |S| >= (n+1)/2

  std::vector<int> units;
  for (int u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  auto unit_image = [&](const Sequence& S, int u) {
    std::vector<int> elems;
    for (auto& [x, k] : S.terms)
      for (int i = 0; i < k; ++i) elems.push_back(int((long long)x * u % n));
    return Sequence::from_elements(elems);
  };

  // collect all zero-sum free sequences of length >= threshold
  std::vector<Sequence> zsf;
  {
    std::vector<int> elems;
    std::uint64_t nodes = 0;
    std::function<void(int, std::uint64_t)> rec = [&](int start, std::uint64_t sums) {
      if (int(elems.size()) >= rep.threshold) zsf.push_back(Sequence::from_elements(elems));
      for (int g = std::max(start, 1); g < n; ++g) {
        if (++nodes > budget.max_nodes) throw budget_error("savchev_chen_verify: node budget");
        std::uint64_t ns = sums;
        std::uint64_t cur = sums | 1;  // include the empty sum
        std::uint64_t shifted = 0, tmp = cur;
        while (tmp) {
          int x = __builtin_ctzll(tmp);
          tmp &= tmp - 1;
          shifted |= std::uint64_t(1) << ((x + g) % n);
        }
        ns |= shifted;
        if (ns & 1) continue;  // not zero-sum free any more
        elems.push_back(g);
        rec(g, ns);
        elems.pop_back();
      }
    };
    rec(1, 0);
  }

  for (const auto& S : zsf) {
    // canonical orbit representative: lexicographically least unit image
    Sequence canon = S;
    for (int u : units) {
      Sequence img = unit_image(S, u);
      if (img < canon) canon = img;
    }
    if (!(canon == S)) continue;
    ++rep.orbit_representatives;
    {
      int smallest = -1, working = 0;
      for (int g = 1; g < n; ++g) {
        if (std::gcd(g, n) != 1) continue;
        if (detail::savchev_holds_for(G, S, g)) {
          if (smallest < 0) smallest = g;
          ++working;
        }
      }
      rep.representative_generators.emplace_back(S, smallest, working);
    }
    for (int u : units) {
      Sequence img = unit_image(S, u);
      ++rep.sequences_checked;
      bool ok = false;
      for (int g = 1; g < n && !ok; ++g) {
        if (std::gcd(g, n) != 1) continue;
        ok = detail::savchev_holds_for(G, img, g);
      }
      if (!ok) rep.failures.push_back(img);
    }
  }

  // part two: long atoms have index 1
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  int long_len = n / 2 + 2;
  for (const auto& A : atoms(G, all, budget)) {
    if (A.length() < long_len) continue;
    ++rep.long_atoms_checked;
    if (sequence_index(G, A) != Rational(1)) rep.index_failures.push_back(A);
  }
  return rep;
}

// --- transfer homomorphisms ---------------------------------------------------

/// The transfer B(G0) -> B(G0*) collapsing each g in G1 to e(g) g, where
/// e(g) = min{k >= 1 : k g lies in <G0 minus g>}.
struct TransferTheta {
  const GroupTable* G = nullptr;
  std::vector<int> g0, g1, g2;
  std::map<int, int> e_of;          // g in g1 -> e(g)
  std::vector<int> image_alphabet;  // sorted distinct
  bool characterizations_agree = true;

  Sequence apply(const Sequence& B) const {
    Sequence out;
    std::vector<int> elems;
    for (auto& [g, k] : B.terms) {
      auto it = e_of.find(g);
      if (it == e_of.end()) {
        for (int i = 0; i < k; ++i) elems.push_back(g);
      } else {
        int e = it->second;
        if (k % e != 0)
          throw std::invalid_argument("transfer: multiplicity not divisible by e(g)");
        int img = G->power(g, e);
        for (int i = 0; i < k / e; ++i) elems.push_back(img);
      }
    }
    return Sequence::from_elements(elems);
  }
};

inline TransferTheta transfer_theta(const GroupTable& G, const std::vector<int>& G1,
                                    const std::vector<int>& G2, Budget budget = {}) {
  TransferTheta t;
  t.G = &G;
  t.g1 = detail::sorted_unique(G1);
  t.g2 = detail::sorted_unique(G2);
  for (int g : t.g1)
    if (std::binary_search(t.g2.begin(), t.g2.end(), g))
      throw std::invalid_argument("transfer_theta: G1 and G2 must be disjoint");
  t.g0 = t.g1;
  t.g0.insert(t.g0.end(), t.g2.begin(), t.g2.end());
  t.g0 = detail::sorted_unique(t.g0);
  if (!detail::pairwise_commuting(G, t.g0))
    throw std::invalid_argument("transfer_theta: alphabet must be commuting");

  DavenportSearcher searcher(G, t.g0, budget);
  const auto& atom_list = searcher.atoms();
  for (int g : t.g1) {
    // (a) min{k : k g in <G0 minus g>}
    std::vector<int> others;
    for (int h : t.g0)
      if (h != g) others.push_back(h);
    Subgroup span = subgroup_closure(G, others);
    int e_min_subgroup = 0;
    std::vector<int> ks;
    for (int k = 1; k <= G.elt_order[g]; ++k)
      if (span.contains(G.power(g, k))) {
        if (!e_min_subgroup) e_min_subgroup = k;
        ks.push_back(k);
      }
    int e_gcd_subgroup = 0;
    for (int k : ks) e_gcd_subgroup = int(std::gcd((long long)e_gcd_subgroup, (long long)k));
    // (c) min positive v_g over atoms; (d) gcd of v_g over atoms
    int idx = int(std::lower_bound(searcher.alphabet().begin(), searcher.alphabet().end(), g) -
                  searcher.alphabet().begin());
    int e_min_atom = 0, e_gcd_atom = 0;
    for (const auto& A : atom_list) {
      int v = A[idx];
      if (!v) continue;
      if (!e_min_atom || v < e_min_atom) e_min_atom = v;
      e_gcd_atom = int(std::gcd((long long)e_gcd_atom, (long long)v));
    }
    if (!e_min_atom) e_min_atom = e_min_subgroup;  // g appears in no atom only if unusable
    if (!e_gcd_atom) e_gcd_atom = e_gcd_subgroup;
    if (!(e_min_subgroup == e_gcd_subgroup && e_min_subgroup == e_min_atom &&
          e_min_subgroup == e_gcd_atom))
      t.characterizations_agree = false;
    t.e_of[g] = e_min_subgroup;
  }
  std::vector<int> img;
  for (int g : t.g1) img.push_back(G.power(g, t.e_of[g]));
  for (int g : t.g2) img.push_back(g);
  t.image_alphabet = detail::sorted_unique(img);
  return t;
}

struct TransferLengthCheck {
  int samples_requested = 0;
  int samples_checked = 0;
  std::vector<Sequence> mismatches;  // expected empty
  bool ok() const { return mismatches.empty(); }
};

/// For seeded random product-one B over G0 with |B| <= max_len, the sets of
/// factorization lengths of B and theta(B) must coincide.
inline TransferLengthCheck transfer_preserves_lengths_check(const TransferTheta& t, int samples,
                                                            std::uint64_t seed = 1,
                                                            int max_len = 10,
                                                            Budget budget = {}) {
  TransferLengthCheck out;
  out.samples_requested = samples;
  const GroupTable& G = *t.G;
  ProductEngine src(G, t.g0, budget);
  ProductEngine dst(G, t.image_alphabet, budget);
  Rng rng(seed);
  int attempts = 0;
  while (out.samples_checked < samples && attempts < samples * 200) {
    ++attempts;
    int len = 2 + int(rng.below(std::uint64_t(max_len - 1)));
    std::vector<int> elems;
    int sum = 0;
    for (int i = 0; i + 1 < len; ++i) {
      int g = t.g0[std::size_t(rng.below(t.g0.size()))];
      elems.push_back(g);
      sum = G.op(sum, g);
    }
    int last = G.inverse(sum);
    if (!std::binary_search(t.g0.begin(), t.g0.end(), last)) continue;
    elems.push_back(last);
    Sequence B = Sequence::from_elements(elems);
    Sequence img = t.apply(B);
    std::uint64_t lhs = src.length_set(src.to_mult(B));
    std::uint64_t rhs = dst.length_set(dst.to_mult(img));
    ++out.samples_checked;
    if (lhs != rhs) out.mismatches.push_back(B);
  }
  return out;
}

}  // namespace zerosum
