#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/davenport.hpp"
#include "zerosum/group.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

/// Verdicts are always bounded and say so: a clean outcome is only
/// "no counterexample up to L" unless a proof shortcut applies.
struct SaturationVerdict {
  bool proved_saturated = false;  // <G0> abelian: saturation holds outright
  int bound = 0;
  std::optional<std::pair<Sequence, Sequence>> counterexample;  // (S, T): T | S, S-T not product-one
  SearchStats stats;
  bool saturated_up_to_bound() const { return !counterexample.has_value(); }
};

/// Searches product-one pairs T | S with |S| <= L for a saturation failure of
/// B(G0) in F(G0). First counterexample in canonical order is returned.
inline SaturationVerdict is_saturated_up_to(const GroupTable& G, const std::vector<int>& G0,
                                            int L, Budget budget = {}) {
  if (L < 1) throw std::invalid_argument("is_saturated_up_to: L must be >= 1");
  SaturationVerdict v;
  v.bound = L;
  std::vector<int> alphabet = detail::sorted_unique(G0);
  Subgroup span = subgroup_closure(G, alphabet);
  SubgroupTable spanT = subgroup_as_table(G, span);
  if (spanT.table.is_abelian()) {
    v.proved_saturated = true;
    return v;
  }
  ProductEngine eng(G, alphabet, budget);
  MultVec m(alphabet.size(), 0);
  MultVec rest(alphabet.size(), 0);
  std::uint64_t nodes = 0;
  // canonical DFS over multisets of size <= L; test product-one nodes
  std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int len) -> bool {
    for (std::size_t i = start; i < alphabet.size(); ++i) {
      if (++nodes > budget.max_nodes) throw budget_error("saturation search: node budget exceeded");
      m[i]++;
      if (eng.product_one(m)) {
        bool found = false;
        eng.for_each_divisor(m, [&](const MultVec& t) {
          if (found) return;
          int tl = 0, total = len + 1;
          for (auto x : t) tl += x;
          if (tl == 0 || tl == total) return;
          if (!eng.product_one(t)) return;
          for (std::size_t j = 0; j < m.size(); ++j) rest[j] = std::uint16_t(m[j] - t[j]);
          if (!eng.product_one(rest)) {
            v.counterexample = {eng.to_sequence(m), eng.to_sequence(t)};
            found = true;
          }
        });
        if (found) return true;
      }
      bool done = len + 1 < L && rec(i, len + 1);
      m[i]--;
      if (done) return true;
    }
    return false;
  };
  rec(0, 0);
  v.stats.nodes = nodes;
  v.stats.memo_entries = eng.memo_entries();
  return v;
}

struct KrullReport {
  bool property_P = false;
  bool span_abelian = false;
  std::optional<bool> krull;  // decided via property P, or via a found counterexample
  std::string method;
  SaturationVerdict saturation;
  std::vector<Sequence> atoms_of_G0;  // small alphabets only, for reporting
};

/// Property P: for each two elements g, h of G0, <h> is normal in <g,h> or
/// <g> is normal in <g,h>. Under P, B(G0) is Krull iff <G0> is abelian.
inline KrullReport property_P_and_krull_criterion(const GroupTable& G, const std::vector<int>& G0,
                                                  int L = 0, Budget budget = {}) {
  std::vector<int> alphabet = detail::sorted_unique(G0);
  if (L <= 0) L = 3 * G.order;
  KrullReport rep;
  rep.property_P = true;
  for (std::size_t a = 0; a < alphabet.size() && rep.property_P; ++a)
    for (std::size_t b = a + 1; b < alphabet.size() && rep.property_P; ++b) {
      int g = alphabet[a], h = alphabet[b];
      Subgroup span2 = subgroup_closure(G, {g, h});
      SubgroupTable T = subgroup_as_table(G, span2);
      auto local = [&](int x) {
        return int(std::lower_bound(T.to_parent.begin(), T.to_parent.end(), x) -
                   T.to_parent.begin());
      };
      auto normal_in_span = [&](int x) {
        Subgroup cyc = subgroup_closure(T.table, {local(x)});
        return cyc.is_normal;
      };
      if (!normal_in_span(h) && !normal_in_span(g)) rep.property_P = false;
    }
  Subgroup span = subgroup_closure(G, alphabet);
  SubgroupTable spanT = subgroup_as_table(G, span);
  rep.span_abelian = spanT.table.is_abelian();
  if (rep.property_P) {
    rep.krull = rep.span_abelian;
    rep.method = "property-P";
    if (!rep.span_abelian) rep.saturation = is_saturated_up_to(G, alphabet, L, budget);
  } else {
    rep.method = "bounded-search";
    rep.saturation = is_saturated_up_to(G, alphabet, L, budget);
    if (rep.saturation.counterexample)
      rep.krull = false;  // saturation failed, so not Krull
    else if (rep.span_abelian)
      rep.krull = true;
  }
  if (alphabet.size() <= 3) {
    try {
      rep.atoms_of_G0 = atoms(G, alphabet, budget);
    } catch (const budget_error&) {
      // atom list is informational here; skip it when over budget
    }
  }
  return rep;
}

struct SeminormalVerdict {
  bool proved_seminormal = false;  // <G0> abelian: Krull, hence seminormal
  int bound = 0;
  std::optional<Sequence> counterexample;  // x with x^2, x^3 product-one but x not
  SearchStats stats;
  bool seminormal_up_to_bound() const { return !counterexample.has_value(); }
};

/// Searches x in F(G0) with |x| <= L, x^[2] and x^[3] in B(G0) but x not.
/// It suffices to search F(G0): F(G0) is seminormal, so any quotient-group
/// counterexample with x^2, x^3 in B already lies in F(G0).
inline SeminormalVerdict is_seminormal_up_to(const GroupTable& G, const std::vector<int>& G0,
                                             int L, Budget budget = {}) {
  if (L < 1) throw std::invalid_argument("is_seminormal_up_to: L must be >= 1");
  SeminormalVerdict v;
  v.bound = L;
  std::vector<int> alphabet = detail::sorted_unique(G0);
  Subgroup span = subgroup_closure(G, alphabet);
  if (subgroup_as_table(G, span).table.is_abelian()) {
    v.proved_seminormal = true;
    return v;
  }
  ProductEngine eng(G, alphabet, budget);
  MultVec m(alphabet.size(), 0);
  std::uint64_t nodes = 0;
  MultVec twice(alphabet.size()), thrice(alphabet.size());
  std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int len) -> bool {
    for (std::size_t i = start; i < alphabet.size(); ++i) {
      if (++nodes > budget.max_nodes)
        throw budget_error("seminormality search: node budget exceeded");
      m[i]++;
      if (!eng.product_one(m)) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          twice[j] = std::uint16_t(2 * m[j]);
          thrice[j] = std::uint16_t(3 * m[j]);
        }
        if (eng.product_one(twice) && eng.product_one(thrice)) {
          v.counterexample = eng.to_sequence(m);
          m[i]--;
          return true;
        }
      }
      bool done = len + 1 < L && rec(i, len + 1);
      m[i]--;
      if (done) return true;
    }
    return false;
  };
  rec(0, 0);
  v.stats.nodes = nodes;
  v.stats.memo_entries = eng.memo_entries();
  return v;
}

/// Class group of B(G) in F(G) for G0 = G: the map [S] -> pi(S) G' is an
/// isomorphism onto G/G'. verify() spot checks it constructively: for pairs
/// S, S' with products in the same coset it builds C, C' in B(G) with
/// S*C = S'*C' from an explicit commutator word.
struct ClassGroupResult {
  Abelianization class_group;       // G/G' in invariant-factor form
  int pairs_verified = 0;
  int classes_seen = 0;
  bool surjective = false;
  bool verified = true;
};

namespace detail {

/// For each c in G', a word of (a, b) pairs whose commutators multiply to c.
inline std::vector<std::vector<std::pair<int, int>>> commutator_words(const GroupTable& G,
                                                                      const Subgroup& Gp) {
  std::vector<std::vector<std::pair<int, int>>> word(G.order);
  std::vector<char> known(G.order, 0);
  known[0] = 1;
  std::vector<int> frontier{0};
  std::vector<std::pair<int, int>> comms;  // one (a,b) per distinct commutator value
  {
    std::vector<char> seen(G.order, 0);
    for (int a = 0; a < G.order; ++a)
      for (int b = 0; b < G.order; ++b) {
        int c = G.op(G.op(G.inverse(a), G.inverse(b)), G.op(a, b));
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back({a, b});
        }
      }
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (auto [a, b] : comms) {
        int c = G.op(G.op(G.inverse(a), G.inverse(b)), G.op(a, b));
        int y = G.op(x, c);
        if (!known[y]) {
          known[y] = 1;
          word[y] = word[x];
          word[y].push_back({a, b});
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  for (int c : Gp.members)
    if (!known[c]) throw std::logic_error("commutator word BFS failed to reach G'");
  return word;
}

}  // namespace detail

inline ClassGroupResult class_group_of_BG(const GroupTable& G, int len_bound = 4,
                                          int pairs_per_class = 8, Budget budget = {}) {
  ClassGroupResult out;
  out.class_group = abelianization(G);
  Subgroup Gp = commutator_subgroup(G);
  auto words = detail::commutator_words(G, Gp);
  std::vector<int> all(G.order);
  for (int i = 0; i < G.order; ++i) all[i] = i;
  ProductEngine eng(G, all, budget);

  // enumerate sequences of length <= len_bound, grouped by the coset of pi
  std::vector<std::vector<Sequence>> by_class(out.class_group.table.order);
  std::vector<int> elems;
  std::function<void(int, int)> enumerate = [&](int start, int remaining) {
    if (!elems.empty()) {
      Sequence S = Sequence::from_elements(elems);
      std::uint64_t pi = eng.pi(eng.to_mult(S));
      int cls = -1;
      // pi(S) must lie in a single G'-coset
      for (int x = 0; x < G.order; ++x)
        if ((pi >> x) & 1) {
          int c = out.class_group.proj[x];
          if (cls == -1) cls = c;
          if (c != cls) out.verified = false;
        }
      if (int(by_class[cls].size()) < pairs_per_class + 1) by_class[cls].push_back(S);
    }
    if (remaining == 0) return;
    for (int g = elems.empty() ? 0 : elems.back(); g < G.order; ++g) {
      elems.push_back(g);
      enumerate(g, remaining - 1);
      elems.pop_back();
    }
  };
  enumerate(0, len_bound);

  for (auto& bucket : by_class)
    if (!bucket.empty()) ++out.classes_seen;
  out.surjective = out.classes_seen == out.class_group.table.order;

  // constructive equivalence check within each class
  for (auto& bucket : by_class) {
    for (std::size_t i = 1; i < bucket.size(); ++i) {
      const Sequence& S = bucket[0];
      const Sequence& S2 = bucket[i];
      std::uint64_t piS = eng.pi(eng.to_mult(S)), piS2 = eng.pi(eng.to_mult(S2));
      int g = __builtin_ctzll(piS), g2 = __builtin_ctzll(piS2);
      int c = G.op(g, G.inverse(g2));  // lies in G'
      Sequence T;
      {
        std::vector<int> chunk;
        for (auto [a, b] : words[c]) {
          chunk.push_back(G.inverse(a));
          chunk.push_back(G.inverse(b));
          chunk.push_back(a);
          chunk.push_back(b);
        }
        T = Sequence::from_elements(chunk);
      }
      Sequence C = S2.mul(Sequence::single(G.inverse(g))).mul(T);
      Sequence C2 = S.mul(Sequence::single(G.inverse(g))).mul(T);
      bool okC = eng.product_one(eng.to_mult(C));
      bool okC2 = eng.product_one(eng.to_mult(C2));
      bool equal = S.mul(C) == S2.mul(C2);
      if (!(okC && okC2 && equal)) out.verified = false;
      ++out.pairs_verified;
    }
  }
  return out;
}

/// Factorization counting (multisets of atoms), capped. Used by the
/// factoriality check of B(G).
inline int count_factorizations(DavenportSearcher& s, const MultVec& m, int cap) {
  const auto& atoms = s.atoms();
  ProductEngine* eng = s.engine();
  std::function<int(const MultVec&, std::size_t, int)> rec = [&](const MultVec& cur,
                                                                 std::size_t min_idx,
                                                                 int need) -> int {
    bool empty = true;
    for (auto v : cur)
      if (v) empty = false;
    if (empty) return 1;
    int total = 0;
    MultVec rest(cur.size());
    for (std::size_t ai = min_idx; ai < atoms.size() && total < need; ++ai) {
      bool div = true;
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (atoms[ai][j] > cur[j]) {
          div = false;
          break;
        }
      if (!div) continue;
      for (std::size_t j = 0; j < cur.size(); ++j) rest[j] = std::uint16_t(cur[j] - atoms[ai][j]);
      bool rest_po = eng ? eng->product_one(rest) : s.product_one(rest);
      if (!rest_po) continue;
      total += rec(rest, ai, need - total);
    }
    return total;
  };
  return rec(m, 0, cap);
}

struct FactorialityReport {
  bool factorial = false;
  std::optional<Sequence> witness;  // a product-one sequence with >= 2 factorizations
  int witness_factorizations = 0;
};

/// B(G) is factorial iff |G| <= 2. For |G| <= 2 this checks unique
/// factorization exhaustively up to length L; for |G| >= 3 it finds a
/// sequence with two distinct factorizations and re-validates it.
inline FactorialityReport factoriality_check(const GroupTable& G, int L = 8, Budget budget = {}) {
  std::vector<int> all(G.order);
  for (int i = 0; i < G.order; ++i) all[i] = i;
  DavenportSearcher s(G, all, budget);
  FactorialityReport rep;
  if (G.order <= 2) {
    rep.factorial = true;
    std::vector<int> elems;
    std::function<void(int, int)> recurse = [&](int start, int remaining) {
      if (!elems.empty()) {
        Sequence S = Sequence::from_elements(elems);
        MultVec m = s.to_mult(S);
        if (s.product_one(m) && count_factorizations(s, m, 2) >= 2) {
          rep.factorial = false;
          rep.witness = S;
        }
      }
      if (remaining == 0 || !rep.factorial) return;
      for (int g = elems.empty() ? 0 : elems.back(); g < G.order; ++g) {
        elems.push_back(g);
        recurse(g, remaining - 1);
        elems.pop_back();
      }
    };
    recurse(0, L);
    return rep;
  }
  rep.factorial = false;
  // construct a witness in the shape of the general obstruction
  Sequence S;
  int g3 = -1;
  for (int g = 0; g < G.order; ++g)
    if (G.elt_order[g] >= 3) {
      g3 = g;
      break;
    }
  if (g3 >= 0) {
    int n = G.elt_order[g3];
    S = Sequence::single(g3, n).mul(Sequence::single(G.inverse(g3), n));
  } else {
    // exponent 2 forces G abelian with at least two independent involutions
    int e1 = 1, e2 = -1;
    for (int g = 2; g < G.order; ++g)
      if (g != G.op(e1, 1) && g != e1) {
        e2 = g;
        break;
      }
    int e3 = G.op(e1, e2);
    S = Sequence::from_elements({e1, e2, e3, e1, e2, e3});
  }
  MultVec m = s.to_mult(S);
  int count = count_factorizations(s, m, 3);
  if (count < 2) throw std::logic_error("factoriality witness failed to validate");
  rep.witness = S;
  rep.witness_factorizations = count;
  return rep;
}

}  // namespace zerosum
