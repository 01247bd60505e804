#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zerosum/abelian.hpp"
#include "zerosum/davenport.hpp"
#include "zerosum/group.hpp"
#include "zerosum/numerical_monoid.hpp"

namespace zerosum {

/// A diagonal module of an abelian group: the weights chi_1..chi_n of the
/// variables x_1..x_n, realized inside an explicit table for the character
/// group. Monomials are exponent vectors in N_0^n; the invariant ones form
/// the monoid M^G.
struct CharacterModule {
  GroupTable group;                      // abelian G
  CharacterGroup characters;             // structure data for G
  std::vector<CharacterVector> weights;  // one per variable
  GroupTable ghat;                       // table of the character group
  std::vector<int> weight_index;         // index of chi_i inside ghat
  bool multiplicity_free = true;

  int variables() const { return int(weights.size()); }

  int char_to_index(const CharacterVector& chi) const {
    const auto& f = characters.structure.invariant_factors;
    int idx = 0;
    for (std::size_t i = 0; i < f.size(); ++i) idx = idx * f[i] + chi.residues[i];
    return idx;
  }

  std::vector<int> distinct_weights() const {
    std::vector<int> v = weight_index;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }
};

inline CharacterModule make_character_module(const GroupTable& G,
                                             const std::vector<CharacterVector>& weights) {
  if (!G.is_abelian()) throw std::invalid_argument("character modules need an abelian group");
  CharacterModule M;
  M.group = G;
  M.characters = character_group(G);
  const auto& f = M.characters.structure.invariant_factors;
  for (const auto& chi : weights) {
    if (chi.residues.size() != f.size())
      throw std::invalid_argument("character vector has wrong rank");
    for (std::size_t i = 0; i < f.size(); ++i)
      if (chi.residues[i] < 0 || chi.residues[i] >= f[i])
        throw std::invalid_argument("character residue out of range");
  }
  M.weights = weights;
  std::string spec = "cyclic:1";
  if (!f.empty()) {
    spec = "abelian:";
    for (std::size_t i = 0; i < f.size(); ++i) spec += (i ? "," : "") + std::to_string(f[i]);
  }
  M.ghat = build_group(spec);
  for (const auto& chi : weights) M.weight_index.push_back(M.char_to_index(chi));
  std::set<int> seen(M.weight_index.begin(), M.weight_index.end());
  M.multiplicity_free = seen.size() == M.weight_index.size();
  return M;
}

/// Parse {"group": spec, "chars": [[..],..]}.
inline CharacterModule module_from_json(const nlohmann::json& j) {
  GroupTable G = build_group(j.at("group").get<std::string>());
  std::vector<CharacterVector> weights;
  for (const auto& row : j.at("chars")) weights.push_back({row.get<std::vector<int>>()});
  return make_character_module(G, weights);
}

/// psi: monomials -> sequences over the weight set; m is invariant iff
/// psi(m) is a zero-sum sequence.
inline Sequence psi_transfer(const CharacterModule& M, const std::vector<int>& exponents) {
  if (int(exponents.size()) != M.variables())
    throw std::invalid_argument("psi_transfer: exponent vector has wrong arity");
  std::vector<int> elems;
  for (int i = 0; i < M.variables(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("psi_transfer: negative exponent");
    elems.insert(elems.end(), std::size_t(exponents[i]), M.weight_index[i]);
  }
  return Sequence::from_elements(elems);
}

inline bool is_invariant_monomial(const CharacterModule& M, const std::vector<int>& exponents) {
  int s = 0;
  for (int i = 0; i < M.variables(); ++i)
    for (int j = 0; j < exponents[i]; ++j) s = M.ghat.op(s, M.weight_index[i]);
  return s == 0;
}

struct InvariantAtoms {
  std::vector<Sequence> base_atoms;        // atoms of B(G_V) inside ghat
  std::vector<long long> pullback_counts;  // preimage count per base atom
  long long total = 0;
  std::vector<std::vector<int>> exponent_vectors;  // enumerated when small
};

namespace detail {

inline long long binomial_ll(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// A(M^G) as the pullback of A(B(G_V)) along psi: each atom over the weight
/// set lifts to one exponent vector per way of distributing its
/// multiplicities over the variables sharing a weight.
inline InvariantAtoms invariant_atoms(const CharacterModule& M, Budget budget = {},
                                      long long enumeration_cap = 100000) {
  InvariantAtoms out;
  auto alphabet = M.distinct_weights();
  out.base_atoms = atoms(M.ghat, alphabet, budget);
  // variables per weight value
  std::map<int, std::vector<int>> vars_of;
  for (int i = 0; i < M.variables(); ++i) vars_of[M.weight_index[i]].push_back(i);
  for (const auto& A : out.base_atoms) {
    long long count = 1;
    for (auto& [w, k] : A.terms) {
      long long t = (long long)vars_of.at(w).size();
      count *= detail::binomial_ll(k + t - 1, t - 1);
    }
    out.pullback_counts.push_back(count);
    out.total += count;
  }
  if (out.total <= enumeration_cap) {
    for (const auto& A : out.base_atoms) {
      std::vector<std::vector<int>> partial{std::vector<int>(M.variables(), 0)};
      for (auto& [w, k] : A.terms) {
        const auto& vars = vars_of.at(w);
        std::vector<std::vector<int>> next;
        // distribute k among vars
        std::vector<int> cuts(vars.size(), 0);
        std::function<void(std::size_t, int)> distribute = [&](std::size_t vi, int left) {
          if (vi + 1 == vars.size()) {
            cuts[vi] = left;
            for (const auto& base : partial) {
              auto e = base;
              for (std::size_t j = 0; j < vars.size(); ++j) e[vars[j]] += cuts[j];
              next.push_back(e);
            }
            return;
          }
          for (int c = 0; c <= left; ++c) {
            cuts[vi] = c;
            distribute(vi + 1, left - c);
          }
        };
        distribute(0, k);
        partial = std::move(next);
      }
      for (auto& e : partial) out.exponent_vectors.push_back(std::move(e));
    }
  }
  return out;
}

/// beta_k(G, V) = D_k of the weight set; beta_k(G) uses the full character
/// group (the regular module).
inline int noether_number(const CharacterModule& M, int k = 1, Budget budget = {}) {
  return large_davenport(M.ghat, M.distinct_weights(), k, budget).value;
}

inline int noether_number_of_group(const GroupTable& G, int k = 1, Budget budget = {}) {
  if (!G.is_abelian()) throw std::invalid_argument("noether_number_of_group: abelian only");
  CharacterGroup C = character_group(G);
  CharacterModule M = make_character_module(G, C.characters);
  return noether_number(M, k, budget);
}

/// Independent route to beta_k(G, V): D_k of the monoid of invariant
/// monomials itself, generated by the pulled-back atoms in N_0^n.
inline long long noether_number_via_monomials(const CharacterModule& M, int k = 1,
                                              Budget budget = {}) {
  auto A = invariant_atoms(M, budget);
  if (A.exponent_vectors.empty() && A.total > 0)
    throw budget_error("noether_number_via_monomials: atom enumeration over cap");
  MultidegreeMonoid mono;
  mono.r = M.variables();
  mono.gens = A.exponent_vectors;
  return numerical_davenport(mono, k).value;
}

/// e(x_i) = min{k >= 1 : chi_i^k lies in the subgroup generated by the other
/// variables' weights}.
inline std::vector<int> ramification_exponents(const CharacterModule& M) {
  std::vector<int> out(M.variables(), 0);
  for (int i = 0; i < M.variables(); ++i) {
    std::vector<int> others;
    for (int j = 0; j < M.variables(); ++j)
      if (j != i) others.push_back(M.weight_index[j]);
    Subgroup span = subgroup_closure(M.ghat, others);
    int chi = M.weight_index[i];
    int e = 0;
    for (int k = 1; k <= M.ghat.elt_order[chi]; ++k)
      if (span.contains(M.ghat.power(chi, k))) {
        e = k;
        break;
      }
    out[i] = e;
  }
  return out;
}

struct ClassGroupMG {
  std::vector<int> invariant_factors;  // of <chi_i^{e_i}>
  std::vector<int> subgroup_members;   // inside ghat
  std::vector<int> prime_bearing;      // the distinct chi_i^{e_i}, sorted
};

/// The class group of M^G is the subgroup of the character group generated
/// by the chi_i^{e(x_i)}; exactly those elements carry prime divisors.
inline ClassGroupMG class_group_MG(const CharacterModule& M) {
  auto e = ramification_exponents(M);
  std::vector<int> gens;
  for (int i = 0; i < M.variables(); ++i) gens.push_back(M.ghat.power(M.weight_index[i], e[i]));
  ClassGroupMG out;
  out.prime_bearing = detail::sorted_unique(gens);
  Subgroup H = subgroup_closure(M.ghat, gens);
  out.subgroup_members = H.members;
  SubgroupTable T = subgroup_as_table(M.ghat, H);
  out.invariant_factors = abelian_structure(T.table).invariant_factors;
  return out;
}

struct DiagramCheck {
  int monomials_checked = 0;
  std::vector<std::vector<int>> mismatches;  // exponent vectors (expected none)
  bool transfer_e_agrees = true;  // e(x_i) matches the zero-sum e(g) for split weights
  bool ok() const { return mismatches.empty() && transfer_e_agrees; }
};

/// Checks commutativity of the square relating psi, the collapsing transfer
/// of the weight set, and the divisor-theoretic factorization: for every
/// invariant monomial m of degree <= degree_bound,
///   nu(psi(m)) = prod_i (chi_i^{e(x_i)})^[a_i / e(x_i)].
inline DiagramCheck diagram_commutes_check(const CharacterModule& M, int degree_bound,
                                           Budget budget = {}) {
  DiagramCheck out;
  auto e = ramification_exponents(M);
  // partition of the weight set: repeated weights stay, unique weights collapse
  std::map<int, int> weight_count;
  for (int w : M.weight_index) weight_count[w]++;
  std::vector<int> g1, g2;
  for (auto& [w, c] : weight_count) (c == 1 ? g1 : g2).push_back(w);
  TransferTheta nu = transfer_theta(M.ghat, g1, g2, budget);
  // e(x_i) must agree with the collapsing exponents on unique weights and be
  // 1 on repeated ones
  for (int i = 0; i < M.variables(); ++i) {
    int w = M.weight_index[i];
    int expect = weight_count[w] == 1 ? nu.e_of.at(w) : 1;
    if (e[i] != expect) out.transfer_e_agrees = false;
  }
  // enumerate invariant monomials of degree <= bound
  std::vector<int> a(M.variables(), 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == M.variables()) {
      int deg = 0;
      for (int x : a) deg += x;
      if (deg == 0 || !is_invariant_monomial(M, a)) return;
      ++out.monomials_checked;
      Sequence lhs = nu.apply(psi_transfer(M, a));
      std::vector<int> elems;
      for (int i = 0; i < M.variables(); ++i) {
        if (a[i] % e[i] != 0) {
          out.mismatches.push_back(a);
          return;
        }
        int img = M.ghat.power(M.weight_index[i], e[i]);
        elems.insert(elems.end(), std::size_t(a[i] / e[i]), img);
      }
      Sequence rhs = Sequence::from_elements(elems);
      if (!(lhs == rhs)) out.mismatches.push_back(a);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      a[var] = c;
      rec(var + 1, remaining - c);
    }
    a[var] = 0;
  };
  rec(0, degree_bound);
  return out;
}

struct SigmaEtaReport {
  int sigma = 1;  // = exp(G) = e(G) for abelian G
  int eta = 1;    // eta of the character group, identified with G
  Sequence eta_witness;
};

inline SigmaEtaReport sigma_eta_abelian(const GroupTable& G, Budget budget = {}) {
  if (!G.is_abelian()) throw std::invalid_argument("sigma_eta_abelian: abelian groups only");
  SigmaEtaReport rep;
  rep.sigma = G.exponent();
  CharacterGroup C = character_group(G);
  CharacterModule M = make_character_module(G, C.characters);
  std::vector<int> all(M.ghat.order);
  for (int i = 0; i < M.ghat.order; ++i) all[i] = i;
  auto r = eta_constant(M.ghat, all, budget);
  rep.eta = r.value;
  rep.eta_witness = r.witness;
  return rep;
}

}  // namespace zerosum
