#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "zerosum/group.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_entries = 0;
};

struct SearchResult {
  int value = 0;
  Sequence witness;  // lexicographically least extremal sequence
  SearchStats stats;
};

namespace detail {

struct cap_reached {};

inline bool pairwise_commuting(const GroupTable& G, const std::vector<int>& G0) {
  for (std::size_t i = 0; i < G0.size(); ++i)
    for (std::size_t j = i + 1; j < G0.size(); ++j)
      if (G.op(G0[i], G0[j]) != G.op(G0[j], G0[i])) return false;
  return true;
}

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// Search workhorse for the invariants of B(G0). Canonical depth-first
/// enumeration of multisets (symbols appended in non-decreasing index order),
/// so witnesses are deterministic: the first extremal sequence found is the
/// lexicographically least one. Group order is capped at 64 (bitset product
/// sets); this covers the whole desk-scale catalog.
class DavenportSearcher {
 public:
  DavenportSearcher(const GroupTable& G, std::vector<int> G0, Budget budget = {})
      : G_(&G), alphabet_(detail::sorted_unique(std::move(G0))), budget_(budget) {
    if (G.order > 64)
      throw budget_error("davenport searches require group order <= 64 (got " +
                         std::to_string(G.order) + ")");
    if (alphabet_.empty()) throw std::invalid_argument("empty alphabet G0");
    abelian_ = detail::pairwise_commuting(G, alphabet_);
    if (!abelian_) engine_.emplace(G, alphabet_, budget_);
  }

  const GroupTable& group() const { return *G_; }
  const std::vector<int>& alphabet() const { return alphabet_; }
  bool abelian_alphabet() const { return abelian_; }

  /// Optional accelerator (off by default): restrict the first chosen symbol
  /// to one representative per orbit of the automorphisms of G that fix G0
  /// setwise. The lexicographically least image of any extremal sequence
  /// starts with an orbit-minimal symbol, so extremal lengths are unchanged.
  /// Witnesses may differ from the unpruned run; values never do.
  void set_automorphism_pruning(bool on, int aut_cap = 24) {
    aut_prune_ = on;
    root_allowed_.assign(alphabet_.size(), 1);
    if (!on) return;
    auto auts = automorphisms(*G_, aut_cap);
    std::set<int> g0(alphabet_.begin(), alphabet_.end());
    for (const auto& sigma : auts) {
      bool stabilizes = true;
      for (int g : alphabet_)
        if (!g0.count(sigma[g])) {
          stabilizes = false;
          break;
        }
      if (!stabilizes) continue;
      for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (sigma[alphabet_[i]] < alphabet_[i]) root_allowed_[i] = 0;
    }
  }
  SearchStats stats() const {
    SearchStats s;
    s.nodes = nodes_;
    s.memo_entries = md_memo_.size() + (engine_ ? engine_->memo_entries() : 0);
    return s;
  }

  Sequence to_sequence(const MultVec& m) const {
    Sequence s;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) s.terms.push_back({alphabet_[i], m[i]});
    return s;
  }
  MultVec to_mult(const Sequence& S) const {
    MultVec m(alphabet_.size(), 0);
    for (auto& [g, k] : S.terms) {
      auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), g);
      if (it == alphabet_.end() || *it != g)
        throw std::invalid_argument("sequence uses symbol outside alphabet");
      m[it - alphabet_.begin()] = std::uint16_t(k);
    }
    return m;
  }

  /// Budgets are per invocation: node counters reset at each public entry,
  /// memo caps stay cumulative (they bound memory).
  void begin_invocation() {
    nodes_ = 0;
    start_ = std::chrono::steady_clock::now();
    if (engine_) engine_->reset_nodes();
  }

  /// Complete atom list A(G0), in canonical (lexicographic) order.
  const std::vector<MultVec>& atoms() {
    if (atoms_ready_) return atoms_;
    begin_invocation();
    if (abelian_)
      atoms_abelian();
    else
      atoms_general();
    atoms_ready_ = true;
    return atoms_;
  }
  std::vector<Sequence> atom_sequences() {
    std::vector<Sequence> out;
    for (const auto& m : atoms()) out.push_back(to_sequence(m));
    return out;
  }

  /// Largest k such that k disjoint nontrivial product-one subsequences can
  /// be extracted from S, capped at `cap`. S is in M_k^* iff this is < k.
  int max_disjoint_product_one(const MultVec& m, int cap) {
    atoms();
    begin_invocation();
    return md_rec(m, cap);
  }

 private:
  void atoms_if_needed(int k) {
    if (k >= 2) atoms();
  }

 public:

  /// d_k(G0): longest sequence not divisible by a product of k nontrivial
  /// product-one sequences.
  SearchResult small_davenport(int k) {
    if (k < 1) throw std::invalid_argument("small_davenport: k must be >= 1");
    atoms_if_needed(k);
    begin_invocation();
    SearchResult best;
    best.value = 0;
    best.witness = Sequence::empty();
    MultVec m(alphabet_.size(), 0);
    if (k == 1 && abelian_) {
      std::uint64_t sums = 0;
      dfs_free_abelian(m, 0, 0, sums, best);
    } else if (k == 1) {
      dfs_free_general(m, 0, 0, best);
    } else {
      dfs_mkstar(m, 0, 0, k, /*track_product_one=*/false, /*kD=*/0, best, nullptr);
    }
    best.stats = stats();
    return best;
  }

  /// D_k(G0): longest product-one sequence with max factorization length <= k.
  SearchResult large_davenport(int k) {
    if (k < 1) throw std::invalid_argument("large_davenport: k must be >= 1");
    atoms();
    begin_invocation();
    SearchResult best;
    best.value = 0;
    best.witness = Sequence::empty();
    if (k == 1) {
      for (const auto& a : atoms_) {
        int len = 0;
        for (auto v : a) len += v;
        if (len > best.value) {
          best.value = len;
          best.witness = to_sequence(a);
        }
      }
      best.stats = stats();
      return best;
    }
    if (abelian_) {
      // For a commuting alphabet, M_k = B(G0) intersect M_{k+1}^*: a
      // product-one sequence has max length <= k exactly when it is not
      // divisible by k+1 disjoint nontrivial product-one subsequences.
      MultVec m(alphabet_.size(), 0);
      dfs_mkstar(m, 0, 0, k + 1, /*track_product_one=*/true, k, best, nullptr);
      best.stats = stats();
      return best;
    }
    // general case: M_k is contained in the set of products of at most k
    // atoms; enumerate those, filter by exact max factorization length
    k_for_products_ = k;
    std::unordered_set<PackedKey, PackedKeyHash> seen;
    std::vector<Sequence> best_wits;
    MultVec acc(alphabet_.size(), 0);
    enumerate_atom_products(acc, 0, k, seen, best, best_wits);
    if (!best_wits.empty()) {
      best.witness = *std::min_element(best_wits.begin(), best_wits.end());
    }
    best.stats = stats();
    return best;
  }

  /// eta(G0): least l such that every sequence of length >= l has a
  /// nontrivial product-one subsequence of length <= e(G0).
  SearchResult eta_constant() {
    begin_invocation();
    int e = 0;
    for (int g : alphabet_) e = std::max(e, G_->elt_order[g]);
    SearchResult best;
    best.value = 0;
    best.witness = Sequence::empty();
    MultVec m(alphabet_.size(), 0);
    if (abelian_) {
      std::vector<std::uint64_t> bylen(std::size_t(e) + 1, 0);
      bylen[0] = 1;  // empty subsequence sums to the identity
      dfs_short_free_abelian(m, 0, 0, e, bylen, best);
    } else {
      dfs_short_free_general(m, 0, 0, e, best);
    }
    best.value += 1;  // eta = 1 + longest avoiding sequence
    best.stats = stats();
    return best;
  }

  /// Longest sequence with no product-one subsequence of length exactly
  /// `target`. If an avoiding sequence of length `cap` exists the search
  /// stops and reports capped = true (the constant may be infinite, e.g.
  /// s(S_3): sequences of transpositions never have a product-one
  /// subsequence of odd length).
  struct AvoidingResult {
    SearchResult res;
    bool capped = false;
  };
  AvoidingResult longest_avoiding_exact_length(int target, int cap) {
    begin_invocation();
    AvoidingResult out;
    out.res.value = 0;
    out.res.witness = Sequence::empty();
    MultVec m(alphabet_.size(), 0);
    try {
      if (abelian_) {
        std::vector<std::uint64_t> bylen(std::size_t(target) + 1, 0);
        bylen[0] = 1;
        dfs_exact_free_abelian(m, 0, 0, target, cap, bylen, out.res);
      } else {
        dfs_exact_free_general(m, 0, 0, target, cap, out.res);
      }
    } catch (const detail::cap_reached&) {
      out.capped = true;
    }
    out.res.stats = stats();
    return out;
  }

  bool product_one(const MultVec& m) {
    if (abelian_) {
      int s = 0;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < m[i]; ++j) s = G_->op(s, alphabet_[i]);
      return s == 0;
    }
    return engine_->product_one(m);
  }

  ProductEngine* engine() { return engine_ ? &*engine_ : nullptr; }

 private:
  bool root_skip(std::size_t i, int len) const {
    return len == 0 && aut_prune_ && !root_allowed_[i];
  }

  void tick() {
    if (++nodes_ > budget_.max_nodes) throw budget_error("davenport search: node budget exceeded");
    if (md_memo_.size() > budget_.max_memo)
      throw budget_error("davenport search: memo budget exceeded");
    if (budget_.max_millis >= 0 && (nodes_ & 8191) == 0) {
      auto el = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
      if (el > budget_.max_millis)
        throw budget_error("davenport search: wall-clock budget exceeded");
    }
  }

  std::uint64_t shift_set(std::uint64_t set, int g) const {
    std::uint64_t r = 0;
    while (set) {
      int x = __builtin_ctzll(set);
      set &= set - 1;
      r |= std::uint64_t(1) << G_->op(x, g);
    }
    return r;
  }

  // ---- atoms -------------------------------------------------------------

  void atoms_abelian() {
    MultVec m(alphabet_.size(), 0);
    std::uint64_t sums = 0;
    atoms_abelian_rec(m, 0, 0, 0, sums);
    std::sort(atoms_.begin(), atoms_.end(), [this](const MultVec& a, const MultVec& b) {
      return to_sequence(a) < to_sequence(b);
    });
  }

  // Submultisets of a minimal zero-sum sequence are zero-sum free, so the
  // DFS only ever extends zero-sum free prefixes.
  void atoms_abelian_rec(MultVec& m, std::size_t start, int len, int sum, std::uint64_t sums) {
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      tick();
      int g = alphabet_[i];
      int nsum = G_->op(sum, g);
      std::uint64_t nsums = sums | shift_set(sums, g) | (std::uint64_t(1) << g);
      m[i]++;
      if (nsum == 0) {
        bool minimal = true;
        for (std::size_t j = 0; j < m.size() && minimal; ++j) {
          if (!m[j]) continue;
          m[j]--;
          minimal = zero_sum_free(m);
          m[j]++;
        }
        if (minimal) atoms_.push_back(m);
        // extensions of a zero-sum node contain it as a proper zero-sum
      } else if (!(nsums & 1)) {
        atoms_abelian_rec(m, i, len + 1, nsum, nsums);
      }
      m[i]--;
    }
  }

  bool zero_sum_free(const MultVec& m) const {
    std::uint64_t sums = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int j = 0; j < m[i]; ++j) {
        sums = sums | shift_set(sums, alphabet_[i]) | (std::uint64_t(1) << alphabet_[i]);
        if (sums & 1) return false;
      }
    return true;
  }

  void atoms_general() {
    MultVec m(alphabet_.size(), 0);
    atoms_general_rec(m, 0, 0);
    std::sort(atoms_.begin(), atoms_.end(), [this](const MultVec& a, const MultVec& b) {
      return to_sequence(a) < to_sequence(b);
    });
  }

  void atoms_general_rec(MultVec& m, std::size_t start, int len) {
    if (len >= G_->order) return;  // atoms have length at most |G|
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      tick();
      m[i]++;
      if (engine_->is_atom(m)) atoms_.push_back(m);
      atoms_general_rec(m, i, len + 1);
      m[i]--;
    }
  }

  // ---- disjoint extraction (membership of M_k^*) --------------------------

  int md_rec(const MultVec& m, int cap) {
    bool empty = true;
    for (auto v : m)
      if (v) empty = false;
    if (empty || cap == 0) return 0;
    PackedKey key = pack_key(m);
    auto it = md_memo_.find(key);
    if (it != md_memo_.end() && (it->second.second >= cap || it->second.first < it->second.second))
      return std::min(it->second.first, cap);
    tick();
    int best = 0;
    MultVec rest(m.size());
    for (const auto& a : atoms_) {
      bool div = true;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (a[i] > m[i]) {
          div = false;
          break;
        }
      if (!div) continue;
      for (std::size_t i = 0; i < m.size(); ++i) rest[i] = std::uint16_t(m[i] - a[i]);
      int cand = 1 + md_rec(rest, cap - 1);
      if (cand > best) best = cand;
      if (best >= cap) break;
    }
    md_memo_[key] = {best, cap};
    return best;
  }

  // ---- DFS families --------------------------------------------------------

  void consider(const MultVec& m, int len, SearchResult& best) {
    if (len > best.value) {
      best.value = len;
      best.witness = to_sequence(m);
    }
  }

  void dfs_free_abelian(MultVec& m, std::size_t start, int len, std::uint64_t sums,
                        SearchResult& best) {
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      if (root_skip(i, len)) continue;
      tick();
      int g = alphabet_[i];
      std::uint64_t nsums = sums | shift_set(sums, g) | (std::uint64_t(1) << g);
      if (nsums & 1) continue;  // would contain a zero-sum subsequence
      m[i]++;
      consider(m, len + 1, best);
      dfs_free_abelian(m, i, len + 1, nsums, best);
      m[i]--;
    }
  }

  void dfs_free_general(MultVec& m, std::size_t start, int len, SearchResult& best) {
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      if (root_skip(i, len)) continue;
      tick();
      m[i]++;
      if (!engine_->has_po_subsequence(m)) {
        consider(m, len + 1, best);
        dfs_free_general(m, i, len + 1, best);
      }
      m[i]--;
    }
  }

  // Family M_K^*; when track_product_one is set, only product-one members
  // with extraction number <= kD are recorded (computes D_{kD} for commuting
  // alphabets), otherwise every member is recorded (computes d_K).
  void dfs_mkstar(MultVec& m, std::size_t start, int len, int K, bool track_product_one, int kD,
                  SearchResult& best, const std::uint64_t* /*unused*/) {
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      if (root_skip(i, len)) continue;
      tick();
      m[i]++;
      int md = md_rec(m, K);
      if (md < K) {
        if (!track_product_one) {
          consider(m, len + 1, best);
        } else if (md <= kD && product_one(m)) {
          consider(m, len + 1, best);
        }
        dfs_mkstar(m, i, len + 1, K, track_product_one, kD, best, nullptr);
      }
      m[i]--;
    }
  }

  // avoiding any product-one subsequence of length in [1, e]
  void dfs_short_free_abelian(MultVec& m, std::size_t start, int len, int e,
                              std::vector<std::uint64_t>& bylen, SearchResult& best) {
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      if (root_skip(i, len)) continue;
      tick();
      int g = alphabet_[i];
      std::vector<std::uint64_t> nb(bylen);
      bool ok = true;
      for (int l = e; l >= 1; --l) {
        nb[l] |= shift_set(bylen[l - 1], g) | (l == 1 ? std::uint64_t(1) << g : 0);
        if (l >= 1 && (nb[l] & 1)) ok = false;
      }
      if (!ok) continue;
      m[i]++;
      consider(m, len + 1, best);
      dfs_short_free_abelian(m, i, len + 1, e, nb, best);
      m[i]--;
    }
  }

  void dfs_short_free_general(MultVec& m, std::size_t start, int len, int e, SearchResult& best) {
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      if (root_skip(i, len)) continue;
      tick();
      m[i]++;
      if (!has_short_po(m, e)) {
        consider(m, len + 1, best);
        dfs_short_free_general(m, i, len + 1, e, best);
      }
      m[i]--;
    }
  }

  bool has_short_po(const MultVec& m, int e) {
    // some nontrivial T | m with |T| <= e and 1 in pi(T)
    MultVec t(m.size(), 0);
    return short_po_rec(m, t, 0, 0, e);
  }
  bool short_po_rec(const MultVec& m, MultVec& t, std::size_t i, int len, int e) {
    if (len > 0 && engine_->product_one(t)) return true;
    if (i == m.size() || len == e) return false;
    for (int c = 0; c <= std::min<int>(m[i], e - len); ++c) {
      t[i] = std::uint16_t(c);
      if (short_po_rec(m, t, i + 1, len + c, e)) {
        t[i] = 0;
        return true;
      }
    }
    t[i] = 0;
    return false;
  }

  void dfs_exact_free_abelian(MultVec& m, std::size_t start, int len, int target, int cap,
                              std::vector<std::uint64_t>& bylen, SearchResult& best) {
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      if (root_skip(i, len)) continue;
      tick();
      int g = alphabet_[i];
      std::vector<std::uint64_t> nb(bylen);
      for (int l = target; l >= 1; --l) nb[l] |= shift_set(bylen[l - 1], g);
      nb[1] |= std::uint64_t(1) << g;
      if (nb[target] & 1) continue;
      if (len + 1 >= cap) throw detail::cap_reached{};
      m[i]++;
      consider(m, len + 1, best);
      dfs_exact_free_abelian(m, i, len + 1, target, cap, nb, best);
      m[i]--;
    }
  }

  void dfs_exact_free_general(MultVec& m, std::size_t start, int len, int target, int cap,
                              SearchResult& best) {
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      if (root_skip(i, len)) continue;
      tick();
      m[i]++;
      if (!has_exact_po(m, target)) {
        if (len + 1 >= cap) throw detail::cap_reached{};
        consider(m, len + 1, best);
        dfs_exact_free_general(m, i, len + 1, target, cap, best);
      }
      m[i]--;
    }
  }

  bool has_exact_po(const MultVec& m, int target) {
    MultVec t(m.size(), 0);
    return exact_po_rec(m, t, 0, 0, target);
  }
  bool exact_po_rec(const MultVec& m, MultVec& t, std::size_t i, int len, int target) {
    if (len == target) return engine_->product_one(t);
    if (i == m.size()) return false;
    for (int c = 0; c <= std::min<int>(m[i], target - len); ++c) {
      t[i] = std::uint16_t(c);
      if (exact_po_rec(m, t, i + 1, len + c, target)) {
        t[i] = 0;
        return true;
      }
    }
    t[i] = 0;
    return false;
  }

  // products of at most k atoms (indices non-decreasing), deduplicated
  void enumerate_atom_products(MultVec& acc, std::size_t start_atom, int remaining,
                               std::unordered_set<PackedKey, PackedKeyHash>& seen,
                               SearchResult& best, std::vector<Sequence>& best_wits) {
    for (std::size_t ai = start_atom; ai < atoms_.size(); ++ai) {
      tick();
      const auto& a = atoms_[ai];
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::uint16_t(acc[i] + a[i]);
      PackedKey key = pack_key(acc);
      bool fresh = seen.insert(key).second;
      if (seen.size() > budget_.max_memo)
        throw budget_error("large davenport: atom product budget exceeded");
      if (fresh) {
        int len = 0;
        for (auto v : acc) len += v;
        if (len >= best.value) {
          int maxlen = engine_->max_factorization_length(acc);
          if (maxlen <= k_for_products_) {
            if (len > best.value) {
              best.value = len;
              best_wits.clear();
            }
            best_wits.push_back(to_sequence(acc));
          }
        }
      }
      if (remaining > 1) enumerate_atom_products(acc, ai, remaining - 1, seen, best, best_wits);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::uint16_t(acc[i] - a[i]);
    }
  }

  int k_for_products_ = 1;
  bool aut_prune_ = false;
  std::vector<char> root_allowed_;
  const GroupTable* G_;
  std::vector<int> alphabet_;
  Budget budget_;
  bool abelian_ = false;
  std::optional<ProductEngine> engine_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  bool atoms_ready_ = false;
  std::vector<MultVec> atoms_;
  std::unordered_map<PackedKey, std::pair<int, int>, PackedKeyHash> md_memo_;  // value, cap
};

// --- public operations ------------------------------------------------------

inline std::vector<Sequence> atoms(const GroupTable& G, const std::vector<int>& G0,
                                   Budget budget = {}, SearchStats* stats = nullptr) {
  DavenportSearcher s(G, G0, budget);
  auto out = s.atom_sequences();
  if (stats) *stats = s.stats();
  return out;
}

inline SearchResult small_davenport(const GroupTable& G, const std::vector<int>& G0, int k = 1,
                                    Budget budget = {}) {
  DavenportSearcher s(G, G0, budget);
  return s.small_davenport(k);
}

inline SearchResult large_davenport(const GroupTable& G, const std::vector<int>& G0, int k = 1,
                                    Budget budget = {}) {
  DavenportSearcher s(G, G0, budget);
  return s.large_davenport(k);
}

inline SearchResult eta_constant(const GroupTable& G, const std::vector<int>& G0,
                                 Budget budget = {}) {
  DavenportSearcher s(G, G0, budget);
  return s.eta_constant();
}

struct EgzResult {
  std::optional<int> s, E;  // empty: no finite value up to the search cap
  int cap = 0;
  Sequence s_witness, E_witness;
  SearchStats stats;
};

/// s(G) and E(G): thresholds for product-one subsequences of length exactly
/// e(G) and exactly |G| (G0 = G). A constant can be infinite for non-abelian
/// groups (parity obstructions); those come back unset, with the cap that
/// was searched recorded.
inline EgzResult egz_constants(const GroupTable& G, Budget budget = {}) {
  std::vector<int> all(G.order);
  for (int i = 0; i < G.order; ++i) all[i] = i;
  int e = 0;
  for (int g = 0; g < G.order; ++g) e = std::max(e, G.elt_order[g]);
  EgzResult r;
  r.cap = 4 * G.order + 4 * e + 8;
  {
    DavenportSearcher s(G, all, budget);
    auto res = s.longest_avoiding_exact_length(e, r.cap);
    if (!res.capped) {
      r.s = res.res.value + 1;
      r.s_witness = res.res.witness;
    }
    r.stats.nodes += res.res.stats.nodes;
    r.stats.memo_entries += res.res.stats.memo_entries;
  }
  {
    DavenportSearcher s(G, all, budget);
    auto res = s.longest_avoiding_exact_length(G.order, r.cap);
    if (!res.capped) {
      r.E = res.res.value + 1;
      r.E_witness = res.res.witness;
    }
    r.stats.nodes += res.res.stats.nodes;
    r.stats.memo_entries += res.res.stats.memo_entries;
  }
  return r;
}

/// Full report for one (G, G0): D_k and d_k for k in [1, kmax], e, eta, and
/// (when G0 = G and requested) s and E.
struct InvariantReport {
  std::string group_spec;
  std::vector<int> g0;
  int kmax = 1;
  std::vector<int> D, d;
  std::vector<Sequence> D_witness, d_witness;
  int e = 1;
  int exponent = 1;
  int eta = 1;
  Sequence eta_witness;
  std::optional<int> s, E;
  SearchStats stats;
};

inline InvariantReport compute_invariants(const GroupTable& G, const std::vector<int>& G0,
                                          int kmax = 1, Budget budget = {}, bool with_egz = false) {
  InvariantReport rep;
  rep.group_spec = G.spec;
  rep.g0 = detail::sorted_unique(G0);
  rep.kmax = kmax;
  auto [expG, e] = exponent_and_e(G, rep.g0);
  rep.exponent = expG;
  rep.e = e;
  DavenportSearcher s(G, rep.g0, budget);
  for (int k = 1; k <= kmax; ++k) {
    auto Dk = s.large_davenport(k);
    rep.D.push_back(Dk.value);
    rep.D_witness.push_back(Dk.witness);
    rep.stats.nodes += Dk.stats.nodes;
    auto dk = s.small_davenport(k);
    rep.d.push_back(dk.value);
    rep.d_witness.push_back(dk.witness);
    rep.stats.nodes += dk.stats.nodes;
  }
  auto etaR = s.eta_constant();
  rep.eta = etaR.value;
  rep.eta_witness = etaR.witness;
  rep.stats.nodes += etaR.stats.nodes;
  bool g0_is_all = int(rep.g0.size()) == G.order;
  if (with_egz && g0_is_all) {
    auto egz = egz_constants(G, budget);
    rep.s = egz.s;
    rep.E = egz.E;
    rep.stats.nodes += egz.stats.nodes;
  }
  rep.stats.memo_entries += s.stats().memo_entries;
  return rep;
}

// --- reduction inequalities ---------------------------------------------------

struct IneqRow {
  std::string id;
  std::string instance;
  long long lhs = 0, rhs = 0;
  bool holds = false;
};

struct ReductionReport {
  std::vector<IneqRow> rows;
  std::vector<std::string> notices;  // quantities skipped over budget
  int violations = 0;
};

namespace detail {

/// Lazily computed d_k / D_k values for one multiplication table, with
/// budget misses recorded as notices.
struct QuantityCtx {
  std::string name;
  GroupTable table;
  std::unique_ptr<DavenportSearcher> searcher;
  std::map<int, std::optional<int>> d, D;
  Budget budget;

  QuantityCtx(std::string n, GroupTable t, Budget b)
      : name(std::move(n)), table(std::move(t)), budget(b) {}

  DavenportSearcher& s() {
    if (!searcher) {
      std::vector<int> all(table.order);
      for (int i = 0; i < table.order; ++i) all[i] = i;
      searcher = std::make_unique<DavenportSearcher>(table, all, budget);
    }
    return *searcher;
  }
  std::optional<int> get_d(int k, std::vector<std::string>& notices) {
    auto it = d.find(k);
    if (it != d.end()) return it->second;
    std::optional<int> v;
    try {
      v = s().small_davenport(k).value;
    } catch (const budget_error&) {
      notices.push_back("d_" + std::to_string(k) + "(" + name + "): skipped (budget)");
    }
    d[k] = v;
    return v;
  }
  std::optional<int> get_D(int k, std::vector<std::string>& notices) {
    auto it = D.find(k);
    if (it != D.end()) return it->second;
    std::optional<int> v;
    try {
      v = s().large_davenport(k).value;
    } catch (const budget_error&) {
      notices.push_back("D_" + std::to_string(k) + "(" + name + "): skipped (budget)");
    }
    D[k] = v;
    return v;
  }
};

}  // namespace detail

/// Instantiates the supra-additivity, normal-quotient, subgroup-index and
/// monotonicity inequalities for d_k and D_k over a group catalog, together
/// with the intra-group relations (1 + d_k <= D_k <= k D_1, D_k/k
/// non-increasing, d_k + 1 >= k e). Quantities that exceed the per-call
/// budget are skipped with a notice; every computed instance is reported.
inline ReductionReport verify_reduction_inequalities(const std::vector<std::string>& catalog,
                                                     int kmax = 2, Budget budget = {}) {
  ReductionReport rep;
  auto add = [&](const std::string& id, const std::string& inst, long long lhs, long long rhs) {
    IneqRow row{id, inst, lhs, rhs, lhs <= rhs};
    if (!row.holds) ++rep.violations;
    rep.rows.push_back(std::move(row));
  };
  for (const auto& spec : catalog) {
    detail::QuantityCtx G(spec, build_group(spec), budget);
    int e = 0;
    for (int g = 0; g < G.table.order; ++g) e = std::max(e, G.table.elt_order[g]);

    for (int k = 1; k <= kmax; ++k) {
      auto dk = G.get_d(k, rep.notices);
      auto Dk = G.get_D(k, rep.notices);
      auto d1 = G.get_d(1, rep.notices);
      auto D1 = G.get_D(1, rep.notices);
      std::string at = spec + ", k=" + std::to_string(k);
      if (dk && Dk) add("small-vs-large", at, 1 + *dk, *Dk);
      if (dk && d1) add("trivial-d", at, *dk + 1, (long long)k * (*d1 + 1));
      if (Dk && D1) add("trivial-D", at, *Dk, (long long)k * *D1);
      if (dk) add("linear-lower-d", at, (long long)k * e, *dk + 1);
      if (k > 1) {
        auto Dk1 = G.get_D(k - 1, rep.notices);
        if (Dk && Dk1) add("ratio-monotone-D", at, (long long)*Dk * (k - 1), (long long)*Dk1 * k);
      }
    }

    auto subgroups = all_subgroups(G.table);
    for (const auto& H : subgroups) {
      if (H.order() == G.table.order) continue;
      SubgroupTable HT = subgroup_as_table(G.table, H);
      detail::QuantityCtx Hc(spec + "/sub" + std::to_string(H.order()), HT.table, budget);
      long long index = G.table.order / H.order();
      for (int k = 1; k <= kmax; ++k) {
        auto dkG = G.get_d(k, rep.notices), dkH = Hc.get_d(k, rep.notices);
        auto DkG = G.get_D(k, rep.notices), DkH = Hc.get_D(k, rep.notices);
        std::string at = spec + " >= " + Hc.name + ", k=" + std::to_string(k);
        if (dkG && dkH) {
          add("subgroup-index-d", at, *dkG + 1, index * (*dkH + 1));
          add("monotone-d", at, *dkH, *dkG);
        }
        if (DkG && DkH) {
          add("subgroup-index-D", at, *DkG, index * *DkH);
          add("monotone-D", at, *DkH, *DkG);
        }
      }
      if (!H.is_normal || H.order() == 1) continue;
      QuotientResult Q = quotient(G.table, H);
      detail::QuantityCtx Qc(spec + "/N" + std::to_string(H.order()), Q.table, budget);
      for (int k = 1; k <= kmax; ++k)
        for (int l = 1; l <= kmax; ++l) {
          auto dkN = Hc.get_d(k, rep.notices);
          auto dlQ = Qc.get_d(l, rep.notices);
          auto dG = G.get_d(k + l - 1, rep.notices);
          if (dkN && dlQ && dG)
            add("supra-additive-d",
                spec + ": N=" + Hc.name + ", k=" + std::to_string(k) + ", l=" + std::to_string(l),
                (long long)*dkN + *dlQ, *dG);
        }
      // d_k(G) <= d_{d_k(N)+1}(G/N); large right-hand indices are cheap when
      // the quotient is small, so gate on both
      for (int k = 1; k <= kmax; ++k) {
        auto dkN = Hc.get_d(k, rep.notices);
        auto dkG = G.get_d(k, rep.notices);
        if (!dkN || !dkG) continue;
        int rhs_index = *dkN + 1;
        if (rhs_index > 2 * kmax + 2 && !(Q.table.order <= 8 && rhs_index <= 25)) {
          rep.notices.push_back("normal-reduction-d at " + spec + " (k=" + std::to_string(k) +
                                "): skipped (index " + std::to_string(rhs_index) + " too large)");
          continue;
        }
        auto rhs = Qc.get_d(rhs_index, rep.notices);
        if (rhs)
          add("normal-reduction-d", spec + ": N=" + Hc.name + ", k=" + std::to_string(k), *dkG,
              *rhs);
      }
    }
  }
  return rep;
}

/// Witness re-validation; used by tests and the regression suite.
inline bool validate_large_witness(const GroupTable& G, const Sequence& S, int k, int expected_len,
                                   Budget budget = {}) {
  if (S.length() != expected_len) return false;
  if (!is_product_one(G, S, budget)) return false;
  return max_factorization_length(G, S, budget) <= k;
}

inline bool validate_small_witness(const GroupTable& G, const std::vector<int>& G0,
                                   const Sequence& S, int k, int expected_len,
                                   Budget budget = {}) {
  if (S.length() != expected_len) return false;
  DavenportSearcher s(G, G0, budget);
  return s.max_disjoint_product_one(s.to_mult(S), k) < k;
}

}  // namespace zerosum
