#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "zerosum/group.hpp"
#include "zerosum/util.hpp"

namespace zerosum {

/// A sequence over a subset of a group: an unordered multiset of element
/// indices, stored as sorted (element, multiplicity) pairs. The element of
/// the free abelian monoid F(G0). Immutable value type.
struct Sequence {
  std::vector<std::pair<int, int>> terms;  // sorted by element, multiplicities > 0

  static Sequence empty() { return {}; }
  static Sequence single(int g, int k = 1) {
    Sequence s;
    if (k > 0) s.terms.push_back({g, k});
    return s;
  }
  static Sequence from_elements(std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    Sequence s;
    for (int g : elems) {
      if (!s.terms.empty() && s.terms.back().first == g)
        s.terms.back().second++;
      else
        s.terms.push_back({g, 1});
    }
    return s;
  }

  int length() const {
    int l = 0;
    for (auto& [g, k] : terms) l += k;
    return l;
  }
  bool is_trivial() const { return terms.empty(); }
  int multiplicity(int g) const {
    for (auto& [h, k] : terms)
      if (h == g) return k;
    return 0;
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (auto& [g, k] : terms) s.push_back(g);
    return s;
  }
  std::vector<int> expand() const {
    std::vector<int> v;
    for (auto& [g, k] : terms) v.insert(v.end(), k, g);
    return v;
  }

  bool divides(const Sequence& S) const {  // this | S
    std::size_t i = 0;
    for (auto& [g, k] : terms) {
      while (i < S.terms.size() && S.terms[i].first < g) ++i;
      if (i == S.terms.size() || S.terms[i].first != g || S.terms[i].second < k) return false;
    }
    return true;
  }

  Sequence mul(const Sequence& o) const {
    Sequence r;
    std::size_t i = 0, j = 0;
    while (i < terms.size() || j < o.terms.size()) {
      if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first))
        r.terms.push_back(terms[i++]);
      else if (i == terms.size() || o.terms[j].first < terms[i].first)
        r.terms.push_back(o.terms[j++]);
      else {
        r.terms.push_back({terms[i].first, terms[i].second + o.terms[j].second});
        ++i, ++j;
      }
    }
    return r;
  }

  Sequence sub(const Sequence& o) const {  // this / o, requires o | this
    Sequence r;
    std::size_t j = 0;
    for (auto& [g, k] : terms) {
      int d = 0;
      if (j < o.terms.size() && o.terms[j].first == g) d = o.terms[j++].second;
      if (d > k) throw std::invalid_argument("sequence subtraction: not a divisor");
      if (k - d > 0) r.terms.push_back({g, k - d});
    }
    if (j != o.terms.size()) throw std::invalid_argument("sequence subtraction: not a divisor");
    return r;
  }

  Sequence pow(int e) const {
    Sequence r = *this;
    for (auto& [g, k] : r.terms) k *= e;
    if (e == 0) r.terms.clear();
    return r;
  }

  bool operator==(const Sequence& o) const { return terms == o.terms; }
  bool operator<(const Sequence& o) const {  // lex on the expanded element list
    return expand() < o.expand();
  }

  std::string to_string(const GroupTable* G = nullptr) const {
    if (terms.empty()) return "[]";
    std::string s = "[";
    bool first = true;
    for (auto& [g, k] : terms) {
      if (!first) s += ", ";
      first = false;
      s += G ? G->label(g) : "g" + std::to_string(g);
      if (k > 1) s += "^" + std::to_string(k);
    }
    return s + "]";
  }

  nlohmann::json to_json() const {
    nlohmann::json a = nlohmann::json::array(), m = nlohmann::json::array();
    for (auto& [g, k] : terms) {
      a.push_back(g);
      m.push_back(k);
    }
    return {{"alphabet", a}, {"mult", m}};
  }
  static Sequence from_json(const nlohmann::json& j) {
    auto a = j.at("alphabet").get<std::vector<int>>();
    auto m = j.at("mult").get<std::vector<int>>();
    if (a.size() != m.size()) throw std::invalid_argument("sequence json: size mismatch");
    Sequence s;
    std::vector<std::pair<int, int>> t;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (m[i] > 0) t.push_back({a[i], m[i]});
    std::sort(t.begin(), t.end());
    for (auto& [g, k] : t) {
      if (!s.terms.empty() && s.terms.back().first == g)
        s.terms.back().second += k;
      else
        s.terms.push_back({g, k});
    }
    return s;
  }
};

/// Parse the CLI literal form, e.g. "[g3^2, g5]".
inline Sequence parse_sequence(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace((unsigned char)c)) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("sequence literal must be bracketed: " + text);
  s = s.substr(1, s.size() - 2);
  Sequence out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  std::vector<std::pair<int, int>> t;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok[0] != 'g')
      throw std::invalid_argument("bad sequence term (want gN or gN^K): " + tok);
    auto caret = tok.find('^');
    int g = std::stoi(tok.substr(1, caret == std::string::npos ? tok.npos : caret - 1));
    int k = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    if (k < 0) throw std::invalid_argument("negative multiplicity: " + tok);
    if (k > 0) t.push_back({g, k});
  }
  std::sort(t.begin(), t.end());
  for (auto& [g, k] : t) {
    if (!out.terms.empty() && out.terms.back().first == g)
      out.terms.back().second += k;
    else
      out.terms.push_back({g, k});
  }
  return out;
}

using MultVec = std::vector<std::uint16_t>;

/// Exact product sets pi(T) for submultisets of a fixed alphabet, computed by
/// the last-factor recursion pi(T) = union_g pi(T - g) * g and memoized per
/// engine. Product sets are uint64 bitsets, so the group order is capped at
/// 64 here; the dense per-sequence routines below have no such cap.
class ProductEngine {
 public:
  ProductEngine(const GroupTable& G, std::vector<int> alphabet, Budget budget = {})
      : G_(&G), alphabet_(std::move(alphabet)), budget_(budget) {
    if (G.order > 64)
      throw budget_error("memoized product engine requires group order <= 64 (got " +
                         std::to_string(G.order) + ")");
    rm_.resize(alphabet_.size());
    const int nbytes = (G.order + 7) / 8;
    bt_.assign(alphabet_.size(), {});
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      rm_[i].resize(G.order);
      for (int x = 0; x < G.order; ++x) rm_[i][x] = G.op(x, alphabet_[i]);
      // byte-indexed transform tables: image of any product set in one pass
      bt_[i].assign(std::size_t(nbytes) * 256, 0);
      for (int b = 0; b < nbytes; ++b)
        for (int v = 0; v < 256; ++v) {
          std::uint64_t img = 0;
          for (int j = 0; j < 8; ++j) {
            int x = b * 8 + j;
            if (x < G.order && ((v >> j) & 1)) img |= std::uint64_t(1) << rm_[i][x];
          }
          bt_[i][std::size_t(b) * 256 + v] = img;
        }
    }
    nbytes_ = nbytes;
  }

  /// image of a product-set bitmask under right multiplication by symbol i
  std::uint64_t shift_by(std::size_t i, std::uint64_t set) const {
    std::uint64_t r = 0;
    const std::uint64_t* tab = bt_[i].data();
    for (int b = 0; b < nbytes_; ++b) r |= tab[std::size_t(b) * 256 + ((set >> (8 * b)) & 255)];
    return r;
  }

  const GroupTable& group() const { return *G_; }
  const std::vector<int>& alphabet() const { return alphabet_; }
  std::uint64_t memo_entries() const {
    return pi_memo_.size() + posub_memo_.size() + bigpi_memo_.size() + maxlen_memo_.size() +
           minlen_memo_.size() + atom_memo_.size() + lenset_memo_.size();
  }
  std::uint64_t nodes() const { return nodes_; }
  void reset_nodes() {
    nodes_ = 0;
    start_ = std::chrono::steady_clock::now();
  }

  MultVec to_mult(const Sequence& S) const {
    MultVec m(alphabet_.size(), 0);
    for (auto& [g, k] : S.terms) {
      auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), g);
      if (it == alphabet_.end() || *it != g)
        throw std::invalid_argument("sequence uses symbol outside engine alphabet");
      m[it - alphabet_.begin()] = std::uint16_t(k);
    }
    return m;
  }
  Sequence to_sequence(const MultVec& m) const {
    Sequence s;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) s.terms.push_back({alphabet_[i], m[i]});
    return s;
  }

  /// pi(T) as a bitset; bit 0 set means T is a product-one sequence.
  std::uint64_t pi(const MultVec& m) {
    bool empty = true;
    for (auto v : m)
      if (v) {
        empty = false;
        break;
      }
    if (empty) return 1;  // pi of the trivial sequence is {1_G}
    PackedKey key = pack_key(m);
    auto it = pi_memo_.find(key);
    if (it != pi_memo_.end()) return it->second;
    tick();
    std::uint64_t r = 0;
    MultVec t = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      t[i]--;
      std::uint64_t sub = pi(t);
      t[i]++;
      r |= shift_by(i, sub);
    }
    check_memo();
    pi_memo_.emplace(key, r);
    return r;
  }

  bool product_one(const MultVec& m) {
    for (auto v : m)
      if (v) return (pi(m) & 1) != 0;
    return true;  // trivial sequence is the monoid identity
  }

  /// 1_G in Pi(T): T has a nontrivial product-one subsequence.
  bool has_po_subsequence(const MultVec& m) {
    bool empty = true;
    for (auto v : m)
      if (v) empty = false;
    if (empty) return false;
    PackedKey key = pack_key(m);
    auto it = posub_memo_.find(key);
    if (it != posub_memo_.end()) return it->second;
    tick();
    bool r = (pi(m) & 1) != 0;
    if (!r) {
      MultVec t = m;
      for (std::size_t i = 0; i < m.size() && !r; ++i) {
        if (!m[i]) continue;
        t[i]--;
        r = has_po_subsequence(t);
        t[i]++;
      }
    }
    check_memo();
    posub_memo_.emplace(key, r);
    return r;
  }

  /// Pi(T): union of pi over all nontrivial subsequences.
  std::uint64_t big_pi(const MultVec& m) {
    bool empty = true;
    for (auto v : m)
      if (v) empty = false;
    if (empty) return 0;
    PackedKey key = pack_key(m);
    auto it = bigpi_memo_.find(key);
    if (it != bigpi_memo_.end()) return it->second;
    tick();
    std::uint64_t r = pi(m);
    MultVec t = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      t[i]--;
      r |= big_pi(t);
      t[i]++;
    }
    check_memo();
    bigpi_memo_.emplace(key, r);
    return r;
  }

  /// Enumerate submultisets of m (including 0 and m itself) in colex order.
  template <class F>
  void for_each_divisor(const MultVec& m, F&& f) {
    MultVec t(m.size(), 0);
    while (true) {
      f(const_cast<const MultVec&>(t));
      std::size_t i = 0;
      while (i < m.size()) {
        if (t[i] < m[i]) {
          t[i]++;
          break;
        }
        t[i] = 0;
        ++i;
      }
      if (i == m.size()) break;
    }
  }

  /// As for_each_divisor, but stops as soon as f returns true.
  template <class F>
  bool any_divisor(const MultVec& m, F&& f) {
    MultVec t(m.size(), 0);
    while (true) {
      if (f(const_cast<const MultVec&>(t))) return true;
      std::size_t i = 0;
      while (i < m.size()) {
        if (t[i] < m[i]) {
          t[i]++;
          break;
        }
        t[i] = 0;
        ++i;
      }
      if (i == m.size()) break;
    }
    return false;
  }

  bool is_atom(const MultVec& m) {
    if (!product_one(m)) return false;
    bool any = false;
    for (auto v : m)
      if (v) any = true;
    if (!any) return false;  // trivial sequence is the unit, not an atom
    PackedKey key = pack_key(m);
    auto it = atom_memo_.find(key);
    if (it != atom_memo_.end()) return it->second;
    tick();
    int total = 0;
    for (auto v : m) total += v;
    MultVec rest(m.size());
    bool split = any_divisor(m, [&](const MultVec& t) {
      int tl = 0;
      for (auto v : t) tl += v;
      if (tl == 0 || tl > total / 2) return false;  // complement symmetry
      if (!product_one(t)) return false;
      for (std::size_t i = 0; i < m.size(); ++i) rest[i] = std::uint16_t(m[i] - t[i]);
      return product_one(rest);
    });
    bool atom = !split;
    check_memo();
    atom_memo_.emplace(key, atom);
    return atom;
  }

  /// max L(S): greatest k such that S factors into k atoms. S must be
  /// product-one; the trivial sequence gives 0.
  int max_factorization_length(const MultVec& m) {
    if (!product_one(m)) throw std::invalid_argument("max_factorization_length: not product-one");
    return maxlen_rec(m);
  }
  int min_factorization_length(const MultVec& m) {
    if (!product_one(m)) throw std::invalid_argument("min_factorization_length: not product-one");
    return minlen_rec(m);
  }
  /// Set of factorization lengths as a bitmask (bit k = some factorization
  /// into k atoms exists). Lengths are at most 63 here.
  std::uint64_t length_set(const MultVec& m) {
    if (!product_one(m)) throw std::invalid_argument("length_set: not product-one");
    int total = 0;
    for (auto v : m) total += v;
    if (total > 63) throw budget_error("length_set: sequence too long for the length bitmask");
    return lenset_rec(m);
  }

 private:
  void tick() {
    if (++nodes_ > budget_.max_nodes) throw budget_error("product engine: node budget exceeded");
    if (budget_.max_millis >= 0 && (nodes_ & 8191) == 0) {
      auto el = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
      if (el > budget_.max_millis) throw budget_error("product engine: wall-clock budget exceeded");
    }
  }
  void check_memo() const {
    if (memo_entries() >= budget_.max_memo)
      throw budget_error("product engine: memo budget exceeded");
  }

  int maxlen_rec(const MultVec& m) {
    bool empty = true;
    for (auto v : m)
      if (v) empty = false;
    if (empty) return 0;
    PackedKey key = pack_key(m);
    auto it = maxlen_memo_.find(key);
    if (it != maxlen_memo_.end()) return it->second;
    tick();
    int best = 0;  // m is product-one and nontrivial: at least 1 via T = m
    MultVec rest(m.size());
    for_each_divisor(m, [&](const MultVec& t) {
      int tl = 0;
      for (auto v : t) tl += v;
      if (tl == 0) return;
      if (!product_one(t)) return;
      for (std::size_t i = 0; i < m.size(); ++i) rest[i] = std::uint16_t(m[i] - t[i]);
      if (!product_one(rest)) return;
      int cand = 1 + maxlen_rec(rest);
      if (cand > best) best = cand;
    });
    check_memo();
    maxlen_memo_.emplace(key, best);
    return best;
  }

  // Min/length-set recursions restrict the extracted factor to atoms; every
  // factorization has an atom as one of its parts, so this is exact.
  int minlen_rec(const MultVec& m) {
    bool empty = true;
    for (auto v : m)
      if (v) empty = false;
    if (empty) return 0;
    PackedKey key = pack_key(m);
    auto it = minlen_memo_.find(key);
    if (it != minlen_memo_.end()) return it->second;
    tick();
    int best = INT32_MAX;
    MultVec rest(m.size());
    for_each_divisor(m, [&](const MultVec& t) {
      int tl = 0;
      for (auto v : t) tl += v;
      if (tl == 0) return;
      for (std::size_t i = 0; i < m.size(); ++i) rest[i] = std::uint16_t(m[i] - t[i]);
      if (!product_one(rest)) return;
      if (!is_atom(t)) return;
      int cand = 1 + minlen_rec(rest);
      if (cand < best) best = cand;
    });
    check_memo();
    minlen_memo_.emplace(key, best);
    return best;
  }

  std::uint64_t lenset_rec(const MultVec& m) {
    bool empty = true;
    for (auto v : m)
      if (v) empty = false;
    if (empty) return 1;  // {0}
    PackedKey key = pack_key(m);
    auto it = lenset_memo_.find(key);
    if (it != lenset_memo_.end()) return it->second;
    tick();
    std::uint64_t r = 0;
    MultVec rest(m.size());
    for_each_divisor(m, [&](const MultVec& t) {
      int tl = 0;
      for (auto v : t) tl += v;
      if (tl == 0) return;
      for (std::size_t i = 0; i < m.size(); ++i) rest[i] = std::uint16_t(m[i] - t[i]);
      if (!product_one(rest)) return;
      if (!is_atom(t)) return;
      r |= lenset_rec(rest) << 1;
    });
    check_memo();
    lenset_memo_.emplace(key, r);
    return r;
  }

  const GroupTable* G_;
  std::vector<int> alphabet_;
  Budget budget_;
  std::vector<std::vector<int>> rm_;  // right multiplication tables per symbol
  std::vector<std::vector<std::uint64_t>> bt_;  // byte-indexed set transforms
  int nbytes_ = 1;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  std::unordered_map<PackedKey, std::uint64_t, PackedKeyHash> pi_memo_;
  std::unordered_map<PackedKey, bool, PackedKeyHash> posub_memo_;
  std::unordered_map<PackedKey, std::uint64_t, PackedKeyHash> bigpi_memo_;
  std::unordered_map<PackedKey, int, PackedKeyHash> maxlen_memo_;
  std::unordered_map<PackedKey, int, PackedKeyHash> minlen_memo_;
  std::unordered_map<PackedKey, bool, PackedKeyHash> atom_memo_;
  std::unordered_map<PackedKey, std::uint64_t, PackedKeyHash> lenset_memo_;
};

// --- dense per-sequence routines (any group order) -------------------------

namespace detail {

struct DenseLattice {
  std::vector<int> strides;
  std::vector<int> sizes;
  std::size_t total = 1;
};

inline DenseLattice lattice_for(const Sequence& S, std::uint64_t max_entries) {
  DenseLattice L;
  for (auto& [g, k] : S.terms) {
    L.sizes.push_back(k + 1);
    L.strides.push_back(int(L.total));
    L.total *= std::size_t(k + 1);
    if (L.total > max_entries)
      throw budget_error("product set: submultiset lattice exceeds memo budget");
  }
  return L;
}

}  // namespace detail

/// Exact pi(S) for any group order, by the dense submultiset DP.
inline ElemSet product_set(const GroupTable& G, const Sequence& S, const Budget& budget = {}) {
  auto L = detail::lattice_for(S, budget.max_memo);
  auto supp = S.support();
  std::vector<ElemSet> dp(L.total, ElemSet(G.order));
  dp[0].set(0);
  std::vector<int> digits(supp.size(), 0);
  for (std::size_t idx = 1; idx < L.total; ++idx) {
    // increment mixed-radix digits
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (++digits[i] < L.sizes[i]) break;
      digits[i] = 0;
    }
    ElemSet& out = dp[idx];
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (!digits[i]) continue;
      const ElemSet& sub = dp[idx - L.strides[i]];
      sub.for_each([&](int x) { out.set(G.op(x, supp[i])); });
    }
  }
  return dp[L.total - 1];
}

/// Exact Pi(S): union of pi over all nontrivial subsequences.
inline ElemSet subsequence_products(const GroupTable& G, const Sequence& S,
                                    const Budget& budget = {}) {
  auto L = detail::lattice_for(S, budget.max_memo);
  auto supp = S.support();
  std::vector<ElemSet> dp(L.total, ElemSet(G.order));
  dp[0].set(0);
  ElemSet acc(G.order);
  std::vector<int> digits(supp.size(), 0);
  for (std::size_t idx = 1; idx < L.total; ++idx) {
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (++digits[i] < L.sizes[i]) break;
      digits[i] = 0;
    }
    ElemSet& out = dp[idx];
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (!digits[i]) continue;
      const ElemSet& sub = dp[idx - L.strides[i]];
      sub.for_each([&](int x) { out.set(G.op(x, supp[i])); });
    }
    acc |= out;
  }
  return acc;
}

inline bool is_product_one(const GroupTable& G, const Sequence& S, const Budget& budget = {}) {
  return product_set(G, S, budget).test(0);
}

inline bool is_product_one_free(const GroupTable& G, const Sequence& S,
                                const Budget& budget = {}) {
  if (S.is_trivial()) return true;
  return !subsequence_products(G, S, budget).test(0);
}

/// Convenience wrappers running the memoized engine over the sequence's own
/// support (group order <= 64).
inline int max_factorization_length(const GroupTable& G, const Sequence& S,
                                    const Budget& budget = {}) {
  ProductEngine eng(G, S.support(), budget);
  return eng.max_factorization_length(eng.to_mult(S));
}
inline int min_factorization_length(const GroupTable& G, const Sequence& S,
                                    const Budget& budget = {}) {
  ProductEngine eng(G, S.support(), budget);
  return eng.min_factorization_length(eng.to_mult(S));
}

/// Oracle-grade reference: pi(S) by explicit enumeration of all distinct
/// orderings. Exponential; test and cross-check use only.
inline ElemSet product_set_by_orderings(const GroupTable& G, const Sequence& S) {
  ElemSet out(G.order);
  std::vector<int> v = S.expand();
  std::sort(v.begin(), v.end());
  if (v.empty()) {
    out.set(0);
    return out;
  }
  do {
    int p = 0;
    for (int g : v) p = G.op(p, g);
    out.set(p);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace zerosum
