#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zerosum/util.hpp"

namespace zerosum {

/// A finite group as an explicit multiplication table. Element 0 is the
/// identity. Immutable after construction; safe to share across threads.
struct GroupTable {
  int order = 1;
  std::vector<std::uint16_t> mul;  // row-major order x order
  std::vector<std::uint16_t> inv;
  std::vector<int> elt_order;
  std::vector<std::string> labels;  // may be empty
  std::string spec;                 // the spec string this table was built from

  int op(int a, int b) const { return mul[std::size_t(a) * order + b]; }
  int inverse(int a) const { return inv[a]; }
  int power(int g, long long e) const {
    long long n = elt_order[g];
    e %= n;
    if (e < 0) e += n;
    int r = 0;
    for (long long i = 0; i < e; ++i) r = op(r, g);
    return r;
  }
  bool is_abelian() const {
    for (int a = 0; a < order; ++a)
      for (int b = a + 1; b < order; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }
  int exponent() const {
    long long e = 1;
    for (int g = 0; g < order; ++g) e = lcm_ll(e, elt_order[g]);
    return int(e);
  }
  std::string label(int g) const {
    if (g >= 0 && g < int(labels.size()) && !labels[g].empty()) return labels[g];
    return "e" + std::to_string(g);
  }
};

struct Subgroup {
  const GroupTable* parent = nullptr;
  std::vector<int> members;  // sorted, contains 0
  bool is_normal = false;
  int order() const { return int(members.size()); }
  bool contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }
};

namespace detail {

inline void validate_table(const GroupTable& G) {
  const int n = G.order;
  if (n <= 0 || int(G.mul.size()) != n * n) throw std::invalid_argument("group table: bad size");
  // identity
  for (int g = 0; g < n; ++g)
    if (G.op(0, g) != g || G.op(g, 0) != g)
      throw std::invalid_argument("group table: element 0 is not an identity");
  // Latin square
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int c = G.op(a, b);
      if (c < 0 || c >= n || seen[c]) throw std::invalid_argument("group table: row is not a permutation");
      seen[c] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int c = G.op(a, b);
      if (seen[c]) throw std::invalid_argument("group table: column is not a permutation");
      seen[c] = 1;
    }
  }
  // associativity: full up to order 256, sampled above (10^5 fixed-seed triples)
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
            throw std::invalid_argument("group table: associativity fails");
  } else {
    Rng rng(0x5eedULL);
    for (int t = 0; t < 100000; ++t) {
      int a = int(rng.below(n)), b = int(rng.below(n)), c = int(rng.below(n));
      if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
        throw std::invalid_argument("group table: associativity fails (sampled)");
    }
  }
}

inline void finish_table(GroupTable& G) {
  const int n = G.order;
  validate_table(G);
  G.inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b)
      if (G.op(a, b) == 0) {
        if (G.op(b, a) != 0) throw std::invalid_argument("group table: one-sided inverse");
        G.inv[a] = std::uint16_t(b);
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("group table: missing inverse");
  }
  G.elt_order.assign(n, 1);
  for (int a = 1; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = G.op(x, a);
      ++k;
      if (k > n + 1) throw std::invalid_argument("group table: order computation diverged");
    }
    G.elt_order[a] = k;
  }
}

// --- builders ------------------------------------------------------------

inline GroupTable cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: order must be >= 1");
  GroupTable G;
  G.order = n;
  G.mul.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul[std::size_t(a) * n + b] = std::uint16_t((a + b) % n);
  G.labels.resize(n);
  for (int a = 0; a < n; ++a) G.labels[a] = a == 0 ? "1" : (a == 1 ? "g" : "g" + std::to_string(a));
  return G;
}

inline GroupTable direct_product(const GroupTable& A, const GroupTable& B) {
  GroupTable G;
  G.order = A.order * B.order;
  G.mul.resize(std::size_t(G.order) * G.order);
  auto idx = [&](int a, int b) { return a * B.order + b; };
  for (int a1 = 0; a1 < A.order; ++a1)
    for (int b1 = 0; b1 < B.order; ++b1)
      for (int a2 = 0; a2 < A.order; ++a2)
        for (int b2 = 0; b2 < B.order; ++b2)
          G.mul[std::size_t(idx(a1, b1)) * G.order + idx(a2, b2)] =
              std::uint16_t(idx(A.op(a1, a2), B.op(b1, b2)));
  G.labels.resize(G.order);
  for (int a = 0; a < A.order; ++a)
    for (int b = 0; b < B.order; ++b) G.labels[idx(a, b)] = "(" + A.label(a) + "|" + B.label(b) + ")";
  return G;
}

inline GroupTable abelian_group(const std::vector<int>& ns) {
  GroupTable G = cyclic_group(1);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    GroupTable C = cyclic_group(ns[i]);
    G = i == 0 ? std::move(C) : direct_product(G, C);
  }
  return G;
}

// order 2n; index i + n*j: a^i (j=0), a^i b (j=1); b a = a^{-1} b
inline GroupTable dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: n must be >= 1");
  GroupTable G;
  const int N = 2 * n;
  G.order = N;
  G.mul.resize(std::size_t(N) * N);
  auto idx = [&](int i, int j) { return ((i % n) + n) % n + n * j; };
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (a^{i1} b^{j1})(a^{i2} b^{j2}) = a^{i1 + (-1)^{j1} i2} b^{j1+j2}
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          int j = (j1 + j2) % 2;
          G.mul[std::size_t(idx(i1, j1)) * N + idx(i2, j2)] = std::uint16_t(idx(i, j));
        }
  G.labels.resize(N);
  for (int i = 0; i < n; ++i) {
    G.labels[idx(i, 0)] = i == 0 ? "1" : (i == 1 ? "a" : "a" + std::to_string(i));
    G.labels[idx(i, 1)] = i == 0 ? "b" : (i == 1 ? "ab" : "a" + std::to_string(i) + "b");
  }
  return G;
}

// order 4m; index i + 2m*j: a^i (j=0), a^i b (j=1); b^2 = a^m, b a = a^{-1} b
inline GroupTable dicyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("dicyclic: m must be >= 1");
  GroupTable G;
  const int n = 2 * m, N = 4 * m;
  G.order = N;
  G.mul.resize(std::size_t(N) * N);
  auto idx = [&](int i, int j) { return ((i % n) + n) % n + n * j; };
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          int j = j1 + j2;
          if (j == 2) {  // b^2 = a^m
            i += m;
            j = 0;
          }
          G.mul[std::size_t(idx(i1, j1)) * N + idx(i2, j2)] = std::uint16_t(idx(i, j));
        }
  G.labels.resize(N);
  for (int i = 0; i < n; ++i) {
    G.labels[idx(i, 0)] = i == 0 ? "1" : (i == 1 ? "a" : "a" + std::to_string(i));
    G.labels[idx(i, 1)] = i == 0 ? "b" : (i == 1 ? "ab" : "a" + std::to_string(i) + "b");
  }
  return G;
}

// C_m x| C_n, generator of C_n acting by x -> x^r; index x + m*y
inline GroupTable semidirect_group(int m, int n, long long r) {
  if (m < 1 || n < 1) throw std::invalid_argument("semidirect: orders must be >= 1");
  r = ((r % m) + m) % m;
  // validate r^n = 1 (mod m)
  long long t = 1 % m;
  for (int i = 0; i < n; ++i) t = (t * r) % m;
  if (t != 1 % m) throw std::invalid_argument("semidirect: action invalid, r^n != 1 (mod m)");
  std::vector<long long> rpow(n);  // r^y mod m
  rpow[0] = 1 % m;
  for (int y = 1; y < n; ++y) rpow[y] = (rpow[y - 1] * r) % m;
  GroupTable G;
  const int N = m * n;
  G.order = N;
  G.mul.resize(std::size_t(N) * N);
  auto idx = [&](int x, int y) { return x + m * y; };
  for (int x1 = 0; x1 < m; ++x1)
    for (int y1 = 0; y1 < n; ++y1)
      for (int x2 = 0; x2 < m; ++x2)
        for (int y2 = 0; y2 < n; ++y2) {
          int x = int((x1 + rpow[y1] * x2) % m);
          int y = (y1 + y2) % n;
          G.mul[std::size_t(idx(x1, y1)) * N + idx(x2, y2)] = std::uint16_t(idx(x, y));
        }
  G.labels.resize(N);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y) {
      std::string s;
      if (x) s += x == 1 ? "a" : "a" + std::to_string(x);
      if (y) s += y == 1 ? "b" : "b" + std::to_string(y);
      G.labels[idx(x, y)] = s.empty() ? "1" : s;
    }
  return G;
}

inline std::vector<std::vector<int>> permutations_lex(int n, bool even_only) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline GroupTable permutation_group(int n, bool even_only) {
  if (n < 1 || n > 6) throw std::invalid_argument("permutation groups supported for n in [1,6]");
  auto perms = permutations_lex(n, even_only);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = int(i);
  GroupTable G;
  const int N = int(perms.size());
  G.order = N;
  G.mul.resize(std::size_t(N) * N);
  // (fg)(x) = f(g(x))
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      G.mul[std::size_t(a) * N + b] = std::uint16_t(index.at(c));
    }
  G.labels.resize(N);
  for (int a = 0; a < N; ++a) {
    std::string s;
    for (int x = 0; x < n; ++x) s += char('1' + perms[a][x]);
    G.labels[a] = s;
  }
  return G;
}

// order p^3: unipotent upper triangular (a,b,c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'); index (a*p + b)*p + c
inline GroupTable heisenberg_group(int p) {
  if (p < 2 || p > 5) throw std::invalid_argument("heisenberg: p must be in [2,5]");
  GroupTable G;
  const int N = p * p * p;
  G.order = N;
  G.mul.resize(std::size_t(N) * N);
  auto idx = [&](int a, int b, int c) { return (a * p + b) * p + c; };
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < p; ++b1)
      for (int c1 = 0; c1 < p; ++c1)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              G.mul[std::size_t(idx(a1, b1, c1)) * N + idx(a2, b2, c2)] = std::uint16_t(
                  idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p));
  G.labels.resize(N);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        G.labels[idx(a, b, c)] = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ")";
  return G;
}

inline GroupTable table_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("table: cannot open file " + path);
  nlohmann::json j;
  in >> j;
  GroupTable G;
  G.order = j.at("order").get<int>();
  const auto& rows = j.at("mul");
  G.mul.reserve(std::size_t(G.order) * G.order);
  for (const auto& row : rows)
    for (const auto& v : row) G.mul.push_back(std::uint16_t(v.get<int>()));
  if (j.contains("labels")) G.labels = j.at("labels").get<std::vector<std::string>>();
  return G;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("malformed integer list: " + s);
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace detail

/// Build a group from a spec string. Supported forms:
///   cyclic:n            abelian:n1,n2,...    dihedral:n (order 2n)
///   dicyclic:m (order 4m)                    semidirect:m,n,r
///   symmetric:n (n<=6)  alternating:n (n<=6) heisenberg:p (order p^3, p<=5)
///   product:<spec>+<spec>                    table:<path>
/// Element indexing is deterministic per spec string (identity first).
inline GroupTable build_group(const std::string& spec, int order_cap = 720) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("malformed group spec: " + spec);
  std::string kind = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  GroupTable G;
  if (kind == "cyclic") {
    G = detail::cyclic_group(std::stoi(arg));
  } else if (kind == "abelian") {
    G = detail::abelian_group(detail::parse_int_list(arg));
  } else if (kind == "dihedral") {
    G = detail::dihedral_group(std::stoi(arg));
  } else if (kind == "dicyclic") {
    G = detail::dicyclic_group(std::stoi(arg));
  } else if (kind == "semidirect") {
    auto v = detail::parse_int_list(arg);
    if (v.size() != 3) throw std::invalid_argument("semidirect needs m,n,r");
    G = detail::semidirect_group(v[0], v[1], v[2]);
  } else if (kind == "symmetric") {
    G = detail::permutation_group(std::stoi(arg), false);
  } else if (kind == "alternating") {
    G = detail::permutation_group(std::stoi(arg), true);
  } else if (kind == "heisenberg") {
    G = detail::heisenberg_group(std::stoi(arg));
  } else if (kind == "product") {
    std::vector<std::string> parts;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, '+')) parts.push_back(tok);
    if (parts.size() < 2) throw std::invalid_argument("product needs at least two factors");
    G = build_group(parts[0], order_cap);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      GroupTable H = build_group(parts[i], order_cap);
      if (std::int64_t(G.order) * H.order > order_cap)
        throw std::invalid_argument("group order exceeds cap");
      G = detail::direct_product(G, H);
    }
  } else if (kind == "table") {
    G = detail::table_from_json(arg);
  } else {
    throw std::invalid_argument("unknown group kind: " + kind);
  }
  if (G.order > order_cap) throw std::invalid_argument("group order exceeds cap");
  G.spec = spec;
  detail::finish_table(G);
  return G;
}

/// Smallest subgroup containing the given generators.
inline Subgroup subgroup_closure(const GroupTable& G, std::vector<int> gens) {
  std::vector<char> in(G.order, 0);
  in[0] = 1;
  std::vector<int> frontier{0};
  for (int g : gens)
    if (!in[g]) {
      in[g] = 1;
      frontier.push_back(g);
    }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> members;
    for (int a = 0; a < G.order; ++a)
      if (in[a]) members.push_back(a);
    for (int a : members)
      for (int b : members) {
        int c = G.op(a, b);
        if (!in[c]) {
          in[c] = 1;
          changed = true;
        }
      }
  }
  Subgroup H;
  H.parent = &G;
  for (int a = 0; a < G.order; ++a)
    if (in[a]) H.members.push_back(a);
  H.is_normal = true;
  for (int g = 0; g < G.order && H.is_normal; ++g)
    for (int h : H.members)
      if (!std::binary_search(H.members.begin(), H.members.end(),
                              G.op(G.op(g, h), G.inverse(g)))) {
        H.is_normal = false;
        break;
      }
  if (G.order % H.order() != 0) throw std::logic_error("subgroup order does not divide group order");
  return H;
}

/// The subgroup generated by all commutators g^{-1}h^{-1}gh; always normal.
inline Subgroup commutator_subgroup(const GroupTable& G) {
  std::vector<int> gens;
  for (int g = 0; g < G.order; ++g)
    for (int h = 0; h < G.order; ++h)
      gens.push_back(G.op(G.op(G.inverse(g), G.inverse(h)), G.op(g, h)));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_closure(G, gens);
}

/// Quotient of G by a normal subgroup. Cosets are numbered by ascending
/// minimal representative, so the identity coset is element 0.
struct QuotientResult {
  GroupTable table;
  std::vector<int> proj;  // element of G -> element of quotient
  std::vector<int> reps;  // quotient element -> minimal representative in G
};

inline QuotientResult quotient(const GroupTable& G, const Subgroup& N) {
  if (!N.is_normal) throw std::invalid_argument("quotient requires a normal subgroup");
  std::vector<int> coset_min(G.order, -1);
  std::vector<int> reps;
  for (int g = 0; g < G.order; ++g) {
    if (coset_min[g] != -1) continue;
    for (int h : N.members) coset_min[G.op(g, h)] = g;
    reps.push_back(g);
  }
  std::vector<int> proj(G.order);
  std::map<int, int> rep_index;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = int(i);
  for (int g = 0; g < G.order; ++g) proj[g] = rep_index.at(coset_min[g]);
  QuotientResult Q;
  const int q = int(reps.size());
  Q.table.order = q;
  Q.table.mul.resize(std::size_t(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      Q.table.mul[std::size_t(a) * q + b] = std::uint16_t(proj[G.op(reps[a], reps[b])]);
  Q.table.labels.resize(q);
  for (int a = 0; a < q; ++a) Q.table.labels[a] = "[" + G.label(reps[a]) + "]";
  Q.table.spec = G.spec + "/N" + std::to_string(N.order());
  detail::finish_table(Q.table);
  Q.proj = std::move(proj);
  Q.reps = std::move(reps);
  return Q;
}

/// Invariant-factor data of a finite abelian group: a basis b_1,...,b_r with
/// ord(b_i) = n_i and n_1 | n_2 | ... | n_r, plus coordinates of every
/// element in that basis.
struct AbelianStructure {
  std::vector<int> invariant_factors;       // ascending divisibility
  std::vector<int> basis;                   // basis[i] has order invariant_factors[i]
  std::vector<std::vector<int>> coords;     // per group element
};

namespace detail {

inline std::vector<std::pair<int, int>> abelian_basis_rec(const GroupTable& G) {
  // returns (element, order) pairs, orders descending by divisibility
  if (G.order == 1) return {};
  int g = 0;
  for (int a = 0; a < G.order; ++a)
    if (G.elt_order[a] > G.elt_order[g]) g = a;
  Subgroup N = subgroup_closure(G, {g});
  QuotientResult Q = quotient(G, N);
  auto qbasis = abelian_basis_rec(Q.table);
  std::vector<std::pair<int, int>> basis{{g, G.elt_order[g]}};
  for (auto [hbar, m] : qbasis) {
    int h = Q.reps[hbar];
    // h^m lies in <g>; write h^m = g^t, then t is divisible by m because
    // ord(g) is the exponent of G, and h * g^{-t/m} has order exactly m.
    int hm = G.power(h, m);
    int t = 0;
    {
      int x = 0;
      while (x != hm) {
        x = G.op(x, g);
        ++t;
        if (t > G.elt_order[g]) throw std::logic_error("abelian basis: discrete log failed");
      }
    }
    if (t % m != 0) throw std::logic_error("abelian basis: lift adjustment failed");
    int adjusted = G.op(h, G.power(g, -(t / m)));
    if (G.elt_order[adjusted] != m) throw std::logic_error("abelian basis: lifted order mismatch");
    basis.emplace_back(adjusted, m);
  }
  return basis;
}

}  // namespace detail

inline AbelianStructure abelian_structure(const GroupTable& G) {
  if (!G.is_abelian()) throw std::invalid_argument("abelian_structure requires an abelian group");
  auto basis_desc = detail::abelian_basis_rec(G);
  std::reverse(basis_desc.begin(), basis_desc.end());  // ascending divisibility
  AbelianStructure A;
  for (auto [b, n] : basis_desc) {
    A.basis.push_back(b);
    A.invariant_factors.push_back(n);
  }
  // enumerate all coordinate tuples and invert the bijection
  const int r = int(A.basis.size());
  A.coords.assign(G.order, {});
  std::vector<int> c(r, 0);
  std::vector<char> hit(G.order, 0);
  while (true) {
    int x = 0;
    for (int i = 0; i < r; ++i) x = G.op(x, G.power(A.basis[i], c[i]));
    if (hit[x]) throw std::logic_error("abelian basis is not a basis");
    hit[x] = 1;
    A.coords[x] = c;
    int i = r - 1;
    while (i >= 0) {
      if (++c[i] < A.invariant_factors[i]) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  for (char h : hit)
    if (!h) throw std::logic_error("abelian basis does not span");
  return A;
}

/// Abelianization G/G' presented in invariant-factor form, with the
/// projection map from G.
struct Abelianization {
  GroupTable table;                  // abelian:n1,n2,... form
  std::vector<int> invariant_factors;
  std::vector<int> proj;             // element of G -> element of table
};

inline Abelianization abelianization(const GroupTable& G) {
  Subgroup Gp = commutator_subgroup(G);
  QuotientResult Q = quotient(G, Gp);
  AbelianStructure A = abelian_structure(Q.table);
  Abelianization out;
  out.invariant_factors = A.invariant_factors;
  std::string spec = "abelian:";
  for (std::size_t i = 0; i < A.invariant_factors.size(); ++i)
    spec += (i ? "," : "") + std::to_string(A.invariant_factors[i]);
  if (A.invariant_factors.empty()) spec = "cyclic:1";
  out.table = build_group(spec);
  // map Q -> invariant-factor table via coordinates; abelian_group lays the
  // first factor out slowest, so index = ((c_1 n_2 + c_2) n_3 + c_3) ...
  out.proj.resize(G.order);
  for (int g = 0; g < G.order; ++g) {
    const auto& c = A.coords[Q.proj[g]];
    int idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i) idx = idx * A.invariant_factors[i] + c[i];
    out.proj[g] = idx;
  }
  return out;
}

/// exponent(G) = lcm of element orders; e(G0) = max element order over G0.
inline std::pair<int, int> exponent_and_e(const GroupTable& G, const std::vector<int>& G0) {
  if (G0.empty()) throw std::invalid_argument("exponent_and_e: empty G0");
  int e = 0;
  for (int g : G0) e = std::max(e, G.elt_order[g]);
  return {G.exponent(), e};
}

/// A character of an abelian group as a residue vector against the
/// invariant-factor basis.
struct CharacterVector {
  std::vector<int> residues;  // residues[i] mod n_i
  bool operator==(const CharacterVector& o) const { return residues == o.residues; }
  bool operator<(const CharacterVector& o) const { return residues < o.residues; }
};

struct CharacterGroup {
  AbelianStructure structure;
  int exponent = 1;
  std::vector<CharacterVector> characters;  // all |G| of them, lex order

  /// Pairing chi(g) as a root-of-unity exponent: chi(g) = zeta_m^k, m = exponent.
  int pairing_exponent(const CharacterVector& chi, int g) const {
    long long k = 0;
    const auto& a = structure.coords[g];
    for (std::size_t i = 0; i < a.size(); ++i) {
      long long ni = structure.invariant_factors[i];
      k += (long long)chi.residues[i] * a[i] % ni * (exponent / ni);
    }
    return int(((k % exponent) + exponent) % exponent);
  }
};

inline CharacterGroup character_group(const GroupTable& G) {
  CharacterGroup C;
  C.structure = abelian_structure(G);
  C.exponent = 1;
  for (int n : C.structure.invariant_factors) C.exponent = int(lcm_ll(C.exponent, n));
  const int r = int(C.structure.invariant_factors.size());
  std::vector<int> c(r, 0);
  while (true) {
    C.characters.push_back(CharacterVector{c});
    int i = r - 1;
    while (i >= 0) {
      if (++c[i] < C.structure.invariant_factors[i]) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return C;
}

namespace detail {

/// Greedy minimal generating sequence, deterministic by element index.
inline std::vector<int> generating_sequence(const GroupTable& G) {
  std::vector<int> gens;
  Subgroup H = subgroup_closure(G, {});
  while (H.order() < G.order) {
    int next = -1;
    for (int g = 0; g < G.order; ++g)
      if (!H.contains(g)) {
        next = g;
        break;
      }
    gens.push_back(next);
    std::vector<int> all = gens;
    H = subgroup_closure(G, all);
  }
  return gens;
}

/// Extend images of generators to a full map by closure; empty on conflict.
inline std::vector<int> extend_homomorphism(const GroupTable& A, const GroupTable& B,
                                            const std::vector<int>& gens,
                                            const std::vector<int>& images) {
  std::vector<int> img(A.order, -1);
  img[0] = 0;
  std::vector<int> known{0};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (img[gens[i]] != -1) {
      if (img[gens[i]] != images[i]) return {};
      continue;
    }
    img[gens[i]] = images[i];
    known.push_back(gens[i]);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < known.size(); ++i)
      for (std::size_t j = 0; j < known.size(); ++j) {
        int a = known[i], b = known[j];
        int ab = A.op(a, b);
        int target = B.op(img[a], img[b]);
        if (img[ab] == -1) {
          img[ab] = target;
          known.push_back(ab);
          changed = true;
        } else if (img[ab] != target) {
          return {};
        }
      }
  }
  for (int v : img)
    if (v == -1) return {};
  // verify homomorphism fully
  for (int a = 0; a < A.order; ++a)
    for (int b = 0; b < A.order; ++b)
      if (img[A.op(a, b)] != B.op(img[a], img[b])) return {};
  return img;
}

inline void isomorphism_search(const GroupTable& A, const GroupTable& B,
                               const std::vector<int>& gens, std::vector<int>& images,
                               std::size_t depth, bool bijective_only,
                               std::vector<std::vector<int>>& out, bool stop_at_first) {
  if (stop_at_first && !out.empty()) return;
  if (depth == gens.size()) {
    auto img = extend_homomorphism(A, B, gens, images);
    if (img.empty()) return;
    if (bijective_only) {
      std::vector<char> seen(B.order, 0);
      for (int v : img) {
        if (seen[v]) return;
        seen[v] = 1;
      }
    }
    out.push_back(img);
    return;
  }
  for (int c = 0; c < B.order; ++c) {
    if (B.elt_order[c] != A.elt_order[gens[depth]]) continue;
    images[depth] = c;
    isomorphism_search(A, B, gens, images, depth + 1, bijective_only, out, stop_at_first);
    if (stop_at_first && !out.empty()) return;
  }
}

}  // namespace detail

/// All automorphisms of G as permutations (empty when order > cap; callers
/// must not rely on this for correctness, it is a search accelerator only).
inline std::vector<std::vector<int>> automorphisms(const GroupTable& G, int cap = 24) {
  if (G.order > cap) return {};
  auto gens = detail::generating_sequence(G);
  std::vector<int> images(gens.size());
  std::vector<std::vector<int>> out;
  if (gens.empty()) return {{0}};
  detail::isomorphism_search(G, G, gens, images, 0, true, out, false);
  return out;
}

/// Some isomorphism A -> B as an element map, if one exists (order <= cap).
inline std::optional<std::vector<int>> find_isomorphism(const GroupTable& A, const GroupTable& B,
                                                        int cap = 64) {
  if (A.order != B.order) return std::nullopt;
  if (A.order > cap) throw std::invalid_argument("find_isomorphism: order above cap");
  if (A.order == 1) return std::vector<int>{0};
  auto gens = detail::generating_sequence(A);
  std::vector<int> images(gens.size());
  std::vector<std::vector<int>> out;
  detail::isomorphism_search(A, B, gens, images, 0, true, out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

/// A subgroup re-indexed as a standalone GroupTable (members are sorted, so
/// index 0 stays the identity). to_parent maps new indices back into G.
struct SubgroupTable {
  GroupTable table;
  std::vector<int> to_parent;
};

inline SubgroupTable subgroup_as_table(const GroupTable& G, const Subgroup& H) {
  SubgroupTable out;
  const int n = H.order();
  std::vector<int> index_of(G.order, -1);
  for (int i = 0; i < n; ++i) index_of[H.members[i]] = i;
  out.table.order = n;
  out.table.mul.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = index_of[G.op(H.members[a], H.members[b])];
      if (c < 0) throw std::logic_error("subgroup_as_table: not closed");
      out.table.mul[std::size_t(a) * n + b] = std::uint16_t(c);
    }
  out.table.labels.resize(n);
  for (int a = 0; a < n; ++a) out.table.labels[a] = G.label(H.members[a]);
  out.table.spec = G.spec + "<sub" + std::to_string(n) + ">";
  detail::finish_table(out.table);
  out.to_parent = H.members;
  return out;
}

/// All subgroups, found as closures over the subgroup lattice (small orders).
inline std::vector<Subgroup> all_subgroups(const GroupTable& G) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  Subgroup triv = subgroup_closure(G, {});
  seen.insert(triv.members);
  out.push_back(triv);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<int> base = out[i].members;
    for (int g = 0; g < G.order; ++g) {
      if (std::binary_search(base.begin(), base.end(), g)) continue;
      std::vector<int> gens = base;
      gens.push_back(g);
      Subgroup H = subgroup_closure(G, gens);
      if (seen.insert(H.members).second) out.push_back(H);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

}  // namespace zerosum
