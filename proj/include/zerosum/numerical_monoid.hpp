#pragma once

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "zerosum/cyclotomic.hpp"
#include "zerosum/util.hpp"

namespace zerosum {

/// A numerical monoid <g_1,...,g_k> inside (N_0, +), stored with its content
/// c = gcd(g_i); the monoid is cofinite inside c N_0. Conductor and gap data
/// are certified by an Apery-set computation on the content-reduced monoid.
struct NumericalMonoid {
  long long content = 1;
  std::vector<long long> gens;  // minimal generators, ascending
  long long conductor = 0;      // least C with {x : c | x, x >= C} inside M
  std::vector<long long> gaps;  // multiples of content below conductor not in M
  int certified_to = -1;        // when read off a series: degrees checked

  bool contains(long long x) const {
    if (x < 0) return false;
    if (x == 0) return true;
    if (x % content) return false;
    long long t = x / content;
    long long fr = conductor / content;  // reduced conductor
    if (t >= fr) return true;
    return !std::binary_search(gaps.begin(), gaps.end(), x);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["generators"] = gens;
    j["content"] = content;
    j["conductor"] = conductor;
    j["gaps"] = gaps;
    j["certified_to"] = certified_to;
    return j;
  }
};

namespace detail {

/// Apery-style least members per residue class mod g0 (content-free input).
inline std::vector<long long> apery_set(const std::vector<long long>& gens) {
  long long g0 = gens.front();
  const long long INF = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> dist(std::size_t(g0), INF);
  dist[0] = 0;
  // Bellman-Ford style relaxation over the residue graph
  bool changed = true;
  while (changed) {
    changed = false;
    for (long long r = 0; r < g0; ++r) {
      if (dist[std::size_t(r)] >= INF) continue;
      for (long long g : gens) {
        long long nr = (r + g) % g0;
        long long nd = dist[std::size_t(r)] + g;
        if (nd < dist[std::size_t(nr)]) {
          dist[std::size_t(nr)] = nd;
          changed = true;
        }
      }
    }
  }
  for (long long r = 0; r < g0; ++r)
    if (dist[std::size_t(r)] >= INF)
      throw inconsistency_error("apery_set: generators do not reach every residue class");
  return dist;
}

}  // namespace detail

/// Build the monoid generated by `gens` (not necessarily minimal); computes
/// the minimal generating set, conductor, and gap set.
inline NumericalMonoid monoid_from_generators(std::vector<long long> gens) {
  gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
  if (gens.empty()) throw std::invalid_argument("numerical monoid needs a positive generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  NumericalMonoid M;
  M.content = 0;
  for (long long g : gens) M.content = std::gcd(M.content, g);
  std::vector<long long> reduced;
  for (long long g : gens) reduced.push_back(g / M.content);
  auto apery = detail::apery_set(reduced);
  long long frobenius = *std::max_element(apery.begin(), apery.end()) - reduced.front();
  long long reduced_conductor = frobenius + 1;
  // membership bitmap of the reduced monoid up to the conductor
  std::vector<char> member(std::size_t(reduced_conductor) + 1, 0);
  member[0] = 1;
  for (long long x = 1; x <= reduced_conductor; ++x)
    for (long long g : reduced) {
      if (g > x) break;
      if (member[std::size_t(x - g)]) {
        member[std::size_t(x)] = 1;
        break;
      }
    }
  // minimal generators: not a sum of two nonzero members
  for (long long g : reduced) {
    bool decomposable = false;
    for (long long a = reduced.front(); 2 * a <= g && !decomposable; ++a) {
      auto in = [&](long long x) {
        return x >= reduced_conductor || (x >= 0 && member[std::size_t(x)]);
      };
      if (in(a) && in(g - a)) decomposable = true;
    }
    if (!decomposable) M.gens.push_back(g * M.content);
  }
  M.conductor = reduced_conductor * M.content;
  for (long long t = 1; t < reduced_conductor; ++t)
    if (!member[std::size_t(t)]) M.gaps.push_back(t * M.content);
  return M;
}

/// Extract the monoid of degrees from the support of a series: hypothesize
/// minimal generators from low degrees, then require the generated monoid to
/// reproduce the observed membership on every computed degree.
inline NumericalMonoid monoid_from_support(const std::vector<long long>& support, int N) {
  std::set<long long> have(support.begin(), support.end());
  if (!have.count(0)) throw inconsistency_error("series support must contain degree 0");
  std::vector<long long> positive(have.lower_bound(1), have.end());
  if (positive.empty())
    throw inconsistency_error("series support has no positive member up to the truncation");
  // greedy minimal generators
  std::vector<char> reachable(std::size_t(N) + 1, 0);
  reachable[0] = 1;
  std::vector<long long> gens;
  for (long long m : positive) {
    if (!reachable[std::size_t(m)]) {
      gens.push_back(m);
      for (long long x = m; x <= N; ++x)
        if (reachable[std::size_t(x - m)]) reachable[std::size_t(x)] = 1;
      // recompute closure (new generator may combine with older ones)
      for (long long x = 0; x <= N; ++x)
        if (!reachable[std::size_t(x)])
          for (long long g : gens) {
            if (g > x) break;
            if (reachable[std::size_t(x - g)]) {
              reachable[std::size_t(x)] = 1;
              break;
            }
          }
    }
  }
  for (long long x = 0; x <= N; ++x) {
    bool observed = have.count(x) > 0;
    if (observed != bool(reachable[std::size_t(x)]))
      throw inconsistency_error("series support does not match the generated monoid at degree " +
                                std::to_string(x));
  }
  NumericalMonoid M = monoid_from_generators(gens);
  M.certified_to = N;
  return M;
}

/// Verify closure under addition within a window via the membership data
/// (used as a property check; generation implies closure by construction).
inline bool closed_under_addition(const NumericalMonoid& M, long long window) {
  std::vector<long long> members;
  for (long long x = 0; x <= window; ++x)
    if (M.contains(x)) members.push_back(x);
  for (long long a : members)
    for (long long b : members) {
      if (a + b > window) break;
      if (!M.contains(a + b)) return false;
    }
  return true;
}

/// D_k of a numerical monoid: atoms are the minimal generators, max
/// factorization length by dynamic programming, D_k = largest member whose
/// max factorization length is at most k.
struct NumericalDavenport {
  int k = 1;
  long long value = 0;
  std::vector<long long> witness_parts;  // one factorization of a witness
};

inline NumericalDavenport numerical_davenport(const NumericalMonoid& M, int k) {
  if (k < 1) throw std::invalid_argument("numerical_davenport: k >= 1");
  long long bound = k * M.gens.back();
  std::vector<int> maxlen(std::size_t(bound) + 1, -1);  // -1: not a member
  maxlen[0] = 0;
  for (long long x = 1; x <= bound; ++x) {
    if (!M.contains(x)) continue;
    int best = -1;
    for (long long g : M.gens) {
      if (g > x) break;
      if (maxlen[std::size_t(x - g)] >= 0) best = std::max(best, 1 + maxlen[std::size_t(x - g)]);
    }
    maxlen[std::size_t(x)] = best;
  }
  NumericalDavenport out;
  out.k = k;
  for (long long x = bound; x >= 0; --x)
    if (maxlen[std::size_t(x)] >= 0 && maxlen[std::size_t(x)] <= k) {
      out.value = x;
      break;
    }
  // greedy witness: factor the witness into generators
  long long x = out.value;
  while (x > 0) {
    for (auto it = M.gens.rbegin(); it != M.gens.rend(); ++it) {
      if (*it <= x && M.contains(x - *it)) {
        out.witness_parts.push_back(*it);
        x -= *it;
        break;
      }
    }
  }
  return out;
}

/// e(M) in the degree sense: the least positive member. D_k(M) - k e(M) is
/// eventually constant in k.
inline long long degree_e(const NumericalMonoid& M) { return M.gens.front(); }

// --- multigraded variant ------------------------------------------------------

/// Finitely generated submonoid of N_0^r read off a multigraded series.
struct MultidegreeMonoid {
  int r = 1;
  std::vector<std::vector<int>> gens;  // minimal generators
  int certified_to = -1;               // total degree window that was verified

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["r"] = r;
    j["generators"] = gens;
    j["certified_to"] = certified_to;
    return j;
  }
};

namespace detail {

inline int total_degree(const std::vector<int>& a) {
  int t = 0;
  for (int x : a) t += x;
  return t;
}

/// all sums of gens with total degree <= N
inline std::set<std::vector<int>> reachable_set(const std::vector<std::vector<int>>& gens, int r,
                                                int N) {
  std::set<std::vector<int>> out;
  std::vector<int> zero(r, 0);
  out.insert(zero);
  std::vector<std::vector<int>> frontier{zero};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        std::vector<int> b(r);
        int t = 0;
        for (int i = 0; i < r; ++i) {
          b[i] = a[i] + g[i];
          t += b[i];
        }
        if (t > N) continue;
        if (out.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace detail

inline MultidegreeMonoid multidegree_monoid_from_support(const std::set<std::vector<int>>& support,
                                                         int r, int N) {
  MultidegreeMonoid M;
  M.r = r;
  std::vector<int> zero(r, 0);
  if (!support.count(zero)) throw inconsistency_error("multidegree support must contain 0");
  // ascending by total degree, then lex
  std::vector<std::vector<int>> ordered(support.begin(), support.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int ta = detail::total_degree(a), tb = detail::total_degree(b);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  std::set<std::vector<int>> reach{zero};
  for (const auto& a : ordered) {
    if (detail::total_degree(a) == 0) continue;
    if (reach.count(a)) continue;
    M.gens.push_back(a);
    reach = detail::reachable_set(M.gens, r, N);
  }
  if (reach != support)
    throw inconsistency_error("multigraded support does not match the generated monoid");
  M.certified_to = N;
  return M;
}

inline NumericalDavenport numerical_davenport(const MultidegreeMonoid& M, int k) {
  if (k < 1) throw std::invalid_argument("numerical_davenport: k >= 1");
  int maxgen = 0;
  for (const auto& g : M.gens) maxgen = std::max(maxgen, detail::total_degree(g));
  int bound = k * maxgen;
  auto members = detail::reachable_set(M.gens, M.r, bound);
  std::map<std::vector<int>, int> maxlen;
  maxlen[std::vector<int>(M.r, 0)] = 0;
  // process by ascending total degree
  std::vector<std::vector<int>> ordered(members.begin(), members.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int ta = detail::total_degree(a), tb = detail::total_degree(b);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  for (const auto& a : ordered) {
    if (detail::total_degree(a) == 0) continue;
    int best = -1;
    for (const auto& g : M.gens) {
      std::vector<int> rest(M.r);
      bool ok = true;
      for (int i = 0; i < M.r; ++i) {
        rest[i] = a[i] - g[i];
        if (rest[i] < 0) ok = false;
      }
      if (!ok) continue;
      auto it = maxlen.find(rest);
      if (it != maxlen.end()) best = std::max(best, 1 + it->second);
    }
    if (best >= 0) maxlen[a] = best;
  }
  NumericalDavenport out;
  out.k = k;
  for (const auto& [a, l] : maxlen)
    if (l <= k) out.value = std::max(out.value, (long long)detail::total_degree(a));
  return out;
}

}  // namespace zerosum
