#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "zerosum/invariant_bridge.hpp"
#include "zerosum/molien.hpp"

using namespace zerosum;

TEST_CASE("cyclotomic polynomials") {
  REQUIRE(cyclotomic_polynomial(1) == std::vector<long long>({-1, 1}));
  REQUIRE(cyclotomic_polynomial(2) == std::vector<long long>({1, 1}));
  REQUIRE(cyclotomic_polynomial(6) == std::vector<long long>({1, -1, 1}));
  REQUIRE(cyclotomic_polynomial(12) == std::vector<long long>({1, 0, -1, 0, 1}));
  REQUIRE(cyclotomic_polynomial(30) == std::vector<long long>({1, 1, 0, -1, -1, -1, 0, 1, 1}));
}

TEST_CASE("cyclotomic field arithmetic") {
  for (int m : {2, 5, 12, 30}) {
    CycloField F(m);
    // zeta^a * zeta^b = zeta^(a+b)
    for (int a = 0; a < m; a += std::max(1, m / 7))
      for (int b = 0; b < m; b += std::max(1, m / 5)) {
        auto prod = F.mul(F.root_power(a), F.root_power(b));
        REQUIRE(prod == F.root_power(a + b));
      }
    // sum over all m-th roots of unity vanishes for m > 1
    auto s = F.zero();
    for (int k = 0; k < m; ++k) F.add_in_place(s, F.root_power(k));
    REQUIRE(F.is_zero(s));
  }
}

TEST_CASE("Molien series basics") {
  SECTION("trivial group, one variable: all coefficients 1") {
    EigenRep r;
    r.m = 1;
    r.dims = {1};
    r.classes.push_back({1, {{0}}});
    auto c = molien_series(r, 12);
    for (long long x : c) REQUIRE(x == 1);
  }
  SECTION("C_2 acting by -1 on one variable: 1/(1-T^2)") {
    EigenRep r;
    r.m = 2;
    r.dims = {1};
    r.classes.push_back({1, {{0}}});
    r.classes.push_back({1, {{1}}});
    auto c = molien_series(r, 11);
    for (int d = 0; d <= 11; ++d) REQUIRE(c[d] == (d % 2 == 0 ? 1 : 0));
  }
  SECTION("inconsistent class data is rejected") {
    EigenRep r;
    r.m = 2;
    r.dims = {1};
    r.classes.push_back({1, {{0}}});
    r.classes.push_back({2, {{1}}});  // bogus class size
    REQUIRE_THROWS_AS(molien_series(r, 6), inconsistency_error);
  }
}

namespace {
// independent oracle: integer power series of (1 + T^a) / prod (1 - T^{b_i})
std::vector<long long> rational_series(int numer_shift, std::vector<int> denom, int N) {
  std::vector<long long> s(std::size_t(N) + 1, 0);
  s[0] = 1;
  if (numer_shift > 0 && numer_shift <= N) s[std::size_t(numer_shift)] += 1;
  for (int b : denom) {
    // multiply by 1/(1 - T^b), i.e. prefix sums with stride b
    for (int d = b; d <= N; ++d) s[std::size_t(d)] += s[std::size_t(d - b)];
  }
  return s;
}
}  // namespace

TEST_CASE("icosahedral invariants") {
  const int N = 40;
  auto c = molien_series(a5_icosahedral(), N);
  auto oracle = rational_series(15, {2, 6, 10}, N);
  REQUIRE(c == oracle);

  NumericalMonoid M = block_monoid_from_series(c);
  REQUIRE(M.gens == std::vector<long long>({2, 15}));
  REQUIRE(M.content == 1);
  REQUIRE(M.gaps == std::vector<long long>({1, 3, 5, 7, 9, 11, 13}));
  REQUIRE(M.conductor == 14);
  REQUIRE(closed_under_addition(M, 60));
  REQUIRE(numerical_davenport(M, 1).value == 15);

  // the documented generating set spans the same monoid
  NumericalMonoid M2 = monoid_from_generators({2, 6, 10, 15});
  REQUIRE(M2.gens == M.gens);
  REQUIRE(M2.gaps == M.gaps);

  auto bound = beta_lower_bound(a5_icosahedral(), 1, N);
  REQUIRE(bound.bound == 15);
}

TEST_CASE("binary tetrahedral invariants") {
  const int N = 40;
  auto c = molien_series(binary_tetrahedral_2d(), N);
  std::set<long long> support;
  for (int d = 0; d <= N; ++d)
    if (c[d]) support.insert(d);
  std::set<long long> expected = {0, 6, 8};
  for (long long d = 12; d <= N; d += 2) expected.insert(d);
  REQUIRE(support == expected);
  NumericalMonoid M = block_monoid_from_series(c);
  REQUIRE(M.gens == std::vector<long long>({6, 8}));
  REQUIRE(M.content == 2);
  REQUIRE(numerical_davenport(M, 1).value == 8);
  REQUIRE(scalar_content(binary_tetrahedral_2d(), 0) == 2);
}

TEST_CASE("Pauli group invariants") {
  auto c = molien_series(pauli_2d(), 24);
  // C[x,y]^G is freely generated in two degree-4 invariants: 1/(1-T^4)^2
  auto oracle = rational_series(0, {4, 4}, 24);
  REQUIRE(c == oracle);
  REQUIRE(scalar_content(pauli_2d(), 0) == 4);
  NumericalMonoid M = block_monoid_from_series(c);
  REQUIRE(M.content == 4);
  REQUIRE(M.gens == std::vector<long long>({4}));
}

TEST_CASE("scalar content") {
  REQUIRE(scalar_content(a5_icosahedral(), 0) == 1);
  SECTION("faithful scalar action of C_n") {
    for (int n : {3, 5}) {
      GroupTable G = build_group("cyclic:" + std::to_string(n));
      CharacterGroup C = character_group(G);
      // the generator character: all elements act as scalars
      EigenRep r = rep_from_characters(G, C, {C.characters[1]});
      REQUIRE(scalar_content(r, 0) == n);
      // cross-check: gcd of the block monoid members equals the content
      NumericalMonoid M = block_monoid_from_series(molien_series(r, 3 * n));
      REQUIRE(M.content == n);
    }
  }
}

TEST_CASE("abelian Molien coefficients count invariant monomials") {
  struct Case {
    const char* spec;
    std::vector<std::vector<int>> rows;
  };
  for (auto& [spec, rows] : {Case{"cyclic:3", {{1}, {1}, {1}}}, Case{"cyclic:4", {{1}, {2}}},
                             Case{"abelian:2,2", {{0, 1}, {1, 0}, {1, 1}}}}) {
    GroupTable G = build_group(spec);
    std::vector<CharacterVector> weights;
    for (auto& r : rows) weights.push_back({r});
    CharacterModule M = make_character_module(G, weights);
    EigenRep rep = rep_from_characters(G, M.characters, weights);
    const int N = 12;
    auto c = molien_series(rep, N);
    for (int d = 0; d <= N; ++d) {
      long long count = 0;
      std::vector<int> a(M.variables(), 0);
      std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == M.variables()) {
          if (left == 0 && is_invariant_monomial(M, a)) ++count;
          return;
        }
        for (int x = 0; x <= left; ++x) {
          a[var] = x;
          rec(var + 1, left - x);
        }
        a[var] = 0;
      };
      rec(0, d);
      REQUIRE(c[d] == count);
    }
  }
}

TEST_CASE("numerical Davenport constants") {
  SECTION("N_0 itself: D_k = k") {
    NumericalMonoid M = monoid_from_generators({1});
    for (int k = 1; k <= 5; ++k) REQUIRE(numerical_davenport(M, k).value == k);
  }
  SECTION("<2,15>: D_k = 2k + 13") {
    NumericalMonoid M = monoid_from_generators({2, 15});
    REQUIRE(numerical_davenport(M, 1).value == 15);
    REQUIRE(numerical_davenport(M, 2).value == 17);
    REQUIRE(numerical_davenport(M, 3).value == 19);
    REQUIRE(degree_e(M) == 2);
  }
  SECTION("D_k / k is non-increasing and eventually linear") {
    NumericalMonoid M = monoid_from_generators({6, 8});
    std::vector<long long> D;
    for (int k = 1; k <= 6; ++k) D.push_back(numerical_davenport(M, k).value);
    for (int k = 1; k < 6; ++k) REQUIRE(D[k] * k <= D[k - 1] * (k + 1));
    // D_k - k e(M) stabilizes
    REQUIRE(D[4] - 5 * degree_e(M) == D[5] - 6 * degree_e(M));
  }
}

TEST_CASE("multigraded block monoids") {
  // C_2 acting by the sign character on two summands
  EigenRep r;
  r.m = 2;
  r.dims = {1, 1};
  r.classes.push_back({1, {{0}, {0}}});
  r.classes.push_back({1, {{1}, {1}}});
  r.validate();
  const int N = 10;
  auto coeffs = molien_series_multi(r, N);
  for (const auto& [a, c] : coeffs) {
    REQUIRE((a[0] + a[1]) % 2 == 0);
    REQUIRE(c == 1);
  }
  auto M = block_monoid_from_series(coeffs, 2, N);
  std::vector<std::vector<int>> expect = {{0, 2}, {1, 1}, {2, 0}};
  std::sort(expect.begin(), expect.end());
  auto gens = M.gens;
  std::sort(gens.begin(), gens.end());
  REQUIRE(gens == expect);
  REQUIRE(numerical_davenport(M, 1).value == 2);
  REQUIRE(numerical_davenport(M, 2).value == 4);
}

TEST_CASE("eigen rep JSON round trip") {
  EigenRep r = a5_icosahedral();
  EigenRep r2 = EigenRep::from_json(r.to_json());
  REQUIRE(r2.m == r.m);
  REQUIRE(r2.group_order() == 60);
  REQUIRE(molien_series(r2, 10) == molien_series(r, 10));
  nlohmann::json bad = r.to_json();
  bad["classes"][0]["size"] = 5;  // no identity class of size 1 any more
  REQUIRE_THROWS_AS(EigenRep::from_json(bad), std::invalid_argument);
}
