#pragma once

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zerosum/cyclotomic.hpp"
#include "zerosum/group.hpp"
#include "zerosum/numerical_monoid.hpp"

namespace zerosum {

/// A representation given purely by eigenvalue data: for each conjugacy
/// class, the eigenvalue exponents (powers of zeta_m) of each summand.
struct EigenRep {
  std::string name;
  int m = 1;                          // common root-of-unity order
  std::vector<int> dims;              // summand dimensions
  struct ClassData {
    long long size = 1;
    std::vector<std::vector<int>> eigs;  // per summand, exponents in Z_m
  };
  std::vector<ClassData> classes;

  int summands() const { return int(dims.size()); }
  long long group_order() const {
    long long n = 0;
    for (const auto& c : classes) n += c.size;
    return n;
  }

  void validate() const {
    if (m < 1) throw std::invalid_argument("eigen rep: root order must be positive");
    if (dims.empty()) throw std::invalid_argument("eigen rep: need at least one summand");
    bool has_identity = false;
    for (const auto& c : classes) {
      if (int(c.eigs.size()) != summands())
        throw std::invalid_argument("eigen rep: class is missing summand data");
      for (int i = 0; i < summands(); ++i)
        if (int(c.eigs[i].size()) != dims[i])
          throw std::invalid_argument("eigen rep: eigenvalue count differs from dimension");
      bool all_zero = true;
      for (const auto& e : c.eigs)
        for (int x : e)
          if (x % m != 0) all_zero = false;
      if (all_zero) {
        if (c.size != 1) throw std::invalid_argument("eigen rep: identity class must have size 1");
        has_identity = true;
      }
    }
    if (!has_identity) throw std::invalid_argument("eigen rep: missing identity class");
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["dims"] = dims;
    auto cl = nlohmann::json::array();
    for (const auto& c : classes) cl.push_back({{"size", c.size}, {"eigs", c.eigs}});
    j["classes"] = cl;
    return j;
  }
  static EigenRep from_json(const nlohmann::json& j) {
    EigenRep r;
    r.m = j.at("m").get<int>();
    r.dims = j.at("dims").get<std::vector<int>>();
    for (const auto& c : j.at("classes")) {
      ClassData d;
      d.size = c.at("size").get<long long>();
      d.eigs = c.at("eigs").get<std::vector<std::vector<int>>>();
      r.classes.push_back(d);
    }
    r.validate();
    return r;
  }
};

// --- built-in representations -------------------------------------------------

/// A_5 acting on C^3 as the rotation group of the icosahedron.
inline EigenRep a5_icosahedral() {
  EigenRep r;
  r.name = "a5_icosahedral";
  r.m = 30;
  r.dims = {3};
  // classes: 1, 15 double rotations (order 2), 20 of order 3, 12+12 of order 5
  r.classes.push_back({1, {{0, 0, 0}}});
  r.classes.push_back({15, {{0, 15, 15}}});
  r.classes.push_back({20, {{0, 10, 20}}});
  r.classes.push_back({12, {{0, 6, 24}}});
  r.classes.push_back({12, {{0, 12, 18}}});
  r.validate();
  return r;
}

/// The binary tetrahedral group (order 24) in its 2-dimensional complex rep.
inline EigenRep binary_tetrahedral_2d() {
  EigenRep r;
  r.name = "binary_tetrahedral";
  r.m = 12;
  r.dims = {2};
  r.classes.push_back({1, {{0, 0}}});    // 1
  r.classes.push_back({1, {{6, 6}}});    // -1
  r.classes.push_back({6, {{3, 9}}});    // order 4
  r.classes.push_back({4, {{4, 8}}});    // order 3
  r.classes.push_back({4, {{4, 8}}});    // order 3 (second class, same eigenvalues)
  r.classes.push_back({4, {{2, 10}}});   // order 6
  r.classes.push_back({4, {{2, 10}}});   // order 6 (second class)
  r.validate();
  return r;
}

/// The group generated by the three Pauli matrices (order 16) on C^2.
inline EigenRep pauli_2d() {
  EigenRep r;
  r.name = "pauli";
  r.m = 4;
  r.dims = {2};
  r.classes.push_back({1, {{0, 0}}});   // I
  r.classes.push_back({1, {{2, 2}}});   // -I
  r.classes.push_back({1, {{1, 1}}});   // iI
  r.classes.push_back({1, {{3, 3}}});   // -iI
  for (int i = 0; i < 3; ++i) {
    r.classes.push_back({2, {{0, 2}}});  // +-sigma
    r.classes.push_back({2, {{1, 3}}});  // +-i sigma
  }
  r.validate();
  return r;
}

/// Default series truncation: far past the conductor of every catalog monoid.
inline int default_truncation(const EigenRep& rep) {
  long long n = 3 * rep.group_order();
  return int(std::max<long long>(40, n));
}

inline EigenRep builtin_rep(const std::string& name) {
  if (name == "a5_icosahedral") return a5_icosahedral();
  if (name == "binary_tetrahedral") return binary_tetrahedral_2d();
  if (name == "pauli") return pauli_2d();
  throw std::invalid_argument("unknown built-in representation: " + name);
}

/// Diagonal representation of an abelian group from a list of characters,
/// one 1-dimensional summand per character.
inline EigenRep rep_from_characters(const GroupTable& G, const CharacterGroup& C,
                                    const std::vector<CharacterVector>& chars) {
  EigenRep r;
  r.name = "abelian_diagonal";
  r.m = C.exponent;
  r.dims.assign(chars.size(), 1);
  for (int g = 0; g < G.order; ++g) {
    EigenRep::ClassData d;
    d.size = 1;
    for (const auto& chi : chars) d.eigs.push_back({C.pairing_exponent(chi, g)});
    r.classes.push_back(d);
  }
  r.validate();
  return r;
}

// --- Molien averages ------------------------------------------------------------

/// Coefficients of the Hilbert series of the invariant ring, total degree
/// grading, exactly: (1/|G|) sum over g of prod over eigenvalues 1/(1 -
/// zeta^e T). The average must come out a nonnegative integer series with
/// constant term 1; anything else reports inconsistent input data.
inline std::vector<long long> molien_series(const EigenRep& rep, int N) {
  rep.validate();
  if (N < 1) throw std::invalid_argument("molien_series: N >= 1");
  CycloField F(rep.m);
  CycloSeries total(F, N);
  for (const auto& c : rep.classes) {
    CycloSeries term = CycloSeries::one(F, N);
    for (int i = 0; i < rep.summands(); ++i)
      for (int e : c.eigs[i]) term = term.mul(CycloSeries::geometric(F, N, ((e % rep.m) + rep.m) % rep.m));
    total.add_scaled(term, Rational(c.size));
  }
  Rational inv(1, rep.group_order());
  std::vector<long long> out(std::size_t(N) + 1);
  for (int d = 0; d <= N; ++d) {
    auto coef = total[d];
    F.scale_in_place(coef, inv);
    Rational v = F.to_rational(coef);  // throws if a nonzero cyclotomic part remains
    if (boost::multiprecision::denominator(v) != 1)
      throw inconsistency_error("Molien coefficient is not an integer");
    BigInt num = boost::multiprecision::numerator(v);
    if (num < 0) throw inconsistency_error("Molien coefficient is negative");
    out[d] = num.convert_to<long long>();
  }
  if (out[0] != 1) throw inconsistency_error("Molien series must start with 1");
  return out;
}

/// Multigraded version: one variable per summand, coefficients for all
/// multidegrees of total degree <= N.
inline std::map<std::vector<int>, long long> molien_series_multi(const EigenRep& rep, int N) {
  rep.validate();
  CycloField F(rep.m);
  MultiCycloSeries total(F, rep.summands(), N);
  for (const auto& c : rep.classes) {
    MultiCycloSeries term = MultiCycloSeries::one(F, rep.summands(), N);
    for (int i = 0; i < rep.summands(); ++i)
      for (int e : c.eigs[i]) term = term.mul_geometric(i, ((e % rep.m) + rep.m) % rep.m);
    total.add_scaled(term, Rational(c.size));
  }
  Rational inv(1, rep.group_order());
  std::map<std::vector<int>, long long> out;
  for (const auto& [a, coef] : total.coeffs()) {
    auto t = coef;
    F.scale_in_place(t, inv);
    Rational v = F.to_rational(t);
    if (boost::multiprecision::denominator(v) != 1)
      throw inconsistency_error("Molien coefficient is not an integer");
    BigInt num = boost::multiprecision::numerator(v);
    if (num < 0) throw inconsistency_error("Molien coefficient is negative");
    long long c2 = num.convert_to<long long>();
    if (c2 != 0) out[a] = c2;
  }
  return out;
}

/// Degrees with nonzero coefficient, certified against the generated monoid.
inline NumericalMonoid block_monoid_from_series(const std::vector<long long>& coeffs) {
  std::vector<long long> support;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    if (coeffs[d] != 0) support.push_back((long long)d);
  return monoid_from_support(support, int(coeffs.size()) - 1);
}

inline MultidegreeMonoid block_monoid_from_series(const std::map<std::vector<int>, long long>& coeffs,
                                                  int r, int N) {
  std::set<std::vector<int>> support;
  for (const auto& [a, c] : coeffs)
    if (c != 0) support.insert(a);
  return multidegree_monoid_from_support(support, r, N);
}

/// c_i = |rho_i(G) intersect scalars|: counted from the classes where the
/// summand's eigenvalues are all equal, divided by the kernel size.
inline long long scalar_content(const EigenRep& rep, int summand) {
  long long scalars = 0, kernel = 0;
  for (const auto& c : rep.classes) {
    const auto& e = c.eigs[summand];
    bool all_equal = true, all_zero = true;
    for (int x : e) {
      if (((x % rep.m) + rep.m) % rep.m != ((e[0] % rep.m) + rep.m) % rep.m) all_equal = false;
      if (x % rep.m != 0) all_zero = false;
    }
    if (all_equal) scalars += c.size;
    if (all_zero) kernel += c.size;
  }
  if (kernel == 0 || scalars % kernel != 0)
    throw inconsistency_error("scalar_content: class data inconsistent");
  return scalars / kernel;
}

struct BetaLowerBound {
  int k = 1;
  long long bound = 0;     // D_k(B(G,V)) <= beta_k(G,V)
  int certified_to = -1;
};

/// Davenport constant of the multidegree monoid as a certified Noether
/// number lower bound.
inline BetaLowerBound beta_lower_bound(const EigenRep& rep, int k, int N) {
  BetaLowerBound out;
  out.k = k;
  if (rep.summands() == 1) {
    NumericalMonoid M = block_monoid_from_series(molien_series(rep, N));
    out.bound = numerical_davenport(M, k).value;
    out.certified_to = M.certified_to;
  } else {
    MultidegreeMonoid M = block_monoid_from_series(molien_series_multi(rep, N), rep.summands(), N);
    out.bound = numerical_davenport(M, k).value;
    out.certified_to = M.certified_to;
  }
  return out;
}

}  // namespace zerosum
