#pragma once

#include <map>
#include <vector>

#include "zerosum/util.hpp"

namespace zerosum {

/// Raised when exact arithmetic detects inconsistent input data (for example
/// a Molien average that fails to be a nonnegative-integer series).
struct inconsistency_error : std::runtime_error {
  explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// exact division of integer polynomials (ascending coefficients)
inline std::vector<long long> poly_div_exact(std::vector<long long> num,
                                             const std::vector<long long>& den) {
  if (den.empty() || den.back() == 0) throw std::logic_error("poly_div_exact: bad divisor");
  int dn = int(num.size()) - 1, dd = int(den.size()) - 1;
  if (dn < dd) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<long long> q(dn - dd + 1, 0);
  for (int i = dn - dd; i >= 0; --i) {
    long long c = num[i + dd];
    if (c % den[dd] != 0) throw std::logic_error("poly_div_exact: inexact");
    c /= den[dd];
    q[i] = c;
    for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
  }
  for (long long c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace detail

/// The m-th cyclotomic polynomial with integer coefficients (ascending).
inline std::vector<long long> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m >= 1");
  // x^m - 1 = prod over d | m of Phi_d
  std::vector<std::vector<long long>> phi(m + 1);
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    std::vector<long long> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      num = detail::poly_div_exact(num, phi[e]);
    }
    phi[d] = num;
  }
  return phi[m];
}

/// Exact arithmetic in Q(zeta_m): elements are rational-coefficient
/// polynomials reduced modulo the m-th cyclotomic polynomial.
class CycloField {
 public:
  using Elem = std::vector<Rational>;  // size degree()

  explicit CycloField(int m) : m_(m) {
    auto phi = cyclotomic_polynomial(m);
    deg_ = int(phi.size()) - 1;
    modulus_.assign(phi.begin(), phi.end());
    // power table: x^k reduced, for k in [0, m)
    powers_.resize(m_);
    Elem cur = zero();
    cur[0] = 1;
    powers_[0] = cur;
    for (int k = 1; k < m_; ++k) {
      cur = shift_reduce(cur);
      powers_[k] = cur;
    }
  }

  int m() const { return m_; }
  int degree() const { return deg_; }

  Elem zero() const { return Elem(deg_, Rational(0)); }
  Elem one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
  }
  Elem from_rational(const Rational& r) const {
    Elem e = zero();
    e[0] = r;
    return e;
  }
  /// zeta^k as a reduced element
  const Elem& root_power(long long k) const { return powers_[((k % m_) + m_) % m_]; }

  void add_in_place(Elem& a, const Elem& b) const {
    for (int i = 0; i < deg_; ++i) a[i] += b[i];
  }
  void scale_in_place(Elem& a, const Rational& r) const {
    for (int i = 0; i < deg_; ++i) a[i] *= r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<Rational> c(2 * deg_ - 1, Rational(0));
    for (int i = 0; i < deg_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < deg_; ++j) {
        if (b[j] == 0) continue;
        c[i + j] += a[i] * b[j];
      }
    }
    reduce(c);
    c.resize(deg_);
    return c;
  }

  bool is_zero(const Elem& a) const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }
  bool is_rational(const Elem& a) const {
    for (int i = 1; i < deg_; ++i)
      if (a[i] != 0) return false;
    return true;
  }
  Rational to_rational(const Elem& a) const {
    if (!is_rational(a)) throw inconsistency_error("cyclotomic value is not rational");
    return a[0];
  }

 private:
  void reduce(std::vector<Rational>& c) const {
    for (int j = int(c.size()) - 1; j >= deg_; --j) {
      if (c[j] == 0) continue;
      Rational lead = c[j];
      for (int i = 0; i <= deg_; ++i) c[j - deg_ + i] -= lead * Rational(modulus_[i]);
    }
  }
  Elem shift_reduce(const Elem& a) const {  // multiply by x
    std::vector<Rational> c(deg_ + 1, Rational(0));
    for (int i = 0; i < deg_; ++i) c[i + 1] = a[i];
    reduce(c);
    c.resize(deg_);
    return c;
  }

  int m_, deg_;
  std::vector<long long> modulus_;
  std::vector<Elem> powers_;
};

/// Truncated power series over Q(zeta_m), single variable.
class CycloSeries {
 public:
  CycloSeries(const CycloField& F, int N) : F_(&F), c_(std::size_t(N) + 1, F.zero()) {}

  int truncation() const { return int(c_.size()) - 1; }
  const CycloField& field() const { return *F_; }
  const CycloField::Elem& operator[](int i) const { return c_[i]; }
  CycloField::Elem& operator[](int i) { return c_[i]; }

  static CycloSeries one(const CycloField& F, int N) {
    CycloSeries s(F, N);
    s[0] = F.one();
    return s;
  }
  /// 1/(1 - zeta^e T) = sum_j zeta^{e j} T^j
  static CycloSeries geometric(const CycloField& F, int N, long long root_exp) {
    CycloSeries s(F, N);
    for (int j = 0; j <= N; ++j) s[j] = F.root_power(root_exp * j % F.m());
    return s;
  }

  CycloSeries mul(const CycloSeries& o) const {
    int N = truncation();
    CycloSeries r(*F_, N);
    for (int i = 0; i <= N; ++i) {
      if (F_->is_zero(c_[i])) continue;
      for (int j = 0; i + j <= N; ++j) {
        if (F_->is_zero(o.c_[j])) continue;
        auto prod = F_->mul(c_[i], o.c_[j]);
        F_->add_in_place(r[i + j], prod);
      }
    }
    return r;
  }
  void add_scaled(const CycloSeries& o, const Rational& w) {
    for (int i = 0; i <= truncation(); ++i) {
      auto t = o.c_[i];
      F_->scale_in_place(t, w);
      F_->add_in_place(c_[i], t);
    }
  }

 private:
  const CycloField* F_;
  std::vector<CycloField::Elem> c_;
};

/// Truncated multigraded series: exponent vector (one slot per summand) to
/// coefficient, all entries of total degree <= N.
class MultiCycloSeries {
 public:
  MultiCycloSeries(const CycloField& F, int r, int N) : F_(&F), r_(r), N_(N) {}

  static MultiCycloSeries one(const CycloField& F, int r, int N) {
    MultiCycloSeries s(F, r, N);
    s.c_[std::vector<int>(r, 0)] = F.one();
    return s;
  }

  int truncation() const { return N_; }
  int arity() const { return r_; }
  const std::map<std::vector<int>, CycloField::Elem>& coeffs() const { return c_; }

  /// multiply by the geometric series of variable `var` with root exponent e
  MultiCycloSeries mul_geometric(int var, long long root_exp) const {
    MultiCycloSeries r(*F_, r_, N_);
    for (const auto& [a, coef] : c_) {
      if (F_->is_zero(coef)) continue;
      int total = 0;
      for (int x : a) total += x;
      std::vector<int> b = a;
      for (int j = 0; total + j <= N_; ++j) {
        b[var] = a[var] + j;
        auto t = F_->mul(coef, F_->root_power(root_exp * j % F_->m()));
        auto it = r.c_.find(b);
        if (it == r.c_.end())
          r.c_.emplace(b, std::move(t));
        else
          F_->add_in_place(it->second, t);
      }
    }
    return r;
  }
  void add_scaled(const MultiCycloSeries& o, const Rational& w) {
    for (const auto& [a, coef] : o.c_) {
      auto t = coef;
      F_->scale_in_place(t, w);
      auto it = c_.find(a);
      if (it == c_.end())
        c_.emplace(a, std::move(t));
      else
        F_->add_in_place(it->second, t);
    }
  }

 private:
  const CycloField* F_;
  int r_, N_;
  std::map<std::vector<int>, CycloField::Elem> c_;
};

}  // namespace zerosum
