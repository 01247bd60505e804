#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zerosum {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a search exceeds its configured resource budget.
/// Searches never return truncated answers; they either finish or throw.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Resource limits for exhaustive searches. Node and memo caps are
/// deterministic; the optional wall-clock cap (max_millis >= 0) is not and is
/// off by default so that identical invocations produce identical output.
struct Budget {
  std::uint64_t max_nodes = 400'000'000;
  std::uint64_t max_memo = std::uint64_t(1) << 26;
  std::int64_t max_millis = -1;  // < 0: no wall-clock cap
};

/// Dynamic bitset over the elements of a group (element index = bit index).
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset() { std::fill(w_.begin(), w_.end(), 0); }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const ElemSet& o) const { return !(*this == o); }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < w_.size(); ++b) {
      std::uint64_t w = w_[b];
      while (w) {
        int i = __builtin_ctzll(w);
        f(int(b * 64) + i);
        w &= w - 1;
      }
    }
  }
  std::vector<int> to_vector() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// 256-bit packed key for multiplicity vectors (up to 32 symbols, each
/// multiplicity < 256). Used to memoize search subproblems.
struct PackedKey {
  std::array<std::uint64_t, 4> w{0, 0, 0, 0};
  bool operator==(const PackedKey& o) const { return w == o.w; }
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : k.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return std::size_t(h);
  }
};

inline PackedKey pack_key(const std::vector<std::uint16_t>& mult) {
  if (mult.size() > 32) throw budget_error("memo key supports at most 32 distinct symbols");
  PackedKey k;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] > 255) throw budget_error("memo key supports multiplicities up to 255");
    k.w[i >> 3] |= std::uint64_t(mult[i]) << ((i & 7) * 8);
  }
  return k;
}

/// splitmix64; used for the sampled associativity check and property sweeps.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

inline long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace zerosum
