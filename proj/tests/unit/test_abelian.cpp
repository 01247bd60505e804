#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "zerosum/abelian.hpp"

using namespace zerosum;

TEST_CASE("d_star") {
  REQUIRE(d_star(build_group("cyclic:1")) == 0);
  REQUIRE(d_star(build_group("abelian:3,3")) == 4);
  REQUIRE(d_star(build_group("abelian:2,2,4")) == 5);
  REQUIRE(d_star(build_group("cyclic:12")) == 11);
  REQUIRE_THROWS_AS(d_star(build_group("symmetric:3")), std::invalid_argument);
}

TEST_CASE("d_star equals d on p-groups and rank <= 2") {
  for (auto spec : {"cyclic:6", "abelian:2,6", "abelian:3,3", "abelian:2,2,2", "abelian:2,4"}) {
    auto c = verify_dstar_equals_d(build_group(spec));
    INFO(spec);
    REQUIRE(c.equal);
    REQUIRE(c.witness.length() == c.d_value);
  }
}

TEST_CASE("d_k formula for rank <= 2") {
  SECTION("cyclic: d_k = kn - 1") {
    for (int n : {2, 4, 6}) {
      GroupTable G = build_group("cyclic:" + std::to_string(n));
      for (int k = 1; k <= 3; ++k) {
        auto c = dk_formula_check(G, k);
        REQUIRE(c.equal);
        REQUIRE(c.computed_dk == k * n - 1);
      }
    }
  }
  SECTION("C_2 + C_2 at k = 3") {
    auto c = dk_formula_check(build_group("abelian:2,2"), 3);
    REQUIRE(c.equal);
    REQUIRE(c.computed_dk == 6);
  }
  SECTION("k = 1 degenerates to d = d") {
    auto c = dk_formula_check(build_group("cyclic:5"), 1);
    REQUIRE(c.equal);
  }
  SECTION("rank 3 is rejected") {
    REQUIRE_THROWS_AS(dk_formula_check(build_group("abelian:2,2,2"), 2), std::invalid_argument);
  }
}

TEST_CASE("sequence index") {
  SECTION("generator power g^[n] has index 1") {
    for (int n : {4, 7}) {
      GroupTable G = build_group("cyclic:" + std::to_string(n));
      REQUIRE(sequence_index(G, Sequence::single(1, n)) == Rational(1));
    }
  }
  SECTION("zero-sum sequences have integral norm for every generator") {
    GroupTable G = build_group("cyclic:9");
    Rng rng(2024);
    int checked = 0;
    while (checked < 30) {
      std::vector<int> elems;
      int len = 2 + int(rng.below(5)), sum = 0;
      for (int i = 0; i + 1 < len; ++i) {
        int g = int(rng.below(9));
        elems.push_back(g);
        sum = (sum + g) % 9;
      }
      elems.push_back((9 - sum) % 9);
      Sequence S = Sequence::from_elements(elems);
      for (int g = 1; g < 9; ++g) {
        if (std::gcd(g, 9) != 1) continue;
        Rational v = norm_wrt_generator(G, S, g);
        REQUIRE(boost::multiprecision::denominator(v) == 1);
      }
      ++checked;
    }
  }
  SECTION("C_7: g g (5g) has index 1") {
    GroupTable G = build_group("cyclic:7");
    Sequence U = parse_sequence("[g1^2, g5]");
    REQUIRE(sequence_index(G, U) == Rational(1));
  }
  SECTION("index is invariant under unit scaling") {
    GroupTable G = build_group("cyclic:10");
    Sequence S = parse_sequence("[g1^2, g3, g5]");
    for (int u : {3, 7, 9}) {
      std::vector<int> elems;
      for (auto& [x, k] : S.terms)
        for (int i = 0; i < k; ++i) elems.push_back(x * u % 10);
      REQUIRE(sequence_index(G, Sequence::from_elements(elems)) == sequence_index(G, S));
    }
  }
  SECTION("non-cyclic groups are rejected") {
    REQUIRE_THROWS_AS(sequence_index(build_group("abelian:2,2"), Sequence::single(1)),
                      std::invalid_argument);
  }
}

namespace {
// independent partition oracle: count partitions of n with exactly l parts by
// enumerating non-increasing part lists
long long partition_oracle(int n, int l) {
  std::function<long long(int, int, int)> rec = [&](int left, int parts, int maxp) -> long long {
    if (parts == 0) return left == 0 ? 1 : 0;
    long long total = 0;
    for (int p = 1; p <= std::min(left - parts + 1, maxp); ++p)
      total += rec(left - p, parts - 1, p);
    return total;
  };
  return rec(n, l, n);
}
}  // namespace

TEST_CASE("partition counts against an independent oracle") {
  for (int n = 1; n <= 14; ++n)
    for (int l = 1; l <= n; ++l) REQUIRE(partitions_into_parts(n, l) == partition_oracle(n, l));
  REQUIRE(partitions_into_parts(40, 5) == partition_oracle(40, 5));
  REQUIRE(partitions_into_parts(40, 12) == partition_oracle(40, 12));
}

TEST_CASE("counting minimal zero-sum sequences") {
  SECTION("C_5, length 4: 4 atoms") {
    auto c = count_minimal_zero_sum(5, 4);
    REQUIRE(c.formula == 4);
    REQUIRE(c.brute == 4);
  }
  SECTION("C_7, length 6: 6 atoms") {
    auto c = count_minimal_zero_sum(7, 6);
    REQUIRE(c.formula == 6);
    REQUIRE(c.brute == 6);
  }
  SECTION("length n: exactly the phi(n) generator powers") {
    for (int n : {5, 8}) {
      auto c = count_minimal_zero_sum(n, n);
      REQUIRE(c.formula == euler_phi(n));
      REQUIRE(c.brute == c.formula);
    }
  }
  SECTION("short lengths report brute force only") {
    auto c = count_minimal_zero_sum(9, 3);
    REQUIRE_FALSE(c.formula.has_value());
    REQUIRE(c.brute.has_value());
  }
  REQUIRE_THROWS_AS(count_minimal_zero_sum(5, 1), std::invalid_argument);
}

TEST_CASE("Savchev-Chen verification") {
  SECTION("n = 5: g^[3] has the decomposition (1,1,1)") {
    GroupTable G = build_group("cyclic:5");
    REQUIRE(detail::savchev_holds_for(G, Sequence::single(1, 3), 1));
  }
  SECTION("small n run clean") {
    for (int n : {3, 5, 8, 10}) {
      auto rep = savchev_chen_verify(n);
      INFO("n = " << n);
      REQUIRE(rep.all_ok());
      REQUIRE(rep.sequences_checked > 0);
      if (n == 10) REQUIRE(rep.long_atoms_checked > 0);
    }
  }
  SECTION("n = 3 handles near-vacuous ranges") {
    auto rep = savchev_chen_verify(3);
    REQUIRE(rep.threshold == 2);
    REQUIRE(rep.all_ok());
  }
  SECTION("cap is enforced") { REQUIRE_THROWS_AS(savchev_chen_verify(20), budget_error); }
  SECTION("representatives record their smallest working generator") {
    auto rep = savchev_chen_verify(7);
    REQUIRE(rep.representative_generators.size() == std::size_t(rep.orbit_representatives));
    GroupTable G = build_group("cyclic:7");
    for (const auto& [S, smallest, working] : rep.representative_generators) {
      REQUIRE(working >= 1);
      REQUIRE(detail::savchev_holds_for(G, S, smallest));
      for (int g = 1; g < smallest; ++g)
        REQUIRE_FALSE(detail::savchev_holds_for(G, S, g));
    }
  }
}

TEST_CASE("transfer homomorphism theta") {
  SECTION("singleton alphabet: e = ord(g), image collapses to the identity") {
    GroupTable G = build_group("cyclic:4");
    auto t = transfer_theta(G, {1}, {});
    REQUIRE(t.e_of.at(1) == 4);
    REQUIRE(t.characterizations_agree);
    REQUIRE(t.image_alphabet == std::vector<int>{0});
    Sequence B = Sequence::single(1, 8);
    REQUIRE(t.apply(B) == Sequence::single(0, 2));
  }
  SECTION("C_5 with {g, 2g, 3g}: all e = 1, theta is the identity") {
    GroupTable G = build_group("cyclic:5");
    auto t = transfer_theta(G, {1, 2, 3}, {});
    for (int g : {1, 2, 3}) REQUIRE(t.e_of.at(g) == 1);
    REQUIRE(t.image_alphabet == std::vector<int>({1, 2, 3}));
    Sequence B = parse_sequence("[g1^2, g3]");  // 1+1+3 = 0 mod 5
    REQUIRE(t.apply(B) == B);
  }
  SECTION("e(g) = 1 when the inverse is generated by the others") {
    GroupTable G = build_group("cyclic:6");
    auto t = transfer_theta(G, {1}, {5});
    REQUIRE(t.e_of.at(1) == 1);
  }
  SECTION("length sets are preserved") {
    GroupTable G = build_group("cyclic:6");
    auto t = transfer_theta(G, {2}, {1, 3});
    auto chk = transfer_preserves_lengths_check(t, 60, 7);
    REQUIRE(chk.samples_checked == 60);
    REQUIRE(chk.ok());

    GroupTable C4 = build_group("cyclic:4");
    auto t4 = transfer_theta(C4, {1}, {});
    auto chk4 = transfer_preserves_lengths_check(t4, 25, 11);
    REQUIRE(chk4.samples_checked == 25);
    REQUIRE(chk4.ok());
  }
  SECTION("invalid partitions are rejected") {
    GroupTable G = build_group("cyclic:6");
    REQUIRE_THROWS_AS(transfer_theta(G, {1, 2}, {2}), std::invalid_argument);
  }
}
