#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "zerosum/group.hpp"

using namespace zerosum;

TEST_CASE("cyclic groups") {
  GroupTable G = build_group("cyclic:5");
  REQUIRE(G.order == 5);
  REQUIRE(G.is_abelian());
  REQUIRE(G.exponent() == 5);
  REQUIRE(G.elt_order[0] == 1);
  for (int g = 1; g < 5; ++g) REQUIRE(G.elt_order[g] == 5);
}

TEST_CASE("dihedral:3 orders") {
  GroupTable G = build_group("dihedral:3");
  REQUIRE(G.order == 6);
  REQUIRE_FALSE(G.is_abelian());
  REQUIRE(G.exponent() == 6);
  int max_order = 0;
  for (int g = 0; g < G.order; ++g) max_order = std::max(max_order, G.elt_order[g]);
  REQUIRE(max_order == 3);  // rotations have order 3, reflections order 2
}

namespace {
// quaternion units indexed [1, i, j, k, -1, -i, -j, -k]
GroupTable hardcoded_quaternions() {
  auto mulq = [](int a, int b) {
    int sa = a / 4, sb = b / 4, xa = a % 4, xb = b % 4;
    // axis table for e,i,j,k with result sign
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int s = (sa + sb + sign[xa][xb]) % 2;
    return s * 4 + axis[xa][xb];
  };
  GroupTable G;
  G.order = 8;
  G.mul.resize(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) G.mul[a * 8 + b] = std::uint16_t(mulq(a, b));
  detail::finish_table(G);
  return G;
}
}  // namespace

TEST_CASE("dicyclic:2 is the quaternion group") {
  GroupTable G = build_group("dicyclic:2");
  REQUIRE(G.order == 8);
  int order4 = 0;
  for (int g = 0; g < 8; ++g)
    if (G.elt_order[g] == 4) ++order4;
  REQUIRE(order4 == 6);  // all but +-identity have order 4
  GroupTable Q = hardcoded_quaternions();
  REQUIRE(find_isomorphism(G, Q).has_value());
}

TEST_CASE("build_group errors") {
  REQUIRE_THROWS_AS(build_group("nonsense"), std::invalid_argument);
  REQUIRE_THROWS_AS(build_group("warp:3"), std::invalid_argument);
  // r^n != 1 mod m: 2^2 = 4 != 1 mod 5
  REQUIRE_THROWS_AS(build_group("semidirect:5,2,2"), std::invalid_argument);
  REQUIRE_THROWS_AS(build_group("cyclic:1000"), std::invalid_argument);  // order cap
  REQUIRE_THROWS_AS(build_group("symmetric:7"), std::invalid_argument);
}

TEST_CASE("semidirect builds S_3 for m=3,n=2,r=2") {
  GroupTable G = build_group("semidirect:3,2,2");
  GroupTable S3 = build_group("symmetric:3");
  REQUIRE(G.order == 6);
  REQUIRE(find_isomorphism(G, S3).has_value());
}

TEST_CASE("product spec") {
  GroupTable G = build_group("product:cyclic:2+cyclic:3");
  GroupTable C6 = build_group("cyclic:6");
  REQUIRE(G.order == 6);
  REQUIRE(G.is_abelian());
  REQUIRE(find_isomorphism(G, C6).has_value());
}

TEST_CASE("heisenberg:3 has order 27 and exponent 3") {
  GroupTable G = build_group("heisenberg:3");
  REQUIRE(G.order == 27);
  REQUIRE_FALSE(G.is_abelian());
  REQUIRE(G.exponent() == 3);
}

TEST_CASE("table spec round trips through JSON") {
  GroupTable C4 = build_group("cyclic:4");
  nlohmann::json j;
  j["order"] = 4;
  auto rows = nlohmann::json::array();
  for (int a = 0; a < 4; ++a) {
    auto row = nlohmann::json::array();
    for (int b = 0; b < 4; ++b) row.push_back(C4.op(a, b));
    rows.push_back(row);
  }
  j["mul"] = rows;
  std::string path = "test_group_table.json";
  {
    std::ofstream out(path);
    out << j;
  }
  GroupTable G = build_group("table:" + path);
  REQUIRE(G.order == 4);
  REQUIRE(find_isomorphism(G, C4).has_value());
  std::remove(path.c_str());
}

TEST_CASE("commutator subgroups") {
  SECTION("abelian groups have trivial commutator subgroup") {
    for (auto spec : {"cyclic:6", "abelian:2,4", "abelian:2,2,2"}) {
      GroupTable G = build_group(spec);
      REQUIRE(commutator_subgroup(G).order() == 1);
    }
  }
  SECTION("S_3") {
    GroupTable G = build_group("symmetric:3");
    Subgroup Gp = commutator_subgroup(G);
    REQUIRE(Gp.order() == 3);
    REQUIRE(Gp.is_normal);
    for (int g : Gp.members) REQUIRE((G.elt_order[g] == 1 || G.elt_order[g] == 3));
  }
  SECTION("quaternion group") {
    GroupTable G = build_group("dicyclic:2");
    Subgroup Gp = commutator_subgroup(G);
    REQUIRE(Gp.order() == 2);
  }
  SECTION("index relation |G'| * |G/G'| = |G|") {
    for (auto spec : {"symmetric:4", "dihedral:5", "alternating:4", "heisenberg:3"}) {
      GroupTable G = build_group(spec);
      Subgroup Gp = commutator_subgroup(G);
      Abelianization ab = abelianization(G);
      REQUIRE(Gp.order() * ab.table.order == G.order);
    }
  }
}

TEST_CASE("abelianization") {
  SECTION("C_6 maps to C_6 bijectively") {
    GroupTable G = build_group("cyclic:6");
    Abelianization ab = abelianization(G);
    REQUIRE(ab.table.order == 6);
    REQUIRE(ab.invariant_factors == std::vector<int>{6});
    std::vector<char> seen(6, 0);
    for (int g = 0; g < 6; ++g) seen[ab.proj[g]] = 1;
    for (char c : seen) REQUIRE(c == 1);
    REQUIRE(find_isomorphism(G, ab.table).has_value());
  }
  SECTION("S_3 -> C_2") {
    Abelianization ab = abelianization(build_group("symmetric:3"));
    REQUIRE(ab.invariant_factors == std::vector<int>{2});
  }
  SECTION("D_8 -> C_2 + C_2") {
    Abelianization ab = abelianization(build_group("dihedral:4"));
    REQUIRE(ab.invariant_factors == std::vector<int>({2, 2}));
  }
  SECTION("projection is a homomorphism") {
    for (auto spec : {"dihedral:6", "abelian:2,6", "product:cyclic:3+cyclic:4", "abelian:2,2,4"}) {
      GroupTable G = build_group(spec);
      Abelianization ab = abelianization(G);
      for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
          REQUIRE(ab.proj[G.op(a, b)] == ab.table.op(ab.proj[a], ab.proj[b]));
    }
  }
}

TEST_CASE("exponent_and_e") {
  GroupTable C12 = build_group("cyclic:12");
  std::vector<int> all12(12);
  for (int i = 0; i < 12; ++i) all12[i] = i;
  REQUIRE(exponent_and_e(C12, all12) == std::make_pair(12, 12));

  GroupTable S3 = build_group("symmetric:3");
  std::vector<int> all6(6);
  for (int i = 0; i < 6; ++i) all6[i] = i;
  REQUIRE(exponent_and_e(S3, all6) == std::make_pair(6, 3));

  GroupTable H8 = build_group("dicyclic:2");
  REQUIRE(exponent_and_e(H8, {1, 4}) == std::make_pair(4, 4));  // a and b have order 4

  REQUIRE_THROWS_AS(exponent_and_e(S3, {}), std::invalid_argument);
}

TEST_CASE("character groups") {
  SECTION("trivial group has one character") {
    CharacterGroup C = character_group(build_group("cyclic:1"));
    REQUIRE(C.characters.size() == 1);
  }
  SECTION("C_2 + C_2 has 4 characters of order dividing 2") {
    GroupTable G = build_group("abelian:2,2");
    CharacterGroup C = character_group(G);
    REQUIRE(C.characters.size() == 4);
    for (const auto& chi : C.characters)
      for (int g = 0; g < G.order; ++g) {
        int k = C.pairing_exponent(chi, g);
        REQUIRE((2 * k) % C.exponent == 0);  // chi(g)^2 = 1
      }
  }
  SECTION("C_6 characters form invariant factor (6)") {
    CharacterGroup C = character_group(build_group("cyclic:6"));
    REQUIRE(C.structure.invariant_factors == std::vector<int>{6});
    REQUIRE(C.characters.size() == 6);
  }
  SECTION("pairing is bimultiplicative") {
    GroupTable G = build_group("abelian:2,6");
    CharacterGroup C = character_group(G);
    REQUIRE(int(C.characters.size()) == G.order);
    const auto& chi = C.characters[3];
    for (int a = 0; a < G.order; ++a)
      for (int b = 0; b < G.order; ++b) {
        int lhs = C.pairing_exponent(chi, G.op(a, b));
        int rhs = (C.pairing_exponent(chi, a) + C.pairing_exponent(chi, b)) % C.exponent;
        REQUIRE(lhs == rhs);
      }
  }
  SECTION("non-abelian input is rejected") {
    REQUIRE_THROWS_AS(character_group(build_group("symmetric:3")), std::invalid_argument);
  }
}

TEST_CASE("invariant factors are normalized") {
  GroupTable G = build_group("product:cyclic:4+cyclic:2");
  AbelianStructure A = abelian_structure(G);
  REQUIRE(A.invariant_factors == std::vector<int>({2, 4}));
  GroupTable H = build_group("product:cyclic:3+cyclic:2");
  REQUIRE(abelian_structure(H).invariant_factors == std::vector<int>{6});
}

TEST_CASE("automorphisms") {
  REQUIRE(automorphisms(build_group("cyclic:1")).size() == 1);
  REQUIRE(automorphisms(build_group("cyclic:5")).size() == 4);
  REQUIRE(automorphisms(build_group("abelian:2,2")).size() == 6);  // GL(2,2)
  REQUIRE(automorphisms(build_group("symmetric:3")).size() == 6);
  // above the cap: pruning disabled, empty list
  REQUIRE(automorphisms(build_group("dihedral:20"), 24).empty());
}

TEST_CASE("subgroup machinery") {
  GroupTable G = build_group("symmetric:3");
  auto subs = all_subgroups(G);
  REQUIRE(subs.size() == 6);  // 1, three C_2, C_3, S_3
  int normal = 0;
  for (const auto& H : subs)
    if (H.is_normal) ++normal;
  REQUIRE(normal == 3);  // 1, A_3, S_3
  for (const auto& H : subs) {
    REQUIRE(G.order % H.order() == 0);
    SubgroupTable T = subgroup_as_table(G, H);
    REQUIRE(T.table.order == H.order());
  }
}
