#include <algorithm>
#include <vector>

#include <doctest.h>

#include "fnc/matroid.hpp"
#include "fnc/polymatroid.hpp"

using fnc::intvec;
using fnc::matroid;
using fnc::subset;

TEST_CASE("uniform matroid U(2,3)") {
  matroid m = fnc::uniform_matroid(2, 3);
  CHECK(m.r == 3);
  CHECK(m.independent.size() == 7);  // all subsets except the full set
  CHECK(fnc::validate_matroid(m).empty());
  CHECK(fnc::matroid_rank(m, 0) == 0);
  CHECK(fnc::matroid_rank(m, 0b001) == 1);
  CHECK(fnc::matroid_rank(m, 0b011) == 2);
  CHECK(fnc::matroid_rank(m, 0b111) == 2);  // capped at 2
}

TEST_CASE("free matroid has every subset independent") {
  matroid m = fnc::uniform_matroid(3, 3);
  CHECK(m.independent.size() == 8);
  CHECK(fnc::validate_matroid(m).empty());
  for (subset a = 0; a < 8; ++a)
    CHECK(fnc::matroid_rank(m, a) == __builtin_popcountll(a));
}

TEST_CASE("axiom violations are detected with the right label") {
  // empty set missing
  matroid no_empty{2, {0b01, 0b10}};
  auto v1 = fnc::validate_matroid(no_empty);
  REQUIRE_FALSE(v1.empty());
  CHECK(v1.front().axiom == 1);

  // {1,2} independent but {2} missing: downward closure fails
  matroid not_closed{2, {0, 0b01, 0b11}};
  auto v2 = fnc::validate_matroid(not_closed);
  REQUIRE_FALSE(v2.empty());
  CHECK(std::any_of(v2.begin(), v2.end(),
                    [](const auto& v) { return v.axiom == 2; }));

  // {1} and {2,3} independent, but {1} extends by neither 2 nor 3:
  // augmentation fails
  matroid no_aug{3, {0, 0b001, 0b010, 0b100, 0b110}};
  auto v3 = fnc::validate_matroid(no_aug);
  REQUIRE_FALSE(v3.empty());
  CHECK(std::any_of(v3.begin(), v3.end(),
                    [](const auto& v) { return v.axiom == 3; }));
  CHECK_FALSE(v3.front().to_string().empty());
}

TEST_CASE("matroids convert to polymatroids with matching rank") {
  for (auto [k, r] : {std::pair{2, 3}, {3, 3}, {1, 4}, {2, 4}}) {
    matroid m = fnc::uniform_matroid(k, r);
    auto d = fnc::to_polymatroid(m);
    REQUIRE(d.r == r);
    CHECK(fnc::validate_axioms(d).empty());
    for (subset a = 0; a < (subset(1) << r); ++a)
      CHECK(d.rho[a] == std::min<int64_t>(k, __builtin_popcountll(a)));
  }
}

TEST_CASE("polymatroid members of a matroid are set indicators") {
  matroid m = fnc::uniform_matroid(2, 3);
  auto d = fnc::to_polymatroid(m);
  auto ms = fnc::members(d);
  REQUIRE(ms.size() == m.independent.size());
  for (const auto& u : ms) {
    for (int c : u) CHECK(c <= 1);  // indicator vectors only
    CHECK(std::binary_search(m.independent.begin(), m.independent.end(),
                             fnc::support(u)));
  }
  auto bs = fnc::bases(d);
  CHECK(bs == std::vector<intvec>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(fnc::rho_max(d) == 1);
}
