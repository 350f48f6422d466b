#include <doctest.h>

#include "dualhfk/gf2_complex.hpp"

using namespace hfk;

namespace {

Gf2Complex chain3() {
  // x -> y -> z, a single odd two-step path
  Gf2Complex c;
  int x = c.add_generator("x", 0, {0, 0});
  int y = c.add_generator("y", 0, {0, 0});
  int z = c.add_generator("z", 0, {0, 0});
  c.toggle_arrow(x, y);
  c.toggle_arrow(y, z);
  return c;
}

}  // namespace

TEST_CASE("d_squared_check on arrow-free and chain complexes") {
  Gf2Complex empty;
  empty.add_generator("a", 0, {0, 0});
  CHECK(empty.d_squared_check().ok);

  auto c = chain3();
  auto rep = c.d_squared_check();
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0] == std::pair<std::string, std::string>{"x", "z"});
}

TEST_CASE("toggle_arrow cancels mod 2") {
  Gf2Complex c;
  int x = c.add_generator("x", 0, {0, 0});
  int y = c.add_generator("y", 0, {0, 0});
  c.toggle_arrow(x, y);
  CHECK(c.arrow_count() == 1);
  c.toggle_arrow(x, y);
  CHECK(c.arrow_count() == 0);
}

TEST_CASE("homology ranks of tiny complexes") {
  Gf2Complex one;
  one.add_generator("g", 7, {0, 0});
  CHECK(one.homology_ranks() == std::map<long long, int>{{7, 1}});

  Gf2Complex pair;
  int x = pair.add_generator("x", 0, {0, 0});
  int y = pair.add_generator("y", 0, {0, 0});
  pair.toggle_arrow(x, y);
  CHECK(pair.total_homology_rank() == 0);

  CHECK_THROWS_AS(chain3().homology_ranks(), std::logic_error);
}

TEST_CASE("homology splits by spin-c class") {
  Gf2Complex c;
  c.add_generator("a", 1, {0, 0});
  int x = c.add_generator("x", 2, {0, 0});
  int y = c.add_generator("y", 2, {0, 0});
  c.toggle_arrow(x, y);
  auto ranks = c.homology_ranks();
  CHECK(ranks == std::map<long long, int>{{1, 1}, {2, 0}});

  // the split rejects class-crossing arrows; the unsplit rank accepts them
  Gf2Complex mixed;
  int u = mixed.add_generator("u", 0, {0, 0});
  int v = mixed.add_generator("v", 1, {0, 0});
  mixed.toggle_arrow(u, v);
  CHECK_THROWS_AS(mixed.homology_ranks(), std::logic_error);
  CHECK(mixed.total_homology_rank() == 0);
}

TEST_CASE("filtered complexes reject Gi-increasing arrows") {
  Gf2Complex c;
  c.set_filtered(true);
  int lo = c.add_generator("lo", 0, {0, 0});
  int hi = c.add_generator("hi", 0, {1, 0});
  c.toggle_arrow(hi, lo);  // fine, non-increasing
  CHECK_THROWS_AS(c.toggle_arrow(lo, hi), std::logic_error);
}

TEST_CASE("mapping cone of identity and zero maps") {
  Gf2Complex a, b;
  a.add_generator("g", 0, {0, 0});
  b.add_generator("g", 0, {0, 0});

  auto cone_id = mapping_cone(a, b, {{0, 0}});
  CHECK(cone_id.total_homology_rank() == 0);

  auto cone_zero = mapping_cone(a, b, {});
  CHECK(cone_zero.total_homology_rank() == 2);
}

TEST_CASE("mapping cone rejects non-chain maps naming the first violator") {
  // A: x -> y,  B: single generator; send x to the generator and y to zero.
  Gf2Complex a, b;
  int x = a.add_generator("x", 0, {0, 0});
  int y = a.add_generator("y", 0, {0, 0});
  a.toggle_arrow(x, y);
  b.add_generator("w", 0, {0, 0});
  CHECK_THROWS_WITH_AS(mapping_cone(a, b, {{y, 0}}),
                       "mapping_cone: not a chain map at generator x", std::logic_error);
}

TEST_CASE("cone rank of the zero map adds the two homologies") {
  Gf2Complex a;
  int x = a.add_generator("x", 0, {0, 0});
  int y = a.add_generator("y", 0, {0, 0});
  a.add_generator("z", 0, {0, 0});
  a.toggle_arrow(x, y);
  Gf2Complex b;
  b.add_generator("u", 0, {0, 0});
  b.add_generator("v", 0, {0, 0});
  auto cone = mapping_cone(a, b, {});
  CHECK(cone.total_homology_rank() == a.total_homology_rank() + b.total_homology_rank());
}

TEST_CASE("induced map in homology measures the cone defect") {
  // f = identity: induced rank equals the full homology, cone is acyclic.
  Gf2Complex a;
  int x = a.add_generator("x", 0, {0, 0});
  int y = a.add_generator("y", 0, {0, 0});
  a.toggle_arrow(x, y);
  a.add_generator("z", 0, {0, 0});
  Gf2Complex b = a;
  std::vector<std::pair<int, int>> f{{0, 0}, {1, 1}, {2, 2}};
  CHECK(induced_homology_rank(a, b, f) == a.total_homology_rank());
  CHECK(mapping_cone(a, b, f).total_homology_rank() == 0);

  // sending the top of the pair onto the cycle is zero on homology
  std::vector<std::pair<int, int>> g{{0, 1}};
  CHECK(induced_homology_rank(a, b, g) == 0);
}

TEST_CASE("induced_subquotient keeps labels and projects arrows") {
  Gf2Complex c;
  int x = c.add_generator("x", 3, {1, 1});
  int y = c.add_generator("y", 3, {0, 0});
  c.toggle_arrow(x, y);

  auto all = c.induced_subquotient([](int) { return true; });
  CHECK(all.size() == 2);
  CHECK(all.arrow_count() == 1);
  CHECK(all.spinc_of(0) == 3);

  auto only_x = c.induced_subquotient([&](int g) { return g == x; });
  CHECK(only_x.size() == 1);
  CHECK(only_x.arrow_count() == 0);
}

TEST_CASE("induced_subquotient raises when the projection breaks d^2") {
  // Box complex a -> b, a -> c, b -> d, c -> d; dropping one middle
  // generator leaves an odd 2-step path.
  Gf2Complex c;
  int a = c.add_generator("a", 0, {1, 1});
  int b = c.add_generator("b", 0, {1, 0});
  int cc = c.add_generator("c", 0, {0, 1});
  int d = c.add_generator("d", 0, {0, 0});
  c.toggle_arrow(a, b);
  c.toggle_arrow(a, cc);
  c.toggle_arrow(b, d);
  c.toggle_arrow(cc, d);
  REQUIRE(c.d_squared_check().ok);

  CHECK_THROWS_AS(c.induced_subquotient([&](int g) { return g != cc; }), std::logic_error);
}

TEST_CASE("induced_subquotient is idempotent for nested keep-sets") {
  Gf2Complex c;
  int a = c.add_generator("a", 0, {2, 2});
  int b = c.add_generator("b", 0, {1, 1});
  int d = c.add_generator("d", 0, {0, 0});
  c.toggle_arrow(a, b);
  c.toggle_arrow(b, d);
  c.toggle_arrow(a, d);
  auto once = c.induced_subquotient([&](int g) { return c.gi_of(g).first <= 0; });
  auto mid = c.induced_subquotient([&](int g) { return c.gi_of(g).first <= 1; });
  auto twice = mid.induced_subquotient([&](int g) { return mid.gi_of(g).first <= 0; });
  CHECK(once.size() == twice.size());
  CHECK(once.arrow_count() == twice.arrow_count());
  CHECK(once.homology_ranks() == twice.homology_ranks());
}
