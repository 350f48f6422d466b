#include <doctest.h>

#include "dualhfk/invariants.hpp"

using namespace hfk;

TEST_CASE("domain validation") {
  CHECK(TestDomain::singleton(0, 0).validate());
  CHECK(TestDomain::line_i(0).validate());
  CHECK(TestDomain::box(-2, 0, -3, 1).validate());
  CHECK(TestDomain::halfplane_i(1).validate());
  CHECK(TestDomain::halfplane_j(-2).validate());
  CHECK(TestDomain::max_union(0, 0).validate());
  // rectangle axiom fails without the inner point
  CHECK_FALSE(TestDomain::explicit_set({{0, 0}, {2, 2}}).validate());
  CHECK(TestDomain::explicit_set({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}).validate() ==
        false);  // still missing (2,1),(1,2)
  CHECK(TestDomain::explicit_set({{0, 0}, {1, 0}, {0, 1}, {1, 1}}).validate());
}

TEST_CASE("membership of the canonical kinds") {
  CHECK(TestDomain::max_union(0, 0).contains({5, -9}));
  CHECK(TestDomain::max_union(0, 0).contains({-9, 5}));
  CHECK_FALSE(TestDomain::max_union(0, 0).contains({-1, -1}));
  CHECK(TestDomain::line_i(0).contains({0, -100}));
  CHECK_FALSE(TestDomain::line_i(0).contains({1, 0}));
  CHECK(TestDomain::halfplane_i(2).contains({3, -50}));
}

TEST_CASE("unknot dual knot has the lens-space rank pattern") {
  auto U = builtin_knot("unknot");
  for (auto pq : std::vector<std::pair<int, int>>{{1, 1}, {3, 2}, {5, 3}, {2, 3}}) {
    auto [p, q] = pq;
    auto rep = hfk_hat_dual(U, p, q);
    CAPTURE(p);
    CAPTURE(q);
    CHECK(rep.total() == p);
    for (auto& [cls, r] : rep.ranks) CHECK(r == ((cls >= 0 && cls < p) ? 1 : 0));
    CHECK(rep.stable);
  }
}

TEST_CASE("trefoil 1/2 rank table") {
  // Frozen after three independent presentations of the cone agreed.
  auto rep = hfk_hat_dual(builtin_knot("trefoil-rh"), 1, 2);
  std::map<long long, int> nonzero;
  for (auto& [cls, r] : rep.ranks)
    if (r) nonzero[cls] = r;
  CHECK(nonzero == std::map<long long, int>{{-2, 1}, {-1, 2}, {0, 1}, {1, 2}, {2, 1}});
  CHECK(hfk_window(rep) == std::pair<long long, long long>{-2, 2});
  CHECK(predicted_window(1, 1, 2) == std::pair<long long, long long>{-2, 2});
}

TEST_CASE("second route through homology of the pieces agrees") {
  for (auto& name : builtin_names()) {
    auto K = builtin_knot(name);
    for (auto pq : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {3, 2}, {5, 3}}) {
      auto [p, q] = pq;
      auto rep = hfk_hat_dual(K, p, q);
      for (auto& [cls, r] : rep.ranks) {
        CAPTURE(name);
        CAPTURE(cls);
        CHECK(r == hfk_hat_dual_split_route(K, p, q, cls));
      }
    }
  }
}

TEST_CASE("figure8 5/3 window") {
  auto rep = hfk_hat_dual(builtin_knot("figure8"), 5, 3);
  CHECK(predicted_window(1, 5, 3) == std::pair<long long, long long>{-3, 7});
  CHECK(hfk_window(rep) == std::pair<long long, long long>{-3, 7});
  CHECK(rep.ranks.at(-3) == 1);
  CHECK(rep.ranks.at(7) == 1);
}

TEST_CASE("support bound and endpoint ranks for every builtin") {
  for (auto& name : builtin_names()) {
    auto K = builtin_knot(name);
    int g = K.genus();
    int top_rank = 0;
    for (int a : K.alexander) top_rank += a == g ? 1 : 0;
    for (auto pq : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {3, 2}, {5, 3}}) {
      auto [p, q] = pq;
      auto rep = hfk_hat_dual(K, p, q);
      CAPTURE(name);
      CAPTURE(p);
      CAPTURE(q);
      for (auto& [cls, r] : rep.ranks)
        if (cls < -(long long)q * g || cls >= (long long)q * g + p) CHECK(r == 0);
      CHECK(rep.ranks.at(-(long long)q * g) == top_rank);
      CHECK(rep.ranks.at((long long)q * g + p - 1) == top_rank);
    }
  }
}

TEST_CASE("ahat split examples") {
  auto U = builtin_knot("unknot");
  auto rep = ahat_split_check(U, 3, 2, 0);
  CHECK(rep.ok());
  CHECK(rep.count_a0 == 1);
  CHECK(rep.count_a1 == 1);
  CHECK(rep.count_bhat == 1);

  auto T = builtin_knot("trefoil-rh");
  auto rep2 = ahat_split_check(T, 1, 2, -2);
  CHECK(rep2.ok());
  CHECK(rep2.count_a0 == 1);  // symbols with A <= floor(-2/2) = -1
  CHECK(rep2.count_bhat == 3);
}

TEST_CASE("ahat split holds across builtins and surgery coefficients") {
  for (auto& name : builtin_names()) {
    auto K = builtin_knot(name);
    int g = K.genus();
    for (auto pq : std::vector<std::pair<int, int>>{{1, 2}, {5, 3}}) {
      auto [p, q] = pq;
      for (long long sb = -(long long)q * g - p - q; sb <= (long long)q * g + 2 * p + q; ++sb) {
        auto rep = ahat_split_check(K, p, q, sb);
        CAPTURE(name);
        CAPTURE(sb);
        CHECK(rep.ok());
      }
    }
  }
}

TEST_CASE("ambient ranks of small surgeries") {
  auto U = builtin_knot("unknot");
  for (int n = 1; n <= 5; ++n) {
    auto rep = hf_hat_ambient(U, n, 1);
    CHECK(rep.total() == n);
    for (auto& [cls, r] : rep.ranks) CHECK(r == 1);
  }
  CHECK(hf_hat_ambient(U, 1, 1).total() == 1);
  CHECK(hf_hat_ambient(builtin_knot("trefoil-rh"), 5, 1).total() == 5);
  // +1 surgery on the figure-8 knot gives a rank-3 hat homology
  CHECK(hf_hat_ambient(builtin_knot("figure8"), 1, 1).total() == 3);

  // a starved truncation is reported, not silently accepted
  CHECK_THROWS_AS(hf_hat_ambient(builtin_knot("figure8"), 1, 1, TruncationParams{0, 3}),
                  StabilizationError);
}

TEST_CASE("zeta cone rank profiles") {
  auto U = builtin_knot("unknot");
  auto prof = zeta_cone_plus(U, 1, 0, 6);
  CHECK(prof.rank_by_trunc == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  auto prof5 = zeta_cone_plus(U, 5, 0, 6);
  for (int N = 1; N <= 6; ++N)
    CHECK(prof5.rank_by_trunc[N] - prof5.rank_by_trunc[N - 1] == 1);

  // one tower with a bounded extra part
  auto T = builtin_knot("trefoil-rh");
  auto proft = zeta_cone_plus(T, 1, 0, 6);
  CHECK(proft.rank_by_trunc == std::vector<int>{3, 4, 5, 6, 7, 8, 9});

  CHECK_THROWS_AS(zeta_cone_plus(U, 1, 3, 4), PreconditionError);
}

TEST_CASE("s3 pattern check") {
  auto rep = s3_pattern_check(builtin_knot("trefoil-rh"), {1, 2, 3});
  REQUIRE(rep.windows.size() == 3);
  CHECK(rep.windows[0] == std::pair<long long, long long>{-1, 1});
  CHECK(rep.windows[1] == std::pair<long long, long long>{-2, 2});
  CHECK(rep.windows[2] == std::pair<long long, long long>{-3, 3});
  CHECK_FALSE(rep.consistent_with_s3);

  auto repu = s3_pattern_check(builtin_knot("unknot"), {1, 2, 3});
  for (auto& w : repu.windows) CHECK(w == std::pair<long long, long long>{0, 0});
  CHECK(repu.consistent_with_s3);

  auto repf = s3_pattern_check(builtin_knot("figure8"), {2});
  CHECK(repf.windows[0] == std::pair<long long, long long>{-2, 2});
  CHECK_FALSE(repf.consistent_with_s3);
}

TEST_CASE("large-surgery crosscheck") {
  CHECK(crosscheck_large_n(builtin_knot("trefoil-rh"), 7) == std::nullopt);
  CHECK_THROWS_AS(crosscheck_large_n(builtin_knot("trefoil-rh"), 1), PreconditionError);
}
