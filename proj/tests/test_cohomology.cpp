/* test_cohomology.cpp
 *
 * Betti data of the two spatial slices, duality of the relative Betti
 * numbers, the dimension count dim K^k, the two-sided bounds on
 * dim H^k, and the resolved exact values.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sdsform/cohomology.hpp"

using namespace sdsform;

namespace {
std::vector<int> k_row(const BettiData& b) {
  std::vector<int> out;
  for (int k = 0; k <= b.n; ++k) out.push_back(dim_K(k, b));
  return out;
}
std::vector<int> h_row_sds(int n) {
  std::vector<int> out;
  for (int k = 0; k <= n; ++k) out.push_back(exact_h_sds(n, k));
  return out;
}
}  // namespace

TEST_CASE("black-hole slice dimension counts") {
  CHECK(k_row(betti_sds(4)) == std::vector<int>{1, 2, 2, 2, 1});
  CHECK(k_row(betti_sds(5)) == std::vector<int>{1, 2, 1, 1, 2, 1});
  CHECK(k_row(betti_sds(6)) == std::vector<int>{1, 2, 1, 0, 1, 2, 1});

  CHECK(h_row_sds(4) == std::vector<int>{1, 0, 2, 0, 1});
  CHECK(h_row_sds(5) == std::vector<int>{1, 0, 1, 1, 0, 1});
  CHECK(h_row_sds(6) == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("global static slice dimension counts") {
  CHECK(k_row(betti_ds(4)) == std::vector<int>{1, 1, 0, 1, 1});
  for (int n = 4; n <= 8; ++n) {
    std::vector<int> k = k_row(betti_ds(n));
    std::vector<int> want(n + 1, 0);
    want[0] = want[1] = want[n - 1] = want[n] = 1;
    CHECK(k == want);
    for (int j = 0; j <= n; ++j) {
      int h = exact_h_ds(n, j);
      CHECK(h == ((j == 0 || j == n) ? 1 : 0));
    }
  }
}

TEST_CASE("Betti validation and duality") {
  for (int n = 4; n <= 8; ++n) {
    BettiData bs = betti_sds(n);
    BettiData bd = betti_ds(n);
    CHECK_NOTHROW(bs.validate());
    CHECK_NOTHROW(bd.validate());
    for (int k = 0; k < n; ++k) {
      CHECK(bs.b_relative[k] == bs.b_absolute[(n - 1) - k]);
      CHECK(bd.b_relative[k] == bd.b_absolute[(n - 1) - k]);
    }
    /* Poincare-Lefschetz symmetry of the count itself */
    for (int k = 0; k <= n; ++k)
      CHECK(dim_K(k, bs) == dim_K(n - k, bs));
  }

  BettiData bad = betti_sds(4);
  bad.b_relative[1] += 1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  BettiData neg = betti_sds(4);
  neg.b_absolute[0] = -1;
  CHECK_THROWS_AS(neg.validate(), ConfigError);
}

TEST_CASE("from_absolute fills duality") {
  BettiData b = BettiData::from_absolute(4, {1, 0, 1, 0}, {2, 0, 2, 0});
  CHECK(b.b_relative == std::vector<int>{0, 1, 0, 1});
  CHECK_NOTHROW(b.validate());
}

TEST_CASE("bounds bracket the exact values") {
  for (int n = 4; n <= 8; ++n) {
    BettiData b = betti_sds(n);
    int sum_h = 0;
    for (int k = 0; k <= n; ++k) {
      HBounds hb = dim_H_bounds(k, b);
      int h = exact_h_sds(n, k);
      CHECK(hb.lower <= h);
      CHECK(h <= hb.upper);
      CHECK(hb.upper == dim_K(k, b));
      CHECK(hb.exact == (hb.lower == hb.upper));
      sum_h += h;
    }
    /* the degree-0 and top counts are always exactly resolved */
    CHECK(dim_H_bounds(0, b).exact);
    CHECK(sum_h >= 2);
  }
}

TEST_CASE("degree range errors") {
  BettiData b = betti_sds(4);
  CHECK_THROWS_AS(dim_K(-1, b), ConfigError);
  CHECK_THROWS_AS(dim_K(5, b), ConfigError);
  CHECK(dim_K(4, b) == 1); /* top degree uses only relative+boundary data */
  CHECK_THROWS_AS(exact_h_sds(4, 5), ConfigError);
  CHECK_THROWS_AS(exact_h_sds(3, 1), ConfigError);
  CHECK_THROWS_AS(betti_sds(3), ConfigError);
}
