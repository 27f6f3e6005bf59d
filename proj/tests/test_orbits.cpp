#include <doctest.h>

#include <set>

#include "ancas/orbits.hpp"

using namespace ancas;

TEST_CASE("orbit dimension closed form") {
  CHECK(orbit_dimension(LambdaWeight({1, 0, 1, 0, 0, 1, 0})) == 1680);
  for (int n = 1; n <= 8; ++n)
    CHECK(orbit_dimension(LambdaWeight::fundamental(Rank(n), 1)) == n + 1);
  CHECK(orbit_dimension(LambdaWeight::zero(Rank(4))) == 1);
  CHECK_THROWS_AS(orbit_dimension(LambdaWeight({-1, 0})), std::invalid_argument);
}

TEST_CASE("enumeration of small orbits") {
  auto elems = Orbit(LambdaWeight({1, 0})).elements();
  REQUIRE(elems.size() == 3);
  CHECK(elems[0] == MuTuple::from_coords({1, 0, 0}));
  CHECK(elems[1] == MuTuple::from_coords({0, 1, 0}));
  CHECK(elems[2] == MuTuple::from_coords({0, 0, 1}));

  CHECK(Orbit(LambdaWeight({1, 1})).elements().size() == 6);
  CHECK(Orbit(LambdaWeight({0, 1})).elements().size() == 3);
}

TEST_CASE("elements are distinct, ordered, and share a dominant representative") {
  LambdaWeight w({2, 0, 1, 0});
  auto elems = Orbit(w).elements();
  std::set<MuTuple> seen;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) CHECK(elems[i - 1] > elems[i]);  // lexicographically decreasing
    CHECK(dominant_representative(elems[i]) == w);
    seen.insert(elems[i]);
  }
  CHECK(seen.size() == elems.size());
  CHECK(Int(static_cast<long>(elems.size())) == orbit_dimension(w));
}

TEST_CASE("formula equals enumerated count, exhaustive small sweep") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> m(static_cast<size_t>(n), 0);
    for (;;) {
      LambdaWeight w(m);
      Int counted = 0;
      Orbit(w).for_each([&](std::span<const int>) { counted += 1; });
      CHECK(counted == orbit_dimension(w));
      int i = 0;
      while (i < n && m[static_cast<size_t>(i)] == 2) m[static_cast<size_t>(i++)] = 0;
      if (i == n) break;
      ++m[static_cast<size_t>(i)];
    }
  }
}

TEST_CASE("dominant representative") {
  CHECK(dominant_representative(MuTuple::from_coords({2, 3, 1, 2, 1, 0, 1, 0})) ==
        LambdaWeight({1, 0, 1, 0, 0, 1, 0}));
  CHECK(dominant_representative(MuTuple::from_coords({0, 1, 0})) ==
        LambdaWeight({1, 0}));
  // sorted tuples are fixed points
  MuTuple sorted = lambda_to_mu(LambdaWeight({2, 1, 0}));
  CHECK(sorted_descending(sorted) == sorted);
  CHECK(dominant_representative(sorted) == LambdaWeight({2, 1, 0}));
}
