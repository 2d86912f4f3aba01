#include <doctest.h>

#include <stdexcept>

#include "ldg1d/mesh.hpp"

using namespace ldg1d;

TEST_CASE("uniform mesh nodes and widths") {
  const Mesh m = Mesh::uniform(0.0, 1.0, 4);
  CHECK(m.cells() == 4);
  const double expected[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int j = 0; j <= 4; ++j) CHECK(m.node(j) == doctest::Approx(expected[j]).epsilon(1e-15));
  CHECK(m.node(0) == 0.0);
  CHECK(m.node(4) == 1.0);

  const Mesh sym = Mesh::uniform(-1.0, 1.0, 2);
  CHECK(sym.width(1) == doctest::Approx(1.0));
  CHECK(sym.width(2) == doctest::Approx(1.0));
  CHECK(sym.h_max() == doctest::Approx(1.0));

  // Test 4 mesh: h = 2.8/4
  const Mesh t4 = Mesh::uniform(1.2, 4.0, 4);
  CHECK(t4.h_max() == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("uniform mesh invariants") {
  for (const int J : {1, 3, 7, 32}) {
    const Mesh m = Mesh::uniform(-2.5, 3.75, J);
    double sum = 0.0;
    for (int j = 1; j <= J; ++j) {
      CHECK(m.width(j) > 0.0);
      CHECK(m.width(j) == doctest::Approx((3.75 + 2.5) / J).epsilon(1e-14));
      sum += m.width(j);
    }
    CHECK(sum == doctest::Approx(6.25).epsilon(1e-12));
  }
}

TEST_CASE("uniform mesh rejects bad input") {
  CHECK_THROWS_AS(Mesh::uniform(0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Mesh::uniform(1.0, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(Mesh::uniform(2.0, 1.0, 4), std::invalid_argument);
}

TEST_CASE("locate with left tie-break") {
  const Mesh m = Mesh::uniform(0.0, 1.0, 4);
  CHECK(m.locate(0.3) == 2);
  CHECK(m.locate(0.25) == 1);
  CHECK(m.locate(1.0) == 4);
  CHECK(m.locate(0.0) == 1);
  CHECK_THROWS_AS(m.locate(-0.1), std::out_of_range);
  CHECK_THROWS_AS(m.locate(1.1), std::out_of_range);
}

TEST_CASE("locate is monotone in x") {
  const Mesh m = Mesh::uniform(-1.0, 2.0, 7);
  int prev = 1;
  for (int i = 0; i <= 300; ++i) {
    const double x = -1.0 + 3.0 * i / 300.0;
    const int j = m.locate(x);
    CHECK(j >= prev);
    prev = j;
  }
}

TEST_CASE("nonuniform mesh is supported by the data type") {
  const Mesh m({0.0, 0.1, 0.4, 1.0});
  CHECK(m.cells() == 3);
  CHECK(m.h_max() == doctest::Approx(0.6));
  CHECK(m.locate(0.05) == 1);
  CHECK(m.locate(0.4) == 2);
  CHECK_THROWS_AS(Mesh({0.0, 0.5, 0.5, 1.0}), std::invalid_argument);
}
