#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "tricrit/intmat.hpp"
#include "tricrit/rng.hpp"

using namespace tricrit;
using intmat::Int;
using intmat::IntMatrix;

namespace {

/// Independent determinant oracle: cofactor expansion along the first row.
Int cofactor_det(const IntMatrix& m) {
  const unsigned n = m.dim();
  if (n == 1) return m.at(0, 0);
  Int det = 0;
  for (unsigned c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix minor(n - 1);
    for (unsigned r = 1; r < n; ++r) {
      unsigned cc = 0;
      for (unsigned k = 0; k < n; ++k) {
        if (k == c) continue;
        minor.at(r - 1, cc++) = m.at(r, k);
      }
    }
    const Int term = m.at(0, c) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

IntMatrix random_matrix(Rng& rng, unsigned n) {
  IntMatrix m(n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c)
      m.at(r, c) = static_cast<int>(rng.below(7)) - 3;
  return m;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  Rng rng(2024);
  for (unsigned n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const IntMatrix m = random_matrix(rng, n);
      CAPTURE(n);
      CAPTURE(trial);
      CHECK(intmat::mat_det(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const IntMatrix a = random_matrix(rng, 4);
    const IntMatrix b = random_matrix(rng, 4);
    CHECK(intmat::mat_det(a * b) == intmat::mat_det(a) * intmat::mat_det(b));
  }
}

TEST_CASE("matrix algebra basics") {
  Rng rng(7);
  const IntMatrix a = random_matrix(rng, 3);
  const IntMatrix b = random_matrix(rng, 3);
  const IntMatrix c = random_matrix(rng, 3);
  const IntMatrix id = IntMatrix::identity(3);
  CHECK(a * id == a);
  CHECK(id * a == a);
  CHECK((a * b) * c == a * (b * c));
  CHECK_THROWS_AS(a * IntMatrix::identity(4), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix(0), std::invalid_argument);
  CHECK_THROWS_AS(id.at(3, 0), std::out_of_range);
}

TEST_CASE("monomial recognition") {
  IntMatrix perm(3);
  perm.at(0, 1) = 1;
  perm.at(1, 2) = -1;
  perm.at(2, 0) = 1;
  CHECK(intmat::is_monomial(perm));
  CHECK(intmat::is_monomial(IntMatrix::identity(4)));

  IntMatrix doubled = perm;
  doubled.at(0, 1) = 2;  // entry magnitude != 1
  CHECK_FALSE(intmat::is_monomial(doubled));

  IntMatrix crowded = perm;
  crowded.at(0, 0) = 1;  // two entries in row 0
  CHECK_FALSE(intmat::is_monomial(crowded));

  IntMatrix hollow(3);  // zero rows
  CHECK_FALSE(intmat::is_monomial(hollow));
}

TEST_CASE("determinant twist lands in SL") {
  IntMatrix flip = IntMatrix::identity(3);
  flip.at(0, 0) = -1;  // det -1
  const IntMatrix twisted = intmat::det_twist(flip);
  CHECK(intmat::mat_det(twisted) == 1);
  CHECK(twisted.at(0, 0) == 1);
  CHECK(twisted.at(1, 1) == -1);

  const IntMatrix unimodular = intmat::elementary(3, 1, 2, 5);
  CHECK(intmat::det_twist(unimodular) == unimodular);  // det already 1

  IntMatrix stretched = IntMatrix::identity(3);
  stretched.at(0, 0) = 2;
  CHECK_THROWS_AS(intmat::det_twist(stretched), std::invalid_argument);
}

TEST_CASE("elementary matrices") {
  const IntMatrix e = intmat::elementary(4, 2, 1, 5);
  CHECK(e.at(1, 0) == 5);  // 1-based (2,1) is 0-based (1,0)
  CHECK(e.at(0, 0) == 1);
  CHECK(e * intmat::elementary(4, 2, 1, -5) == IntMatrix::identity(4));
  CHECK_THROWS_AS(intmat::elementary(4, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(intmat::elementary(4, 5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(intmat::elementary(4, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("embedding into a larger dimension") {
  const IntMatrix small = intmat::elementary(3, 2, 1, 1);
  const IntMatrix big = intmat::embed(small, 5);
  CHECK(big.dim() == 5);
  CHECK(big.at(1, 0) == 1);
  CHECK(big.at(3, 3) == 1);
  CHECK(big.at(4, 4) == 1);
  CHECK(big.at(3, 4) == 0);
  CHECK(intmat::embed(small, 3) == small);
  CHECK_THROWS_AS(intmat::embed(small, 2), std::invalid_argument);
}

TEST_CASE("finite order inverse") {
  IntMatrix rot(3);  // 3-cycle permutation matrix, order 3
  rot.at(0, 1) = 1;
  rot.at(1, 2) = 1;
  rot.at(2, 0) = 1;
  CHECK(rot * intmat::finite_order_inverse(rot, 8) == IntMatrix::identity(3));
  CHECK(intmat::finite_order_inverse(IntMatrix::identity(3), 8) == IntMatrix::identity(3));
  CHECK_THROWS_AS(intmat::finite_order_inverse(intmat::elementary(3, 1, 2, 1), 8),
                  std::invalid_argument);
}
