#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "tricrit/freegroup.hpp"

using namespace tricrit;
using freegroup::Basis;
using freegroup::FreeAut;
using freegroup::NamedGenerator;
using freegroup::Word;

namespace {
Word W(const Basis& b, std::vector<std::int32_t> letters) {
  return freegroup::word_reduce(letters, b);
}
}  // namespace

TEST_CASE("words reduce, multiply and invert") {
  Basis b(3);
  CHECK(W(b, {1, -1}).is_identity());
  CHECK(W(b, {1, 2, -2, -1}).is_identity());
  CHECK(W(b, {1, 2, -2, 3}) == W(b, {1, 3}));
  CHECK(word_mul(W(b, {1, 2}), W(b, {-2, 3})) == W(b, {1, 3}));
  CHECK(word_inv(W(b, {1, 2})) == W(b, {-2, -1}));
  CHECK(word_mul(W(b, {1, 2}), word_inv(W(b, {1, 2}))).is_identity());
  CHECK(W(b, {1, -2}).str() == "a1 a2^-1");
  CHECK(Word::identity(b).str() == "1");

  CHECK_THROWS_AS(W(b, {0}), std::invalid_argument);
  CHECK_THROWS_AS(W(b, {4}), std::invalid_argument);
  CHECK_THROWS_AS(W(b, {-4}), std::invalid_argument);
  Basis b2(2);
  CHECK_THROWS_AS(word_mul(W(b, {1}), W(b2, {1})), std::invalid_argument);
}

TEST_CASE("named generators realize the documented images") {
  Basis b(3);
  const FreeAut theta = aut_from_generator(NamedGenerator::theta(), b);
  CHECK(theta.image(1) == W(b, {1, 2}));
  CHECK(theta.image(2) == W(b, {-2}));
  CHECK(theta.image(3) == W(b, {3}));

  const FreeAut tau = aut_from_generator(NamedGenerator::tau(), b);
  CHECK(tau.image(1) == W(b, {-1}));
  CHECK(tau.image(2) == W(b, {3}));
  CHECK(tau.image(3) == W(b, {2}));

  const FreeAut eta = aut_from_generator(NamedGenerator::eta(), b);
  CHECK(eta.image(1) == W(b, {-2}));
  CHECK(eta.image(2) == W(b, {-1}));
  CHECK(eta.image(3) == W(b, {3}));

  // alpha = eps_n . (a_n a_{n-1}): a2 -> a3 -> a3^-1, a3 -> a2.
  const FreeAut alpha = aut_from_generator(NamedGenerator::alpha(), b);
  CHECK(alpha.image(1) == W(b, {1}));
  CHECK(alpha.image(2) == W(b, {-3}));
  CHECK(alpha.image(3) == W(b, {2}));
}

TEST_CASE("generator orders, including alpha of order 4") {
  for (unsigned n = 3; n <= 6; ++n) {
    CAPTURE(n);
    Basis b(n);
    const FreeAut theta = aut_from_generator(NamedGenerator::theta(), b);
    const FreeAut tau = aut_from_generator(NamedGenerator::tau(), b);
    const FreeAut eta = aut_from_generator(NamedGenerator::eta(), b);
    const FreeAut alpha = aut_from_generator(NamedGenerator::alpha(), b);
    CHECK(aut_order(theta, 8) == std::optional<unsigned>(2));
    CHECK(aut_order(tau, 8) == std::optional<unsigned>(2));
    CHECK(aut_order(eta, 8) == std::optional<unsigned>(2));
    CHECK(aut_order(alpha, 8) == std::optional<unsigned>(4));
    CHECK(aut_order(theta * eta, 8) == std::optional<unsigned>(3));
    CHECK(aut_order(theta * tau, 8) == std::optional<unsigned>(4));
  }
}

TEST_CASE("composition is right-to-left: (f*g)(x) = f(g(x))") {
  Basis b(3);
  const FreeAut rho12 = aut_from_generator(NamedGenerator::rho(1, 2), b);
  const FreeAut eps2 = aut_from_generator(NamedGenerator::eps(2), b);
  const FreeAut theta = aut_from_generator(NamedGenerator::theta(), b);
  CHECK(rho12 * eps2 == theta);
  CHECK_FALSE(eps2 * rho12 == theta);

  const Word w = W(b, {1, 2, -3});
  CHECK((rho12 * eps2).apply(w) == rho12.apply(eps2.apply(w)));
}

TEST_CASE("image growth is bounded and reported") {
  Basis b(3);
  const FreeAut rho12 = aut_from_generator(NamedGenerator::rho(1, 2), b);

  // rho12 has infinite order; within any cap the answer is "unbounded".
  CHECK(aut_order(rho12, 100) == std::nullopt);

  // Tiny explicit budget: the image a1 a2 a2 no longer fits in 2 letters.
  FreeAut sq = aut_compose(rho12, rho12);
  CHECK(sq.image(1) == W(b, {1, 2, 2}));
  CHECK_THROWS_AS(aut_compose(sq, sq, 4), ImageOverflowError);
  CHECK_THROWS_AS(sq.apply(W(b, {1, 1, 1}), 5), ImageOverflowError);

  // Repeated default-budget composition eventually overflows rather than
  // silently truncating.
  auto grow = [&] {
    FreeAut f = rho12;
    for (int i = 0; i < 200; ++i) f = f * rho12;
    return f;
  };
  CHECK_THROWS_AS(grow(), ImageOverflowError);
}

TEST_CASE("named generator inverses multiply to the identity") {
  Basis b(4);
  const FreeAut id = FreeAut::identity(b);
  const std::vector<NamedGenerator> gens = {
      NamedGenerator::rho(2, 3),          NamedGenerator::eps(2),
      NamedGenerator::transposition(1, 3, 4), NamedGenerator::theta(),
      NamedGenerator::tau(),              NamedGenerator::eta(),
      NamedGenerator::alpha(),
  };
  for (const NamedGenerator& g : gens) {
    CAPTURE(g.str());
    const FreeAut f = aut_from_generator(g, b);
    const FreeAut f_inv = aut_generator_inverse(g, b);
    CHECK(f * f_inv == id);
    CHECK(f_inv * f == id);
  }
}

TEST_CASE("abelianization is multiplicative with the column convention") {
  Basis b(3);
  const FreeAut rho12 = aut_from_generator(NamedGenerator::rho(1, 2), b);
  const FreeAut theta = aut_from_generator(NamedGenerator::theta(), b);
  const FreeAut tau = aut_from_generator(NamedGenerator::tau(), b);

  CHECK(freegroup::abelianize(FreeAut::identity(b)) == intmat::IntMatrix::identity(3));
  // Column j = exponent sums of the image of a_j, so rho12: a1 -> a1 a2 puts
  // the off-diagonal 1 in row 2, column 1.
  CHECK(freegroup::abelianize(rho12) == intmat::elementary(3, 2, 1, 1));
  CHECK(freegroup::abelianize(theta * tau) ==
        freegroup::abelianize(theta) * freegroup::abelianize(tau));
  CHECK(intmat::is_monomial(freegroup::abelianize(tau)));
}

TEST_CASE("generator realization validates ranks and tables") {
  CHECK_THROWS_AS(aut_from_generator(NamedGenerator::theta(), Basis(2)), std::invalid_argument);
  CHECK_THROWS_AS(aut_from_generator(NamedGenerator::tau(), Basis(2)), std::invalid_argument);
  CHECK_THROWS_AS(aut_from_generator(NamedGenerator::rho(1, 5), Basis(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(aut_from_generator(NamedGenerator::eps(4), Basis(3)), std::invalid_argument);
  CHECK_THROWS_AS(aut_from_generator(NamedGenerator::permutation({1, 1, 2}), Basis(3)),
                  std::invalid_argument);
  CHECK_NOTHROW(aut_from_generator(NamedGenerator::alpha(), Basis(2)));
}
