#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittpack/witt2.hpp"

using namespace wittpack;

TEST_CASE("carry coefficients are binom(p,i)/p mod p") {
  CHECK(Field::make(7, 1)->witt_carry_coeffs() ==
        std::vector<std::uint8_t>{1, 3, 5, 5, 3, 1});
  CHECK(Field::make(5, 1)->witt_carry_coeffs() == std::vector<std::uint8_t>{1, 2, 2, 1});
}

TEST_CASE("addition matches Z/49 through from_integer") {
  FieldRef f = Field::make(7, 1);
  W2 one = W2::one(*f);
  W2 acc = W2::zero(*f);
  for (int i = 0; i < 7; ++i) acc = acc + one;
  CHECK(acc == W2::from_integer(7, *f));
  CHECK(acc == W2::ver(f->one()));

  W2 a(f->from_residue(3), f->from_residue(5));
  CHECK(a + W2::zero(*f) == a);
  CHECK(a + (-a) == W2::zero(*f));
}

TEST_CASE("negation cancels exhaustively at q = 7 (S1(x, -x) = 0)") {
  FieldRef f = Field::make(7, 1);
  for (int i = 0; i < 49; ++i) {
    W2 w = W2::from_integer(i, *f);
    CHECK(w + (-w) == W2::zero(*f));
  }
}

TEST_CASE("multiplication rules") {
  FieldRef f = Field::make(7, 1);
  // Teichmuller multiplicativity
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      CHECK(W2::teich(f->from_residue(a)) * W2::teich(f->from_residue(b)) ==
            W2::teich(f->from_residue(a * b)));
  // p^2 = 0
  W2 p = W2::ver(f->one());
  CHECK(p * p == W2::zero(*f));
  // ver * ver = 0
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      CHECK(W2::ver(f->from_residue(a)) * W2::ver(f->from_residue(b)) == W2::zero(*f));
}

TEST_CASE("units and inversion") {
  FieldRef f = Field::make(7, 1);
  for (int a0 = 1; a0 < 7; ++a0)
    for (int a1 = 0; a1 < 7; ++a1) {
      W2 w(f->from_residue(a0), f->from_residue(a1));
      CHECK(w * w_inv(w) == W2::one(*f));
    }
  CHECK(w_inv(W2::teich(f->from_residue(3))) == W2::teich(f->from_residue(5)));
  CHECK_THROWS_AS(w_inv(W2::ver(f->one())), NonUnit);
}

TEST_CASE("squaring follows (x, g)^2 = (x^2, 2 x^p g)") {
  FieldRef f = Field::make(5, 2);
  for (std::uint32_t i = 0; i < 25; i += 3)
    for (std::uint32_t j = 0; j < 25; j += 2) {
      W2 w(f->element(i), f->element(j));
      W2 sq = w_pow(w, 2);
      CHECK(sq.a0() == w.a0() * w.a0());
      CHECK(sq.a1() == f->from_residue(2) * frobenius(w.a0()) * w.a1());
    }
}

TEST_CASE("structure maps") {
  FieldRef f = Field::make(7, 2);
  for (std::uint32_t i = 0; i < 49; i += 5) {
    FieldElement a = f->element(i);
    CHECK(W2::teich(a).reduce() == a);
    CHECK(w_frobenius(W2::teich(a)) == W2::teich(frobenius(a)));
  }
}

TEST_CASE("from_integer realizes Z/p^2") {
  FieldRef f = Field::make(7, 1);
  CHECK(W2::from_integer(0, *f) == W2::zero(*f));
  CHECK(W2::from_integer(7, *f) == W2::ver(f->one()));
  CHECK(W2::from_integer(48, *f) == -W2::from_integer(1, *f));
  CHECK(W2::from_integer(-1, *f) == -W2::one(*f));
  CHECK_THROWS_AS(W2::from_integer(3, *Field::make(7, 2)), ExtensionFieldNotSupported);

  // ring isomorphism on all pairs
  for (int i = 0; i < 49; ++i)
    for (int j = 0; j < 49; ++j) {
      CHECK(W2::from_integer(i, *f) + W2::from_integer(j, *f) == W2::from_integer(i + j, *f));
      CHECK(W2::from_integer(i, *f) * W2::from_integer(j, *f) == W2::from_integer(i * j, *f));
    }
}

TEST_CASE("reduce is a ring homomorphism with square-zero kernel") {
  FieldRef f = Field::make(7, 1);
  for (int i = 0; i < 49; ++i)
    for (int j = 0; j < 49; ++j) {
      W2 a = W2::from_integer(i, *f), b = W2::from_integer(j, *f);
      CHECK((a + b).reduce() == a.reduce() + b.reduce());
      CHECK((a * b).reduce() == a.reduce() * b.reduce());
    }
  for (int a1 = 0; a1 < 7; ++a1)
    for (int b1 = 0; b1 < 7; ++b1)
      CHECK(W2::ver(f->from_residue(a1)) * W2::ver(f->from_residue(b1)) == W2::zero(*f));
}

TEST_CASE("frobenius composed with ver is multiplication by p") {
  FieldRef f = Field::make(7, 1);
  for (int i = 0; i < 49; ++i) {
    W2 w = W2::from_integer(i, *f);
    CHECK(w_frobenius(W2::ver(w.reduce())) == W2::ver(f->one()) * w);
  }
}

TEST_CASE("sampled ring axioms at q = 49 and q = 25") {
  for (auto [p, k] : {std::pair{7, 2}, {5, 2}}) {
    FieldRef f = Field::make(p, k);
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->size() - 1);
    auto rand_w2 = [&] { return W2(f->element(pick(rng)), f->element(pick(rng))); };
    for (int n = 0; n < 10000; ++n) {
      W2 a = rand_w2(), b = rand_w2(), c = rand_w2();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("string encoding") {
  FieldRef f = Field::make(7, 1);
  CHECK(W2(f->from_residue(2), f->from_residue(3)).str() == "(2, 3)");
}
