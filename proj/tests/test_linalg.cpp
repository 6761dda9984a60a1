#include <doctest.h>

#include "lcklab/error.hpp"
#include "lcklab/linalg.hpp"
#include "support.hpp"

using namespace lcklab;
using namespace lcklab::testing;

TEST_CASE("rationals stay canonical") {
  const Rational a = frac(6, 4) + frac(1, 6);
  CHECK(a.get_num() == 5);
  CHECK(a.get_den() == 3);
  CHECK(to_string(frac(-4, 2)) == "-2");
  CHECK(*parse_rational("-10/4") == Rational(-5, 2));
  CHECK(*parse_rational("7") == 7);
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("1/-2"));
  CHECK_FALSE(parse_rational("0.5"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("--1"));
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(4, 4)) == 0);
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
  CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
  const Subspace k = kernel_basis(Matrix{{1, 1, 0}});
  CHECK(k.dim() == 2);
  CHECK(k.contains(Vector{1, -1, 0}));
  CHECK_FALSE(k.contains(Vector{1, 0, 0}));
}

TEST_CASE("solve uses the echelon particular solution") {
  const Vector b{3, -1, Rational(1, 2)};
  CHECK(*solve(Matrix::identity(3), b) == b);
  CHECK(*solve(Matrix{{1, 1}}, Vector{2}) == Vector{2, 0});
  CHECK_FALSE(solve(Matrix{{0}}, Vector{1}));
}

TEST_CASE("is_positive_definite") {
  CHECK(is_positive_definite(Matrix::identity(5)));
  CHECK_FALSE(is_positive_definite(Matrix{{1, 0}, {0, -1}}));
  CHECK(is_positive_definite(Matrix{{2, 1}, {1, 2}}));
  CHECK(thrown_code([] { is_positive_definite(Matrix{{1, 2}, {0, 1}}); }) == ErrorCode::NonSymmetric);
}

TEST_CASE("subspaces compare structurally") {
  const Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(3, {{1, 2, 1}, {2, 1, -1}});
  CHECK(a == b);
  CHECK(a.contains(Subspace::span(3, {{1, 0, -1}})));
  CHECK((a + Subspace::span(3, {{0, 0, 1}})) == Subspace::full(3));
}

TEST_CASE("polynomial helpers") {
  // (t-1)^2 (t+2)
  const Polynomial p{2, -3, 0, 1};
  CHECK(poly_gcd(p, derivative(p)) == Polynomial{-1, 1});
  CHECK(characteristic_polynomial(Matrix{{0, 1}, {-1, 0}}) == Polynomial{1, 0, 1});
  CHECK(minimal_polynomial_degree(Matrix{{2, 0}, {0, 2}}) == 1);
  CHECK(minimal_polynomial_degree(Matrix{{2, 1}, {0, 2}}) == 2);
  CHECK(determinant(Matrix{{1, 2}, {3, 4}}) == -2);
  CHECK(*inverse(Matrix{{2, 0}, {0, 4}}) == Matrix{{Rational(1, 2), 0}, {0, Rational(1, 4)}});
}

TEST_CASE("property: rank + nullity = cols and solve is exact") {
  Rng rng(101);
  for (int t = 0; t < 150; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t r = dim(rng), c = dim(rng);
    Matrix m(r, c);
    std::bernoulli_distribution zero(0.4);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = zero(rng) ? Rational(0) : small_rational(rng);
    const Subspace k = kernel_basis(m);
    CHECK(rank(m) + k.dim() == c);
    for (const auto& v : k.basis()) CHECK(is_zero(m * v));
    const Vector b = random_vector(rng, r);
    if (const auto x = solve(m, b)) CHECK((m * *x) == b);
    const Vector reachable = m * random_vector(rng, c);
    const auto y = solve(m, reachable);
    REQUIRE(y);
    CHECK((m * *y) == reachable);
  }
}

TEST_CASE("property: Sylvester agrees with sampled quadratic forms") {
  Rng rng(202);
  std::vector<Vector> probes;
  const std::vector<Rational> vals{-1, 0, 1, 2};
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals)
        if (a != 0 || b != 0 || c != 0) probes.push_back({a, b, c});
  for (int t = 0; t < 200; ++t) {
    Matrix s(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) s(i, j) = s(j, i) = small_rational(rng);
    if (!is_positive_definite(s)) continue;
    for (const auto& v : probes) CHECK(dot(v, s * v) > 0);
  }
  // positive definite M^T M + I always passes
  for (int t = 0; t < 100; ++t) {
    const Matrix a = random_invertible(rng, 4);
    CHECK(is_positive_definite(a.transpose() * a));
  }
}
