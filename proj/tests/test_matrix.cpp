#include <doctest.h>

#include "incline/errors.hpp"
#include "incline/matrix.hpp"
#include "incline/sampling.hpp"
#include "oracles.hpp"

using namespace incline;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

InclinePtr boolean() { return std::make_shared<const Incline>(Incline::boolean()); }

Matrix bool_matrix(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Element>> e;
  for (const auto& r : rows) {
    e.emplace_back();
    for (int v : r) e.back().push_back(v != 0);
  }
  return Matrix::from_rows(boolean(), e);
}

InclinePtr diamond() {
  // {0, a, b, 1}, join/meet of the 2x2 Boolean lattice.
  return std::make_shared<const Incline>(InclineSpec::finite_table(
      {"0", "a", "b", "1"}, {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}},
      {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}));
}

std::vector<InclinePtr> test_inclines() {
  return {boolean(),
          std::make_shared<const Incline>(Incline::fuzzy(TNorm::min)),
          std::make_shared<const Incline>(Incline::fuzzy(TNorm::product)),
          std::make_shared<const Incline>(Incline::fuzzy(TNorm::lukasiewicz)),
          std::make_shared<const Incline>(Incline::tropical()),
          diamond()};
}

}  // namespace

TEST_CASE("mat_mul examples") {
  SUBCASE("boolean identity") {
    const Matrix I = Matrix::pattern(boolean(), 3, true, false);
    const Matrix A = bool_matrix({{0, 1, 1}, {1, 0, 0}, {0, 1, 0}});
    CHECK(mat_mul(I, A) == A);
    CHECK(mat_mul(A, I) == A);
  }
  SUBCASE("tropical 2x2") {
    auto trop = std::make_shared<const Incline>(Incline::tropical());
    const Matrix A = Matrix::from_rows(trop, {{q(0), q(1)}, {q(2), q(0)}});
    CHECK(mat_mul(A, A) == A);
    CHECK(mat_mul(A, A)(0, 0) == Element(q(0)));
    CHECK(mat_mul(A, A)(1, 0) == Element(q(2)));
  }
  SUBCASE("fuzzy(min) 1x1") {
    auto fz = std::make_shared<const Incline>(Incline::fuzzy(TNorm::min));
    const Matrix a = Matrix::from_rows(fz, {{q(1, 2)}});
    const Matrix b = Matrix::from_rows(fz, {{q(3, 4)}});
    CHECK(mat_mul(a, b) == a);
  }
}

TEST_CASE("structural errors") {
  const Matrix A2 = Matrix::pattern(boolean(), 2, true, false);
  const Matrix A3 = Matrix::pattern(boolean(), 3, true, false);
  CHECK_THROWS_AS(mat_mul(A2, A3), StructuralError);
  CHECK_THROWS_AS(mat_leq(A2, A3), StructuralError);
  auto fz = std::make_shared<const Incline>(Incline::fuzzy(TNorm::min));
  const Matrix F = Matrix::pattern(fz, 2, Element(q(1)), Element(q(0)));
  CHECK_THROWS_AS(mat_mul(A2, F), StructuralError);
  CHECK_THROWS_AS(Matrix(boolean(), 2, {true, false, true}), StructuralError);
  CHECK_THROWS_AS(Matrix(fz, 1, {Element(q(2))}), DomainError);

  // Equal specs behind different pointers are the same incline.
  const Matrix B2 = Matrix::pattern(boolean(), 2, false, true);
  CHECK_NOTHROW(mat_mul(A2, B2));
}

TEST_CASE("mat_pow examples") {
  const Matrix A = bool_matrix({{0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(mat_pow(A, 1) == A);
  CHECK_THROWS_AS(mat_pow(A, 0), ArgumentError);
  CHECK_THROWS_AS(mat_pow_recurrence(A, 0), ArgumentError);

  const Matrix J = bool_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  for (std::uint64_t l = 1; l <= 20; ++l) CHECK(mat_pow(J, l) == J);

  const Matrix swap = bool_matrix({{0, 1}, {1, 0}});
  CHECK(mat_pow(swap, 2) == bool_matrix({{1, 0}, {0, 1}}));
}

TEST_CASE("mat_leq examples") {
  const Matrix A = bool_matrix({{0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(mat_leq(A, A));
  CHECK(mat_leq(bool_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), A));
  CHECK_FALSE(mat_leq(bool_matrix({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}), A));
  auto trop = std::make_shared<const Incline>(Incline::tropical());
  CHECK(mat_leq(Matrix::from_rows(trop, {{q(3)}}), Matrix::from_rows(trop, {{q(2)}})));
}

TEST_CASE("check_power_inequality examples") {
  const Matrix J = bool_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(check_power_inequality(J, 1, 1));
  const Matrix swap = bool_matrix({{0, 1}, {1, 0}});
  CHECK_FALSE(check_power_inequality(swap, 1, 1));
  CHECK(check_power_inequality(swap, 1, 2));
  CHECK_THROWS_AS(check_power_inequality(swap, 0, 1), ArgumentError);
  CHECK_THROWS_AS(check_power_inequality(swap, 1, 0), ArgumentError);
}

TEST_CASE("powers agree with the walk-sum expansion") {
  Rng rng(2024);
  for (const auto& L : test_inclines()) {
    CAPTURE(describe(L->spec()));
    for (int t = 0; t < 5; ++t) {
      const Matrix A = random_matrix(L, 3, rng);
      for (int l = 1; l <= 5; ++l) {
        const Matrix P = mat_pow(A, static_cast<std::uint64_t>(l));
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = 0; j < 3; ++j) CHECK(P(i, j) == oracle::power_entry_by_walks(A, l, i, j));
        }
      }
    }
  }
}

TEST_CASE("semigroup laws on random matrices") {
  Rng rng(5);
  for (const auto& L : test_inclines()) {
    CAPTURE(describe(L->spec()));
    for (int t = 0; t < 20; ++t) {
      const Matrix A = random_matrix(L, 3, rng);
      const Matrix B = random_matrix(L, 3, rng);
      const Matrix C = random_matrix(L, 3, rng);
      CHECK(mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C)));

      // Order compatibility: A <= A + B entrywise, so A·C <= (A + B)·C.
      std::vector<Element> joined;
      for (std::size_t k = 0; k < 9; ++k) joined.push_back(L->add(A.entries()[k], B.entries()[k]));
      const Matrix AB(L, 3, joined);
      REQUIRE(mat_leq(A, AB));
      CHECK(mat_leq(mat_mul(A, C), mat_mul(AB, C)));
      CHECK(mat_leq(mat_mul(C, A), mat_mul(C, AB)));
      if (mat_leq(A, B) && mat_leq(C, AB)) CHECK(mat_leq(mat_mul(A, C), mat_mul(B, AB)));
    }
  }
}

TEST_CASE("repeated squaring equals the recurrence up to l = 16") {
  Rng rng(3);
  for (const auto& L : test_inclines()) {
    CAPTURE(describe(L->spec()));
    const Matrix A = random_matrix(L, 3, rng);
    PowerCache cache(A);
    for (std::uint64_t l = 1; l <= 16; ++l) {
      const Matrix fast = mat_pow(A, l);
      CHECK(fast == mat_pow_recurrence(A, l));
      CHECK(fast == cache.power(l));
    }
  }
}

TEST_CASE("A^11 <= A^5 and the descending chain") {
  Rng rng(11);
  for (const auto& L : test_inclines()) {
    CAPTURE(describe(L->spec()));
    for (int t = 0; t < 30; ++t) {
      const Matrix A = random_matrix(L, 3, rng);
      CHECK(check_power_inequality(A, 5, 6));
      PowerCache cache(A);
      for (std::uint64_t m = 0; m <= 2; ++m) CHECK(mat_leq(cache.power(5 + 6 * (m + 1)), cache.power(5 + 6 * m)));
    }
  }
}

TEST_CASE("order_index_period") {
  SUBCASE("all-ones") {
    const auto r = order_index_period(bool_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    CHECK(r.horizon == 11);
    CHECK(r.index_bound == 1);
    CHECK(r.period_bound == 1);
  }
  SUBCASE("cyclic permutation") {
    const auto r = order_index_period(bool_matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
    CHECK(r.index_bound == 1);
    CHECK(r.period_bound == 3);
    // Frozen from an independent enumeration of the 3-cycle of powers.
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected = {
        {1, 3}, {1, 6}, {1, 9}, {2, 3}, {2, 6}, {2, 9}, {3, 3}, {3, 6}, {4, 3}, {4, 6}, {5, 3}, {5, 6}, {6, 3}, {7, 3}, {8, 3}};
    CHECK(r.witnesses == expected);
  }
  SUBCASE("argument errors") {
    const Matrix A = bool_matrix({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(order_index_period(A), ArgumentError);
    CHECK_THROWS_AS(order_index_period(A, 1), ArgumentError);
    const auto r = order_index_period(A, 4);
    CHECK(r.index_bound == 1);
    CHECK(r.period_bound == 2);
    CHECK_THROWS_AS(order_index_period(Matrix::pattern(boolean(), 1, true, true), 4), ArgumentError);
  }
  SUBCASE("witnesses re-verify and bounds are minima") {
    Rng rng(8);
    for (const auto& L : test_inclines()) {
      const Matrix A = random_matrix(L, 3, rng);
      const auto r = order_index_period(A, 11);
      REQUIRE(r.index_bound);
      REQUIRE(r.period_bound);
      CHECK(*r.index_bound <= 5);
      CHECK(*r.period_bound <= 6);
      std::uint64_t min_k = 100, min_d = 100;
      for (const auto& [k, d] : r.witnesses) {
        CHECK(k + d <= 11);
        CHECK(check_power_inequality(A, k, d));
        min_k = std::min(min_k, k);
        min_d = std::min(min_d, d);
      }
      CHECK(min_k == *r.index_bound);
      CHECK(min_d == *r.period_bound);
      // Pairs not listed must fail.
      for (std::uint64_t k = 1; k < 11; ++k) {
        for (std::uint64_t d = 1; k + d <= 11; ++d) {
          const bool listed = std::find(r.witnesses.begin(), r.witnesses.end(), std::make_pair(k, d)) != r.witnesses.end();
          CHECK(listed == check_power_inequality(A, k, d));
        }
      }
    }
  }
}
