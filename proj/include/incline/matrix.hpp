#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "incline/element.hpp"
#include "incline/incline.hpp"

namespace incline {

using InclinePtr = std::shared_ptr<const Incline>;

// Square matrix over a commutative incline, stored row-major.
class Matrix {
 public:
  // Throws DomainError for entries outside the carrier and StructuralError
  // when entries.size() != n * n or n == 0.
  Matrix(InclinePtr incline, std::size_t n, std::vector<Element> entries);

  static Matrix from_rows(InclinePtr incline, const std::vector<std::vector<Element>>& rows);
  // Diagonal entries `diagonal`, all others `off_diagonal`.
  static Matrix pattern(InclinePtr incline, std::size_t n, const Element& diagonal, const Element& off_diagonal);

  std::size_t size() const { return n_; }
  // 0-based.
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<Element>& entries() const { return entries_; }

  const Incline& incline() const { return *incline_; }
  const InclinePtr& incline_ptr() const { return incline_; }

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  InclinePtr incline_;
  std::size_t n_;
  std::vector<Element> entries_;
};

// (A·B)_ij = join over k of a_ik · b_kj. Throws StructuralError on
// dimension or incline mismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);

// A^l by repeated squaring. l == 0 throws ArgumentError.
Matrix mat_pow(const Matrix& a, std::uint64_t l);
// A^l by the recurrence A^1 = A, A^l = A^(l-1)·A.
Matrix mat_pow_recurrence(const Matrix& a, std::uint64_t l);

// Entrywise induced order.
bool mat_leq(const Matrix& a, const Matrix& b);

// A^(k+d) <= A^k. k or d == 0 throws ArgumentError.
bool check_power_inequality(const Matrix& a, std::uint64_t k, std::uint64_t d);

// A^1, A^2, ... computed on demand and kept.
class PowerCache {
 public:
  explicit PowerCache(Matrix base);
  const Matrix& power(std::uint64_t l);
  const Matrix& base() const { return powers_.front(); }

 private:
  // deque: references stay valid as powers are appended.
  std::deque<Matrix> powers_;
};

struct OrderReport {
  std::uint64_t horizon = 0;
  // Least k over witnesses, and least d over witnesses, taken separately.
  std::optional<std::uint64_t> index_bound;
  std::optional<std::uint64_t> period_bound;
  // Every (k, d) with k + d <= horizon and A^(k+d) <= A^k, ordered by k then d.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses;
};

// Horizon used when the caller supplies none; only defined for n = 3.
inline constexpr std::uint64_t kDefaultHorizon3x3 = 11;

// Within-horizon upper bounds on the order-index and order-period.
// Requires n >= 2 and horizon >= 2; without a horizon, n must be 3.
OrderReport order_index_period(const Matrix& a, std::optional<std::uint64_t> horizon = std::nullopt);

}  // namespace incline
