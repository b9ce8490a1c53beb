#include "incline/matrix.hpp"

#include <string>

#include "incline/errors.hpp"

namespace incline {

Matrix::Matrix(InclinePtr incline, std::size_t n, std::vector<Element> entries)
    : incline_(std::move(incline)), n_(n), entries_(std::move(entries)) {
  if (!incline_) throw StructuralError("matrix has no incline");
  if (n_ == 0) throw StructuralError("matrix dimension must be positive");
  if (entries_.size() != n_ * n_) {
    throw StructuralError("matrix of dimension " + std::to_string(n_) + " needs " + std::to_string(n_ * n_) +
                          " entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!incline_->contains(entries_[k])) {
      throw DomainError("matrix entry (" + std::to_string(k / n_ + 1) + "," + std::to_string(k % n_ + 1) +
                        ") is not in the carrier of " + describe(incline_->spec()));
    }
  }
}

Matrix Matrix::from_rows(InclinePtr incline, const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw StructuralError("matrix rows must all have length " + std::to_string(n));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(std::move(incline), n, std::move(entries));
}

Matrix Matrix::pattern(InclinePtr incline, std::size_t n, const Element& diagonal, const Element& off_diagonal) {
  std::vector<Element> entries(n * n, off_diagonal);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = diagonal;
  return Matrix(std::move(incline), n, std::move(entries));
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) return false;
  if (a.incline_ != b.incline_ && !(*a.incline_ == *b.incline_)) return false;
  return a.entries_ == b.entries_;
}

namespace {

void require_compatible(const Matrix& a, const Matrix& b, const char* op) {
  if (a.size() != b.size()) {
    throw StructuralError(std::string(op) + ": dimension mismatch (" + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  if (a.incline_ptr() != b.incline_ptr() && !(a.incline() == b.incline())) {
    throw StructuralError(std::string(op) + ": matrices are over different inclines (" +
                          describe(a.incline().spec()) + " vs " + describe(b.incline().spec()) + ")");
  }
}

}  // namespace

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_compatible(a, b, "mat_mul");
  const Incline& L = a.incline();
  const std::size_t n = a.size();
  std::vector<Element> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element acc = L.mul(a(i, 0), b(0, j));
      for (std::size_t k = 1; k < n; ++k) acc = L.add(acc, L.mul(a(i, k), b(k, j)));
      out.push_back(std::move(acc));
    }
  }
  return Matrix(a.incline_ptr(), n, std::move(out));
}

Matrix mat_pow(const Matrix& a, std::uint64_t l) {
  if (l == 0) throw ArgumentError("matrix powers are defined for exponents >= 1");
  std::optional<Matrix> result;
  Matrix square = a;
  while (true) {
    if (l & 1U) result = result ? mat_mul(*result, square) : square;
    l >>= 1U;
    if (l == 0) break;
    square = mat_mul(square, square);
  }
  return *result;
}

Matrix mat_pow_recurrence(const Matrix& a, std::uint64_t l) {
  if (l == 0) throw ArgumentError("matrix powers are defined for exponents >= 1");
  Matrix result = a;
  for (std::uint64_t i = 2; i <= l; ++i) result = mat_mul(result, a);
  return result;
}

bool mat_leq(const Matrix& a, const Matrix& b) {
  require_compatible(a, b, "mat_leq");
  const Incline& L = a.incline();
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (!L.leq(a.entries()[k], b.entries()[k])) return false;
  }
  return true;
}

bool check_power_inequality(const Matrix& a, std::uint64_t k, std::uint64_t d) {
  if (k == 0 || d == 0) throw ArgumentError("power inequality needs k >= 1 and d >= 1");
  return mat_leq(mat_pow(a, k + d), mat_pow(a, k));
}

PowerCache::PowerCache(Matrix base) { powers_.push_back(std::move(base)); }

const Matrix& PowerCache::power(std::uint64_t l) {
  if (l == 0) throw ArgumentError("matrix powers are defined for exponents >= 1");
  // A^l = A^(l-1)·A, matching the recurrence.
  while (powers_.size() < l) powers_.push_back(mat_mul(powers_.back(), powers_.front()));
  return powers_[l - 1];
}

OrderReport order_index_period(const Matrix& a, std::optional<std::uint64_t> horizon) {
  if (a.size() < 2) throw ArgumentError("order computation needs n >= 2");
  if (!horizon) {
    if (a.size() != 3) throw ArgumentError("a horizon must be given for n != 3");
    horizon = kDefaultHorizon3x3;
  }
  if (*horizon < 2) throw ArgumentError("horizon must be >= 2");

  OrderReport report;
  report.horizon = *horizon;
  PowerCache powers(a);
  for (std::uint64_t k = 1; k < *horizon; ++k) {
    for (std::uint64_t d = 1; k + d <= *horizon; ++d) {
      if (!mat_leq(powers.power(k + d), powers.power(k))) continue;
      report.witnesses.emplace_back(k, d);
      if (!report.index_bound || k < *report.index_bound) report.index_bound = k;
      if (!report.period_bound || d < *report.period_bound) report.period_bound = d;
    }
  }
  return report;
}

}  // namespace incline
