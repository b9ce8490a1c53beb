#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incline/element.hpp"

namespace incline {

// Sequence v_0, ..., v_l of vertices in {1..n}. Length is the edge count l.
class Walk {
 public:
  // Throws ArgumentError for n == 0, an empty term list, or a term outside
  // {1..n}.
  Walk(std::size_t n, std::vector<std::uint32_t> terms);

  // "1 2 2 1" (whitespace or commas). Throws InputError on bad syntax.
  static Walk parse(std::size_t n, std::string_view text);

  std::size_t vertex_count() const { return n_; }
  std::size_t length() const { return terms_.size() - 1; }
  const std::vector<std::uint32_t>& terms() const { return terms_; }
  std::uint32_t front() const { return terms_.front(); }
  std::uint32_t back() const { return terms_.back(); }

  // Space-separated, 1-based.
  std::string to_string() const;

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk& a, const Walk& b) { return a.terms_ <=> b.terms_; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> terms_;
};

// counts(p, q) = number of steps p -> q in a walk.
class EdgeMultiset {
 public:
  explicit EdgeMultiset(std::size_t n) : n_(n), counts_(n * n, 0) {}

  std::size_t vertex_count() const { return n_; }
  // 1-based vertices.
  std::uint32_t count(std::uint32_t p, std::uint32_t q) const { return counts_[(p - 1) * n_ + (q - 1)]; }
  void increment(std::uint32_t p, std::uint32_t q) { ++counts_[(p - 1) * n_ + (q - 1)]; }
  std::uint64_t total() const;
  const std::vector<std::uint32_t>& flat() const { return counts_; }

  // Entrywise <=; multisets over different n are never comparable.
  bool is_submultiset_of(const EdgeMultiset& other) const;

  friend bool operator==(const EdgeMultiset&, const EdgeMultiset&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> counts_;
};

EdgeMultiset edge_counts(const Walk& v);

// Same first term, same last term, and edge_counts(u) <= edge_counts(v).
// No constraint on the lengths. Throws PreconditionError if n differs.
bool is_reduction(const Walk& u, const Walk& v);

// n x n table of pairwise-distinct primes, one per directed edge.
class PrimeLabeling {
 public:
  // Row-major primes; throws ArgumentError if the count is not n*n, an
  // entry is not prime, or two entries coincide.
  PrimeLabeling(std::size_t n, std::vector<std::uint64_t> primes);

  // [[2,3,5],[7,11,13],[17,19,23]].
  static PrimeLabeling standard3();
  // First n*n primes, row-major.
  static PrimeLabeling first_primes(std::size_t n);
  // standard3() for n = 3; first_primes(n) otherwise.
  static PrimeLabeling default_for(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::uint64_t prime(std::uint32_t p, std::uint32_t q) const { return primes_[(p - 1) * n_ + (q - 1)]; }
  const std::vector<std::uint64_t>& flat() const { return primes_; }
  std::uint64_t max_prime() const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> primes_;
};

bool is_prime(std::uint64_t value);

// Product of the edge primes along v; 1 for a length-0 walk.
BigInt walk_code(const Walk& v, const PrimeLabeling& labels);

// walk_code(u) divides walk_code(v). Requires matching endpoints and lengths
// >= 1 (PreconditionError otherwise).
bool divisibility_reduction(const Walk& u, const Walk& v, const PrimeLabeling& labels);

// First walk (lexicographic in the interior terms) of length h with the
// endpoints of v that is a reduction of v. Requires length(v) >= 1, h >= 1.
std::optional<Walk> find_reduction(const Walk& v, std::size_t h);
// Same search, with divisibility of prime codes as the test.
std::optional<Walk> find_reduction_by_code(const Walk& v, std::size_t h, const PrimeLabeling& labels);

// lcm(1, ..., n); n >= 1.
BigInt lcm_upto(std::uint64_t n);

enum class ReductionMode { multiset, prime_code, both };

std::string_view to_string(ReductionMode mode);
std::optional<ReductionMode> parse_reduction_mode(std::string_view name);

struct VerificationReport {
  std::size_t n = 0;
  std::size_t long_length = 0;
  std::size_t short_length = 0;
  ReductionMode mode = ReductionMode::multiset;
  std::uint64_t examined = 0;
  // (long, short) pairs tested across all walks; counts candidate tests.
  std::uint64_t pairs_tested = 0;
  // Long walks with no short reduction, in lexicographic order.
  std::vector<Walk> failures;
  // mode == both: pairs on which the two mechanisms disagreed.
  std::vector<std::pair<Walk, Walk>> disagreements;
  std::chrono::nanoseconds elapsed{0};

  bool holds() const { return failures.empty() && disagreements.empty(); }
};

// For every walk of length long_length over all start vertices, searches for
// a reduction of length short_length with the same endpoints. Requires
// n >= 2, long_length >= 1, short_length >= 1 (ArgumentError otherwise).
VerificationReport verify_all(std::size_t n, std::size_t long_length, std::size_t short_length,
                              const PrimeLabeling& labels, ReductionMode mode = ReductionMode::multiset);

}  // namespace incline
