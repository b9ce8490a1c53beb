#include "incline/walk.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "incline/errors.hpp"

namespace incline {

Walk::Walk(std::size_t n, std::vector<std::uint32_t> terms) : n_(n), terms_(std::move(terms)) {
  if (n_ == 0) throw ArgumentError("walk vertex set must be nonempty");
  if (terms_.empty()) throw ArgumentError("a walk has at least one term");
  for (std::uint32_t t : terms_) {
    if (t < 1 || t > n_) {
      throw ArgumentError("walk term " + std::to_string(t) + " is outside {1.." + std::to_string(n_) + "}");
    }
  }
}

Walk Walk::parse(std::size_t n, std::string_view text) {
  std::vector<std::uint32_t> terms;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token.size() > 9) throw InputError("walk term too large: " + token);
    terms.push_back(static_cast<std::uint32_t>(std::stoul(token)));
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token.push_back(c);
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      throw InputError("unexpected character '" + std::string(1, c) + "' in walk \"" + std::string(text) + "\"");
    }
  }
  flush();
  if (terms.empty()) throw InputError("empty walk");
  try {
    return Walk(n, std::move(terms));
  } catch (const ArgumentError& e) {
    throw InputError(e.what());
  }
}

std::string Walk::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(terms_[i]);
  }
  return out;
}

std::uint64_t EdgeMultiset::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

bool EdgeMultiset::is_submultiset_of(const EdgeMultiset& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] > other.counts_[k]) return false;
  }
  return true;
}

EdgeMultiset edge_counts(const Walk& v) {
  EdgeMultiset m(v.vertex_count());
  const auto& t = v.terms();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) m.increment(t[i], t[i + 1]);
  return m;
}

bool is_reduction(const Walk& u, const Walk& v) {
  if (u.vertex_count() != v.vertex_count()) throw PreconditionError("walks are on different vertex sets");
  if (u.front() != v.front() || u.back() != v.back()) return false;
  return edge_counts(u).is_submultiset_of(edge_counts(v));
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d <= value / d; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeLabeling::PrimeLabeling(std::size_t n, std::vector<std::uint64_t> primes) : n_(n), primes_(std::move(primes)) {
  if (n_ == 0) throw ArgumentError("prime labeling needs n >= 1");
  if (primes_.size() != n_ * n_) {
    throw ArgumentError("prime labeling for n = " + std::to_string(n_) + " needs " + std::to_string(n_ * n_) +
                        " primes, got " + std::to_string(primes_.size()));
  }
  std::set<std::uint64_t> seen;
  for (auto p : primes_) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw ArgumentError("prime " + std::to_string(p) + " is used twice");
  }
}

PrimeLabeling PrimeLabeling::standard3() { return PrimeLabeling(3, {2, 3, 5, 7, 11, 13, 17, 19, 23}); }

PrimeLabeling PrimeLabeling::first_primes(std::size_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = 2; primes.size() < n * n; ++c) {
    if (is_prime(c)) primes.push_back(c);
  }
  return PrimeLabeling(n, std::move(primes));
}

PrimeLabeling PrimeLabeling::default_for(std::size_t n) { return n == 3 ? standard3() : first_primes(n); }

std::uint64_t PrimeLabeling::max_prime() const { return *std::max_element(primes_.begin(), primes_.end()); }

BigInt walk_code(const Walk& v, const PrimeLabeling& labels) {
  if (v.vertex_count() != labels.vertex_count()) throw PreconditionError("labeling and walk use different n");
  BigInt code = 1;
  const auto& t = v.terms();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) code *= labels.prime(t[i], t[i + 1]);
  return code;
}

bool divisibility_reduction(const Walk& u, const Walk& v, const PrimeLabeling& labels) {
  if (u.front() != v.front() || u.back() != v.back()) {
    throw PreconditionError("divisibility criterion needs walks with the same endpoints");
  }
  if (u.length() == 0 || v.length() == 0) throw PreconditionError("divisibility criterion needs lengths >= 1");
  return walk_code(v, labels) % walk_code(u, labels) == 0;
}

namespace {

// Advances the terms in [first, last) as a base-n odometer over {1..n}.
// Returns false after the last assignment.
bool advance(std::vector<std::uint32_t>& terms, std::size_t first, std::size_t last, std::uint32_t n) {
  for (std::size_t i = last; i-- > first;) {
    if (terms[i] < n) {
      ++terms[i];
      return true;
    }
    terms[i] = 1;
  }
  return false;
}

template <class Accept>
std::optional<Walk> search_reductions(const Walk& v, std::size_t h, Accept accept) {
  if (v.length() == 0) throw PreconditionError("find_reduction needs a walk of length >= 1");
  if (h == 0) throw ArgumentError("reduction length must be >= 1");
  const auto n = static_cast<std::uint32_t>(v.vertex_count());
  std::vector<std::uint32_t> terms(h + 1, 1);
  terms.front() = v.front();
  terms.back() = v.back();
  do {
    Walk u(n, terms);
    if (accept(u)) return u;
  } while (advance(terms, 1, h, n));
  return std::nullopt;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, const char* what) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw ArgumentError(std::string(what) + " is too large to enumerate");
    }
    result *= base;
  }
  return result;
}

template <class Code>
struct Candidate {
  std::vector<std::uint32_t> terms;
  std::vector<std::uint32_t> counts;
  Code code;
};

template <class Code>
void run_verification(const PrimeLabeling& labels, VerificationReport& report) {
  const std::size_t n = report.n;
  const std::size_t L = report.long_length;
  const std::size_t h = report.short_length;
  const auto vertices = static_cast<std::uint32_t>(n);
  const bool use_counts = report.mode != ReductionMode::prime_code;
  const bool use_codes = report.mode != ReductionMode::multiset;

  // candidates[(s-1)*n + (e-1)]: every length-h walk from s to e, lexicographic.
  std::vector<std::vector<Candidate<Code>>> candidates(n * n);
  {
    std::vector<std::uint32_t> terms(h + 1, 1);
    do {
      Candidate<Code> c{terms, std::vector<std::uint32_t>(n * n, 0), Code(1)};
      for (std::size_t i = 0; i < h; ++i) {
        ++c.counts[(terms[i] - 1) * n + (terms[i + 1] - 1)];
        c.code *= labels.prime(terms[i], terms[i + 1]);
      }
      candidates[(terms.front() - 1) * n + (terms.back() - 1)].push_back(std::move(c));
    } while (advance(terms, 0, h + 1, vertices));
  }

  std::vector<std::uint32_t> walk(L + 1, 1);
  std::vector<std::uint32_t> counts(n * n);
  do {
    ++report.examined;
    std::fill(counts.begin(), counts.end(), 0);
    Code code(1);
    for (std::size_t i = 0; i < L; ++i) {
      ++counts[(walk[i] - 1) * n + (walk[i + 1] - 1)];
      if (use_codes) code *= labels.prime(walk[i], walk[i + 1]);
    }
    bool found = false;
    for (const auto& c : candidates[(walk.front() - 1) * n + (walk.back() - 1)]) {
      ++report.pairs_tested;
      bool by_counts = false;
      if (use_counts) {
        by_counts = true;
        for (std::size_t k = 0; k < counts.size(); ++k) {
          if (c.counts[k] > counts[k]) {
            by_counts = false;
            break;
          }
        }
      }
      const bool by_code = use_codes && code % c.code == 0;
      if (report.mode == ReductionMode::both && by_counts != by_code) {
        report.disagreements.emplace_back(Walk(n, walk), Walk(n, c.terms));
      }
      if (use_counts ? by_counts : by_code) {
        found = true;
        break;
      }
    }
    if (!found) report.failures.emplace_back(n, walk);
  } while (advance(walk, 0, L + 1, vertices));
}

}  // namespace

std::optional<Walk> find_reduction(const Walk& v, std::size_t h) {
  const EdgeMultiset target = edge_counts(v);
  return search_reductions(v, h, [&](const Walk& u) { return edge_counts(u).is_submultiset_of(target); });
}

std::optional<Walk> find_reduction_by_code(const Walk& v, std::size_t h, const PrimeLabeling& labels) {
  const BigInt target = walk_code(v, labels);
  return search_reductions(v, h, [&](const Walk& u) { return target % walk_code(u, labels) == 0; });
}

BigInt lcm_upto(std::uint64_t n) {
  if (n == 0) throw ArgumentError("lcm_upto needs n >= 1");
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result = boost::multiprecision::lcm(result, BigInt(i));
  return result;
}

std::string_view to_string(ReductionMode mode) {
  switch (mode) {
    case ReductionMode::multiset:
      return "multiset";
    case ReductionMode::prime_code:
      return "prime-code";
    case ReductionMode::both:
      return "both";
  }
  return "?";
}

std::optional<ReductionMode> parse_reduction_mode(std::string_view name) {
  if (name == "multiset") return ReductionMode::multiset;
  if (name == "prime-code") return ReductionMode::prime_code;
  if (name == "both") return ReductionMode::both;
  return std::nullopt;
}

VerificationReport verify_all(std::size_t n, std::size_t long_length, std::size_t short_length,
                              const PrimeLabeling& labels, ReductionMode mode) {
  if (n < 2) throw ArgumentError("verify_all needs n >= 2");
  if (long_length < 1) throw ArgumentError("long length must be >= 1");
  if (short_length < 1) throw ArgumentError("short length must be >= 1");
  if (labels.vertex_count() != n) throw ArgumentError("prime labeling does not match n");
  checked_power(n, long_length + 1, "walk space");
  if (checked_power(n, short_length + 1, "reduction space") > (std::uint64_t{1} << 24)) {
    throw ArgumentError("reduction space is too large to tabulate");
  }

  VerificationReport report;
  report.n = n;
  report.long_length = long_length;
  report.short_length = short_length;
  report.mode = mode;

  const auto start = std::chrono::steady_clock::now();
  // Native 64-bit codes whenever the largest possible code fits.
  const BigInt largest = boost::multiprecision::pow(BigInt(labels.max_prime()),
                                                    static_cast<unsigned>(std::max(long_length, short_length)));
  if (largest <= std::numeric_limits<std::uint64_t>::max()) {
    run_verification<std::uint64_t>(labels, report);
  } else {
    run_verification<BigInt>(labels, report);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace incline
