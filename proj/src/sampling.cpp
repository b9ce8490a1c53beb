#include "incline/sampling.hpp"

#include "incline/matrix.hpp"

namespace incline {

Element random_element(const Incline& incline, Rng& rng) {
  switch (incline.family()) {
    case Family::boolean:
      return rng.below(2) == 1;
    case Family::fuzzy: {
      switch (rng.below(8)) {
        case 0:
          return Rational(0);
        case 1:
          return Rational(1);
        default: {
          const std::uint64_t den = 1 + rng.below(12);
          const std::uint64_t num = rng.below(den + 1);
          return Rational(num, den);
        }
      }
    }
    case Family::tropical: {
      const std::uint64_t pick = rng.below(10);
      if (pick == 0) return Infinity{};
      if (pick == 1) return Rational(0);
      const std::uint64_t den = 1 + rng.below(8);
      const std::uint64_t num = rng.below(41);
      return Rational(num, den);
    }
    case Family::table:
      return TableIndex{static_cast<std::size_t>(rng.below(incline.spec().table.labels.size()))};
  }
  return false;
}

Matrix random_matrix(const std::shared_ptr<const Incline>& incline, std::size_t n, Rng& rng) {
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) entries.push_back(random_element(*incline, rng));
  return Matrix(incline, n, std::move(entries));
}

}  // namespace incline
