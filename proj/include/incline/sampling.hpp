#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "incline/element.hpp"
#include "incline/incline.hpp"

namespace incline {

class Matrix;

// Seeded generator. Bounded draws use plain modulo reduction on the
// mt19937_64 stream, so a seed gives the same values with every standard
// library (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

// Boolean: uniform bit. Fuzzy: p/q with q in 1..12. Tropical: p/q with
// q in 1..8 and p in 0..40, or infinity with probability 1/10. Table: uniform
// index. Carrier extremes are drawn with elevated probability.
Element random_element(const Incline& incline, Rng& rng);

Matrix random_matrix(const std::shared_ptr<const Incline>& incline, std::size_t n, Rng& rng);

}  // namespace incline
