#pragma once

#include <cstddef>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace incline {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Tropical +infinity: the least element of the tropical incline.
struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

// Position of an element in a finite operation table.
struct TableIndex {
  std::size_t value = 0;
  friend bool operator==(TableIndex, TableIndex) = default;
};

// Exact element payload. Which alternatives are legal depends on the incline:
//   boolean  -> bool
//   fuzzy    -> Rational in [0, 1]
//   tropical -> Rational >= 0, or Infinity
//   table    -> TableIndex
using Element = std::variant<bool, Rational, Infinity, TableIndex>;

}  // namespace incline
