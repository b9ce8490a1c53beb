#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incline/element.hpp"

namespace incline {

enum class Family { boolean, fuzzy, tropical, table };

// t-norms available for the fuzzy family ([0,1], max, T).
enum class TNorm { min, product, lukasiewicz };

struct TableData {
  std::vector<std::string> labels;
  // add[i][j], mul[i][j] are indices into labels. Stored as read, without
  // range checks, so that validate_incline can report closure failures.
  std::vector<std::vector<std::int64_t>> add;
  std::vector<std::vector<std::int64_t>> mul;

  friend bool operator==(const TableData&, const TableData&) = default;
};

// Description of a commutative incline. May be invalid; see validate_incline.
struct InclineSpec {
  Family family = Family::boolean;
  TNorm tnorm = TNorm::min;
  TableData table;

  static InclineSpec boolean();
  static InclineSpec fuzzy(TNorm tnorm);
  static InclineSpec tropical();
  static InclineSpec finite_table(std::vector<std::string> labels,
                                  std::vector<std::vector<std::int64_t>> add,
                                  std::vector<std::vector<std::int64_t>> mul);

  friend bool operator==(const InclineSpec&, const InclineSpec&) = default;
};

std::string_view to_string(TNorm tnorm);
std::optional<TNorm> parse_tnorm(std::string_view name);

// "boolean", "fuzzy(min)", "tropical", "table(4)".
std::string describe(const InclineSpec& spec);

// A validated commutative incline with exact element arithmetic.
//
// Construction from a finite table runs validate_incline and throws
// NoncommutativeInclineError when the multiplication table is not
// commutative, InvalidInclineError for any other failed axiom. Builtin
// families are accepted without sampling.
class Incline {
 public:
  explicit Incline(InclineSpec spec);

  static Incline boolean() { return Incline(InclineSpec::boolean()); }
  static Incline fuzzy(TNorm tnorm) { return Incline(InclineSpec::fuzzy(tnorm)); }
  static Incline tropical() { return Incline(InclineSpec::tropical()); }

  const InclineSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }

  bool contains(const Element& a) const;

  // Join in the induced order. Throws DomainError outside the carrier.
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  // a <= b  iff  a + b == b.
  bool leq(const Element& a, const Element& b) const;

  // Number of elements for finite carriers (boolean, table).
  std::optional<std::size_t> cardinality() const;
  // i-th element of a finite carrier, in table / {0,1} order.
  Element element_at(std::size_t i) const;

  // Textual form: "0"/"1", "p/q" or "p", "inf", or the table label.
  std::string format(const Element& a) const;
  // Inverse of format. Table elements also accept a decimal index.
  Element parse(std::string_view text) const;

  friend bool operator==(const Incline& x, const Incline& y) { return x.spec_ == y.spec_; }

 private:
  void require(const Element& a) const;
  Element add_unchecked(const Element& a, const Element& b) const;
  Element mul_unchecked(const Element& a, const Element& b) const;

  InclineSpec spec_;
};

// Parses an integer or "p/q" literal.
std::optional<Rational> parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

struct LawCheck {
  std::string law;
  bool passed = true;
  // Labels of the first witness tuple found (empty when passed).
  std::vector<std::string> witness;
  std::string message;
};

struct ValidationReport {
  std::string incline;
  // True when every triple of a finite table was checked.
  bool exhaustive = false;
  std::uint64_t triples_checked = 0;
  std::vector<LawCheck> checks;

  bool valid() const;
  std::vector<const LawCheck*> violations() const;
  const LawCheck* find(std::string_view law) const;
};

inline constexpr std::uint64_t kDefaultValidationSeed = 0x1c11e5eedULL;
inline constexpr std::uint64_t kDefaultValidationSamples = 10000;

struct ValidationOptions {
  std::uint64_t samples = kDefaultValidationSamples;
  std::uint64_t seed = kDefaultValidationSeed;
};

// Checks the incline axioms (semilattice +, associative ., both distributive
// laws, absorption x + xy = x + yx = x), commutativity of ., and the derived
// laws xy <= x and y <= z => xy <= xz. Finite tables are checked on every
// triple; builtin families on a seeded sample of triples. Failures are
// reported, never thrown.
ValidationReport validate_incline(const InclineSpec& spec, const ValidationOptions& options = {});

// Law names in report order.
const std::vector<std::string>& law_names();

}  // namespace incline
