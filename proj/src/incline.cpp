#include "incline/incline.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "incline/errors.hpp"
#include "incline/sampling.hpp"

namespace incline {

InclineSpec InclineSpec::boolean() { return InclineSpec{Family::boolean, TNorm::min, {}}; }

InclineSpec InclineSpec::fuzzy(TNorm tnorm) { return InclineSpec{Family::fuzzy, tnorm, {}}; }

InclineSpec InclineSpec::tropical() { return InclineSpec{Family::tropical, TNorm::min, {}}; }

InclineSpec InclineSpec::finite_table(std::vector<std::string> labels,
                                      std::vector<std::vector<std::int64_t>> add,
                                      std::vector<std::vector<std::int64_t>> mul) {
  return InclineSpec{Family::table, TNorm::min,
                     TableData{std::move(labels), std::move(add), std::move(mul)}};
}

std::string_view to_string(TNorm tnorm) {
  switch (tnorm) {
    case TNorm::min:
      return "min";
    case TNorm::product:
      return "product";
    case TNorm::lukasiewicz:
      return "lukasiewicz";
  }
  return "?";
}

std::optional<TNorm> parse_tnorm(std::string_view name) {
  if (name == "min") return TNorm::min;
  if (name == "product") return TNorm::product;
  if (name == "lukasiewicz") return TNorm::lukasiewicz;
  return std::nullopt;
}

std::string describe(const InclineSpec& spec) {
  switch (spec.family) {
    case Family::boolean:
      return "boolean";
    case Family::fuzzy:
      return "fuzzy(" + std::string(to_string(spec.tnorm)) + ")";
    case Family::tropical:
      return "tropical";
    case Family::table:
      return "table(" + std::to_string(spec.table.labels.size()) + ")";
  }
  return "?";
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) return std::nullopt;
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) return std::nullopt;
  if (negative) p = -p;
  return Rational(p, q);
}

std::string format_rational(const Rational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

namespace {

// Generic law evaluation over any value type with add/mul/equality.
template <class T, class Ops>
class LawChecker {
 public:
  explicit LawChecker(Ops ops) : ops_(std::move(ops)) {
    for (const auto& name : law_names()) {
      if (name != "closure") checks_.push_back(LawCheck{name, true, {}, {}});
    }
  }

  void check(const T& x, const T& y, const T& z) {
    const T xx = ops_.add(x, x);
    if (!(xx == x)) fail("add-idempotent", {x}, L(x) + " + " + L(x) + " = " + L(xx) + " ≠ " + L(x));

    const T xy_sum = ops_.add(x, y);
    const T yx_sum = ops_.add(y, x);
    if (!(xy_sum == yx_sum)) {
      fail("add-commutative", {x, y},
           L(x) + " + " + L(y) + " = " + L(xy_sum) + " ≠ " + L(yx_sum) + " = " + L(y) + " + " + L(x));
    }

    const T left_sum = ops_.add(xy_sum, z);
    const T right_sum = ops_.add(x, ops_.add(y, z));
    if (!(left_sum == right_sum)) {
      fail("add-associative", {x, y, z},
           "(" + L(x) + " + " + L(y) + ") + " + L(z) + " = " + L(left_sum) + " ≠ " + L(right_sum) + " = " + L(x) +
               " + (" + L(y) + " + " + L(z) + ")");
    }

    const T xy = ops_.mul(x, y);
    const T yx = ops_.mul(y, x);
    const T left_prod = ops_.mul(xy, z);
    const T right_prod = ops_.mul(x, ops_.mul(y, z));
    if (!(left_prod == right_prod)) {
      fail("mul-associative", {x, y, z},
           "(" + L(x) + "·" + L(y) + ")·" + L(z) + " = " + L(left_prod) + " ≠ " + L(right_prod) + " = " + L(x) +
               "·(" + L(y) + "·" + L(z) + ")");
    }

    if (!(xy == yx)) {
      fail("mul-commutative", {x, y},
           L(x) + "·" + L(y) + " = " + L(xy) + " ≠ " + L(yx) + " = " + L(y) + "·" + L(x));
    }

    const T y_plus_z = ops_.add(y, z);
    const T xz = ops_.mul(x, z);
    const T zx = ops_.mul(z, x);
    const T ld_lhs = ops_.mul(x, y_plus_z);
    const T ld_rhs = ops_.add(xy, xz);
    if (!(ld_lhs == ld_rhs)) {
      fail("left-distributive", {x, y, z},
           L(x) + "·(" + L(y) + " + " + L(z) + ") = " + L(ld_lhs) + " ≠ " + L(ld_rhs) + " = " + L(x) + "·" + L(y) +
               " + " + L(x) + "·" + L(z));
    }
    const T rd_lhs = ops_.mul(y_plus_z, x);
    const T rd_rhs = ops_.add(yx, zx);
    if (!(rd_lhs == rd_rhs)) {
      fail("right-distributive", {x, y, z},
           "(" + L(y) + " + " + L(z) + ")·" + L(x) + " = " + L(rd_lhs) + " ≠ " + L(rd_rhs) + " = " + L(y) + "·" +
               L(x) + " + " + L(z) + "·" + L(x));
    }

    const T absorb_left = ops_.add(x, xy);
    const T absorb_right = ops_.add(x, yx);
    if (!(absorb_left == x)) {
      fail("absorption", {x, y}, L(x) + " + " + L(x) + "·" + L(y) + " = " + L(absorb_left) + " ≠ " + L(x));
    } else if (!(absorb_right == x)) {
      fail("absorption", {x, y}, L(x) + " + " + L(y) + "·" + L(x) + " = " + L(absorb_right) + " ≠ " + L(x));
    }

    if (!leq(xy, x)) {
      fail("mul-below-factor", {x, y}, L(x) + "·" + L(y) + " = " + L(xy) + " ≰ " + L(x));
    } else if (!leq(yx, x)) {
      fail("mul-below-factor", {x, y}, L(y) + "·" + L(x) + " = " + L(yx) + " ≰ " + L(x));
    }

    if (leq(y, z)) {
      if (!leq(xy, xz)) {
        fail("mul-monotone", {x, y, z},
             L(y) + " ≤ " + L(z) + " but " + L(x) + "·" + L(y) + " = " + L(xy) + " ≰ " + L(xz) + " = " + L(x) + "·" +
                 L(z));
      } else if (!leq(yx, zx)) {
        fail("mul-monotone", {x, y, z},
             L(y) + " ≤ " + L(z) + " but " + L(y) + "·" + L(x) + " = " + L(yx) + " ≰ " + L(zx) + " = " + L(z) + "·" +
                 L(x));
      }
    }
  }

  std::vector<LawCheck> take() { return std::move(checks_); }

 private:
  bool leq(const T& a, const T& b) const { return ops_.add(a, b) == b; }
  std::string L(const T& a) const { return ops_.label(a); }

  void fail(std::string_view law, std::initializer_list<T> witness, std::string message) {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const LawCheck& c) { return c.law == law; });
    if (it == checks_.end() || !it->passed) return;
    it->passed = false;
    for (const T& w : witness) it->witness.push_back(L(w));
    it->message = std::string(law) + ": " + message;
  }

  Ops ops_;
  std::vector<LawCheck> checks_;
};

struct TableOps {
  const TableData* table;
  std::size_t add(std::size_t a, std::size_t b) const { return static_cast<std::size_t>(table->add[a][b]); }
  std::size_t mul(std::size_t a, std::size_t b) const { return static_cast<std::size_t>(table->mul[a][b]); }
  std::string label(std::size_t a) const { return table->labels[a]; }
};

struct InclineOps {
  const Incline* incline;
  Element add(const Element& a, const Element& b) const { return incline->add(a, b); }
  Element mul(const Element& a, const Element& b) const { return incline->mul(a, b); }
  std::string label(const Element& a) const { return incline->format(a); }
};

// Empty string when the table is total, closed and uniquely labelled.
std::string closure_problem(const TableData& t) {
  const std::size_t size = t.labels.size();
  if (size == 0) return "closure: table has no elements";
  std::set<std::string> seen;
  for (const auto& label : t.labels) {
    if (!seen.insert(label).second) return "closure: duplicate element label \"" + label + "\"";
  }
  for (const auto* which : {&t.add, &t.mul}) {
    const char* name = which == &t.add ? "add" : "mul";
    if (which->size() != size) {
      return std::string("closure: ") + name + " table has " + std::to_string(which->size()) + " rows, expected " +
             std::to_string(size);
    }
    for (std::size_t i = 0; i < size; ++i) {
      const auto& row = (*which)[i];
      if (row.size() != size) {
        return std::string("closure: ") + name + " row " + std::to_string(i) + " has " + std::to_string(row.size()) +
               " entries, expected " + std::to_string(size);
      }
      for (std::size_t j = 0; j < size; ++j) {
        if (row[j] < 0 || static_cast<std::size_t>(row[j]) >= size) {
          return std::string("closure: ") + name + "[" + std::to_string(i) + "][" + std::to_string(j) +
                 "] = " + std::to_string(row[j]) + " is not an element index";
        }
      }
    }
  }
  return {};
}

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {
      "closure",         "add-idempotent",    "add-commutative",    "add-associative",
      "mul-associative", "mul-commutative",   "left-distributive",  "right-distributive",
      "absorption",      "mul-below-factor",  "mul-monotone"};
  return names;
}

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

std::vector<const LawCheck*> ValidationReport::violations() const {
  std::vector<const LawCheck*> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(&c);
  }
  return out;
}

const LawCheck* ValidationReport::find(std::string_view law) const {
  for (const auto& c : checks) {
    if (c.law == law) return &c;
  }
  return nullptr;
}

ValidationReport validate_incline(const InclineSpec& spec, const ValidationOptions& options) {
  ValidationReport report;
  report.incline = describe(spec);

  if (spec.family == Family::table) {
    report.exhaustive = true;
    const std::string problem = closure_problem(spec.table);
    if (!problem.empty()) {
      report.checks.push_back(LawCheck{"closure", false, {}, problem});
      return report;
    }
    report.checks.push_back(LawCheck{"closure", true, {}, {}});
    LawChecker<std::size_t, TableOps> checker(TableOps{&spec.table});
    const std::size_t size = spec.table.labels.size();
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        for (std::size_t z = 0; z < size; ++z) checker.check(x, y, z);
      }
    }
    report.triples_checked = static_cast<std::uint64_t>(size) * size * size;
    auto laws = checker.take();
    report.checks.insert(report.checks.end(), laws.begin(), laws.end());
    return report;
  }

  const Incline incline(spec);
  report.checks.push_back(LawCheck{"closure", true, {}, {}});
  LawChecker<Element, InclineOps> checker(InclineOps{&incline});
  Rng rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const Element x = random_element(incline, rng);
    const Element y = random_element(incline, rng);
    const Element z = random_element(incline, rng);
    checker.check(x, y, z);
  }
  report.triples_checked = options.samples;
  auto laws = checker.take();
  report.checks.insert(report.checks.end(), laws.begin(), laws.end());
  return report;
}

Incline::Incline(InclineSpec spec) : spec_(std::move(spec)) {
  if (spec_.family != Family::table) return;
  const ValidationReport report = validate_incline(spec_);
  if (report.valid()) return;
  std::ostringstream msg;
  const LawCheck* commutative = report.find("mul-commutative");
  const bool noncommutative = commutative != nullptr && !commutative->passed;
  msg << (noncommutative ? "multiplication table is not commutative; only commutative inclines are supported"
                         : "table is not an incline");
  for (const LawCheck* c : report.violations()) msg << "\n  " << c->message;
  if (noncommutative) throw NoncommutativeInclineError(msg.str());
  throw InvalidInclineError(msg.str());
}

bool Incline::contains(const Element& a) const {
  switch (spec_.family) {
    case Family::boolean:
      return std::holds_alternative<bool>(a);
    case Family::fuzzy: {
      const auto* q = std::get_if<Rational>(&a);
      return q != nullptr && *q >= 0 && *q <= 1;
    }
    case Family::tropical: {
      if (std::holds_alternative<Infinity>(a)) return true;
      const auto* q = std::get_if<Rational>(&a);
      return q != nullptr && *q >= 0;
    }
    case Family::table: {
      const auto* i = std::get_if<TableIndex>(&a);
      return i != nullptr && i->value < spec_.table.labels.size();
    }
  }
  return false;
}

void Incline::require(const Element& a) const {
  if (!contains(a)) throw DomainError("element is not in the carrier of " + describe(spec_));
}

Element Incline::add(const Element& a, const Element& b) const {
  require(a);
  require(b);
  return add_unchecked(a, b);
}

Element Incline::mul(const Element& a, const Element& b) const {
  require(a);
  require(b);
  return mul_unchecked(a, b);
}

bool Incline::leq(const Element& a, const Element& b) const { return add(a, b) == b; }

Element Incline::add_unchecked(const Element& a, const Element& b) const {
  switch (spec_.family) {
    case Family::boolean:
      return std::get<bool>(a) || std::get<bool>(b);
    case Family::fuzzy: {
      const auto& x = std::get<Rational>(a);
      const auto& y = std::get<Rational>(b);
      return x < y ? y : x;
    }
    case Family::tropical: {
      // Join is numeric min; infinity is the least element.
      if (std::holds_alternative<Infinity>(a)) return b;
      if (std::holds_alternative<Infinity>(b)) return a;
      const auto& x = std::get<Rational>(a);
      const auto& y = std::get<Rational>(b);
      return y < x ? y : x;
    }
    case Family::table:
      return TableIndex{static_cast<std::size_t>(spec_.table.add[std::get<TableIndex>(a).value][std::get<TableIndex>(b).value])};
  }
  return a;
}

Element Incline::mul_unchecked(const Element& a, const Element& b) const {
  switch (spec_.family) {
    case Family::boolean:
      return std::get<bool>(a) && std::get<bool>(b);
    case Family::fuzzy: {
      const auto& x = std::get<Rational>(a);
      const auto& y = std::get<Rational>(b);
      switch (spec_.tnorm) {
        case TNorm::min:
          return x < y ? x : y;
        case TNorm::product:
          return Rational(x * y);
        case TNorm::lukasiewicz: {
          Rational s = x + y - 1;
          return s < 0 ? Rational(0) : s;
        }
      }
      return x;
    }
    case Family::tropical: {
      if (std::holds_alternative<Infinity>(a) || std::holds_alternative<Infinity>(b)) return Infinity{};
      return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    }
    case Family::table:
      return TableIndex{static_cast<std::size_t>(spec_.table.mul[std::get<TableIndex>(a).value][std::get<TableIndex>(b).value])};
  }
  return a;
}

std::optional<std::size_t> Incline::cardinality() const {
  switch (spec_.family) {
    case Family::boolean:
      return 2;
    case Family::table:
      return spec_.table.labels.size();
    default:
      return std::nullopt;
  }
}

Element Incline::element_at(std::size_t i) const {
  const auto size = cardinality();
  if (!size || i >= *size) throw ArgumentError("element_at: index out of range for " + describe(spec_));
  if (spec_.family == Family::boolean) return i == 1;
  return TableIndex{i};
}

std::string Incline::format(const Element& a) const {
  require(a);
  switch (spec_.family) {
    case Family::boolean:
      return std::get<bool>(a) ? "1" : "0";
    case Family::fuzzy:
      return format_rational(std::get<Rational>(a));
    case Family::tropical:
      if (std::holds_alternative<Infinity>(a)) return "inf";
      return format_rational(std::get<Rational>(a));
    case Family::table:
      return spec_.table.labels[std::get<TableIndex>(a).value];
  }
  return {};
}

Element Incline::parse(std::string_view text) const {
  const std::string quoted = "\"" + std::string(text) + "\"";
  Element value;
  switch (spec_.family) {
    case Family::boolean:
      if (text == "0" || text == "false") {
        value = false;
      } else if (text == "1" || text == "true") {
        value = true;
      } else {
        throw InputError("not a boolean element: " + quoted);
      }
      break;
    case Family::fuzzy:
    case Family::tropical: {
      if (spec_.family == Family::tropical && text == "inf") {
        value = Infinity{};
        break;
      }
      auto q = parse_rational(text);
      if (!q) throw InputError("not a rational literal: " + quoted);
      value = *q;
      break;
    }
    case Family::table: {
      const auto& labels = spec_.table.labels;
      auto it = std::find(labels.begin(), labels.end(), text);
      if (it != labels.end()) {
        value = TableIndex{static_cast<std::size_t>(it - labels.begin())};
        break;
      }
      auto q = parse_rational(text);
      if (!q || boost::multiprecision::denominator(*q) != 1 || *q < 0) {
        throw InputError("unknown table element: " + quoted);
      }
      if (*q >= labels.size()) throw DomainError("table index out of range: " + quoted);
      value = TableIndex{static_cast<std::size_t>(boost::multiprecision::numerator(*q))};
      break;
    }
  }
  require(value);
  return value;
}

}  // namespace incline
