#include "incline/json_io.hpp"

#include <fstream>

#include "incline/errors.hpp"

namespace incline {

namespace {

std::vector<std::vector<std::int64_t>> index_table(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InputError(std::string("table incline needs an array \"") + key + "\"");
  }
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : doc[key]) {
    if (!row.is_array()) throw InputError(std::string("\"") + key + "\" rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) throw InputError(std::string("\"") + key + "\" entries must be integers");
      r.push_back(cell.get<std::int64_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string label_of(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number() || value.is_boolean()) return value.dump();
  throw InputError("table element labels must be strings or numbers");
}

}  // namespace

InclineSpec incline_spec_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw InputError("incline spec must be an object with a string \"kind\"");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "boolean") return InclineSpec::boolean();
  if (kind == "tropical") return InclineSpec::tropical();
  if (kind == "fuzzy") {
    if (!doc.contains("tnorm") || !doc["tnorm"].is_string()) throw InputError("fuzzy incline needs a \"tnorm\"");
    const auto tnorm = parse_tnorm(doc["tnorm"].get<std::string>());
    if (!tnorm) throw InputError("unknown t-norm \"" + doc["tnorm"].get<std::string>() + "\"");
    return InclineSpec::fuzzy(*tnorm);
  }
  if (kind == "table") {
    if (!doc.contains("elements") || !doc["elements"].is_array()) {
      throw InputError("table incline needs an array \"elements\"");
    }
    std::vector<std::string> labels;
    for (const auto& e : doc["elements"]) labels.push_back(label_of(e));
    return InclineSpec::finite_table(std::move(labels), index_table(doc, "add"), index_table(doc, "mul"));
  }
  throw InputError("unknown incline kind \"" + kind + "\"");
}

Json to_json(const InclineSpec& spec) {
  Json doc;
  switch (spec.family) {
    case Family::boolean:
      doc["kind"] = "boolean";
      break;
    case Family::fuzzy:
      doc["kind"] = "fuzzy";
      doc["tnorm"] = std::string(to_string(spec.tnorm));
      break;
    case Family::tropical:
      doc["kind"] = "tropical";
      break;
    case Family::table:
      doc["kind"] = "table";
      doc["elements"] = spec.table.labels;
      doc["add"] = spec.table.add;
      doc["mul"] = spec.table.mul;
      break;
  }
  return doc;
}

Json element_to_json(const Incline& incline, const Element& a) {
  if (incline.family() == Family::boolean) return std::get<bool>(a) ? 1 : 0;
  return incline.format(a);
}

std::optional<InclineSpec> builtin_incline_spec(std::string_view name) {
  if (name == "boolean") return InclineSpec::boolean();
  if (name == "tropical") return InclineSpec::tropical();
  std::string_view tnorm;
  if (name.rfind("fuzzy-", 0) == 0) {
    tnorm = name.substr(6);
  } else if (name.rfind("fuzzy(", 0) == 0 && name.back() == ')') {
    tnorm = name.substr(6, name.size() - 7);
  } else {
    return std::nullopt;
  }
  if (auto t = parse_tnorm(tnorm)) return InclineSpec::fuzzy(*t);
  throw InputError("unknown t-norm in \"" + std::string(name) + "\"");
}

Element element_from_json(const Incline& incline, const Json& value) {
  if (value.is_boolean()) return incline.parse(value.get<bool>() ? "1" : "0");
  if (value.is_number_integer()) return incline.parse(value.dump());
  if (value.is_string()) return incline.parse(value.get<std::string>());
  throw InputError("cannot read matrix entry " + value.dump() + " (use integers or \"p/q\" strings)");
}

Matrix matrix_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw InputError("matrix document must be an object");
  if (!doc.contains("incline")) throw InputError("matrix document needs \"incline\"");
  const Json& spec_doc = doc["incline"];
  InclineSpec spec;
  if (spec_doc.is_string()) {
    const auto name = spec_doc.get<std::string>();
    auto builtin = builtin_incline_spec(name);
    spec = builtin ? *builtin : incline_spec_from_json(read_json_file(base_dir / name));
  } else {
    spec = incline_spec_from_json(spec_doc);
  }
  auto incline = std::make_shared<const Incline>(std::move(spec));

  if (!doc.contains("entries") || !doc["entries"].is_array()) throw InputError("matrix document needs \"entries\"");
  const Json& rows = doc["entries"];
  const std::size_t n = rows.size();
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != n) {
      throw InputError("\"n\" does not match the number of rows in \"entries\"");
    }
  }
  if (n < 2) throw InputError("matrix dimension must be at least 2");
  std::vector<Element> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw InputError("every row of \"entries\" needs " + std::to_string(n) + " entries");
    for (const auto& cell : row) entries.push_back(element_from_json(*incline, cell));
  }
  return Matrix(incline, n, std::move(entries));
}

Json to_json(const Matrix& a) {
  Json doc;
  doc["incline"] = to_json(a.incline().spec());
  doc["n"] = a.size();
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(element_to_json(a.incline(), a(i, j)));
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc;
}

Json to_json(const ValidationReport& report) {
  Json doc;
  doc["incline"] = report.incline;
  doc["valid"] = report.valid();
  doc["exhaustive"] = report.exhaustive;
  doc["triples"] = report.triples_checked;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json check;
    check["law"] = c.law;
    check["passed"] = c.passed;
    if (!c.passed) {
      check["witness"] = c.witness;
      check["message"] = c.message;
    }
    checks.push_back(std::move(check));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

Json to_json(const OrderReport& report) {
  Json doc;
  doc["horizon"] = report.horizon;
  doc["index_bound"] = report.index_bound ? Json(*report.index_bound) : Json(nullptr);
  doc["period_bound"] = report.period_bound ? Json(*report.period_bound) : Json(nullptr);
  Json witnesses = Json::array();
  for (const auto& [k, d] : report.witnesses) witnesses.push_back(Json::array({k, d}));
  doc["witnesses"] = std::move(witnesses);
  doc["note"] = "bounds are minima over pairs (k, d) with k + d <= horizon; "
                "the true order-index and order-period are at most these values";
  return doc;
}

Json to_json(const VerificationReport& report, bool with_timing) {
  Json doc;
  doc["n"] = report.n;
  doc["long"] = report.long_length;
  doc["short"] = report.short_length;
  doc["mode"] = std::string(to_string(report.mode));
  doc["examined"] = report.examined;
  Json failures = Json::array();
  for (const auto& w : report.failures) failures.push_back(w.to_string());
  doc["failures"] = std::move(failures);
  if (report.mode == ReductionMode::both) {
    Json disagreements = Json::array();
    for (const auto& [v, u] : report.disagreements) disagreements.push_back(Json::array({v.to_string(), u.to_string()}));
    doc["disagreements"] = std::move(disagreements);
  }
  if (with_timing) {
    doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
  }
  return doc;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace incline
