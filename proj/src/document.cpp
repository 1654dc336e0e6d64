#include "uxc/document.hpp"

#include <json.hpp>

namespace uxc {

namespace {

using njson = nlohmann::ordered_json;

std::uint64_t parse_u64(const njson& j, const std::string& path) {
  try {
    if (j.is_string()) return std::stoull(j.get<std::string>());
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  } catch (const std::exception&) {
  }
  throw InvalidInputError("expected an unsigned integer at " + path);
}

FieldDesc parse_field(const njson& j) {
  FieldDesc f;
  if (j.is_null()) return f;
  if (!j.is_object()) throw InvalidInputError("field descriptor must be an object");
  std::string type = j.value("type", "rational");
  if (type == "rational") {
    f.kind = FieldKind::Rational;
  } else if (type == "prime") {
    f.kind = FieldKind::Prime;
    f.p = parse_u64(j.at("p"), "field.p");
  } else if (type == "cyclotomic") {
    f.kind = FieldKind::Cyclotomic;
    f.p = parse_u64(j.at("p"), "field.p");
    f.order = static_cast<unsigned>(parse_u64(j.at("order"), "field.order"));
    f.root = j.contains("root") ? parse_u64(j.at("root"), "field.root") : canonical_root_of_unity(f.order, f.p);
  } else {
    throw InvalidInputError("unknown field type '" + type + "'");
  }
  if (f.kind != FieldKind::Rational && !is_prime_u64(f.p))
    throw InvalidInputError("field modulus is not prime");
  return f;
}

Rational parse_rational_scalar(const njson& j, const std::string& path) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InvalidInputError("expected a rational scalar at " + path);
}

Fp parse_prime_scalar(const njson& j, const FieldDesc& f, const std::string& path) {
  if (j.is_string() || j.is_number_integer() || j.is_number_unsigned()) {
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      try {
        long long v = std::stoll(s);
        return Fp(v, f.p);
      } catch (const std::exception&) {
        throw InvalidInputError("bad residue at " + path);
      }
    }
    return Fp(j.get<long long>(), f.p);
  }
  if (j.is_object() && j.contains("mod") && j.contains("res")) {
    std::uint64_t p = parse_u64(j.at("mod"), path + ".mod");
    if (p != f.p) throw BackendMismatchError("scalar modulus differs from the document field at " + path);
    const auto& res = j.at("res");
    if (res.is_string() && !res.get<std::string>().empty() && res.get<std::string>()[0] == '-') {
      try {
        return Fp(std::stoll(res.get<std::string>()), p);
      } catch (const std::exception&) {
        throw InvalidInputError("bad residue at " + path);
      }
    }
    if (res.is_number_integer() && res.get<long long>() < 0) return Fp(res.get<long long>(), p);
    return Fp::from_residue(parse_u64(res, path + ".res"), p);
  }
  if (j.is_object() && j.contains("cyc") && j.contains("pow")) {
    unsigned order = static_cast<unsigned>(parse_u64(j.at("cyc"), path + ".cyc"));
    std::uint64_t p = j.contains("mod") ? parse_u64(j.at("mod"), path + ".mod") : f.p;
    if (p != f.p) throw BackendMismatchError("scalar modulus differs from the document field at " + path);
    std::uint64_t root = (f.kind == FieldKind::Cyclotomic && order == f.order && f.root)
                             ? f.root
                             : canonical_root_of_unity(order, p);
    long k = static_cast<long>(parse_u64(j.at("pow"), path + ".pow") % order);
    return Fp::from_residue(powmod(root, static_cast<std::uint64_t>(k), p), p);
  }
  throw InvalidInputError("unrecognized scalar encoding at " + path);
}

template <typename S, typename ParseScalar>
std::vector<std::array<S, 3>> parse_triples(const njson& arr, const std::string& key, ParseScalar&& ps) {
  if (!arr.is_array()) throw InvalidInputError("'" + key + "' must be an array");
  std::vector<std::array<S, 3>> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& row = arr[i];
    const std::string path = key + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 3) throw InvalidInputError("expected a scalar triple at " + path);
    out.push_back({ps(row[0], path + "[0]"), ps(row[1], path + "[1]"), ps(row[2], path + "[2]")});
  }
  return out;
}

njson scalar_json(const Rational& q) { return rational_to_string(q); }

njson scalar_json(const Fp& x) {
  njson o;
  o["mod"] = std::to_string(x.modulus());
  o["res"] = std::to_string(x.value());
  return o;
}

njson field_json(const FieldDesc& f) {
  njson o;
  switch (f.kind) {
    case FieldKind::Rational:
      o["type"] = "rational";
      break;
    case FieldKind::Prime:
      o["type"] = "prime";
      o["p"] = std::to_string(f.p);
      break;
    case FieldKind::Cyclotomic:
      o["type"] = "cyclotomic";
      o["order"] = f.order;
      o["p"] = std::to_string(f.p);
      o["root"] = std::to_string(f.root);
      break;
  }
  return o;
}

template <typename S>
njson triples_json(const std::vector<std::array<S, 3>>& rows) {
  njson arr = njson::array();
  for (const auto& t : rows) arr.push_back(njson::array({scalar_json(t[0]), scalar_json(t[1]), scalar_json(t[2])}));
  return arr;
}

}  // namespace

std::size_t Document::row_count() const {
  return std::visit([](const auto& v) { return v.size(); }, payload);
}

Document parse_document(const std::string& bytes) {
  njson j;
  try {
    j = njson::parse(bytes);
  } catch (const std::exception& e) {
    throw InvalidInputError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInputError("document must be a JSON object");
  Document doc;
  doc.schema_version = j.value("schema-version", "1");
  if (doc.schema_version != "1") throw InvalidInputError("unsupported schema-version '" + doc.schema_version + "'");
  doc.field = parse_field(j.contains("field") ? j.at("field") : njson());
  doc.label = j.value("label", "");
  if (j.contains("provenance"))
    for (const auto& s : j.at("provenance")) doc.provenance.push_back(s.get<std::string>());

  const bool has_lines = j.contains("lines");
  const bool has_points = j.contains("points");
  if (has_lines == has_points)
    throw InvalidInputError("document must contain exactly one of 'lines' or 'points'");
  const std::string key = has_lines ? "lines" : "points";

  try {
    if (doc.field.kind == FieldKind::Rational) {
      auto triples = parse_triples<Rational>(j.at(key), key,
                                             [](const njson& s, const std::string& p) { return parse_rational_scalar(s, p); });
      if (has_lines) {
        std::vector<ProjLine<Rational>> lines;
        for (auto& t : triples) lines.emplace_back(t);
        doc.payload = LineArrangement<Rational>(std::move(lines), doc.label);
      } else {
        std::vector<ProjPoint<Rational>> pts;
        for (auto& t : triples) pts.emplace_back(t);
        doc.payload = PointConfiguration<Rational>(std::move(pts), doc.label);
      }
    } else {
      const FieldDesc& f = doc.field;
      auto triples = parse_triples<Fp>(j.at(key), key,
                                       [&](const njson& s, const std::string& p) { return parse_prime_scalar(s, f, p); });
      if (has_lines) {
        std::vector<ProjLine<Fp>> lines;
        for (auto& t : triples) lines.emplace_back(t);
        doc.payload = LineArrangement<Fp>(std::move(lines), doc.label);
      } else {
        std::vector<ProjPoint<Fp>> pts;
        for (auto& t : triples) pts.emplace_back(t);
        doc.payload = PointConfiguration<Fp>(std::move(pts), doc.label);
      }
    }
  } catch (const std::exception& e) {
    throw InvalidInputError("in '" + key + "': " + e.what());
  }

  if (j.contains("draw-hints")) {
    const auto& dh = j.at("draw-hints");
    if (!dh.is_array()) throw InvalidInputError("'draw-hints' must be an array");
    for (const auto& row : dh) {
      if (!row.is_array() || row.size() != 3) throw InvalidInputError("draw hint rows must be numeric triples");
      doc.draw_hints.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    if (doc.draw_hints.size() != doc.row_count())
      throw InvalidInputError("'draw-hints' length differs from the row count");
  }
  return doc;
}

std::string serialize_document(const Document& doc, int indent) {
  njson j;
  j["schema-version"] = doc.schema_version;
  j["field"] = field_json(doc.field);
  if (!doc.label.empty()) j["label"] = doc.label;
  if (!doc.provenance.empty()) j["provenance"] = doc.provenance;
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, LineArrangement<Rational>> || std::is_same_v<T, LineArrangement<Fp>>) {
          using Sc = std::decay_t<decltype(payload.lines()[0].coeffs()[0])>;
          std::vector<std::array<Sc, 3>> rows;
          for (const auto& l : payload.lines()) rows.push_back(l.coeffs());
          j["lines"] = triples_json(rows);
        } else {
          using Sc = std::decay_t<decltype(payload.points()[0].coords()[0])>;
          std::vector<std::array<Sc, 3>> rows;
          for (const auto& p : payload.points()) rows.push_back(p.coords());
          j["points"] = triples_json(rows);
        }
      },
      doc.payload);
  if (!doc.draw_hints.empty()) {
    njson arr = njson::array();
    for (const auto& h : doc.draw_hints) arr.push_back(njson::array({h[0], h[1], h[2]}));
    j["draw-hints"] = arr;
  }
  return j.dump(indent) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

Document document_from(LineArrangement<Rational> arr, std::string label) {
  Document d;
  d.label = label.empty() ? arr.label() : std::move(label);
  d.payload = std::move(arr);
  return d;
}

Document document_from(PointConfiguration<Rational> z, std::string label) {
  Document d;
  d.label = label.empty() ? z.label() : std::move(label);
  d.payload = std::move(z);
  return d;
}

Document document_from(LineArrangement<Fp> arr, const FieldDesc& field, std::string label) {
  Document d;
  d.field = field;
  d.label = label.empty() ? arr.label() : std::move(label);
  d.payload = std::move(arr);
  return d;
}

Document document_from(PointConfiguration<Fp> z, const FieldDesc& field, std::string label) {
  Document d;
  d.field = field;
  d.label = label.empty() ? z.label() : std::move(label);
  d.payload = std::move(z);
  return d;
}

Document dualize_document(const Document& doc) {
  Document out = doc;
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, LineArrangement<Rational>> || std::is_same_v<T, LineArrangement<Fp>>) {
          out.payload = dual_configuration(payload);
        } else if constexpr (std::is_same_v<T, PointConfiguration<Rational>>) {
          out.payload = dual_arrangement_of_points(payload);
        } else {
          out.payload = dual_arrangement_of_points(payload);
        }
      },
      doc.payload);
  if (!doc.label.empty()) out.label = "dual of " + doc.label;
  return out;
}

}  // namespace uxc
