#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "uxc/arrangement.hpp"
#include "uxc/prime_field.hpp"

namespace uxc {

enum class FieldKind { Rational, Prime, Cyclotomic };

struct FieldDesc {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;
  unsigned order = 0;      // cyclotomic root order
  std::uint64_t root = 0;  // the recorded primitive root (reproducibility)
};

// One JSON document: an arrangement (lines) or a configuration (points) over
// one declared field, plus bookkeeping. Exactly one of lines/points exists;
// duality converts between the two.
struct Document {
  std::string schema_version = "1";
  FieldDesc field;
  std::string label;
  std::vector<std::string> provenance;
  std::variant<PointConfiguration<Rational>, LineArrangement<Rational>, PointConfiguration<Fp>, LineArrangement<Fp>>
      payload;
  std::vector<std::array<double, 3>> draw_hints;  // optional, parallel to the rows

  bool is_lines() const {
    return std::holds_alternative<LineArrangement<Rational>>(payload) ||
           std::holds_alternative<LineArrangement<Fp>>(payload);
  }
  bool is_rational() const {
    return std::holds_alternative<LineArrangement<Rational>>(payload) ||
           std::holds_alternative<PointConfiguration<Rational>>(payload);
  }
  std::size_t row_count() const;
};

// Validated parse; errors carry a path into the JSON ("lines[3]").
Document parse_document(const std::string& bytes);
std::string serialize_document(const Document& doc, int indent = 2);

std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

Document document_from(LineArrangement<Rational> arr, std::string label = {});
Document document_from(PointConfiguration<Rational> z, std::string label = {});
Document document_from(LineArrangement<Fp> arr, const FieldDesc& field, std::string label = {});
Document document_from(PointConfiguration<Fp> z, const FieldDesc& field, std::string label = {});

// Coordinate-swap duality at the document level: lines become points and the
// other way around. Field, label and hints carry over.
Document dualize_document(const Document& doc);

}  // namespace uxc
