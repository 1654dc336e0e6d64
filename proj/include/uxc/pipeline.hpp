#pragma once

#include <json.hpp>

#include <optional>

#include "uxc/certifier.hpp"
#include "uxc/document.hpp"
#include "uxc/generators.hpp"

namespace uxc {

using json = nlohmann::ordered_json;

struct RunOptions {
  std::uint64_t seed = 1;
  unsigned samples = 3;
  unsigned primes = 2;
  unsigned prime_bits = 0;
  bool timing = false;

  EngineOptions engine() const {
    EngineOptions e;
    e.verify_primes = primes < 2 ? 2 : primes;
    e.prime_bits = prime_bits;
    return e;
  }
};

struct FamilyParams {
  std::string family;
  unsigned n = 0;
  unsigned k = 0;
  unsigned j = 0;
  std::string stage = "base";
  unsigned min_mult = 2;
  std::string field;  // "", "rational", "cyclotomic"
  unsigned bits = 0;
  std::uint64_t seed = 1;
  unsigned verify_primes = 2;
  std::optional<Document> input;  // dual-of, sing-geq-of
};

// Families: pencil, polygonal, complete-polygonal, tictactoe,
// complete-tictactoe, b3, hexagon-chain, octagon-chain, dual-of, sing-geq-of.
// Prime-field constructions are rebuilt at a second independent prime and the
// incidence structures must agree before the document is emitted.
Document generate_family(const FamilyParams& p);

Document sing_document(const Document& doc, unsigned min_mult);
Document dual_arrangement_document(const Document& doc);

json analyze_report(const Document& doc, const RunOptions& opt);
json splitting_report(const Document& doc, const std::string& method, const json& chain_spec, const RunOptions& opt);
// certify: full verdict by default; curve_degree switches to the per-degree
// test (curve degree, the external convention); fat specs plus degree run the
// generalized fat-point comparison.
json certify_report(const Document& doc, std::optional<unsigned> curve_degree,
                    const std::vector<std::string>& fat_specs, const RunOptions& opt);
json dim_report(const Document& doc, unsigned degree, const std::vector<std::string>& fat_specs,
                const RunOptions& opt);

}  // namespace uxc
