#include "uxc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "uxc/pipeline.hpp"
#include "uxc/svg.hpp"

namespace {

thread_local std::string g_last_error;

struct DocWrap {
  uxc::Document doc;
};

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
uxc_status guarded(F&& f) {
  try {
    f();
    return UXC_OK;
  } catch (const uxc::InvalidInputError& e) {
    g_last_error = e.what();
    return UXC_ERR_INVALID;
  } catch (const uxc::InconclusiveError& e) {
    g_last_error = e.what();
    return UXC_ERR_INCONCLUSIVE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UXC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return UXC_ERR_INTERNAL;
  }
}

uxc::json parse_options(const char* options_json) {
  if (!options_json || !*options_json) return uxc::json::object();
  try {
    auto j = uxc::json::parse(options_json);
    if (!j.is_object()) throw uxc::InvalidInputError("options must be a JSON object");
    return j;
  } catch (const uxc::InvalidInputError&) {
    throw;
  } catch (const std::exception& e) {
    throw uxc::InvalidInputError(std::string("options are not valid JSON: ") + e.what());
  }
}

uxc::RunOptions run_options(const uxc::json& j) {
  uxc::RunOptions o;
  o.seed = j.value("seed", 1ull);
  o.samples = j.value("samples", 3u);
  o.primes = j.value("primes", 2u);
  o.prime_bits = j.value("prime-bits", 0u);
  o.timing = j.value("timing", false);
  return o;
}

std::vector<std::string> fat_list(const uxc::json& j) {
  std::vector<std::string> out;
  if (j.contains("fat"))
    for (const auto& f : j.at("fat")) out.push_back(f.get<std::string>());
  return out;
}

}  // namespace

extern "C" {

const char* uxc_version(void) { return "1.0.0"; }

const char* uxc_last_error(void) { return g_last_error.c_str(); }

void uxc_string_free(char* s) { std::free(s); }

void uxc_doc_free(uxc_doc* doc) { delete reinterpret_cast<DocWrap*>(doc); }

uxc_status uxc_doc_parse(const char* json, uxc_doc** out) {
  return guarded([&] {
    if (!json || !out) throw uxc::InvalidInputError("null argument");
    auto* w = new DocWrap{uxc::parse_document(json)};
    *out = reinterpret_cast<uxc_doc*>(w);
  });
}

uxc_status uxc_doc_to_json(const uxc_doc* doc, char** out) {
  return guarded([&] {
    if (!doc || !out) throw uxc::InvalidInputError("null argument");
    *out = dup_string(uxc::serialize_document(reinterpret_cast<const DocWrap*>(doc)->doc));
  });
}

uxc_status uxc_generate(const char* params_json, uxc_doc** out) {
  return guarded([&] {
    if (!out) throw uxc::InvalidInputError("null argument");
    auto j = parse_options(params_json);
    uxc::FamilyParams p;
    p.family = j.value("family", "");
    p.n = j.value("N", 0u);
    p.k = j.value("k", 0u);
    p.j = j.value("j", 0u);
    p.stage = j.value("stage", "base");
    p.min_mult = j.value("min-mult", 2u);
    p.field = j.value("field", "");
    p.bits = j.value("bits", 0u);
    p.seed = j.value("seed", 1ull);
    p.verify_primes = j.value("verify-primes", 2u);
    auto* w = new DocWrap{uxc::generate_family(p)};
    *out = reinterpret_cast<uxc_doc*>(w);
  });
}

uxc_status uxc_doc_dualize(const uxc_doc* doc, uxc_doc** out) {
  return guarded([&] {
    if (!doc || !out) throw uxc::InvalidInputError("null argument");
    auto* w = new DocWrap{uxc::dualize_document(reinterpret_cast<const DocWrap*>(doc)->doc)};
    *out = reinterpret_cast<uxc_doc*>(w);
  });
}

uxc_status uxc_doc_sing(const uxc_doc* doc, unsigned min_mult, uxc_doc** out) {
  return guarded([&] {
    if (!doc || !out) throw uxc::InvalidInputError("null argument");
    auto* w = new DocWrap{uxc::sing_document(reinterpret_cast<const DocWrap*>(doc)->doc, min_mult)};
    *out = reinterpret_cast<uxc_doc*>(w);
  });
}

uxc_status uxc_doc_dual_arrangement(const uxc_doc* doc, uxc_doc** out) {
  return guarded([&] {
    if (!doc || !out) throw uxc::InvalidInputError("null argument");
    auto* w = new DocWrap{uxc::dual_arrangement_document(reinterpret_cast<const DocWrap*>(doc)->doc)};
    *out = reinterpret_cast<uxc_doc*>(w);
  });
}

uxc_status uxc_analyze(const uxc_doc* doc, const char* options_json, char** report) {
  return guarded([&] {
    if (!doc || !report) throw uxc::InvalidInputError("null argument");
    auto j = parse_options(options_json);
    auto r = uxc::analyze_report(reinterpret_cast<const DocWrap*>(doc)->doc, run_options(j));
    *report = dup_string(r.dump(2) + "\n");
  });
}

uxc_status uxc_splitting(const uxc_doc* doc, const char* options_json, char** report) {
  return guarded([&] {
    if (!doc || !report) throw uxc::InvalidInputError("null argument");
    auto j = parse_options(options_json);
    std::string method = j.value("method", "empirical");
    uxc::json chain = j.contains("chain") ? j.at("chain") : uxc::json();
    auto r = uxc::splitting_report(reinterpret_cast<const DocWrap*>(doc)->doc, method, chain, run_options(j));
    *report = dup_string(r.dump(2) + "\n");
  });
}

uxc_status uxc_certify(const uxc_doc* doc, const char* options_json, char** report) {
  return guarded([&] {
    if (!doc || !report) throw uxc::InvalidInputError("null argument");
    auto j = parse_options(options_json);
    std::optional<unsigned> degree;
    if (j.contains("degree")) degree = j.at("degree").get<unsigned>();
    auto r = uxc::certify_report(reinterpret_cast<const DocWrap*>(doc)->doc, degree, fat_list(j), run_options(j));
    *report = dup_string(r.dump(2) + "\n");
  });
}

uxc_status uxc_dimension(const uxc_doc* doc, const char* options_json, char** report) {
  return guarded([&] {
    if (!doc || !report) throw uxc::InvalidInputError("null argument");
    auto j = parse_options(options_json);
    if (!j.contains("degree")) throw uxc::InvalidInputError("dimension query needs a degree");
    auto r = uxc::dim_report(reinterpret_cast<const DocWrap*>(doc)->doc, j.at("degree").get<unsigned>(),
                             fat_list(j), run_options(j));
    *report = dup_string(r.dump(2) + "\n");
  });
}

uxc_status uxc_render_svg(const uxc_doc* doc, const char* options_json, char** svg) {
  return guarded([&] {
    if (!doc || !svg) throw uxc::InvalidInputError("null argument");
    auto j = parse_options(options_json);
    uxc::RenderOptions opt;
    opt.size = j.value("size", 640u);
    opt.radius = j.value("radius", 1.8);
    *svg = dup_string(uxc::render_svg(reinterpret_cast<const DocWrap*>(doc)->doc, opt));
  });
}

}  // extern "C"
