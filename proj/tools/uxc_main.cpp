// uxc command-line tool. All functionality goes through the C API of the
// shared library; this file only shuffles bytes and flags.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "uxc.h"

namespace {

using njson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInternal = 4;

int exit_code(uxc_status s) { return static_cast<int>(s); }

[[noreturn]] void fail(uxc_status s) {
  std::cerr << "error: " << uxc_last_error() << "\n";
  std::exit(exit_code(s));
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(kExitInvalid);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    std::exit(kExitInvalid);
  }
  out << bytes;
}

struct Handle {
  uxc_doc* doc = nullptr;
  ~Handle() { uxc_doc_free(doc); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { uxc_string_free(s); }
};

Handle parse_or_die(const std::string& bytes) {
  Handle h;
  uxc_status st = uxc_doc_parse(bytes.c_str(), &h.doc);
  if (st != UXC_OK) fail(st);
  return h;
}

struct CommonOpts {
  std::uint64_t seed = 1;
  unsigned samples = 3;
  unsigned primes = 2;
  unsigned prime_bits = 0;
  bool timing = false;
  bool json_out = false;

  njson base_options() const {
    njson o;
    o["seed"] = seed;
    o["samples"] = samples;
    o["primes"] = primes;
    if (prime_bits) o["prime-bits"] = prime_bits;
    if (timing) o["timing"] = true;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--seed", c.seed, "random seed (all randomness derives from it)");
  cmd->add_option("--samples", c.samples, "generic-point samples per dimension");
  cmd->add_option("--primes", c.primes, "verification primes that must agree");
  cmd->add_option("--prime-bits", c.prime_bits, "bit size of sampled primes (default env UXC_PRIME_BITS or 62)");
  cmd->add_flag("--timing", c.timing, "include timings in reports");
  cmd->add_flag("--json", c.json_out, "emit the full JSON report");
}

// Minimal human-readable summaries; --json gives the full, replayable report.
std::string summarize(const std::string& command, const njson& r) {
  std::ostringstream s;
  if (command == "analyze") {
    s << r.value("label", std::string("arrangement")) << ": " << r["line-count"].get<unsigned>() << " lines, max mult "
      << r["max-multiplicity"].get<unsigned>() << ", supersolvable "
      << (r["supersolvable"]["value"].get<bool>() ? "yes" : "no") << ", splitting ("
      << r["splitting"]["type"][0].get<unsigned>() << "," << r["splitting"]["type"][1].get<unsigned>() << ") via "
      << r["splitting"]["method"].get<std::string>() << "\n";
  } else if (command == "splitting") {
    if (r.contains("type"))
      s << "splitting (" << r["type"][0].get<unsigned>() << "," << r["type"][1].get<unsigned>() << ") via "
        << r["method"].get<std::string>() << "\n";
    else
      s << "chain failed at step " << r["failed-step"].get<unsigned>() << ": " << r["failure"].get<std::string>()
        << "\n";
  } else if (command == "certify") {
    std::string mode = r.value("mode", "full");
    if (mode == "full") {
      if (r["admits"].get<bool>()) {
        s << "admits unexpected curves: degrees (" << r["degree-interval"]["low-exclusive"].get<unsigned>() << ", "
          << r["degree-interval"]["high-inclusive"].get<unsigned>() << "], splitting (" << r["splitting"][0].get<unsigned>()
          << "," << r["splitting"][1].get<unsigned>() << ")";
        if (r["uniqueness"]["unique-minimal-curve"].get<bool>())
          s << ", unique curve of degree " << r["uniqueness"]["minimal-degree"].get<unsigned>();
        s << "\n";
      } else {
        s << "no unexpected curves\n";
      }
    } else {
      s << (r["unexpected"].get<bool>() ? "unexpected" : "expected") << " at degree " << r["degree"].get<unsigned>()
        << "\n";
    }
  } else if (command == "dim") {
    s << "dimension " << r["dimension"].get<unsigned>() << " (expected " << r["expected"].get<unsigned>()
      << ") in degree " << r["degree"].get<unsigned>() << (r["stable"].get<bool>() ? "" : " [unstable]") << "\n";
  }
  return s.str();
}

using ReportFn = uxc_status (*)(const uxc_doc*, const char*, char**);

int run_report(ReportFn fn, const char* command, const std::vector<std::string>& inputs, const njson& options,
               bool json_out, const std::string& out_path) {
  // batch mode fans out per input, merging outputs in input order
  std::vector<std::future<std::pair<uxc_status, std::string>>> futures;
  std::vector<std::string> bytes;
  for (const auto& path : inputs) bytes.push_back(read_input(path));
  const std::string opt_str = options.dump();
  for (const auto& b : bytes) {
    futures.push_back(std::async(inputs.size() > 1 ? std::launch::async : std::launch::deferred,
                                 [&, doc_bytes = b]() -> std::pair<uxc_status, std::string> {
                                   Handle h;
                                   uxc_status st = uxc_doc_parse(doc_bytes.c_str(), &h.doc);
                                   if (st != UXC_OK) return {st, uxc_last_error()};
                                   OwnedString rep;
                                   st = fn(h.doc, opt_str.c_str(), &rep.s);
                                   if (st != UXC_OK) return {st, uxc_last_error()};
                                   return {UXC_OK, std::string(rep.s)};
                                 }));
  }
  std::string merged;
  int worst = kExitOk;
  for (auto& f : futures) {
    auto [st, text] = f.get();
    if (st != UXC_OK) {
      std::cerr << "error: " << text << "\n";
      worst = std::max(worst, exit_code(st));
      continue;
    }
    merged += json_out ? text : summarize(command, njson::parse(text));
  }
  if (worst == kExitOk) write_output(out_path, merged);
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uxc: exact line-arrangement analysis and unexpected-curve certification"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  // generate
  auto* gen = app.add_subcommand("generate", "construct a named arrangement family");
  std::string family, stage = "base", field, gen_out;
  unsigned N = 0, K = 0, J = 0, min_mult = 2, bits = 0, verify_primes = 2;
  CommonOpts gen_common;
  std::string gen_input;
  gen->add_option("--family", family,
                  "pencil | polygonal | complete-polygonal | tictactoe | complete-tictactoe | b3 | hexagon-chain | "
                  "octagon-chain | dual-of | sing-geq-of")
      ->required();
  gen->add_option("--N", N, "polygon size / pencil size");
  gen->add_option("--k", K, "grid half-width");
  gen->add_option("--j", J, "diagonal half-width");
  gen->add_option("--stage", stage, "chain stage: base, ell<i>, ellp<i>, m<i>, mp<i>");
  gen->add_option("--min-mult", min_mult, "multiplicity threshold for sing-geq-of");
  gen->add_option("--field", field, "rational | cyclotomic (default: family-dependent)");
  gen->add_option("--bits", bits, "prime bit size for embedded constructions");
  gen->add_option("--input", gen_input, "input document for dual-of / sing-geq-of ('-' for stdin)");
  gen->add_option("-o,--output", gen_out, "output path (default stdout)");
  gen->add_option("--seed", gen_common.seed, "random seed");
  gen->add_option("--verify-primes", verify_primes, "independent primes that must agree on the incidence structure");

  // analyze / splitting / certify / dim share flags
  auto* analyze = app.add_subcommand("analyze", "combinatorial summary and splitting type");
  auto* splitting = app.add_subcommand("splitting", "splitting type by a chosen route");
  auto* certify = app.add_subcommand("certify", "unexpected-curve verdict");
  auto* dim = app.add_subcommand("dim", "dimension of a linear system with fat points");
  auto* dual = app.add_subcommand("dual", "swap lines and points by duality");
  auto* sing = app.add_subcommand("sing", "singular points of multiplicity >= k");
  auto* render = app.add_subcommand("render", "SVG picture in the disk model");

  std::vector<std::string> an_inputs{"-"}, ce_inputs{"-"};
  std::string sp_input = "-", di_input = "-", du_input = "-", si_input = "-", re_input = "-";
  std::string an_out, sp_out, ce_out, di_out, du_out, si_out, re_out;
  CommonOpts an_c, sp_c, ce_c, di_c;
  std::string sp_method = "empirical", sp_chain_file;
  std::optional<unsigned> ce_degree;
  std::vector<std::string> ce_fat, di_fat;
  unsigned di_degree = 0, si_min = 2, re_size = 640;
  double re_radius = 1.8;

  analyze->add_option("input", an_inputs, "document(s); '-' for stdin");
  analyze->add_option("-o,--report", an_out, "output path");
  add_common(analyze, an_c);

  splitting->add_option("input", sp_input, "arrangement document");
  splitting->add_option("--method", sp_method, "empirical | supersolvable | nearly | chain");
  splitting->add_option("--chain-file", sp_chain_file, "JSON with base-splitting and steps");
  splitting->add_option("-o,--report", sp_out, "output path");
  add_common(splitting, sp_c);

  certify->add_option("input", ce_inputs, "document(s); arrangements are dualized");
  certify->add_option("--degree", [&ce_degree](const std::vector<std::string>& v) {
    try {
      ce_degree = static_cast<unsigned>(std::stoul(v.at(0)));
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }, "curve degree for a single-degree certificate");
  certify->add_option("--fat", ce_fat, "fat-point spec m@generic or m@(x:y:z); repeatable");
  certify->add_option("-o,--report", ce_out, "output path");
  add_common(certify, ce_c);

  dim->add_option("input", di_input, "points document");
  dim->add_option("--degree", di_degree, "degree of the linear system")->required();
  dim->add_option("--fat", di_fat, "fat-point spec m@generic or m@(x:y:z); repeatable");
  dim->add_option("-o,--report", di_out, "output path");
  add_common(dim, di_c);

  dual->add_option("input", du_input, "document");
  dual->add_option("-o,--output", du_out, "output path");

  sing->add_option("input", si_input, "arrangement document");
  sing->add_option("--min-mult", si_min, "multiplicity threshold");
  sing->add_option("-o,--output", si_out, "output path");

  render->add_option("input", re_input, "document");
  render->add_option("--size", re_size, "canvas size in pixels");
  render->add_option("--radius", re_radius, "plane radius mapped to the disk");
  render->add_option("-o,--output", re_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  if (gen->parsed()) {
    njson params;
    params["family"] = family;
    if (N) params["N"] = N;
    params["k"] = K;
    params["j"] = J;
    params["stage"] = stage;
    params["min-mult"] = min_mult;
    if (!field.empty()) params["field"] = field;
    if (bits) params["bits"] = bits;
    params["seed"] = gen_common.seed;
    params["verify-primes"] = verify_primes;
    Handle h;
    uxc_status st;
    if (family == "dual-of" || family == "sing-geq-of") {
      if (gen_input.empty()) {
        std::cerr << "error: --input required for " << family << "\n";
        return kExitInvalid;
      }
      Handle in = parse_or_die(read_input(gen_input));
      st = family == "dual-of" ? uxc_doc_dual_arrangement(in.doc, &h.doc)
                               : uxc_doc_sing(in.doc, min_mult, &h.doc);
    } else {
      st = uxc_generate(params.dump().c_str(), &h.doc);
    }
    if (st != UXC_OK) fail(st);
    OwnedString out;
    st = uxc_doc_to_json(h.doc, &out.s);
    if (st != UXC_OK) fail(st);
    write_output(gen_out, out.s);
    return kExitOk;
  }

  if (analyze->parsed()) {
    return run_report(&uxc_analyze, "analyze", an_inputs, an_c.base_options(), an_c.json_out, an_out);
  }

  if (splitting->parsed()) {
    njson options = sp_c.base_options();
    options["method"] = sp_method;
    if (!sp_chain_file.empty()) {
      try {
        options["chain"] = njson::parse(read_input(sp_chain_file));
      } catch (const std::exception& e) {
        std::cerr << "error: bad chain file: " << e.what() << "\n";
        return kExitInvalid;
      }
    }
    return run_report(&uxc_splitting, "splitting", {sp_input}, options, sp_c.json_out, sp_out);
  }

  if (certify->parsed()) {
    njson options = ce_c.base_options();
    if (ce_degree) options["degree"] = *ce_degree;
    if (!ce_fat.empty()) options["fat"] = ce_fat;
    return run_report(&uxc_certify, "certify", ce_inputs, options, ce_c.json_out, ce_out);
  }

  if (dim->parsed()) {
    njson options = di_c.base_options();
    options["degree"] = di_degree;
    if (!di_fat.empty()) options["fat"] = di_fat;
    return run_report(&uxc_dimension, "dim", {di_input}, options, di_c.json_out, di_out);
  }

  if (dual->parsed()) {
    Handle in = parse_or_die(read_input(du_input));
    Handle out;
    uxc_status st = uxc_doc_dualize(in.doc, &out.doc);
    if (st != UXC_OK) fail(st);
    OwnedString s;
    st = uxc_doc_to_json(out.doc, &s.s);
    if (st != UXC_OK) fail(st);
    write_output(du_out, s.s);
    return kExitOk;
  }

  if (sing->parsed()) {
    Handle in = parse_or_die(read_input(si_input));
    Handle out;
    uxc_status st = uxc_doc_sing(in.doc, si_min, &out.doc);
    if (st != UXC_OK) fail(st);
    OwnedString s;
    st = uxc_doc_to_json(out.doc, &s.s);
    if (st != UXC_OK) fail(st);
    write_output(si_out, s.s);
    return kExitOk;
  }

  if (render->parsed()) {
    Handle in = parse_or_die(read_input(re_input));
    njson options;
    options["size"] = re_size;
    options["radius"] = re_radius;
    OwnedString s;
    uxc_status st = uxc_render_svg(in.doc, options.dump().c_str(), &s.s);
    if (st != UXC_OK) fail(st);
    write_output(re_out, s.s);
    return kExitOk;
  }

  return kExitInvalid;
}
