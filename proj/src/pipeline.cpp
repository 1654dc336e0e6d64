#include "uxc/pipeline.hpp"

#include <chrono>
#include <map>

namespace uxc {

namespace {

json field_json(const FieldDesc& f) {
  json o;
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

std::string scalar_str(const Rational& q) { return rational_to_string(q); }
std::string scalar_str(const Fp& x) { return std::to_string(x.value()); }

template <typename S>
json triple_json(const std::array<S, 3>& t) {
  return json::array({scalar_str(t[0]), scalar_str(t[1]), scalar_str(t[2])});
}

json splitting_json(const SplittingType& st) { return json::array({st.a, st.b}); }

json params_json(const RunOptions& opt) {
  json p;
  p["seed"] = opt.seed;
  p["samples"] = opt.samples;
  p["primes"] = opt.primes;
  return p;
}

json primes_json(const std::vector<std::uint64_t>& primes) {
  json a = json::array();
  for (auto p : primes) a.push_back(std::to_string(p));
  return a;
}

template <typename F>
auto with_arrangement(const Document& doc, F&& f) {
  if (!doc.is_lines()) throw InvalidInputError("this operation needs an arrangement (a 'lines' document)");
  if (doc.is_rational()) return f(std::get<LineArrangement<Rational>>(doc.payload));
  return f(std::get<LineArrangement<Fp>>(doc.payload));
}

// The configuration a certification works on: the points themselves, or the
// duals of the lines when an arrangement is supplied.
template <typename F>
auto with_configuration(const Document& doc, F&& f) {
  if (doc.is_rational()) {
    if (doc.is_lines()) return f(dual_configuration(std::get<LineArrangement<Rational>>(doc.payload)));
    return f(std::get<PointConfiguration<Rational>>(doc.payload));
  }
  if (doc.is_lines()) return f(dual_configuration(std::get<LineArrangement<Fp>>(doc.payload)));
  return f(std::get<PointConfiguration<Fp>>(doc.payload));
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json report_header(const char* command, const Document& doc) {
  json r;
  r["schema-version"] = "1";
  r["command"] = command;
  r["input-digest"] = digest_hex(serialize_document(doc));
  if (!doc.label.empty()) r["label"] = doc.label;
  r["field"] = field_json(doc.field);
  return r;
}

template <typename S>
FatPointScheme<S> parse_fat_specs(const std::vector<std::string>& specs, std::uint64_t seed,
                                  const FieldDesc& field) {
  FatPointScheme<S> x;
  x.seed = seed;
  for (const auto& s : specs) {
    auto at = s.find('@');
    if (at == std::string::npos) throw InvalidInputError("fat spec must look like 'm@generic' or 'm@(x:y:z)'");
    unsigned mult = 0;
    try {
      mult = static_cast<unsigned>(std::stoul(s.substr(0, at)));
    } catch (const std::exception&) {
      throw InvalidInputError("bad multiplicity in fat spec '" + s + "'");
    }
    std::string where = s.substr(at + 1);
    if (where == "generic") {
      x.parts.push_back({std::nullopt, mult});
      continue;
    }
    if (where.size() < 2 || where.front() != '(' || where.back() != ')')
      throw InvalidInputError("bad support in fat spec '" + s + "'");
    std::string body = where.substr(1, where.size() - 2);
    std::array<std::string, 3> cs;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      auto colon = body.find(':', pos);
      if (i < 2 && colon == std::string::npos) throw InvalidInputError("support needs three ':'-separated scalars");
      cs[i] = body.substr(pos, i < 2 ? colon - pos : std::string::npos);
      pos = colon + 1;
    }
    if constexpr (std::is_same_v<S, Rational>) {
      x.parts.push_back({ProjPoint<Rational>(parse_rational(cs[0]), parse_rational(cs[1]), parse_rational(cs[2])), mult});
    } else {
      auto res = [&](const std::string& t) {
        try {
          return Fp(std::stoll(t), field.p);
        } catch (const std::exception&) {
          throw InvalidInputError("bad residue '" + t + "' in fat spec");
        }
      };
      x.parts.push_back({ProjPoint<Fp>(res(cs[0]), res(cs[1]), res(cs[2])), mult});
    }
  }
  return x;
}

std::pair<ChainPhase, unsigned> parse_stage(const std::string& stage, bool octagon) {
  if (stage.empty() || stage == "base") return {ChainPhase::Base, 0};
  auto split = [&](const std::string& prefix) -> std::optional<unsigned> {
    if (stage.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = stage.substr(prefix.size());
    if (rest.empty()) return std::nullopt;
    for (char c : rest)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return static_cast<unsigned>(std::stoul(rest));
  };
  // order matters: "ellp" before "ell", "mp" before "m"
  if (auto c = split("ellp")) return {ChainPhase::EllPrime, *c};
  if (auto c = split("ell")) return {ChainPhase::Ell, *c};
  if (auto c = split("mp")) return {ChainPhase::MPrime, *c};
  if (auto c = split("m")) return {ChainPhase::M, *c};
  throw InvalidInputError("bad chain stage '" + stage + "'; expected base, ell<k>, " +
                          (octagon ? "or m<k>" : "ellp<k>, m<k> or mp<k>"));
}

FieldDesc embedding_field(const CyclotomicEmbedding& emb) {
  FieldDesc f;
  f.kind = FieldKind::Cyclotomic;
  f.p = emb.modulus();
  f.order = emb.order();
  f.root = emb.root();
  return f;
}

}  // namespace

Document sing_document(const Document& doc, unsigned min_mult) {
  return with_arrangement(doc, [&](const auto& arr) {
    auto pts = sing_at_least(arr, min_mult);
    Document out;
    out.field = doc.field;
    out.label = (doc.label.empty() ? std::string("input") : doc.label) + ": sing>=" + std::to_string(min_mult);
    out.provenance = doc.provenance;
    out.provenance.push_back("sing-geq " + std::to_string(min_mult));
    out.payload = std::decay_t<decltype(pts)>(pts.points(), out.label);
    return out;
  });
}

Document dual_arrangement_document(const Document& doc) {
  return with_arrangement(doc, [&](const auto& arr) {
    auto dual = dual_arrangement(arr);
    Document out;
    out.field = doc.field;
    out.label = (doc.label.empty() ? std::string("input") : doc.label) + "^d";
    out.provenance = doc.provenance;
    out.provenance.push_back("dual arrangement of the singular points");
    out.payload = std::decay_t<decltype(dual)>(dual.lines(), out.label);
    return out;
  });
}

Document generate_family(const FamilyParams& p) {
  const std::string& fam = p.family;
  auto provenance = [&](Document& d, const std::string& extra = {}) {
    std::string s = "generated: family=" + fam;
    if (p.n) s += " N=" + std::to_string(p.n);
    if (fam.find("tictactoe") != std::string::npos) s += " k=" + std::to_string(p.k) + " j=" + std::to_string(p.j);
    if (fam.find("chain") != std::string::npos) s += " stage=" + p.stage;
    s += " seed=" + std::to_string(p.seed);
    if (!extra.empty()) s += " " + extra;
    d.provenance.push_back(s);
  };
  const unsigned bits = p.bits ? p.bits : default_prime_bits();

  if (fam == "pencil") {
    auto d = document_from(pencil(p.n));
    provenance(d);
    return d;
  }
  if (fam == "polygonal" || fam == "complete-polygonal") {
    const bool complete = fam == "complete-polygonal";
    if (p.n < 3) throw InvalidInputError("polygonal family needs N >= 3");
    if (p.field == "rational") {
      auto d = document_from(polygonal_rational(p.n, complete));
      provenance(d);
      return d;
    }
    auto emb = CyclotomicEmbedding::for_ngon(p.n, bits, p.seed);
    auto arr = polygonal_embedded(p.n, complete, emb);
    if (p.verify_primes >= 2) {
      auto emb2 = CyclotomicEmbedding::for_ngon(p.n, bits, p.seed + 0x9E37u);
      if (emb2.modulus() == emb.modulus() || !incidence_equivalent(arr, polygonal_embedded(p.n, complete, emb2)))
        throw InconclusiveError("polygonal construction disagrees between two embedding primes");
    }
    auto d = document_from(arr, embedding_field(emb));
    d.draw_hints = polygonal_hints(p.n, complete);
    provenance(d, "p=" + std::to_string(emb.modulus()));
    return d;
  }
  if (fam == "tictactoe" || fam == "complete-tictactoe") {
    auto d = document_from(tictactoe(p.k, p.j, fam == "complete-tictactoe"));
    provenance(d);
    return d;
  }
  if (fam == "b3") {
    auto d = document_from(b3_points());
    provenance(d);
    return d;
  }
  if (fam == "hexagon-chain") {
    auto [phase, count] = parse_stage(p.stage, false);
    auto d = document_from(hexagon_chain(phase, count));
    provenance(d);
    return d;
  }
  if (fam == "octagon-chain") {
    auto [phase, count] = parse_stage(p.stage, true);
    auto emb = CyclotomicEmbedding::for_ngon(8, bits, p.seed);
    auto arr = octagon_chain(phase, count, emb);
    if (p.verify_primes >= 2) {
      auto emb2 = CyclotomicEmbedding::for_ngon(8, bits, p.seed + 0x9E37u);
      if (emb2.modulus() == emb.modulus() || !incidence_equivalent(arr, octagon_chain(phase, count, emb2)))
        throw InconclusiveError("octagonal construction disagrees between two embedding primes");
    }
    auto d = document_from(arr, embedding_field(emb));
    d.draw_hints = octagon_chain_hints(phase, count);
    provenance(d, "p=" + std::to_string(emb.modulus()));
    return d;
  }
  if (fam == "dual-of") {
    if (!p.input) throw InvalidInputError("family dual-of needs an input document");
    return dual_arrangement_document(*p.input);
  }
  if (fam == "sing-geq-of") {
    if (!p.input) throw InvalidInputError("family sing-geq-of needs an input document");
    return sing_document(*p.input, p.min_mult);
  }
  throw InvalidInputError("unknown family '" + fam + "'");
}

json analyze_report(const Document& doc, const RunOptions& opt) {
  Stopwatch watch;
  const Document* target = &doc;
  Document dualized;
  json r = report_header("analyze", doc);
  if (!doc.is_lines()) {
    dualized = dualize_document(doc);
    target = &dualized;
    r["note"] = "input is a point configuration; analyzing the dual line arrangement";
  }
  with_arrangement(*target, [&](const auto& arr) {
    const auto& sing = singular_locus(arr);
    r["line-count"] = arr.size();
    r["full-rank"] = is_full_rank(arr);
    r["max-multiplicity"] = max_multiplicity(arr);
    r["singular-points"] = sing.entries.size();
    std::map<unsigned, unsigned> hist;
    for (const auto& e : sing.entries) hist[e.multiplicity]++;
    json h;
    for (auto [m, c] : hist) h[std::to_string(m)] = c;
    r["multiplicity-histogram"] = h;
    r["partition-identity"] = sing.partition_identity_holds(arr.size());
    auto ss = is_supersolvable(arr);
    json ssj;
    ssj["value"] = ss.value;
    if (ss.witness) {
      ssj["witness"] = triple_json(ss.witness->coords());
      ssj["witness-multiplicity"] = ss.witness_multiplicity;
    }
    r["supersolvable"] = ssj;
    json nsj;
    if (arr.size() >= 3) {
      auto ns = is_nearly_supersolvable(arr);
      nsj["value"] = ns.value;
      if (ns.witness) nsj["witness"] = triple_json(ns.witness->coords());
      if (!ns.note.empty()) nsj["note"] = ns.note;
    } else {
      nsj["value"] = false;
      nsj["note"] = "fewer than 3 lines";
    }
    r["nearly-supersolvable"] = nsj;

    json sj;
    if (ss.value) {
      sj["method"] = "supersolvable";
      sj["type"] = splitting_json(supersolvable_splitting(arr));
    } else {
      bool done = false;
      if (nsj["value"].get<bool>()) {
        try {
          sj["type"] = splitting_json(nearly_supersolvable_splitting(arr));
          sj["method"] = "nearly-supersolvable";
          done = true;
        } catch (const InconclusiveError& e) {
          sj["note"] = e.what();
        }
      }
      if (!done) {
        auto st = empirical_splitting(arr, opt.samples, opt.seed, opt.engine());
        sj["method"] = "empirical";
        sj["type"] = splitting_json(st);
      }
    }
    r["splitting"] = sj;
  });
  r["parameters"] = params_json(opt);
  if (opt.timing) r["timing-ms"] = watch.ms();
  return r;
}

json splitting_report(const Document& doc, const std::string& method, const json& chain_spec,
                      const RunOptions& opt) {
  Stopwatch watch;
  json r = report_header("splitting", doc);
  r["method"] = method;
  with_arrangement(doc, [&](const auto& arr) {
    using Arr = std::decay_t<decltype(arr)>;
    using Line = std::decay_t<decltype(arr.lines()[0])>;
    if (method == "empirical") {
      auto st = empirical_splitting(arr, opt.samples, opt.seed, opt.engine());
      r["type"] = splitting_json(st);
    } else if (method == "supersolvable") {
      r["type"] = splitting_json(supersolvable_splitting(arr));
    } else if (method == "nearly") {
      r["type"] = splitting_json(nearly_supersolvable_splitting(arr));
    } else if (method == "chain") {
      if (!chain_spec.is_object() || !chain_spec.contains("base-splitting") || !chain_spec.contains("steps"))
        throw InvalidInputError("chain spec needs 'base-splitting' and 'steps'");
      SplittingType base = SplittingType::normalized(chain_spec["base-splitting"][0].get<unsigned>(),
                                                     chain_spec["base-splitting"][1].get<unsigned>());
      std::vector<Line> steps;
      {
        // parse step lines through a one-document round trip over the same field
        json stepdoc;
        stepdoc["schema-version"] = "1";
        stepdoc["field"] = field_json(doc.field);
        stepdoc["lines"] = chain_spec["steps"];
        auto parsed = parse_document(stepdoc.dump());
        const auto& payload = std::get<Arr>(parsed.payload);
        steps = payload.lines();
      }
      auto out = addition_chain(arr, base, steps);
      json cert;
      cert["base"] = splitting_json(out.certificate.base);
      json sj = json::array();
      for (const auto& [line, step] : out.certificate.steps) {
        json e;
        e["line"] = triple_json(line.coeffs());
        e["restriction-count"] = step.restriction;
        e["incremented"] = std::string(1, step.incremented);
        e["after"] = splitting_json(step.after);
        sj.push_back(e);
      }
      cert["steps"] = sj;
      r["certificate"] = cert;
      if (out.ok) {
        r["type"] = splitting_json(out.certificate.final);
      } else {
        r["failed-step"] = out.failed_step;
        r["failure"] = out.failure;
      }
    } else {
      throw InvalidInputError("unknown splitting method '" + method + "'");
    }
  });
  r["parameters"] = params_json(opt);
  if (opt.timing) r["timing-ms"] = watch.ms();
  return r;
}

json certify_report(const Document& doc, std::optional<unsigned> curve_degree,
                    const std::vector<std::string>& fat_specs, const RunOptions& opt) {
  Stopwatch watch;
  json r = report_header("certify", doc);
  if (doc.is_lines()) r["note"] = "input is an arrangement; certifying its dual point configuration";
  with_configuration(doc, [&](const auto& z) {
    using S = std::decay_t<decltype(z.points()[0].coords()[0])>;
    if (!fat_specs.empty()) {
      if (!curve_degree) throw InvalidInputError("fat-point certification needs --degree");
      auto x = parse_fat_specs<S>(fat_specs, opt.seed, doc.field);
      auto v = certify_problem_b(z, x, *curve_degree, opt.samples, opt.engine());
      r["mode"] = "fat-point-scheme";
      r["degree"] = *curve_degree;
      r["unexpected"] = v.unexpected;
      r["dimension"] = v.actual;
      r["expected"] = v.expected_dim;
      r["stable"] = v.report.stable;
      r["primes-used"] = primes_json(v.report.primes_used);
    } else if (curve_degree) {
      if (*curve_degree < 2) throw InvalidInputError("curve degree must be >= 2");
      auto v = certify_degree(z, *curve_degree - 1, opt.samples, opt.seed, opt.engine());
      r["mode"] = "single-degree";
      r["degree"] = *curve_degree;
      r["unexpected"] = v.value;
      r["splitting"] = splitting_json(v.splitting);
      json reasons;
      reasons["exponent-range"] = v.condition_i;
      reasons["independent-conditions-at-t"] = v.condition_ii;
      reasons["t-index"] = v.t;
      r["reasons"] = reasons;
      json defn;
      defn["dimension"] = v.actual_dimension;
      defn["expected"] = v.expected_dim;
      defn["unexpected"] = v.definition_route;
      r["definition-route"] = defn;
      r["routes-consistent"] = v.consistent;
    } else {
      auto v = certify(z, opt.samples, opt.seed, opt.engine());
      r["mode"] = "full";
      r["admits"] = v.admits;
      if (!v.reasons.degenerate) r["splitting"] = splitting_json(v.splitting);
      json reasons;
      reasons["degenerate"] = v.reasons.degenerate;
      reasons["size"] = v.reasons.config_size;
      reasons["max-collinear"] = v.reasons.max_collinear;
      reasons["size-condition"] = v.reasons.size_condition;
      reasons["collinearity-condition"] = v.reasons.collinearity_condition;
      r["reasons"] = reasons;
      if (!v.reasons.degenerate) r["t-index"] = v.t_index_value;
      if (v.admits) {
        json interval;
        interval["low-exclusive"] = v.degree_low;
        interval["high-inclusive"] = v.degree_high;
        r["degree-interval"] = interval;
        json uniq;
        uniq["minimal-degree"] = v.degree_low + 1;
        uniq["dimension-at-minimal-degree"] = *v.minimal_degree_dimension;
        uniq["unique-minimal-curve"] = *v.minimal_degree_dimension == 1;
        uniq["irreducibility"] = "not verified";
        r["uniqueness"] = uniq;
        if (v.curve) {
          json c;
          c["degree"] = v.curve->degree;
          c["monomial-order"] = "graded-lex x0>x1>x2";
          json coeffs = json::array();
          for (const auto& co : v.curve->coefficients) coeffs.push_back(scalar_str(co));
          c["coefficients"] = coeffs;
          c["point"] = triple_json(v.curve->point.coords());
          r["curve"] = c;
        }
      }
      r["stable"] = v.stable;
      r["primes-used"] = primes_json(v.primes_used);
    }
  });
  r["parameters"] = params_json(opt);
  if (opt.timing) r["timing-ms"] = watch.ms();
  return r;
}

json dim_report(const Document& doc, unsigned degree, const std::vector<std::string>& fat_specs,
                const RunOptions& opt) {
  Stopwatch watch;
  json r = report_header("dim", doc);
  with_configuration(doc, [&](const auto& z) {
    using S = std::decay_t<decltype(z.points()[0].coords()[0])>;
    auto x = parse_fat_specs<S>(fat_specs, opt.seed, doc.field);
    auto rep = ideal_dimension(z, x, degree, opt.samples, opt.engine());
    r["degree"] = rep.degree;
    r["dimension"] = rep.dimension;
    r["expected"] = expected_dimension(z, x, degree, opt.engine());
    r["samples-used"] = rep.samples_used;
    r["primes-used"] = primes_json(rep.primes_used);
    r["stable"] = rep.stable;
  });
  r["parameters"] = params_json(opt);
  if (opt.timing) r["timing-ms"] = watch.ms();
  return r;
}

}  // namespace uxc
