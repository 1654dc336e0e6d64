#pragma once

#include "uxc/splitting.hpp"

namespace uxc {

struct VerdictReasons {
  bool degenerate = false;
  unsigned config_size = 0;
  unsigned max_collinear = 0;
  bool size_condition = false;         // 2a + 2 < |Z|
  bool collinearity_condition = false;  // no a + 2 of the points collinear
};

template <typename S>
struct UnexpectedVerdict {
  bool admits = false;
  SplittingType splitting;  // of the dual line arrangement
  // curve degrees j with degree_low < j <= degree_high, valid when admits
  unsigned degree_low = 0;
  unsigned degree_high = 0;
  unsigned t_index_value = 0;
  VerdictReasons reasons;
  bool stable = true;
  std::vector<std::uint64_t> primes_used;
  std::optional<CurveResult<S>> curve;  // the unique curve of minimal degree
  std::optional<unsigned> minimal_degree_dimension;
};

// Existence, degree range and the unique minimal curve, decided through the
// splitting type of the dual arrangement: the configuration admits unexpected
// curves iff 2a + 2 < |Z| and no a + 2 of its points are collinear, in which
// case the curve degrees are exactly a < j <= |Z| - a - 2 = b - 1 and the
// degree-(a+1) curve is unique.
template <typename S>
UnexpectedVerdict<S> certify(const PointConfiguration<S>& z, unsigned samples, std::uint64_t seed,
                             const EngineOptions& opt = {}, bool want_curve = true) {
  UnexpectedVerdict<S> v;
  v.reasons.config_size = static_cast<unsigned>(z.size());
  if (z.size() < 3) {
    v.reasons.degenerate = true;
    return v;
  }
  auto m = multiplicity_index(z, samples, seed, opt);
  v.stable = m.stable;
  v.primes_used = m.primes_used;
  const unsigned n = static_cast<unsigned>(z.size());
  v.splitting = SplittingType::normalized(m.value, n - 1 - m.value);
  const unsigned a = v.splitting.a;
  v.t_index_value = t_index(z, opt);
  v.reasons.max_collinear = static_cast<unsigned>(max_collinear(z));
  v.reasons.size_condition = 2 * a + 2 < n;
  v.reasons.collinearity_condition = v.reasons.max_collinear < a + 2;
  v.admits = v.reasons.size_condition && v.reasons.collinearity_condition;
  if (v.admits) {
    v.degree_low = a;
    v.degree_high = n - a - 2;  // = b - 1
    auto rep = ideal_dimension(z, FatPointScheme<S>::generic(a, seed), a + 1, samples, opt);
    v.minimal_degree_dimension = rep.dimension;
    if (rep.dimension != 1)
      throw InconclusiveError("admitting configuration with minimal-degree system dimension " +
                              std::to_string(rep.dimension) + ", expected 1");
    if (want_curve) v.curve = unexpected_curve_equation(z, a, seed, opt);
  }
  return v;
}

struct DegreeVerdict {
  bool value = false;       // exponent-route verdict
  bool condition_i = false;   // a <= j <= b - 2
  bool condition_ii = false;  // Z imposes independent conditions in degree t
  bool definition_route = false;  // dim excess at degree j+1 over the expected count
  bool consistent = false;
  SplittingType splitting;
  unsigned t = 0;
  unsigned actual_dimension = 0;
  unsigned expected_dim = 0;
};

// Per-degree test. j is the fat-point multiplicity; the curve degree is j+1.
// Route one: a <= j <= b-2 together with independence of the conditions Z
// imposes in degree t_Z. Route two, the raw definition: the degree-(j+1)
// system with a generic j-fold point is larger than expected. Both are
// evaluated and compared.
template <typename S>
DegreeVerdict certify_degree(const PointConfiguration<S>& z, unsigned j, unsigned samples, std::uint64_t seed,
                             const EngineOptions& opt = {}) {
  if (j < 1) throw InvalidInputError("certify_degree: j must be >= 1");
  if (z.size() < 1) throw InvalidInputError("certify_degree: empty configuration");
  DegreeVerdict out;
  auto m = multiplicity_index(z, samples, seed, opt);
  const unsigned n = static_cast<unsigned>(z.size());
  out.splitting = SplittingType::normalized(m.value, n - 1 - m.value);
  out.condition_i = out.splitting.a <= j && j + 2 <= out.splitting.b;
  out.t = t_index(z, opt);
  auto at_t = ideal_dimension(z, FatPointScheme<S>::none(), out.t, 1, opt);
  out.condition_ii = static_cast<long long>(at_t.dimension) ==
                     static_cast<long long>(monomial_count(out.t)) - static_cast<long long>(n);
  out.value = out.condition_i && out.condition_ii;

  auto actual = ideal_dimension(z, FatPointScheme<S>::generic(j, seed), j + 1, samples, opt);
  out.actual_dimension = actual.dimension;
  out.expected_dim = expected_dimension(z, FatPointScheme<S>::generic(j, seed), j + 1, opt);
  out.definition_route = actual.dimension > out.expected_dim;
  out.consistent = out.value == out.definition_route;
  return out;
}

struct SupersolvableVerdict {
  bool admits = false;
  unsigned d = 0;
  unsigned m = 0;
  bool full_rank = false;
  SplittingType splitting;
  std::optional<unsigned> unique_degree;  // set when d = 2m + 1
};

// Shortcut for supersolvable arrangements: unexpected curves exist iff
// d > 2m; when d = 2m + 1 there is a unique one of degree m.
template <typename S>
SupersolvableVerdict certify_supersolvable(const LineArrangement<S>& arr) {
  if (!is_supersolvable(arr).value)
    throw InvalidInputError("certify_supersolvable: arrangement is not supersolvable");
  SupersolvableVerdict v;
  v.d = static_cast<unsigned>(arr.size());
  v.m = max_multiplicity(arr);
  v.full_rank = is_full_rank(arr);
  v.splitting = supersolvable_splitting(arr);
  v.admits = v.d > 2 * v.m;
  if (v.d == 2 * v.m + 1) v.unique_degree = v.m;
  return v;
}

struct ProblemBVerdict {
  bool unexpected = false;
  unsigned actual = 0;
  unsigned expected_dim = 0;
  DimensionReport report;
};

// Generalized test against an arbitrary fat-point scheme:
// dim [I(Z + X)]_degree > max(dim [I(Z)]_degree - deg X, 0).
template <typename S>
ProblemBVerdict certify_problem_b(const PointConfiguration<S>& z, const FatPointScheme<S>& x, unsigned degree,
                                  unsigned samples, const EngineOptions& opt = {}) {
  ProblemBVerdict v;
  v.report = ideal_dimension(z, x, degree, samples, opt);
  v.actual = v.report.dimension;
  v.expected_dim = expected_dimension(z, x, degree, opt);
  v.unexpected = v.actual > v.expected_dim;
  return v;
}

}  // namespace uxc
