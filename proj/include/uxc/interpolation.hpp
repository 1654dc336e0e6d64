#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "uxc/arrangement.hpp"
#include "uxc/matrix.hpp"
#include "uxc/rng.hpp"

namespace uxc {

// Knobs for the randomized-exact rank engine. Rational-coordinate systems are
// ranked modulo independent random primes and the results must agree
// (Schwartz-Zippel bounds the failure probability through the maximal minors);
// exact fraction-free elimination over Q is the escalation and verification
// path. Prime-field systems are ranked in their own field.
struct EngineOptions {
  unsigned verify_primes = 2;        // modular ranks that must agree per system
  unsigned prime_bits = 0;           // 0 = default_prime_bits()
  bool exact_rational = false;       // force Bareiss over Q instead of modular ranks
  unsigned max_prime_escalation = 6;
  unsigned bits() const { return prime_bits ? prime_bits : default_prime_bits(); }
};

// One summand of a fat-point scheme: either a concrete support or a generic
// marker (sampled at evaluation time from the scheme's seed).
template <typename S>
struct FatPart {
  std::optional<ProjPoint<S>> support;
  unsigned multiplicity = 1;
};

template <typename S>
struct FatPointScheme {
  std::vector<FatPart<S>> parts;
  std::uint64_t seed = 1;

  static FatPointScheme none(std::uint64_t seed = 1) { return FatPointScheme{{}, seed}; }
  static FatPointScheme generic(unsigned multiplicity, std::uint64_t seed) {
    FatPointScheme x;
    x.seed = seed;
    if (multiplicity > 0) x.parts.push_back({std::nullopt, multiplicity});
    return x;
  }

  bool has_generic() const {
    for (const auto& p : parts)
      if (!p.support) return true;
    return false;
  }
  // deg(X) = sum C(m_i + 1, 2)
  unsigned long long degree_sum() const {
    unsigned long long d = 0;
    for (const auto& p : parts) d += static_cast<unsigned long long>(p.multiplicity) * (p.multiplicity + 1) / 2;
    return d;
  }
};

struct DimensionReport {
  unsigned degree = 0;
  unsigned dimension = 0;
  unsigned samples_used = 0;
  std::vector<std::uint64_t> primes_used;
  bool stable = true;  // all samples and all primes agreed
};

struct IndexReport {
  unsigned value = 0;
  bool stable = true;
  std::vector<std::uint64_t> primes_used;
};

inline unsigned long long binom2(unsigned long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline unsigned monomial_count(unsigned degree) { return (degree + 2) * (degree + 1) / 2; }

// Exponent triples of the degree-d monomials in graded lex order, x0 > x1 > x2.
// The order is fixed so kernel vectors are reproducible.
std::vector<std::array<unsigned, 3>> monomials_of_degree(unsigned d);

// Multi-indices of total order exactly t, same ordering convention.
std::vector<std::array<unsigned, 3>> multi_indices_of_order(unsigned t);

namespace detail {

inline std::array<BigInt, 3> primitive_triple(const ProjPoint<Rational>& pt) {
  const auto& c = pt.coords();
  BigInt l = 1;
  for (int i = 0; i < 3; ++i) l = lcm(l, denominator(c[i]));
  std::array<BigInt, 3> t;
  BigInt g = 0;
  for (int i = 0; i < 3; ++i) {
    t[i] = numerator(c[i]) * (l / denominator(c[i]));
    g = gcd(g, t[i]);
  }
  if (g > 1)
    for (auto& x : t) x /= g;
  return t;
}

inline std::uint64_t residue_of(const BigInt& x, std::uint64_t p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

// Rows of the interpolation system. Each simple point contributes one
// evaluation row; a fat point of multiplicity m contributes the rows of the
// order-(m-1) partial derivatives (lower orders are implied in characteristic
// 0 / large p by Euler's identity). When m-1 exceeds the degree, the graded
// piece is zero outright, and the order-degree rows (one nonzero entry per
// monomial) encode exactly that. Derivative coefficients are plain falling
// factorials, no factorial normalization.
struct SystemShape {
  std::vector<std::array<unsigned, 3>> monomials;
  unsigned degree;
  explicit SystemShape(unsigned d) : monomials(monomials_of_degree(d)), degree(d) {}
};

template <typename Num, typename Ctx>
void append_rows(std::vector<std::vector<Num>>& rows, const SystemShape& shape,
                 const std::array<Num, 3>& pt, unsigned multiplicity, const Ctx& ctx) {
  // powers of the coordinates up to the degree
  std::array<std::vector<Num>, 3> pw;
  for (int k = 0; k < 3; ++k) {
    pw[k].resize(shape.degree + 1);
    pw[k][0] = ctx.one();
    for (unsigned e = 1; e <= shape.degree; ++e) pw[k][e] = ctx.mul(pw[k][e - 1], pt[k]);
  }
  const unsigned order = std::min(multiplicity - 1, shape.degree);
  for (const auto& diff : multi_indices_of_order(order)) {
    std::vector<Num> row(shape.monomials.size(), ctx.zero());
    for (std::size_t j = 0; j < shape.monomials.size(); ++j) {
      const auto& mo = shape.monomials[j];
      if (mo[0] < diff[0] || mo[1] < diff[1] || mo[2] < diff[2]) continue;
      Num c = ctx.one();
      for (int k = 0; k < 3; ++k) {
        for (unsigned i = 0; i < diff[k]; ++i) c = ctx.mul(c, ctx.from_small(mo[k] - i));
        c = ctx.mul(c, pw[k][mo[k] - diff[k]]);
      }
      row[j] = c;
    }
    rows.push_back(std::move(row));
  }
}

struct FpCtx {
  std::uint64_t p;
  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, p); }
  std::uint64_t from_small(unsigned v) const { return v % p; }
};

struct BigCtx {
  BigInt zero() const { return BigInt(0); }
  BigInt one() const { return BigInt(1); }
  BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
  BigInt from_small(unsigned v) const { return BigInt(v); }
};

inline std::size_t fp_rows_rank(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p) {
  Matrix<Fp> m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Fp::from_residue(rows[i][j], p);
  return rank(m);
}

}  // namespace detail

// Computes dim [I(Z + X)]_degree for the scheme Z + X. Rows: evaluation of the
// degree-d monomials at each point of Z, plus the derivative block of each fat
// part. Generic markers are sampled `samples` times; the reported dimension is
// the minimum over samples (each sampled value is >= the generic one by
// semicontinuity). Errors: shared support between Z and X raises OverlapError;
// an unresolvable disagreement between verification primes raises
// InconclusiveError.
template <typename S>
DimensionReport ideal_dimension(const PointConfiguration<S>& z, const FatPointScheme<S>& x,
                                unsigned degree, unsigned samples, const EngineOptions& opt = {});

// m_Z: the least j such that a curve of degree j+1 through Z with a j-fold
// generic point exists; found by ascending search from j = 0.
template <typename S>
IndexReport multiplicity_index(const PointConfiguration<S>& z, unsigned samples, std::uint64_t seed,
                               const EngineOptions& opt = {});

// t_Z: the least i with dim [I(Z)]_{i+1} > C(i+1, 2); deterministic.
template <typename S>
unsigned t_index(const PointConfiguration<S>& z, const EngineOptions& opt = {});

// max(dim [I(Z)]_degree - deg(X), 0)
template <typename S>
unsigned expected_dimension(const PointConfiguration<S>& z, const FatPointScheme<S>& x, unsigned degree,
                            const EngineOptions& opt = {});

template <typename S>
struct CurveResult {
  unsigned degree = 0;
  std::vector<S> coefficients;  // graded lex monomial order, canonicalized
  ProjPoint<S> point;           // the sampled generic point
};

// The unique curve of degree j+1 through Z with a j-fold point at a sampled
// generic Q: the kernel vector of the condition matrix. Verified by direct
// evaluation of the form and its order-(j-1) partials before returning.
// Throws NotUniqueError (carrying the dimension) when the system is not
// one-dimensional at the sampled point.
template <typename S>
CurveResult<S> unexpected_curve_equation(const PointConfiguration<S>& z, unsigned j, std::uint64_t seed,
                                         const EngineOptions& opt = {});

// ---- implementation ----

namespace detail {

template <typename S>
ProjPoint<S> sample_generic_point(Rng& rng, const PointConfiguration<S>& z,
                                  const std::vector<ProjPoint<S>>& avoid);

template <>
inline ProjPoint<Rational> sample_generic_point(Rng& rng, const PointConfiguration<Rational>& z,
                                                const std::vector<ProjPoint<Rational>>& avoid) {
  for (;;) {
    long a = rng.int_in(-1000000, 1000000);
    long b = rng.int_in(-1000000, 1000000);
    long c = rng.int_in(-1000000, 1000000);
    if (!a && !b && !c) continue;
    ProjPoint<Rational> q{Rational(a), Rational(b), Rational(c)};
    bool clash = false;
    for (const auto& p : z.points())
      if (p == q) clash = true;
    for (const auto& p : avoid)
      if (p == q) clash = true;
    if (!clash) return q;
  }
}

template <>
inline ProjPoint<Fp> sample_generic_point(Rng& rng, const PointConfiguration<Fp>& z,
                                          const std::vector<ProjPoint<Fp>>& avoid) {
  std::uint64_t p = 0;
  for (const auto& pt : z.points())
    for (const auto& c : pt.coords())
      if (!c.is_constant()) p = c.modulus();
  if (p == 0) throw InvalidInputError("cannot sample a generic point without a field modulus");
  for (;;) {
    Fp a = Fp::from_residue(rng.below(p), p);
    Fp b = Fp::from_residue(rng.below(p), p);
    Fp c = Fp::from_residue(rng.below(p), p);
    if (a.is_zero_value() && b.is_zero_value() && c.is_zero_value()) continue;
    ProjPoint<Fp> q{a, b, c};
    bool clash = false;
    for (const auto& pt : z.points())
      if (pt == q) clash = true;
    for (const auto& pt : avoid)
      if (pt == q) clash = true;
    if (!clash) return q;
  }
}

// Concrete system after sampling: all supports known.
template <typename S>
struct ConcreteSystem {
  const PointConfiguration<S>* z;
  std::vector<std::pair<ProjPoint<S>, unsigned>> fat;  // (support, multiplicity)
};

template <typename S>
std::vector<std::vector<std::uint64_t>> fp_rows(const ConcreteSystem<S>& sys, const SystemShape& shape,
                                                std::uint64_t p);

template <>
inline std::vector<std::vector<std::uint64_t>> fp_rows(const ConcreteSystem<Rational>& sys,
                                                       const SystemShape& shape, std::uint64_t p) {
  FpCtx ctx{p};
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& pt : sys.z->points()) {
    auto t = primitive_triple(pt);
    append_rows(rows, shape, std::array<std::uint64_t, 3>{residue_of(t[0], p), residue_of(t[1], p), residue_of(t[2], p)}, 1, ctx);
  }
  for (const auto& [q, m] : sys.fat) {
    auto t = primitive_triple(q);
    append_rows(rows, shape, std::array<std::uint64_t, 3>{residue_of(t[0], p), residue_of(t[1], p), residue_of(t[2], p)}, m, ctx);
  }
  return rows;
}

template <>
inline std::vector<std::vector<std::uint64_t>> fp_rows(const ConcreteSystem<Fp>& sys, const SystemShape& shape,
                                                       std::uint64_t p) {
  FpCtx ctx{p};
  std::vector<std::vector<std::uint64_t>> rows;
  auto as_res = [&](const ProjPoint<Fp>& pt) {
    std::array<std::uint64_t, 3> r;
    for (int i = 0; i < 3; ++i) {
      const Fp& c = pt.coords()[i];
      if (!c.is_constant() && c.modulus() != p) throw BackendMismatchError("point modulus differs from system modulus");
      r[i] = c.is_constant() ? static_cast<std::uint64_t>((c.constant_value() % static_cast<std::int64_t>(p) +
                                                           static_cast<std::int64_t>(p)) %
                                                          static_cast<std::int64_t>(p))
                             : c.value();
    }
    return r;
  };
  for (const auto& pt : sys.z->points()) append_rows(rows, shape, as_res(pt), 1, ctx);
  for (const auto& [q, m] : sys.fat) append_rows(rows, shape, as_res(q), m, ctx);
  return rows;
}

inline std::vector<std::vector<BigInt>> big_rows(const ConcreteSystem<Rational>& sys, const SystemShape& shape) {
  BigCtx ctx;
  std::vector<std::vector<BigInt>> rows;
  for (const auto& pt : sys.z->points()) {
    auto t = primitive_triple(pt);
    append_rows(rows, shape, std::array<BigInt, 3>{t[0], t[1], t[2]}, 1, ctx);
  }
  for (const auto& [q, m] : sys.fat) {
    auto t = primitive_triple(q);
    append_rows(rows, shape, std::array<BigInt, 3>{t[0], t[1], t[2]}, m, ctx);
  }
  return rows;
}

inline std::uint64_t modulus_of_system(const ConcreteSystem<Fp>& sys) {
  for (const auto& pt : sys.z->points())
    for (const auto& c : pt.coords())
      if (!c.is_constant()) return c.modulus();
  for (const auto& [q, m] : sys.fat)
    for (const auto& c : q.coords())
      if (!c.is_constant()) return c.modulus();
  throw InvalidInputError("prime-field system without a modulus");
}

// Rank of a rational system: modular ranks at fresh primes until
// `verify_primes` of them agree on the maximum; exact Bareiss as fallback.
inline std::size_t rational_system_rank(const ConcreteSystem<Rational>& sys, const SystemShape& shape,
                                        const EngineOptions& opt, Rng& prime_rng,
                                        std::vector<std::uint64_t>& primes_used, bool& clean) {
  if (opt.exact_rational) return bareiss_rank(big_rows(sys, shape));
  std::vector<std::pair<std::uint64_t, std::size_t>> results;
  std::set<std::uint64_t> seen;
  const unsigned need = std::max(2u, opt.verify_primes);
  while (results.size() < opt.max_prime_escalation) {
    std::uint64_t p = sample_prime(1, opt.bits(), prime_rng.next());
    if (!seen.insert(p).second) continue;
    std::size_t r = fp_rows_rank(fp_rows(sys, shape, p), p);
    results.emplace_back(p, r);
    primes_used.push_back(p);
    std::size_t rmax = 0;
    for (auto& [pp, rr] : results) rmax = std::max(rmax, rr);
    unsigned agree = 0;
    for (auto& [pp, rr] : results)
      if (rr == rmax) ++agree;
    if (agree >= need) {
      if (results.size() > need) clean = false;
      return rmax;
    }
  }
  // primes keep disagreeing: settle it exactly
  clean = false;
  return bareiss_rank(big_rows(sys, shape));
}

template <typename S>
std::size_t system_rank(const ConcreteSystem<S>& sys, const SystemShape& shape, const EngineOptions& opt,
                        Rng& prime_rng, std::vector<std::uint64_t>& primes_used, bool& clean) {
  if constexpr (std::is_same_v<S, Rational>) {
    return rational_system_rank(sys, shape, opt, prime_rng, primes_used, clean);
  } else {
    std::uint64_t p = modulus_of_system(sys);
    if (primes_used.empty()) primes_used.push_back(p);
    return fp_rows_rank(fp_rows(sys, shape, p), p);
  }
}

template <typename S>
void check_scheme(const PointConfiguration<S>& z, const FatPointScheme<S>& x) {
  std::vector<ProjPoint<S>> seen;
  for (const auto& part : x.parts) {
    if (part.multiplicity < 1) throw InvalidInputError("fat point multiplicity must be >= 1");
    if (!part.support) continue;
    for (const auto& p : z.points())
      if (p == *part.support) throw OverlapError("fat-point support coincides with a configuration point");
    for (const auto& p : seen)
      if (p == *part.support) throw OverlapError("duplicate fat-point support");
    seen.push_back(*part.support);
  }
}

}  // namespace detail

template <typename S>
DimensionReport ideal_dimension(const PointConfiguration<S>& z, const FatPointScheme<S>& x, unsigned degree,
                                unsigned samples, const EngineOptions& opt) {
  if (degree < 1) throw InvalidInputError("ideal_dimension: degree must be >= 1");
  if (samples < 1) throw InvalidInputError("ideal_dimension: samples must be >= 1");
  detail::check_scheme(z, x);
  const detail::SystemShape shape(degree);
  const unsigned cols = monomial_count(degree);
  const bool generic = x.has_generic();
  const unsigned n_samples = generic ? samples : 1;

  Rng q_rng(x.seed ^ (0x51CEB00Bull + degree));
  Rng p_rng(x.seed ^ (0xBADC0DEDull * (degree + 1)));

  DimensionReport rep;
  rep.degree = degree;
  rep.samples_used = n_samples;
  bool clean = true;
  std::optional<unsigned> dim_min;
  bool all_equal = true;
  for (unsigned s = 0; s < n_samples; ++s) {
    detail::ConcreteSystem<S> sys{&z, {}};
    std::vector<ProjPoint<S>> placed;
    for (const auto& part : x.parts) {
      if (part.support) {
        sys.fat.emplace_back(*part.support, part.multiplicity);
        placed.push_back(*part.support);
      } else {
        auto q = detail::sample_generic_point<S>(q_rng, z, placed);
        sys.fat.emplace_back(q, part.multiplicity);
        placed.push_back(q);
      }
    }
    std::size_t r = detail::system_rank(sys, shape, opt, p_rng, rep.primes_used, clean);
    unsigned dim = cols - static_cast<unsigned>(r);
    if (dim_min && dim != *dim_min) all_equal = false;
    dim_min = dim_min ? std::min(*dim_min, dim) : dim;
  }
  rep.dimension = *dim_min;
  rep.stable = clean && all_equal;
  // dedupe recorded primes, keep first-use order
  std::vector<std::uint64_t> uniq;
  for (auto p : rep.primes_used)
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  rep.primes_used = std::move(uniq);
  return rep;
}

template <typename S>
IndexReport multiplicity_index(const PointConfiguration<S>& z, unsigned samples, std::uint64_t seed,
                               const EngineOptions& opt) {
  if (z.size() < 1) throw InvalidInputError("multiplicity_index: empty configuration");
  IndexReport out;
  for (unsigned j = 0; j <= z.size(); ++j) {
    auto x = FatPointScheme<S>::generic(j, seed);
    auto rep = ideal_dimension(z, x, j + 1, samples, opt);
    out.stable = out.stable && rep.stable;
    for (auto p : rep.primes_used)
      if (std::find(out.primes_used.begin(), out.primes_used.end(), p) == out.primes_used.end())
        out.primes_used.push_back(p);
    if (rep.dimension > 0) {
      out.value = j;
      return out;
    }
  }
  throw Error("multiplicity index exceeded |Z|; inputs cannot be a valid configuration");
}

template <typename S>
unsigned t_index(const PointConfiguration<S>& z, const EngineOptions& opt) {
  if (z.size() < 1) throw InvalidInputError("t_index: empty configuration");
  for (unsigned i = 0;; ++i) {
    auto rep = ideal_dimension(z, FatPointScheme<S>::none(), i + 1, 1, opt);
    if (rep.dimension > binom2(i + 1)) return i;
    if (i > 2 * z.size() + 4) throw Error("t_index search did not terminate");
  }
}

template <typename S>
unsigned expected_dimension(const PointConfiguration<S>& z, const FatPointScheme<S>& x, unsigned degree,
                            const EngineOptions& opt) {
  auto rep = ideal_dimension(z, FatPointScheme<S>::none(), degree, 1, opt);
  unsigned long long dx = x.degree_sum();
  return rep.dimension > dx ? static_cast<unsigned>(rep.dimension - dx) : 0u;
}

template <typename S>
CurveResult<S> unexpected_curve_equation(const PointConfiguration<S>& z, unsigned j, std::uint64_t seed,
                                         const EngineOptions&) {
  if (j < 1) throw InvalidInputError("unexpected_curve_equation: j must be >= 1");
  const detail::SystemShape shape(j + 1);
  Rng q_rng(seed ^ (0x51CEB00Bull + (j + 1)));
  auto q = detail::sample_generic_point<S>(q_rng, z, {});
  detail::ConcreteSystem<S> sys{&z, {{q, j}}};

  Matrix<S> m(0, 0);
  if constexpr (std::is_same_v<S, Rational>) {
    auto rows = detail::big_rows(sys, shape);
    Matrix<Rational> mm(rows.size(), shape.monomials.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t c = 0; c < rows[i].size(); ++c) mm.at(i, c) = Rational(rows[i][c]);
    m = std::move(mm);
  } else {
    std::uint64_t p = detail::modulus_of_system(sys);
    auto rows = detail::fp_rows(sys, shape, p);
    Matrix<Fp> mm(rows.size(), shape.monomials.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t c = 0; c < rows[i].size(); ++c) mm.at(i, c) = Fp::from_residue(rows[i][c], p);
    m = std::move(mm);
  }
  auto kern = kernel_basis(m);
  if (kern.size() != 1)
    throw NotUniqueError("curve system dimension is " + std::to_string(kern.size()) + ", not 1",
                         static_cast<unsigned>(kern.size()));
  // canonicalize the coefficient vector: first nonzero entry becomes 1
  auto& v = kern.front();
  S scale = S(0);
  for (const auto& c : v)
    if (!is_zero(c)) {
      scale = one_like(c) / c;
      break;
    }
  for (auto& c : v) c = c * scale;
  // postcondition: the form vanishes on Z and to order j-1 at Q
  for (std::size_t i = 0; i < m.rows(); ++i) {
    S dot = m.at(i, 0) * v[0];
    for (std::size_t c = 1; c < m.cols(); ++c) dot += m.at(i, c) * v[c];
    if (!is_zero(dot)) throw Error("curve verification failed");
  }
  return CurveResult<S>{j + 1, std::move(v), q};
}

}  // namespace uxc
