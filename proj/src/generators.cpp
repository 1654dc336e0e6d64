#include "uxc/generators.hpp"

#include <cmath>

namespace uxc {

namespace {

template <typename S>
std::array<S, 3> affine_rep(const ProjPoint<S>& p) {
  const auto& c = p.coords();
  if (is_zero(c[2])) throw InvalidInputError("point at infinity has no affine representative");
  S inv = one_like(c[2]) / c[2];
  return {c[0] * inv, c[1] * inv, one_like(c[2])};
}

template <typename S>
ProjPoint<S> midpoint(const ProjPoint<S>& p, const ProjPoint<S>& q) {
  auto a = affine_rep(p), b = affine_rep(q);
  S two = one_like(a[2]) + one_like(a[2]);
  return ProjPoint<S>((a[0] + b[0]) / two, (a[1] + b[1]) / two, a[2]);
}

template <typename S>
ProjPoint<S> scaled(const ProjPoint<S>& p, unsigned factor) {
  auto a = affine_rep(p);
  S f = zero_like(a[2]);
  for (unsigned i = 0; i < factor; ++i) f = f + one_like(a[2]);
  return ProjPoint<S>(a[0] * f, a[1] * f, a[2]);
}

template <typename S>
ProjPoint<S> origin_like(const ProjPoint<S>& p) {
  S one = one_like(p.coords()[0]);
  return ProjPoint<S>(one - one, one - one, one);
}

template <typename S>
ProjLine<S> infinity_line_like(const ProjPoint<S>& p) {
  S one = one_like(p.coords()[0]);
  return ProjLine<S>(one - one, one - one, one);
}

// Sides + symmetry axes of a polygon with centroid at the origin, given in
// cyclic vertex order.
template <typename S>
LineArrangement<S> polygon_arrangement(const std::vector<ProjPoint<S>>& v, bool complete, std::string label) {
  const std::size_t n = v.size();
  auto o = origin_like(v.front());
  std::vector<ProjLine<S>> lines;
  for (std::size_t k = 0; k < n; ++k) lines.push_back(line_through(v[k], v[(k + 1) % n]));
  if (n % 2 == 0) {
    for (std::size_t k = 0; k < n / 2; ++k) lines.push_back(line_through(o, v[k]));
    for (std::size_t k = 0; k < n / 2; ++k) lines.push_back(line_through(o, midpoint(v[k], v[(k + 1) % n])));
  } else {
    for (std::size_t k = 0; k < n; ++k) lines.push_back(line_through(o, v[k]));
  }
  if (complete) lines.push_back(infinity_line_like(v.front()));
  return LineArrangement<S>(std::move(lines), std::move(label));
}

// Base arrangement of a chain: the chords P_i P_{i+n/2-1}, the long diagonals,
// the midline axes and the line at infinity. Equals the complete polygonal
// arrangement of the inscribed polygon the chords envelope.
template <typename S>
LineArrangement<S> chain_base(const std::vector<ProjPoint<S>>& p, std::string label) {
  const std::size_t n = p.size();
  const std::size_t skip = n / 2 - 1;
  auto o = origin_like(p.front());
  std::vector<ProjLine<S>> lines;
  for (std::size_t k = 0; k < n; ++k) lines.push_back(line_through(p[k], p[(k + skip) % n]));
  for (std::size_t k = 0; k < n / 2; ++k) lines.push_back(line_through(o, p[k]));
  for (std::size_t k = 0; k < n / 2; ++k) lines.push_back(line_through(o, midpoint(p[k], p[(k + 1) % n])));
  lines.push_back(infinity_line_like(p.front()));
  return LineArrangement<S>(std::move(lines), std::move(label));
}

Rational q(long num, long den = 1) { return Rational(num) / den; }

ProjPoint<Rational> qp(Rational a, Rational b) { return ProjPoint<Rational>(std::move(a), std::move(b), Rational(1)); }

// Forces every coefficient into the field so serialization always sees the
// modulus.
LineArrangement<Fp> materialized(const LineArrangement<Fp>& arr, std::uint64_t p) {
  std::vector<ProjLine<Fp>> lines;
  for (const auto& l : arr.lines()) {
    std::array<Fp, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = Fp(0, p) + l.coeffs()[i];
    lines.emplace_back(c);
  }
  return LineArrangement<Fp>(std::move(lines), arr.label());
}

}  // namespace

LineArrangement<Rational> pencil(unsigned m) {
  if (m < 1) throw InvalidInputError("pencil needs at least one line");
  // m lines through (0:0:1)
  std::vector<ProjLine<Rational>> lines;
  lines.emplace_back(Rational(0), Rational(1), Rational(0));
  for (unsigned t = 0; t + 1 < m; ++t) lines.emplace_back(Rational(1), Rational(t), Rational(0));
  return LineArrangement<Rational>(std::move(lines), "pencil(" + std::to_string(m) + ")");
}

LineArrangement<Rational> polygonal_rational(unsigned n, bool complete) {
  std::vector<ProjPoint<Rational>> v;
  switch (n) {
    case 3:
      v = {qp(q(1), q(0)), qp(q(0), q(1)), qp(q(-1), q(-1))};
      break;
    case 4:
      v = {qp(q(1), q(0)), qp(q(0), q(1)), qp(q(-1), q(0)), qp(q(0), q(-1))};
      break;
    case 6:
      v = {qp(q(-1, 2), q(-1, 4)), qp(q(-1, 2), q(1, 4)), qp(q(0), q(1, 2)),
           qp(q(1, 2), q(1, 4)),   qp(q(1, 2), q(-1, 4)), qp(q(0), q(-1, 2))};
      break;
    default:
      throw FieldError("no rational model for a regular " + std::to_string(n) +
                       "-gon; use a cyclotomic embedding");
  }
  std::string label = (complete ? "Pbar" : "P") + std::to_string(n);
  return polygon_arrangement(v, complete, std::move(label));
}

LineArrangement<Fp> polygonal_embedded(unsigned n, bool complete, const CyclotomicEmbedding& emb) {
  if (emb.ngon() != n) throw FieldError("embedding was built for a different polygon");
  std::vector<ProjPoint<Fp>> v;
  const std::uint64_t p = emb.modulus();
  for (unsigned k = 0; k < n; ++k)
    v.emplace_back(emb.cos_units(2 * static_cast<long>(k)), emb.sin_units(2 * static_cast<long>(k)), Fp(1, p));
  std::string label = (complete ? "Pbar" : "P") + std::to_string(n);
  return materialized(polygon_arrangement(v, complete, std::move(label)), p);
}

LineArrangement<Rational> tictactoe(unsigned k, unsigned j, bool complete) {
  if (k < j) throw InvalidInputError("tictactoe requires k >= j");
  std::vector<ProjLine<Rational>> lines;
  for (long i = -static_cast<long>(k); i <= static_cast<long>(k); ++i) {
    lines.emplace_back(Rational(1), Rational(0), Rational(-i));  // x = i z
    lines.emplace_back(Rational(0), Rational(1), Rational(-i));  // y = i z
  }
  for (long i = -static_cast<long>(j); i <= static_cast<long>(j); ++i) {
    lines.emplace_back(Rational(1), Rational(-1), Rational(i));  // x - y + i z
    lines.emplace_back(Rational(1), Rational(1), Rational(i));   // x + y + i z
  }
  if (complete) lines.emplace_back(Rational(0), Rational(0), Rational(1));
  std::string label = (complete ? "Tbar(" : "T(") + std::to_string(k) + "," + std::to_string(j) + ")";
  return LineArrangement<Rational>(std::move(lines), std::move(label));
}

PointConfiguration<Rational> b3_points() {
  auto rp = [](long a, long b, long c) { return ProjPoint<Rational>(Rational(a), Rational(b), Rational(c)); };
  return PointConfiguration<Rational>({rp(1, 1, 1), rp(1, -1, 1), rp(-1, 1, 1), rp(-1, -1, 1), rp(0, 0, 1),
                                       rp(1, 0, 0), rp(0, 1, 0), rp(1, 1, 0), rp(1, -1, 0)},
                                      "b3");
}

LineArrangement<Rational> b3_dual_arrangement() {
  auto z = b3_points();
  std::vector<ProjLine<Rational>> lines;
  for (const auto& p : z.points()) lines.push_back(dualize_point(p));
  return LineArrangement<Rational>(std::move(lines), "b3-dual");
}

HexagonChainData hexagon_chain_data() {
  std::vector<ProjPoint<Rational>> marked = {qp(q(-1, 2), q(-1, 4)), qp(q(-1, 2), q(1, 4)), qp(q(0), q(1, 2)),
                                             qp(q(1, 2), q(1, 4)),   qp(q(1, 2), q(-1, 4)), qp(q(0), q(-1, 2))};
  HexagonChainData d{marked, chain_base(marked, "P6bar"), {}, {}, {}, {}};
  for (std::size_t i = 0; i < 6; ++i) d.ell.push_back(line_through(d.marked[i], d.marked[(i + 1) % 6]));
  // the six figure lines each through exactly one marked point, in point order
  d.ell_prime = {ProjLine<Rational>(q(3), q(2), q(2)),  ProjLine<Rational>(q(3), q(-2), q(2)),
                 ProjLine<Rational>(q(0), q(2), q(-1)), ProjLine<Rational>(q(3), q(2), q(-2)),
                 ProjLine<Rational>(q(3), q(-2), q(-2)), ProjLine<Rational>(q(0), q(2), q(1))};
  for (std::size_t i = 0; i < 6; ++i)
    d.m.push_back(line_through(scaled(d.marked[i], 2), scaled(d.marked[(i + 1) % 6], 2)));
  for (std::size_t i = 0; i < 6; ++i)
    d.m_prime.push_back(line_through(scaled(d.marked[i], 4), scaled(d.marked[(i + 2) % 6], 4)));
  return d;
}

namespace {

template <typename S>
LineArrangement<S> staged(const LineArrangement<S>& base, const std::vector<const std::vector<ProjLine<S>>*>& phases,
                          std::size_t full_phases, const std::vector<ProjLine<S>>* last, unsigned count,
                          std::string label) {
  std::vector<ProjLine<S>> lines = base.lines();
  for (std::size_t ph = 0; ph < full_phases; ++ph)
    for (const auto& l : *phases[ph]) lines.push_back(l);
  if (last) {
    if (count > last->size()) throw InvalidInputError("chain stage index out of range");
    for (unsigned i = 0; i < count; ++i) lines.push_back((*last)[i]);
  }
  return LineArrangement<S>(std::move(lines), std::move(label));
}

}  // namespace

LineArrangement<Rational> hexagon_chain(ChainPhase phase, unsigned count) {
  auto d = hexagon_chain_data();
  std::vector<const std::vector<ProjLine<Rational>>*> phases = {&d.ell, &d.ell_prime, &d.m, &d.m_prime};
  switch (phase) {
    case ChainPhase::Base:
      return d.base;
    case ChainPhase::Ell:
      return staged(d.base, phases, 0, &d.ell, count, "B" + std::to_string(count));
    case ChainPhase::EllPrime:
      return staged(d.base, phases, 1, &d.ell_prime, count, "B'" + std::to_string(count));
    case ChainPhase::M:
      return staged(d.base, phases, 2, &d.m, count, "B''" + std::to_string(count));
    case ChainPhase::MPrime:
      return staged(d.base, phases, 3, &d.m_prime, count, "B'''" + std::to_string(count));
  }
  throw InvalidInputError("invalid chain phase");
}

OctagonChainData octagon_chain_data(const CyclotomicEmbedding& emb) {
  if (emb.ngon() != 8) throw FieldError("octagon chain needs an 8-gon embedding");
  const std::uint64_t p = emb.modulus();
  Fp t = emb.cos_units(2);  // cos(pi/4) = sqrt(2)/2
  std::vector<ProjPoint<Fp>> marked;
  for (unsigned k = 0; k < 8; ++k) {
    long units = 4 - 2 * static_cast<long>(k);  // P_1 at angle pi/2, clockwise
    marked.emplace_back(t * emb.cos_units(units), t * emb.sin_units(units), Fp(1, p));
  }
  OctagonChainData d{marked, materialized(chain_base(marked, "P8bar"), p), {}, {}};
  for (std::size_t i = 0; i < 8; ++i) d.ell.push_back(line_through(d.marked[i], d.marked[(i + 1) % 8]));
  for (std::size_t i = 0; i < 8; ++i) d.m.push_back(line_through(d.marked[i], d.marked[(i + 2) % 8]));
  return d;
}

namespace {

using RealTriple = std::array<double, 3>;
using RealPoint = std::array<double, 2>;

RealTriple real_line(const RealPoint& p, const RealPoint& q) {
  // cross product of (p, 1) and (q, 1)
  return {p[1] - q[1], q[0] - p[0], p[0] * q[1] - p[1] * q[0]};
}

RealTriple real_origin_line(const RealPoint& p) { return {-p[1], p[0], 0.0}; }

RealPoint real_mid(const RealPoint& p, const RealPoint& q) { return {(p[0] + q[0]) / 2, (p[1] + q[1]) / 2}; }

std::vector<RealTriple> real_polygon_lines(const std::vector<RealPoint>& v, bool complete) {
  const std::size_t n = v.size();
  std::vector<RealTriple> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(real_line(v[k], v[(k + 1) % n]));
  if (n % 2 == 0) {
    for (std::size_t k = 0; k < n / 2; ++k) out.push_back(real_origin_line(v[k]));
    for (std::size_t k = 0; k < n / 2; ++k) out.push_back(real_origin_line(real_mid(v[k], v[(k + 1) % n])));
  } else {
    for (std::size_t k = 0; k < n; ++k) out.push_back(real_origin_line(v[k]));
  }
  if (complete) out.push_back({0.0, 0.0, 1.0});
  return out;
}

}  // namespace

std::vector<std::array<double, 3>> polygonal_hints(unsigned n, bool complete) {
  std::vector<RealPoint> v;
  for (unsigned k = 0; k < n; ++k) {
    double a = 2.0 * M_PI * k / n;
    v.push_back({std::cos(a), std::sin(a)});
  }
  return real_polygon_lines(v, complete);
}

std::vector<std::array<double, 3>> octagon_chain_hints(ChainPhase phase, unsigned count) {
  std::vector<RealPoint> p;
  const double t = std::sqrt(2.0) / 2;
  for (unsigned k = 0; k < 8; ++k) {
    double a = M_PI / 2 - M_PI * k / 4;
    p.push_back({t * std::cos(a), t * std::sin(a)});
  }
  std::vector<RealTriple> out;
  for (std::size_t k = 0; k < 8; ++k) out.push_back(real_line(p[k], p[(k + 3) % 8]));
  for (std::size_t k = 0; k < 4; ++k) out.push_back(real_origin_line(p[k]));
  for (std::size_t k = 0; k < 4; ++k) out.push_back(real_origin_line(real_mid(p[k], p[(k + 1) % 8])));
  out.push_back({0.0, 0.0, 1.0});
  unsigned n_ell = 0, n_m = 0;
  switch (phase) {
    case ChainPhase::Base:
      break;
    case ChainPhase::Ell:
      n_ell = count;
      break;
    case ChainPhase::M:
      n_ell = 8;
      n_m = count;
      break;
    default:
      throw InvalidInputError("octagon chain has only ell and m stages");
  }
  for (unsigned i = 0; i < n_ell; ++i) out.push_back(real_line(p[i], p[(i + 1) % 8]));
  for (unsigned i = 0; i < n_m; ++i) out.push_back(real_line(p[i], p[(i + 2) % 8]));
  return out;
}

LineArrangement<Fp> octagon_chain(ChainPhase phase, unsigned count, const CyclotomicEmbedding& emb) {
  auto d = octagon_chain_data(emb);
  std::vector<const std::vector<ProjLine<Fp>>*> phases = {&d.ell, &d.m};
  LineArrangement<Fp> out = d.base;
  switch (phase) {
    case ChainPhase::Base:
      break;
    case ChainPhase::Ell:
      out = staged(d.base, phases, 0, &d.ell, count, "P8bar+ell" + std::to_string(count));
      break;
    case ChainPhase::M:
      out = staged(d.base, phases, 1, &d.m, count, "P8bar+ell8+m" + std::to_string(count));
      break;
    default:
      throw InvalidInputError("octagon chain has only ell and m stages");
  }
  return materialized(out, emb.modulus());
}

}  // namespace uxc
