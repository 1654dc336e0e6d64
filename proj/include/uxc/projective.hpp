#pragma once

#include <array>
#include <map>
#include <vector>

#include "uxc/errors.hpp"
#include "uxc/matrix.hpp"

namespace uxc {

namespace detail {

// Canonical representative of a homogeneous triple: first nonzero entry
// scaled to 1. Exact over both backends, so equality, hashing and set
// membership are literal comparisons.
template <typename S>
std::array<S, 3> canonicalize_triple(std::array<S, 3> c) {
  int first = -1;
  for (int i = 0; i < 3; ++i) {
    if (!is_zero(c[i])) {
      first = i;
      break;
    }
  }
  if (first < 0) throw InvalidInputError("zero triple is not a projective object");
  S inv = one_like(c[first]) / c[first];
  for (int i = 0; i < 3; ++i) c[i] = c[i] * inv;
  return c;
}

template <typename S>
bool triple_less(const std::array<S, 3>& a, const std::array<S, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

}  // namespace detail

template <typename S>
class ProjLine;

// Point of the projective plane; equality is equality of canonical forms.
template <typename S>
class ProjPoint {
 public:
  ProjPoint(S a, S b, S c) : c_(detail::canonicalize_triple<S>({std::move(a), std::move(b), std::move(c)})) {}
  explicit ProjPoint(std::array<S, 3> c) : c_(detail::canonicalize_triple(std::move(c))) {}

  const std::array<S, 3>& coords() const { return c_; }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a.c_ == b.c_); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return detail::triple_less(a.c_, b.c_); }

 private:
  std::array<S, 3> c_;
};

// Line ax0 + bx1 + cx2 = 0, stored by its coefficient triple in canonical form.
template <typename S>
class ProjLine {
 public:
  ProjLine(S a, S b, S c) : c_(detail::canonicalize_triple<S>({std::move(a), std::move(b), std::move(c)})) {}
  explicit ProjLine(std::array<S, 3> c) : c_(detail::canonicalize_triple(std::move(c))) {}

  const std::array<S, 3>& coeffs() const { return c_; }
  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a.c_ == b.c_); }
  friend bool operator<(const ProjLine& a, const ProjLine& b) { return detail::triple_less(a.c_, b.c_); }

 private:
  std::array<S, 3> c_;
};

// Duality swaps coordinate and coefficient triples; an involution on canonical
// forms.
template <typename S>
ProjLine<S> dualize_point(const ProjPoint<S>& p) {
  return ProjLine<S>(p.coords());
}

template <typename S>
ProjPoint<S> dualize_line(const ProjLine<S>& l) {
  return ProjPoint<S>(l.coeffs());
}

template <typename S>
bool incident(const ProjPoint<S>& p, const ProjLine<S>& l) {
  const auto& x = p.coords();
  const auto& a = l.coeffs();
  return is_zero(x[0] * a[0] + x[1] * a[1] + x[2] * a[2]);
}

namespace detail {

template <typename S>
std::array<S, 3> cross(const std::array<S, 3>& a, const std::array<S, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace detail

template <typename S>
ProjLine<S> line_through(const ProjPoint<S>& p, const ProjPoint<S>& q) {
  if (p == q) throw DegeneratePairError("line_through: points coincide");
  return ProjLine<S>(detail::cross(p.coords(), q.coords()));
}

template <typename S>
ProjPoint<S> meet(const ProjLine<S>& l, const ProjLine<S>& m) {
  if (l == m) throw DegeneratePairError("meet: lines coincide");
  return ProjPoint<S>(detail::cross(l.coeffs(), m.coeffs()));
}

// Size of the largest collinear subset, by grouping the points on every line
// spanned by a pair. Quadratically many candidate lines, linear scan each:
// fine at the tens-of-points scale this library works at.
template <typename S>
std::size_t max_collinear(const std::vector<ProjPoint<S>>& pts) {
  if (pts.size() < 2) return pts.size();
  std::map<ProjLine<S>, std::size_t> seen;
  std::size_t best = 2;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      ProjLine<S> l = line_through(pts[i], pts[j]);
      auto [it, inserted] = seen.emplace(l, 0);
      if (!inserted) continue;
      std::size_t count = 0;
      for (const auto& p : pts)
        if (incident(p, l)) ++count;
      it->second = count;
      if (count > best) best = count;
    }
  }
  return best;
}

}  // namespace uxc
