#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uxc/projective.hpp"

namespace uxc {

template <typename S>
struct SingularEntry {
  ProjPoint<S> point;
  unsigned multiplicity = 0;            // number of arrangement lines through the point
  std::vector<std::size_t> line_indices;
};

// Complete singular locus: every pairwise intersection point with its exact
// multiplicity. Satisfies the partition identity
//   sum over points of C(mult, 2) = C(d, 2).
template <typename S>
struct SingularLocus {
  std::vector<SingularEntry<S>> entries;

  std::optional<std::size_t> find(const ProjPoint<S>& p) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].point == p) return i;
    return std::nullopt;
  }
  bool partition_identity_holds(std::size_t d) const {
    unsigned long long lhs = 0;
    for (const auto& e : entries) lhs += static_cast<unsigned long long>(e.multiplicity) * (e.multiplicity - 1) / 2;
    return lhs == static_cast<unsigned long long>(d) * (d - 1) / 2;
  }
};

template <typename S>
class PointConfiguration {
 public:
  PointConfiguration() = default;
  explicit PointConfiguration(std::vector<ProjPoint<S>> pts, std::string label = {})
      : pts_(std::move(pts)), label_(std::move(label)) {
    std::set<ProjPoint<S>> seen(pts_.begin(), pts_.end());
    if (seen.size() != pts_.size()) throw InvalidInputError("duplicate point in configuration");
  }

  const std::vector<ProjPoint<S>>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  const std::string& label() const { return label_; }

 private:
  std::vector<ProjPoint<S>> pts_;
  std::string label_;
};

// Finite set of distinct lines. Immutable after construction; the singular
// locus is computed once on first use and shared between copies, so concurrent
// readers observe a single computation.
template <typename S>
class LineArrangement {
 public:
  explicit LineArrangement(std::vector<ProjLine<S>> lines, std::string label = {})
      : data_(std::make_shared<Data>()) {
    if (lines.empty()) throw InvalidInputError("arrangement needs at least one line");
    data_->lines = std::move(lines);
    data_->label = std::move(label);
    for (std::size_t i = 0; i < data_->lines.size(); ++i) {
      auto [it, fresh] = data_->index.emplace(data_->lines[i], i);
      if (!fresh)
        throw InvalidInputError("duplicate line in arrangement (indices " + std::to_string(it->second) +
                                " and " + std::to_string(i) + ")");
    }
  }

  const std::vector<ProjLine<S>>& lines() const { return data_->lines; }
  std::size_t size() const { return data_->lines.size(); }
  const std::string& label() const { return data_->label; }
  bool contains(const ProjLine<S>& l) const { return data_->index.count(l) != 0; }

  const SingularLocus<S>& singular_locus() const {
    std::scoped_lock lock(data_->mu);
    if (!data_->sing) data_->sing = std::make_unique<SingularLocus<S>>(compute_singular_locus());
    return *data_->sing;
  }

  LineArrangement with_line(const ProjLine<S>& l, std::string label = {}) const {
    auto ls = data_->lines;
    ls.push_back(l);
    return LineArrangement(std::move(ls), label.empty() ? data_->label : std::move(label));
  }

 private:
  struct Data {
    std::vector<ProjLine<S>> lines;
    std::string label;
    std::map<ProjLine<S>, std::size_t> index;
    mutable std::mutex mu;
    mutable std::unique_ptr<SingularLocus<S>> sing;
  };

  SingularLocus<S> compute_singular_locus() const {
    const auto& ls = data_->lines;
    std::map<ProjPoint<S>, std::set<std::size_t>> at;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        auto p = meet(ls[i], ls[j]);
        auto& s = at[p];
        s.insert(i);
        s.insert(j);
      }
    }
    SingularLocus<S> out;
    for (auto& [p, s] : at) {
      SingularEntry<S> e{p, static_cast<unsigned>(s.size()), {s.begin(), s.end()}};
      out.entries.push_back(std::move(e));
    }
    return out;
  }

  std::shared_ptr<Data> data_;
};

template <typename S>
const SingularLocus<S>& singular_locus(const LineArrangement<S>& a) {
  if (a.size() < 2) throw InvalidInputError("singular locus needs at least 2 lines");
  return a.singular_locus();
}

template <typename S>
PointConfiguration<S> sing_at_least(const LineArrangement<S>& a, unsigned k) {
  if (k < 2) throw InvalidInputError("sing_at_least: k must be >= 2");
  std::vector<ProjPoint<S>> pts;
  for (const auto& e : singular_locus(a).entries)
    if (e.multiplicity >= k) pts.push_back(e.point);
  return PointConfiguration<S>(std::move(pts), a.label().empty() ? "" : "sing>=" + std::to_string(k) + " of " + a.label());
}

template <typename S>
unsigned max_multiplicity(const LineArrangement<S>& a) {
  unsigned m = 0;
  for (const auto& e : singular_locus(a).entries) m = std::max(m, e.multiplicity);
  return m;
}

// P is modular when every other singular point is joined to P by a line of the
// arrangement. Modular points carry multiplicity >= 2 by definition.
template <typename S>
std::vector<ProjPoint<S>> modular_points(const LineArrangement<S>& a) {
  const auto& sing = singular_locus(a);
  std::vector<ProjPoint<S>> out;
  for (const auto& e : sing.entries) {
    bool modular = true;
    for (const auto& f : sing.entries) {
      if (e.point == f.point) continue;
      if (!a.contains(line_through(e.point, f.point))) {
        modular = false;
        break;
      }
    }
    if (modular) out.push_back(e.point);
  }
  return out;
}

template <typename S>
struct SupersolvableResult {
  bool value = false;
  std::optional<ProjPoint<S>> witness;   // modular point of maximal multiplicity
  unsigned witness_multiplicity = 0;
};

template <typename S>
SupersolvableResult<S> is_supersolvable(const LineArrangement<S>& a) {
  const auto& sing = singular_locus(a);
  SupersolvableResult<S> r;
  for (const auto& p : modular_points(a)) {
    unsigned m = sing.entries[*sing.find(p)].multiplicity;
    if (!r.value || m > r.witness_multiplicity) {
      r.value = true;
      r.witness = p;
      r.witness_multiplicity = m;
    }
  }
  return r;
}

template <typename S>
struct NearlySupersolvableResult {
  bool value = false;
  std::optional<ProjPoint<S>> witness;        // nearly modular point
  std::optional<ProjPoint<S>> exception;      // the exceptional double point
  std::string note;
};

// Nearly modular point P: joined by arrangement lines to every singular point
// except exactly one double point P', and the line PP' meets the singular
// locus only at P and P'. Supersolvable inputs report false with a note; the
// two classes are kept disjoint so splitting-formula dispatch is unambiguous.
template <typename S>
NearlySupersolvableResult<S> is_nearly_supersolvable(const LineArrangement<S>& a) {
  if (a.size() < 3) throw InvalidInputError("is_nearly_supersolvable needs at least 3 lines");
  NearlySupersolvableResult<S> r;
  if (is_supersolvable(a).value) {
    r.note = "arrangement is supersolvable";
    return r;
  }
  const auto& sing = singular_locus(a);
  for (const auto& e : sing.entries) {
    std::vector<const SingularEntry<S>*> exceptions;
    for (const auto& f : sing.entries) {
      if (e.point == f.point) continue;
      if (!a.contains(line_through(e.point, f.point))) {
        exceptions.push_back(&f);
        if (exceptions.size() > 1) break;
      }
    }
    if (exceptions.size() != 1) continue;
    const auto* exc = exceptions.front();
    if (exc->multiplicity != 2) continue;
    ProjLine<S> join = line_through(e.point, exc->point);
    bool clean = true;
    for (const auto& f : sing.entries) {
      if (f.point == e.point || f.point == exc->point) continue;
      if (incident(f.point, join)) {
        clean = false;
        break;
      }
    }
    if (!clean) continue;
    r.value = true;
    r.witness = e.point;
    r.exception = exc->point;
    return r;
  }
  return r;
}

// Full rank: the defining linear forms span the whole space of linear forms.
template <typename S>
bool is_full_rank(const LineArrangement<S>& a) {
  Matrix<S> m(a.size(), 3);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = a.lines()[i].coeffs()[j];
  return rank(m) == 3;
}

// The arrangement of lines dual to the singular points of A.
template <typename S>
LineArrangement<S> dual_arrangement(const LineArrangement<S>& a) {
  std::set<ProjLine<S>> duals;
  for (const auto& e : singular_locus(a).entries) duals.insert(dualize_point(e.point));
  std::vector<ProjLine<S>> lines(duals.begin(), duals.end());
  return LineArrangement<S>(std::move(lines), a.label().empty() ? "" : "dual of sing(" + a.label() + ")");
}

// The configuration of points dual to the lines of A (the Z with A = A_Z).
template <typename S>
PointConfiguration<S> dual_configuration(const LineArrangement<S>& a) {
  std::vector<ProjPoint<S>> pts;
  pts.reserve(a.size());
  for (const auto& l : a.lines()) pts.push_back(dualize_line(l));
  return PointConfiguration<S>(std::move(pts), a.label().empty() ? "" : "dual of " + a.label());
}

// The arrangement of lines dual to the points of Z.
template <typename S>
LineArrangement<S> dual_arrangement_of_points(const PointConfiguration<S>& z) {
  std::vector<ProjLine<S>> lines;
  lines.reserve(z.size());
  for (const auto& p : z.points()) lines.push_back(dualize_point(p));
  return LineArrangement<S>(std::move(lines), z.label().empty() ? "" : "dual of " + z.label());
}

template <typename S>
std::size_t max_collinear(const PointConfiguration<S>& z) {
  return max_collinear(z.points());
}

// Multiset fingerprint of the incidence structure: the sorted multiplicity
// list of the singular locus plus, per line, the sorted multiplicities of the
// singular points lying on it. Projective equivalences preserve it.
template <typename S>
std::vector<std::vector<unsigned>> incidence_profile(const LineArrangement<S>& a) {
  const auto& sing = singular_locus(a);
  std::vector<std::vector<unsigned>> profile(a.size() + 1);
  for (const auto& e : sing.entries) {
    profile[0].push_back(e.multiplicity);
    for (auto idx : e.line_indices) profile[1 + idx].push_back(e.multiplicity);
  }
  for (auto& v : profile) std::sort(v.begin(), v.end());
  std::sort(profile.begin() + 1, profile.end());
  return profile;
}

// Incidence-structure equality up to relabeling (refinement-invariant check).
template <typename S, typename T>
bool incidence_equivalent(const LineArrangement<S>& a, const LineArrangement<T>& b) {
  if (a.size() != b.size()) return false;
  return incidence_profile(a) == incidence_profile(b);
}

}  // namespace uxc
