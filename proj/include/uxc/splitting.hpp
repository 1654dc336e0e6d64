#pragma once

#include <string>
#include <vector>

#include "uxc/interpolation.hpp"

namespace uxc {

// Splitting type of an arrangement, stored unordered-normalized (a <= b).
// Always satisfies a + b = d - 1 for the arrangement of d lines it describes.
struct SplittingType {
  unsigned a = 0;
  unsigned b = 0;

  static SplittingType normalized(unsigned x, unsigned y) { return x <= y ? SplittingType{x, y} : SplittingType{y, x}; }
  friend bool operator==(const SplittingType& l, const SplittingType& r) { return l.a == r.a && l.b == r.b; }
  friend bool operator!=(const SplittingType& l, const SplittingType& r) { return !(l == r); }
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

// Splitting type through the dual configuration: min(a,b) is the multiplicity
// index of the points dual to the lines, and a + b = d - 1 fixes the rest.
template <typename S>
SplittingType empirical_splitting(const LineArrangement<S>& arr, unsigned samples, std::uint64_t seed,
                                  const EngineOptions& opt = {}) {
  if (arr.size() < 2) throw InvalidInputError("empirical_splitting needs at least 2 lines");
  auto z = dual_configuration(arr);
  auto m = multiplicity_index(z, samples, seed, opt);
  const unsigned d = static_cast<unsigned>(arr.size());
  if (m.value > (d - 1) / 2) throw InconclusiveError("multiplicity index " + std::to_string(m.value) +
                                                     " exceeds (d-1)/2; sampling failed");
  return SplittingType::normalized(m.value, d - 1 - m.value);
}

// Closed form for supersolvable arrangements: (m-1, d-m) with m the maximal
// multiplicity. Precondition checked.
template <typename S>
SplittingType supersolvable_splitting(const LineArrangement<S>& arr) {
  if (!is_supersolvable(arr).value) throw InvalidInputError("supersolvable_splitting: arrangement is not supersolvable");
  const unsigned d = static_cast<unsigned>(arr.size());
  const unsigned m = max_multiplicity(arr);
  return SplittingType::normalized(m - 1, d - m);
}

// Closed form for nearly supersolvable arrangements: (d-m, m-1) when 2m >= d,
// (floor(d/2), floor(d/2)) when 2m < d. The latter sums to d-1 only for odd d;
// the even case is surfaced as an error rather than guessed.
template <typename S>
SplittingType nearly_supersolvable_splitting(const LineArrangement<S>& arr) {
  if (!is_nearly_supersolvable(arr).value)
    throw InvalidInputError("nearly_supersolvable_splitting: arrangement is not nearly supersolvable");
  const unsigned d = static_cast<unsigned>(arr.size());
  const unsigned m = max_multiplicity(arr);
  if (2 * m >= d) return SplittingType::normalized(d - m, m - 1);
  if (d % 2 == 0)
    throw InconclusiveError("nearly supersolvable with 2m < d and d even: the closed form (floor(d/2), floor(d/2)) "
                            "does not sum to d-1; no verdict");
  return SplittingType{d / 2, d / 2};
}

// Number of distinct points of l that lie on some line of the arrangement,
// i.e. |Sing(A + l) restricted to l|.
template <typename S>
unsigned restriction_count(const LineArrangement<S>& arr, const ProjLine<S>& l) {
  if (arr.contains(l)) throw InvalidInputError("restriction_count: line already belongs to the arrangement");
  std::set<ProjPoint<S>> pts;
  for (const auto& m : arr.lines()) pts.insert(meet(m, l));
  return static_cast<unsigned>(pts.size());
}

struct ChainStep {
  unsigned restriction = 0;
  char incremented = 'a';  // which exponent grew
  SplittingType after;
};

// One addition step: with certified splitting (a,b), a restriction count of
// b+1 yields (a+1, b) and a count of a+1 yields (a, b+1); the two rules agree
// when a = b. Any other count makes the chain route inapplicable.
template <typename S>
ChainStep addition_step(const LineArrangement<S>& arr, const SplittingType& st, const ProjLine<S>& l) {
  unsigned c = restriction_count(arr, l);
  ChainStep step;
  step.restriction = c;
  if (c == st.b + 1) {
    step.incremented = 'a';
    step.after = SplittingType::normalized(st.a + 1, st.b);
  } else if (c == st.a + 1) {
    step.incremented = 'b';
    step.after = SplittingType::normalized(st.a, st.b + 1);
  } else {
    throw AdditionInapplicableError("restriction count " + std::to_string(c) + " matches neither " +
                                        std::to_string(st.a + 1) + " nor " + std::to_string(st.b + 1),
                                    c);
  }
  return step;
}

template <typename S>
struct AdditionChainCertificate {
  SplittingType base;
  std::vector<std::pair<ProjLine<S>, ChainStep>> steps;
  SplittingType final;
};

template <typename S>
struct ChainOutcome {
  bool ok = false;
  AdditionChainCertificate<S> certificate;
  std::size_t failed_step = 0;  // valid when !ok
  std::string failure;
};

// Folds addition_step over an ordered list of new lines, starting from a
// certified base. On step failure the partial certificate and the failing
// index are returned; the empirical route remains available to the caller.
template <typename S>
ChainOutcome<S> addition_chain(const LineArrangement<S>& base, const SplittingType& base_splitting,
                               const std::vector<ProjLine<S>>& lines) {
  ChainOutcome<S> out;
  out.certificate.base = base_splitting;
  LineArrangement<S> cur = base;
  SplittingType st = base_splitting;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      ChainStep step = addition_step(cur, st, lines[i]);
      out.certificate.steps.emplace_back(lines[i], step);
      st = step.after;
      cur = cur.with_line(lines[i]);
    } catch (const Error& e) {
      out.failed_step = i;
      out.failure = e.what();
      out.certificate.final = st;
      return out;
    }
  }
  out.ok = true;
  out.certificate.final = st;
  return out;
}

}  // namespace uxc
