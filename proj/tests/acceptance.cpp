// Acceptance suite: one verdict line per criterion. Every expected value is
// exact; randomized steps must agree across >= 3 generic samples and >= 2
// independent primes before they count.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "uxc/certifier.hpp"
#include "uxc/generators.hpp"
#include "uxc/pipeline.hpp"

using namespace uxc;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

template <typename A, typename B>
void expect_eq(const A& a, const B& b, const std::string& what) {
  if (!(a == b)) {
    std::ostringstream ss;
    ss << what << " (got " << a << ", want " << b << ")";
    throw Failure(ss.str());
  }
}

void expect_split(const SplittingType& got, unsigned a, unsigned b, const std::string& what) {
  if (got != SplittingType::normalized(a, b))
    throw Failure(what + ": splitting " + got.str() + ", want " + SplittingType::normalized(a, b).str());
}

ProjPoint<Rational> rp(long a, long b, long c) {
  return ProjPoint<Rational>(Rational(a), Rational(b), Rational(c));
}

// ---- criterion 1: the nine-point flagship ----
void criterion_1(std::ostream&) {
  auto z = b3_points();
  auto dim4 = ideal_dimension(z, FatPointScheme<Rational>::none(), 4, 1);
  expect_eq(dim4.dimension, 6u, "dim of quartics through the nine points");
  expect_eq(expected_dimension(z, FatPointScheme<Rational>::generic(3, 1), 4), 0u, "expected count");
  auto v = certify(z, 3, 42);
  expect(v.admits, "nine points must admit unexpected curves");
  expect_split(v.splitting, 3, 5, "nine points");
  expect_eq(v.degree_low, 3u, "interval low");
  expect_eq(v.degree_high, 4u, "interval high");
  expect_eq(*v.minimal_degree_dimension, 1u, "unique quartic");
  expect(v.curve.has_value() && v.curve->degree == 4, "explicit quartic coefficients");
  expect(v.stable, "flagship must be stable");
}

// ---- criterion 2: polygonal sweep N = 3..8 ----
void criterion_2(std::ostream& log) {
  for (unsigned n = 3; n <= 8; ++n) {
    for (unsigned trial = 0; trial < 2; ++trial) {  // two independent embedding primes
      auto emb = CyclotomicEmbedding::for_ngon(n, 62, 1000 * n + trial);
      auto open = polygonal_embedded(n, false, emb);
      auto sv = certify_supersolvable(open);
      expect(!sv.admits, "open polygonal must never admit (N=" + std::to_string(n) + ")");
      expect_eq(sv.d, 2 * n, "open line count");
      expect_eq(sv.m, n, "open max multiplicity");
      expect_split(sv.splitting, n - 1, n, "open polygonal N=" + std::to_string(n));
      expect(sv.splitting == empirical_splitting(open, 3, 19 + n), "open closed form = empirical");
      auto general_open = certify(dual_configuration(open), 3, 77 + n);
      expect(!general_open.admits, "general certifier agrees on open polygonal");

      auto complete = polygonal_embedded(n, true, emb);
      if (n % 2 == 0) {
        auto st = supersolvable_splitting(complete);
        expect_split(st, n - 1, n + 1, "complete polygonal N=" + std::to_string(n));
        expect(st == empirical_splitting(complete, 3, 31 + n), "closed form = empirical");
        auto cv = certify_supersolvable(complete);
        expect(cv.admits, "complete even polygonal admits");
        expect_eq(*cv.unique_degree, n, "unique curve degree N");
        auto gv = certify(dual_configuration(complete), 3, 13 + n);
        expect(gv.admits, "general certifier admits");
        expect_eq(gv.degree_low + 1, n, "minimal curve degree");
        expect_eq(gv.degree_high, n, "only one admissible degree");
        expect_eq(*gv.minimal_degree_dimension, 1u, "uniqueness");
      } else {
        expect(!is_supersolvable(complete).value, "complete odd polygonal is not supersolvable");
        auto gv = certify(dual_configuration(complete), 3, 13 + n);
        expect(!gv.admits, "complete odd polygonal admits nothing (construction-dependent)");
      }
    }
    if (n % 2 == 1) log << "    N=" << n << " complete verdict flagged construction-dependent\n";
  }
}

// ---- criterion 3: tic-tac-toe grids ----
void criterion_3(std::ostream&) {
  for (auto [k, j] : std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
    const std::string tag = "grid (" + std::to_string(k) + "," + std::to_string(j) + ")";
    // chain route from the supersolvable base, four lines per diagonal round
    auto base = tictactoe(k, 0, true);
    SplittingType st = supersolvable_splitting(base);
    expect_split(st, 2 * k + 1, 2 * k + 3, tag + " base");
    LineArrangement<Rational> cur = base;
    for (unsigned jj = 0; jj < j; ++jj) {
      long v = static_cast<long>(jj) + 1;
      std::vector<ProjLine<Rational>> add = {
          ProjLine<Rational>(Rational(1), Rational(-1), Rational(v)),
          ProjLine<Rational>(Rational(1), Rational(-1), Rational(-v)),
          ProjLine<Rational>(Rational(1), Rational(1), Rational(v)),
          ProjLine<Rational>(Rational(1), Rational(1), Rational(-v))};
      auto out = addition_chain(cur, st, add);
      expect(out.ok, tag + " chain step applies");
      st = out.certificate.final;
      for (const auto& l : add) cur = cur.with_line(l);
    }
    expect_split(st, 2 * k + 1 + 2 * j, 2 * k + 3 + 2 * j, tag + " chain terminus");

    auto grid = tictactoe(k, j, true);
    expect(st == empirical_splitting(grid, 3, 5 * k + j), tag + " empirical route");
    expect_eq(restriction_count(grid, ProjLine<Rational>(Rational(1), Rational(-1), Rational((long)j + 1))),
              2 * k + 2 * j + 4, tag + " restriction count of the next diagonal");

    auto v = certify(dual_configuration(grid), 3, 7 * k + j);
    expect(v.admits, tag + " admits");
    expect_eq(v.degree_low + 1, 2 * (k + j + 1), tag + " minimal curve degree");
    expect_eq(v.degree_high, 2 * (k + j + 1), tag + " single admissible degree");
    expect_eq(*v.minimal_degree_dimension, 1u, tag + " uniqueness");
  }
}

// ---- criterion 4: hexagonal chains ----
void criterion_4(std::ostream&) {
  auto d = hexagon_chain_data();
  auto base_st = supersolvable_splitting(d.base);
  expect_split(base_st, 5, 7, "hexagonal base");

  auto run_phase = [&](const LineArrangement<Rational>& from, SplittingType st,
                       const std::vector<ProjLine<Rational>>& lines, unsigned want_count,
                       const std::vector<SplittingType>& seq, const std::string& tag) {
    auto out = addition_chain(from, st, lines);
    expect(out.ok, tag + " chain applies");
    expect_eq(out.certificate.steps.size(), seq.size(), tag + " step count");
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (want_count)
        expect_eq(out.certificate.steps[i].second.restriction, want_count,
                  tag + " restriction count at step " + std::to_string(i + 1));
      expect(out.certificate.steps[i].second.after == seq[i],
             tag + " splitting after step " + std::to_string(i + 1) + ": got " +
                 out.certificate.steps[i].second.after.str() + ", want " + seq[i].str());
    }
    return out.certificate.final;
  };

  auto seq = [](std::initializer_list<std::pair<unsigned, unsigned>> xs) {
    std::vector<SplittingType> v;
    for (auto [a, b] : xs) v.push_back(SplittingType::normalized(a, b));
    return v;
  };

  auto st1 = run_phase(d.base, base_st, d.ell, 8,
                       seq({{6, 7}, {7, 7}, {8, 7}, {9, 7}, {10, 7}, {11, 7}}), "ell phase");
  auto b6 = hexagon_chain(ChainPhase::Ell, 6);
  expect(st1 == empirical_splitting(b6, 3, 61), "ell terminus empirical");

  auto st2 = run_phase(b6, st1, d.ell_prime, 12,
                       seq({{11, 8}, {11, 9}, {11, 10}, {11, 11}, {11, 12}, {11, 13}}), "ell' phase");
  auto b6p = hexagon_chain(ChainPhase::EllPrime, 6);
  expect(st2 == empirical_splitting(b6p, 3, 62), "ell' terminus empirical");

  auto st3 = run_phase(b6p, st2, d.m, 0, seq({{12, 13}, {13, 13}, {14, 13}, {15, 13}, {16, 13}, {17, 13}}),
                       "m phase");
  auto b6pp = hexagon_chain(ChainPhase::M, 6);
  expect(st3 == empirical_splitting(b6pp, 3, 63), "m terminus empirical");

  auto st4 = run_phase(b6pp, st3, d.m_prime, 0,
                       seq({{17, 14}, {17, 15}, {17, 16}, {17, 17}, {17, 18}, {17, 19}}), "m' phase");
  expect_split(st4, 17, 19, "m' terminus");
  expect(st4 == empirical_splitting(hexagon_chain(ChainPhase::MPrime, 6), 3, 64), "m' terminus empirical");

  // admissible degrees along the first phase
  for (unsigned i = 1; i <= 6; ++i) {
    auto v = certify(dual_configuration(hexagon_chain(ChainPhase::Ell, i)), 3, 70 + i);
    if (i <= 3) {
      expect(!v.admits, "B" + std::to_string(i) + " admits nothing");
    } else {
      expect(v.admits, "B" + std::to_string(i) + " admits");
      expect_eq(v.degree_high, 4 + i, "B" + std::to_string(i) + " top degree");  // 8, 9, 10
    }
  }

  expect(incidence_equivalent(b6p, dual_arrangement(d.base)),
         "25-line stage is dual to the singular points of the base");
}

// ---- criterion 5: octagonal chains at two independent primes ----
void criterion_5(std::ostream&) {
  for (unsigned trial = 0; trial < 2; ++trial) {
    auto emb = CyclotomicEmbedding::for_ngon(8, 62, 5000 + trial);
    auto d = octagon_chain_data(emb);
    const std::string tag = "octagon p=" + std::to_string(emb.modulus());
    auto st = supersolvable_splitting(d.base);
    expect_split(st, 7, 9, tag + " base");
    expect(st == empirical_splitting(d.base, 3, 90 + trial), tag + " base empirical");

    auto out = addition_chain(d.base, st, d.ell);
    expect(out.ok, tag + " ell chain applies");
    for (std::size_t i = 0; i < 8; ++i)
      expect(out.certificate.steps[i].second.after == SplittingType::normalized(7 + i + 1, 9),
             tag + " ell step " + std::to_string(i + 1));
    auto ell_st = out.certificate.final;
    expect_split(ell_st, 15, 9, tag + " ell terminus");

    auto full_ell = octagon_chain(ChainPhase::Ell, 8, emb);
    auto mout = addition_chain(full_ell, ell_st, d.m);
    expect(mout.ok, tag + " m chain applies");
    for (std::size_t i = 0; i < 8; ++i)
      expect(mout.certificate.steps[i].second.after == SplittingType::normalized(15, 9 + i + 1),
             tag + " m step " + std::to_string(i + 1));

    for (unsigned i = 1; i <= 8; ++i) {
      auto v = certify(dual_configuration(octagon_chain(ChainPhase::Ell, i, emb)), 3, 300 + i);
      expect_split(v.splitting, 7 + i, 9, tag + " ell empirical splitting at i=" + std::to_string(i));
      bool want = i >= 4;
      expect(v.admits == want, tag + " ell admission at i=" + std::to_string(i));
    }
    for (unsigned j = 1; j <= 8; ++j) {
      auto v = certify(dual_configuration(octagon_chain(ChainPhase::M, j, emb)), 3, 400 + j);
      expect_split(v.splitting, 15, 9 + j, tag + " m empirical splitting at j=" + std::to_string(j));
      bool want = j <= 4 || j == 8;
      expect(v.admits == want, tag + " m admission at j=" + std::to_string(j));
    }
  }
}

// ---- criterion 6: splitting-criterion route vs raw definition on random configurations ----
void criterion_6(std::ostream& log) {
  Rng rng(20260811);
  unsigned checked = 0;
  for (unsigned t = 0; t < 50; ++t) {
    const unsigned n = 6 + static_cast<unsigned>(rng.below(9));  // |Z| in [6, 14]
    std::vector<ProjPoint<Rational>> pts;
    while (pts.size() < n) {
      long a = rng.int_in(-9, 9), b = rng.int_in(-9, 9), c = rng.int_in(-9, 9);
      if (!a && !b && !c) continue;
      ProjPoint<Rational> p = rp(a, b, c);
      bool dup = false;
      for (const auto& q : pts) dup = dup || q == p;
      if (!dup) pts.push_back(p);
    }
    PointConfiguration<Rational> z(pts);
    auto m = multiplicity_index(z, 3, 9000 + t);
    const unsigned a = std::min(m.value, n - 1 - m.value);
    const unsigned b = n - 1 - a;
    const bool admits = (2 * a + 2 < n) && (max_collinear(z) < a + 2);
    for (unsigned degree = 2; degree + 2 <= n; ++degree) {
      const bool thm_route = admits && a < degree && degree <= b - 1;
      auto rep = ideal_dimension(z, FatPointScheme<Rational>::generic(degree - 1, 500 + t), degree, 3);
      unsigned exp = expected_dimension(z, FatPointScheme<Rational>::generic(degree - 1, 1), degree);
      const bool def_route = rep.dimension > exp;
      if (thm_route != def_route) {
        std::ostringstream ss;
        ss << "mismatch at config " << t << " (|Z|=" << n << ", a=" << a << ", deg=" << degree
           << "): splitting-criterion=" << thm_route << " definition=" << def_route;
        throw Failure(ss.str());
      }
      ++checked;
    }
  }
  log << "    " << checked << " (configuration, degree) pairs cross-checked\n";
}

// ---- criterion 7: uniqueness ladders and the fat-scheme extension ----
void criterion_7(std::ostream&) {
  struct Case {
    PointConfiguration<Rational> z;
    unsigned a, b;
    std::string tag;
  };
  std::vector<Case> cases = {{b3_points(), 3, 5, "nine points"},
                             {dual_configuration(hexagon_chain(ChainPhase::Ell, 6)), 7, 11, "19-line dual"}};
  for (const auto& c : cases) {
    for (unsigned r = 0; r + c.a + 2 <= c.b; ++r) {
      auto rep = ideal_dimension(c.z, FatPointScheme<Rational>::generic(c.a + r, 600 + r), c.a + r + 1, 3);
      expect_eq(rep.dimension, r + 1, c.tag + " ladder at r=" + std::to_string(r));
    }
    for (unsigned j = 0; j + c.a + 2 <= c.b; ++j) {
      FatPointScheme<Rational> x;
      x.seed = 700 + j;
      x.parts.push_back({std::nullopt, c.a + j});
      for (unsigned i = 0; i < j; ++i) x.parts.push_back({std::nullopt, 1});
      auto v = certify_problem_b(c.z, x, c.a + j + 1, 3);
      expect(v.unexpected, c.tag + " fat-scheme case j=" + std::to_string(j));
      expect_eq(v.actual, 1u, c.tag + " fat-scheme dimension at j=" + std::to_string(j));
      expect_eq(v.expected_dim, 0u, c.tag + " fat-scheme expected at j=" + std::to_string(j));
    }
    // one step beyond the admissible range
    unsigned j = c.b - c.a - 1;
    FatPointScheme<Rational> x;
    x.seed = 800;
    x.parts.push_back({std::nullopt, c.a + j});
    for (unsigned i = 0; i < j; ++i) x.parts.push_back({std::nullopt, 1});
    expect(!certify_problem_b(c.z, x, c.a + j + 1, 3).unexpected, c.tag + " beyond-range case");
  }
}

// ---- criterion 8: invariant suite ----
void criterion_8(std::ostream& log) {
  std::vector<LineArrangement<Rational>> rational_families;
  for (unsigned m = 2; m <= 8; ++m) rational_families.push_back(pencil(m));
  for (unsigned n : {3u, 4u, 6u}) {
    rational_families.push_back(polygonal_rational(n, false));
    rational_families.push_back(polygonal_rational(n, true));
  }
  for (auto [k, j] : std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
    rational_families.push_back(tictactoe(k, j, false));
    rational_families.push_back(tictactoe(k, j, true));
  }
  rational_families.push_back(b3_dual_arrangement());
  for (auto phase : {ChainPhase::Ell, ChainPhase::EllPrime, ChainPhase::M, ChainPhase::MPrime})
    for (unsigned c : {3u, 6u}) rational_families.push_back(hexagon_chain(phase, c));

  std::vector<LineArrangement<Fp>> embedded_families;
  for (unsigned n = 3; n <= 8; ++n) {
    auto emb = CyclotomicEmbedding::for_ngon(n, 62, 42 * n);
    embedded_families.push_back(polygonal_embedded(n, false, emb));
    embedded_families.push_back(polygonal_embedded(n, true, emb));
  }
  {
    auto emb = CyclotomicEmbedding::for_ngon(8, 62, 4242);
    embedded_families.push_back(octagon_chain(ChainPhase::Ell, 8, emb));
    embedded_families.push_back(octagon_chain(ChainPhase::M, 8, emb));
  }

  unsigned supersolvable_count = 0;
  auto check_family = [&](const auto& arr) {
    const auto& sing = singular_locus(arr);
    expect(sing.partition_identity_holds(arr.size()), "partition identity");
    auto ss = is_supersolvable(arr);
    if (ss.value) {
      ++supersolvable_count;
      auto st = supersolvable_splitting(arr);
      expect_eq(st.a + st.b, static_cast<unsigned>(arr.size()) - 1, "a+b = d-1 (closed form)");
      // modular points dominate non-modular multiplicities; maxima are modular
      auto mods = modular_points(arr);
      unsigned maxmod = 0;
      auto find_mult = [&](const auto& p) { return sing.entries[*sing.find(p)].multiplicity; };
      for (const auto& p : mods) maxmod = std::max(maxmod, find_mult(p));
      unsigned maxall = max_multiplicity(arr);
      for (const auto& e : sing.entries) {
        bool is_mod = false;
        for (const auto& p : mods) is_mod = is_mod || p == e.point;
        if (!is_mod) expect(maxmod > e.multiplicity, "modular multiplicity dominates");
        if (e.multiplicity == maxall) expect(is_mod, "maximal points are modular");
      }
      if (is_full_rank(arr)) {
        unsigned doubles = 0;
        for (const auto& e : sing.entries)
          if (e.multiplicity == 2) ++doubles;
        expect(doubles + maxall >= arr.size(), "|Sing_2| + m >= |A| for full-rank supersolvable");
      }
    }
  };
  for (const auto& a : rational_families) check_family(a);
  for (const auto& a : embedded_families) check_family(a);
  log << "    " << rational_families.size() + embedded_families.size() << " families checked, "
      << supersolvable_count << " supersolvable\n";

  // splittings from every route satisfy a + b = d - 1
  for (const auto& a : rational_families) {
    if (a.size() < 2) continue;
    auto st = empirical_splitting(a, 3, 1234);
    expect_eq(st.a + st.b, static_cast<unsigned>(a.size()) - 1, "a+b = d-1 (empirical)");
  }

  // dimension monotonicity / semicontinuity on random instances
  Rng rng(88);
  unsigned instances = 0;
  for (unsigned t = 0; t < 100; ++t) {
    const unsigned n = 4 + static_cast<unsigned>(rng.below(5));
    std::vector<ProjPoint<Rational>> pts;
    while (pts.size() < n) {
      long a = rng.int_in(-8, 8), b = rng.int_in(-8, 8), c = rng.int_in(-8, 8);
      if (!a && !b && !c) continue;
      ProjPoint<Rational> p = rp(a, b, c);
      bool dup = false;
      for (const auto& q : pts) dup = dup || q == p;
      if (!dup) pts.push_back(p);
    }
    PointConfiguration<Rational> z(pts);
    PointConfiguration<Rational> smaller(std::vector<ProjPoint<Rational>>(pts.begin(), pts.end() - 1));
    const unsigned deg = 2 + static_cast<unsigned>(rng.below(4));
    const unsigned mult = 1 + static_cast<unsigned>(rng.below(3));
    auto base = ideal_dimension(z, FatPointScheme<Rational>::none(), deg, 1);
    expect(ideal_dimension(smaller, FatPointScheme<Rational>::none(), deg, 1).dimension >= base.dimension,
           "monotone in |Z|");
    expect(ideal_dimension(z, FatPointScheme<Rational>::none(), deg + 1, 1).dimension >= base.dimension,
           "monotone in degree");
    auto x1 = FatPointScheme<Rational>::generic(mult, 100 + t);
    auto x2 = FatPointScheme<Rational>::generic(mult + 1, 100 + t);
    auto d1 = ideal_dimension(z, x1, deg, 3);
    auto d2 = ideal_dimension(z, x2, deg, 3);
    expect(d2.dimension <= d1.dimension, "monotone in multiplicity");
    expect(d1.dimension >= expected_dimension(z, x1, deg), "actual >= expected");
    if (t % 10 == 0) {
      auto d5 = ideal_dimension(z, x1, deg, 5);
      expect_eq(d5.dimension, d1.dimension, "min over 5 samples = min over 3");
    }
    ++instances;
  }
  log << "    " << instances << " random dimension instances checked\n";
}

// ---- criterion 9: non-reproducible content + constructible stand-ins ----
void criterion_9(std::ostream& log) {
  log << "    sporadic catalog verdicts (private coordinates) are not acceptance targets; "
         "exercising the dual-arrangement and high-order-point pipelines on constructible inputs\n";
  // dual of the complete square arrangement, over Q
  auto p4bar = polygonal_rational(4, true);
  auto dual = dual_arrangement(p4bar);
  expect_eq(dual.size(), static_cast<std::size_t>(13), "dual of the complete square has 13 lines");
  expect(singular_locus(dual).partition_identity_holds(dual.size()), "partition identity on the dual");
  auto high = sing_at_least(dual, 3);
  expect_eq(high.size(), static_cast<std::size_t>(13), "13 points of multiplicity >= 3 on the dual");
  // each of the 9 original lines carries 4 collinear singular points, so its
  // dual point has multiplicity 4
  expect_eq(sing_at_least(dual, 4).size(), static_cast<std::size_t>(9),
            "the duals of the 9 original lines have multiplicity 4");
  // the dual of the complete square arrangement is itself a 13-line catalog
  // arrangement; its high-order point configurations are certified end to end
  // and their splitting types computed from first principles
  struct Row {
    unsigned k, size, a, b;
  };
  for (Row r : {Row{4, 9, 3, 5}, Row{3, 13, 5, 7}, Row{2, 25, 11, 13}}) {
    auto zk = sing_at_least(dual, r.k);
    expect_eq(zk.size(), static_cast<std::size_t>(r.size), "|sing>=" + std::to_string(r.k) + "(dual)|");
    auto vk = certify(zk, 3, 95 + r.k, {}, /*want_curve=*/false);
    expect(vk.stable, "high-order-point verdict is stable");
    expect_split(vk.splitting, r.a, r.b, "sing>=" + std::to_string(r.k) + "(dual)");
    expect(vk.admits, "sing>=" + std::to_string(r.k) + "(dual) admits");
    log << "    sing>=" << r.k << "(dual): " << zk.size() << " points, splitting " << vk.splitting.str()
        << ", admits yes\n";
  }
  // hexagonal duality stand-in (shared with criterion 4)
  expect(incidence_equivalent(hexagon_chain(ChainPhase::EllPrime, 6),
                              dual_arrangement(hexagon_chain(ChainPhase::Base, 0))),
         "constructible duality stand-in");
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(std::ostream&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "nine-point flagship: unique unexpected quartic", criterion_1},
      {2, "polygonal sweep N=3..8: admission iff complete and even", criterion_2},
      {3, "tic-tac-toe grids: chain = empirical, curves of degree 2(k+j+1)", criterion_3},
      {4, "hexagonal chains: step-by-step splitting sequences", criterion_4},
      {5, "octagonal chains at two primes: admission pattern", criterion_5},
      {6, "splitting-criterion route = definition route on 50 random configurations", criterion_6},
      {7, "uniqueness ladders and fat-scheme extensions", criterion_7},
      {8, "invariant suite: partition, bounds, monotonicity", criterion_8},
      {9, "non-reproducible content stated; constructible stand-ins", criterion_9},
  };
  int failures = 0;
  for (auto& c : criteria) {
    std::ostringstream log;
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (error.empty()) {
      std::printf("[PASS] criterion %d: %s (%.0f ms)\n", c.id, c.name.c_str(), ms);
    } else {
      ++failures;
      std::printf("[FAIL] criterion %d: %s (%.0f ms)\n       %s\n", c.id, c.name.c_str(), ms, error.c_str());
    }
    std::fputs(log.str().c_str(), stdout);
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
