#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uxc/generators.hpp"
#include "uxc/rng.hpp"
#include "uxc/splitting.hpp"

using namespace uxc;

TEST_CASE("pencil") {
  CHECK(pencil(1).size() == 1);
  CHECK(pencil(6).size() == 6);
  CHECK_THROWS_AS(pencil(0), InvalidInputError);
}

TEST_CASE("polygonal line counts and distinctness") {
  for (unsigned n : {3u, 4u, 6u}) {
    CHECK(polygonal_rational(n, false).size() == 2 * n);
    CHECK(polygonal_rational(n, true).size() == 2 * n + 1);
  }
  CHECK_THROWS_AS(polygonal_rational(5, true), FieldError);
  for (unsigned n = 3; n <= 10; ++n) {
    auto emb = CyclotomicEmbedding::for_ngon(n, 62, 400 + n);
    CHECK(polygonal_embedded(n, false, emb).size() == 2 * n);
    CHECK(polygonal_embedded(n, true, emb).size() == 2 * n + 1);
  }
}

TEST_CASE("polygonal supersolvability sweep, both backends") {
  for (unsigned n = 3; n <= 10; ++n) {
    auto emb = CyclotomicEmbedding::for_ngon(n, 62, 500 + n);
    CHECK(is_supersolvable(polygonal_embedded(n, false, emb)).value);
    CHECK(is_supersolvable(polygonal_embedded(n, true, emb)).value == (n % 2 == 0));
  }
  for (unsigned n : {3u, 4u, 6u}) {
    CHECK(is_supersolvable(polygonal_rational(n, false)).value);
    CHECK(is_supersolvable(polygonal_rational(n, true)).value == (n % 2 == 0));
  }
}

TEST_CASE("rational and embedded models of the same polygon are incidence equivalent") {
  for (unsigned n : {3u, 4u, 6u}) {
    auto emb = CyclotomicEmbedding::for_ngon(n, 62, 600 + n);
    CHECK(incidence_equivalent(polygonal_rational(n, true), polygonal_embedded(n, true, emb)));
  }
}

TEST_CASE("the complete square arrangement matches the nine-line model") {
  auto a = polygonal_rational(4, true);
  auto b = b3_dual_arrangement();
  CHECK(a.size() == 9);
  CHECK(b.size() == 9);
  CHECK(incidence_equivalent(a, b));
  CHECK(max_multiplicity(b) == 4);
}

TEST_CASE("b3 configuration") {
  auto z = b3_points();
  CHECK(z.size() == 9);
  // dual arrangement polynomial factors: xyz(x+y+z)(x-y+z)(-x+y+z)(-x-y+z)(x+y)(x-y)
  auto arr = b3_dual_arrangement();
  auto has = [&](long a, long b, long c) {
    return arr.contains(ProjLine<Rational>(Rational(a), Rational(b), Rational(c)));
  };
  CHECK(has(1, 0, 0));
  CHECK(has(0, 1, 0));
  CHECK(has(0, 0, 1));
  CHECK(has(1, 1, 1));
  CHECK(has(1, -1, 1));
  CHECK(has(-1, 1, 1));
  CHECK(has(-1, -1, 1));
  CHECK(has(1, 1, 0));
  CHECK(has(1, -1, 0));
}

TEST_CASE("the (1,0) grid is the square arrangement") {
  CHECK(incidence_equivalent(tictactoe(1, 0, false), polygonal_rational(4, false)));
}

TEST_CASE("grid incidences: anti-diagonal meets diagonal on the lattice iff parities match") {
  for (auto [k, j] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 2}}) {
    auto t = tictactoe(k, j, true);
    long c3 = 0;
    for (long a = -(long)j; a <= (long)j; ++a) {
      for (long b = -(long)j; b <= (long)j; ++b) {
        ProjLine<Rational> e(Rational(1), Rational(1), Rational(a));
        ProjLine<Rational> d(Rational(1), Rational(-1), Rational(b));
        auto x = meet(e, d);
        // lattice point iff both affine coordinates are integers in [-k, k]
        const auto& c = x.coords();
        Rational u = c[0] / c[2], v = c[1] / c[2];
        bool lattice = denominator(u) == 1 && denominator(v) == 1;
        CHECK(lattice == ((a + b) % 2 == 0));
        if (lattice) {
          CHECK(abs(numerator(u)) <= k);
          CHECK(abs(numerator(v)) <= k);
        }
      }
    }
    // the count entering the restriction computation: anti-diagonals meeting
    // d_{j+1} away from the lattice
    for (long a = -(long)j; a <= (long)j; ++a)
      if ((a + (long)j + 1) % 2 != 0) ++c3;
    CHECK(c3 == (long)j + 1);
  }
}

TEST_CASE("hexagonal chain stages") {
  auto d = hexagon_chain_data();
  CHECK(d.base.size() == 13);
  CHECK(is_supersolvable(d.base).value);
  CHECK(max_multiplicity(d.base) == 6);
  CHECK(hexagon_chain(ChainPhase::Ell, 6).size() == 19);
  CHECK(hexagon_chain(ChainPhase::EllPrime, 6).size() == 25);
  CHECK(hexagon_chain(ChainPhase::M, 6).size() == 31);
  CHECK(hexagon_chain(ChainPhase::MPrime, 6).size() == 37);
  CHECK_THROWS_AS(hexagon_chain(ChainPhase::Ell, 7), InvalidInputError);
  // every ell'_i passes through the marked point it is named after
  for (std::size_t i = 0; i < 6; ++i) CHECK(incident(d.marked[i], d.ell_prime[i]));
  // base is incidence equivalent to the embedded complete hexagon
  auto emb = CyclotomicEmbedding::for_ngon(6, 62, 8);
  CHECK(incidence_equivalent(d.base, polygonal_embedded(6, true, emb)));
}

TEST_CASE("the 25-line stage is dual to the singular points of the complete hexagon") {
  auto b6p = hexagon_chain(ChainPhase::EllPrime, 6);
  auto dual = dual_arrangement(hexagon_chain(ChainPhase::Base, 0));
  CHECK(dual.size() == 25);
  CHECK(incidence_equivalent(b6p, dual));
}

TEST_CASE("octagonal chain stages at two independent primes") {
  auto e1 = CyclotomicEmbedding::for_ngon(8, 62, 31);
  auto e2 = CyclotomicEmbedding::for_ngon(8, 62, 32);
  REQUIRE(e1.modulus() != e2.modulus());
  auto d1 = octagon_chain_data(e1);
  auto d2 = octagon_chain_data(e2);
  CHECK(d1.base.size() == 17);
  CHECK(is_supersolvable(d1.base).value);
  CHECK(max_multiplicity(d1.base) == 8);
  CHECK(incidence_equivalent(d1.base, d2.base));
  CHECK(octagon_chain(ChainPhase::Ell, 8, e1).size() == 25);
  CHECK(octagon_chain(ChainPhase::M, 8, e1).size() == 33);
  CHECK(incidence_equivalent(octagon_chain(ChainPhase::M, 3, e1), octagon_chain(ChainPhase::M, 3, e2)));
  CHECK_THROWS_AS(octagon_chain(ChainPhase::EllPrime, 1, e1), InvalidInputError);
  // sqrt(2) really is a square root of 2
  Fp t = e1.cos_units(2);
  CHECK((t + t) * (t + t) == Fp(2, e1.modulus()));
}

TEST_CASE("adding chain lines in any order reaches the same terminus") {
  Rng rng(99);
  auto hex = hexagon_chain_data();
  auto base_st = supersolvable_splitting(hex.base);
  auto reference = addition_chain(hex.base, base_st, hex.ell);
  REQUIRE(reference.ok);
  for (int t = 0; t < 5; ++t) {
    auto perm = hex.ell;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    auto out = addition_chain(hex.base, base_st, perm);
    REQUIRE(out.ok);
    CHECK(out.certificate.final == reference.certificate.final);
  }

  auto emb = CyclotomicEmbedding::for_ngon(8, 62, 77);
  auto oct = octagon_chain_data(emb);
  auto oct_st = supersolvable_splitting(oct.base);
  auto oct_ref = addition_chain(oct.base, oct_st, oct.ell);
  REQUIRE(oct_ref.ok);
  for (int t = 0; t < 5; ++t) {
    auto perm = oct.ell;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    auto out = addition_chain(oct.base, oct_st, perm);
    REQUIRE(out.ok);
    CHECK(out.certificate.final == oct_ref.certificate.final);
  }
}
