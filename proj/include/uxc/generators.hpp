#pragma once

#include <vector>

#include "uxc/arrangement.hpp"
#include "uxc/prime_field.hpp"

namespace uxc {

// All generators produce exact coordinates. Rational models are used wherever
// the construction lives over Q (the square, affine-regular triangle/hexagon,
// tic-tac-toe grids, the nine-point configuration and the hexagonal chains);
// everything else runs in a cyclotomic prime-field embedding.

LineArrangement<Rational> pencil(unsigned m);

// Regular n-gon sides + symmetry axes (+ line at infinity when complete).
// Even n: axes through opposite vertices and opposite edge midpoints; odd n:
// axes through each vertex and the opposite edge midpoint.
LineArrangement<Rational> polygonal_rational(unsigned n, bool complete);  // n in {3, 4, 6}
LineArrangement<Fp> polygonal_embedded(unsigned n, bool complete, const CyclotomicEmbedding& emb);

// Grid of 2k+1 vertical and horizontal lines plus 2j+1 diagonals and
// anti-diagonals; complete adds the line at infinity. Requires k >= j >= 0.
LineArrangement<Rational> tictactoe(unsigned k, unsigned j, bool complete);

// The nine points of the square configuration: vertices, center, two side
// directions and the two diagonal directions at infinity. Its dual arrangement
// has defining polynomial xyz(x+y+z)(x-y+z)(-x+y+z)(-x-y+z)(x+y)(x-y).
PointConfiguration<Rational> b3_points();
LineArrangement<Rational> b3_dual_arrangement();

enum class ChainPhase { Base, Ell, EllPrime, M, MPrime };

// Hexagonal chain over Q. The six marked points (+-1/2, +-1/4), (0, +-1/2)
// form an affine-regular hexagon; the base arrangement consists of the six
// chords P_i P_{i+2}, the three long diagonals, the three midline axes and the
// line at infinity (13 lines). The staged additions are the outer edges
// ell_i = P_i P_{i+1}, the six single-point lines ell'_i through P_i, the
// edges of the doubled hexagon m_i and the chords of the quadrupled hexagon
// m'_i, in that order.
struct HexagonChainData {
  std::vector<ProjPoint<Rational>> marked;  // P_1..P_6 in cyclic order
  LineArrangement<Rational> base;
  std::vector<ProjLine<Rational>> ell, ell_prime, m, m_prime;
};
HexagonChainData hexagon_chain_data();
LineArrangement<Rational> hexagon_chain(ChainPhase phase, unsigned count);

// Octagonal chain over a sqrt(2)-capable prime field. The eight marked points
// form a regular octagon of circumradius sqrt(2)/2; the base arrangement is
// the eight chords P_i P_{i+3}, the four long diagonals, the four midline axes
// and the line at infinity (17 lines). Added stages: ell_i = P_i P_{i+1}, then
// m_i = P_i P_{i+2}.
struct OctagonChainData {
  std::vector<ProjPoint<Fp>> marked;  // P_1..P_8
  LineArrangement<Fp> base;
  std::vector<ProjLine<Fp>> ell, m;
};
OctagonChainData octagon_chain_data(const CyclotomicEmbedding& emb);
LineArrangement<Fp> octagon_chain(ChainPhase phase, unsigned count, const CyclotomicEmbedding& emb);

// Float mirrors of the prime-field constructions, row for row; drawing only.
std::vector<std::array<double, 3>> polygonal_hints(unsigned n, bool complete);
std::vector<std::array<double, 3>> octagon_chain_hints(ChainPhase phase, unsigned count);

}  // namespace uxc
