#include "uxc/interpolation.hpp"

namespace uxc {

std::vector<std::array<unsigned, 3>> monomials_of_degree(unsigned d) {
  std::vector<std::array<unsigned, 3>> out;
  out.reserve(monomial_count(d));
  for (int a = static_cast<int>(d); a >= 0; --a)
    for (int b = static_cast<int>(d) - a; b >= 0; --b)
      out.push_back({static_cast<unsigned>(a), static_cast<unsigned>(b),
                     d - static_cast<unsigned>(a) - static_cast<unsigned>(b)});
  return out;
}

std::vector<std::array<unsigned, 3>> multi_indices_of_order(unsigned t) {
  return monomials_of_degree(t);
}

}  // namespace uxc
