#pragma once

// Random generators shared by the property tests.

#include <random>

#include "hopfish/algebra.hpp"
#include "hopfish/phase.hpp"

namespace hopfish::testing {

inline Rational random_rational(std::mt19937_64& rng, int num = 6, int den = 4) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return Rational(n(rng), d(rng));
}

inline PhaseExponent random_exponent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<std::pair<SymbolId, Rational>> al;
  if (coin(rng) == 0) al.emplace_back(1, random_rational(rng));
  if (coin(rng) == 0) al.emplace_back(2, random_rational(rng));
  return PhaseExponent(random_rational(rng), random_rational(rng), al);
}

inline Gaussian random_gaussian(std::mt19937_64& rng) {
  return {random_rational(rng, 3, 3), random_rational(rng, 3, 3)};
}

inline SymScalar random_monomial(std::mt19937_64& rng) {
  Gaussian c;
  while (c.is_zero()) c = random_gaussian(rng);
  return SymScalar(c, random_exponent(rng));
}

/// Unit phase e^{i phi} with phi random.
inline SymScalar random_phase(std::mt19937_64& rng) { return SymScalar::phase(random_exponent(rng)); }

inline SymScalar random_scalar(std::mt19937_64& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> n(0, max_terms);
  SymScalar s;
  int k = n(rng);
  for (int i = 0; i < k; ++i) s += random_monomial(rng);
  return s;
}

inline AlgebraElement random_element(std::mt19937_64& rng, int max_terms = 4, int range = 3) {
  std::uniform_int_distribution<int> n(1, max_terms), idx(-range, range);
  AlgebraElement a;
  int k = n(rng);
  for (int i = 0; i < k; ++i) a += basis(idx(rng), idx(rng), random_monomial(rng));
  return a;
}

inline AlgebraElement random_unitary_monomial(std::mt19937_64& rng, int range = 4) {
  std::uniform_int_distribution<int> idx(-range, range);
  return basis(idx(rng), idx(rng), random_phase(rng));
}

inline Int random_index(std::mt19937_64& rng, int range = 3) {
  return std::uniform_int_distribution<int>(-range, range)(rng);
}

}  // namespace hopfish::testing
