#pragma once

// The rotation algebra of finite Fourier series in the basis a_{nl}.

#include <complex>
#include <optional>
#include <utility>

#include "hopfish/phase.hpp"
#include "hopfish/sparse.hpp"

namespace hopfish {

using Index2 = std::pair<Int, Int>;
struct AlgebraTag {};
using AlgebraElement = SparseVector<Index2, AlgebraTag>;

/// nullopt is the degree of 0 and sorts below every (n, l).
using Degree = std::optional<Index2>;

AlgebraElement basis(Int n, Int l, const SymScalar& c = SymScalar::one());
inline AlgebraElement unit() { return basis(0, 0); }

/// e^{i lambda n1 l2} a_{n1+n2, l1+l2} on basis elements.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); }
AlgebraElement power(const AlgebraElement& a, Int d);

/// a*_{nl} = e^{i lambda n l} a_{-n,-l}, extended conjugate-linearly.
AlgebraElement star(const AlgebraElement& a);

/// (max, min) in lexicographic order.
std::pair<Degree, Degree> degree_extrema(const AlgebraElement& a);

AlgebraElement invert(const AlgebraElement& a);

/// e^{i phi} a_{pq} split into its parts.
struct UnitaryMonomial {
  PhaseExponent phi;
  Int p;
  Int q;
};
UnitaryMonomial as_unitary_monomial(const AlgebraElement& a);

/// Principal d-th root, when d divides p and q.
std::optional<AlgebraElement> dth_root(const AlgebraElement& a, Int d);
Int root_order(const AlgebraElement& a);

/// Value of a as a function on (theta, k).
std::complex<double> eval_function(const AlgebraElement& a, double theta, Int k, const Assignment& assign);
/// Groupoid convolution (a * b)(theta, k) summed directly.
std::complex<double> convolve_numeric(const AlgebraElement& a, const AlgebraElement& b, double theta, Int k,
                                      const Assignment& assign);

}  // namespace hopfish
