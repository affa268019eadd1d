#pragma once

// Coproduct, counit and antipode bimodules over the rotation algebra, the
// matrix calculus on maps Delta -> epsilon, and the weak antipode pairing.

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "hopfish/algebra.hpp"
#include "hopfish/sparse.hpp"

namespace hopfish {

struct DeltaTag {};
struct EpsilonTag {};
struct STag {};
struct HomTag {};
struct TripleTag {};

using Index3 = std::array<Int, 3>;
using Index4 = std::array<Int, 4>;

/// Basis d_{n1 n2 l}.
using DeltaVector = SparseVector<Index3, DeltaTag>;
/// Basis e_l.
using EpsilonVector = SparseVector<Int, EpsilonTag>;
/// Basis s_{nl}.
using SVector = SparseVector<Index2, STag>;
/// Matrix elements zeta^l_n, keyed (l, n).
using HomMatrix = SparseVector<Index2, HomTag>;

inline DeltaVector d_basis(Int n1, Int n2, Int l, const SymScalar& c = SymScalar::one()) {
  return DeltaVector::basis({n1, n2, l}, c);
}
inline EpsilonVector e_basis(Int l, const SymScalar& c = SymScalar::one()) { return EpsilonVector::basis(l, c); }
inline SVector s_basis(Int n, Int l, const SymScalar& c = SymScalar::one()) { return SVector::basis({n, l}, c); }

/// Element of A (x) A as a list of pure tensors; no canonical form is sought.
struct PureTensorSum {
  std::vector<std::pair<AlgebraElement, AlgebraElement>> terms;

  PureTensorSum() = default;
  PureTensorSum(AlgebraElement a, AlgebraElement b) { terms.emplace_back(std::move(a), std::move(b)); }

  PureTensorSum& operator+=(const PureTensorSum& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }
  friend PureTensorSum operator+(PureTensorSum a, const PureTensorSum& b) { return a += b; }
};
inline PureTensorSum tensor(AlgebraElement a, AlgebraElement b) { return {std::move(a), std::move(b)}; }
/// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
PureTensorSum tensor_mul(const PureTensorSum& x, const PureTensorSum& y);

DeltaVector delta_right_act(const DeltaVector& d, const AlgebraElement& a);
DeltaVector delta_left_act(const PureTensorSum& x, const DeltaVector& d);
EpsilonVector epsilon_act(const EpsilonVector& e, const AlgebraElement& a);
SVector s_left_act(const PureTensorSum& x, const SVector& s);

/// S(a_{mj}) = e^{-i lambda m j} a_{-m,j}, extended linearly.
AlgebraElement antipode(const AlgebraElement& a);

/// Right action of A (x) A on maps Delta -> epsilon, (zeta . x)(d) = zeta(x . d).
HomMatrix hom_act(const HomMatrix& z, const PureTensorSum& x);
/// <zeta, s> = (zeta . (a_s (x) 1))^0_0 with s = (a_s (x) 1) . s_00.
SymScalar pairing(const HomMatrix& z, const SVector& s);
/// The a_s above.
AlgebraElement s_generator(const SVector& s);

// ---- tensor products over A (x) A ----

enum class TripleSide { LeftAssoc, RightAssoc };

/// Canonical basis of (A (x) Delta) (x)_{A(x)A} Delta, key (n1, n2, n3, l) for
/// (1 (x) d_{n1 n2 0}) (x) d_{n3 0 l}; or of (Delta (x) A) (x)_{A(x)A} Delta,
/// key (n1, n2, n3, l) for (d_{n1 n2 0} (x) 1) (x) d_{0 n3 l}.
struct TripleVector {
  TripleSide side = TripleSide::LeftAssoc;
  SparseVector<Index4, TripleTag> v;

  friend bool operator==(const TripleVector& a, const TripleVector& b) { return a.side == b.side && a.v == b.v; }
  friend bool operator!=(const TripleVector& a, const TripleVector& b) { return !(a == b); }
};

/// (a (x) d) (x) d' for LeftAssoc, (d (x) a) (x) d' for RightAssoc.
struct RawTriple {
  AlgebraElement a;
  DeltaVector d;
  DeltaVector dp;
};

struct RawTripleSum {
  TripleSide side = TripleSide::LeftAssoc;
  std::vector<RawTriple> terms;
};

TripleVector reduce_triple(const RawTripleSum& t);
/// Canonical vector written back as a raw expression (1 in the A slot).
RawTripleSum as_raw(const TripleVector& t);

/// Left action of A (x) A (x) A and right action of A on raw triples.
struct TripleAlgebraElement {
  std::vector<std::array<AlgebraElement, 3>> terms;
};
RawTripleSum triple_left_act(const TripleAlgebraElement& x, const RawTripleSum& t);
RawTripleSum triple_right_act(const RawTripleSum& t, const AlgebraElement& a);

TripleVector coassoc_iso(const TripleVector& t);
TripleVector coassoc_iso_inverse(const TripleVector& t);

enum class CounitSide { EpsilonA, AEpsilon };

/// (e (x) a) (x) d for EpsilonA, (a (x) e) (x) d for AEpsilon.
struct RawCounit {
  EpsilonVector e;
  AlgebraElement a;
  DeltaVector d;
};
struct RawCounitSum {
  CounitSide side = CounitSide::EpsilonA;
  std::vector<RawCounit> terms;
};

/// Isomorphism with A sending the class of (e_0 (x) 1) (x) d_000 to a_00.
AlgebraElement counit_reduce(const RawCounitSum& t);
RawCounitSum counit_left_act(const AlgebraElement& b, const RawCounitSum& t);
RawCounitSum counit_right_act(const RawCounitSum& t, const AlgebraElement& b);

}  // namespace hopfish
