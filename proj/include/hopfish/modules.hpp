#pragma once

// The cyclic right A-modules T^alpha_{pq} on the basis xi_n.

#include <vector>

#include "hopfish/algebra.hpp"
#include "hopfish/phase.hpp"
#include "hopfish/sparse.hpp"

namespace hopfish {

struct ModuleClass {
  PhaseExponent alpha;
  Int p = 1;
  Int q = 0;

  ModuleClass() = default;
  ModuleClass(PhaseExponent a, Int p_, Int q_);

  Int d() const { return gcd(p, q); }
  bool simple() const { return d() == 1; }
  /// Sign-normalized, lambda part of alpha in [0,1), 2pi part in [0,1) for
  /// simple classes and in [0,d) otherwise.
  ModuleClass canonical() const;

  friend bool operator==(const ModuleClass& a, const ModuleClass& b) {
    return a.p == b.p && a.q == b.q && a.alpha == b.alpha;
  }
  friend bool operator!=(const ModuleClass& a, const ModuleClass& b) { return !(a == b); }
  friend bool operator<(const ModuleClass& a, const ModuleClass& b);
};

struct ModuleTag {};
using Coords = SparseVector<Int, ModuleTag>;

struct ModuleVector {
  ModuleClass cls;
  Coords coords;

  static ModuleVector xi(const ModuleClass& c, Int n, const SymScalar& s = SymScalar::one()) {
    return {c, Coords::basis(n, s)};
  }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.cls == b.cls && a.coords == b.coords; }
  friend bool operator!=(const ModuleVector& a, const ModuleVector& b) { return !(a == b); }
};

/// xi_n . g = e^{i phase} xi_{n'} for g = a10 (gen 0) or a01 (gen 1), or
/// their inverses (dir -1).
std::pair<Int, PhaseExponent> module_step(const ModuleClass& c, Int n, int gen, int dir);

ModuleVector module_act(const ModuleVector& v, const AlgebraElement& a);

/// Formal inner product with xi_n orthonormal, conjugate-linear in the first slot.
SymScalar inner(const ModuleVector& v, const ModuleVector& w);

/// e^{-i alpha} a_{pq}
AlgebraElement defining_unitary(const ModuleClass& c);

/// Image of a + (u-1)A under A/(u-1)A -> T^alpha_{pq}, for coprime (p,q).
ModuleVector quotient_coordinates(const AlgebraElement& a, const ModuleClass& cls);
/// Rescaling factor with xi_{[j,k]} = rho(j,k) xi'_{jk}, and the label jq - kp.
SymScalar rescaling(const ModuleClass& cls, Int j, Int k);
Int label(const ModuleClass& cls, Int j, Int k);

bool is_simple(const ModuleClass& c);
std::vector<ModuleClass> decompose(const ModuleClass& c);
bool is_isomorphic(const ModuleClass& a, const ModuleClass& b);

/// Each summand's basis vectors are eigenvectors of the parent's defining
/// unitary with eigenvalue e^{i lambda N}; true iff every N in [-window, window]
/// arises exactly once, matching the parent spectrum on that window.
bool decomposition_spectrum_matches(const ModuleClass& parent, Int window);

}  // namespace hopfish
