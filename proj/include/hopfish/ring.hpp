#pragma once

// Tensor products of the modules T^alpha_{pq} over the coproduct, and the
// ring of formal integer combinations of simple classes.

#include <map>
#include <optional>

#include "hopfish/modules.hpp"

namespace hopfish {

/// Canonical simple class -> positive multiplicity; empty is zero.
class ClassSum {
 public:
  using Terms = std::map<ModuleClass, Int>;

  ClassSum() = default;
  /// m copies of c, decomposed into simple canonical summands.
  static ClassSum of(const ModuleClass& c, Int m = 1);
  static ClassSum unit() { return of(ModuleClass(PhaseExponent{}, 1, 0)); }

  void add(const ModuleClass& c, Int m = 1);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int total() const;

  ClassSum& operator+=(const ClassSum& o);
  friend ClassSum operator+(ClassSum a, const ClassSum& b) { return a += b; }
  friend ClassSum operator*(Int m, const ClassSum& x);
  friend bool operator==(const ClassSum& a, const ClassSum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ClassSum& a, const ClassSum& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// (p, q) of the tensor product of two modules with p1, p2 not both zero:
/// p = p1 p2 / gcd(p1,p2) (signed), q = (p1 q2 + p2 q1) / gcd(p1,p2).
std::pair<Int, Int> tensor_pq(Int p1, Int q1, Int p2, Int q2);

ClassSum tensor_closed_form(const ModuleClass& c1, const ModuleClass& c2);
/// The theorem's formulas applied verbatim to the given representatives.
ClassSum tensor_theorem_literal(const ModuleClass& c1, const ModuleClass& c2);

ClassSum ring_mul(const ClassSum& x, const ClassSum& y);

/// Eigenphases of a_{rs}, for the direction (r,s) found by the oracle, on the
/// orbits of a truncated relation quotient.
struct SpectralFingerprint {
  Int window = 0;
  /// nullopt when every generator was forced to zero.
  std::optional<Index2> direction;
  /// exact eigenphase (canonical) -> multiplicity, interior orbits only
  std::map<PhaseExponent, Int> phases;
};

SpectralFingerprint tensor_oracle(const ModuleClass& c1, const ModuleClass& c2, Int window);
bool oracle_matches(const ClassSum& cs, const SpectralFingerprint& fp);

}  // namespace hopfish
