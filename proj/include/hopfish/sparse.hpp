#pragma once

#include <map>
#include <utility>

#include "hopfish/phase.hpp"

namespace hopfish {

/// Finite linear combination of basis vectors labelled by Key, with exact
/// coefficients. Zero coefficients are never stored. Tag keeps vectors of
/// different spaces with the same label type apart.
template <class Key, class Tag>
class SparseVector {
 public:
  using key_type = Key;
  using Terms = std::map<Key, SymScalar>;

  SparseVector() = default;
  static SparseVector basis(const Key& k, const SymScalar& c = SymScalar::one()) {
    SparseVector v;
    v.add_term(k, c);
    return v;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  SymScalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? SymScalar::zero() : it->second;
  }

  void add_term(const Key& k, const SymScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparseVector& operator+=(const SparseVector& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const SymScalar& s, const SparseVector& v) {
    SparseVector r;
    if (s.is_zero()) return r;
    for (auto& [k, c] : v.terms_) r.add_term(k, s * c);
    return r;
  }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return (a - b).is_zero(); }
  friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

  /// Linear extension of a map on basis vectors.
  template <class F>
  auto map_linear(F&& f) const -> decltype(f(std::declval<const Key&>())) {
    decltype(f(std::declval<const Key&>())) out;
    for (auto& [k, c] : terms_) out += c * f(k);
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace hopfish
