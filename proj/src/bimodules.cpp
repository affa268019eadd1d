#include "hopfish/bimodules.hpp"

#include "hopfish/error.hpp"

namespace hopfish {

namespace {

SymScalar lam_phase(Int c) { return SymScalar::phase(PhaseExponent::lambda(Rational(c))); }

// Coefficient c with v == c * (basis vector at k); v must be a single term there.
template <class V>
SymScalar single_coeff(const V& v, const typename V::key_type& k) {
  if (v.size() != 1 || v.terms().begin()->first != k)
    throw Error(ErrorKind::InvalidArgument, "internal: reduction step left the expected basis vector");
  return v.terms().begin()->second;
}

}  // namespace

PureTensorSum tensor_mul(const PureTensorSum& x, const PureTensorSum& y) {
  PureTensorSum r;
  for (auto& [a, b] : x.terms)
    for (auto& [c, d] : y.terms) r.terms.emplace_back(mul(a, c), mul(b, d));
  return r;
}

DeltaVector delta_right_act(const DeltaVector& d, const AlgebraElement& a) {
  DeltaVector r;
  for (auto& [k, c] : d.terms())
    for (auto& [idx, s] : a.terms()) {
      auto [m, j] = idx;
      r.add_term({k[0] + m, k[1] + m, k[2] - j}, c * s * lam_phase(m * (k[2] - j)));
    }
  return r;
}

DeltaVector delta_left_act(const PureTensorSum& x, const DeltaVector& d) {
  DeltaVector r;
  for (auto& [x1, x2] : x.terms)
    for (auto& [i1, c1] : x1.terms())
      for (auto& [i2, c2] : x2.terms()) {
        auto [m1, j1] = i1;
        auto [m2, j2] = i2;
        for (auto& [k, c] : d.terms()) {
          Int n1 = k[0] + m1, n2 = k[1] + m2;
          r.add_term({n1, n2, k[2] - j1 - j2}, c1 * c2 * c * lam_phase(-(n1 * j1 + n2 * j2)));
        }
      }
  return r;
}

EpsilonVector epsilon_act(const EpsilonVector& e, const AlgebraElement& a) {
  EpsilonVector r;
  for (auto& [l, c] : e.terms())
    for (auto& [idx, s] : a.terms()) {
      auto [m, j] = idx;
      r.add_term(l - j, c * s * lam_phase(m * (l - j)));
    }
  return r;
}

SVector s_left_act(const PureTensorSum& x, const SVector& s) {
  SVector r;
  for (auto& [x1, x2] : x.terms)
    for (auto& [i1, c1] : x1.terms())
      for (auto& [i2, c2] : x2.terms()) {
        auto [m1, j1] = i1;
        auto [m2, j2] = i2;
        for (auto& [k, c] : s.terms()) {
          auto [n, l] = k;
          Int nn = n + m1 - m2;
          r.add_term({nn, l + j1 + j2}, c1 * c2 * c * lam_phase(m1 * l + nn * j2));
        }
      }
  return r;
}

AlgebraElement antipode(const AlgebraElement& a) {
  AlgebraElement r;
  for (auto& [idx, c] : a.terms()) r.add_term({-idx.first, idx.second}, c * lam_phase(-idx.first * idx.second));
  return r;
}

HomMatrix hom_act(const HomMatrix& z, const PureTensorSum& x) {
  HomMatrix r;
  for (auto& [x1, x2] : x.terms)
    for (auto& [i1, c1] : x1.terms())
      for (auto& [i2, c2] : x2.terms()) {
        auto [m1, j1] = i1;
        auto [m2, j2] = i2;
        for (auto& [k, c] : z.terms()) {
          auto [L, N] = k;  // zeta^L_N feeds entry (l, n) with N = n+m1-m2, L = l+j1+j2
          Int n = N - m1 + m2, l = L - j1 - j2;
          r.add_term({l, n}, c1 * c2 * c * lam_phase(-j1 * N + m2 * l));
        }
      }
  return r;
}

AlgebraElement s_generator(const SVector& s) {
  // (a_{nl} (x) 1) . s_00 = s_{nl}
  AlgebraElement a;
  for (auto& [k, c] : s.terms()) a.add_term(k, c);
  return a;
}

SymScalar pairing(const HomMatrix& z, const SVector& s) {
  return hom_act(z, tensor(s_generator(s), unit())).coeff({0, 0});
}

// ---- triples ----

TripleVector reduce_triple(const RawTripleSum& t) {
  TripleVector out;
  out.side = t.side;
  const bool left = t.side == TripleSide::LeftAssoc;
  for (auto& term : t.terms)
    for (auto& [ai, ac] : term.a.terms())
      for (auto& [dk, dc] : term.d.terms())
        for (auto& [pk, pc] : term.dp.terms()) {
          auto a = basis(ai.first, ai.second);
          auto dp = d_basis(pk[0], pk[1], pk[2]);
          // move a across the balance
          DeltaVector d1 = left ? delta_left_act(tensor(a, unit()), dp) : delta_left_act(tensor(unit(), a), dp);
          // d_{n1 n2 l} = c0^{-1} d_{n1 n2 0} . a_{0,-l}
          auto shift = basis(0, -dk[2]);
          SymScalar c0 = single_coeff(delta_right_act(d_basis(dk[0], dk[1], 0), shift), dk);
          DeltaVector d2 = left ? delta_left_act(tensor(unit(), shift), d1) : delta_left_act(tensor(shift, unit()), d1);
          SymScalar base = ac * dc * pc * c0.inverse();
          for (auto& [qk, qc] : d2.terms()) {
            Int P1 = qk[0], P2 = qk[1], L = qk[2];
            Int m = left ? P2 : P1;
            auto am = basis(m, 0);
            SymScalar c1 = left ? single_coeff(delta_left_act(tensor(unit(), am), d_basis(P1, 0, L)), qk)
                                : single_coeff(delta_left_act(tensor(am, unit()), d_basis(0, P2, L)), qk);
            Index3 moved{dk[0] + m, dk[1] + m, 0};
            SymScalar c2 = single_coeff(delta_right_act(d_basis(dk[0], dk[1], 0), am), moved);
            Int n3 = left ? P1 : P2;
            out.v.add_term({moved[0], moved[1], n3, L}, base * qc * c1.inverse() * c2);
          }
        }
  return out;
}

RawTripleSum as_raw(const TripleVector& t) {
  RawTripleSum r;
  r.side = t.side;
  for (auto& [k, c] : t.v.terms()) {
    if (t.side == TripleSide::LeftAssoc)
      r.terms.push_back({basis(0, 0, c), d_basis(k[0], k[1], 0), d_basis(k[2], 0, k[3])});
    else
      r.terms.push_back({basis(0, 0, c), d_basis(k[0], k[1], 0), d_basis(0, k[2], k[3])});
  }
  return r;
}

RawTripleSum triple_left_act(const TripleAlgebraElement& x, const RawTripleSum& t) {
  RawTripleSum r;
  r.side = t.side;
  for (auto& g : x.terms)
    for (auto& term : t.terms) {
      if (t.side == TripleSide::LeftAssoc)
        r.terms.push_back({mul(g[0], term.a), delta_left_act(tensor(g[1], g[2]), term.d), term.dp});
      else
        r.terms.push_back({mul(g[2], term.a), delta_left_act(tensor(g[0], g[1]), term.d), term.dp});
    }
  return r;
}

RawTripleSum triple_right_act(const RawTripleSum& t, const AlgebraElement& a) {
  RawTripleSum r = t;
  for (auto& term : r.terms) term.dp = delta_right_act(term.dp, a);
  return r;
}

TripleVector coassoc_iso(const TripleVector& t) {
  if (t.side != TripleSide::LeftAssoc) throw Error(ErrorKind::InvalidArgument, "coassoc_iso expects a left-associated vector");
  TripleVector r;
  r.side = TripleSide::RightAssoc;
  for (auto& [k, c] : t.v.terms()) r.v.add_term({k[2], k[0], k[1], k[3]}, c);
  return r;
}

TripleVector coassoc_iso_inverse(const TripleVector& t) {
  if (t.side != TripleSide::RightAssoc)
    throw Error(ErrorKind::InvalidArgument, "coassoc_iso_inverse expects a right-associated vector");
  TripleVector r;
  r.side = TripleSide::LeftAssoc;
  for (auto& [k, c] : t.v.terms()) r.v.add_term({k[1], k[2], k[0], k[3]}, c);
  return r;
}

// ---- counit ----

AlgebraElement counit_reduce(const RawCounitSum& t) {
  AlgebraElement out;
  const bool eps_first = t.side == CounitSide::EpsilonA;
  for (auto& term : t.terms)
    for (auto& [l, ec] : term.e.terms())
      for (auto& [pk, pc] : term.d.terms()) {
        // e_l = c0^{-1} e_0 . a_{0,-l}
        auto shift = basis(0, -l);
        SymScalar c0 = single_coeff(epsilon_act(e_basis(0), shift), l);
        auto dp = d_basis(pk[0], pk[1], pk[2]);
        DeltaVector d1 = eps_first ? delta_left_act(tensor(shift, unit()), dp) : delta_left_act(tensor(unit(), shift), dp);
        for (auto& [qk, qc] : d1.terms()) {
          Int P1 = qk[0], P2 = qk[1], L = qk[2];
          // peel the epsilon-side index into e_0
          Int m = eps_first ? P1 : P2;
          auto am = basis(m, 0);
          SymScalar c1 = eps_first ? single_coeff(delta_left_act(tensor(am, unit()), d_basis(0, P2, L)), qk)
                                   : single_coeff(delta_left_act(tensor(unit(), am), d_basis(P1, 0, L)), qk);
          SymScalar c2 = single_coeff(epsilon_act(e_basis(0), am), 0);
          // remaining d_{0,P2,L} (or d_{P1,0,L}) from d_000 through the A-slot
          Int r = eps_first ? P2 : P1;
          auto ar = basis(r, -L);
          Index3 rest = eps_first ? Index3{0, P2, L} : Index3{P1, 0, L};
          SymScalar c3 = eps_first ? single_coeff(delta_left_act(tensor(unit(), ar), d_basis(0, 0, 0)), rest)
                                   : single_coeff(delta_left_act(tensor(ar, unit()), d_basis(0, 0, 0)), rest);
          SymScalar k = ec * pc * qc * c0.inverse() * c1.inverse() * c2 * c3.inverse();
          out += k * mul(term.a, ar);
        }
      }
  return out;
}

RawCounitSum counit_left_act(const AlgebraElement& b, const RawCounitSum& t) {
  RawCounitSum r = t;
  for (auto& term : r.terms) term.a = mul(b, term.a);
  return r;
}

RawCounitSum counit_right_act(const RawCounitSum& t, const AlgebraElement& b) {
  RawCounitSum r = t;
  for (auto& term : r.terms) term.d = delta_right_act(term.d, b);
  return r;
}

}  // namespace hopfish
