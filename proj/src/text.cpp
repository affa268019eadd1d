#include "hopfish/text.hpp"

#include <cctype>
#include <sstream>

#include "hopfish/error.hpp"

namespace hopfish {

// ---- formatting ----

std::string format_rational(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

std::string format_gaussian(const Gaussian& g) {
  if (g.im == 0) return format_rational(g.re);
  Rational im = g.im < 0 ? -g.im : g.im;
  return "(" + format_rational(g.re) + (g.im < 0 ? "-" : "+") + format_rational(im) + "i)";
}

std::string format_exponent(const PhaseExponent& e) {
  std::vector<std::pair<Rational, std::string>> parts;
  if (e.tau() != 0) parts.emplace_back(e.tau(), "T");
  if (e.lam() != 0) parts.emplace_back(e.lam(), "L");
  for (auto& [id, c] : e.alphas()) parts.emplace_back(c, "A" + std::to_string(id));
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Rational c = parts[i].first;
    if (i == 0) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    s += format_rational(c) + " " + parts[i].second;
  }
  return s;
}

std::string format_phase(const PhaseExponent& e) { return "e{ " + format_exponent(e) + " }"; }

namespace {

// Monomial scalar; sign pulled out if the coefficient is a negative real.
std::pair<bool, std::string> format_monomial(const PhaseExponent& e, const Gaussian& c) {
  bool neg = c.im == 0 && c.re < 0;
  Gaussian cc = neg ? Gaussian(-c.re) : c;
  std::string s;
  if (e.is_zero()) {
    s = format_gaussian(cc);
  } else if (cc == Gaussian(1)) {
    s = format_phase(e);
  } else {
    s = format_gaussian(cc) + " * " + format_phase(e);
  }
  return {neg, s};
}

template <class V, class AtomFn>
std::string format_vector(const V& v, AtomFn&& atom) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [k, coeff] : v.terms())
    for (auto& [e, c] : coeff.terms()) {
      auto [neg, sc] = format_monomial(e, c);
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      if (sc != "1") out += sc + " * ";
      out += atom(k);
    }
  return out;
}

std::string i2(Int a, Int b) { return std::to_string(a) + "," + std::to_string(b); }

}  // namespace

std::string format_scalar(const SymScalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : s.terms()) {
    auto [neg, sc] = format_monomial(e, c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    out += sc;
  }
  return out;
}

std::string format(const AlgebraElement& a) {
  return format_vector(a, [](const Index2& k) { return "a(" + i2(k.first, k.second) + ")"; });
}
std::string format(const DeltaVector& d) {
  return format_vector(d, [](const Index3& k) { return "d(" + i2(k[0], k[1]) + "," + std::to_string(k[2]) + ")"; });
}
std::string format(const EpsilonVector& e) {
  return format_vector(e, [](Int l) { return "eps(" + std::to_string(l) + ")"; });
}
std::string format(const SVector& s) {
  return format_vector(s, [](const Index2& k) { return "s(" + i2(k.first, k.second) + ")"; });
}
std::string format(const HomMatrix& z) {
  return format_vector(z, [](const Index2& k) { return "z(" + i2(k.first, k.second) + ")"; });
}
std::string format(const Coords& xi) {
  return format_vector(xi, [](Int n) { return "xi(" + std::to_string(n) + ")"; });
}
std::string format(const ModuleClass& c) {
  return "T( " + format_exponent(c.alpha) + " ; " + std::to_string(c.p) + ", " + std::to_string(c.q) + " )";
}
std::string format(const TripleVector& t) {
  bool left = t.side == TripleSide::LeftAssoc;
  return format_vector(t.v, [left](const Index4& k) {
    std::string d = "d(" + i2(k[0], k[1]) + ",0)";
    if (left) return "(1 (x) " + d + ") (x) d(" + i2(k[2], 0) + "," + std::to_string(k[3]) + ")";
    return "(" + d + " (x) 1) (x) d(0," + i2(k[2], k[3]) + ")";
  });
}

// ---- parsing ----

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  [[noreturn]] void fail(std::vector<std::string> expected) const { throw ParseError(pos_, std::move(expected)); }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    ws();
    return pos_ == s_.size();
  }
  bool peek(std::string_view t) {
    ws();
    return s_.substr(pos_, t.size()) == t;
  }
  bool accept(std::string_view t) {
    if (!peek(t)) return false;
    pos_ += t.size();
    return true;
  }
  void expect(std::string_view t) {
    if (!accept(t)) fail({std::string(t)});
  }
  bool peek_digit() {
    ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Int natural() {
    ws();
    if (!peek_digit()) fail({"digit"});
    Int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }
  Int integer() {
    ws();
    bool neg = accept("-");
    if (!neg) accept("+");
    if (!peek_digit()) fail({"integer"});
    Int v = natural();
    return neg ? -v : v;
  }
  Rational unsigned_rational() {
    Int n = natural();
    if (accept("/")) {
      std::size_t at = pos_;
      Int d = natural();
      if (d == 0) {
        pos_ = at;
        fail({"nonzero denominator"});
      }
      return Rational(n, d);
    }
    return Rational(n);
  }

  // exps = exp { ("+"|"-") exp } ; exp = [ rational ] sym ; "0" alone is zero
  PhaseExponent exps() {
    PhaseExponent e;
    bool first = true;
    while (true) {
      Rational sign(1);
      if (first) {
        if (accept("-")) sign = Rational(-1);
      } else if (accept("+")) {
      } else if (accept("-")) {
        sign = Rational(-1);
      } else {
        break;
      }
      Rational c(1);
      bool had_num = false;
      if (peek_digit()) {
        c = unsigned_rational();
        had_num = true;
      }
      ws();
      if (accept("L")) {
        e += PhaseExponent::lambda(sign * c);
      } else if (accept("T")) {
        e += PhaseExponent::turns(sign * c);
      } else if (peek("A")) {
        ++pos_;
        if (!peek_digit()) fail({"symbol index"});
        Int id = natural();
        if (id < 1) fail({"symbol index >= 1"});
        e += PhaseExponent::alpha(static_cast<SymbolId>(id), sign * c);
      } else if (had_num && c == 0) {
      } else {
        fail({"L", "T", "A<k>"});
      }
      first = false;
    }
    return e;
  }

  PhaseExponent phase() {
    expect("e{");
    PhaseExponent e = exps();
    expect("}");
    return e;
  }

  Gaussian gaussian() {
    if (accept("(")) {
      bool neg = accept("-");
      Rational re = unsigned_rational();
      if (neg) re = -re;
      Rational sign(1);
      if (accept("-")) {
        sign = Rational(-1);
      } else {
        expect("+");
      }
      Rational im(1);
      if (peek_digit()) im = unsigned_rational();
      expect("i");
      expect(")");
      return {re, sign * im};
    }
    if (accept("i")) return {Rational(0), Rational(1)};
    Rational r = unsigned_rational();
    if (accept("i")) return {Rational(0), r};
    return {r};
  }

  // scalar = gaussian [ "*" phase ] | phase
  std::optional<SymScalar> scalar() {
    if (peek("e{")) return SymScalar::phase(phase());
    if (peek_digit() || peek("(") || (peek("i") && !peek("i("))) {
      Gaussian g = gaussian();
      if (peek("*") ) {
        std::size_t save = pos_;
        accept("*");
        if (peek("e{")) return SymScalar(g, phase());
        pos_ = save;
      }
      return SymScalar(g);
    }
    return std::nullopt;
  }

  enum class Kind { Algebra, Delta, Eps, S, Xi };

  struct Atom {
    Kind kind;
    Int i[3];
  };

  Atom atom() {
    if (accept("a(")) {
      Atom a{Kind::Algebra, {integer(), 0, 0}};
      expect(",");
      a.i[1] = integer();
      expect(")");
      return a;
    }
    if (accept("d(")) {
      Atom a{Kind::Delta, {integer(), 0, 0}};
      expect(",");
      a.i[1] = integer();
      expect(",");
      a.i[2] = integer();
      expect(")");
      return a;
    }
    if (accept("eps(")) {
      Atom a{Kind::Eps, {integer(), 0, 0}};
      expect(")");
      return a;
    }
    if (accept("s(")) {
      Atom a{Kind::S, {integer(), 0, 0}};
      expect(",");
      a.i[1] = integer();
      expect(")");
      return a;
    }
    if (accept("xi(")) {
      Atom a{Kind::Xi, {integer(), 0, 0}};
      expect(")");
      return a;
    }
    fail({"a(", "d(", "eps(", "s(", "xi("});
  }

  // term = [ scalar "*" ] atom
  std::pair<SymScalar, Atom> term() {
    auto sc = scalar();
    if (sc) {
      if (!accept("*")) {
        // a bare "0" is the zero element
        if (*sc == SymScalar::zero() && !peek("*")) return {*sc, Atom{Kind::Algebra, {0, 0, 0}}};
        fail({"*"});
      }
    }
    return {sc ? *sc : SymScalar::one(), atom()};
  }

  Parsed element() {
    std::optional<Kind> kind;
    AlgebraElement a;
    DeltaVector d;
    EpsilonVector e;
    SVector s;
    XiVector x;
    bool first = true;
    bool zero_only = true;
    while (true) {
      SymScalar sign = SymScalar::one();
      if (first) {
        if (accept("-")) sign = SymScalar(-1);
      } else if (accept("+")) {
      } else if (accept("-")) {
        sign = SymScalar(-1);
      } else {
        break;
      }
      std::size_t at = (ws(), pos_);
      auto [c, t] = term();
      c = sign * c;
      if (c.is_zero()) {
        first = false;
        continue;
      }
      zero_only = false;
      if (kind && *kind != t.kind) {
        pos_ = at;
        fail({"atom of the same kind"});
      }
      kind = t.kind;
      switch (t.kind) {
        case Kind::Algebra: a.add_term({t.i[0], t.i[1]}, c); break;
        case Kind::Delta: d.add_term({t.i[0], t.i[1], t.i[2]}, c); break;
        case Kind::Eps: e.add_term(t.i[0], c); break;
        case Kind::S: s.add_term({t.i[0], t.i[1]}, c); break;
        case Kind::Xi: x.coords.add_term(t.i[0], c); break;
      }
      first = false;
    }
    if (first) fail({"term"});
    if (zero_only || !kind) return a;
    switch (*kind) {
      case Kind::Algebra: return a;
      case Kind::Delta: return d;
      case Kind::Eps: return e;
      case Kind::S: return s;
      case Kind::Xi: return x;
    }
    return a;
  }

  ModuleClass cls() {
    expect("T(");
    PhaseExponent e = exps();
    expect(";");
    std::size_t at = (ws(), pos_);
    Int p = integer();
    expect(",");
    Int q = integer();
    expect(")");
    if (p == 0 && q == 0) {
      pos_ = at;
      fail({"(p,q) != (0,0)"});
    }
    return ModuleClass(e, p, q);
  }

  void finish() {
    if (!at_end()) fail({"end of input"});
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Parsed parse_element(std::string_view text) {
  Parser p(text);
  if (p.peek("T(")) {
    auto c = p.cls();
    p.finish();
    return c;
  }
  auto r = p.element();
  p.finish();
  return r;
}

AlgebraElement parse_algebra(std::string_view text) {
  Parser p(text);
  auto r = p.element();
  p.finish();
  if (auto* a = std::get_if<AlgebraElement>(&r)) return *a;
  throw ParseError(0, {"algebra element"});
}

ModuleClass parse_class(std::string_view text) {
  Parser p(text);
  auto c = p.cls();
  p.finish();
  return c;
}

PhaseExponent parse_exponent(std::string_view text) {
  Parser p(text);
  PhaseExponent e = p.peek("e{") ? p.phase() : p.exps();
  p.finish();
  return e;
}

PureTensorSum parse_tensor(std::string_view text) {
  auto cut = text.find("(x)");
  if (cut == std::string_view::npos) return tensor(parse_algebra(text), unit());
  auto left = text.substr(0, cut);
  auto right = text.substr(cut + 3);
  try {
    return tensor(parse_algebra(left), parse_algebra(right));
  } catch (const ParseError& e) {
    // report offsets in the full text
    std::size_t base = 0;
    try {
      (void)parse_algebra(left);
      base = cut + 3;
    } catch (const ParseError&) {
    }
    throw ParseError(base + e.offset(), e.expected());
  }
}

// ---- JSON ----

nlohmann::json to_json(const Rational& r) { return format_rational(r); }

nlohmann::json to_json(const PhaseExponent& e) {
  nlohmann::json al = nlohmann::json::object();
  for (auto& [id, c] : e.alphas()) al[std::to_string(id)] = to_json(c);
  return {{"tau", to_json(e.tau())}, {"lam", to_json(e.lam())}, {"alphas", al}};
}

nlohmann::json to_json(const ClassSum& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [c, m] : cs.terms()) arr.push_back({{"mult", m}, {"p", c.p}, {"q", c.q}, {"alpha", to_json(c.alpha)}});
  return arr;
}

nlohmann::json to_json(const SpectralFingerprint& fp) {
  nlohmann::json j;
  j["window"] = fp.window;
  j["direction"] = fp.direction ? nlohmann::json::array({fp.direction->first, fp.direction->second}) : nlohmann::json();
  nlohmann::json ph = nlohmann::json::array();
  for (auto& [e, m] : fp.phases) ph.push_back({{"phase", to_json(e)}, {"mult", m}});
  j["phases"] = ph;
  return j;
}

}  // namespace hopfish
