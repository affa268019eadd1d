// Command-line front end. Exit codes: 0 ok, 1 check failed, 2 parse or usage error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "hopfish/axioms.hpp"
#include "hopfish/error.hpp"
#include "hopfish/text.hpp"

using namespace hopfish;

namespace {

std::string show_complex(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

template <class V, class KeyFn>
void print_numeric(const V& v, const Assignment& a, KeyFn&& key) {
  if (v.is_zero()) std::cout << "0\n";
  for (auto& [k, c] : v.terms()) std::cout << key(k) << " = " << show_complex(scalar_eval(c, a)) << "\n";
}

std::string i2(Int a, Int b) { return std::to_string(a) + "," + std::to_string(b); }

int act(const std::string& vec_text, const std::string& by, const std::string& module) {
  Parsed v = parse_element(vec_text);
  const bool is_tensor = by.find("(x)") != std::string::npos;
  if (auto* d = std::get_if<DeltaVector>(&v)) {
    std::cout << format(is_tensor ? delta_left_act(parse_tensor(by), *d) : delta_right_act(*d, parse_algebra(by))) << "\n";
  } else if (auto* e = std::get_if<EpsilonVector>(&v)) {
    std::cout << format(epsilon_act(*e, parse_algebra(by))) << "\n";
  } else if (auto* s = std::get_if<SVector>(&v)) {
    std::cout << format(s_left_act(parse_tensor(by), *s)) << "\n";
  } else if (auto* x = std::get_if<XiVector>(&v)) {
    if (module.empty()) throw CLI::ValidationError("act", "xi vectors need --module");
    ModuleVector mv{parse_class(module), x->coords};
    std::cout << format(module_act(mv, parse_algebra(by)).coords) << "\n";
  } else if (auto* a = std::get_if<AlgebraElement>(&v)) {
    std::cout << format(*a * parse_algebra(by)) << "\n";
  } else {
    throw CLI::ValidationError("act", "a class literal cannot be acted on");
  }
  return 0;
}

int verify(const std::string& which, Int trials, Int window, std::uint64_t seed, bool mutate) {
  std::vector<std::string> axioms =
      which == "all" ? std::vector<std::string>{"h1", "h2", "h3w", "h4", "noanti"} : std::vector<std::string>{which};
  bool ok = true;
  for (auto& ax : axioms) {
    CheckHooks hooks = mutate ? mutant(ax) : CheckHooks{};
    CheckReport r;
    if (ax == "h1") r = check_h1(trials, window, seed, hooks);
    else if (ax == "h2") r = check_h2(trials, window, seed, hooks);
    else if (ax == "h3w") r = check_h3_weak(trials, window, seed, hooks);
    else if (ax == "h4") r = check_h4(window, hooks);
    else r = check_no_strong_antipode(std::max<Int>(window, 1), hooks);
    ok = ok && r.passed;
    std::cout << to_json(r).dump() << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the irrational rotation algebra and its hopfish structure"};
  app.require_subcommand(1);

  std::string x, y, module;
  Int oracle_window = 0, trials = 200, window = 6;
  std::uint64_t seed = 42;
  bool literal = false, mutate = false;
  double lambda_frac = std::nan("");
  std::vector<std::string> alpha_binds;
  int code = 0;

  auto* mul = app.add_subcommand("mul", "product a*b");
  mul->add_option("a", x)->required();
  mul->add_option("b", y)->required();
  mul->callback([&] { std::cout << format(parse_algebra(x) * parse_algebra(y)) << "\n"; });

  auto* st = app.add_subcommand("star", "adjoint");
  st->add_option("a", x)->required();
  st->callback([&] { std::cout << format(star(parse_algebra(x))) << "\n"; });

  auto* an = app.add_subcommand("antipode", "S(a)");
  an->add_option("a", x)->required();
  an->callback([&] { std::cout << format(antipode(parse_algebra(x))) << "\n"; });

  auto* ac = app.add_subcommand("act", "act on a vector: d . a, (x (x) y) . d, eps . a, (x (x) y) . s, xi . a");
  ac->add_option("vector", x)->required();
  ac->add_option("by", y, "algebra element, or x (x) y for the left actions")->required();
  ac->add_option("--module", module, "class literal for xi vectors");
  ac->callback([&] { code = act(x, y, module); });

  auto* te = app.add_subcommand("tensor", "tensor product of two classes");
  te->add_option("T1", x)->required();
  te->add_option("T2", y)->required();
  te->add_option("--oracle", oracle_window, "also run the spectral oracle on this window");
  te->add_flag("--literal", literal, "use the unmodified closed form");
  te->callback([&] {
    ModuleClass c1 = parse_class(x), c2 = parse_class(y);
    ClassSum cs = literal ? tensor_theorem_literal(c1, c2) : tensor_closed_form(c1, c2);
    std::cout << to_json(cs).dump() << "\n";
    if (oracle_window > 0) {
      auto fp = tensor_oracle(c1, c2, oracle_window);
      bool ok = oracle_matches(cs, fp);
      nlohmann::json j = {{"oracle", to_json(fp)}, {"match", ok}};
      std::cout << j.dump() << "\n";
      code = ok ? 0 : 1;
    }
  });

  auto* de = app.add_subcommand("decompose", "simple summands of a class");
  de->add_option("T", x)->required();
  de->callback([&] {
    for (auto& c : decompose(parse_class(x))) std::cout << format(c) << "\n";
  });

  auto* is = app.add_subcommand("iso", "isomorphism of simple classes");
  is->add_option("T1", x)->required();
  is->add_option("T2", y)->required();
  is->callback([&] { std::cout << (is_isomorphic(parse_class(x), parse_class(y)) ? "true" : "false") << "\n"; });

  auto* ve = app.add_subcommand("verify", "run axiom checks");
  ve->add_option("axiom", x)->required()->check(CLI::IsMember({"h1", "h2", "h3w", "h4", "noanti", "all"}));
  ve->add_option("--trials", trials)->check(CLI::PositiveNumber);
  ve->add_option("--window", window)->check(CLI::NonNegativeNumber);
  ve->add_option("--seed", seed);
  ve->add_flag("--mutant", mutate, "run against the known-bad fixture");
  ve->callback([&] { code = verify(x, trials, window, seed, mutate); });

  auto* ev = app.add_subcommand("eval", "numeric coefficients");
  ev->add_option("expr", x)->required();
  ev->add_option("--lambda-frac", lambda_frac, "lambda = 2 pi x (default the golden ratio conjugate)");
  ev->add_option("--alpha", alpha_binds, "bind a symbol, k=value");
  ev->callback([&] {
    Assignment a = Assignment::golden();
    if (!std::isnan(lambda_frac)) a.lambda = 2 * std::numbers::pi * lambda_frac;
    for (auto& b : alpha_binds) {
      auto eq = b.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("--alpha", "expected k=value");
      a.alphas[std::stoi(b.substr(0, eq))] = std::stod(b.substr(eq + 1));
    }
    Parsed p = parse_element(x);
    if (auto* v = std::get_if<AlgebraElement>(&p))
      print_numeric(*v, a, [](const Index2& k) { return "a(" + i2(k.first, k.second) + ")"; });
    else if (auto* d = std::get_if<DeltaVector>(&p))
      print_numeric(*d, a, [](const Index3& k) { return "d(" + i2(k[0], k[1]) + "," + std::to_string(k[2]) + ")"; });
    else if (auto* e = std::get_if<EpsilonVector>(&p))
      print_numeric(*e, a, [](Int l) { return "eps(" + std::to_string(l) + ")"; });
    else if (auto* s = std::get_if<SVector>(&p))
      print_numeric(*s, a, [](const Index2& k) { return "s(" + i2(k.first, k.second) + ")"; });
    else if (auto* xi = std::get_if<XiVector>(&p))
      print_numeric(xi->coords, a, [](Int n) { return "xi(" + std::to_string(n) + ")"; });
    else
      throw CLI::ValidationError("eval", "class literals have no numeric value");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::string exp;
    for (auto& s : e.expected()) exp += (exp.empty() ? "" : ", ") + s;
    std::cerr << "parse error at offset " << e.offset() << ": expected " << exp << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
  return code;
}
