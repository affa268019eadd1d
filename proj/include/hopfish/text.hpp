#pragma once

// Text forms shared by the CLI: elements, phases, class literals; JSON encoders.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "hopfish/bimodules.hpp"
#include "hopfish/modules.hpp"
#include "hopfish/ring.hpp"

namespace hopfish {

std::string format_rational(const Rational& r);
std::string format_gaussian(const Gaussian& g);
/// Inner part of a phase, e.g. "1/2 T + 1 L - 2 A1"; "0" for zero.
std::string format_exponent(const PhaseExponent& e);
/// "e{ ... }"
std::string format_phase(const PhaseExponent& e);
std::string format_scalar(const SymScalar& s);

std::string format(const AlgebraElement& a);
std::string format(const DeltaVector& d);
std::string format(const EpsilonVector& e);
std::string format(const SVector& s);
std::string format(const HomMatrix& z);
std::string format(const Coords& xi);
std::string format(const ModuleClass& c);
std::string format(const TripleVector& t);

/// Vectors over xi_n without their class.
struct XiVector {
  Coords coords;
  friend bool operator==(const XiVector& a, const XiVector& b) { return a.coords == b.coords; }
};

using Parsed = std::variant<AlgebraElement, DeltaVector, EpsilonVector, SVector, XiVector, ModuleClass>;

/// Throws ParseError with the byte offset of the first unconsumable character.
Parsed parse_element(std::string_view text);
AlgebraElement parse_algebra(std::string_view text);
ModuleClass parse_class(std::string_view text);
PhaseExponent parse_exponent(std::string_view text);
/// "x (x) y (+ ...)" with each side an algebra element; a bare element x means x (x) 1.
PureTensorSum parse_tensor(std::string_view text);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const PhaseExponent& e);
nlohmann::json to_json(const ClassSum& cs);
nlohmann::json to_json(const SpectralFingerprint& fp);

}  // namespace hopfish
