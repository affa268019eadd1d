#pragma once

// Randomized and windowed checks of the sesquialgebra axioms and the weak
// antipode. Every report is reproducible from (seed, trials, window).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "hopfish/bimodules.hpp"

namespace hopfish {

struct CheckReport {
  std::string axiom;
  Int trials = 0;
  Int window = 0;
  std::uint64_t seed = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

nlohmann::json to_json(const CheckReport& r);

/// The maps under test. Replacing one yields a mutation fixture.
struct CheckHooks {
  std::function<TripleVector(const TripleVector&)> iso = coassoc_iso;
  std::function<AlgebraElement(const RawCounitSum&)> counit = counit_reduce;
  std::function<SymScalar(const HomMatrix&, const SVector&)> pair = pairing;
  std::function<HomMatrix(const HomMatrix&, const PureTensorSum&)> hom = hom_act;
  std::function<AlgebraElement(const AlgebraElement&)> anti = antipode;
};

/// Known-bad hooks for "h1", "h2", "h3w", "h4", "noanti". InvalidArgument otherwise.
CheckHooks mutant(const std::string& axiom);

/// Seed of trial t, derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master, Int t);

CheckReport check_h1(Int trials, Int window, std::uint64_t seed, const CheckHooks& hooks = {});
CheckReport check_h2(Int trials, Int window, std::uint64_t seed, const CheckHooks& hooks = {});
CheckReport check_h3_weak(Int trials, Int window, std::uint64_t seed, const CheckHooks& hooks = {});
CheckReport check_h4(Int window = 8, const CheckHooks& hooks = {});
CheckReport check_no_strong_antipode(Int support_radius, const CheckHooks& hooks = {});

}  // namespace hopfish
