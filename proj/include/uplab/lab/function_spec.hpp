#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uplab/fmodel/test_function.hpp"

namespace uplab::lab {

// Test-function recipe shared by configs and CLI flags.
//   gaussian          e^{-width |x|^2 - i chirp |x|^2}   (width 0.5, chirp 0 by default)
//   hermite           Phi_index
//   monomial          x^index e^{-|x|^2/2}
//   ft-eigenfunction  seeded, |alpha| = k0 (mod 4), |alpha| <= degree
//   random            seeded complex normal coefficients, unit norm
//   random-phase      seeded unit-modulus coefficients
//   poisson           e^{-t sqrt(H)} applied to random-phase
struct FunctionSpec {
  std::string variant = "gaussian";
  std::vector<int> index;
  int degree = 0;
  int k0 = 0;
  double width = 0.5;
  double chirp = 0.0;
  double t = 0.0;
  std::optional<std::uint64_t> seed;

  bool randomized() const;
  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

const std::vector<std::string>& function_variants();

// std::invalid_argument for unknown variants, missing seeds, bad parameters
fmodel::TestFunction build_function(const FunctionSpec& spec, int n);
std::string describe(const FunctionSpec& spec);

nlohmann::json to_json(const FunctionSpec& spec);
FunctionSpec function_spec_from_json(const nlohmann::json& j);  // unknown keys rejected

}  // namespace uplab::lab
