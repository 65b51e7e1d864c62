#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sdbetti/complex.hpp"
#include "sdbetti/field.hpp"
#include "sdbetti/formulas.hpp"
#include "sdbetti/hochster.hpp"

namespace sdbetti::cli {

struct SuiteParams {
  std::optional<int> d;
  std::optional<int> r;
  int dmax = 0;  // 0: suite default
  FieldSpec field;
  HochsterOptions options;
  std::optional<SimplicialComplex> input;
  std::string mode = "bary";
};

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite, GateExceeded when a suite
/// would exceed its size limits.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

/// Checks every *.json complex in `dir`: JSON round trip, Euler characteristic
/// against reduced Betti numbers, and β_{1,·} against the minimal non-faces.
VerificationReport fixture_checks(const std::filesystem::path& dir, const FieldSpec& field,
                                  const HochsterOptions& options);

}  // namespace sdbetti::cli
