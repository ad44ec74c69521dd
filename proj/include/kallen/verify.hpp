#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kallen/characters.hpp"

namespace kallen {

struct IdentityCase {
  std::string case_name;
  std::string identity;
  bool pass = true;
  std::string lhs;  // filled on failure only
  std::string rhs;
};

/// Identities checked per (type, lambda).
const std::vector<std::string>& shape_identities();
/// Identities on random polynomials, checked per type.
const std::vector<std::string>& operator_identities();
bool is_identity_name(const std::string& name);

struct VerifyOptions {
  int trunc = 6;
  int random_count = 100;
  std::uint64_t seed = 1;
};

/// Runs one shape identity over every applicable (w, i).
std::vector<IdentityCase> verify_identity(const std::string& name, const ShapeContext& ctx,
                                          const CharacterTable& table, const VerifyOptions& opt);
/// Runs one operator identity on opt.random_count random polynomials.
std::vector<IdentityCase> verify_operator_identity(const std::string& name, const RootSystem& R,
                                                   const VerifyOptions& opt);

struct SweepShape {
  std::string type;
  Weight lambda;
};

/// All dominant lambda with every coordinate <= max_coord, for each type.
std::vector<SweepShape> sweep_shapes(const std::vector<std::string>& types, int max_coord);

struct SuiteConfig {
  std::vector<std::string> identities;  // empty selects all
  std::vector<SweepShape> shapes;
  VerifyOptions options;
  int jobs = 1;
};

struct SuiteReport {
  std::vector<IdentityCase> cases;  // canonical order
  int failures() const;
};

SuiteReport run_suite(const SuiteConfig& config);

std::string case_label(const ShapeContext& ctx);
std::string report_to_json(const SuiteReport& report, int indent = 2);
std::string report_to_text(const SuiteReport& report);

}  // namespace kallen
