#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "unital/incidence.hpp"

namespace unital {

struct Check {
  std::string name;
  bool pass = false;
  nlohmann::json detail;
};

/// Outcome of a verification: named checks, an optional line-intersection
/// profile, counterexample witnesses and metadata echoing the input.
struct VerificationReport {
  std::string subject;
  std::map<std::uint32_t, std::uint64_t> profile;
  std::map<LineKind, std::map<std::uint32_t, std::uint64_t>> profile_by_kind;
  std::vector<Check> checks;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json metadata = nlohmann::json::object();
  double seconds = 0.0;

  static constexpr std::size_t kMaxWitnesses = 10;

  bool pass() const;
  void add_check(std::string name, bool ok, nlohmann::json detail = nullptr);
  void add_witness(nlohmann::json w);
  /// First failing check, or nullptr.
  const Check* first_failure() const;
  /// Check with the given name, or nullptr.
  const Check* find(const std::string& name) const;

  /// Timing is left out unless asked for so identical runs serialize
  /// identically.
  nlohmann::json to_json(bool with_timing = false) const;
  /// Rows of (line-kind, intersection-size, count).
  std::string to_csv() const;
};

/// Merges sub-reports into one whose checks are prefixed by the child subject.
VerificationReport combine(std::string subject, const std::vector<VerificationReport>& parts);

}  // namespace unital
