#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zerohecke/coxeter.hpp"
#include "zerohecke/field.hpp"

namespace zerohecke {

enum class Status { pass, fail, undetermined };
const char* to_string(Status s);

/// One (suite, check, instance) result.
struct Outcome {
  std::string suite;
  std::string check;
  std::string instance;
  Status status = Status::pass;
  std::string detail;
};

struct VerifyConfig {
  std::string group = "A3";
  FieldSpec field;
  std::uint64_t seed = 0;
  int max_n = 6;  // largest composition size for section5
  std::size_t max_group = kDefaultMaxGroupSize;
  unsigned threads = 1;
  /// Test hook: the relations suite also checks a module with one corrupted entry.
  bool inject_corruption = false;
  /// Called once per finished instance, in completion order.
  std::function<void(const Outcome&)> progress;
};

struct Report {
  std::string suite;
  std::string group;
  std::string field;
  std::uint64_t seed = 0;
  std::vector<Outcome> outcomes;  // sorted by (suite, check, instance)

  std::size_t count(Status s) const;
  /// 0 all pass, 1 some failure, 2 no failure but something undetermined.
  int exit_code() const;
  std::string json() const;
  std::string text() const;
};

/// relations, thm-interval-projective, thm-decomposition, thm-twists,
/// thm-covers, thm-hulls, lemma-w0, section5, all.
const std::vector<std::string>& suite_names();

/// Throws ConfigError for an unknown suite or group.
Report run_verify(const std::string& suite, const VerifyConfig& config);

/// ZEROHECKE_THREADS if set and positive, otherwise 1.
unsigned threads_from_env();

}  // namespace zerohecke
