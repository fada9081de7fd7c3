#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fanocert/integer.hpp"

namespace fanocert {

/// How a check entry in a certificate trail was established.
enum class CheckKind {
  Verified,          // decided by exact computation in this engine
  CitedRule,         // external theorem taken as an axiom of the check
  DerivedExtension,  // computed, but with constants extended beyond the original argument
};

inline const char* to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Verified: return "verified";
    case CheckKind::CitedRule: return "cited-rule";
    case CheckKind::DerivedExtension: return "derived-extension";
  }
  return "verified";
}

enum class CheckResult { Pass, Fail, Cited };

inline const char* to_string(CheckResult result) {
  switch (result) {
    case CheckResult::Pass: return "pass";
    case CheckResult::Fail: return "fail";
    case CheckResult::Cited: return "cited";
  }
  return "fail";
}

struct Witness {
  std::string label;
  std::vector<Int> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// One named input of a check. Integers only.
struct Input {
  std::string name;
  Int value;

  friend bool operator==(const Input&, const Input&) = default;
};

struct CheckOutcome {
  std::string name;
  std::string paper_ref;
  std::vector<Input> inputs;
  CheckResult result = CheckResult::Fail;
  std::vector<Witness> witnesses;
  CheckKind kind = CheckKind::Verified;

  bool passed() const { return result == CheckResult::Pass; }
  bool cited() const { return result == CheckResult::Cited; }

  CheckOutcome& input(std::string key, Int value) {
    inputs.push_back({std::move(key), value});
    return *this;
  }
  CheckOutcome& witness(std::string label, std::vector<Int> values) {
    witnesses.push_back({std::move(label), std::move(values)});
    return *this;
  }
  CheckOutcome& set(bool ok) {
    result = ok ? CheckResult::Pass : CheckResult::Fail;
    return *this;
  }
};

inline CheckOutcome make_check(std::string name, std::string ref,
                               CheckKind kind = CheckKind::Verified) {
  CheckOutcome out;
  out.name = std::move(name);
  out.paper_ref = std::move(ref);
  out.kind = kind;
  return out;
}

/// A geometric step this engine does not re-prove. Always visible in the trail.
inline CheckOutcome cited_rule(std::string name, std::string ref) {
  CheckOutcome out = make_check(std::move(name), std::move(ref), CheckKind::CitedRule);
  out.result = CheckResult::Cited;
  return out;
}

}  // namespace fanocert
