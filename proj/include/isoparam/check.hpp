#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace isoparam {

// flagged: the computation is sound but disagrees with a printed value; the
// witness records both.
enum class Status { pass, fail, flagged };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::flagged: return "flagged";
  }
  return "fail";
}

struct ClaimCheck {
  std::string claim;
  std::string paper_ref;
  Status status = Status::fail;
  nlohmann::json witness = nlohmann::json::object();

  bool ok() const { return status != Status::fail; }
};

using CheckList = std::vector<ClaimCheck>;

inline ClaimCheck make_check(std::string claim, std::string ref, bool passed, nlohmann::json witness = {}) {
  return {std::move(claim), std::move(ref), passed ? Status::pass : Status::fail,
          witness.is_null() ? nlohmann::json::object() : std::move(witness)};
}

inline bool all_ok(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

}  // namespace isoparam
