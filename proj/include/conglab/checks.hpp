#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace conglab {

enum class Status { pass, fail, skip };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skip";
  }
}

/// One verification outcome. `p` is 0 for prime-independent identities.
/// A fail witness carries both sides and the modulus; a skip carries a reason.
struct CheckResult {
  std::string check_id;
  std::uint64_t p = 0;
  std::map<std::string, std::string> params;
  Status status = Status::pass;
  std::map<std::string, std::string> witness;
};

}  // namespace conglab
