#pragma once

#include <string>
#include <vector>

namespace iara {

// Outcome of one axiom or property check.
struct Verdict {
  std::string name;
  bool pass = false;
  bool conclusive = true;
  std::string detail;
  std::string stamp;
  std::vector<std::string> witnesses;

  std::string status() const {
    if (pass) return "PASS";
    return conclusive ? "FAIL" : "INCONCLUSIVE";
  }
};

inline Verdict make_verdict(std::string name, bool pass, std::string detail, std::string stamp) {
  Verdict v;
  v.name = std::move(name);
  v.pass = pass;
  v.detail = std::move(detail);
  v.stamp = std::move(stamp);
  return v;
}

inline bool all_pass(const std::vector<Verdict>& vs) {
  for (const auto& v : vs)
    if (!v.pass) return false;
  return true;
}

}  // namespace iara
