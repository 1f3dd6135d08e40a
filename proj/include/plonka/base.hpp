#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace plonka {

struct Diagnostic {
  std::string code;
  std::string message;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input text / JSON.
struct ParseError : Error {
  using Error::Error;
};
// Structurally well-formed input violating a domain law.
struct ValidationError : Error {
  using Error::Error;
};
// Instance exceeds a configured size cap.
struct SizeCapError : Error {
  using Error::Error;
};

// PLONKA_CAP, when set to a positive integer, overrides every default cap.
inline int cap_default(int fallback) {
  if (const char* s = std::getenv("PLONKA_CAP")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return fallback;
}

inline std::string diag_text(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    out += d.code;
    out += ": ";
    out += d.message;
    out += '\n';
  }
  return out;
}

}  // namespace plonka
