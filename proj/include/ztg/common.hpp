#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ztg {

// Size limits for exact computations. Exceeding one is a clean error,
// never silent truncation.
struct Caps {
  std::int64_t max_elements = 1024;    // carrier size of a module
  std::int64_t max_submodules = 20000; // lattice size
  int max_chi_vertices = 40;           // exact chromatic-number solver
};

class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::string cap, std::int64_t count, std::int64_t limit)
      : std::runtime_error("cap exceeded: " + cap + " = " + std::to_string(count) +
                           " > " + std::to_string(limit)),
        cap_name(std::move(cap)), offending_count(count), cap_limit(limit) {}
  std::string cap_name;
  std::int64_t offending_count;
  std::int64_t cap_limit;
};

// Malformed instance files, bad CLI selectors, schema violations.
class SchemaError : public std::runtime_error {
public:
  explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ztg
