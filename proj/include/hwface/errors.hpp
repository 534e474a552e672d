#pragma once

#include <stdexcept>
#include <string>

namespace hwface {

// Bad user input or violated precondition. CLI exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration hit a configured cap. CLI exit code 2.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A formula cross-check failed; indicates a bug, not bad input. CLI exit code 3.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

inline void check(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace hwface
