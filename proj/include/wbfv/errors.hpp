#ifndef WBFV_ERRORS_HPP
#define WBFV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wbfv {

// Invalid scenario/config input. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure during a run (inadmissible state, Newton divergence,
// supercritical interface, ...). CLI maps this to exit code 3.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wbfv

#endif
