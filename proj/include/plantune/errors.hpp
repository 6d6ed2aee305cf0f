#ifndef PLANTUNE_ERRORS_HPP_
#define PLANTUNE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace plantune {

/// Malformed input: dimension mismatches, empty lists, out-of-range values.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A planning problem whose start or goal is unusable (in collision or out of
/// limits). Distinct from planning failure, which is a non-exceptional result.
class RejectedProblem : public std::runtime_error {
 public:
  explicit RejectedProblem(const std::string& what) : std::runtime_error(what) {}
};

/// Bad run configuration detected while driving a pipeline (e.g. a problem set
/// that fails load-time validation).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plantune

#endif  // PLANTUNE_ERRORS_HPP_
