#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gamedim {

/// Invalid argument to a library operation (bad vertex id, bad parameters).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation is not defined on this input (e.g. doubly resolving sets of a
/// directed or disconnected graph).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed serialized input (graph JSON, landmark lists, rationals).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact solver hit its size bound before finding a resolving set.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(std::size_t max_k, std::size_t heuristic_upper_bound)
      : std::runtime_error("no resolving set of size <= " + std::to_string(max_k) +
                           " (greedy upper bound " + std::to_string(heuristic_upper_bound) + ")"),
        max_k_(max_k),
        upper_bound_(heuristic_upper_bound) {}

  std::size_t max_k() const noexcept { return max_k_; }
  std::size_t heuristic_upper_bound() const noexcept { return upper_bound_; }

 private:
  std::size_t max_k_;
  std::size_t upper_bound_;
};

}  // namespace gamedim
