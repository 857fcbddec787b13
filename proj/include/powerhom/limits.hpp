#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "powerhom/scalar.hpp"

namespace powerhom {

/// Raised when a computation exceeds a user-supplied resource bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Cooperative resource bounds, checked at the natural loop boundaries of the
/// heavy computations (Gröbner pair processing, per-degree linear algebra).
struct Limits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::optional<int> max_degree;

  static Limits none() { return {}; }
  static Limits with_timeout(double seconds) {
    Limits l;
    l.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
    return l;
  }

  void check_time() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw ResourceLimit("time limit exceeded");
  }
  void check_degree(int degree) const {
    if (max_degree && degree > *max_degree)
      throw ResourceLimit("degree limit " + std::to_string(*max_degree) + " exceeded (degree " +
                          std::to_string(degree) + ")");
  }
};

inline void check_limits(const Limits* limits, int degree) {
  if (!limits) return;
  limits->check_time();
  limits->check_degree(degree);
}

}  // namespace powerhom
