#ifndef FFC_BUDGET_HPP
#define FFC_BUDGET_HPP

#include <chrono>
#include <optional>

namespace ffc::budget {

/// Per-thread deadline for basis computations. Unset means unlimited.
void set_deadline(
    std::optional<std::chrono::steady_clock::time_point> deadline);

/// Throws TimeoutError when the deadline has passed.
void check();

/// RAII scope that installs a deadline `ms` milliseconds from now and
/// restores the previous one on exit.
class Scope {
 public:
  explicit Scope(long long ms);
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

}  // namespace ffc::budget

#endif
