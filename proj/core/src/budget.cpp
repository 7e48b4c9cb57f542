#include "ffc/budget.hpp"

#include "ffc/scalar.hpp"

namespace ffc::budget {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> g_deadline;
}

void set_deadline(
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  g_deadline = deadline;
}

void check() {
  if (g_deadline && std::chrono::steady_clock::now() > *g_deadline)
    throw TimeoutError("basis computation exceeded time budget");
}

Scope::Scope(long long ms) : previous_(g_deadline) {
  g_deadline =
      std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
}

Scope::~Scope() { g_deadline = previous_; }

}  // namespace ffc::budget
