#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kess {

/// Resource caps for the exponential solvers. Each solver call gets its own
/// counter; the caps are never shared between calls.
struct SolverBudget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;

  static SolverBudget unlimited() {
    return {UINT64_MAX, 1e300};
  }
};

/// Thrown when a solver exceeds its budget. No partial value escapes.
class BudgetExhausted : public std::runtime_error {
public:
  explicit BudgetExhausted(const std::string &what)
      : std::runtime_error("budget exhausted: " + what) {}
};

class BudgetTracker {
public:
  BudgetTracker(const SolverBudget &budget, const char *solver)
      : budget_(budget), solver_(solver),
        start_(std::chrono::steady_clock::now()) {
    if (budget.max_nodes == 0 || !(budget.max_seconds > 0))
      throw std::invalid_argument("solver budget caps must be positive");
  }

  /// Counts one search node; throws BudgetExhausted past either cap.
  void tick() {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExhausted(std::string(solver_) + " exceeded " +
                            std::to_string(budget_.max_nodes) + " nodes");
    if ((nodes_ & 0x3FFF) == 0) {
      std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds)
        throw BudgetExhausted(std::string(solver_) + " exceeded " +
                              std::to_string(budget_.max_seconds) + " s");
    }
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  SolverBudget budget_;
  const char *solver_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

} // namespace kess
