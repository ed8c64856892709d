#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace zonocube {

// Error codes double as CLI exit codes.
enum class ErrorCode : int {
  CheckFailed = 1,
  InvalidInput = 2,
  BudgetExceeded = 3,
  Internal = 4,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& w) : Error(ErrorCode::InvalidInput, w) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& w) : Error(ErrorCode::BudgetExceeded, w) {}
};

struct FlipRejected : Error {
  explicit FlipRejected(const std::string& w) : Error(ErrorCode::InvalidInput, w) {}
};

// Raised when a maximal chain contains a barrel step: the swept membranes do
// not close up to a cubillage of the next dimension.
struct BarrelHole : Error {
  explicit BarrelHole(const std::string& w) : Error(ErrorCode::InvalidInput, w) {}
};

// A chain lift produced inconsistent data. This cannot happen for genuine
// chains of cubillages; seeing it means a broken invariant upstream.
struct LiftInconsistency : Error {
  explicit LiftInconsistency(const std::string& w) : Error(ErrorCode::Internal, w) {}
};

struct InternalCheckFailed : Error {
  explicit InternalCheckFailed(const std::string& w) : Error(ErrorCode::Internal, w) {}
};

// Default node budget for searches; ZONOCUBE_BUDGET overrides.
uint64_t default_budget();

// Shared counter for enumeration/search work. Thread-safe.
class Budget {
public:
  explicit Budget(uint64_t limit = default_budget()) : limit_(limit) {}

  void charge(uint64_t k = 1) {
    if (used_.fetch_add(k, std::memory_order_relaxed) + k > limit_)
      throw BudgetExceeded("search budget of " + std::to_string(limit_) +
                           " nodes exceeded (set ZONOCUBE_BUDGET to raise)");
  }

  uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  uint64_t limit() const { return limit_; }

private:
  uint64_t limit_;
  std::atomic<uint64_t> used_{0};
};

// Runs fn(0..n_items-1) on up to `threads` workers. Work items must be
// independent; callers that need a deterministic result collect per-index
// output and merge in index order.
void parallel_for(int n_items, int threads, const std::function<void(int)>& fn);

}  // namespace zonocube
