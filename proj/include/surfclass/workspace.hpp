#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace surfclass {

/// Raised when a charge would push a metered workspace over its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t requested, std::uint64_t current, std::uint64_t budget)
      : std::runtime_error("work-memory budget exceeded: " + std::to_string(current) +
                           " bits live + " + std::to_string(requested) + " requested > " +
                           std::to_string(budget) + " budget"),
        requested_(requested),
        current_(current),
        budget_(budget) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t current() const noexcept { return current_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t current_;
  std::uint64_t budget_;
};

/// Raised from charge() once a workspace's wall-clock deadline has passed.
class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("wall-clock deadline exceeded") {}
};

/// ceil(log2(x)) for x >= 1; 0 for x <= 1.
constexpr std::uint64_t ceil_log2(std::uint64_t x) noexcept {
  return x <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(x - 1));
}

/// Bits needed to hold a binary counter ranging over [0, n+1]: ceil(log2(n+2)).
constexpr std::uint64_t counter_bits(std::uint64_t n) noexcept { return ceil_log2(n + 2); }

/// Default budget of the metered engine: C * ceil(log2(N+2))^2 for an input of N symbols.
constexpr std::uint64_t default_budget_bits(std::uint64_t input_symbols,
                                            std::uint64_t constant = 64) noexcept {
  const std::uint64_t l = ceil_log2(input_symbols + 2);
  return constant * l * l;
}

/// Stricter C * ceil(log2(N+2)) budget, meant for a logspace connectivity oracle.
constexpr std::uint64_t strict_budget_bits(std::uint64_t input_symbols,
                                           std::uint64_t constant = 64) noexcept {
  return constant * ceil_log2(input_symbols + 2);
}

class Workspace;

/// Move-only handle for a live charge. Releasing (explicitly or on destruction)
/// returns exactly the charged bits to the workspace.
class [[nodiscard]] ChargeToken {
 public:
  ChargeToken() = default;
  ChargeToken(const ChargeToken&) = delete;
  ChargeToken& operator=(const ChargeToken&) = delete;
  ChargeToken(ChargeToken&& other) noexcept
      : ws_(std::exchange(other.ws_, nullptr)), bits_(std::exchange(other.bits_, 0)) {}
  ChargeToken& operator=(ChargeToken&& other) noexcept {
    if (this != &other) {
      release();
      ws_ = std::exchange(other.ws_, nullptr);
      bits_ = std::exchange(other.bits_, 0);
    }
    return *this;
  }
  ~ChargeToken() { release(); }

  inline void release() noexcept;
  std::uint64_t bits() const noexcept { return bits_; }
  bool live() const noexcept { return ws_ != nullptr; }

 private:
  friend class Workspace;
  ChargeToken(Workspace* ws, std::uint64_t bits) : ws_(ws), bits_(bits) {}

  Workspace* ws_ = nullptr;
  std::uint64_t bits_ = 0;
};

/// Bit-accounted work memory. Everything the metered engine keeps between
/// input reads (loop counters, recursion frames, stored integers) is charged
/// here; the input table itself is read-only and free.
///
/// A workspace belongs to one logical task. It is not thread-safe.
class Workspace {
 public:
  using Clock = std::chrono::steady_clock;

  /// budget_bits == 0 means unlimited.
  explicit Workspace(std::uint64_t budget_bits = 0) : budget_bits_(budget_bits) {}
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  ChargeToken charge(std::uint64_t bits) {
    if (bits == 0) throw std::invalid_argument("charge of zero bits");
    if (deadline_ && (++charges_ & 0xFFFU) == 0 && Clock::now() > *deadline_)
      throw DeadlineExceeded();
    if (budget_bits_ > 0 && current_bits_ + bits > budget_bits_)
      throw BudgetExceeded(bits, current_bits_, budget_bits_);
    current_bits_ += bits;
    peak_bits_ = std::max(peak_bits_, current_bits_);
    return ChargeToken(this, bits);
  }

  /// Charge one binary counter over [0, n+1].
  ChargeToken charge_counter(std::uint64_t n) { return charge(counter_bits(n)); }

  void note_input_read() noexcept { ++input_reads_; }

  /// Abort the computation (DeadlineExceeded from a later charge) after `at`.
  /// The clock is sampled every 4096 charges.
  void set_deadline(Clock::time_point at) noexcept { deadline_ = at; }

  std::uint64_t budget_bits() const noexcept { return budget_bits_; }
  std::uint64_t current_bits() const noexcept { return current_bits_; }
  std::uint64_t peak_bits() const noexcept { return peak_bits_; }
  std::uint64_t input_reads() const noexcept { return input_reads_; }

 private:
  friend class ChargeToken;
  void release(std::uint64_t bits) noexcept { current_bits_ -= bits; }

  std::uint64_t budget_bits_;
  std::uint64_t current_bits_ = 0;
  std::uint64_t peak_bits_ = 0;
  std::uint64_t input_reads_ = 0;
  std::uint64_t charges_ = 0;
  std::optional<Clock::time_point> deadline_;
};

inline void ChargeToken::release() noexcept {
  if (ws_ != nullptr) {
    ws_->release(bits_);
    ws_ = nullptr;
    bits_ = 0;
  }
}

}  // namespace surfclass
