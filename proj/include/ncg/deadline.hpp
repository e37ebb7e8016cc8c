#pragma once

#include <chrono>
#include <string>

#include "ncg/errors.hpp"

namespace ncg {

// Wall-clock budget shared by long computations; inactive by default.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(double seconds) {
    Deadline d;
    if (seconds > 0) {
      d.active_ = true;
      d.seconds_ = seconds;
      d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
    }
    return d;
  }

  bool active() const { return active_; }
  bool expired() const { return active_ && Clock::now() > end_; }
  // Throws TimeBudgetExceeded once the budget is spent.
  void check(const char* what = "computation") const {
    if (expired()) throw TimeBudgetExceeded(std::string(what) + " exceeded the time budget of " + std::to_string(seconds_) + " s");
  }

 private:
  bool active_ = false;
  double seconds_ = 0;
  Clock::time_point end_{};
};

inline double seconds_since(Deadline::Clock::time_point start) {
  return std::chrono::duration<double>(Deadline::Clock::now() - start).count();
}

}  // namespace ncg
