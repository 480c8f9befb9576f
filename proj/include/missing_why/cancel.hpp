#pragma once

#include <atomic>
#include <memory>

#include "missing_why/error.hpp"

namespace missing_why {

/// Cooperative cancellation flag. Copies share the same flag, so a token handed
/// to a long-running computation can be fired from another thread.
class CancelToken {
 public:
  CancelToken() : flag_(std::make_shared<std::atomic<bool>>(false)) {}

  void cancel() const noexcept { flag_->store(true, std::memory_order_relaxed); }
  bool cancelled() const noexcept { return flag_->load(std::memory_order_relaxed); }

  void throw_if_cancelled() const {
    if (cancelled()) throw Error(ErrorCode::Cancelled, "computation cancelled");
  }

 private:
  std::shared_ptr<std::atomic<bool>> flag_;
};

}  // namespace missing_why
