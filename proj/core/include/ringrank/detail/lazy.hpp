#pragma once

#include <mutex>
#include <optional>
#include <utility>

namespace ringrank::detail {

/// Value computed on first access, at most once, safe under concurrent
/// access. If the producer throws, the next access retries.
template <class T>
class Lazy {
 public:
  template <class Producer>
  const T& get(Producer&& produce) const {
    std::call_once(once_, [&] { value_.emplace(std::forward<Producer>(produce)()); });
    return *value_;
  }

 private:
  mutable std::once_flag once_;
  mutable std::optional<T> value_;
};

}  // namespace ringrank::detail
