#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace symcalc {

/// Flat integer key; callers pack canonical symbol rows and the remaining
/// cycle multiset with -1 separators.
using MemoKey = std::vector<int>;

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : k) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Mutex-guarded map with get / insert-if-absent. Values are computed
/// outside the lock; concurrent duplicate computation is possible and
/// harmless since results are deterministic.
template <typename Value>
class MemoCache {
 public:
  std::optional<Value> find(const MemoKey& key) const {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  Value insert(MemoKey key, Value value) {
    std::lock_guard lock(mutex_);
    return map_.try_emplace(std::move(key), std::move(value)).first->second;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::lock_guard lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<MemoKey, Value, MemoKeyHash> map_;
};

}  // namespace symcalc
