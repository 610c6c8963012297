#pragma once

#include <map>
#include <mutex>
#include <utility>

namespace compound {

/// Mutex-guarded lookup table. The value is computed outside the lock so that
/// recursive computations can consult the same table; a racing duplicate
/// computation is harmless because results are deterministic.
template <class Key, class Value>
class GuardedMemo {
 public:
  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace compound
