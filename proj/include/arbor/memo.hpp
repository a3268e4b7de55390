#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace arbor::detail {

// Insert-only cache. References handed out stay valid because unordered_map
// nodes never move and entries are never erased. The value is computed
// outside the lock, so recursive lookups from inside `compute` are fine; two
// threads racing on the same key compute identical values and the first
// insertion wins.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
 public:
  template <class Compute>
  const Value& get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace arbor::detail
