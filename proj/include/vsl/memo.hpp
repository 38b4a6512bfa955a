#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace vsl {

/// Memo table shared by worker threads: concurrent readers, and the first writer
/// wins when two threads compute the same key.
template <class Key, class Value, class Compare = std::less<Key>>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  /// Inserts unless present; returns the stored value either way.
  Value insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::move(value));
    return it->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    if (auto hit = find(key)) return *hit;
    return insert(key, compute());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> table_;
};

}  // namespace vsl
