#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "vilenkin/group.hpp"

namespace vilenkin::detail {

/// Memoized kernel samples, keyed by (kind, n). Shared by all copies of a
/// GroupStructure; synchronized and bounded so it never changes results,
/// only avoids recomputation.
class KernelCache {
 public:
  static constexpr std::size_t kMaxEntries = 512;
  static constexpr std::uint64_t kMaxCachedPoints = std::uint64_t{1} << 16;

  std::shared_ptr<const DiscreteFunction> find(int kind, std::uint64_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key(kind, n));
    return it == map_.end() ? nullptr : it->second;
  }

  void store(int kind, std::uint64_t n,
             std::shared_ptr<const DiscreteFunction> samples) {
    if (samples->values.size() > kMaxCachedPoints) return;
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() >= kMaxEntries) return;
    map_.emplace(key(kind, n), std::move(samples));
  }

 private:
  static std::uint64_t key(int kind, std::uint64_t n) {
    return (static_cast<std::uint64_t>(kind) << 58) | n;
  }

  mutable std::mutex mu_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const DiscreteFunction>> map_;
};

}  // namespace vilenkin::detail
