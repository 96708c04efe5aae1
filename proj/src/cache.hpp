#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "hpreal.hpp"

namespace esum {

// Per-context constant cache. Lookups under the same context return
// bit-identical values. Misses compute outside the lock (a race may duplicate
// work, but results are deterministic so either copy is the same).
struct ConstCache {
  HPReal value(const std::string& key, const std::function<HPReal()>& compute) {
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    HPReal v = compute();
    std::lock_guard<std::mutex> g(mu_);
    auto [it, inserted] = values_.emplace(key, v);
    return it->second;
  }

  template <class T>
  std::shared_ptr<const T> object(const std::string& key,
                                  const std::function<std::shared_ptr<const T>()>& compute) {
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = objects_.find(key);
      if (it != objects_.end()) return std::static_pointer_cast<const T>(it->second);
    }
    std::shared_ptr<const T> v = compute();
    std::lock_guard<std::mutex> g(mu_);
    auto [it, inserted] = objects_.emplace(key, std::static_pointer_cast<const void>(v));
    return std::static_pointer_cast<const T>(it->second);
  }

 private:
  std::mutex mu_;
  std::map<std::string, HPReal> values_;
  std::map<std::string, std::shared_ptr<const void>> objects_;
};

}  // namespace esum
