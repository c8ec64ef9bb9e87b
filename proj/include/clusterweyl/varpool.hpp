#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace cw {

using VarId = std::int32_t;

// Process-wide table of symbolic variables. Ids are stable for the lifetime
// of the process; lookups by label are interned. Thread-safe.
class VarPool {
 public:
  static VarPool& instance() {
    static VarPool pool;
    return pool;
  }

  VarId intern(const std::string& label) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_label_.find(label);
    if (it != by_label_.end()) return it->second;
    VarId id = static_cast<VarId>(labels_.size());
    labels_.push_back(label);
    by_label_.emplace(label, id);
    return id;
  }

  std::string label(VarId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return labels_.at(static_cast<std::size_t>(id));
  }

 private:
  VarPool() = default;
  mutable std::mutex mu_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VarId> by_label_;
};

inline VarId make_var(const std::string& label) {
  return VarPool::instance().intern(label);
}

inline std::string var_label(VarId id) { return VarPool::instance().label(id); }

}  // namespace cw
