#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mslat {

/// (f_{-1}, f_0, f_1, ...): f_i counts objects of rank i+1 (or size/degree
/// i+1). Storage slot 0 holds f_{-1}, which is always 1.
class FVector {
 public:
  FVector() : entries_{1} {}
  FVector(std::initializer_list<std::uint64_t> entries) : FVector(std::vector<std::uint64_t>(entries)) {}
  explicit FVector(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.front() != 1) {
      throw std::invalid_argument("f-vector must start with f_{-1} = 1");
    }
  }

  /// f_i for i >= -1; zero past the stored range.
  std::uint64_t at(int i) const {
    if (i < -1) throw std::out_of_range("f-vector index below -1");
    auto slot = static_cast<std::size_t>(i + 1);
    return slot < entries_.size() ? entries_[slot] : 0;
  }

  /// Largest index i with a stored entry (so -1 for the vector (1)).
  int top_index() const { return static_cast<int>(entries_.size()) - 2; }
  const std::vector<std::uint64_t>& entries() const { return entries_; }

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto v : entries_) s += v;
    return s;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(entries_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const FVector&, const FVector&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FVector& f) { return os << f.str(); }

 private:
  std::vector<std::uint64_t> entries_;
};

}  // namespace mslat
