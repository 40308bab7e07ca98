#pragma once

#include <set>
#include <string>
#include <vector>

namespace mslat {

/// A finite set of positive integers, stored ascending.
using Face = std::vector<unsigned>;

/// Size first, then lexicographic: the order faces are listed and checked in.
struct FaceLess {
  bool operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using FaceSet = std::set<Face, FaceLess>;

/// "{}" for the empty face, "134" when every label is a single digit,
/// "{1,12}" otherwise.
inline std::string face_str(const Face& f) {
  if (f.empty()) return "{}";
  bool short_form = true;
  for (auto v : f) short_form = short_form && v < 10;
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!short_form && i) out += ",";
    out += std::to_string(f[i]);
  }
  return short_form ? out : "{" + out + "}";
}

}  // namespace mslat
