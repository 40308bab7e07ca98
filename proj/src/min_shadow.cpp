#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "mslat/bounds.hpp"
#include "mslat/error.hpp"

namespace mslat {

namespace {

// Objects are exponent vectors: 0/1 vectors for sets, arbitrary ones for
// monomials. `preds` are the shifting moves one step down.
struct Universe {
  std::vector<std::vector<unsigned>> objects;
  std::vector<std::vector<std::size_t>> shadow;
  std::vector<std::vector<std::size_t>> preds;
  std::size_t shadow_count = 0;
};

void enumerate_vectors(unsigned vars, unsigned degree, bool squarefree, std::vector<unsigned>& cur,
                       unsigned pos, unsigned left, std::vector<std::vector<unsigned>>& out) {
  if (pos + 1 == vars) {
    if (squarefree && left > 1) return;
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  unsigned cap = squarefree ? std::min(1u, left) : left;
  for (unsigned e = cap + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate_vectors(vars, degree, squarefree, cur, pos + 1, left - e, out);
  }
  cur[pos] = 0;
}

std::vector<std::vector<unsigned>> all_vectors(unsigned vars, unsigned degree, bool squarefree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(vars, 0);
  enumerate_vectors(vars, degree, squarefree, cur, 0, degree, out);
  return out;
}

Universe make_universe(unsigned k, ShadowMode mode, unsigned u) {
  const bool sets = mode == ShadowMode::Sets;
  Universe uni;
  uni.objects = all_vectors(u, k, sets);
  // Shifting moves lower the weight sum_j j*e_j by exactly one, so sorting by
  // weight is a linear extension of the shift order.
  auto weight = [](const std::vector<unsigned>& v) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < v.size(); ++j) w += j * v[j];
    return w;
  };
  std::stable_sort(uni.objects.begin(), uni.objects.end(),
                   [&](const auto& a, const auto& b) { return weight(a) < weight(b); });

  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < uni.objects.size(); ++i) index.emplace(uni.objects[i], i);
  std::map<std::vector<unsigned>, std::size_t> lower_index;
  for (const auto& v : all_vectors(u, k - 1, sets)) lower_index.emplace(v, lower_index.size());
  uni.shadow_count = lower_index.size();

  uni.shadow.resize(uni.objects.size());
  uni.preds.resize(uni.objects.size());
  for (std::size_t i = 0; i < uni.objects.size(); ++i) {
    auto v = uni.objects[i];
    for (unsigned j = 0; j < u; ++j) {
      if (v[j] == 0) continue;
      --v[j];
      uni.shadow[i].push_back(lower_index.at(v));
      ++v[j];
    }
    for (unsigned j = 1; j < u; ++j) {
      if (v[j] == 0 || (sets && v[j - 1] == 1)) continue;
      --v[j];
      ++v[j - 1];
      uni.preds[i].push_back(index.at(v));
      ++v[j];
      --v[j - 1];
    }
  }
  return uni;
}

class Search {
 public:
  Search(const Universe& uni, std::size_t n, bool compressed)
      : uni_(uni), n_(n), compressed_(compressed), counts_(uni.shadow_count, 0), chosen_(uni.objects.size(), false) {}

  std::uint64_t run() {
    dfs(0, 0, 0);
    return best_;
  }

 private:
  void dfs(std::size_t pos, std::size_t taken, std::uint64_t size) {
    if (size >= best_) return;
    if (taken == n_) {
      best_ = size;
      return;
    }
    if (uni_.objects.size() - pos < n_ - taken) return;
    bool allowed = true;
    if (compressed_) {
      for (auto p : uni_.preds[pos]) allowed = allowed && chosen_[p];
    }
    if (allowed) {
      std::uint64_t grown = size;
      for (auto s : uni_.shadow[pos]) {
        if (counts_[s]++ == 0) ++grown;
      }
      chosen_[pos] = true;
      dfs(pos + 1, taken + 1, grown);
      chosen_[pos] = false;
      for (auto s : uni_.shadow[pos]) --counts_[s];
    }
    dfs(pos + 1, taken, size);
  }

  const Universe& uni_;
  std::size_t n_;
  bool compressed_;
  std::vector<std::uint32_t> counts_;
  std::vector<bool> chosen_;
  std::uint64_t best_ = std::numeric_limits<std::uint64_t>::max();
};

bool binomial_at_most(std::size_t total, std::size_t n, double limit) {
  double c = 1;
  std::size_t s = std::min(n, total - n);
  for (std::size_t i = 0; i < s; ++i) {
    c = c * static_cast<double>(total - i) / static_cast<double>(i + 1);
    if (c > limit) return false;
  }
  return true;
}

}  // namespace

std::uint64_t brute_min_shadow(std::uint64_t n, unsigned k, ShadowMode mode, unsigned universe,
                               SearchStrategy strategy) {
  if (n < 1 || k < 1 || universe < 1) {
    throw PreconditionError("brute_min_shadow needs n, k and universe all positive");
  }
  if (mode == ShadowMode::Sets && universe > 64) {
    throw PreconditionError("brute_min_shadow supports at most 64 ground elements");
  }
  Universe uni = make_universe(k, mode, universe);
  if (n > uni.objects.size()) {
    throw PreconditionError("brute_min_shadow: only " + std::to_string(uni.objects.size()) +
                            " objects exist, cannot pick " + std::to_string(n));
  }
  bool compressed = strategy == SearchStrategy::Compressed ||
                    (strategy == SearchStrategy::Auto && !binomial_at_most(uni.objects.size(), n, 1e7));
  return Search(uni, n, compressed).run();
}

}  // namespace mslat
