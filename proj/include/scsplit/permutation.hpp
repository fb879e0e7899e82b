#pragma once

// Permutations of {0..n-1} with an eagerly computed cycle decomposition.
// Antimorphisms (the self-complementarity certificates) are returned as
// Permutation values, and most structural arguments walk their cycles.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace scsplit {

class Permutation {
public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<bool> seen(n, false);
    for (int v : image_) {
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
    // Canonical cycle decomposition: each cycle starts at its least element,
    // cycles ordered by those starts.
    std::vector<bool> done(n, false);
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      std::vector<int> cyc;
      for (int u = v; !done[u]; u = image_[u]) {
        done[u] = true;
        cyc.push_back(u);
      }
      cycles_.push_back(std::move(cyc));
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(image_.size()); }

  int operator()(int v) const {
    if (v < 0 || v >= size()) throw std::invalid_argument("vertex out of range");
    return image_[v];
  }

  const std::vector<int>& image() const { return image_; }
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }

  int fixed_points() const {
    int f = 0;
    for (const auto& c : cycles_) f += c.size() == 1;
    return f;
  }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int v = 0; v < size(); ++v) inv[image_[v]] = v;
    return Permutation(std::move(inv));
  }

  // σ composed k times; k >= 0.
  int iterate(int v, int k) const {
    while (k-- > 0) v = image_[v];
    return v;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& c : cycles_) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

  bool operator==(const Permutation& o) const { return image_ == o.image_; }

private:
  std::vector<int> image_;
  std::vector<std::vector<int>> cycles_;
};

}  // namespace scsplit
