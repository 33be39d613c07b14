#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

/// A permutation of {0, .., n-1} stored as an image array. Composition is
/// left-to-right: (a * b) maps i to b[a[i]], i.e. a acts first. Points are
/// 0-based everywhere in the API; all *text* formats (cycle notation,
/// group files) use 1-based points.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int degree) : img_(static_cast<size_t>(degree)) {
    for (int i = 0; i < degree; ++i) img_[static_cast<size_t>(i)] = i;
  }

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || static_cast<size_t>(v) >= img_.size() || seen[static_cast<size_t>(v)])
        throw error("image array is not a bijection");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }

  /// Image of a point.
  int operator[](int p) const { return img_[static_cast<size_t>(p)]; }

  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    return Permutation(std::move(inv));
  }

  /// a * b applies a first, then b.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw error("permutation degree mismatch in product");
    std::vector<int> out(a.img_.size());
    for (int i = 0; i < a.degree(); ++i)
      out[static_cast<size_t>(i)] = b.img_[static_cast<size_t>(a.img_[static_cast<size_t>(i)])];
    return Permutation(std::move(out));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

  /// Smallest moved point, or -1 for the identity.
  int first_moved_point() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return i;
    return -1;
  }

  /// Multiset of cycle lengths (including fixed points), sorted.
  std::vector<int> cycle_type() const {
    std::vector<int> lens;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      int len = 0, j = i;
      do {
        seen[static_cast<size_t>(j)] = 1;
        j = img_[static_cast<size_t>(j)];
        ++len;
      } while (j != i);
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  }

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  size_t operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Parses cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"; the
/// identity is "()". If degree is 0 the degree is the largest point
/// mentioned.
inline Permutation parse_permutation(const std::string& text, int degree = 0) {
  std::vector<std::pair<std::vector<int>, char>> cycles;  // 0-based cycles
  size_t i = 0;
  int max_point = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw parse_error("empty permutation", i);
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '('", i);
    ++i;
    std::vector<int> cyc;
    skip();
    while (i < text.size() && text[i] != ')') {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw parse_error("expected a point", i);
      int p = std::stoi(text.substr(start, i - start));
      if (p < 1) throw parse_error("points are 1-based", start);
      max_point = std::max(max_point, p);
      cyc.push_back(p - 1);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip();
      }
    }
    if (i == text.size()) throw parse_error("unterminated cycle", i);
    ++i;  // ')'
    cycles.emplace_back(std::move(cyc), 0);
    skip();
  }
  int n = degree > 0 ? degree : max_point;
  if (max_point > n) throw parse_error("point exceeds the stated degree", 0);
  std::vector<int> img(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) img[static_cast<size_t>(p)] = p;
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (const auto& [cyc, _] : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (cyc.size() == 1) continue;
      if (used[static_cast<size_t>(from)])
        throw parse_error("point repeated across cycles", 0);
      used[static_cast<size_t>(from)] = 1;
      img[static_cast<size_t>(from)] = to;
    }
  }
  return Permutation(std::move(img));
}

/// Renders in cycle notation with 1-based points; identity is "()".
inline std::string permutation_to_string(const Permutation& g) {
  std::string out;
  std::vector<char> seen(static_cast<size_t>(g.degree()), 0);
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || g[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      seen[static_cast<size_t>(j)] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = g[j];
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace cgt
