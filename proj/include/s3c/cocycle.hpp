#pragma once

#include <map>
#include <utility>
#include <vector>

#include "s3c/spinor.hpp"

namespace s3c {

// n x n matrix over sphere spinors; zero entries are not stored. Indices are 0-based.
class CurrentElement {
 public:
  using Key = std::pair<int, int>;

  explicit CurrentElement(int n = 2) : n_(n) {
    if (n < 1) throw Error("matrix size must be positive");
  }

  int size() const { return n_; }
  const std::map<Key, Spinor>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  const Spinor& at(int i, int j) const {
    static const Spinor zero;
    auto it = entries_.find({i, j});
    return it == entries_.end() ? zero : it->second;
  }
  void set(int i, int j, Spinor x) {
    check_index(i, j);
    if (x.space() != Space::sphere) throw Error("current elements take sphere spinors");
    if (x.is_zero())
      entries_.erase({i, j});
    else
      entries_[{i, j}] = std::move(x);
  }
  void add(int i, int j, const Spinor& x) { set(i, j, at(i, j) + x); }

  CurrentElement operator-() const {
    CurrentElement r(n_);
    for (auto& [key, x] : entries_) r.entries_.emplace(key, -x);
    return r;
  }
  CurrentElement& operator+=(const CurrentElement& o) {
    same_size(o);
    for (auto& [key, x] : o.entries_) add(key.first, key.second, x);
    return *this;
  }
  CurrentElement& operator-=(const CurrentElement& o) { return *this += -o; }
  CurrentElement& operator*=(const GQ& k) {
    if (k.is_zero()) entries_.clear();
    for (auto& [key, x] : entries_) x *= k;
    return *this;
  }
  friend CurrentElement operator+(CurrentElement a, const CurrentElement& b) { return a += b; }
  friend CurrentElement operator-(CurrentElement a, const CurrentElement& b) { return a -= b; }
  friend CurrentElement operator*(const GQ& k, CurrentElement a) { return a *= k; }
  friend bool operator==(const CurrentElement&, const CurrentElement&) = default;

  void same_size(const CurrentElement& o) const {
    if (o.n_ != n_) throw Error("matrix size mismatch");
  }

 private:
  void check_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error("matrix index out of range");
  }

  int n_;
  std::map<Key, Spinor> entries_;
};

// Matrix product with entries multiplied in 𝓛.
inline CurrentElement matrix_mul(const CurrentElement& A, const CurrentElement& B) {
  A.same_size(B);
  CurrentElement r(A.size());
  for (auto& [ka, x] : A.entries())
    for (auto& [kb, y] : B.entries())
      if (ka.second == kb.first) r.add(ka.first, kb.second, spinor_mul(x, y));
  return r;
}

inline GQ cocycle(int k, const Spinor& x, const Spinor& y) {
  if (x.space() != Space::sphere || y.space() != Space::sphere) throw Error("cocycle requires sphere spinors");
  return integrate_s3(trace(spinor_mul(theta_action(k, x), y)));
}

// Trace rule: sum_{i,j} c_k(A_ij, B_ji).
inline GQ cocycle_matrix(int k, const CurrentElement& A, const CurrentElement& B) {
  A.same_size(B);
  GQ r;
  for (auto& [key, x] : A.entries()) {
    const Spinor& y = B.at(key.second, key.first);
    if (!y.is_zero()) r += cocycle(k, x, y);
  }
  return r;
}

}  // namespace s3c
