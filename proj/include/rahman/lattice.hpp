#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace rahman {

/// Exponent triple (r, s, t) of x^r y^s z^t; r + s + t is the degree.
struct MultiIndex {
  int r = 0;
  int s = 0;
  int t = 0;

  int degree() const { return r + s + t; }
  int operator[](int i) const { return i == 0 ? r : (i == 1 ? s : t); }
  int& operator[](int i) { return i == 0 ? r : (i == 1 ? s : t); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  std::string str() const;
};

/// Lattice order: descending r, then descending s. Only meaningful between
/// indices of equal degree; ties across degrees fall back to degree.
struct LatticeOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.r != b.r) return a.r > b.r;
    return a.s > b.s;
  }
};

/// (N+1)(N+2)/2.
std::size_t lattice_size(int N);

/// All (r,s,t) with r+s+t = N in lattice order.
std::vector<MultiIndex> lattice(int N);

/// Position of `idx` inside lattice(idx.degree()).
std::size_t lattice_position(const MultiIndex& idx);

/// True iff a - b is a permutation of (1, -1, 0). Throws DegreeMismatch.
bool adjacent(const MultiIndex& a, const MultiIndex& b);

}  // namespace rahman
