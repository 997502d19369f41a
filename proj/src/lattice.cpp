#include "rahman/lattice.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "rahman/errors.hpp"

namespace rahman {

std::string MultiIndex::str() const {
  return "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
}

std::size_t lattice_size(int N) {
  const auto n = static_cast<std::size_t>(N);
  return (n + 1) * (n + 2) / 2;
}

std::vector<MultiIndex> lattice(int N) {
  std::vector<MultiIndex> out;
  out.reserve(lattice_size(N));
  for (int r = N; r >= 0; --r)
    for (int s = N - r; s >= 0; --s) out.push_back({r, s, N - r - s});
  return out;
}

std::size_t lattice_position(const MultiIndex& idx) {
  // Block for a given r holds N-r+1 entries; blocks are ordered by descending r.
  const auto m = static_cast<std::size_t>(idx.s + idx.t);
  return m * (m + 1) / 2 + static_cast<std::size_t>(idx.t);
}

bool adjacent(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("adjacent: " + a.str() + " and " + b.str() + " differ in degree");
  }
  std::array<int, 3> diff{a.r - b.r, a.s - b.s, a.t - b.t};
  std::sort(diff.begin(), diff.end());
  return diff == std::array<int, 3>{-1, 0, 1};
}

}  // namespace rahman
