#pragma once

// Brute-force oracles for the test suites. They share no code path with the
// library routines they check: prime-field arithmetic is plain modular
// integers, matrices are scanned exhaustively, and group orders come from
// enumerating every permutation of small vertex sets.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

/// Number of n x n matrices over Z/p with A A^T = I, scanning all p^(n*n).
inline std::uint64_t orthogonal_count_prime(std::uint32_t p, unsigned n) {
  const unsigned cells = n * n;
  std::vector<std::uint32_t> m(cells, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (unsigned r = 0; r < n && ok; ++r)
      for (unsigned s = 0; s < n && ok; ++s) {
        std::uint64_t acc = 0;
        for (unsigned k = 0; k < n; ++k) acc += std::uint64_t{m[r * n + k]} * m[s * n + k];
        ok = acc % p == (r == s ? 1u : 0u);
      }
    count += ok;
    unsigned pos = 0;
    while (pos < cells && ++m[pos] == p) m[pos++] = 0;
    if (pos == cells) break;
  }
  return count;
}

/// Does the monic polynomial (constant first) have a root in Z/p?
inline bool has_root_prime(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = (acc * x + coeffs[k]) % p;
    if (acc == 0) return true;
  }
  return false;
}

/// Sphere class counts over (Z/p)^n from plain integer arithmetic:
/// {isotropic, nonzero square, nonsquare}.
inline std::vector<std::uint64_t> sphere_counts_prime(std::uint32_t p, unsigned n) {
  std::set<std::uint32_t> squares;
  for (std::uint32_t x = 0; x < p; ++x) squares.insert(x * x % p);
  std::vector<std::uint64_t> out(3, 0);
  std::vector<std::uint32_t> v(n, 0);
  while (true) {
    unsigned pos = 0;
    while (pos < n && ++v[pos] == p) v[pos++] = 0;
    if (pos == n) break;
    std::uint64_t norm = 0;
    for (auto c : v) norm += std::uint64_t{c} * c;
    norm %= p;
    if (norm == 0) ++out[0];
    else if (squares.count(static_cast<std::uint32_t>(norm))) ++out[1];
    else ++out[2];
  }
  return out;
}

/// |Aut| of a small graph by trying all n! permutations.
template <typename Adjacent>
std::uint64_t automorphism_count(std::uint32_t n, Adjacent adjacent) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::uint32_t u = 0; u < n && ok; ++u)
      for (std::uint32_t v = u + 1; v < n && ok; ++v) ok = adjacent(u, v) == adjacent(perm[u], perm[v]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle
