#pragma once

#include <string>

#include "hia/algebra.hpp"

namespace hia::testing {

inline FinitePoset chain_poset(std::size_t n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i; j < n; ++j) leq[i * n + j] = 1;
  return FinitePoset(n, std::move(leq));
}

// 0 < i < n-1: inversion is order reversal, the only choice on a chain.
inline HIAlgebra make_chain(std::size_t n, std::string name = "") {
  std::vector<Elem> inv(n);
  for (Elem i = 0; i < n; ++i) inv[i] = static_cast<Elem>(n - 1 - i);
  return HIAlgebra::from_order(chain_poset(n), std::move(inv), std::move(name));
}

inline FinitePoset diamond_poset() {
  return FinitePoset(4, {1, 1, 1, 1,  //
                         0, 1, 0, 1,  //
                         0, 0, 1, 1,  //
                         0, 0, 0, 1});
}

inline HIAlgebra make_diamond_fix(std::string name = "diamond_fix") {
  return HIAlgebra::from_order(diamond_poset(), {3, 1, 2, 0}, std::move(name));
}

inline HIAlgebra make_diamond_swap(std::string name = "diamond_swap") {
  return HIAlgebra::from_order(diamond_poset(), {3, 2, 1, 0}, std::move(name));
}

// Boolean algebra 2^k: elements are subset bitmasks (so bottom is 0 and
// top 2^k - 1), involution is set complement.
inline HIAlgebra make_bool(std::size_t k, std::string name = "") {
  const std::size_t n = std::size_t(1) << k;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) leq[i * n + j] = (i & ~j) == 0 ? 1 : 0;
  std::vector<Elem> inv(n);
  for (Elem i = 0; i < n; ++i) inv[i] = static_cast<Elem>((n - 1) ^ i);
  return HIAlgebra::from_order(FinitePoset(n, std::move(leq)), std::move(inv),
                               std::move(name));
}

// Modular non-distributive: 0 < 1,2,3 < 4.
inline FinitePoset m3_poset() {
  return FinitePoset(5, {1, 1, 1, 1, 1,  //
                         0, 1, 0, 0, 1,  //
                         0, 0, 1, 0, 1,  //
                         0, 0, 0, 1, 1,  //
                         0, 0, 0, 0, 1});
}

// Valid partial order, bottom at 0, but two maximal elements: no top.
inline FinitePoset two_maximal_poset() {
  return FinitePoset(3, {1, 1, 1,  //
                         0, 1, 0,  //
                         0, 0, 1});
}

// Bounded, but {1,2} has two minimal upper bounds: not a lattice.
inline FinitePoset bowtie_poset() {
  return FinitePoset(6, {1, 1, 1, 1, 1, 1,  //
                         0, 1, 0, 1, 1, 1,  //
                         0, 0, 1, 1, 1, 1,  //
                         0, 0, 0, 1, 0, 1,  //
                         0, 0, 0, 0, 1, 1,  //
                         0, 0, 0, 0, 0, 1});
}

}  // namespace hia::testing
