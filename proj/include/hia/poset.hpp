#pragma once

#include <cstddef>
#include <vector>

#include "hia/base.hpp"

namespace hia {

// Finite poset on elements 0..n-1, stored as the full order relation.
// leq is row-major: leq[a*n + b] != 0 means a <= b.
struct FinitePoset {
  std::size_t n = 0;
  std::vector<std::uint8_t> leq;

  FinitePoset() = default;
  FinitePoset(std::size_t size, std::vector<std::uint8_t> relation);

  bool le(Elem a, Elem b) const { return leq[a * n + b] != 0; }
};

// Reflexivity, antisymmetry, transitivity.  Throws PosetError with the
// offending law and witness tuple.
void check_partial_order(const FinitePoset& p);

// Bottom must sit at index 0 and top at index n-1.  Throws PosetError.
void check_bounds(const FinitePoset& p);

struct LatticeTables {
  std::vector<Elem> meet, join;  // flat n*n
};

// Greatest lower / least upper bound tables.  Requires a valid partial
// order; throws NotLatticeError on the first (lex-least) failing pair.
LatticeTables derive_lattice_ops(const FinitePoset& p);

// Relative pseudo-complement table: impl[a][b] = max{x : a & x <= b}.
// Throws NotHeytingError on the first failing pair.
std::vector<Elem> derive_impl(const FinitePoset& p, const std::vector<Elem>& meet);

// Strict cover relation of the order (edges of the Hasse diagram).
std::vector<std::uint8_t> cover_relation(const FinitePoset& p);

// Longest chain, counted in elements: a 3-chain has length 3.
std::size_t max_chain_length(const FinitePoset& p);

// Number of downsets (subsets closed under going down).  Saturates at
// `cap` so callers can prune without materialising huge counts.
std::size_t downset_count(const FinitePoset& p, std::size_t cap);

// All downsets as bitmasks, ascending.  Requires n <= 20.
std::vector<std::uint32_t> all_downsets(const FinitePoset& p);

}  // namespace hia
