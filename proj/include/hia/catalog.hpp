#pragma once

#include <string>
#include <vector>

#include "hia/algebra.hpp"

namespace hia {

// Canonical key of a finite poset: the lexicographically least flattened
// order matrix over all relabelings.  Equal keys exactly characterise
// isomorphism.  The bounded variant only considers relabelings that keep
// bottom at 0 and top at n-1.
std::vector<std::uint8_t> canonical_key(const FinitePoset& p);
std::vector<std::uint8_t> canonical_key_bounded(const FinitePoset& p);

// Key of the full structure: bounded order key followed by the relabeled
// involution row, minimised together.
std::vector<std::uint8_t> canonical_key(const HIAlgebra& a);

// All order-preserving-and-reflecting bijections, sorted lex.
std::vector<std::vector<Elem>> order_automorphisms(const FinitePoset& p);

// Every distributive lattice with up to max_size elements, one per
// isomorphism class, each with bottom 0 and top n-1; sorted by (size,
// canonical key).  Enumeration walks posets of join-irreducibles and
// takes downset lattices, pruning by downset count.  max_size above the
// cap raises SizeBoundError.
std::vector<FinitePoset> enumerate_distributive_lattices(std::size_t max_size,
                                                         std::size_t size_cap = 10);

struct InvolutionLists {
  std::vector<std::vector<Elem>> all;                 // lex ascending
  std::vector<std::vector<Elem>> up_to_automorphism;  // lex-least per orbit
};

// All maps making the lattice an HI-algebra, i.e. order-reversing
// bijections sigma with sigma(sigma(x)) = x satisfying the De Morgan
// law; plus representatives up to lattice automorphism.
InvolutionLists enumerate_involutions(const FinitePoset& lattice);

struct CatalogEntry {
  explicit CatalogEntry(HIAlgebra a) : algebra(std::move(a)) {}

  HIAlgebra algebra;  // named a<size>_<ordinal>
  std::size_t size = 0;
  bool si = false;  // trivial algebra recorded as false
  std::size_t center_size = 0;
  std::size_t congruence_count = 0;
  std::size_t involutive_filter_count = 0;
  std::vector<std::uint8_t> key;
};

struct CatalogConfig {
  std::size_t max_size = 8;
  bool si_only = false;
  std::size_t enumeration_cap = 10;
};

// One entry per isomorphism class of HI-algebras up to max_size, sorted
// by (size, key), annotated with the center, congruence and involutive
// filter data.  Congruence and filter counts disagreeing is an internal
// bug.  Deterministic: equal configs give identical output.
std::vector<CatalogEntry> build_catalog(const CatalogConfig& cfg);

}  // namespace hia
