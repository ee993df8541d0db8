#pragma once

#include <vector>

#include "hia/algebra.hpp"

namespace hia {

// Lattice filter: nonempty, meet-closed, upward-closed.  Members sorted
// ascending.  In a finite lattice every filter is principal.
struct Filter {
  std::vector<Elem> members;

  bool contains(Elem x) const;
};

// Partition of 0..n-1.  block_of uses first-occurrence numbering (the
// restricted-growth form), so equal partitions have equal vectors.
struct Congruence {
  std::vector<Elem> block_of;
  std::vector<std::vector<Elem>> blocks;

  static Congruence from_block_of(const std::vector<Elem>& raw);
  std::size_t block_count() const { return blocks.size(); }
  bool related(Elem a, Elem b) const { return block_of[a] == block_of[b]; }
  bool operator==(const Congruence& o) const { return block_of == o.block_of; }
  bool operator!=(const Congruence& o) const { return !(*this == o); }
};

// Congruence refinement: every a-block is inside some b-block.
bool finer_or_equal(const Congruence& a, const Congruence& b);

// All filters, sorted by (size, lex members).  There are exactly n.
std::vector<Filter> all_filters(const HIAlgebra& a);

// Closed under x -> !~x.
bool is_involutive_filter(const HIAlgebra& a, const Filter& f);

std::vector<Filter> involutive_filters(const HIAlgebra& a);

// Least involutive filter containing the seed: upward/meet/!~ closure.
Filter generated_involutive_filter(const HIAlgebra& a, const std::vector<Elem>& seed);

// Smallest congruence relating a and b: transitive closure of the pair
// under all six operations.
Congruence principal_congruence(const HIAlgebra& a, Elem x, Elem y);

// Every congruence, via principal congruences closed under join.
// Sorted coarsest first (block count ascending, then block_of lex), so
// the total relation leads and the diagonal comes last.
std::vector<Congruence> all_congruences(const HIAlgebra& a);

// x ~ y iff (x -> y) & (y -> x) lies in f.  Requires an involutive
// filter; throws NotInvolutiveError otherwise.
Congruence theta_of_filter(const HIAlgebra& a, const Filter& f);

// The block of top.  Inverse of theta_of_filter on involutive filters.
Filter filter_of_theta(const HIAlgebra& a, const Congruence& c);

// Elements whose negation and involution agree.  They form a Boolean
// subalgebra under the inherited order; complement_of is indexed by
// position in members.
struct InvolutiveCenter {
  std::vector<Elem> members;
  std::vector<Elem> complement_of;

  bool contains(Elem x) const;
};

InvolutiveCenter involutive_center(const HIAlgebra& a);

// Filters of the center, viewed as subsets of the ambient carrier;
// sorted by (size, lex).
std::vector<std::vector<Elem>> center_filters(const HIAlgebra& a,
                                              const InvolutiveCenter& ic);

// Involutive filters of A correspond one-to-one with filters of the
// center; forward direction is intersection, inverse is generation.
struct CenterBijectionReport {
  bool holds = false;
  std::size_t involutive_filter_count = 0;
  std::size_t center_filter_count = 0;
  bool intersection_maps_into_center_filters = false;
  bool injective = false;
  bool surjective = false;
  bool generation_inverts = false;
};

CenterBijectionReport check_center_filter_bijection(const HIAlgebra& a);

struct SiVerdict {
  bool si = false;
  bool congruence_criterion = false;  // smallest nontrivial congruence exists
  bool center_criterion = false;      // center is exactly {0, top}
};

// Both criteria computed independently; disagreement is an internal
// bug.  Throws TrivialAlgebraError on the one-element algebra.
SiVerdict is_subdirectly_irreducible(const HIAlgebra& a);

}  // namespace hia
