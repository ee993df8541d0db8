#pragma once

#include <optional>
#include <vector>

#include "hia/filters.hpp"
#include "hia/power.hpp"

namespace hia {

// Homomorphisms are total maps source-index -> target-index.  They must
// preserve all six operations and both constants.
using HomMap = std::vector<Elem>;

bool is_homomorphism(const AlgebraOps& src, const AlgebraOps& dst, const HomMap& map);

// All homomorphisms, sorted lexicographically by map vector.  The search
// branches on a greedy generating sequence and propagates forced values,
// so it touches far fewer than |dst|^|src| candidates.
std::vector<HomMap> find_homomorphisms(const HIAlgebra& src, const HIAlgebra& dst);

// First injective homomorphism in the same canonical order, if any.
std::optional<HomMap> find_embedding(const HIAlgebra& src, const HIAlgebra& dst);

// Bijective homomorphism; inverse of a bijective homomorphism is again
// one, so this decides isomorphism.
std::optional<HomMap> find_isomorphism(const HIAlgebra& a, const HIAlgebra& b);

// Extend a homomorphism given on the subuniverse `sub_members` of `big`
// (local indices, with parallel `values` in `target`) to all of big.
// Returns the canonically first extension or nullopt when none exists.
// Throws InputError if the given data is not a homomorphism.
std::optional<HomMap> extend_homomorphism(const HIAlgebra& big,
                                          const std::vector<Elem>& sub_members,
                                          const std::vector<Elem>& values,
                                          const HIAlgebra& target);

struct InjectivityCounterexample {
  std::size_t exponent = 0;        // the power the pair D <= B lives in
  std::vector<Elem> d_members;     // tuple encodings in generator^exponent
  std::vector<Elem> b_members;     // subset of d_members
  std::vector<Elem> b_images;      // parallel: images as candidate encodings
};

struct InjectivityVerdict {
  // True when some homomorphism B -> candidate with B <= D failed to
  // extend to D within the bounds.
  bool counterexample_found = false;
  std::optional<InjectivityCounterexample> counterexample;

  std::size_t exponent_bound = 0;
  std::size_t subalgebra_bound = 0;
  std::size_t subalgebras_checked = 0;
  std::size_t homomorphisms_checked = 0;

  // Structural facts reported alongside the bounded search: a candidate
  // is injective in the generated variety exactly when it is a diagonal
  // subalgebra of a Boolean power with complete lattice part, and every
  // finite Boolean algebra is complete.
  bool candidate_diagonal = false;
  bool candidate_complete = true;
  bool characterization_predicts_injective = false;
};

inline constexpr std::size_t kDefaultExponentBound = 2;
inline constexpr std::size_t kDefaultSubalgebraBound = 16;

// Search all test pairs B <= D inside generator^n for n = 1..exponent
// bound, |D| capped by the subalgebra bound, in canonical order
// (exponent, then D by (size, lex), then B likewise, then homomorphisms
// lexicographically).  The generator must be subdirectly irreducible;
// throws NotSubdirectlyIrreducibleError or TrivialAlgebraError.
InjectivityVerdict bounded_injectivity_check(
    const HIAlgebra& generator, const Subalgebra& candidate,
    std::size_t exponent_bound = kDefaultExponentBound,
    std::size_t subalgebra_bound = kDefaultSubalgebraBound);

}  // namespace hia
