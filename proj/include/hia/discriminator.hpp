#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "hia/term.hpp"

namespace hia {

// k_depth in the variable "x": the meet of x with its first `depth`
// images under !~, built with node sharing.  k_1(x) = x & !~x.
Term killer_term(std::size_t depth);

struct KillerSynthesis {
  std::size_t depth = 0;  // pinned to the longest chain length
  Term term = Term::zero();
  bool verified = false;
  std::optional<Elem> failure_witness;     // least x where k(x) is wrong
  std::optional<std::size_t> minimal_depth;  // least working depth, if any
};

// Killer contract: k(top) = top and k(x) = 0 elsewhere.  The synthesis
// always uses depth = longest chain length and reports whether that
// works; minimal_depth probes smaller and larger depths up to the point
// where iterating !~ stabilises.  Throws TrivialAlgebraError.
KillerSynthesis synthesize_killer(const HIAlgebra& a);

// One term at the maximal chain length over the whole set; throws
// NotVerifiedError naming the first member it fails on.
KillerSynthesis common_killer(std::span<const HIAlgebra> algebras);

// Check an arbitrary candidate (at most one free variable) against the
// killer contract.
struct KillerCheck {
  bool verified = false;
  std::optional<Elem> witness;
};

KillerCheck verify_killer(const HIAlgebra& a, const Term& k);

// t(x,y,z) = (k(s) & z) | (~k(s) & x) with s = (x -> y) & (y -> x).
// Takes any unary killer term; the result discriminates wherever the
// killer works.
Term discriminator_from_killer(const Term& killer);

// ~t(1, x, 0): recovers a killer from any working discriminator.
Term killer_from_discriminator(const Term& t,
                               const std::array<std::string, 3>& vars = {"x", "y",
                                                                         "z"});

struct DiscriminatorSynthesis {
  Term term = Term::zero();
  bool verified = false;
  std::optional<std::array<Elem, 3>> failure_witness;  // lex-least triple
};

// Exhaustive check of the discriminator contract: t(a,b,c) = a when
// a != b, else c.
DiscriminatorSynthesis verify_discriminator(const HIAlgebra& a, const Term& t,
                                            const std::array<std::string, 3>& vars = {
                                                "x", "y", "z"});

// Killer synthesis succeeds and the induced discriminator verifies.
// The second step failing after the first succeeds is an internal bug.
// Throws TrivialAlgebraError.
bool is_quasi_primal(const HIAlgebra& a);

}  // namespace hia
