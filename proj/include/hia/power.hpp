#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hia/algebra.hpp"

namespace hia {

inline constexpr std::size_t kPowerCarrierBound = 1'000'000;
inline constexpr std::size_t kMaterializeBound = 512;

// Direct power base^exponent with lazy coordinatewise operations.
// Tuples are encoded base-|base| with the first coordinate most
// significant, so numeric order on encodings is lexicographic order on
// tuples and encoding 0 / carrier-1 are the constant bottom / top.
class PowerAlgebra final : public AlgebraOps {
public:
  // Throws SizeBoundError when |base|^exponent exceeds the bound.
  PowerAlgebra(HIAlgebra base, std::size_t exponent,
               std::size_t carrier_bound = kPowerCarrierBound);

  std::size_t size() const override { return carrier_; }
  Elem meet(Elem a, Elem b) const override;
  Elem join(Elem a, Elem b) const override;
  Elem impl(Elem a, Elem b) const override;
  Elem neg(Elem a) const override;
  Elem inv(Elem a) const override;
  std::vector<Elem> diagonal_elements() const override;

  const HIAlgebra& base() const { return base_; }
  std::size_t exponent() const { return exponent_; }
  const std::string& provenance() const { return provenance_; }

  Elem encode(const std::vector<Elem>& tuple) const;
  std::vector<Elem> decode(Elem x) const;

  // Table-backed copy, audited coordinate for coordinate against the
  // lazy operations.  Throws SizeBoundError above max_elements.
  HIAlgebra materialize(std::string name = "",
                        std::size_t max_elements = kMaterializeBound) const;

private:
  HIAlgebra base_;
  std::size_t exponent_;
  std::size_t carrier_;
  std::vector<Elem> place_;  // place_[i] = |base|^(exponent-1-i)
  std::string provenance_;

  friend PowerAlgebra boolean_power(const HIAlgebra&, std::size_t, std::size_t);
};

PowerAlgebra direct_power(const HIAlgebra& base, std::size_t exponent,
                          std::size_t carrier_bound = kPowerCarrierBound);

// Finite Boolean power by the 2^atoms Boolean algebra: step functions
// with one coordinate per atom, i.e. the direct power base^atoms with
// provenance recording the construction.
PowerAlgebra boolean_power(const HIAlgebra& base, std::size_t atoms,
                           std::size_t carrier_bound = kPowerCarrierBound);

// Subuniverse of an operation view, closed under all six operations.
// Membership is re-verified exhaustively on construction.
class Subalgebra {
public:
  Subalgebra(std::shared_ptr<const AlgebraOps> parent, std::vector<Elem> members);

  static Subalgebra generated(std::shared_ptr<const AlgebraOps> parent,
                              const std::vector<Elem>& generators,
                              std::size_t size_bound);

  const AlgebraOps& parent() const { return *parent_; }
  const std::shared_ptr<const AlgebraOps>& parent_ptr() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  bool contains(Elem x) const;

  // True when every constant tuple of the parent is a member.
  bool diagonal() const { return diagonal_; }

  // Table algebra on local indices plus the encoding each index stands
  // for; labels are ascending, so local 0 is the parent bottom and the
  // last local index the parent top.
  struct Realized {
    HIAlgebra algebra;
    std::vector<Elem> labels;
  };
  Realized realize(std::string name = "") const;

private:
  std::shared_ptr<const AlgebraOps> parent_;
  std::vector<Elem> members_;
  bool diagonal_ = false;
};

// Closure of a subset under all six operations plus the two constants.
// Throws SizeBoundError as soon as the closure exceeds size_bound.
std::vector<Elem> closure(const AlgebraOps& a, const std::vector<Elem>& seed,
                          std::size_t size_bound);

// Every subuniverse with at most max_members elements, by breadth-first
// extension of the minimal subalgebra; sorted by (size, lex members).
// Parents with more than carrier_bound elements are rejected.
std::vector<Subalgebra> enumerate_subalgebras(std::shared_ptr<const AlgebraOps> parent,
                                              std::size_t max_members,
                                              std::size_t carrier_bound = 4096);

}  // namespace hia
