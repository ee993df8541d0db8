#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hia/poset.hpp"

namespace hia {

// Operation view of a finite Heyting algebra with involution.  Elements
// are 0..size()-1 with bottom pinned at 0 and top at size()-1; leq is
// recovered from meet so powers and table algebras share one interface.
class AlgebraOps {
public:
  virtual ~AlgebraOps() = default;

  virtual std::size_t size() const = 0;
  virtual Elem meet(Elem a, Elem b) const = 0;
  virtual Elem join(Elem a, Elem b) const = 0;
  virtual Elem impl(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem inv(Elem a) const = 0;

  // Image of the base algebra under the constant embedding; for a plain
  // algebra that is every element, for a power the constant tuples.
  virtual std::vector<Elem> diagonal_elements() const = 0;

  Elem bottom() const { return 0; }
  Elem top() const { return static_cast<Elem>(size() - 1); }
  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }

  // not(inv(a)): the closure operator whose fixpoints below top matter
  // for killer synthesis and filter generation.
  Elem regop(Elem a) const { return neg(inv(a)); }
};

struct Violation {
  std::string law;            // which identity failed, e.g. "i1"
  std::vector<Elem> witness;  // lex-least witness tuple
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string law, std::vector<Elem> witness);
};

// Immutable table-backed algebra.  The only constructor path derives
// every operation from (order, involution) and validates i1/i2, so a
// constructed value satisfies all structural invariants.
class HIAlgebra final : public AlgebraOps {
public:
  // Validates the order (axioms + bounds), derives meet/join/impl/neg,
  // checks the involution.  Throws PosetError, NotLatticeError,
  // NotHeytingError or InvalidAlgebraError.
  static HIAlgebra from_order(FinitePoset order, std::vector<Elem> involution,
                              std::string name = "");

  std::size_t size() const override { return poset_.n; }
  Elem meet(Elem a, Elem b) const override { return meet_[a * poset_.n + b]; }
  Elem join(Elem a, Elem b) const override { return join_[a * poset_.n + b]; }
  Elem impl(Elem a, Elem b) const override { return impl_[a * poset_.n + b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  Elem inv(Elem a) const override { return inv_[a]; }
  std::vector<Elem> diagonal_elements() const override;

  const FinitePoset& poset() const { return poset_; }
  const std::vector<Elem>& inv_table() const { return inv_; }
  const std::string& name() const { return name_; }
  bool trivial() const { return size() == 1; }
  HIAlgebra with_name(std::string name) const;

  bool same_tables(const HIAlgebra& other) const;

private:
  HIAlgebra() = default;

  FinitePoset poset_;
  std::vector<Elem> meet_, join_, impl_;  // flat n*n
  std::vector<Elem> neg_, inv_;
  std::string name_;
};

// De Morgan laws for a candidate involution over given join/meet tables:
// inv must be a bijection with inv(a|b) = inv(a) & inv(b) (law "i1") and
// inv(inv(a)) = a (law "i2").  All witnesses reported, lex order.
ValidationReport validate_involution(const std::vector<Elem>& inv,
                                     const std::vector<Elem>& join,
                                     const std::vector<Elem>& meet);

// Consequences of the axioms, checked exhaustively: i3..i9 below.  On a
// valid algebra everything passes; the override variant audits a foreign
// unary map in place of the algebra's involution (i1/i2 included).
//
//   i3: inv(a & b) = inv(a) | inv(b)
//   i4: inv(0) = 1, inv(1) = 0
//   i5: a <= b implies inv(b) <= inv(a)
//   i6: !inv(a & b) = !inv(a) & !inv(b)      (reconstructed)
//   i7: !inv(1) = 1, !inv(0) = 0             (reconstructed)
//   i8: a <= b implies !inv(a) <= !inv(b)    (reconstructed)
//   i9: !inv(a -> b) & inv(b) <= inv(a)
ValidationReport check_derived_identities(const HIAlgebra& a);
ValidationReport check_derived_identities(const HIAlgebra& a,
                                          const std::vector<Elem>& inv_candidate);

// Full invariant audit of an operation view against its own tables:
// order axioms, bounds, glb/lub soundness, distributivity, residuation,
// neg = impl(.,0), involution laws.  Cheap protection for hand-built or
// composed algebras (powers, realized subalgebras).
ValidationReport audit_algebra(const AlgebraOps& a);

std::size_t max_chain_length(const HIAlgebra& a);

}  // namespace hia
