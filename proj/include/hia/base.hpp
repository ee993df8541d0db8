#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hia {

// Elements of a finite algebra are dense indices 0..n-1.  Direct-power
// tuples are carried in the same type via base-|A| positional encoding
// (first coordinate most significant), so plain algebras, powers and
// subalgebras share one element representation.
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = static_cast<Elem>(-1);

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated order axiom (reflexivity, antisymmetry, transitivity, bounds).
class PosetError : public Error {
public:
  PosetError(std::string law, std::vector<Elem> witness);
  const std::string& law() const { return law_; }
  const std::vector<Elem>& witness() const { return witness_; }

private:
  std::string law_;
  std::vector<Elem> witness_;
};

// Some pair has no unique greatest lower / least upper bound.
class NotLatticeError : public Error {
public:
  NotLatticeError(bool missing_glb, Elem a, Elem b);
  bool missing_glb() const { return missing_glb_; }
  Elem a() const { return a_; }
  Elem b() const { return b_; }

private:
  bool missing_glb_;
  Elem a_, b_;
};

// {x : a & x <= b} has no maximum; happens exactly on non-distributive
// finite lattices.
class NotHeytingError : public Error {
public:
  NotHeytingError(Elem a, Elem b);
  Elem a() const { return a_; }
  Elem b() const { return b_; }

private:
  Elem a_, b_;
};

// Construction input breaks an algebra invariant (bad involution, bad
// table shape, ...).
class InvalidAlgebraError : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, std::vector<std::string> expected);
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnboundVariableError : public Error {
public:
  explicit UnboundVariableError(std::string name);
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class NotInvolutiveError : public Error {
public:
  explicit NotInvolutiveError(std::vector<Elem> filter_members);
  const std::vector<Elem>& filter_members() const { return members_; }

private:
  std::vector<Elem> members_;
};

class TrivialAlgebraError : public Error {
public:
  TrivialAlgebraError();
};

class SizeBoundError : public Error {
public:
  SizeBoundError(std::size_t requested, std::size_t bound);
  std::size_t requested() const { return requested_; }
  std::size_t bound() const { return bound_; }

private:
  std::size_t requested_, bound_;
};

// Two routes that must agree disagreed; always an implementation bug,
// never a property of the input.
class InternalInconsistencyError : public Error {
public:
  using Error::Error;
};

class NotSubdirectlyIrreducibleError : public Error {
public:
  explicit NotSubdirectlyIrreducibleError(const std::string& name);
};

// A member of a common-killer input set failed verification.
class NotVerifiedError : public Error {
public:
  NotVerifiedError(std::size_t algebra_index, std::string algebra_name, Elem witness);
  std::size_t algebra_index() const { return index_; }
  const std::string& algebra_name() const { return name_; }
  Elem witness() const { return witness_; }

private:
  std::size_t index_;
  std::string name_;
  Elem witness_;
};

// Malformed files, CLI arguments, unusable candidates.
class InputError : public Error {
public:
  using Error::Error;
};

}  // namespace hia
