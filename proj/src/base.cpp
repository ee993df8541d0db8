#include "hia/base.hpp"

namespace hia {
namespace {

std::string join_elems(const std::vector<Elem>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_strings(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

}  // namespace

PosetError::PosetError(std::string law, std::vector<Elem> witness)
    : Error("order violation: " + law + " at (" + join_elems(witness) + ")"),
      law_(std::move(law)),
      witness_(std::move(witness)) {}

NotLatticeError::NotLatticeError(bool missing_glb, Elem a, Elem b)
    : Error(std::string("NotLattice: elements ") + std::to_string(a) + " and " +
            std::to_string(b) + " have no " +
            (missing_glb ? "greatest lower bound" : "least upper bound")),
      missing_glb_(missing_glb),
      a_(a),
      b_(b) {}

NotHeytingError::NotHeytingError(Elem a, Elem b)
    : Error("NotHeyting: no maximum x with " + std::to_string(a) + " & x <= " +
            std::to_string(b)),
      a_(a),
      b_(b) {}

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected)
    : Error("syntax error at offset " + std::to_string(position) + ": expected " +
            join_strings(expected)),
      position_(position),
      expected_(std::move(expected)) {}

UnboundVariableError::UnboundVariableError(std::string name)
    : Error("unbound variable: " + name), name_(std::move(name)) {}

NotInvolutiveError::NotInvolutiveError(std::vector<Elem> filter_members)
    : Error("filter {" + join_elems(filter_members) +
            "} is not involutive; it induces no congruence"),
      members_(std::move(filter_members)) {}

TrivialAlgebraError::TrivialAlgebraError()
    : Error("operation is undefined on the one-element algebra") {}

SizeBoundError::SizeBoundError(std::size_t requested, std::size_t bound)
    : Error("size bound exceeded: " + std::to_string(requested) + " > " +
            std::to_string(bound)),
      requested_(requested),
      bound_(bound) {}

NotSubdirectlyIrreducibleError::NotSubdirectlyIrreducibleError(const std::string& name)
    : Error("algebra " + (name.empty() ? std::string("<unnamed>") : name) +
            " is not subdirectly irreducible") {}

NotVerifiedError::NotVerifiedError(std::size_t algebra_index, std::string algebra_name,
                                   Elem witness)
    : Error("common killer fails on algebra #" + std::to_string(algebra_index) +
            (algebra_name.empty() ? std::string() : " (" + algebra_name + ")") +
            " at element " + std::to_string(witness)),
      index_(algebra_index),
      name_(std::move(algebra_name)),
      witness_(witness) {}

}  // namespace hia
