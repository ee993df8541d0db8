#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hia/algebra.hpp"

namespace hia {

enum class TermKind : std::uint8_t { Var, Zero, One, Inv, Neg, Meet, Join, Impl };

// Immutable term over the algebra signature.  Nodes are shared, so
// iterated constructions (killer terms) stay linear in memory and the
// evaluator can memoise per node.
class Term {
public:
  struct Node;  // defined in the implementation file

  static Term variable(std::string name);
  static Term zero();
  static Term one();
  static Term inv(Term t);
  static Term neg(Term t);
  static Term meet(Term lhs, Term rhs);
  static Term join(Term lhs, Term rhs);
  static Term impl(Term lhs, Term rhs);

  TermKind kind() const;
  const std::string& var_name() const;  // Var only
  Term child() const;                   // Inv/Neg only
  Term left() const;                    // binary only
  Term right() const;                   // binary only

  // Structural equality; cheap via node sharing where it applies.
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  // Concrete syntax with minimal parentheses; parse(to_string(t)) == t.
  std::string to_string() const;

  std::vector<std::string> free_variables() const;  // sorted, unique
  std::size_t node_count() const;                   // distinct shared nodes

private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend struct TermInternal;
};

// Grammar, loosest to tightest: impl `->` (right-assoc), join `|`,
// meet `&`, prefix `!` and `~`, atoms 0 1 variable (expr).  Variables
// match [A-Za-z][A-Za-z0-9_]*.  Throws SyntaxError with offset and the
// token set that would have been accepted.
Term parse_term(std::string_view src);

using Environment = std::map<std::string, Elem>;

// Throws UnboundVariableError; out-of-range values are InputError.
Elem eval_term(const AlgebraOps& a, const Term& t, const Environment& env);

struct IdentityVerdict {
  bool holds = true;
  std::optional<Environment> counterexample;  // lex-least over sorted vars
  Elem lhs_value = 0, rhs_value = 0;          // at the counterexample
};

// Exhaustive check of lhs = rhs over all assignments to the union of
// free variables, ascending with the lexicographically first variable
// most significant.
IdentityVerdict holds_identity(const AlgebraOps& a, const Term& lhs, const Term& rhs);

// Capture-free because replacements happen at variable leaves only.
Term substitute(const Term& t, const std::map<std::string, Term>& replacement);

// |A|^k as a double, for CLI cost warnings; never overflows.
double assignment_count(std::size_t algebra_size, std::size_t variable_count);

}  // namespace hia
