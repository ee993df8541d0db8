#include "hia/discriminator.hpp"

#include <algorithm>

namespace hia {

Term killer_term(std::size_t depth) {
  if (depth == 0) throw InputError("killer depth must be positive");
  const Term x = Term::variable("x");
  Term acc = x;
  Term iterate = x;
  for (std::size_t i = 0; i < depth; ++i) {
    iterate = Term::neg(Term::inv(iterate));  // shares the previous iterate
    acc = Term::meet(std::move(acc), iterate);
  }
  return acc;
}

namespace {

// Pointwise iterate table: vals[d][x] = x & !~x & ... (d applications).
// Iteration stabilises once two consecutive rows agree.
struct IterateTable {
  std::vector<std::vector<Elem>> rows;  // rows[d], d >= 1
  std::size_t stable_depth;             // first d with rows[d] == rows[d-1]
};

IterateTable killer_iterates(const HIAlgebra& a) {
  const std::size_t n = a.size();
  IterateTable t;
  std::vector<Elem> iterate(n), acc(n);
  for (Elem x = 0; x < n; ++x) iterate[x] = x, acc[x] = x;
  std::size_t d = 0;
  while (true) {
    ++d;
    for (Elem x = 0; x < n; ++x) {
      iterate[x] = a.regop(iterate[x]);
      acc[x] = a.meet(acc[x], iterate[x]);
    }
    if (!t.rows.empty() && t.rows.back() == acc) {
      t.stable_depth = d;
      return t;
    }
    t.rows.push_back(acc);
    // acc is pointwise non-increasing; each coordinate can strictly drop
    // at most n-1 times, so stabilisation needs at most n*n rounds.
    if (d > n * n + 2)
      throw InternalInconsistencyError("killer iteration failed to stabilise");
  }
}

bool row_kills(const HIAlgebra& a, const std::vector<Elem>& row) {
  for (Elem x = 0; x < a.size(); ++x) {
    const Elem want = (x == a.top()) ? a.top() : a.bottom();
    if (row[x] != want) return false;
  }
  return true;
}

}  // namespace

KillerSynthesis synthesize_killer(const HIAlgebra& a) {
  if (a.trivial()) throw TrivialAlgebraError();
  KillerSynthesis s;
  s.depth = max_chain_length(a);
  s.term = killer_term(s.depth);

  // Verify via the term evaluator, the same route any caller would take.
  s.verified = true;
  for (Elem x = 0; x < a.size(); ++x) {
    const Elem got = eval_term(a, s.term, {{"x", x}});
    const Elem want = (x == a.top()) ? a.top() : a.bottom();
    if (got != want) {
      s.verified = false;
      s.failure_witness = x;
      break;
    }
  }

  const IterateTable table = killer_iterates(a);
  for (std::size_t d = 1; d <= table.rows.size(); ++d)
    if (row_kills(a, table.rows[d - 1])) {
      s.minimal_depth = d;
      break;
    }

  const bool pointwise_ok =
      s.minimal_depth.has_value() && *s.minimal_depth <= s.depth;
  if (pointwise_ok != s.verified)
    throw InternalInconsistencyError("killer term disagrees with iterate table");
  return s;
}

KillerSynthesis common_killer(std::span<const HIAlgebra> algebras) {
  if (algebras.empty()) throw InputError("common killer needs at least one algebra");
  std::size_t depth = 0;
  for (const HIAlgebra& a : algebras) {
    if (a.trivial()) throw TrivialAlgebraError();
    depth = std::max(depth, max_chain_length(a));
  }
  KillerSynthesis s;
  s.depth = depth;
  s.term = killer_term(depth);
  s.verified = true;

  std::size_t minimal = 0;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const HIAlgebra& a = algebras[i];
    for (Elem x = 0; x < a.size(); ++x) {
      const Elem got = eval_term(a, s.term, {{"x", x}});
      const Elem want = (x == a.top()) ? a.top() : a.bottom();
      if (got != want) throw NotVerifiedError(i, a.name(), x);
    }
    const IterateTable table = killer_iterates(a);
    for (std::size_t d = 1; d <= table.rows.size(); ++d)
      if (row_kills(a, table.rows[d - 1])) {
        minimal = std::max(minimal, d);
        break;
      }
  }
  s.minimal_depth = minimal;
  return s;
}

KillerCheck verify_killer(const HIAlgebra& a, const Term& k) {
  const std::vector<std::string> vars = k.free_variables();
  if (vars.size() > 1)
    throw InputError("killer candidate must have at most one free variable");
  KillerCheck check;
  check.verified = true;
  for (Elem x = 0; x < a.size(); ++x) {
    Environment env;
    if (!vars.empty()) env[vars[0]] = x;
    const Elem got = eval_term(a, k, env);
    const Elem want = (x == a.top()) ? a.top() : a.bottom();
    if (got != want) {
      check.verified = false;
      check.witness = x;
      return check;
    }
  }
  return check;
}

Term discriminator_from_killer(const Term& killer) {
  const std::vector<std::string> vars = killer.free_variables();
  if (vars.size() > 1)
    throw InputError("killer term must have at most one free variable");
  const Term x = Term::variable("x");
  const Term y = Term::variable("y");
  const Term z = Term::variable("z");
  const Term s = Term::meet(Term::impl(x, y), Term::impl(y, x));
  const Term ks =
      vars.empty() ? killer : substitute(killer, {{vars[0], s}});
  return Term::join(Term::meet(ks, z), Term::meet(Term::inv(ks), x));
}

Term killer_from_discriminator(const Term& t, const std::array<std::string, 3>& vars) {
  const Term plugged = substitute(
      t, {{vars[0], Term::one()}, {vars[1], Term::variable("x")},
          {vars[2], Term::zero()}});
  return Term::inv(plugged);
}

DiscriminatorSynthesis verify_discriminator(const HIAlgebra& a, const Term& t,
                                            const std::array<std::string, 3>& vars) {
  DiscriminatorSynthesis s;
  s.term = t;
  s.verified = true;
  const std::size_t n = a.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem got =
            eval_term(a, t, {{vars[0], x}, {vars[1], y}, {vars[2], z}});
        const Elem want = (x != y) ? x : z;
        if (got != want) {
          s.verified = false;
          s.failure_witness = {x, y, z};
          return s;
        }
      }
  return s;
}

bool is_quasi_primal(const HIAlgebra& a) {
  const KillerSynthesis killer = synthesize_killer(a);  // throws on trivial
  if (!killer.verified) return false;
  const Term t = discriminator_from_killer(killer.term);
  const DiscriminatorSynthesis d = verify_discriminator(a, t);
  if (!d.verified)
    throw InternalInconsistencyError(
        "verified killer produced a failing discriminator");
  return true;
}

}  // namespace hia
