#include "hia/algebra.hpp"

#include <algorithm>

namespace hia {

void ValidationReport::add(std::string law, std::vector<Elem> witness) {
  ok = false;
  violations.push_back({std::move(law), std::move(witness)});
}

HIAlgebra HIAlgebra::from_order(FinitePoset order, std::vector<Elem> involution,
                                std::string name) {
  check_partial_order(order);
  check_bounds(order);
  if (involution.size() != order.n)
    throw InvalidAlgebraError("involution has " + std::to_string(involution.size()) +
                              " entries, expected " + std::to_string(order.n));
  for (Elem v : involution)
    if (v >= order.n)
      throw InvalidAlgebraError("involution value " + std::to_string(v) +
                                " out of range");

  LatticeTables lat = derive_lattice_ops(order);
  std::vector<Elem> impl = derive_impl(order, lat.meet);

  ValidationReport inv_report = validate_involution(involution, lat.join, lat.meet);
  if (!inv_report.ok) {
    const Violation& v = inv_report.violations.front();
    std::string w;
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      w += (i ? "," : "") + std::to_string(v.witness[i]);
    throw InvalidAlgebraError("involution violates " + v.law + " at (" + w + ")" +
                              (inv_report.violations.size() > 1
                                   ? " and " +
                                         std::to_string(inv_report.violations.size() - 1) +
                                         " more"
                                   : ""));
  }

  HIAlgebra a;
  a.poset_ = std::move(order);
  a.meet_ = std::move(lat.meet);
  a.join_ = std::move(lat.join);
  a.impl_ = std::move(impl);
  a.inv_ = std::move(involution);
  a.name_ = std::move(name);
  a.neg_.resize(a.poset_.n);
  for (Elem x = 0; x < a.poset_.n; ++x) a.neg_[x] = a.impl_[x * a.poset_.n + 0];
  return a;
}

std::vector<Elem> HIAlgebra::diagonal_elements() const {
  std::vector<Elem> out(size());
  for (Elem a = 0; a < size(); ++a) out[a] = a;
  return out;
}

HIAlgebra HIAlgebra::with_name(std::string name) const {
  HIAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool HIAlgebra::same_tables(const HIAlgebra& other) const {
  return poset_.n == other.poset_.n && poset_.leq == other.poset_.leq &&
         inv_ == other.inv_;
}

ValidationReport validate_involution(const std::vector<Elem>& inv,
                                     const std::vector<Elem>& join,
                                     const std::vector<Elem>& meet) {
  const std::size_t n = inv.size();
  ValidationReport r;
  if (join.size() != n * n || meet.size() != n * n)
    throw InvalidAlgebraError("operation tables do not match involution size");

  std::vector<std::uint8_t> hit(n, 0);
  for (Elem a = 0; a < n; ++a) {
    if (inv[a] >= n) {
      r.add("bijection", {a});
      return r;  // later checks would index out of range
    }
    if (hit[inv[a]]) r.add("bijection", {a});
    hit[inv[a]] = 1;
  }
  for (Elem a = 0; a < n; ++a)
    if (inv[inv[a]] != a) r.add("i2", {a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (inv[join[a * n + b]] != meet[inv[a] * n + inv[b]]) r.add("i1", {a, b});
  return r;
}

namespace {

void check_derived(const AlgebraOps& a, const std::vector<Elem>& inv,
                   ValidationReport& r, bool include_axioms) {
  const std::size_t n = a.size();
  const Elem top = a.top();
  auto ni = [&](Elem x) { return a.neg(inv[x]); };

  if (include_axioms) {
    for (Elem x = 0; x < n; ++x)
      if (inv[inv[x]] != x) r.add("i2", {x});
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (inv[a.join(x, y)] != a.meet(inv[x], inv[y])) r.add("i1", {x, y});
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (inv[a.meet(x, y)] != a.join(inv[x], inv[y])) r.add("i3", {x, y});

  if (inv[0] != top) r.add("i4", {0});
  if (inv[top] != 0) r.add("i4", {top});

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.leq(x, y) && !a.leq(inv[y], inv[x])) r.add("i5", {x, y});

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (ni(a.meet(x, y)) != a.meet(ni(x), ni(y)))
        r.add("i6 (reconstructed)", {x, y});

  if (ni(top) != top) r.add("i7 (reconstructed)", {top});
  if (ni(0) != 0) r.add("i7 (reconstructed)", {0});

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.leq(x, y) && !a.leq(ni(x), ni(y))) r.add("i8 (reconstructed)", {x, y});

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!a.leq(a.meet(ni(a.impl(x, y)), inv[y]), inv[x])) r.add("i9", {x, y});
}

}  // namespace

ValidationReport check_derived_identities(const HIAlgebra& a) {
  ValidationReport r;
  check_derived(a, a.inv_table(), r, false);
  return r;
}

ValidationReport check_derived_identities(const HIAlgebra& a,
                                          const std::vector<Elem>& inv_candidate) {
  if (inv_candidate.size() != a.size())
    throw InvalidAlgebraError("candidate involution size mismatch");
  for (Elem v : inv_candidate)
    if (v >= a.size()) throw InvalidAlgebraError("candidate involution out of range");
  ValidationReport r;
  check_derived(a, inv_candidate, r, true);
  return r;
}

ValidationReport audit_algebra(const AlgebraOps& a) {
  const std::size_t n = a.size();
  ValidationReport r;

  for (Elem x = 0; x < n; ++x) {
    if (!a.leq(0, x)) r.add("bottom", {x});
    if (!a.leq(x, a.top())) r.add("top", {x});
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem m = a.meet(x, y);
      if (!a.leq(m, x) || !a.leq(m, y)) r.add("meet is lower bound", {x, y});
      const Elem j = a.join(x, y);
      if (!a.leq(x, j) || !a.leq(y, j)) r.add("join is upper bound", {x, y});
      for (Elem z = 0; z < n; ++z) {
        if (a.leq(z, x) && a.leq(z, y) && !a.leq(z, m)) r.add("meet greatest", {x, y, z});
        if (a.leq(x, z) && a.leq(y, z) && !a.leq(j, z)) r.add("join least", {x, y, z});
      }
    }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)))
          r.add("distributivity", {x, y, z});

  // Residuation: x & z <= y iff z <= impl(x, y).
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (a.leq(a.meet(x, z), y) != a.leq(z, a.impl(x, y)))
          r.add("residuation", {x, y, z});

  for (Elem x = 0; x < n; ++x)
    if (a.neg(x) != a.impl(x, 0)) r.add("negation", {x});

  std::vector<Elem> inv(n), join(n * n), meet(n * n);
  for (Elem x = 0; x < n; ++x) {
    inv[x] = a.inv(x);
    for (Elem y = 0; y < n; ++y) {
      join[x * n + y] = a.join(x, y);
      meet[x * n + y] = a.meet(x, y);
    }
  }
  ValidationReport inv_r = validate_involution(inv, join, meet);
  for (Violation& v : inv_r.violations) r.add(std::move(v.law), std::move(v.witness));
  return r;
}

std::size_t max_chain_length(const HIAlgebra& a) { return max_chain_length(a.poset()); }

}  // namespace hia
