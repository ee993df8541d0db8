#include "hia/filters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace hia {

bool Filter::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool InvolutiveCenter::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Congruence Congruence::from_block_of(const std::vector<Elem>& raw) {
  Congruence c;
  const std::size_t n = raw.size();
  c.block_of.assign(n, kNoElem);
  std::map<Elem, Elem> renumber;
  for (Elem x = 0; x < n; ++x) {
    auto it = renumber.find(raw[x]);
    if (it == renumber.end())
      it = renumber.emplace(raw[x], static_cast<Elem>(renumber.size())).first;
    c.block_of[x] = it->second;
  }
  c.blocks.assign(renumber.size(), {});
  for (Elem x = 0; x < n; ++x) c.blocks[c.block_of[x]].push_back(x);
  return c;
}

bool finer_or_equal(const Congruence& a, const Congruence& b) {
  for (const std::vector<Elem>& block : a.blocks)
    for (std::size_t i = 1; i < block.size(); ++i)
      if (!b.related(block[0], block[i])) return false;
  return true;
}

namespace {

bool filter_less(const Filter& a, const Filter& b) {
  if (a.members.size() != b.members.size())
    return a.members.size() < b.members.size();
  return a.members < b.members;
}

}  // namespace

std::vector<Filter> all_filters(const HIAlgebra& a) {
  // Finite lattice: every filter is the upset of its least element.
  const std::size_t n = a.size();
  std::vector<Filter> out;
  out.reserve(n);
  for (Elem g = 0; g < n; ++g) {
    Filter f;
    for (Elem x = 0; x < n; ++x)
      if (a.leq(g, x)) f.members.push_back(x);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), filter_less);
  return out;
}

bool is_involutive_filter(const HIAlgebra& a, const Filter& f) {
  for (Elem x : f.members)
    if (!f.contains(a.regop(x))) return false;
  return true;
}

std::vector<Filter> involutive_filters(const HIAlgebra& a) {
  std::vector<Filter> out;
  for (Filter& f : all_filters(a))
    if (is_involutive_filter(a, f)) out.push_back(std::move(f));
  return out;
}

Filter generated_involutive_filter(const HIAlgebra& a, const std::vector<Elem>& seed) {
  const std::size_t n = a.size();
  for (Elem s : seed)
    if (s >= n) throw InputError("seed element " + std::to_string(s) + " out of range");
  std::vector<std::uint8_t> in(n, 0);
  in[a.top()] = 1;
  for (Elem s : seed) in[s] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x) {
      if (!in[x]) continue;
      const Elem r = a.regop(x);
      if (!in[r]) { in[r] = 1; changed = true; }
      for (Elem y = 0; y < n; ++y) {
        if (in[y]) {
          const Elem m = a.meet(x, y);
          if (!in[m]) { in[m] = 1; changed = true; }
        }
        if (a.leq(x, y) && !in[y]) { in[y] = 1; changed = true; }
      }
    }
  }
  Filter f;
  for (Elem x = 0; x < n; ++x)
    if (in[x]) f.members.push_back(x);
  return f;
}

namespace {

struct UnionFind {
  std::vector<Elem> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Elem find(Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Elem x, Elem y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);  // keep least element as root
    parent[y] = x;
    return true;
  }
};

Congruence normalize(UnionFind& uf) {
  std::vector<Elem> raw(uf.parent.size());
  for (Elem x = 0; x < raw.size(); ++x) raw[x] = uf.find(x);
  return Congruence::from_block_of(raw);
}

}  // namespace

Congruence principal_congruence(const HIAlgebra& a, Elem x, Elem y) {
  const std::size_t n = a.size();
  if (x >= n || y >= n) throw InputError("principal congruence: element out of range");
  UnionFind uf(n);
  // Every merged pair is pushed through all operations; transitivity
  // chains then give compatibility for the full relation.
  std::queue<std::pair<Elem, Elem>> work;
  work.push({x, y});
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop();
    if (!uf.unite(u, v)) continue;
    work.push({a.neg(u), a.neg(v)});
    work.push({a.inv(u), a.inv(v)});
    for (Elem z = 0; z < n; ++z) {
      work.push({a.meet(u, z), a.meet(v, z)});
      work.push({a.join(u, z), a.join(v, z)});
      work.push({a.impl(u, z), a.impl(v, z)});
      work.push({a.impl(z, u), a.impl(z, v)});
    }
  }
  return normalize(uf);
}

namespace {

Congruence join_congruences(const Congruence& c, const Congruence& d) {
  // Equivalence join: transitive closure of the union.  The result is
  // again operation-compatible, so no operation closure is needed.
  const std::size_t n = c.block_of.size();
  UnionFind uf(n);
  for (const std::vector<Elem>& block : c.blocks)
    for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
  for (const std::vector<Elem>& block : d.blocks)
    for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
  return normalize(uf);
}

bool congruence_order(const Congruence& a, const Congruence& b) {
  if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
  return a.block_of < b.block_of;
}

}  // namespace

std::vector<Congruence> all_congruences(const HIAlgebra& a) {
  const std::size_t n = a.size();
  std::set<std::vector<Elem>> seen;
  std::vector<Congruence> found;

  auto push = [&](Congruence c) -> bool {
    if (!seen.insert(c.block_of).second) return false;
    found.push_back(std::move(c));
    return true;
  };

  UnionFind delta(n);
  push(normalize(delta));
  std::vector<Congruence> principals;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      Congruence c = principal_congruence(a, x, y);
      if (push(c)) principals.push_back(std::move(c));
    }

  // Every congruence is a join of principal ones.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const Congruence& p : principals) {
      Congruence j = join_congruences(found[i], p);
      push(std::move(j));
    }

  std::sort(found.begin(), found.end(), congruence_order);
  return found;
}

Congruence theta_of_filter(const HIAlgebra& a, const Filter& f) {
  if (!is_involutive_filter(a, f)) throw NotInvolutiveError(f.members);
  const std::size_t n = a.size();
  UnionFind uf(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (f.contains(a.meet(a.impl(x, y), a.impl(y, x)))) uf.unite(x, y);
  Congruence c = normalize(uf);

  // The relation must already be transitive and compatible; the union-
  // find above can only have coarsened it if that failed.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const bool rel = f.contains(a.meet(a.impl(x, y), a.impl(y, x)));
      if (rel != c.related(x, y))
        throw InternalInconsistencyError(
            "filter congruence is not transitive at (" + std::to_string(x) + "," +
            std::to_string(y) + ")");
    }
  return c;
}

Filter filter_of_theta(const HIAlgebra& a, const Congruence& c) {
  if (c.block_of.size() != a.size())
    throw InputError("congruence size does not match algebra");
  Filter f;
  const Elem top_block = c.block_of[a.top()];
  for (Elem x = 0; x < a.size(); ++x)
    if (c.block_of[x] == top_block) f.members.push_back(x);
  if (!is_involutive_filter(a, f))
    throw InternalInconsistencyError("block of top is not an involutive filter");
  return f;
}

InvolutiveCenter involutive_center(const HIAlgebra& a) {
  InvolutiveCenter ic;
  for (Elem x = 0; x < a.size(); ++x)
    if (a.neg(x) == a.inv(x)) ic.members.push_back(x);

  // Boolean-subalgebra audit: closure plus complementation.
  for (Elem x : ic.members) {
    if (!ic.contains(a.neg(x)) || !ic.contains(a.inv(x)))
      throw InternalInconsistencyError("center not closed under complement");
    if (a.meet(x, a.neg(x)) != a.bottom() || a.join(x, a.neg(x)) != a.top())
      throw InternalInconsistencyError("center complement law fails at " +
                                       std::to_string(x));
    for (Elem y : ic.members)
      if (!ic.contains(a.meet(x, y)) || !ic.contains(a.join(x, y)))
        throw InternalInconsistencyError("center not closed under meet/join");
  }
  ic.complement_of.reserve(ic.members.size());
  for (Elem x : ic.members) ic.complement_of.push_back(a.neg(x));
  return ic;
}

std::vector<std::vector<Elem>> center_filters(const HIAlgebra& a,
                                              const InvolutiveCenter& ic) {
  // The center is a finite lattice in its own right: filters are upsets
  // of single members, intersected with the center.
  std::vector<std::vector<Elem>> out;
  for (Elem g : ic.members) {
    std::vector<Elem> f;
    for (Elem x : ic.members)
      if (a.leq(g, x)) f.push_back(x);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CenterBijectionReport check_center_filter_bijection(const HIAlgebra& a) {
  CenterBijectionReport rep;
  const InvolutiveCenter ic = involutive_center(a);
  const std::vector<Filter> inv_filters = involutive_filters(a);
  const std::vector<std::vector<Elem>> ic_filters = center_filters(a, ic);
  rep.involutive_filter_count = inv_filters.size();
  rep.center_filter_count = ic_filters.size();

  std::set<std::vector<Elem>> ic_filter_set(ic_filters.begin(), ic_filters.end());
  std::set<std::vector<Elem>> images;
  rep.intersection_maps_into_center_filters = true;
  rep.injective = true;
  rep.generation_inverts = true;

  for (const Filter& f : inv_filters) {
    std::vector<Elem> image;
    for (Elem x : f.members)
      if (ic.contains(x)) image.push_back(x);
    if (!ic_filter_set.count(image)) rep.intersection_maps_into_center_filters = false;
    if (!images.insert(image).second) rep.injective = false;
    Filter regenerated = generated_involutive_filter(a, image);
    if (regenerated.members != f.members) rep.generation_inverts = false;
  }
  rep.surjective = true;
  for (const std::vector<Elem>& g : ic_filters)
    if (!images.count(g)) rep.surjective = false;

  rep.holds = rep.intersection_maps_into_center_filters && rep.injective &&
              rep.surjective && rep.generation_inverts &&
              rep.involutive_filter_count == rep.center_filter_count;
  return rep;
}

SiVerdict is_subdirectly_irreducible(const HIAlgebra& a) {
  if (a.trivial()) throw TrivialAlgebraError();
  SiVerdict v;

  const std::vector<Congruence> congs = all_congruences(a);
  std::vector<const Congruence*> nontrivial;
  for (const Congruence& c : congs)
    if (c.block_count() < a.size()) nontrivial.push_back(&c);
  // A smallest nontrivial congruence, if any, is unique; scan for an
  // element below all others.
  for (const Congruence* c : nontrivial) {
    bool least = true;
    for (const Congruence* d : nontrivial)
      if (!finer_or_equal(*c, *d)) { least = false; break; }
    if (least) { v.congruence_criterion = true; break; }
  }

  const InvolutiveCenter ic = involutive_center(a);
  v.center_criterion =
      ic.members.size() == 2 && ic.members[0] == 0 && ic.members[1] == a.top();

  if (v.congruence_criterion != v.center_criterion)
    throw InternalInconsistencyError(
        "subdirect irreducibility criteria disagree on " +
        (a.name().empty() ? "<unnamed>" : a.name()));
  v.si = v.congruence_criterion;
  return v;
}

}  // namespace hia
