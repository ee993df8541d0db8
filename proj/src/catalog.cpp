#include "hia/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hia/filters.hpp"

namespace hia {

namespace {

// Iso-invariant colouring, refined until stable.  Elements sharing a
// colour are the only candidates for swapping under isomorphism, which
// keeps the permutation search tiny.
std::vector<Elem> refine_colors(const FinitePoset& p, const std::vector<Elem>* inv,
                                bool fix_ends) {
  const std::size_t n = p.n;
  std::vector<std::vector<std::uint32_t>> sig(n);
  for (Elem x = 0; x < n; ++x) {
    std::uint32_t down = 0, up = 0;
    for (Elem y = 0; y < n; ++y) {
      if (p.le(y, x)) ++down;
      if (p.le(x, y)) ++up;
    }
    sig[x] = {down, up};
    if (fix_ends) sig[x].push_back(x == 0 ? 1u : (x + 1 == n ? 2u : 0u));
    if (inv) sig[x].push_back((*inv)[x] == x ? 1u : 0u);
  }

  auto rank = [&]() {
    std::vector<std::vector<std::uint32_t>> uniq(sig.begin(), sig.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<Elem> colors(n);
    for (Elem x = 0; x < n; ++x)
      colors[x] = static_cast<Elem>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[x]) - uniq.begin());
    return colors;
  };

  std::vector<Elem> colors = rank();
  while (true) {
    for (Elem x = 0; x < n; ++x) {
      std::vector<std::uint32_t> s{colors[x]};
      std::vector<std::uint32_t> below, above;
      for (Elem y = 0; y < n; ++y) {
        if (y == x) continue;
        if (p.le(y, x)) below.push_back(colors[y]);
        if (p.le(x, y)) above.push_back(colors[y]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      s.insert(s.end(), below.begin(), below.end());
      s.push_back(0xffffffffu);
      s.insert(s.end(), above.begin(), above.end());
      if (inv) s.push_back(colors[(*inv)[x]]);
      sig[x] = std::move(s);
    }
    std::vector<Elem> next = rank();
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

// Minimum flattened matrix over all colour-respecting relabelings.
// arrangement[i] = original element placed at position i.
std::vector<std::uint8_t> minimise_key(const FinitePoset& p,
                                       const std::vector<Elem>* inv,
                                       const std::vector<Elem>& colors) {
  const std::size_t n = p.n;
  std::vector<std::vector<Elem>> blocks;
  {
    std::map<Elem, std::vector<Elem>> by_color;
    for (Elem x = 0; x < n; ++x) by_color[colors[x]].push_back(x);
    for (auto& [c, members] : by_color) blocks.push_back(members);
  }

  std::vector<Elem> arrangement;
  std::vector<Elem> pos_of(n);
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> key;
  key.reserve(n * n + (inv ? n : 0));

  auto consider = [&]() {
    for (Elem x = 0; x < n; ++x) pos_of[arrangement[x]] = x;
    key.clear();
    for (Elem r = 0; r < n; ++r)
      for (Elem c = 0; c < n; ++c)
        key.push_back(p.le(arrangement[r], arrangement[c]) ? 1 : 0);
    if (inv)
      for (Elem r = 0; r < n; ++r)
        key.push_back(static_cast<std::uint8_t>(pos_of[(*inv)[arrangement[r]]]));
    if (best.empty() || key < best) best = key;
  };

  // Odometer over per-block permutations.
  std::function<void(std::size_t)> walk = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      consider();
      return;
    }
    std::vector<Elem> block = blocks[bi];
    std::sort(block.begin(), block.end());
    do {
      const std::size_t before = arrangement.size();
      arrangement.insert(arrangement.end(), block.begin(), block.end());
      walk(bi + 1);
      arrangement.resize(before);
    } while (std::next_permutation(block.begin(), block.end()));
  };
  walk(0);
  return best;
}

}  // namespace

std::vector<std::uint8_t> canonical_key(const FinitePoset& p) {
  return minimise_key(p, nullptr, refine_colors(p, nullptr, false));
}

std::vector<std::uint8_t> canonical_key_bounded(const FinitePoset& p) {
  return minimise_key(p, nullptr, refine_colors(p, nullptr, true));
}

std::vector<std::uint8_t> canonical_key(const HIAlgebra& a) {
  const std::vector<Elem> inv = a.inv_table();
  return minimise_key(a.poset(), &inv, refine_colors(a.poset(), &inv, true));
}

std::vector<std::vector<Elem>> order_automorphisms(const FinitePoset& p) {
  const std::size_t n = p.n;
  const std::vector<Elem> colors = refine_colors(p, nullptr, false);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> perm(n, kNoElem);
  std::vector<std::uint8_t> used(n, 0);

  std::function<void(Elem)> place = [&](Elem x) {
    if (x == n) {
      out.push_back(perm);
      return;
    }
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || colors[y] != colors[x]) continue;
      bool ok = true;
      for (Elem z = 0; z < x && ok; ++z) {
        if (p.le(z, x) != p.le(perm[z], y)) ok = false;
        if (p.le(x, z) != p.le(y, perm[z])) ok = false;
      }
      if (!ok) continue;
      perm[x] = y;
      used[y] = 1;
      place(x + 1);
      used[y] = 0;
      perm[x] = kNoElem;
    }
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FinitePoset> enumerate_distributive_lattices(std::size_t max_size,
                                                         std::size_t size_cap) {
  if (max_size > size_cap) throw SizeBoundError(max_size, size_cap);
  if (max_size == 0) return {};

  // Posets of join-irreducibles, grown by one maximal element at a time;
  // pruned when the downset count already exceeds max_size (adding
  // elements never shrinks it).
  std::vector<FinitePoset> frontier{FinitePoset(0, {})};
  std::vector<FinitePoset> kept{FinitePoset(0, {})};

  while (!frontier.empty()) {
    std::vector<FinitePoset> next;
    std::set<std::vector<std::uint8_t>> seen;
    for (const FinitePoset& p : frontier) {
      const std::size_t k = p.n;
      for (std::uint32_t downset : all_downsets(p)) {
        FinitePoset q(k + 1, std::vector<std::uint8_t>((k + 1) * (k + 1), 0));
        for (Elem x = 0; x < k; ++x)
          for (Elem y = 0; y < k; ++y) q.leq[x * (k + 1) + y] = p.leq[x * k + y];
        q.leq[k * (k + 1) + k] = 1;
        for (Elem x = 0; x < k; ++x)
          if (downset >> x & 1) q.leq[x * (k + 1) + k] = 1;
        if (downset_count(q, max_size + 1) > max_size) continue;
        if (seen.insert(canonical_key(q)).second) next.push_back(q);
      }
    }
    for (const FinitePoset& q : next) kept.push_back(q);
    frontier = std::move(next);
  }

  std::vector<FinitePoset> lattices;
  std::set<std::vector<std::uint8_t>> lattice_keys;
  for (const FinitePoset& p : kept) {
    std::vector<std::uint32_t> downsets = all_downsets(p);
    std::sort(downsets.begin(), downsets.end(), [](std::uint32_t a, std::uint32_t b) {
      const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
      if (pa != pb) return pa < pb;
      return a < b;
    });
    const std::size_t n = downsets.size();
    if (n > max_size) continue;
    FinitePoset lat(n, std::vector<std::uint8_t>(n * n, 0));
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j)
        lat.leq[i * n + j] = (downsets[i] & ~downsets[j]) == 0 ? 1 : 0;
    if (!lattice_keys.insert(canonical_key_bounded(lat)).second)
      throw InternalInconsistencyError(
          "distinct irreducible posets produced isomorphic lattices");
    lattices.push_back(std::move(lat));
  }

  std::sort(lattices.begin(), lattices.end(),
            [](const FinitePoset& a, const FinitePoset& b) {
              if (a.n != b.n) return a.n < b.n;
              return canonical_key_bounded(a) < canonical_key_bounded(b);
            });
  return lattices;
}

InvolutionLists enumerate_involutions(const FinitePoset& lattice) {
  const std::size_t n = lattice.n;
  check_partial_order(lattice);
  check_bounds(lattice);
  const LatticeTables tables = derive_lattice_ops(lattice);
  auto join = [&](Elem a, Elem b) { return tables.join[a * n + b]; };
  auto meet = [&](Elem a, Elem b) { return tables.meet[a * n + b]; };

  InvolutionLists lists;
  std::vector<Elem> sigma(n, kNoElem);

  auto order_consistent = [&](Elem a, Elem b) {
    // sigma(a) = b: against every already paired (x, sigma(x)),
    // order-reversal must hold both ways.
    for (Elem x = 0; x < n; ++x) {
      if (sigma[x] == kNoElem) continue;
      if (lattice.le(x, a) && !lattice.le(b, sigma[x])) return false;
      if (lattice.le(a, x) && !lattice.le(sigma[x], b)) return false;
    }
    return true;
  };

  std::function<void()> extend = [&]() {
    Elem a = kNoElem;
    for (Elem x = 0; x < n; ++x)
      if (sigma[x] == kNoElem) {
        a = x;
        break;
      }
    if (a == kNoElem) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (sigma[join(x, y)] != meet(sigma[x], sigma[y])) return;
      lists.all.push_back(sigma);
      return;
    }
    for (Elem b = 0; b < n; ++b) {
      if (sigma[b] != kNoElem) continue;  // b is already paired elsewhere
      if (!order_consistent(a, b)) continue;
      sigma[a] = b;
      sigma[b] = a;
      extend();
      sigma[a] = kNoElem;
      if (b != a) sigma[b] = kNoElem;
    }
  };

  if (n > 0) extend();
  std::sort(lists.all.begin(), lists.all.end());

  const std::vector<std::vector<Elem>> auts = order_automorphisms(lattice);
  std::set<std::vector<Elem>> reps;
  for (const std::vector<Elem>& s : lists.all) {
    std::vector<Elem> least = s;
    for (const std::vector<Elem>& pi : auts) {
      std::vector<Elem> inverse(n);
      for (Elem x = 0; x < n; ++x) inverse[pi[x]] = x;
      std::vector<Elem> conj(n);
      for (Elem x = 0; x < n; ++x) conj[x] = pi[s[inverse[x]]];
      if (conj < least) least = std::move(conj);
    }
    reps.insert(least);
  }
  lists.up_to_automorphism.assign(reps.begin(), reps.end());
  return lists;
}

std::vector<CatalogEntry> build_catalog(const CatalogConfig& cfg) {
  std::vector<CatalogEntry> entries;
  std::set<std::vector<std::uint8_t>> seen;

  for (const FinitePoset& lattice : enumerate_distributive_lattices(
           cfg.max_size, cfg.enumeration_cap)) {
    const InvolutionLists invs = enumerate_involutions(lattice);
    for (const std::vector<Elem>& sigma : invs.up_to_automorphism) {
      CatalogEntry e{HIAlgebra::from_order(lattice, sigma)};
      e.size = e.algebra.size();
      e.key = canonical_key(e.algebra);
      if (!seen.insert(e.key).second)
        throw InternalInconsistencyError(
            "involutions inequivalent under automorphism produced isomorphic "
            "algebras");

      e.center_size = involutive_center(e.algebra).members.size();
      e.congruence_count = all_congruences(e.algebra).size();
      e.involutive_filter_count = involutive_filters(e.algebra).size();
      if (e.congruence_count != e.involutive_filter_count)
        throw InternalInconsistencyError(
            "congruence count differs from involutive filter count on a catalog "
            "entry");
      e.si = e.size > 1 && is_subdirectly_irreducible(e.algebra).si;
      if (!cfg.si_only || e.si) entries.push_back(std::move(e));
    }
  }

  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              if (a.size != b.size) return a.size < b.size;
              return a.key < b.key;
            });
  std::size_t ordinal = 0;
  std::size_t current_size = 0;
  for (CatalogEntry& e : entries) {
    if (e.size != current_size) {
      current_size = e.size;
      ordinal = 0;
    }
    ++ordinal;
    e.algebra = e.algebra.with_name("a" + std::to_string(e.size) + "_" +
                                    std::to_string(ordinal));
  }
  return entries;
}

}  // namespace hia
