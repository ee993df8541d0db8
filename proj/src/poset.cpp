#include "hia/poset.hpp"

#include <algorithm>

namespace hia {

FinitePoset::FinitePoset(std::size_t size, std::vector<std::uint8_t> relation)
    : n(size), leq(std::move(relation)) {
  if (leq.size() != n * n)
    throw InvalidAlgebraError("order relation has " + std::to_string(leq.size()) +
                              " entries, expected " + std::to_string(n * n));
}

void check_partial_order(const FinitePoset& p) {
  const std::size_t n = p.n;
  for (Elem a = 0; a < n; ++a)
    if (!p.le(a, a)) throw PosetError("reflexivity", {a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && p.le(a, b) && p.le(b, a)) throw PosetError("antisymmetry", {a, b});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!p.le(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (p.le(b, c) && !p.le(a, c)) throw PosetError("transitivity", {a, b, c});
    }
}

void check_bounds(const FinitePoset& p) {
  if (p.n == 0) throw PosetError("nonempty", {});
  const Elem top = static_cast<Elem>(p.n - 1);
  for (Elem a = 0; a < p.n; ++a) {
    if (!p.le(0, a)) throw PosetError("bottom at index 0", {a});
    if (!p.le(a, top)) throw PosetError("top at index n-1", {a});
  }
}

LatticeTables derive_lattice_ops(const FinitePoset& p) {
  const std::size_t n = p.n;
  LatticeTables t;
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem glb = kNoElem;
      for (Elem x = 0; x < n; ++x) {
        if (!p.le(x, a) || !p.le(x, b)) continue;
        if (glb == kNoElem || p.le(glb, x)) glb = x;
      }
      // glb found greedily must dominate every common lower bound.
      if (glb != kNoElem)
        for (Elem x = 0; x < n; ++x)
          if (p.le(x, a) && p.le(x, b) && !p.le(x, glb)) {
            glb = kNoElem;
            break;
          }
      if (glb == kNoElem) throw NotLatticeError(true, a, b);
      t.meet[a * n + b] = glb;

      Elem lub = kNoElem;
      for (Elem x = 0; x < n; ++x) {
        if (!p.le(a, x) || !p.le(b, x)) continue;
        if (lub == kNoElem || p.le(x, lub)) lub = x;
      }
      if (lub != kNoElem)
        for (Elem x = 0; x < n; ++x)
          if (p.le(a, x) && p.le(b, x) && !p.le(lub, x)) {
            lub = kNoElem;
            break;
          }
      if (lub == kNoElem) throw NotLatticeError(false, a, b);
      t.join[a * n + b] = lub;
    }
  return t;
}

std::vector<Elem> derive_impl(const FinitePoset& p, const std::vector<Elem>& meet) {
  const std::size_t n = p.n;
  std::vector<Elem> impl(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem best = kNoElem;
      for (Elem x = 0; x < n; ++x) {
        if (!p.le(meet[a * n + x], b)) continue;
        if (best == kNoElem || p.le(best, x)) best = x;
      }
      if (best == kNoElem) throw NotHeytingError(a, b);
      // best must dominate the whole candidate set, not just a chain in it.
      for (Elem x = 0; x < n; ++x)
        if (p.le(meet[a * n + x], b) && !p.le(x, best)) {
          throw NotHeytingError(a, b);
        }
      impl[a * n + b] = best;
    }
  return impl;
}

std::vector<std::uint8_t> cover_relation(const FinitePoset& p) {
  const std::size_t n = p.n;
  std::vector<std::uint8_t> cov(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !p.le(a, b)) continue;
      bool direct = true;
      for (Elem c = 0; c < n && direct; ++c)
        if (c != a && c != b && p.le(a, c) && p.le(c, b)) direct = false;
      cov[a * n + b] = direct ? 1 : 0;
    }
  return cov;
}

std::size_t max_chain_length(const FinitePoset& p) {
  const std::size_t n = p.n;
  // Elements sorted by downset size give a linear extension.
  std::vector<Elem> order(n);
  std::vector<std::size_t> down(n, 0);
  for (Elem a = 0; a < n; ++a) {
    order[a] = a;
    for (Elem x = 0; x < n; ++x)
      if (p.le(x, a)) ++down[a];
  }
  std::sort(order.begin(), order.end(),
            [&](Elem a, Elem b) { return down[a] < down[b]; });
  std::vector<std::size_t> best(n, 1);
  std::size_t result = n == 0 ? 0 : 1;
  for (Elem b : order) {
    for (Elem a = 0; a < n; ++a)
      if (a != b && p.le(a, b)) best[b] = std::max(best[b], best[a] + 1);
    result = std::max(result, best[b]);
  }
  return result;
}

namespace {

// Downsets as bitmasks via recursion on elements in a linear extension:
// each element may join only if all its predecessors are in.
void downsets_rec(const FinitePoset& p, const std::vector<Elem>& order,
                  std::size_t i, std::uint32_t mask, std::vector<std::uint32_t>* out,
                  std::size_t cap, std::size_t* count) {
  if (*count >= cap && out == nullptr) return;
  if (i == order.size()) {
    ++*count;
    if (out) out->push_back(mask);
    return;
  }
  const Elem e = order[i];
  downsets_rec(p, order, i + 1, mask, out, cap, count);
  bool ok = true;
  for (Elem x = 0; x < p.n && ok; ++x)
    if (x != e && p.le(x, e) && !(mask >> x & 1)) ok = false;
  if (ok) downsets_rec(p, order, i + 1, mask | (1u << e), out, cap, count);
}

std::vector<Elem> linear_extension(const FinitePoset& p) {
  std::vector<Elem> order(p.n);
  std::vector<std::size_t> down(p.n, 0);
  for (Elem a = 0; a < p.n; ++a) {
    order[a] = a;
    for (Elem x = 0; x < p.n; ++x)
      if (p.le(x, a)) ++down[a];
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return down[a] < down[b]; });
  return order;
}

}  // namespace

std::size_t downset_count(const FinitePoset& p, std::size_t cap) {
  std::size_t count = 0;
  downsets_rec(p, linear_extension(p), 0, 0, nullptr, cap, &count);
  return count;
}

std::vector<std::uint32_t> all_downsets(const FinitePoset& p) {
  if (p.n > 20) throw SizeBoundError(p.n, 20);
  std::vector<std::uint32_t> out;
  std::size_t count = 0;
  downsets_rec(p, linear_extension(p), 0, 0, &out, static_cast<std::size_t>(-1),
               &count);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hia
