#include "hia/hom.hpp"

#include <algorithm>
#include <functional>

namespace hia {

bool is_homomorphism(const AlgebraOps& src, const AlgebraOps& dst, const HomMap& map) {
  if (map.size() != src.size()) return false;
  for (Elem t : map)
    if (t >= dst.size()) return false;
  if (map[src.bottom()] != dst.bottom() || map[src.top()] != dst.top()) return false;
  for (Elem x = 0; x < src.size(); ++x) {
    if (map[src.neg(x)] != dst.neg(map[x])) return false;
    if (map[src.inv(x)] != dst.inv(map[x])) return false;
    for (Elem y = 0; y < src.size(); ++y) {
      if (map[src.meet(x, y)] != dst.meet(map[x], map[y])) return false;
      if (map[src.join(x, y)] != dst.join(map[x], map[y])) return false;
      if (map[src.impl(x, y)] != dst.impl(map[x], map[y])) return false;
    }
  }
  return true;
}

namespace {

// Partial map with worklist propagation.  Defining any element forces
// the images of everything it generates together with the already
// defined part; conflicts prune the search immediately.
struct SearchState {
  const HIAlgebra* src;
  const HIAlgebra* dst;
  bool injective = false;

  HomMap map;                      // kNoElem = undefined
  std::vector<std::uint8_t> used;  // injective mode only
  std::vector<Elem> defined;
  std::vector<Elem> work;

  SearchState(const HIAlgebra& s, const HIAlgebra& d, bool inj)
      : src(&s), dst(&d), injective(inj), map(s.size(), kNoElem),
        used(inj ? d.size() : 0, 0) {}

  bool define(Elem s, Elem t) {
    if (map[s] != kNoElem) return map[s] == t;
    if (injective && used[t]) return false;
    map[s] = t;
    if (injective) used[t] = 1;
    defined.push_back(s);
    work.push_back(s);
    return true;
  }

  bool propagate() {
    while (!work.empty()) {
      const Elem x = work.back();
      work.pop_back();
      const Elem mx = map[x];
      if (!define(src->neg(x), dst->neg(mx))) return false;
      if (!define(src->inv(x), dst->inv(mx))) return false;
      // defined grows while we scan it; index loop picks up additions.
      for (std::size_t i = 0; i < defined.size(); ++i) {
        const Elem y = defined[i];
        const Elem my = map[y];
        if (!define(src->meet(x, y), dst->meet(mx, my))) return false;
        if (!define(src->join(x, y), dst->join(mx, my))) return false;
        if (!define(src->impl(x, y), dst->impl(mx, my))) return false;
        if (!define(src->impl(y, x), dst->impl(my, mx))) return false;
      }
    }
    return true;
  }

  bool fully_defined() const {
    return defined.size() == map.size();
  }

  std::vector<Elem> undefined_elements() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < map.size(); ++x)
      if (map[x] == kNoElem) out.push_back(x);
    return out;
  }
};

// Branch on the least undefined element, images in ascending order, so
// results stream out in a deterministic order.  Returns true to stop.
bool search(const SearchState& state,
            const std::function<bool(const HomMap&)>& emit) {
  if (state.fully_defined()) return emit(state.map);
  Elem g = kNoElem;
  for (Elem x = 0; x < state.map.size(); ++x)
    if (state.map[x] == kNoElem) {
      g = x;
      break;
    }
  for (Elem t = 0; t < state.dst->size(); ++t) {
    SearchState branch = state;
    if (!branch.define(g, t)) continue;
    if (!branch.propagate()) continue;
    if (search(branch, emit)) return true;
  }
  return false;
}

std::optional<SearchState> seeded_state(const HIAlgebra& src, const HIAlgebra& dst,
                                        bool injective) {
  SearchState state(src, dst, injective);
  if (!state.define(src.bottom(), dst.bottom())) return std::nullopt;
  if (!state.define(src.top(), dst.top())) return std::nullopt;
  if (!state.propagate()) return std::nullopt;
  return state;
}

}  // namespace

std::vector<HomMap> find_homomorphisms(const HIAlgebra& src, const HIAlgebra& dst) {
  std::vector<HomMap> out;
  std::optional<SearchState> state = seeded_state(src, dst, false);
  if (state)
    search(*state, [&](const HomMap& m) {
      out.push_back(m);
      return false;
    });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<HomMap> find_embedding(const HIAlgebra& src, const HIAlgebra& dst) {
  if (src.size() > dst.size()) return std::nullopt;
  std::optional<HomMap> result;
  std::optional<SearchState> state = seeded_state(src, dst, true);
  if (state)
    search(*state, [&](const HomMap& m) {
      result = m;
      return true;
    });
  return result;
}

std::optional<HomMap> find_isomorphism(const HIAlgebra& a, const HIAlgebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  return find_embedding(a, b);
}

std::optional<HomMap> extend_homomorphism(const HIAlgebra& big,
                                          const std::vector<Elem>& sub_members,
                                          const std::vector<Elem>& values,
                                          const HIAlgebra& target) {
  if (sub_members.size() != values.size())
    throw InputError("extend: member and value lists differ in length");
  SearchState state(big, target, false);
  bool ok = state.define(big.bottom(), target.bottom()) &&
            state.define(big.top(), target.top());
  for (std::size_t i = 0; ok && i < sub_members.size(); ++i) {
    if (sub_members[i] >= big.size() || values[i] >= target.size())
      throw InputError("extend: element out of range");
    ok = state.define(sub_members[i], values[i]);
  }
  if (!ok || !state.propagate())
    throw InputError("extend: the given map is not a homomorphism on its domain");

  std::optional<HomMap> result;
  search(state, [&](const HomMap& m) {
    result = m;
    return true;
  });
  return result;
}

InjectivityVerdict bounded_injectivity_check(const HIAlgebra& generator,
                                             const Subalgebra& candidate,
                                             std::size_t exponent_bound,
                                             std::size_t subalgebra_bound) {
  if (!is_subdirectly_irreducible(generator).si)
    throw NotSubdirectlyIrreducibleError(generator.name());

  InjectivityVerdict verdict;
  verdict.exponent_bound = exponent_bound;
  verdict.subalgebra_bound = subalgebra_bound;
  verdict.candidate_diagonal = candidate.diagonal();
  verdict.candidate_complete = true;  // finite lattices are complete
  verdict.characterization_predicts_injective =
      verdict.candidate_diagonal && verdict.candidate_complete;

  const Subalgebra::Realized c_real = candidate.realize();

  for (std::size_t n = 1; n <= exponent_bound; ++n) {
    auto power = std::make_shared<PowerAlgebra>(direct_power(generator, n));
    const std::vector<Subalgebra> ds = enumerate_subalgebras(power, subalgebra_bound);
    for (const Subalgebra& d_sub : ds) {
      ++verdict.subalgebras_checked;
      const Subalgebra::Realized d_real = d_sub.realize();
      auto d_shared = std::make_shared<HIAlgebra>(d_real.algebra);
      const std::vector<Subalgebra> bs =
          enumerate_subalgebras(d_shared, d_real.algebra.size());
      for (const Subalgebra& b_sub : bs) {
        const Subalgebra::Realized b_real = b_sub.realize();
        const std::vector<HomMap> homs =
            find_homomorphisms(b_real.algebra, c_real.algebra);
        for (const HomMap& h : homs) {
          ++verdict.homomorphisms_checked;
          const std::optional<HomMap> ext =
              extend_homomorphism(d_real.algebra, b_sub.members(), h,
                                  c_real.algebra);
          if (ext) continue;
          verdict.counterexample_found = true;
          InjectivityCounterexample ce;
          ce.exponent = n;
          ce.d_members = d_sub.members();
          ce.b_members.reserve(b_sub.members().size());
          ce.b_images.reserve(h.size());
          for (Elem local_in_d : b_sub.members())
            ce.b_members.push_back(d_real.labels[local_in_d]);
          for (Elem image : h) ce.b_images.push_back(c_real.labels[image]);
          verdict.counterexample = std::move(ce);
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace hia
