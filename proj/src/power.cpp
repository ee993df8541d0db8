#include "hia/power.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hia {

PowerAlgebra::PowerAlgebra(HIAlgebra base, std::size_t exponent,
                           std::size_t carrier_bound)
    : base_(std::move(base)), exponent_(exponent) {
  if (exponent_ == 0) throw InputError("power exponent must be positive");
  const std::size_t s = base_.size();
  std::size_t carrier = 1;
  for (std::size_t i = 0; i < exponent_; ++i) {
    if (carrier > carrier_bound / s)
      throw SizeBoundError(carrier_bound + 1, carrier_bound);
    carrier *= s;
  }
  if (carrier > carrier_bound) throw SizeBoundError(carrier, carrier_bound);
  carrier_ = carrier;
  place_.resize(exponent_);
  Elem p = 1;
  for (std::size_t i = exponent_; i-- > 0;) {
    place_[i] = p;
    p = static_cast<Elem>(p * s);
  }
  provenance_ = "direct power " +
                (base_.name().empty() ? std::string("base") : base_.name()) + "^" +
                std::to_string(exponent_);
}

Elem PowerAlgebra::meet(Elem a, Elem b) const {
  const Elem s = static_cast<Elem>(base_.size());
  Elem out = 0;
  for (std::size_t i = 0; i < exponent_; ++i)
    out += base_.meet(a / place_[i] % s, b / place_[i] % s) * place_[i];
  return out;
}

Elem PowerAlgebra::join(Elem a, Elem b) const {
  const Elem s = static_cast<Elem>(base_.size());
  Elem out = 0;
  for (std::size_t i = 0; i < exponent_; ++i)
    out += base_.join(a / place_[i] % s, b / place_[i] % s) * place_[i];
  return out;
}

Elem PowerAlgebra::impl(Elem a, Elem b) const {
  const Elem s = static_cast<Elem>(base_.size());
  Elem out = 0;
  for (std::size_t i = 0; i < exponent_; ++i)
    out += base_.impl(a / place_[i] % s, b / place_[i] % s) * place_[i];
  return out;
}

Elem PowerAlgebra::neg(Elem a) const {
  const Elem s = static_cast<Elem>(base_.size());
  Elem out = 0;
  for (std::size_t i = 0; i < exponent_; ++i)
    out += base_.neg(a / place_[i] % s) * place_[i];
  return out;
}

Elem PowerAlgebra::inv(Elem a) const {
  const Elem s = static_cast<Elem>(base_.size());
  Elem out = 0;
  for (std::size_t i = 0; i < exponent_; ++i)
    out += base_.inv(a / place_[i] % s) * place_[i];
  return out;
}

std::vector<Elem> PowerAlgebra::diagonal_elements() const {
  Elem unit = 0;
  for (std::size_t i = 0; i < exponent_; ++i) unit += place_[i];
  std::vector<Elem> out(base_.size());
  for (Elem a = 0; a < base_.size(); ++a) out[a] = a * unit;
  return out;
}

Elem PowerAlgebra::encode(const std::vector<Elem>& tuple) const {
  if (tuple.size() != exponent_)
    throw InputError("tuple has " + std::to_string(tuple.size()) +
                     " coordinates, expected " + std::to_string(exponent_));
  Elem out = 0;
  for (std::size_t i = 0; i < exponent_; ++i) {
    if (tuple[i] >= base_.size())
      throw InputError("coordinate " + std::to_string(tuple[i]) + " out of range");
    out += tuple[i] * place_[i];
  }
  return out;
}

std::vector<Elem> PowerAlgebra::decode(Elem x) const {
  if (x >= carrier_) throw InputError("encoding " + std::to_string(x) + " out of range");
  const Elem s = static_cast<Elem>(base_.size());
  std::vector<Elem> out(exponent_);
  for (std::size_t i = 0; i < exponent_; ++i) out[i] = x / place_[i] % s;
  return out;
}

HIAlgebra PowerAlgebra::materialize(std::string name, std::size_t max_elements) const {
  if (carrier_ > max_elements) throw SizeBoundError(carrier_, max_elements);
  const std::size_t n = carrier_;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) leq[a * n + b] = meet(a, b) == a ? 1 : 0;
  std::vector<Elem> inv_table(n);
  for (Elem a = 0; a < n; ++a) inv_table[a] = inv(a);

  HIAlgebra m =
      HIAlgebra::from_order(FinitePoset(n, std::move(leq)), std::move(inv_table),
                            std::move(name));
  // Derived tables must agree with the coordinatewise operations.
  for (Elem a = 0; a < n; ++a) {
    if (m.neg(a) != neg(a))
      throw InternalInconsistencyError("power negation mismatch at " +
                                       std::to_string(a));
    for (Elem b = 0; b < n; ++b)
      if (m.meet(a, b) != meet(a, b) || m.join(a, b) != join(a, b) ||
          m.impl(a, b) != impl(a, b))
        throw InternalInconsistencyError("power table mismatch at (" +
                                         std::to_string(a) + "," +
                                         std::to_string(b) + ")");
  }
  return m;
}

PowerAlgebra direct_power(const HIAlgebra& base, std::size_t exponent,
                          std::size_t carrier_bound) {
  return PowerAlgebra(base, exponent, carrier_bound);
}

PowerAlgebra boolean_power(const HIAlgebra& base, std::size_t atoms,
                           std::size_t carrier_bound) {
  // The Boolean power by 2^atoms is the algebra of step functions with
  // one value per atom; picking values independently per atom makes it
  // coincide with the direct power base^atoms.
  PowerAlgebra p(base, atoms, carrier_bound);
  p.provenance_ = "boolean power " +
                  (base.name().empty() ? std::string("base") : base.name()) + "[2^" +
                  std::to_string(atoms) + "]: step functions, coordinate i = value "
                  "on atom i of the Boolean algebra";
  return p;
}

std::vector<Elem> closure(const AlgebraOps& a, const std::vector<Elem>& seed,
                          std::size_t size_bound) {
  std::set<Elem> in;
  in.insert(a.bottom());
  in.insert(a.top());
  for (Elem s : seed) {
    if (s >= a.size())
      throw InputError("seed element " + std::to_string(s) + " out of range");
    in.insert(s);
  }
  if (in.size() > size_bound) throw SizeBoundError(in.size(), size_bound);

  std::vector<Elem> frontier(in.begin(), in.end());
  while (!frontier.empty()) {
    std::vector<Elem> fresh;
    auto add = [&](Elem x) {
      if (in.insert(x).second) {
        fresh.push_back(x);
        if (in.size() > size_bound) throw SizeBoundError(in.size(), size_bound);
      }
    };
    // New pairs only: fresh x everything, both orders, plus unaries.
    const std::vector<Elem> all(in.begin(), in.end());
    for (Elem x : frontier) {
      add(a.neg(x));
      add(a.inv(x));
      for (Elem y : all) {
        add(a.meet(x, y));
        add(a.join(x, y));
        add(a.impl(x, y));
        add(a.impl(y, x));
      }
    }
    frontier = std::move(fresh);
  }
  return std::vector<Elem>(in.begin(), in.end());
}

Subalgebra::Subalgebra(std::shared_ptr<const AlgebraOps> parent,
                       std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw InputError("subalgebra needs a parent");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem x : members_)
    if (x >= parent_->size())
      throw InputError("member " + std::to_string(x) + " out of range");

  const AlgebraOps& p = *parent_;
  if (!contains(p.bottom()) || !contains(p.top()))
    throw InvalidAlgebraError("subalgebra must contain bottom and top");
  for (Elem x : members_) {
    if (!contains(p.neg(x)) || !contains(p.inv(x)))
      throw InvalidAlgebraError("subalgebra not closed at element " +
                                std::to_string(x));
    for (Elem y : members_)
      if (!contains(p.meet(x, y)) || !contains(p.join(x, y)) ||
          !contains(p.impl(x, y)))
        throw InvalidAlgebraError("subalgebra not closed at pair (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
  }

  diagonal_ = true;
  for (Elem c : p.diagonal_elements())
    if (!contains(c)) {
      diagonal_ = false;
      break;
    }
}

Subalgebra Subalgebra::generated(std::shared_ptr<const AlgebraOps> parent,
                                 const std::vector<Elem>& generators,
                                 std::size_t size_bound) {
  if (!parent) throw InputError("subalgebra needs a parent");
  std::vector<Elem> members = closure(*parent, generators, size_bound);
  return Subalgebra(std::move(parent), std::move(members));
}

bool Subalgebra::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

Subalgebra::Realized Subalgebra::realize(std::string name) const {
  const std::size_t k = members_.size();
  const AlgebraOps& p = *parent_;
  auto local = [&](Elem parent_elem) -> Elem {
    auto it = std::lower_bound(members_.begin(), members_.end(), parent_elem);
    if (it == members_.end() || *it != parent_elem)
      throw InternalInconsistencyError("closure escaped the member set");
    return static_cast<Elem>(it - members_.begin());
  };

  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      leq[i * k + j] = p.leq(members_[i], members_[j]) ? 1 : 0;
  std::vector<Elem> inv_table(k);
  for (std::size_t i = 0; i < k; ++i) inv_table[i] = local(p.inv(members_[i]));

  Realized r{HIAlgebra::from_order(FinitePoset(k, std::move(leq)),
                                   std::move(inv_table), std::move(name)),
             members_};
  // The realized tables must be the restriction of the parent operations:
  // glb/lub/residual computed inside the subuniverse agree with the
  // parent's because the subuniverse is closed under them.
  for (std::size_t i = 0; i < k; ++i) {
    if (members_[r.algebra.neg(static_cast<Elem>(i))] != p.neg(members_[i]))
      throw InternalInconsistencyError("realized negation mismatch");
    for (std::size_t j = 0; j < k; ++j) {
      const Elem a = members_[i], b = members_[j];
      if (members_[r.algebra.meet(i, j)] != p.meet(a, b) ||
          members_[r.algebra.join(i, j)] != p.join(a, b) ||
          members_[r.algebra.impl(i, j)] != p.impl(a, b))
        throw InternalInconsistencyError("realized table mismatch");
    }
  }
  return r;
}

std::vector<Subalgebra> enumerate_subalgebras(std::shared_ptr<const AlgebraOps> parent,
                                              std::size_t max_members,
                                              std::size_t carrier_bound) {
  if (!parent) throw InputError("subalgebra needs a parent");
  if (parent->size() > carrier_bound)
    throw SizeBoundError(parent->size(), carrier_bound);

  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> queue;
  {
    std::vector<Elem> least;
    try {
      least = closure(*parent, {}, max_members);
    } catch (const SizeBoundError&) {
      return {};  // even the minimal subalgebra is too big
    }
    seen.insert(least);
    queue.push_back(std::move(least));
  }

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::vector<Elem> current = queue[qi];  // copy: queue grows
    for (Elem x = 0; x < parent->size(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      std::vector<Elem> seed = current;
      seed.push_back(x);
      std::vector<Elem> bigger;
      try {
        bigger = closure(*parent, seed, max_members);
      } catch (const SizeBoundError&) {
        continue;
      }
      if (seen.insert(bigger).second) queue.push_back(std::move(bigger));
    }
  }

  std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subalgebra> out;
  out.reserve(queue.size());
  for (std::vector<Elem>& m : queue) out.emplace_back(parent, std::move(m));
  return out;
}

}  // namespace hia
