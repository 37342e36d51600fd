#ifndef HYPERMAPS_GROUP_HPP
#define HYPERMAPS_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace hypermaps {

/// A permutation group held as a full list of its elements.
///
/// Elements are stored in breadth-first discovery order starting from the
/// identity (index 0), applying generators in the order given.
class FiniteGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  static constexpr std::size_t identity_index = 0;
  const Permutation& identity() const { return elements_[identity_index]; }

  bool contains(const Permutation& p) const { return index_.contains(p); }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      for (std::size_t j = i + 1; j < generators_.size(); ++j) {
        if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
      }
    }
    return true;
  }

 private:
  friend FiniteGroup generate_group(const std::vector<Permutation>&, std::size_t, std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Closure of `generators` under composition. `max_order` (0 = unbounded)
/// aborts with GroupTooLarge once the enumeration would exceed it.
inline FiniteGroup generate_group(const std::vector<Permutation>& generators, std::size_t degree,
                                  std::size_t max_order = 0) {
  if (generators.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch,
                  "generator of degree " + std::to_string(g.degree()) + ", expected " +
                      std::to_string(degree));
    }
  }
  FiniteGroup group;
  group.degree_ = degree;
  group.generators_ = generators;
  group.elements_.push_back(Permutation::identity(degree));
  group.index_.emplace(group.elements_.front(), 0);
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = group.elements_[i] * g;
      if (group.index_.contains(next)) continue;
      if (max_order != 0 && group.elements_.size() >= max_order) {
        throw Error(ErrorCode::GroupTooLarge,
                    "group order exceeds " + std::to_string(max_order));
      }
      group.index_.emplace(next, group.elements_.size());
      group.elements_.push_back(std::move(next));
    }
  }
  return group;
}

/// Subgroup with a small generating set picked greedily from `elements`
/// (in order). `elements` must be closed under composition.
inline FiniteGroup subgroup_from_elements(std::size_t degree,
                                          const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  std::optional<FiniteGroup> current;
  for (const auto& e : elements) {
    if (e.is_identity()) continue;
    if (current && current->contains(e)) continue;
    gens.push_back(e);
    current = generate_group(gens, degree);
  }
  if (!current) return generate_group({Permutation::identity(degree)}, degree);
  if (current->order() != elements.size()) {
    throw Error(ErrorCode::NotAMember, "element list is not closed under composition");
  }
  return *current;
}

/// Orbits of the group generated by `perms`, each sorted, listed by
/// smallest member.
inline std::vector<std::vector<Point>> orbits(const std::vector<Permutation>& perms,
                                              std::size_t degree) {
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<Point>> result;
  for (Point start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& p : perms) {
        Point y = p[orbit[i]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

inline FiniteGroup point_stabilizer(const FiniteGroup& group, Point point) {
  std::vector<Permutation> fixing;
  for (const auto& g : group.elements()) {
    if (g[point] == point) fixing.push_back(g);
  }
  return subgroup_from_elements(group.degree(), fixing);
}

/// Smallest subgroup of `group` containing `seeds` and normalised by every
/// generator of `group`.
inline FiniteGroup normal_closure(const FiniteGroup& group, const std::vector<Permutation>& seeds) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (!group.contains(s)) throw Error(ErrorCode::NotAMember, "seed " + s.to_cycle_string());
    if (!s.is_identity()) gens.push_back(s);
  }
  if (gens.empty()) return generate_group({group.identity()}, group.degree());

  // Drop redundant seeds so the closure runs over few generators.
  std::vector<Permutation> reduced;
  std::optional<FiniteGroup> closure;
  for (const auto& s : gens) {
    if (closure && closure->contains(s)) continue;
    reduced.push_back(s);
    closure = generate_group(reduced, group.degree());
  }

  bool grown = true;
  while (grown) {
    grown = false;
    for (std::size_t i = 0; i < reduced.size() && !grown; ++i) {
      for (const auto& g : group.generators()) {
        Permutation c = reduced[i].conjugate_by(g);
        if (!closure->contains(c)) {
          reduced.push_back(std::move(c));
          closure = generate_group(reduced, group.degree());
          grown = true;
          break;
        }
      }
    }
  }
  return *closure;
}

/// Action of `group` on the cosets of a normal subgroup.
struct QuotientAction {
  std::size_t coset_count = 0;
  /// Coset index of every element of the ambient group, by element index.
  std::vector<std::size_t> coset_of;
  /// One permutation of the cosets per generator of the ambient group.
  std::vector<Permutation> generator_images;
};

inline bool is_normal_subgroup(const FiniteGroup& group, const FiniteGroup& sub) {
  for (const auto& n : sub.generators()) {
    if (!group.contains(n)) return false;
    for (const auto& g : group.generators()) {
      if (!sub.contains(n.conjugate_by(g))) return false;
    }
  }
  return true;
}

inline QuotientAction quotient_action(const FiniteGroup& group, const FiniteGroup& normal) {
  if (normal.degree() != group.degree() || !is_normal_subgroup(group, normal)) {
    throw Error(ErrorCode::NotNormal, "subgroup is not normal in the group");
  }
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  QuotientAction q;
  q.coset_of.assign(group.order(), unassigned);
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (q.coset_of[i] != unassigned) continue;
    const std::size_t c = representative.size();
    representative.push_back(i);
    for (const auto& n : normal.elements()) {
      q.coset_of[*group.index_of(n * group.elements()[i])] = c;
    }
  }
  q.coset_count = representative.size();
  for (const auto& g : group.generators()) {
    std::vector<Point> images(q.coset_count);
    for (std::size_t c = 0; c < q.coset_count; ++c) {
      const auto& rep = group.elements()[representative[c]];
      images[c] = static_cast<Point>(q.coset_of[*group.index_of(rep * g)]);
    }
    q.generator_images.emplace_back(std::move(images));
  }
  return q;
}

inline FiniteGroup derived_subgroup(const FiniteGroup& group) {
  std::vector<Permutation> commutators;
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      commutators.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    }
  }
  if (commutators.empty()) return generate_group({group.identity()}, group.degree());
  return normal_closure(group, commutators);
}

/// Names for the small groups that occur as irregularity groups.
struct GroupName {
  enum class Kind { Trivial, Cyclic, Dihedral, KleinFour, Alt4, Sym4, Alt5, Unrecognized };

  Kind kind = Kind::Trivial;
  /// n for Cyclic(n) and Dihedral(n); the order for Unrecognized.
  std::size_t n = 1;

  static GroupName trivial() { return {Kind::Trivial, 1}; }
  static GroupName cyclic(std::size_t n) { return n == 1 ? trivial() : GroupName{Kind::Cyclic, n}; }
  /// Dihedral of order 2n; D_1 and D_2 normalise to C_2 and V_4.
  static GroupName dihedral(std::size_t n) {
    if (n == 1) return cyclic(2);
    if (n == 2) return {Kind::KleinFour, 4};
    return {Kind::Dihedral, n};
  }
  static GroupName klein_four() { return {Kind::KleinFour, 4}; }
  static GroupName alt4() { return {Kind::Alt4, 12}; }
  static GroupName sym4() { return {Kind::Sym4, 24}; }
  static GroupName alt5() { return {Kind::Alt5, 60}; }
  static GroupName unrecognized(std::size_t order) { return {Kind::Unrecognized, order}; }

  std::size_t order() const {
    switch (kind) {
      case Kind::Trivial: return 1;
      case Kind::Cyclic: return n;
      case Kind::Dihedral: return 2 * n;
      case Kind::KleinFour: return 4;
      case Kind::Alt4: return 12;
      case Kind::Sym4: return 24;
      case Kind::Alt5: return 60;
      case Kind::Unrecognized: return n;
    }
    return n;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Trivial: return "1";
      case Kind::Cyclic: return "C" + std::to_string(n);
      case Kind::Dihedral: return "D" + std::to_string(n);
      case Kind::KleinFour: return "V4";
      case Kind::Alt4: return "A4";
      case Kind::Sym4: return "S4";
      case Kind::Alt5: return "A5";
      case Kind::Unrecognized: return "unrecognized(" + std::to_string(n) + ")";
    }
    return "?";
  }

  friend bool operator==(const GroupName&, const GroupName&) = default;
};

/// Multiset of element orders: order -> count.
inline std::map<std::size_t, std::size_t> element_order_counts(const FiniteGroup& group) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& g : group.elements()) ++counts[g.order()];
  return counts;
}

/// Decision list over the families that occur here; anything else is
/// reported as Unrecognized rather than guessed.
inline GroupName recognize_group(const FiniteGroup& group) {
  const std::size_t order = group.order();
  if (order == 1) return GroupName::trivial();

  const auto orders = element_order_counts(group);
  if (orders.contains(order)) return GroupName::cyclic(order);

  if (order == 4 && orders.rbegin()->first == 2) return GroupName::klein_four();

  if (order >= 6 && order % 2 == 0) {
    const std::size_t half = order / 2;
    for (const auto& r : group.elements()) {
      if (r.order() != half) continue;
      const Permutation r_inv = r.inverse();
      std::vector<Permutation> powers{group.identity()};
      for (std::size_t k = 1; k < half; ++k) powers.push_back(powers.back() * r);
      for (const auto& s : group.elements()) {
        if (s.order() != 2) continue;
        if (std::find(powers.begin(), powers.end(), s) != powers.end()) continue;
        if (r.conjugate_by(s) == r_inv) return GroupName::dihedral(half);
      }
    }
  }

  if (order == 12 && !orders.contains(6) && orders.size() == 3 && orders.at(2) == 3 &&
      orders.at(3) == 8) {
    return GroupName::alt4();
  }

  if (order == 24 && orders.rbegin()->first <= 4) {
    std::size_t central = 0;
    for (const auto& g : group.elements()) {
      bool commutes = true;
      for (const auto& h : group.generators()) {
        if (g * h != h * g) {
          commutes = false;
          break;
        }
      }
      if (commutes) ++central;
    }
    if (central == 1) return GroupName::sym4();
  }

  if (order == 60 && derived_subgroup(group).order() == 60) return GroupName::alt5();

  return GroupName::unrecognized(order);
}

}  // namespace hypermaps

#endif  // HYPERMAPS_GROUP_HPP
