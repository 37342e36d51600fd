#ifndef HYPERMAPS_TESTS_SUPPORT_HPP
#define HYPERMAPS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypermaps/hypermaps.hpp"

namespace hypermaps {

/// Readable failure messages in GoogleTest assertions.
inline void PrintTo(const Hypermap& h, std::ostream* os) { *os << '\n' << to_text(h); }

}  // namespace hypermaps

namespace testing_support {

using namespace hypermaps;

inline const std::vector<NamedHypermap>& catalog() {
  static const std::vector<NamedHypermap> members = build_catalog();
  return members;
}

inline const NamedHypermap& member(const std::string& name) {
  for (const auto& m : catalog()) {
    if (m.name == name) return m;
  }
  throw std::runtime_error("no catalog member " + name);
}

inline Hypermap random_relabel(const Hypermap& h, std::mt19937& rng) {
  std::vector<Point> perm(h.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(h, perm);
}

/// Every hypermap on at most `max_flags` flags, one per isomorphism class.
inline const std::vector<Hypermap>& small_hypermaps(std::size_t max_flags = 6) {
  static std::map<std::size_t, std::vector<Hypermap>> cache;
  auto& out = cache[max_flags];
  if (out.empty()) {
    for (std::size_t n = 2; n <= max_flags; n += 2) {
      OracleSizeReport unused;
      for (auto& h : hypermaps::detail::classes_by_canonical_code(n, unused)) out.push_back(std::move(h));
    }
  }
  return out;
}

/// Stabiliser of flag 0 in Mon(h), as the list of its elements.
inline std::vector<Permutation> stabilizer_elements(const FiniteGroup& mon) {
  std::vector<Permutation> out;
  for (const auto& g : mon.elements()) {
    if (g[0] == 0) out.push_back(g);
  }
  return out;
}

/// Flags whose monodromy stabiliser equals that of flag 0.
inline std::vector<Point> flags_with_stabilizer_of_zero(const Hypermap& h) {
  const auto mon = monodromy(h);
  const auto stab = stabilizer_elements(mon);
  std::vector<Point> out;
  for (Point x = 0; x < h.size(); ++x) {
    if (std::all_of(stab.begin(), stab.end(), [&](const Permutation& g) { return g[x] == x; })) out.push_back(x);
  }
  return out;
}

/// Element-order multiset, centre order and derived-subgroup order,
/// computed by exhaustive products.
struct Fingerprint {
  std::map<std::size_t, std::size_t> element_orders;
  std::size_t center = 0;
  std::size_t derived = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  const auto& el = g.elements();
  for (const auto& a : el) ++f.element_orders[a.order()];
  for (const auto& a : el) {
    if (std::all_of(el.begin(), el.end(), [&](const Permutation& b) { return a * b == b * a; })) ++f.center;
  }
  std::set<std::vector<Point>> commutators;
  std::vector<Permutation> gens;
  for (const auto& a : el) {
    for (const auto& b : el) {
      const Permutation c = a.inverse() * b.inverse() * a * b;
      auto img = c.images();
      if (commutators.emplace(img.begin(), img.end()).second) gens.push_back(c);
    }
  }
  f.derived = generate_group(gens, g.degree()).order();
  return f;
}

/// Concrete permutation models of the named groups.
inline FiniteGroup model(const GroupName& name) {
  using K = GroupName::Kind;
  const auto cyclic = [](std::size_t n) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    return generate_group({Permutation(img)}, n);
  };
  switch (name.kind) {
    case K::Trivial: return generate_group({Permutation::identity(1)}, 1);
    case K::Cyclic: return cyclic(name.n);
    case K::Dihedral: {
      const std::size_t n = name.n;
      std::vector<Point> r(n);
      std::vector<Point> s(n);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = static_cast<Point>((i + 1) % n);
        s[i] = static_cast<Point>((n - i) % n);
      }
      return generate_group({Permutation(r), Permutation(s)}, n);
    }
    case K::KleinFour:
      return generate_group({Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})}, 4);
    case K::Alt4:
      return generate_group({Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})}, 4);
    case K::Sym4:
      return generate_group({Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})}, 4);
    case K::Alt5:
      return generate_group({Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}, 5);
    case K::Unrecognized: break;
  }
  throw std::runtime_error("no model for " + name.to_string());
}

}  // namespace testing_support

#endif  // HYPERMAPS_TESTS_SUPPORT_HPP
