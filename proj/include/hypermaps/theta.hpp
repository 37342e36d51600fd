#ifndef HYPERMAPS_THETA_HPP
#define HYPERMAPS_THETA_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "hypermap.hpp"

namespace hypermaps {

/// One of the seven index-2 subgroups of the free product C2*C2*C2, given
/// as the homomorphism to C2 that sends generator i to flips[i].
struct ParityVector {
  std::array<bool, 3> flips{true, false, false};

  /// The vertex-bipartite subgroup (normal closure of <R1, R2>).
  static constexpr ParityVector vertex_bipartite() { return {{true, false, false}}; }
  static constexpr ParityVector edge_bipartite() { return {{false, true, false}}; }
  static constexpr ParityVector face_bipartite() { return {{false, false, true}}; }
  /// The orientation subgroup: words of even length.
  static constexpr ParityVector orientable() { return {{true, true, true}}; }

  static constexpr std::array<ParityVector, 7> all() {
    return {ParityVector{{true, false, false}}, ParityVector{{false, true, false}},
            ParityVector{{false, false, true}}, ParityVector{{true, true, true}},
            ParityVector{{false, true, true}},  ParityVector{{true, false, true}},
            ParityVector{{true, true, false}}};
  }

  /// "100", "111", ...
  std::string bits() const {
    std::string s;
    for (bool b : flips) s += b ? '1' : '0';
    return s;
  }

  /// Generating words of the subgroup as sequences of generator indices
  /// (Schreier generators for the transversal {1, R_j}).
  std::vector<std::vector<int>> subgroup_generators() const {
    int j = 0;
    while (!flips[static_cast<std::size_t>(j)]) ++j;
    std::vector<std::vector<int>> words;
    for (int i = 0; i < 3; ++i) {
      if (!flips[static_cast<std::size_t>(i)]) {
        words.push_back({i});
        words.push_back({j, i, j});
      } else if (i != j) {
        words.push_back({i, j});
        words.push_back({j, i});
      }
    }
    return words;
  }

  friend bool operator==(const ParityVector&, const ParityVector&) = default;
};

/// Colour classes of a Theta-conservative hypermap; nullopt when `h` is not
/// Theta-conservative. Flag 0 always has colour 0.
inline std::optional<std::vector<std::uint8_t>> theta_coloring(const Hypermap& h, ParityVector eps) {
  return parity_coloring(h, eps.flips);
}

inline bool is_theta_conservative(const Hypermap& h, ParityVector eps) {
  return theta_coloring(h, eps).has_value();
}

inline bool is_bipartite(const Hypermap& h) {
  return is_theta_conservative(h, ParityVector::vertex_bipartite());
}

inline Point apply_word(const Hypermap& h, Point flag, const std::vector<int>& word) {
  for (int i : word) flag = h(i, flag);
  return flag;
}

/// The automorphism sending flag 0 to `target`, if there is one.
inline std::optional<Permutation> automorphism_to(const Hypermap& h, Point target) {
  auto map = extend_equivariant(h, h, 0, target);
  if (!map) return std::nullopt;
  return Permutation(std::move(*map));
}

/// Aut(h) acting on flags. Aut acts semi-regularly, so it has exactly one
/// element per flag reachable from flag 0.
inline FiniteGroup automorphisms(const Hypermap& h) {
  std::vector<Permutation> elements;
  for (Point target = 0; target < h.size(); ++target) {
    if (auto a = automorphism_to(h, target)) elements.push_back(std::move(*a));
  }
  return subgroup_from_elements(h.size(), elements);
}

/// Regular iff Aut is transitive. If automorphisms send flag 0 to each of
/// 0h0, 0h1, 0h2 then the Aut-orbit of flag 0 is closed under every h_i,
/// hence everything.
inline bool is_regular(const Hypermap& h) {
  for (int i = 0; i < 3; ++i) {
    if (!automorphism_to(h, h(i, 0))) return false;
  }
  return true;
}

/// Theta-regular iff Theta-conservative and Aut is transitive on the colour
/// class of flag 0 (and therefore on the other one). As for `is_regular`,
/// it suffices to reach 0w for each generating word w of Theta.
inline bool is_theta_regular(const Hypermap& h, ParityVector eps) {
  if (!theta_coloring(h, eps)) return false;
  for (const auto& word : eps.subgroup_generators()) {
    if (!automorphism_to(h, apply_word(h, 0, word))) return false;
  }
  return true;
}

inline bool is_bipartite_regular(const Hypermap& h) {
  return is_theta_regular(h, ParityVector::vertex_bipartite());
}

/// (l1, l2; m; n) with l1 <= l2.
struct BipartiteType {
  std::size_t l1 = 1;
  std::size_t l2 = 1;
  std::size_t m = 2;
  std::size_t n = 2;

  std::string to_string() const {
    return "(" + std::to_string(l1) + "," + std::to_string(l2) + ";" + std::to_string(m) + ";" +
           std::to_string(n) + ")";
  }
  friend bool operator==(const BipartiteType&, const BipartiteType&) = default;
};

/// Hypervertex counts and valencies per colour class, normalised so that
/// the class with the smaller valency comes first.
struct BipartiteCounts {
  BipartiteType type;
  std::size_t v1 = 0;
  std::size_t v2 = 0;
  std::size_t e = 0;
  std::size_t f = 0;
};

inline std::optional<BipartiteCounts> bipartite_counts(const Hypermap& h) {
  const auto color = theta_coloring(h, ParityVector::vertex_bipartite());
  if (!color) return std::nullopt;

  std::array<std::vector<std::size_t>, 2> vertex_valencies;
  for (const auto& vertex : k_faces(h, 0)) {
    vertex_valencies[(*color)[vertex.front()]].push_back(vertex.size() / 2);
  }
  const auto all_equal = [](const std::vector<std::size_t>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
  };
  const auto edges = face_valencies(h, 1);
  const auto faces = face_valencies(h, 2);
  if (!all_equal(vertex_valencies[0]) || !all_equal(vertex_valencies[1]) || !all_equal(edges) ||
      !all_equal(faces)) {
    return std::nullopt;
  }

  std::array<std::pair<std::size_t, std::size_t>, 2> classes{
      std::pair{vertex_valencies[0].front(), vertex_valencies[0].size()},
      std::pair{vertex_valencies[1].front(), vertex_valencies[1].size()}};
  std::sort(classes.begin(), classes.end());
  BipartiteCounts c;
  c.type = {classes[0].first, classes[1].first, edges.front(), faces.front()};
  c.v1 = classes[0].second;
  c.v2 = classes[1].second;
  c.e = edges.size();
  c.f = faces.size();
  return c;
}

inline std::optional<BipartiteType> bipartite_type(const Hypermap& h) {
  if (auto c = bipartite_counts(h)) return c->type;
  return std::nullopt;
}

inline bool is_bipartite_uniform(const Hypermap& h) { return bipartite_counts(h).has_value(); }

/// No automorphism exchanges the two colour classes.
inline bool is_bipartite_chiral(const Hypermap& h) {
  const auto color = theta_coloring(h, ParityVector::vertex_bipartite());
  if (!color) throw Error(ErrorCode::NotBipartite, "hypermap is not vertex-bipartite");
  for (Point x = 0; x < h.size(); ++x) {
    if ((*color)[x] == 1 && automorphism_to(h, x)) return false;
  }
  return true;
}

/// Automorphisms mapping each Theta colour class to itself.
inline FiniteGroup theta_preserving_automorphisms(const Hypermap& h, ParityVector eps) {
  const auto color = theta_coloring(h, eps);
  if (!color) {
    throw Error(ErrorCode::NotConservative, "hypermap is not " + eps.bits() + "-conservative");
  }
  std::vector<Permutation> elements;
  for (Point x = 0; x < h.size(); ++x) {
    if ((*color)[x] != 0) continue;
    if (auto a = automorphism_to(h, x)) elements.push_back(std::move(*a));
  }
  return subgroup_from_elements(h.size(), elements);
}

}  // namespace hypermaps

#endif  // HYPERMAPS_THETA_HPP
