#ifndef HYPERMAPS_CONSTRUCTIONS_HPP
#define HYPERMAPS_CONSTRUCTIONS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "hypermap.hpp"
#include "theta.hpp"
#include "todd_coxeter.hpp"

namespace hypermaps {

/// Hypermap whose flags are the cosets of a closed table.
inline Hypermap hypermap_from_table(const CosetTable& table) {
  std::array<std::vector<Point>, 3> images;
  for (int i = 0; i < 3; ++i) {
    auto& img = images[static_cast<std::size_t>(i)];
    img.resize(table.size());
    for (std::size_t c = 0; c < table.size(); ++c) {
      img[c] = table.rows[c][static_cast<std::size_t>(i)];
      if (img[c] == c) {
        throw Error(ErrorCode::Degenerate,
                    "R" + std::to_string(i) + " is trivial in the quotient (" +
                        std::to_string(table.size()) + " cosets)");
      }
    }
  }
  return validate(table.size(), std::move(images));
}

/// Regular hypermap of type (l; m; n): the action of
/// <R0,R1,R2 | squares, (R1R2)^l, (R2R0)^m, (R0R1)^n, extra> on itself.
inline Hypermap regular_from_type(std::size_t l, std::size_t m, std::size_t n,
                                  const std::vector<std::vector<int>>& extra_relators = {},
                                  std::size_t coset_limit = default_coset_limit) {
  if (l == 0 || m == 0 || n == 0) throw Error(ErrorCode::Degenerate, "type entries must be positive");
  Presentation p = Presentation::of_type(l, m, n);
  p.relators.insert(p.relators.end(), extra_relators.begin(), extra_relators.end());
  return hypermap_from_table(todd_coxeter(p, coset_limit));
}

inline Hypermap regular_from_presentation(const Presentation& p,
                                          std::size_t coset_limit = default_coset_limit) {
  return hypermap_from_table(todd_coxeter(p, coset_limit));
}

/// D_n: type (n; n; 1), 2n flags, monodromy dihedral of order 2n.
inline Hypermap build_dihedral(std::size_t n) { return regular_from_type(n, n, 1); }

/// P_n: type (2; 2; n), 4n flags, monodromy D_n x C_2.
inline Hypermap build_prism(std::size_t n) { return regular_from_type(2, 2, n); }

enum class Platonic { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

inline std::optional<Platonic> parse_platonic(std::string_view name) {
  if (name == "T") return Platonic::Tetrahedron;
  if (name == "C") return Platonic::Cube;
  if (name == "O") return Platonic::Octahedron;
  if (name == "D") return Platonic::Dodecahedron;
  if (name == "I") return Platonic::Icosahedron;
  return std::nullopt;
}

/// The spherical triangle-group hypermaps of types (2;3;k) are (01)-duals of
/// T, C, D; O and I are the (02)-duals of C and D.
inline Hypermap build_platonic(Platonic which) {
  const Sigma s01 = Sigma::swap(0, 1);
  const Sigma s02 = Sigma::swap(0, 2);
  switch (which) {
    case Platonic::Tetrahedron: return dual(regular_from_type(2, 3, 3), s01);
    case Platonic::Cube: return dual(regular_from_type(2, 3, 4), s01);
    case Platonic::Octahedron: return dual(build_platonic(Platonic::Cube), s02);
    case Platonic::Dodecahedron: return dual(regular_from_type(2, 3, 5), s01);
    case Platonic::Icosahedron: return dual(build_platonic(Platonic::Dodecahedron), s02);
  }
  throw Error(ErrorCode::ParseError, "unknown platonic solid");
}

/// M_k: the one-face map on a 2k-gon with opposite sides identified
/// orientably. Cayley action of <r0, r1 | (r0r1)^{2k}> (order 4k) with
/// h2 = r0 (r1 r0)^k.
inline Hypermap build_mk(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::Degenerate, "k must be positive");
  Presentation p;
  p.relators.push_back(Presentation::power({0, 1}, 2 * k));
  std::vector<int> h2_word{2, 0};
  const auto tail = Presentation::power({1, 0}, k);
  h2_word.insert(h2_word.end(), tail.begin(), tail.end());
  p.relators.push_back(std::move(h2_word));
  return regular_from_presentation(p);
}

// Walsh and Pin double the flag set: flag (w, c) is stored at index 2w + c,
// copy 0 being the side of the vertex-bipartite subgroup and copy 1 its
// R0-translate. t0 always swaps the copies.

/// Walsh bipartite map: t1 = h1 on copy 0 and h0 on copy 1; t2 = h2 on both.
inline Hypermap walsh(const Hypermap& h) {
  const std::size_t n = h.size();
  std::array<std::vector<Point>, 3> t;
  for (auto& img : t) img.resize(2 * n);
  for (Point w = 0; w < n; ++w) {
    const Point a = 2 * w;
    const Point b = 2 * w + 1;
    t[0][a] = b;
    t[0][b] = a;
    t[1][a] = 2 * h(1, w);
    t[1][b] = 2 * h(0, w) + 1;
    t[2][a] = 2 * h(2, w);
    t[2][b] = 2 * h(2, w) + 1;
  }
  return validate(2 * n, std::move(t));
}

/// Pin construction: t1 = h1 on copy 0 and h0 on copy 1; t2 = h2 on copy 0
/// and h0 on copy 1. Every hypervertex of copy 1 has valency 1.
inline Hypermap pin(const Hypermap& h) {
  const std::size_t n = h.size();
  std::array<std::vector<Point>, 3> t;
  for (auto& img : t) img.resize(2 * n);
  for (Point w = 0; w < n; ++w) {
    const Point a = 2 * w;
    const Point b = 2 * w + 1;
    t[0][a] = b;
    t[0][b] = a;
    t[1][a] = 2 * h(1, w);
    t[1][b] = 2 * h(0, w) + 1;
    t[2][a] = 2 * h(2, w);
    t[2][b] = 2 * h(0, w) + 1;
  }
  return validate(2 * n, std::move(t));
}

inline bool is_map(const Hypermap& h) {
  for (Point x = 0; x < h.size(); ++x) {
    if (h(2, h(0, h(2, h(0, x)))) != x) return false;
  }
  return true;
}

namespace detail {

/// Restricts (t0 t1 t0, t1, t2) to the flags of colour `cls`, renumbered
/// in increasing order.
inline Hypermap restrict_to_class(const Hypermap& k, const std::vector<std::uint8_t>& color,
                                  std::uint8_t cls) {
  std::vector<Point> index(k.size(), static_cast<Point>(-1));
  std::vector<Point> members;
  for (Point x = 0; x < k.size(); ++x) {
    if (color[x] == cls) {
      index[x] = static_cast<Point>(members.size());
      members.push_back(x);
    }
  }
  std::array<std::vector<Point>, 3> g;
  for (auto& img : g) img.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Point x = members[i];
    g[0][i] = index[k(0, k(1, k(0, x)))];
    g[1][i] = index[k(1, x)];
    g[2][i] = index[k(2, x)];
  }
  try {
    return validate(members.size(), std::move(g));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidRestriction, e.what());
  }
}

}  // namespace detail

/// Recovers G with walsh(G) isomorphic to `k` from a bipartite map. The
/// answer depends on the chosen colour class only up to (01)-duality; the
/// default is the class of flag 0.
inline Hypermap unwalsh(const Hypermap& k, std::optional<Point> class_of = std::nullopt) {
  if (!is_map(k)) throw Error(ErrorCode::NotAMap, "(t0 t2)^2 is not the identity");
  const auto color = theta_coloring(k, ParityVector::vertex_bipartite());
  if (!color) throw Error(ErrorCode::NotBipartite, "hypermap is not vertex-bipartite");
  const Point base = class_of.value_or(0);
  if (base >= k.size()) throw Error(ErrorCode::InvalidImage, "class flag out of range");
  return detail::restrict_to_class(k, *color, (*color)[base]);
}

/// Recovers G with pin(G) isomorphic to `k`, when one colour class consists
/// of valency-1 hypervertices. Restricts to the other class; if both
/// classes qualify, to the class not containing flag 0.
inline Hypermap unpin(const Hypermap& k) {
  const auto color = theta_coloring(k, ParityVector::vertex_bipartite());
  if (!color) throw Error(ErrorCode::NotBipartite, "hypermap is not vertex-bipartite");
  std::array<bool, 2> all_valency_one{true, true};
  const auto valency = flag_valencies(k, 0);
  for (Point x = 0; x < k.size(); ++x) {
    if (valency[x] != 1) all_valency_one[(*color)[x]] = false;
  }
  std::uint8_t keep;
  if (all_valency_one[0]) {
    keep = 1;
  } else if (all_valency_one[1]) {
    keep = 0;
  } else {
    throw Error(ErrorCode::NoValencyOneClass, "neither colour class has only valency-1 hypervertices");
  }
  for (Point x = 0; x < k.size(); ++x) {
    if ((*color)[x] != keep) continue;
    if (k(0, k(1, k(0, x))) != k(0, k(2, k(0, x)))) {
      throw Error(ErrorCode::KernelMismatch,
                  "t0 t1 t0 and t0 t2 t0 differ at flag " + std::to_string(x));
    }
  }
  return detail::restrict_to_class(k, *color, keep);
}

}  // namespace hypermaps

#endif  // HYPERMAPS_CONSTRUCTIONS_HPP
