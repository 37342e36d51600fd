#ifndef HYPERMAPS_HYPERMAP_HPP
#define HYPERMAPS_HYPERMAP_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace hypermaps {

/// A finite hypermap: three fixed-point-free involutions h0, h1, h2 on the
/// flag set {0, ..., size-1} generating a transitive group.
///
/// Instances can only be obtained through `validate` (or the builders that
/// call it), so every Hypermap value satisfies the invariants. The h_i may
/// coincide as permutations.
class Hypermap {
 public:
  std::size_t size() const noexcept { return h_[0].degree(); }
  const Permutation& h(int i) const { return h_[static_cast<std::size_t>(i)]; }
  const std::array<Permutation, 3>& generators() const noexcept { return h_; }

  /// Image of `flag` under h_i.
  Point operator()(int i, Point flag) const { return h_[static_cast<std::size_t>(i)][flag]; }

  friend bool operator==(const Hypermap&, const Hypermap&) = default;

 private:
  friend Hypermap validate(std::size_t, std::array<std::vector<Point>, 3>);
  explicit Hypermap(std::array<Permutation, 3> h) : h_(std::move(h)) {}

  std::array<Permutation, 3> h_;
};

/// Checks the hypermap axioms on raw image sequences.
inline Hypermap validate(std::size_t n_flags, std::array<std::vector<Point>, 3> images) {
  if (n_flags == 0) throw Error(ErrorCode::InvalidImage, "a hypermap needs at least one flag");
  for (int i = 0; i < 3; ++i) {
    const auto& img = images[static_cast<std::size_t>(i)];
    const std::string name = "h" + std::to_string(i);
    if (img.size() != n_flags) {
      throw Error(ErrorCode::InvalidImage, name + " has " + std::to_string(img.size()) +
                                               " images, expected " + std::to_string(n_flags));
    }
    for (Point x = 0; x < n_flags; ++x) {
      if (img[x] >= n_flags) {
        throw Error(ErrorCode::InvalidImage,
                    name + "(" + std::to_string(x) + ") = " + std::to_string(img[x]) +
                        " is out of range");
      }
      if (img[x] == x) {
        throw Error(ErrorCode::HasFixedPoint, name + " fixes flag " + std::to_string(x));
      }
    }
    for (Point x = 0; x < n_flags; ++x) {
      if (img[img[x]] != x) {
        throw Error(ErrorCode::NotInvolution,
                    name + " is not an involution at flag " + std::to_string(x));
      }
    }
  }
  std::array<Permutation, 3> h{Permutation(std::move(images[0])), Permutation(std::move(images[1])),
                               Permutation(std::move(images[2]))};
  const auto orbs = orbits({h[0], h[1], h[2]}, n_flags);
  if (orbs.size() != 1) {
    throw Error(ErrorCode::NotTransitive,
                "generators have " + std::to_string(orbs.size()) + " orbits");
  }
  return Hypermap(std::move(h));
}

inline Hypermap validate(const Permutation& h0, const Permutation& h1, const Permutation& h2) {
  const auto to_vec = [](const Permutation& p) {
    return std::vector<Point>(p.images().begin(), p.images().end());
  };
  if (h1.degree() != h0.degree() || h2.degree() != h0.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "generators have different degrees");
  }
  return validate(h0.degree(), {to_vec(h0), to_vec(h1), to_vec(h2)});
}

/// The two generator indices whose orbits are the k-faces.
inline std::array<int, 2> face_generators(int k) {
  switch (k) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

/// Hypervertices (k=0), hyperedges (k=1) or hyperfaces (k=2).
inline std::vector<std::vector<Point>> k_faces(const Hypermap& h, int k) {
  const auto [i, j] = face_generators(k);
  return orbits({h.h(i), h.h(j)}, h.size());
}

/// Valency of the k-face containing each flag (half the orbit size).
inline std::vector<std::size_t> flag_valencies(const Hypermap& h, int k) {
  std::vector<std::size_t> valency(h.size());
  for (const auto& face : k_faces(h, k)) {
    for (Point x : face) valency[x] = face.size() / 2;
  }
  return valency;
}

inline std::vector<std::size_t> face_valencies(const Hypermap& h, int k) {
  std::vector<std::size_t> result;
  for (const auto& face : k_faces(h, k)) result.push_back(face.size() / 2);
  return result;
}

struct FaceCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
};

inline FaceCounts face_counts(const Hypermap& h) {
  return {k_faces(h, 0).size(), k_faces(h, 1).size(), k_faces(h, 2).size()};
}

inline long euler_characteristic(const Hypermap& h) {
  const auto c = face_counts(h);
  return static_cast<long>(c.vertices + c.edges + c.faces) - static_cast<long>(h.size() / 2);
}

struct HypermapType {
  std::size_t l = 1;
  std::size_t m = 1;
  std::size_t n = 1;

  std::size_t operator[](int k) const { return k == 0 ? l : (k == 1 ? m : n); }
  std::string to_string() const {
    return "(" + std::to_string(l) + ";" + std::to_string(m) + ";" + std::to_string(n) + ")";
  }
  friend bool operator==(const HypermapType&, const HypermapType&) = default;
};

inline HypermapType type_of(const Hypermap& h) {
  std::array<std::size_t, 3> t{1, 1, 1};
  for (int k = 0; k < 3; ++k) {
    for (std::size_t v : face_valencies(h, k)) t[static_cast<std::size_t>(k)] = std::lcm(t[k], v);
  }
  return {t[0], t[1], t[2]};
}

inline bool is_uniform(const Hypermap& h) {
  for (int k = 0; k < 3; ++k) {
    const auto v = face_valencies(h, k);
    if (std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) != v.end()) return false;
  }
  return true;
}

/// Two-colouring in which h_i swaps colours exactly when flips[i] is set,
/// propagated breadth-first from flag 0 (colour 0).
inline std::optional<std::vector<std::uint8_t>> parity_coloring(const Hypermap& h,
                                                                std::array<bool, 3> flips) {
  constexpr std::uint8_t unset = 2;
  std::vector<std::uint8_t> color(h.size(), unset);
  std::vector<Point> queue{0};
  color[0] = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Point x = queue[q];
    for (int i = 0; i < 3; ++i) {
      const Point y = h(i, x);
      const std::uint8_t expected = flips[static_cast<std::size_t>(i)] ? 1 - color[x] : color[x];
      if (color[y] == unset) {
        color[y] = expected;
        queue.push_back(y);
      } else if (color[y] != expected) {
        return std::nullopt;
      }
    }
  }
  return color;
}

struct SurfaceClass {
  long euler_characteristic = 2;
  bool orientable = true;
  /// (2 - chi) / 2 when orientable, 2 - chi otherwise.
  long genus = 0;

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

inline SurfaceClass surface_class(const Hypermap& h) {
  SurfaceClass s;
  s.euler_characteristic = euler_characteristic(h);
  s.orientable = parity_coloring(h, {true, true, true}).has_value();
  s.genus = s.orientable ? (2 - s.euler_characteristic) / 2 : 2 - s.euler_characteristic;
  return s;
}

/// A permutation sigma of {0, 1, 2}, stored as its images.
struct Sigma {
  std::array<int, 3> image{0, 1, 2};

  static Sigma identity() { return {}; }
  /// Transposition (a b).
  static Sigma swap(int a, int b) {
    Sigma s;
    s.image[static_cast<std::size_t>(a)] = b;
    s.image[static_cast<std::size_t>(b)] = a;
    return s;
  }
  /// Parses cycle notation over the digits 0-2: "01", "(02)", "012", "id".
  static Sigma parse(std::string text) {
    std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == ' '; });
    if (text.empty() || text == "id" || text == "1") return identity();
    Sigma s;
    std::array<bool, 3> used{};
    for (char c : text) {
      if (c < '0' || c > '2' || used[static_cast<std::size_t>(c - '0')]) {
        throw Error(ErrorCode::ParseError, "invalid permutation of {0,1,2}: '" + text + "'");
      }
      used[static_cast<std::size_t>(c - '0')] = true;
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
      const int from = text[i] - '0';
      const int to = text[(i + 1) % text.size()] - '0';
      s.image[static_cast<std::size_t>(from)] = to;
    }
    return s;
  }

  int operator()(int k) const { return image[static_cast<std::size_t>(k)]; }
  Sigma inverse() const {
    Sigma s;
    for (int k = 0; k < 3; ++k) s.image[static_cast<std::size_t>(image[k])] = k;
    return s;
  }
  std::string to_string() const {
    if (image == std::array<int, 3>{0, 1, 2}) return "id";
    std::string out;
    std::array<bool, 3> seen{};
    for (int k = 0; k < 3; ++k) {
      if (seen[k] || image[k] == k) continue;
      out += '(';
      for (int j = k; !seen[j]; j = image[j]) {
        seen[j] = true;
        out += static_cast<char>('0' + j);
      }
      out += ')';
    }
    return out;
  }

  static std::array<Sigma, 6> all() {
    return {identity(), swap(0, 1), swap(0, 2), swap(1, 2), parse("012"), parse("021")};
  }
  friend bool operator==(const Sigma&, const Sigma&) = default;
};

/// The sigma-dual: generator i of the result is h_{i sigma^-1}, so the
/// k-faces of `h` become the (k sigma)-faces of the dual.
inline Hypermap dual(const Hypermap& h, const Sigma& sigma) {
  const Sigma inv = sigma.inverse();
  return validate(h.h(inv(0)), h.h(inv(1)), h.h(inv(2)));
}

/// Extends `start_a -> start_b` to a generator-equivariant map from the
/// flags of `a` onto those of `b`, if one exists.
inline std::optional<std::vector<Point>> extend_equivariant(const Hypermap& a, const Hypermap& b,
                                                            Point start_a, Point start_b) {
  constexpr Point unset = static_cast<Point>(-1);
  std::vector<Point> map(a.size(), unset);
  std::vector<Point> queue{start_a};
  map[start_a] = start_b;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Point x = queue[q];
    for (int i = 0; i < 3; ++i) {
      const Point y = a(i, x);
      const Point image = b(i, map[x]);
      if (map[y] == unset) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return std::nullopt;
      }
    }
  }
  return map;
}

/// First covering a -> b (searching images of flag 0 in increasing order).
inline std::optional<std::vector<Point>> find_covering(const Hypermap& a, const Hypermap& b) {
  if (a.size() % b.size() != 0) return std::nullopt;
  for (Point target = 0; target < b.size(); ++target) {
    if (auto map = extend_equivariant(a, b, 0, target)) return map;
  }
  return std::nullopt;
}

/// Cheap isomorphism invariant used to reject mismatches early.
inline std::array<std::vector<std::size_t>, 3> sorted_valencies(const Hypermap& h) {
  std::array<std::vector<std::size_t>, 3> v;
  for (int k = 0; k < 3; ++k) {
    v[static_cast<std::size_t>(k)] = face_valencies(h, k);
    std::sort(v[k].begin(), v[k].end());
  }
  return v;
}

inline std::optional<std::vector<Point>> find_isomorphism(const Hypermap& a, const Hypermap& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (sorted_valencies(a) != sorted_valencies(b)) return std::nullopt;
  return find_covering(a, b);
}

inline bool are_isomorphic(const Hypermap& a, const Hypermap& b) {
  return find_isomorphism(a, b).has_value();
}

namespace detail {

/// Breadth-first relabelling from `start` (generators tried h0, h1, h2).
/// Returns the relabelled generator table flattened as
/// [h0(0), h1(0), h2(0), h0(1), ...]; stops early and returns false as soon
/// as the partial code exceeds `bound` (when given).
inline bool bfs_code(const Hypermap& h, Point start, std::vector<Point>& code,
                     const std::vector<Point>* bound) {
  constexpr Point unset = static_cast<Point>(-1);
  const std::size_t n = h.size();
  std::vector<Point> label(n, unset);
  std::vector<Point> order;
  order.reserve(n);
  label[start] = 0;
  order.push_back(start);
  code.clear();
  bool tied = bound != nullptr;
  for (std::size_t q = 0; q < order.size(); ++q) {
    for (int i = 0; i < 3; ++i) {
      const Point y = h(i, order[q]);
      if (label[y] == unset) {
        label[y] = static_cast<Point>(order.size());
        order.push_back(y);
      }
      const Point value = label[y];
      if (tied) {
        const Point b = (*bound)[code.size()];
        if (value > b) return false;
        if (value < b) tied = false;
      }
      code.push_back(value);
    }
  }
  return true;
}

}  // namespace detail

/// The breadth-first code minimised over every start flag. Two hypermaps are
/// isomorphic iff their codes are equal.
inline std::vector<Point> canonical_code(const Hypermap& h) {
  std::vector<Point> best;
  std::vector<Point> code;
  detail::bfs_code(h, 0, best, nullptr);
  for (Point start = 1; start < h.size(); ++start) {
    if (detail::bfs_code(h, start, code, &best) && code < best) best.swap(code);
  }
  return best;
}

/// Relabelling of `h` whose generator table is its canonical code.
inline Hypermap canonical_form(const Hypermap& h) {
  const std::vector<Point> best = canonical_code(h);
  const std::size_t n = h.size();
  std::array<std::vector<Point>, 3> images;
  for (auto& img : images) img.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < 3; ++i) images[i][x] = best[3 * x + i];
  }
  return validate(n, std::move(images));
}

/// Relabels flags: flag x of `h` becomes flag relabel[x].
inline Hypermap relabel(const Hypermap& h, const std::vector<Point>& relabel) {
  std::array<std::vector<Point>, 3> images;
  for (auto& img : images) img.resize(h.size());
  for (Point x = 0; x < h.size(); ++x) {
    for (int i = 0; i < 3; ++i) images[static_cast<std::size_t>(i)][relabel[x]] = relabel[h(i, x)];
  }
  return validate(h.size(), std::move(images));
}

}  // namespace hypermaps

#endif  // HYPERMAPS_HYPERMAP_HPP
