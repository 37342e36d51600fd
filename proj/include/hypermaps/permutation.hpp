#ifndef HYPERMAPS_PERMUTATION_HPP
#define HYPERMAPS_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hypermaps {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
///
/// Permutations act on the right: `x * (a * b)` means "apply a, then b",
/// so `(a * b)[x] == b[a[x]]`. This matches the right actions of the
/// monodromy group on flags.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) {
        throw Error(ErrorCode::InvalidImage, "image sequence is not a bijection");
      }
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(std::move(images), Unchecked{});
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (const auto& cycle : cycles) {
      if (cycle.size() == 0) continue;
      const Point* first = cycle.begin();
      for (const Point* it = cycle.begin(); it != cycle.end(); ++it) {
        const Point* next = (it + 1 == cycle.end()) ? first : it + 1;
        if (*it >= degree) throw Error(ErrorCode::InvalidImage, "cycle point out of range");
        images[*it] = *next;
      }
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (Point x = 0; x < images_.size(); ++x) {
      if (images_[x] != x) return false;
    }
    return true;
  }

  bool is_involution() const noexcept {
    for (Point x = 0; x < images_.size(); ++x) {
      if (images_[images_[x]] != x) return false;
    }
    return true;
  }

  bool has_fixed_point() const noexcept {
    for (Point x = 0; x < images_.size(); ++x) {
      if (images_[x] == x) return true;
    }
    return false;
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (Point x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
    return Permutation(std::move(inv), Unchecked{});
  }

  /// Order of the permutation (lcm of its cycle lengths).
  std::size_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t result = 1;
    for (Point x = 0; x < images_.size(); ++x) {
      if (seen[x]) continue;
      std::size_t length = 0;
      for (Point y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        ++length;
      }
      result = std::lcm(result, length);
    }
    return result;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
      throw Error(ErrorCode::DegreeMismatch, "cannot compose permutations of different degree");
    }
    std::vector<Point> images(a.degree());
    for (Point x = 0; x < images.size(); ++x) images[x] = b.images_[a.images_[x]];
    return Permutation(std::move(images), Unchecked{});
  }

  /// g^-1 * a * g
  Permutation conjugate_by(const Permutation& g) const {
    std::vector<Point> images(degree());
    for (Point x = 0; x < images.size(); ++x) images[g[x]] = g[images_[x]];
    return Permutation(std::move(images), Unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (Point x = 0; x < images_.size(); ++x) {
      if (seen[x] || images_[x] == x) continue;
      out += '(';
      for (Point y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        if (y != x) out += ' ';
        out += std::to_string(y);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_cycle_string();
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    // FNV-1a over the images.
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hypermaps

#endif  // HYPERMAPS_PERMUTATION_HPP
