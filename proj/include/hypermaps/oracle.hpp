#ifndef HYPERMAPS_ORACLE_HPP
#define HYPERMAPS_ORACLE_HPP

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "error.hpp"
#include "hypermap.hpp"
#include "theta.hpp"

namespace hypermaps {

/// All fixed-point-free involutions of {0, ..., n-1}, n even, as image
/// vectors in lexicographic order.
inline std::vector<std::vector<Point>> fixed_point_free_involutions(std::size_t n) {
  std::vector<std::vector<Point>> out;
  if (n % 2 != 0) return out;
  constexpr Point unset = static_cast<Point>(-1);
  std::vector<Point> images(n, unset);
  const auto recurse = [&](auto&& self) -> void {
    Point first = 0;
    while (first < n && images[first] != unset) ++first;
    if (first == n) {
      out.push_back(images);
      return;
    }
    for (Point partner = first + 1; partner < n; ++partner) {
      if (images[partner] != unset) continue;
      images[first] = partner;
      images[partner] = first;
      self(self);
      images[first] = unset;
      images[partner] = unset;
    }
  };
  recurse(recurse);
  return out;
}

struct OracleSizeReport {
  std::size_t flags = 0;
  std::size_t raw_triples = 0;
  std::size_t transitive_triples = 0;
  /// Isomorphism classes, deduplicated by canonical code.
  std::size_t classes = 0;
  /// Isomorphism classes from the second pass (h0 fixed, pairwise
  /// isomorphism tests).
  std::size_t classes_second_pass = 0;
  std::size_t spherical = 0;
  std::size_t spherical_uniform = 0;
  std::size_t spherical_bipartite = 0;
  std::size_t spherical_bipartite_uniform = 0;
};

struct OracleReport {
  std::vector<OracleSizeReport> sizes;
  /// Spherical uniform but not regular.
  std::vector<std::string> uniform_counterexamples;
  /// Spherical bipartite-uniform but not bipartite-regular.
  std::vector<std::string> bipartite_counterexamples;
  /// Spherical bipartite but isomorphic to no Wal(G) or Pin(G).
  std::vector<std::string> unmatched_bipartite;

  bool passed() const {
    bool counts_agree = true;
    for (const auto& s : sizes) counts_agree = counts_agree && s.classes == s.classes_second_pass;
    return counts_agree && uniform_counterexamples.empty() && bipartite_counterexamples.empty() &&
           unmatched_bipartite.empty();
  }
};

namespace detail {

inline std::string describe(const Hypermap& h) {
  std::string s;
  for (int i = 0; i < 3; ++i) s += (i ? " h" : "h") + std::to_string(i) + "=" + h.h(i).to_cycle_string();
  return s;
}

inline bool is_transitive(const std::array<const std::vector<Point>*, 3>& h) {
  const std::size_t n = h[0]->size();
  std::vector<char> seen(n, 0);
  std::vector<Point> queue{0};
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto* g : h) {
      const Point y = (*g)[queue[q]];
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == n;
}

/// Pass 1: every triple, deduplicated by canonical code.
inline std::vector<Hypermap> classes_by_canonical_code(std::size_t n, OracleSizeReport& report) {
  const auto involutions = fixed_point_free_involutions(n);
  std::map<std::vector<Point>, std::size_t> seen;
  std::vector<Hypermap> classes;
  for (const auto& a : involutions) {
    for (const auto& b : involutions) {
      for (const auto& c : involutions) {
        ++report.raw_triples;
        if (!is_transitive({&a, &b, &c})) continue;
        ++report.transitive_triples;
        Hypermap h = validate(n, {a, b, c});
        if (seen.emplace(canonical_code(h), classes.size()).second) classes.push_back(std::move(h));
      }
    }
  }
  return classes;
}

/// Pass 2: h0 fixed to (01)(23)...; every hypermap is conjugate to one of
/// these. Deduplicated by explicit isomorphism search within buckets of
/// equal valency multisets.
inline std::size_t count_classes_by_search(std::size_t n) {
  const auto involutions = fixed_point_free_involutions(n);
  std::vector<Point> h0(n);
  for (Point x = 0; x < n; ++x) h0[x] = x ^ 1u;
  std::map<std::array<std::vector<std::size_t>, 3>, std::vector<Hypermap>> buckets;
  std::size_t count = 0;
  for (const auto& b : involutions) {
    for (const auto& c : involutions) {
      if (!is_transitive({&h0, &b, &c})) continue;
      Hypermap h = validate(n, {h0, b, c});
      auto& bucket = buckets[sorted_valencies(h)];
      bool found = false;
      for (const auto& rep : bucket) {
        if (find_covering(h, rep)) {
          found = true;
          break;
        }
      }
      if (!found) {
        bucket.push_back(std::move(h));
        ++count;
      }
    }
  }
  return count;
}

}  // namespace detail

/// Exhaustive check of the spherical classification at every even size
/// up to `max_flags` (at most 8). Wal/Pin references are built from every
/// hypermap of at most max_flags/2 flags found by the enumeration.
inline OracleReport brute_oracle(std::size_t max_flags) {
  if (max_flags > 8) throw Error(ErrorCode::LimitExceeded, "brute force is capped at 8 flags");
  OracleReport report;
  std::vector<std::vector<Hypermap>> classes_by_size(max_flags + 1);
  std::set<std::vector<Point>> transform_codes;
  for (std::size_t n = 2; n <= max_flags; n += 2) {
    OracleSizeReport size;
    size.flags = n;
    classes_by_size[n] = detail::classes_by_canonical_code(n, size);
    size.classes = classes_by_size[n].size();
    size.classes_second_pass = detail::count_classes_by_search(n);
    if (2 * n <= max_flags) {
      for (const auto& g : classes_by_size[n]) {
        transform_codes.insert(canonical_code(walsh(g)));
        transform_codes.insert(canonical_code(pin(g)));
      }
    }
    for (const auto& h : classes_by_size[n]) {
      if (euler_characteristic(h) != 2) continue;
      ++size.spherical;
      if (is_uniform(h)) {
        ++size.spherical_uniform;
        if (!is_regular(h)) report.uniform_counterexamples.push_back(detail::describe(h));
      }
      if (!is_bipartite(h)) continue;
      ++size.spherical_bipartite;
      if (is_bipartite_uniform(h)) {
        ++size.spherical_bipartite_uniform;
        if (!is_bipartite_regular(h)) report.bipartite_counterexamples.push_back(detail::describe(h));
      }
      if (!transform_codes.contains(canonical_code(h))) {
        report.unmatched_bipartite.push_back(detail::describe(h));
      }
    }
    report.sizes.push_back(size);
  }
  return report;
}

}  // namespace hypermaps

#endif  // HYPERMAPS_ORACLE_HPP
