#ifndef HYPERMAPS_TODD_COXETER_HPP
#define HYPERMAPS_TODD_COXETER_HPP

#include <array>
#include <cstddef>
#include <deque>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace hypermaps {

/// <R0, R1, R2 | R0^2 = R1^2 = R2^2 = 1, relators>. The squares are implicit.
struct Presentation {
  std::vector<std::vector<int>> relators;

  /// (R1R2)^l, (R2R0)^m, (R0R1)^n.
  static Presentation of_type(std::size_t l, std::size_t m, std::size_t n) {
    Presentation p;
    p.relators.push_back(power({1, 2}, l));
    p.relators.push_back(power({2, 0}, m));
    p.relators.push_back(power({0, 1}, n));
    return p;
  }

  static std::vector<int> power(const std::vector<int>& word, std::size_t k) {
    std::vector<int> out;
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), word.begin(), word.end());
    return out;
  }

  /// Comma separated words over {a, b, c}, e.g. "bcbc,cacaca,abababab".
  static Presentation parse(std::string_view text) {
    Presentation p;
    std::vector<int> word;
    const auto flush = [&] {
      if (word.empty()) throw Error(ErrorCode::ParseError, "empty relator in '" + std::string(text) + "'");
      p.relators.push_back(std::move(word));
      word.clear();
    };
    for (char c : text) {
      if (c == ' ') continue;
      if (c == ',') {
        flush();
      } else if (c >= 'a' && c <= 'c') {
        word.push_back(c - 'a');
      } else {
        throw Error(ErrorCode::ParseError,
                    std::string("unexpected character '") + c + "' in relators");
      }
    }
    flush();
    return p;
  }
};

/// Closed coset table: rows[c][i] is the coset reached from c by R_i.
/// Coset 0 is the trivial subgroup; cosets are numbered breadth-first.
struct CosetTable {
  std::vector<std::array<Point, 3>> rows;

  std::size_t size() const noexcept { return rows.size(); }

  Permutation column(int i) const {
    std::vector<Point> images(rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c) images[c] = rows[c][static_cast<std::size_t>(i)];
    return Permutation(std::move(images));
  }
};

namespace detail {

/// HLT enumeration of the cosets of the trivial subgroup. Generators are
/// involutions, so every definition c.R_i = d also records d.R_i = c.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t limit) : relators_(p.relators), limit_(limit) {
    new_coset();
  }

  CosetTable run() {
    do {
      for (std::size_t c = 0; c < table_.size(); ++c) {
        if (!alive(c)) continue;
        for (const auto& r : relators_) {
          scan_and_fill(c, r);
          if (!alive(c)) break;
        }
        if (!alive(c)) continue;
        for (int x = 0; x < 3; ++x) {
          if (table_[c][x] == none) define(c, x);
        }
      }
    } while (!closed());
    return compact();
  }

 private:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  bool alive(std::size_t c) const { return parent_[c] == c; }

  std::size_t find(std::size_t c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  std::size_t new_coset() {
    if (table_.size() >= limit_) {
      throw Error(ErrorCode::LimitExceeded,
                  "coset table did not close within " + std::to_string(limit_) + " cosets");
    }
    table_.push_back({none, none, none});
    parent_.push_back(table_.size() - 1);
    return table_.size() - 1;
  }

  void define(std::size_t c, int x) {
    const std::size_t d = new_coset();
    table_[c][x] = d;
    table_[d][x] = c;
  }

  void scan_and_fill(std::size_t c, const std::vector<int>& word) {
    std::size_t f = c;
    std::size_t b = c;
    std::size_t i = 0;
    std::size_t j = word.size();  // one past the last unscanned letter
    for (;;) {
      while (i < j && table_[f][word[i]] != none) f = table_[f][word[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][word[j - 1]] != none) b = table_[b][word[--j]];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        const int x = word[i];
        table_[f][x] = b;
        table_[b][x] = f;
        return;
      }
      define(f, word[i]);
    }
  }

  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      const std::size_t e = queue_.front();
      queue_.pop_front();
      for (int x = 0; x < 3; ++x) {
        if (table_[e][x] == none) continue;
        const std::size_t f = table_[e][x];
        table_[f][x] = none;
        const std::size_t e1 = find(e);
        const std::size_t f1 = find(f);
        if (table_[e1][x] != none) {
          merge(f1, table_[e1][x]);
        } else if (table_[f1][x] != none) {
          merge(e1, table_[f1][x]);
        } else {
          table_[e1][x] = f1;
          table_[f1][x] = e1;
        }
      }
    }
  }

  bool closed() {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < 3; ++x) {
        if (table_[c][x] == none || !alive(table_[c][x])) return false;
      }
      for (const auto& r : relators_) {
        std::size_t d = c;
        for (int x : r) d = table_[d][x];
        if (d != c) return false;
      }
    }
    return true;
  }

  CosetTable compact() const {
    std::vector<std::size_t> label(table_.size(), none);
    std::vector<std::size_t> order{0};
    label[0] = 0;
    for (std::size_t q = 0; q < order.size(); ++q) {
      for (int x = 0; x < 3; ++x) {
        const std::size_t d = table_[order[q]][x];
        if (label[d] == none) {
          label[d] = order.size();
          order.push_back(d);
        }
      }
    }
    CosetTable out;
    out.rows.resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int x = 0; x < 3; ++x) {
        out.rows[k][x] = static_cast<Point>(label[table_[order[k]][x]]);
      }
    }
    return out;
  }

  std::vector<std::vector<int>> relators_;
  std::size_t limit_;
  std::vector<std::array<std::size_t, 3>> table_;
  std::vector<std::size_t> parent_;
  std::deque<std::size_t> queue_;
};

}  // namespace detail

inline constexpr std::size_t default_coset_limit = 1'000'000;

/// Enumerates the group <R0, R1, R2 | squares, relators> acting on itself.
/// Throws LimitExceeded when more than `coset_limit` cosets are defined.
inline CosetTable todd_coxeter(const Presentation& p, std::size_t coset_limit = default_coset_limit) {
  if (coset_limit == 0) throw Error(ErrorCode::LimitExceeded, "coset limit must be positive");
  for (const auto& r : p.relators) {
    if (r.empty()) throw Error(ErrorCode::ParseError, "empty relator");
    for (int x : r) {
      if (x < 0 || x > 2) throw Error(ErrorCode::ParseError, "generator index out of range");
    }
  }
  return detail::CosetEnumerator(p, coset_limit).run();
}

}  // namespace hypermaps

#endif  // HYPERMAPS_TODD_COXETER_HPP
