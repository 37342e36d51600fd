#ifndef HYPERMAPS_CATALOG_HPP
#define HYPERMAPS_CATALOG_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "group.hpp"
#include "hypermap.hpp"
#include "quotients.hpp"
#include "theta.hpp"

namespace hypermaps {

struct NamedHypermap {
  std::string name;
  Hypermap map;
};

struct CatalogOptions {
  /// D_n and P_n for 1 <= n <= n_max.
  std::size_t n_max = 6;
  /// M_k for 1 <= k <= k_max.
  std::size_t k_max = 8;
  /// Wal and Pin of every regular member.
  bool include_transforms = true;
};

namespace detail {

inline std::string dual_name(const Sigma& s, const std::string& inner) {
  return s == Sigma::identity() ? inner : "D" + s.to_string() + "(" + inner + ")";
}

class CatalogBuilder {
 public:
  /// Adds `h` unless an isomorphic member is present; returns whether added.
  bool add(std::string name, Hypermap h) {
    auto code = canonical_code(h);
    if (!seen_.emplace(std::move(code), members_.size()).second) return false;
    members_.push_back({std::move(name), std::move(h)});
    return true;
  }

  std::vector<NamedHypermap> take() { return std::move(members_); }
  const std::vector<NamedHypermap>& members() const { return members_; }

 private:
  std::map<std::vector<Point>, std::size_t> seen_;
  std::vector<NamedHypermap> members_;
};

}  // namespace detail

/// Named hypermaps, pairwise non-isomorphic: the spherical regular
/// hypermaps D_n, P_n, T, C, O, D, I with all their dualities, the maps M_k,
/// and the Walsh and Pin transforms of all of these. The first name found
/// for an isomorphism class is kept.
inline std::vector<NamedHypermap> build_catalog(const CatalogOptions& options = {}) {
  std::vector<std::pair<std::string, Hypermap>> bases;
  for (std::size_t n = 1; n <= options.n_max; ++n) {
    bases.emplace_back("D" + std::to_string(n), build_dihedral(n));
  }
  for (std::size_t n = 1; n <= options.n_max; ++n) {
    bases.emplace_back("P" + std::to_string(n), build_prism(n));
  }
  for (const char* solid : {"T", "C", "O", "D", "I"}) {
    bases.emplace_back(solid, build_platonic(*parse_platonic(solid)));
  }

  detail::CatalogBuilder regular;
  for (const auto& [name, h] : bases) {
    for (const Sigma& s : Sigma::all()) regular.add(detail::dual_name(s, name), dual(h, s));
  }
  for (std::size_t k = 1; k <= options.k_max; ++k) regular.add("M" + std::to_string(k), build_mk(k));

  detail::CatalogBuilder all;
  for (const auto& m : regular.members()) all.add(m.name, m.map);
  if (options.include_transforms) {
    for (const auto& m : regular.members()) {
      all.add("Wal(" + m.name + ")", walsh(m.map));
      all.add("Pin(" + m.name + ")", pin(m.map));
    }
  }
  return all.take();
}

/// Resolves catalog-style names: "D3", "P4", "T", "M2", "D(02)(C)",
/// "Wal(P3)", "Pin(D(12)(D5))".
inline Hypermap build_named(std::string_view name) {
  const auto inner = [&](std::size_t prefix) {
    if (name.size() < prefix + 2 || name[prefix] != '(' || name.back() != ')') {
      throw Error(ErrorCode::ParseError, "malformed name '" + std::string(name) + "'");
    }
    return name.substr(prefix + 1, name.size() - prefix - 2);
  };
  const auto number = [&](std::size_t prefix) -> std::optional<std::size_t> {
    if (name.size() <= prefix) return std::nullopt;
    std::size_t v = 0;
    for (char c : name.substr(prefix)) {
      if (c < '0' || c > '9') return std::nullopt;
      v = 10 * v + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  if (name.starts_with("Wal(")) return walsh(build_named(inner(3)));
  if (name.starts_with("Pin(")) return pin(build_named(inner(3)));
  if (name.starts_with("D(")) {
    const auto close = name.find(')');
    const Sigma s = Sigma::parse(std::string(name.substr(1, close)));
    return dual(build_named(inner(close + 1)), s);
  }
  if (auto p = parse_platonic(name)) return build_platonic(*p);
  if (name.size() > 1) {
    if (auto n = number(1)) {
      if (*n > 0) {
        if (name[0] == 'D') return build_dihedral(*n);
        if (name[0] == 'P') return build_prism(*n);
        if (name[0] == 'M') return build_mk(*n);
      }
    }
  }
  throw Error(ErrorCode::ParseError, "unknown hypermap name '" + std::string(name) + "'");
}

// Verification against the published tables

struct VerificationField {
  std::string name;
  std::string expected;
  std::string computed;
  bool match() const { return expected == computed; }
};

struct VerificationRow {
  std::string table;
  /// Row number in the table (for the M_k check: k).
  std::size_t row = 0;
  /// Family parameter, for parameterised rows.
  std::optional<std::size_t> n;
  std::string construction;
  std::vector<VerificationField> fields;

  bool match() const {
    return std::all_of(fields.begin(), fields.end(), [](const auto& f) { return f.match(); });
  }
  std::string label() const {
    std::string s = table + " row " + std::to_string(row);
    if (n) s += " n=" + std::to_string(*n);
    return s + " " + construction;
  }
};

inline bool all_match(const std::vector<VerificationRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.match(); });
}

namespace detail {

inline std::string bool_string(bool b) { return b ? "true" : "false"; }

/// Instantiates a name template, replacing every 'n' placeholder "#" by `n`.
inline std::string instantiate(std::string pattern, std::size_t n) {
  for (std::size_t pos; (pos = pattern.find('#')) != std::string::npos;) {
    pattern.replace(pos, 1, std::to_string(n));
  }
  return pattern;
}

/// Published bipartite data (l1, l2; m; n), V1, V2, E, F, |Omega|.
struct Table2Values {
  std::size_t l1, l2, m, n, v1, v2, e, f, flags;
};

struct Table2Entry {
  std::size_t row;
  /// Construction; '#' stands for the family parameter.
  std::string construction;
  bool family;
  std::function<Table2Values(std::size_t)> expected;
};

inline std::vector<Table2Entry> table2_entries() {
  using V = Table2Values;
  const auto fixed = [](V v) { return [v](std::size_t) { return v; }; };
  return {
      {1, "Pin(D(02)(D#))", true, [](std::size_t n) { return V{1, 1, 2 * n, 2 * n, n, n, 1, 1, 4 * n}; }},
      {2, "Pin(P#)", true, [](std::size_t n) { return V{1, 2, 4, 2 * n, 2 * n, n, n, 2, 8 * n}; }},
      {3, "Pin(D(01)(T))", false, fixed({1, 2, 6, 6, 12, 6, 4, 4, 48})},
      {4, "Pin(D(01)(C))", false, fixed({1, 2, 6, 8, 24, 12, 8, 6, 96})},
      {5, "Pin(D(01)(D))", false, fixed({1, 2, 6, 10, 60, 30, 20, 12, 240})},
      {6, "Pin(T)", false, fixed({1, 3, 4, 6, 12, 4, 6, 4, 48})},
      {7, "Pin(C)", false, fixed({1, 3, 4, 8, 24, 8, 12, 6, 96})},
      {8, "Pin(D)", false, fixed({1, 3, 4, 10, 60, 20, 30, 12, 240})},
      {9, "Pin(D(02)(C))", false, fixed({1, 4, 4, 6, 24, 6, 12, 8, 96})},
      {10, "Pin(D(02)(D))", false, fixed({1, 5, 4, 6, 60, 12, 30, 20, 240})},
      {11, "Pin(D(12)(D#))", true, [](std::size_t n) { return V{1, n, 2, 2 * n, n, 1, n, 1, 4 * n}; }},
      {12, "Pin(D(02)(P#))", true, [](std::size_t n) { return V{1, n, 4, 4, 2 * n, 2, n, n, 8 * n}; }},
      {13, "Wal(P#)", true, [](std::size_t n) { return V{2, 2, 2, 2 * n, n, n, 2 * n, 2, 8 * n}; }},
      {14, "Wal(T)", false, fixed({2, 3, 2, 6, 6, 4, 12, 4, 48})},
      {15, "Wal(C)", false, fixed({2, 3, 2, 8, 12, 8, 24, 6, 96})},
      {16, "Wal(D)", false, fixed({2, 3, 2, 10, 30, 20, 60, 12, 240})},
      {17, "Wal(D(02)(C))", false, fixed({2, 4, 2, 6, 12, 6, 24, 8, 96})},
      {18, "Wal(D(02)(D))", false, fixed({2, 5, 2, 6, 30, 12, 60, 20, 240})},
      {19, "Wal(D(02)(P#))", true, [](std::size_t n) { return V{2, n, 2, 4, n, 2, 2 * n, n, 8 * n}; }},
      {20, "Wal(D(12)(T))", false, fixed({3, 3, 2, 4, 4, 4, 12, 6, 48})},
      {21, "Wal(D(12)(C))", false, fixed({3, 4, 2, 4, 8, 6, 24, 12, 96})},
      {22, "Wal(D(12)(D))", false, fixed({3, 5, 2, 4, 20, 12, 60, 30, 240})},
      {23, "Wal(D#)", true, [](std::size_t n) { return V{n, n, 2, 2, 1, 1, n, n, 4 * n}; }},
  };
}

/// Published closure cover, covering core, iota and Upsilon.
struct Table3Values {
  std::string closure_cover;
  HypermapType closure_type;
  std::size_t closure_flags;
  HypermapType core_type;
  std::size_t core_flags;
  long core_genus;
  std::size_t iota;
  GroupName upsilon;
};

struct Table3Entry {
  std::size_t row;
  std::string construction;
  bool family;
  std::function<Table3Values(std::size_t)> expected;
};

inline std::vector<Table3Entry> table3_entries() {
  using V = Table3Values;
  using T = HypermapType;
  using G = GroupName;
  const auto fixed = [](V v) { return [v](std::size_t) { return v; }; };
  const auto sq = [](std::size_t n) { return n * n; };
  const auto l = [](std::size_t n) { return static_cast<long>(n); };
  const V trivial_cover{"D(02)(D2)", {1, 2, 2}, 4, {}, 0, 0, 0, G::trivial()};
  const auto with_core = [&](T core, std::size_t flags, long genus, std::size_t iota, G group) {
    V v = trivial_cover;
    v.core_type = core;
    v.core_flags = flags;
    v.core_genus = genus;
    v.iota = iota;
    v.upsilon = group;
    return fixed(v);
  };
  return {
      {1, "Pin(D(02)(D#))", true,
       [=](std::size_t n) {
         return V{"D(02)(D" + std::to_string(2 * n) + ")", {1, 2 * n, 2 * n}, 4 * n, {1, 2 * n, 2 * n},
                  4 * n, 0, 1, G::trivial()};
       }},
      {2, "Pin(P#)", true,
       [=](std::size_t n) {
         if (n % 2 == 0) {
           return V{"D(02)(D4)", {1, 4, 4}, 8, {2, 4, 2 * n}, 8 * sq(n), (l(sq(n - 1)) + 1) / 2, n,
                    G::dihedral(n / 2)};
         }
         return V{"D(02)(D2)", {1, 2, 2}, 4, {2, 4, 2 * n}, 16 * sq(n), l(sq(n - 1)), 2 * n, G::dihedral(n)};
       }},
      {3, "Pin(D(01)(T))", false, fixed({"D(02)(D6)", {1, 6, 6}, 12, {2, 6, 6}, 192, 9, 4, G::klein_four()})},
      {4, "Pin(D(01)(C))", false, with_core({2, 6, 8}, 2304, 121, 24, G::sym4())},
      {5, "Pin(D(01)(D))", false, with_core({2, 6, 10}, 14400, 841, 60, G::alt5())},
      {6, "Pin(T)", false, with_core({3, 4, 6}, 576, 37, 12, G::alt4())},
      {7, "Pin(C)", false, fixed({"D(02)(D4)", {1, 4, 4}, 8, {3, 4, 8}, 1152, 85, 12, G::alt4()})},
      {8, "Pin(D)", false, with_core({3, 4, 10}, 14400, 1141, 60, G::alt5())},
      {9, "Pin(D(02)(C))", false, with_core({4, 4, 6}, 2304, 193, 24, G::sym4())},
      {10, "Pin(D(02)(D))", false, with_core({5, 4, 6}, 14400, 1381, 60, G::alt5())},
      {11, "Pin(D(12)(D#))", true,
       [=](std::size_t n) {
         V v = trivial_cover;
         v.core_type = {n, 2, 2 * n};
         v.core_flags = 4 * sq(n);
         v.core_genus = (l(n) - 1) * (l(n) - 2) / 2;
         v.iota = n;
         v.upsilon = G::cyclic(n);
         return v;
       }},
      {12, "Pin(D(02)(P#))", true,
       [=](std::size_t n) {
         return V{"D(02)(D4)", {1, 4, 4}, 8, {n, 4, 4}, 8 * sq(n), l(sq(n - 1)), n, G::cyclic(n)};
       }},
      {13, "Wal(P#)", true,
       [=](std::size_t n) {
         return V{"P" + std::to_string(2 * n), {2, 2, 2 * n}, 8 * n, {2, 2, 2 * n}, 8 * n, 0, 1, G::trivial()};
       }},
      {14, "Wal(T)", false, with_core({6, 2, 6}, 576, 25, 12, G::alt4())},
      {15, "Wal(C)", false, with_core({6, 2, 8}, 2304, 121, 24, G::sym4())},
      {16, "Wal(D)", false, with_core({6, 2, 10}, 14400, 841, 60, G::alt5())},
      {17, "Wal(D(02)(C))", false, fixed({"P6", {2, 2, 6}, 24, {4, 2, 6}, 384, 9, 4, G::klein_four()})},
      {18, "Wal(D(02)(D))", false, with_core({10, 2, 6}, 14400, 841, 60, G::alt5())},
      {19, "Wal(D(02)(P#))", true,
       [=](std::size_t n) {
         if (n % 2 == 0) {
           return V{"P4", {2, 2, 4}, 16, {n, 2, 4}, 4 * sq(n), l(sq(n - 2)) / 4, n / 2, G::cyclic(n / 2)};
         }
         return V{"D(02)(D2)", {1, 2, 2}, 4, {2 * n, 2, 4}, 16 * sq(n), l(sq(n - 1)), 2 * n, G::dihedral(n)};
       }},
      {20, "Wal(D(12)(T))", false, fixed({"C", {3, 2, 4}, 48, {3, 2, 4}, 48, 0, 1, G::trivial()})},
      {21, "Wal(D(12)(C))", false, with_core({12, 2, 4}, 2304, 97, 24, G::sym4())},
      {22, "Wal(D(12)(D))", false, with_core({15, 2, 4}, 14400, 661, 60, G::alt5())},
      {23, "Wal(D#)", true,
       [=](std::size_t n) {
         return V{"D(02)(P" + std::to_string(n) + ")", {n, 2, 2}, 4 * n, {n, 2, 2}, 4 * n, 0, 1, G::trivial()};
       }},
  };
}

template <class Entry, class Check>
std::vector<VerificationRow> run_entries(const std::vector<Entry>& entries, const std::string& table,
                                         std::size_t n_max, Check check) {
  std::vector<VerificationRow> rows;
  for (const auto& entry : entries) {
    const std::size_t last = entry.family ? n_max : 1;
    for (std::size_t n = 1; n <= last; ++n) {
      VerificationRow row;
      row.table = table;
      row.row = entry.row;
      if (entry.family) row.n = n;
      row.construction = instantiate(entry.construction, n);
      check(row, build_named(row.construction), entry.expected(n));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace detail

/// Bipartite-type, V1, V2, E, F and |Omega| of every table2 entry,
/// with bipartite-regularity and chi = 2. Hypervertex classes are compared
/// as unordered (valency, count) pairs. A trailing row per n checks that
/// Wal(D(02)(D_n)) and Pin(D(12)(D_n)) are isomorphic.
inline std::vector<VerificationRow> verify_table2(std::size_t n_max) {
  auto rows = detail::run_entries(
      detail::table2_entries(), "table2", n_max,
      [](VerificationRow& row, const Hypermap& k, const detail::Table2Values& e) {
        std::array<std::pair<std::size_t, std::size_t>, 2> classes{std::pair{e.l1, e.v1}, std::pair{e.l2, e.v2}};
        std::sort(classes.begin(), classes.end());
        const BipartiteType expected_type{classes[0].first, classes[1].first, e.m, e.n};
        const auto counts = bipartite_counts(k);
        const auto str = [](std::size_t v) { return std::to_string(v); };
        row.fields.push_back({"bipartite_type", expected_type.to_string(),
                              counts ? counts->type.to_string() : "none"});
        row.fields.push_back({"V1", str(classes[0].second), counts ? str(counts->v1) : "none"});
        row.fields.push_back({"V2", str(classes[1].second), counts ? str(counts->v2) : "none"});
        row.fields.push_back({"E", str(e.e), counts ? str(counts->e) : "none"});
        row.fields.push_back({"F", str(e.f), counts ? str(counts->f) : "none"});
        row.fields.push_back({"flags", str(e.flags), str(k.size())});
        row.fields.push_back({"bipartite_regular", "true", detail::bool_string(is_bipartite_regular(k))});
        row.fields.push_back({"chi", "2", std::to_string(euler_characteristic(k))});
      });
  for (std::size_t n = 1; n <= n_max; ++n) {
    VerificationRow row;
    row.table = "table2";
    row.row = 11;
    row.n = n;
    const std::string wal = "Wal(D(02)(D" + std::to_string(n) + "))";
    const std::string pin_name = "Pin(D(12)(D" + std::to_string(n) + "))";
    row.construction = wal + " = " + pin_name;
    row.fields.push_back({"isomorphic", "true",
                          detail::bool_string(are_isomorphic(build_named(wal), build_named(pin_name)))});
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Closure cover, covering core, iota and Upsilon of every table3 entry.
inline std::vector<VerificationRow> verify_table3(std::size_t n_max) {
  return detail::run_entries(
      detail::table3_entries(), "table3", n_max,
      [](VerificationRow& row, const Hypermap& k, const detail::Table3Values& e) {
        const auto mon = monodromy(k);
        const Hypermap cc = closure_cover(mon);
        const Hypermap core = covering_core(mon);
        const auto core_surface = surface_class(core);
        const auto str = [](auto v) { return std::to_string(v); };
        row.fields.push_back({"closure_cover", e.closure_cover,
                              are_isomorphic(cc, build_named(e.closure_cover)) ? e.closure_cover
                                                                                : "not " + e.closure_cover});
        row.fields.push_back({"closure_type", e.closure_type.to_string(), type_of(cc).to_string()});
        row.fields.push_back({"closure_flags", str(e.closure_flags), str(cc.size())});
        row.fields.push_back({"closure_regular", "true", detail::bool_string(is_regular(cc))});
        row.fields.push_back({"core_type", e.core_type.to_string(), type_of(core).to_string()});
        row.fields.push_back({"core_flags", str(e.core_flags), str(core.size())});
        row.fields.push_back({"core_genus", str(e.core_genus), str(core_surface.genus)});
        row.fields.push_back({"core_orientable", "true", detail::bool_string(core_surface.orientable)});
        const auto irr = irregularity(k, mon);
        row.fields.push_back({"iota", str(e.iota), str(irr.index)});
        row.fields.push_back({"upsilon", e.upsilon.to_string(), irr.group.to_string()});
      });
}

/// Type and genus of M_k, and iota and Upsilon of Pin(M_k) and Wal(M_k).
inline std::vector<VerificationRow> verify_theorem_mk(std::size_t k_max) {
  std::vector<VerificationRow> rows;
  for (std::size_t k = 1; k <= k_max; ++k) {
    VerificationRow row;
    row.table = "mk";
    row.row = k;
    row.construction = "M" + std::to_string(k);
    const bool odd = k % 2 == 1;
    const std::size_t g = odd ? (k - 1) / 2 : k / 2;
    const Hypermap m = build_mk(k);
    const auto surface = surface_class(m);
    const auto str = [](auto v) { return std::to_string(v); };
    row.fields.push_back({"type", HypermapType{odd ? k : 2 * k, 2, 2 * k}.to_string(), type_of(m).to_string()});
    row.fields.push_back({"orientable", "true", detail::bool_string(surface.orientable)});
    row.fields.push_back({"genus", str(g), str(surface.genus)});
    const auto pin_irr = irregularity(pin(m));
    const auto wal_irr = irregularity(walsh(m));
    row.fields.push_back({"iota_pin", str(odd ? 2 * g + 1 : 4 * g), str(pin_irr.index)});
    row.fields.push_back({"iota_wal", str(odd ? 4 * g + 2 : 4 * g), str(wal_irr.index)});
    row.fields.push_back({"upsilon_pin", GroupName::cyclic(odd ? k : 2 * k).to_string(), pin_irr.group.to_string()});
    row.fields.push_back({"upsilon_wal", GroupName::cyclic(2 * k).to_string(), wal_irr.group.to_string()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hypermaps

#endif  // HYPERMAPS_CATALOG_HPP
