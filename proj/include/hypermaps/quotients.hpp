#ifndef HYPERMAPS_QUOTIENTS_HPP
#define HYPERMAPS_QUOTIENTS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "constructions.hpp"
#include "error.hpp"
#include "group.hpp"
#include "hypermap.hpp"
#include "theta.hpp"

namespace hypermaps {

/// Mon(h) = <h0, h1, h2>.
inline FiniteGroup monodromy(const Hypermap& h, std::size_t max_order = 0) {
  return generate_group({h.h(0), h.h(1), h.h(2)}, h.size(), max_order);
}

/// Smallest regular hypermap covering `h`: Mon(h) acting on itself by right
/// multiplication, flags in the enumeration order of Mon(h).
inline Hypermap covering_core(const FiniteGroup& mon) {
  std::array<std::vector<Point>, 3> images;
  for (int i = 0; i < 3; ++i) {
    auto& img = images[static_cast<std::size_t>(i)];
    img.resize(mon.order());
    const Permutation& gen = mon.generators()[static_cast<std::size_t>(i)];
    for (std::size_t e = 0; e < mon.order(); ++e) {
      img[e] = static_cast<Point>(*mon.index_of(mon.elements()[e] * gen));
    }
  }
  return validate(mon.order(), std::move(images));
}

inline Hypermap covering_core(const Hypermap& h) { return covering_core(monodromy(h)); }

/// Largest regular hypermap covered by `h`: Mon(h) modulo the normal closure
/// of the stabiliser of flag 0, acting on cosets.
inline Hypermap closure_cover(const FiniteGroup& mon) {
  const FiniteGroup stabilizer = point_stabilizer(mon, 0);
  const FiniteGroup closure = normal_closure(mon, stabilizer.generators());
  const QuotientAction q = quotient_action(mon, closure);
  const auto& g = q.generator_images;
  return validate(g[0], g[1], g[2]);
}

inline Hypermap closure_cover(const Hypermap& h) { return closure_cover(monodromy(h)); }

struct IrregularityReport {
  /// iota = |Mon| / |flags|.
  std::size_t index = 1;
  /// Upsilon, realised as the stabiliser of flag 0 in Mon.
  GroupName group;
  std::size_t lower_group_order = 1;
  std::size_t upper_group_order = 1;
};

inline IrregularityReport irregularity(const Hypermap& h, const FiniteGroup& mon) {
  if (!is_bipartite_regular(h)) {
    throw Error(ErrorCode::NotBipartiteRegular, "hypermap is not bipartite-regular");
  }
  const FiniteGroup stabilizer = point_stabilizer(mon, 0);
  const FiniteGroup closure = normal_closure(mon, stabilizer.generators());
  IrregularityReport r;
  r.index = mon.order() / h.size();
  r.group = recognize_group(stabilizer);
  r.lower_group_order = stabilizer.order();
  r.upper_group_order = closure.order() / r.index;
  return r;
}

inline IrregularityReport irregularity(const Hypermap& h) { return irregularity(h, monodromy(h)); }

/// Group generated by t1, t2, t0t1t0, t0t2t0 restricted to the colour class
/// of flag 0 of a vertex-bipartite hypermap.
inline FiniteGroup delta0_monodromy(const Hypermap& h) {
  const auto color = theta_coloring(h, ParityVector::vertex_bipartite());
  if (!color) throw Error(ErrorCode::NotBipartite, "hypermap is not vertex-bipartite");
  std::vector<Point> index(h.size(), 0);
  std::vector<Point> members;
  for (Point x = 0; x < h.size(); ++x) {
    if ((*color)[x] == 0) {
      index[x] = static_cast<Point>(members.size());
      members.push_back(x);
    }
  }
  std::array<std::vector<Point>, 4> images;
  for (auto& img : images) img.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Point x = members[i];
    images[0][i] = index[h(1, x)];
    images[1][i] = index[h(2, x)];
    images[2][i] = index[h(0, h(1, h(0, x)))];
    images[3][i] = index[h(0, h(2, h(0, x)))];
  }
  std::vector<Permutation> gens;
  for (auto& img : images) gens.emplace_back(std::move(img));
  return generate_group(gens, members.size());
}

struct QuotientSummary {
  std::size_t flags = 0;
  HypermapType type;
  SurfaceClass surface;
};

inline QuotientSummary summarize(const Hypermap& h) {
  return {h.size(), type_of(h), surface_class(h)};
}

struct AnalysisReport {
  std::size_t flags = 0;
  HypermapType type;
  FaceCounts counts;
  bool uniform = false;
  SurfaceClass surface;
  bool is_map = false;
  /// Conservativity for each of the seven parity vectors, in ParityVector::all() order.
  std::array<bool, 7> theta_conservative{};
  std::optional<BipartiteCounts> bipartite;
  bool regular = false;
  bool bipartite_regular = false;
  bool bipartite_chiral = false;
  std::size_t automorphism_count = 0;
  /// Absent when Mon(h) exceeds the analysis limit.
  std::optional<std::size_t> monodromy_order;
  std::optional<IrregularityReport> irregularity;
  std::optional<QuotientSummary> closure_cover;
  std::optional<QuotientSummary> covering_core;
};

struct AnalysisOptions {
  /// Upper bound on |Mon(h)| for the quotient computations.
  std::size_t max_monodromy_order = 200'000;
};

inline AnalysisReport analyze(const Hypermap& h, const AnalysisOptions& options = {}) {
  AnalysisReport r;
  r.flags = h.size();
  r.type = type_of(h);
  r.counts = face_counts(h);
  r.uniform = is_uniform(h);
  r.surface = surface_class(h);
  r.is_map = is_map(h);
  const auto parities = ParityVector::all();
  for (std::size_t i = 0; i < parities.size(); ++i) {
    r.theta_conservative[i] = is_theta_conservative(h, parities[i]);
  }
  r.bipartite = bipartite_counts(h);
  r.regular = is_regular(h);
  r.bipartite_regular = is_bipartite_regular(h);
  r.bipartite_chiral = is_bipartite(h) && is_bipartite_chiral(h);
  r.automorphism_count = automorphisms(h).order();

  std::optional<FiniteGroup> mon;
  try {
    mon = monodromy(h, options.max_monodromy_order);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GroupTooLarge) throw;
  }
  if (mon) {
    r.monodromy_order = mon->order();
    if (r.bipartite_regular) r.irregularity = irregularity(h, *mon);
    r.closure_cover = summarize(closure_cover(*mon));
    r.covering_core = summarize(covering_core(*mon));
  }
  return r;
}

}  // namespace hypermaps

#endif  // HYPERMAPS_QUOTIENTS_HPP
