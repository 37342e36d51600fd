#ifndef HYPERMAPS_IO_HPP
#define HYPERMAPS_IO_HPP

#include <array>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "hypermap.hpp"
#include "json.hpp"
#include "quotients.hpp"
#include "theta.hpp"

namespace hypermaps {

// Hypermap documents
//
//   hypermap <n_flags>
//   h0: <n_flags images>
//   h1: ...
//   h2: ...
//
// Images are 0-indexed. Blank lines and lines starting with '#' are ignored.
// The JSON form {"n_flags": n, "h0": [...], "h1": [...], "h2": [...]} is
// accepted as well.

inline std::string to_text(const Hypermap& h) {
  std::ostringstream out;
  out << "hypermap " << h.size() << '\n';
  for (int i = 0; i < 3; ++i) {
    out << 'h' << i << ':';
    for (Point x : h.h(i).images()) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const Hypermap& h) {
  nlohmann::json j;
  j["n_flags"] = h.size();
  for (int i = 0; i < 3; ++i) {
    const auto images = h.h(i).images();
    j["h" + std::to_string(i)] = std::vector<Point>(images.begin(), images.end());
  }
  return j;
}

namespace detail {

inline Hypermap parse_json_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n_flags") || !j["n_flags"].is_number_unsigned()) {
    throw Error(ErrorCode::ParseError, "field 'n_flags': missing or not a non-negative integer");
  }
  const auto n = j["n_flags"].get<std::size_t>();
  std::array<std::vector<Point>, 3> images;
  for (int i = 0; i < 3; ++i) {
    const std::string key = "h" + std::to_string(i);
    if (!j.contains(key) || !j[key].is_array()) {
      throw Error(ErrorCode::ParseError, "field '" + key + "': missing or not an array");
    }
    for (const auto& v : j[key]) {
      if (!v.is_number_unsigned()) {
        throw Error(ErrorCode::ParseError, "field '" + key + "': non-integer image");
      }
      images[static_cast<std::size_t>(i)].push_back(v.get<Point>());
    }
  }
  return validate(n, std::move(images));
}

inline std::vector<Point> parse_images(std::istringstream& in, std::size_t line_no,
                                       const std::string& field) {
  std::vector<Point> images;
  std::string token;
  while (in >> token) {
    std::size_t value = 0;
    std::size_t used = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-') {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", field '" + field +
                                             "': '" + token + "' is not a flag index");
    }
    images.push_back(static_cast<Point>(value));
  }
  return images;
}

}  // namespace detail

inline Hypermap parse_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return detail::parse_json_document(text);

  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n_flags;
  std::array<std::optional<std::vector<Point>>, 3> images;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (!n_flags) {
      std::size_t n = 0;
      if (head != "hypermap" || !(in >> n)) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected 'hypermap <n_flags>'");
      }
      n_flags = n;
      continue;
    }
    if (head.size() != 3 || head[0] != 'h' || head[1] < '0' || head[1] > '2' || head[2] != ':') {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'h0:', 'h1:' or 'h2:', got '" +
                      head + "'");
    }
    const auto i = static_cast<std::size_t>(head[1] - '0');
    if (images[i]) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": duplicate field '" + head.substr(0, 2) + "'");
    }
    images[i] = detail::parse_images(in, line_no, head.substr(0, 2));
    if (images[i]->size() != *n_flags) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", field '" +
                                             head.substr(0, 2) + "': " +
                                             std::to_string(images[i]->size()) + " images, expected " +
                                             std::to_string(*n_flags));
    }
  }
  if (!n_flags) throw Error(ErrorCode::ParseError, "empty document");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!images[i]) {
      throw Error(ErrorCode::ParseError, "missing field 'h" + std::to_string(i) + "'");
    }
  }
  return validate(*n_flags, {std::move(*images[0]), std::move(*images[1]), std::move(*images[2])});
}

// Analysis reports

inline nlohmann::json to_json(const HypermapType& t) { return {t.l, t.m, t.n}; }

inline nlohmann::json to_json(const SurfaceClass& s) {
  return {{"euler_characteristic", s.euler_characteristic},
          {"orientable", s.orientable},
          {"genus", s.genus}};
}

inline nlohmann::json to_json(const QuotientSummary& q) {
  return {{"flags", q.flags}, {"type", to_json(q.type)}, {"surface", to_json(q.surface)}};
}

inline nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["flags"] = r.flags;
  j["type"] = to_json(r.type);
  j["hypervertices"] = r.counts.vertices;
  j["hyperedges"] = r.counts.edges;
  j["hyperfaces"] = r.counts.faces;
  j["uniform"] = r.uniform;
  j["surface"] = to_json(r.surface);
  j["map"] = r.is_map;
  nlohmann::json theta = nlohmann::json::object();
  const auto parities = ParityVector::all();
  for (std::size_t i = 0; i < parities.size(); ++i) theta[parities[i].bits()] = r.theta_conservative[i];
  j["theta_conservative"] = theta;
  if (r.bipartite) {
    const auto& b = *r.bipartite;
    j["bipartite_type"] = {b.type.l1, b.type.l2, b.type.m, b.type.n};
    j["bipartite_counts"] = {{"V1", b.v1}, {"V2", b.v2}, {"E", b.e}, {"F", b.f}};
  } else {
    j["bipartite_type"] = nullptr;
  }
  j["regular"] = r.regular;
  j["bipartite_regular"] = r.bipartite_regular;
  j["bipartite_chiral"] = r.bipartite_chiral;
  j["automorphisms"] = r.automorphism_count;
  j["monodromy_order"] = r.monodromy_order ? nlohmann::json(*r.monodromy_order) : nlohmann::json();
  if (r.irregularity) {
    j["irregularity"] = {{"index", r.irregularity->index},
                         {"group", r.irregularity->group.to_string()},
                         {"lower_group_order", r.irregularity->lower_group_order},
                         {"upper_group_order", r.irregularity->upper_group_order}};
  } else {
    j["irregularity"] = nullptr;
  }
  j["closure_cover"] = r.closure_cover ? to_json(*r.closure_cover) : nlohmann::json();
  j["covering_core"] = r.covering_core ? to_json(*r.covering_core) : nlohmann::json();
  return j;
}

/// Line-oriented "key: value" rendering of a report.
inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  const auto yes_no = [](bool b) { return b ? "true" : "false"; };
  const auto summary = [&](const char* key, const std::optional<QuotientSummary>& q) {
    out << key << ": ";
    if (q) {
      out << "flags=" << q->flags << " type=" << q->type.to_string()
          << " chi=" << q->surface.euler_characteristic << " orientable=" << yes_no(q->surface.orientable)
          << " genus=" << q->surface.genus;
    } else {
      out << "none";
    }
    out << '\n';
  };
  out << "flags: " << r.flags << '\n';
  out << "type: " << r.type.to_string() << '\n';
  out << "V E F: " << r.counts.vertices << ' ' << r.counts.edges << ' ' << r.counts.faces << '\n';
  out << "uniform: " << yes_no(r.uniform) << '\n';
  out << "euler_characteristic: " << r.surface.euler_characteristic << '\n';
  out << "orientable: " << yes_no(r.surface.orientable) << '\n';
  out << "genus: " << r.surface.genus << '\n';
  out << "map: " << yes_no(r.is_map) << '\n';
  out << "theta_conservative:";
  const auto parities = ParityVector::all();
  for (std::size_t i = 0; i < parities.size(); ++i) {
    out << ' ' << parities[i].bits() << '=' << yes_no(r.theta_conservative[i]);
  }
  out << '\n';
  out << "bipartite_type: ";
  if (r.bipartite) {
    out << r.bipartite->type.to_string() << " V1=" << r.bipartite->v1 << " V2=" << r.bipartite->v2
        << " E=" << r.bipartite->e << " F=" << r.bipartite->f;
  } else {
    out << "none";
  }
  out << '\n';
  out << "regular: " << yes_no(r.regular) << '\n';
  out << "bipartite_regular: " << yes_no(r.bipartite_regular) << '\n';
  out << "bipartite_chiral: " << yes_no(r.bipartite_chiral) << '\n';
  out << "automorphisms: " << r.automorphism_count << '\n';
  out << "monodromy_order: ";
  if (r.monodromy_order) out << *r.monodromy_order; else out << "exceeds limit";
  out << '\n';
  out << "irregularity: ";
  if (r.irregularity) {
    out << "index=" << r.irregularity->index << " group=" << r.irregularity->group.to_string();
  } else {
    out << "none";
  }
  out << '\n';
  summary("closure_cover", r.closure_cover);
  summary("covering_core", r.covering_core);
  return out.str();
}

/// Two-column table for people.
inline std::string to_table(const AnalysisReport& r) {
  std::ostringstream out;
  std::istringstream in(to_text(r));
  std::string line;
  out << "+------------------------+---------------------------------------------\n";
  while (std::getline(in, line)) {
    const auto colon = line.find(':');
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 2);
    key.resize(22, ' ');
    out << "| " << key << " | " << value << '\n';
  }
  out << "+------------------------+---------------------------------------------\n";
  return out.str();
}

}  // namespace hypermaps

#endif  // HYPERMAPS_IO_HPP
