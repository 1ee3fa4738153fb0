#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qbrick/fp.hpp"

namespace qbrick {

/// Arrow of a quiver; src/dst index into Quiver::vertices.
struct Arrow {
  std::string id;
  int src = -1;
  int dst = -1;
};

/// One term of a relation: an integer coefficient times a composable
/// path of arrows, stored as arrow indices read left to right
/// ("alpha beta" means alpha first, then beta).
struct RelationTerm {
  int64_t coeff = 1;
  std::vector<int> arrows;
};

/// A K-linear combination of parallel paths of length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
};

/// Dimension vector: one nonnegative entry per vertex, in declaration order.
struct DimVector {
  std::vector<int64_t> v;

  int64_t total() const {
    int64_t t = 0;
    for (int64_t x : v) t += x;
    return t;
  }
  bool is_zero() const { return total() == 0; }
  bool operator==(const DimVector&) const = default;
  auto operator<=>(const DimVector&) const = default;
};

inline DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.v.size() != b.v.size()) throw error("DimVector: size mismatch");
  DimVector r = a;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
  return r;
}

inline DimVector operator*(int64_t l, const DimVector& d) {
  DimVector r = d;
  for (auto& x : r.v) x *= l;
  return r;
}

/// Element of the split Grothendieck group of projectives, written in
/// the basis of indecomposable projectives; entries may be negative.
struct ThetaVector {
  std::vector<int64_t> v;

  bool operator==(const ThetaVector&) const = default;
};

inline ThetaVector operator*(int64_t l, const ThetaVector& t) {
  ThetaVector r = t;
  for (auto& x : r.v) x *= l;
  return r;
}

inline ThetaVector operator+(const ThetaVector& a, const ThetaVector& b) {
  if (a.v.size() != b.v.size()) throw error("ThetaVector: size mismatch");
  ThetaVector r = a;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
  return r;
}

/// A finite quiver with optional admissible relations.  Vertex ids are
/// arbitrary tokens; the canonical internal order is declaration order.
class Quiver {
 public:
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  bool is_path_algebra() const { return relations.empty(); }
  bool acyclic() const { return acyclic_; }

  /// Topological order of vertex indices; empty when cyclic.
  const std::vector<int>& topo_order() const { return topo_; }

  int vertex_index(std::string_view id) const {
    for (int i = 0; i < num_vertices(); ++i)
      if (vertices[i] == id) return i;
    return -1;
  }

  int arrow_index(std::string_view id) const {
    for (int i = 0; i < num_arrows(); ++i)
      if (arrows[i].id == id) return i;
    return -1;
  }

  DimVector zero_dim() const {
    DimVector d;
    d.v.assign(vertices.size(), 0);
    return d;
  }

  /// Programmatic construction; arrows given as (id, src id, dst id),
  /// relations as lists of (coeff, path of arrow ids).
  static Quiver build(
      std::vector<std::string> vertex_ids,
      const std::vector<std::tuple<std::string, std::string, std::string>>& arrow_specs,
      const std::vector<std::vector<std::pair<int64_t, std::vector<std::string>>>>&
          relation_specs = {},
      std::string name = "") {
    Quiver q;
    q.name = std::move(name);
    q.vertices = std::move(vertex_ids);
    for (const auto& [id, s, t] : arrow_specs) {
      int si = q.vertex_index(s), ti = q.vertex_index(t);
      if (si < 0 || ti < 0)
        throw error("Quiver::build: undeclared vertex in arrow '" + id + "'");
      q.arrows.push_back({id, si, ti});
    }
    for (const auto& rel : relation_specs) {
      Relation r;
      for (const auto& [coeff, path] : rel) {
        RelationTerm term;
        term.coeff = coeff;
        for (const std::string& aid : path) {
          int ai = q.arrow_index(aid);
          if (ai < 0) throw error("Quiver::build: unknown arrow '" + aid + "'");
          term.arrows.push_back(ai);
        }
        r.terms.push_back(std::move(term));
      }
      q.relations.push_back(std::move(r));
    }
    q.finalize();
    return q;
  }

  /// Parse the line-oriented quiver grammar:
  ///   # comment
  ///   vertices: <id> <id> ...
  ///   arrow <id>: <src> -> <dst>
  ///   relation: [<int>*] a b ... (+|-) [<int>*] c d ...
  /// With no `vertices:` line, arrow endpoints declare vertices
  /// implicitly in order of first appearance; once a vertices line is
  /// present, unknown endpoints are errors.
  static Quiver parse(std::string_view text, std::string name = "");

  void finalize() {
    validate_structure();
    compute_topo();
    validate_relations();
  }

 private:
  void validate_structure() const {
    for (size_t i = 0; i < vertices.size(); ++i)
      for (size_t j = i + 1; j < vertices.size(); ++j)
        if (vertices[i] == vertices[j])
          throw error("Quiver: duplicate vertex id '" + vertices[i] + "'");
    for (size_t i = 0; i < arrows.size(); ++i) {
      const Arrow& a = arrows[i];
      if (a.src < 0 || a.src >= num_vertices() || a.dst < 0 ||
          a.dst >= num_vertices())
        throw error("Quiver: arrow '" + a.id + "' has undeclared endpoint");
      for (size_t j = i + 1; j < arrows.size(); ++j)
        if (arrows[j].id == a.id)
          throw error("Quiver: duplicate arrow id '" + a.id + "'");
    }
  }

  void compute_topo() {
    topo_.clear();
    int n = num_vertices();
    std::vector<int> indeg(n, 0);
    for (const Arrow& a : arrows) ++indeg[a.dst];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) queue.push_back(v);
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      topo_.push_back(v);
      for (const Arrow& a : arrows)
        if (a.src == v && --indeg[a.dst] == 0) queue.push_back(a.dst);
    }
    acyclic_ = static_cast<int>(topo_.size()) == n;
    if (!acyclic_) topo_.clear();
  }

  void validate_relations() const {
    for (const Relation& r : relations) {
      if (r.terms.empty()) throw error("Quiver: empty relation");
      bool nonzero = false;
      int src = -1, dst = -1;
      for (const RelationTerm& t : r.terms) {
        if (t.coeff != 0) nonzero = true;
        if (t.arrows.size() < 2)
          throw error("Quiver: relation path shorter than 2");
        for (size_t k = 0; k + 1 < t.arrows.size(); ++k)
          if (arrows[t.arrows[k]].dst != arrows[t.arrows[k + 1]].src)
            throw error("Quiver: relation path does not compose at '" +
                        arrows[t.arrows[k]].id + " " +
                        arrows[t.arrows[k + 1]].id + "'");
        int s = arrows[t.arrows.front()].src;
        int d = arrows[t.arrows.back()].dst;
        if (src == -1) {
          src = s;
          dst = d;
        } else if (s != src || d != dst) {
          throw error("Quiver: relation terms are not parallel paths");
        }
      }
      if (!nonzero) throw error("Quiver: relation has no nonzero coefficient");
    }
  }

  bool acyclic_ = true;
  std::vector<int> topo_;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] inline void parse_fail(const std::string& name, int line,
                                    const std::string& msg) {
  std::string where = name.empty() ? "quiver" : name;
  throw error(where + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace detail

inline Quiver Quiver::parse(std::string_view text, std::string name) {
  Quiver q;
  q.name = name;
  bool explicit_vertices = false;
  struct RawRelation {
    std::vector<std::pair<int64_t, std::vector<std::string>>> terms;
    int line;
  };
  std::vector<RawRelation> raw_relations;

  auto declare_vertex = [&](const std::string& id, int line) -> int {
    int idx = q.vertex_index(id);
    if (idx >= 0) return idx;
    if (explicit_vertices)
      detail::parse_fail(name, line, "undeclared vertex '" + id + "'");
    q.vertices.push_back(id);
    return q.num_vertices() - 1;
  };

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line_view =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                       : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    std::string line(line_view);
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    std::vector<std::string> toks = detail::split_ws(line);
    if (toks.empty()) continue;

    if (toks[0] == "vertices:") {
      if (!explicit_vertices && !q.vertices.empty())
        detail::parse_fail(name, lineno,
                           "vertices: must precede implicit declarations");
      explicit_vertices = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (q.vertex_index(toks[i]) >= 0)
          detail::parse_fail(name, lineno, "duplicate vertex '" + toks[i] + "'");
        q.vertices.push_back(toks[i]);
      }
    } else if (toks[0] == "arrow") {
      // arrow <id>: <src> -> <dst>
      if (toks.size() != 5 || toks[3] != "->" || toks[1].empty() ||
          toks[1].back() != ':')
        detail::parse_fail(name, lineno,
                           "expected 'arrow <id>: <src> -> <dst>'");
      std::string id = toks[1].substr(0, toks[1].size() - 1);
      if (q.arrow_index(id) >= 0)
        detail::parse_fail(name, lineno, "duplicate arrow id '" + id + "'");
      int s = declare_vertex(toks[2], lineno);
      int t = declare_vertex(toks[4], lineno);
      q.arrows.push_back({id, s, t});
    } else if (toks[0] == "relation:") {
      RawRelation rel;
      rel.line = lineno;
      std::vector<std::string> term_toks;
      int64_t sign = 1;
      auto flush_term = [&]() {
        if (term_toks.empty())
          detail::parse_fail(name, rel.line, "empty relation term");
        int64_t coeff = sign;
        size_t start = 0;
        std::string first = term_toks[0];
        if (!first.empty() && first.back() == '*') {
          first.pop_back();
          try {
            coeff = sign * std::stoll(first);
          } catch (...) {
            detail::parse_fail(name, rel.line,
                               "bad coefficient '" + term_toks[0] + "'");
          }
          start = 1;
        }
        std::vector<std::string> path(term_toks.begin() + start,
                                      term_toks.end());
        if (path.size() < 2)
          detail::parse_fail(name, rel.line, "relation path shorter than 2");
        rel.terms.emplace_back(coeff, std::move(path));
        term_toks.clear();
      };
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "+" || toks[i] == "-") {
          if (i == 1 && term_toks.empty()) {
            sign = toks[i] == "-" ? -1 : 1;  // leading sign
            continue;
          }
          flush_term();
          sign = toks[i] == "-" ? -1 : 1;
        } else {
          // tolerate '2 *' written as two tokens
          if (toks[i] == "*" && term_toks.size() == 1) {
            term_toks[0] += '*';
          } else {
            term_toks.push_back(toks[i]);
          }
        }
      }
      flush_term();
      raw_relations.push_back(std::move(rel));
    } else {
      detail::parse_fail(name, lineno, "unrecognized directive '" + toks[0] + "'");
    }
  }

  for (const RawRelation& rel : raw_relations) {
    Relation r;
    for (const auto& [coeff, path] : rel.terms) {
      RelationTerm term;
      term.coeff = coeff;
      for (const std::string& aid : path) {
        int ai = q.arrow_index(aid);
        if (ai < 0)
          detail::parse_fail(name, rel.line, "unknown arrow '" + aid + "'");
        term.arrows.push_back(ai);
      }
      r.terms.push_back(std::move(term));
    }
    q.relations.push_back(std::move(r));
  }

  try {
    q.finalize();
  } catch (const error& e) {
    throw error((name.empty() ? std::string("quiver") : name) + ": " + e.what());
  }
  return q;
}

}  // namespace qbrick
