#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbrick/module.hpp"

namespace qbrick {

using json = nlohmann::json;

inline json quiver_to_json(const Quiver& q) {
  json j;
  if (!q.name.empty()) j["name"] = q.name;
  j["vertices"] = q.vertices;
  json arrows = json::array();
  for (const Arrow& a : q.arrows)
    arrows.push_back({{"id", a.id},
                      {"src", q.vertices[a.src]},
                      {"dst", q.vertices[a.dst]}});
  j["arrows"] = arrows;
  if (!q.relations.empty()) {
    json rels = json::array();
    for (const Relation& r : q.relations) {
      json terms = json::array();
      for (const RelationTerm& t : r.terms) {
        json path = json::array();
        for (int ai : t.arrows) path.push_back(q.arrows[ai].id);
        terms.push_back({{"coeff", t.coeff}, {"path", path}});
      }
      rels.push_back(terms);
    }
    j["relations"] = rels;
  }
  return j;
}

inline Quiver quiver_from_json(const json& j) {
  std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const json& a : j.at("arrows"))
    arrows.emplace_back(a.at("id").get<std::string>(),
                        a.at("src").get<std::string>(),
                        a.at("dst").get<std::string>());
  std::vector<std::vector<std::pair<int64_t, std::vector<std::string>>>> rels;
  if (j.contains("relations"))
    for (const json& r : j.at("relations")) {
      std::vector<std::pair<int64_t, std::vector<std::string>>> terms;
      for (const json& t : r)
        terms.emplace_back(t.at("coeff").get<int64_t>(),
                           t.at("path").get<std::vector<std::string>>());
      rels.push_back(std::move(terms));
    }
  return Quiver::build(verts, arrows, rels, j.value("name", ""));
}

inline json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Module file schema:
/// {"quiver": <name or inline object>, "p": <int>,
///  "dim": {vertex: int}, "mats": {arrow: [[row ints]]}}
inline json module_to_json(const RepModule& m) {
  json j;
  const Quiver& q = *m.quiver;
  j["quiver"] = q.name.empty() ? quiver_to_json(q) : json(q.name);
  j["p"] = m.field.p;
  json dim = json::object();
  for (int v = 0; v < q.num_vertices(); ++v) dim[q.vertices[v]] = m.dim.v[v];
  j["dim"] = dim;
  json mats = json::object();
  for (int a = 0; a < q.num_arrows(); ++a)
    mats[q.arrows[a].id] = mat_to_json(m.mats[a]);
  j["mats"] = mats;
  return j;
}

/// Read a module file.  When `quiver` is null the file must carry an
/// inline quiver object.  Entries are reduced to canonical form; the
/// result is validated (shapes, and relations when the quiver has any).
inline RepModule module_from_json(const json& j,
                                  std::shared_ptr<const Quiver> quiver = nullptr) {
  if (!quiver) {
    if (!j.contains("quiver") || !j.at("quiver").is_object())
      throw error("module file: no quiver given and none inlined");
    quiver = std::make_shared<Quiver>(quiver_from_json(j.at("quiver")));
  }
  const Quiver& q = *quiver;
  FieldSpec field(j.at("p").get<uint64_t>());
  DimVector d = q.zero_dim();
  for (const auto& [key, val] : j.at("dim").items()) {
    int v = q.vertex_index(key);
    if (v < 0) throw error("module file: unknown vertex '" + key + "' in dim");
    d.v[v] = val.get<int64_t>();
  }
  RepModule m = zero_filled_module(quiver, field, d);
  const json& mats = j.at("mats");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const std::string& id = q.arrows[a].id;
    if (!mats.contains(id))
      throw error("module file: missing matrix for arrow '" + id + "'");
    const json& rows = mats.at(id);
    Mat& mat = m.mats[a];
    if (rows.size() != mat.rows())
      throw error("module file: wrong row count for arrow '" + id + "'");
    for (size_t i = 0; i < mat.rows(); ++i) {
      if (rows[i].size() != mat.cols())
        throw error("module file: wrong column count for arrow '" + id + "'");
      for (size_t c = 0; c < mat.cols(); ++c)
        mat.at(i, c) = fp::reduce_int(rows[i][c].get<int64_t>(), field.p);
    }
  }
  m.validate();
  if (!q.is_path_algebra() && !check_relations(m))
    throw error("module file: matrices do not satisfy the quiver relations");
  return m;
}

/// Semibrick members from a file that is either a single module object
/// or {"members": [module, ...]}.
inline std::vector<RepModule> members_from_json(
    const json& j, std::shared_ptr<const Quiver> quiver = nullptr) {
  std::vector<RepModule> out;
  if (j.contains("members")) {
    for (const json& mj : j.at("members")) out.push_back(module_from_json(mj, quiver));
  } else {
    out.push_back(module_from_json(j, quiver));
  }
  return out;
}

inline json members_to_json(const std::vector<RepModule>& members) {
  json j;
  json arr = json::array();
  for (const RepModule& m : members) arr.push_back(module_to_json(m));
  j["members"] = arr;
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw error(path + ": " + e.what());
  }
  return j;
}

inline std::string load_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qbrick
