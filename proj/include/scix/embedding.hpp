#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "scix/graph.hpp"
#include "scix/mad.hpp"
#include "scix/rational.hpp"
#include "scix/structure.hpp"

namespace scix {

/// Rotation system: for each vertex, the cyclic order of its neighbors.
struct Embedding {
  Graph graph;
  std::vector<std::vector<int>> rotation;

  void validate() const {
    if (static_cast<int>(rotation.size()) != graph.vertex_count())
      throw std::invalid_argument("Embedding: rotation size mismatch");
    for (int v = 0; v < graph.vertex_count(); ++v) {
      std::vector<int> rot = rotation[static_cast<std::size_t>(v)];
      std::sort(rot.begin(), rot.end());
      if (rot != graph.neighbors(v))
        throw std::invalid_argument("Embedding: rotation at vertex " + std::to_string(v) +
                                    " is not a permutation of its neighbors");
    }
  }
};

/// Embedding text format: the edge-list format plus one
/// "r <v> <neighbors in cyclic order...>" line per vertex of positive degree.
inline Embedding parse_embedding(const std::string& text) {
  std::string edge_part;
  std::map<int, std::vector<int>> rotations;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    std::string payload = hash == std::string::npos ? line : line.substr(0, hash);
    std::istringstream ls(payload);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "r") {
      int v;
      if (!(ls >> v)) throw ParseError("embedding, line " + std::to_string(lineno) + ": malformed rotation");
      std::vector<int> order;
      int w;
      while (ls >> w) order.push_back(w);
      if (!rotations.emplace(v, std::move(order)).second)
        throw ParseError("embedding, line " + std::to_string(lineno) + ": repeated rotation for vertex " +
                         std::to_string(v));
    } else {
      edge_part += payload;
      edge_part += '\n';
    }
  }
  Embedding emb;
  emb.graph = parse_edge_list(edge_part);
  emb.rotation.assign(static_cast<std::size_t>(emb.graph.vertex_count()), {});
  for (auto& [v, order] : rotations) {
    if (v < 0 || v >= emb.graph.vertex_count())
      throw ParseError("embedding: rotation for unknown vertex " + std::to_string(v));
    emb.rotation[static_cast<std::size_t>(v)] = order;
  }
  for (int v = 0; v < emb.graph.vertex_count(); ++v)
    if (emb.rotation[static_cast<std::size_t>(v)].empty() && emb.graph.degree(v) > 0)
      throw ParseError("embedding: missing rotation for vertex " + std::to_string(v));
  emb.validate();
  return emb;
}

/// Face boundary walks by the next-edge rule: after arriving at v from u,
/// leave along the successor of u in rotation[v]. Every directed edge is
/// used exactly once, so the face lengths always sum to 2 e(G).
inline std::vector<std::vector<int>> trace_faces(const Embedding& emb) {
  emb.validate();
  const Graph& g = emb.graph;
  std::map<std::pair<int, int>, char> used;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v)) used[{v, w}] = 0;
  std::vector<std::vector<int>> faces;
  for (auto& [arc, done] : used) {
    if (done) continue;
    std::vector<int> walk;
    int u = arc.first, v = arc.second;
    while (!used[{u, v}]) {
      used[{u, v}] = 1;
      walk.push_back(u);
      const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
      const auto it = std::find(rot.begin(), rot.end(), u);
      const int next = rot[static_cast<std::size_t>((it - rot.begin() + 1) % static_cast<long>(rot.size()))];
      u = v;
      v = next;
    }
    faces.push_back(std::move(walk));
  }
  return faces;
}

/// Sum of (l(f) - 6) over faces plus (2 d(v) - 6) over vertices. Equals -12
/// for every planar embedding of a connected graph.
inline Rational euler_sum(const Embedding& emb) {
  Rational total(0);
  for (const auto& face : trace_faces(emb))
    total += Rational(static_cast<std::int64_t>(face.size()) - 6);
  for (int v = 0; v < emb.graph.vertex_count(); ++v)
    total += Rational(2 * emb.graph.degree(v) - 6);
  return total;
}

/// Checks mad(G) < 2g/(g-2) exactly for a planar embedding with finite
/// girth. Euler's relation n - m + f = 2 is verified first so that a
/// non-planar rotation system fails loudly instead of "passing".
inline bool mad_girth_spotcheck(const Embedding& emb) {
  const auto girth_value = girth(emb.graph);
  if (!girth_value) throw std::invalid_argument("mad_girth_spotcheck: girth is infinite");
  const auto faces = trace_faces(emb);
  const std::int64_t euler = emb.graph.vertex_count() - emb.graph.edge_count() +
                             static_cast<std::int64_t>(faces.size());
  if (euler != 2)
    throw std::invalid_argument("mad_girth_spotcheck: embedding is not a planar embedding of a connected graph");
  const std::int64_t g = *girth_value;
  return mad_exact(emb.graph) < Rational(2 * g, g - 2);
}

}  // namespace scix
