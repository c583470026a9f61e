#include "sltr/connectivity.hpp"

#include <algorithm>
#include <string>

#include "sltr/error.hpp"

namespace sltr {

namespace {

bool connected_without(const RotationSystem& adj, const std::vector<bool>& removed) {
  auto comp = connected_components(adj, removed);
  for (size_t v = 0; v < adj.size(); ++v)
    if (!removed[v] && comp[v] != 0) return false;
  return true;
}

}  // namespace

bool is_3connected(const RotationSystem& adj, ConnectivityAlgorithm) {
  const int n = static_cast<int>(adj.size());
  if (n < 4) return false;
  std::vector<bool> removed(n, false);
  if (!connected_without(adj, removed)) return false;
  for (int a = 0; a < n; ++a) {
    removed[a] = true;
    for (int b = a + 1; b < n; ++b) {
      removed[b] = true;
      const bool ok = connected_without(adj, removed);
      removed[b] = false;
      if (!ok) return false;
    }
    removed[a] = false;
  }
  return true;
}

bool check_internally_3connected(const SuspendedGraph& g, ConnectivityAlgorithm algo) {
  RotationSystem adj = g.graph.rotation();
  const VertexId inf = static_cast<VertexId>(adj.size());
  adj.emplace_back(g.suspensions.begin(), g.suspensions.end());
  for (VertexId s : g.suspensions) adj[s].push_back(inf);
  return is_3connected(adj, algo);
}

Reduction reduce_degree_two(const SuspendedGraph& g) {
  const int n = g.graph.num_vertices();
  RotationSystem rot = g.graph.rotation();
  std::vector<bool> gone(n, false);
  // Path of original vertices carried by each current adjacency (u, v).
  std::vector<std::vector<std::pair<VertexId, std::vector<VertexId>>>> carried(n);
  auto chain_of = [&](VertexId u, VertexId v) -> std::vector<VertexId>& {
    for (auto& [w, path] : carried[u])
      if (w == v) return path;
    carried[u].emplace_back(v, std::vector<VertexId>{u, v});
    return carried[u].back().second;
  };
  auto set_chain = [&](VertexId u, VertexId v, std::vector<VertexId> path) {
    chain_of(u, v) = path;
    std::reverse(path.begin(), path.end());
    chain_of(v, u) = std::move(path);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (gone[v] || g.is_suspension(v) || rot[v].size() != 2) continue;
      const VertexId a = rot[v][0];
      const VertexId b = rot[v][1];
      if (std::find(rot[a].begin(), rot[a].end(), b) != rot[a].end())
        throw Error(ErrorKind::ReductionCreatesMultiEdge,
                    "suppressing " + std::to_string(v) + " would double edge " + std::to_string(a) + "-" +
                        std::to_string(b),
                    {v, a, b});
      std::vector<VertexId> path = chain_of(a, v);
      const auto& tail = chain_of(v, b);
      path.insert(path.end(), tail.begin() + 1, tail.end());
      *std::find(rot[a].begin(), rot[a].end(), v) = b;
      *std::find(rot[b].begin(), rot[b].end(), v) = a;
      set_chain(a, b, std::move(path));
      rot[v].clear();
      gone[v] = true;
      changed = true;
    }
  }

  Reduction r;
  r.reduced_id.assign(n, kNone);
  for (VertexId v = 0; v < n; ++v) {
    if (gone[v]) continue;
    r.reduced_id[v] = static_cast<VertexId>(r.original_id.size());
    r.original_id.push_back(v);
  }
  RotationSystem out(r.original_id.size());
  for (size_t i = 0; i < r.original_id.size(); ++i) {
    const VertexId v = r.original_id[i];
    for (VertexId u : rot[v]) {
      out[i].push_back(r.reduced_id[u]);
      if (v < u) {
        const auto& path = chain_of(v, u);
        if (path.size() > 2) r.chains.push_back(path);
      }
    }
  }

  // Any surviving edge on the old outer face keeps the outer face.
  const auto outer_walk = g.graph.face_vertices(g.graph.outer_face());
  std::pair<VertexId, VertexId> hint{kNone, kNone};
  for (size_t i = 0; i < outer_walk.size() && hint.first == kNone; ++i) {
    const VertexId a = outer_walk[i];
    if (gone[a]) continue;
    // Follow the walk to the next surviving vertex.
    for (size_t k = 1; k <= outer_walk.size(); ++k) {
      const VertexId b = outer_walk[(i + k) % outer_walk.size()];
      if (!gone[b]) {
        hint = {r.reduced_id[a], r.reduced_id[b]};
        break;
      }
    }
  }
  auto graph = PlaneGraph::from_rotation(std::move(out), hint);
  r.reduced = SuspendedGraph::make(std::move(graph),
                                   {r.reduced_id[g.suspensions[0]], r.reduced_id[g.suspensions[1]],
                                    r.reduced_id[g.suspensions[2]]});
  return r;
}

}  // namespace sltr
