#include "cycles/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cycles {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph::Graph(int nverts, std::vector<std::pair<int, int>> edges) : nverts_(nverts) {
    require(nverts >= 0, "Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        require(u != v, "Graph: loop edge");
        require(u >= 0 && v >= 0 && u < nverts && v < nverts, "Graph: endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(nverts_, {});
    for (int i = 0; i < nedges(); ++i) {
        adj_[edges_[i].first].push_back({edges_[i].second, i});
        adj_[edges_[i].second].push_back({edges_[i].first, i});
    }
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
    if (it == edges_.end() || *it != std::pair{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Graph::components() const {
    std::vector<int> comp(nverts_, -1);
    int n = 0;
    for (int s = 0; s < nverts_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = n;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj_[v])
                if (comp[w] < 0) { comp[w] = n; stack.push_back(w); }
        }
        ++n;
    }
    return n;
}

Graph complete_graph(int n) {
    require(n >= 1, "complete_graph: n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "complete_bipartite: parts must be positive");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) e.push_back({u, m + v});
    return Graph(m + n, std::move(e));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle_graph: n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return Graph(n, std::move(e));
}

Graph path_graph(int n) {
    require(n >= 1, "path_graph: n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return Graph(n, std::move(e));
}

Graph wheel_graph(int n) {
    require(n >= 3, "wheel_graph: n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int j = 1; j <= n; ++j) {
        e.push_back({0, j});
        e.push_back({j, j == n ? 1 : j + 1});
    }
    return Graph(n + 1, std::move(e));
}

Graph tilde_graph(int n) {
    require(n >= 2, "tilde_graph: n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) e.push_back({u, n + v});
    return Graph(2 * n, std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges();
    for (auto [u, v] : b.edges()) e.push_back({u + a.nverts(), v + a.nverts()});
    return Graph(a.nverts() + b.nverts(), std::move(e));
}

Graph subdivide_edge(const Graph& g, int edge_index) {
    require(edge_index >= 0 && edge_index < g.nedges(), "subdivide_edge: bad edge index");
    auto [a, b] = g.edge(edge_index);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < g.nedges(); ++i)
        if (i != edge_index) e.push_back(g.edge(i));
    e.push_back({a, g.nverts()});
    e.push_back({b, g.nverts()});
    return Graph(g.nverts() + 1, std::move(e));
}

EdgeSet edge_set(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    EdgeSet s(g.nedges());
    for (auto [u, v] : edges) {
        int i = g.edge_index(u, v);
        require(i >= 0, "edge_set: edge not in graph");
        s.set(i);
    }
    return s;
}

EdgeSet full_edge_set(const Graph& g) {
    EdgeSet s(g.nedges());
    for (int i = 0; i < g.nedges(); ++i) s.set(i);
    return s;
}

bool is_one_cycle(const Graph& g, const EdgeSet& c) {
    require(static_cast<int>(c.size()) == g.nedges(), "is_one_cycle: host mismatch");
    std::vector<int> deg(g.nverts(), 0);
    for (std::size_t i : c.ones()) {
        ++deg[g.edge(static_cast<int>(i)).first];
        ++deg[g.edge(static_cast<int>(i)).second];
    }
    for (int d : deg)
        if (d & 1) return false;
    return true;
}

bool is_simple_cycle(const Graph& g, const EdgeSet& c) {
    require(static_cast<int>(c.size()) == g.nedges(), "is_simple_cycle: host mismatch");
    auto edges = c.ones();
    if (edges.empty()) return true;
    std::vector<int> deg(g.nverts(), 0);
    for (std::size_t i : edges) {
        ++deg[g.edge(static_cast<int>(i)).first];
        ++deg[g.edge(static_cast<int>(i)).second];
    }
    for (int d : deg)
        if (d != 0 && d != 2) return false;
    // Degrees all 2 on the support; connected support means a single cycle.
    int start = g.edge(static_cast<int>(edges[0])).first;
    std::vector<bool> seen(g.nverts(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (auto [w, e] : g.incident(v))
            if (c.get(e) && !seen[w]) { seen[w] = true; stack.push_back(w); }
    }
    return reached == static_cast<int>(edges.size());
}

SpanningForest bfs_forest(const Graph& g) {
    SpanningForest f;
    f.tree_edges_ = EdgeSet(g.nedges());
    f.parent_vertex_.assign(g.nverts(), -1);
    f.parent_edge_.assign(g.nverts(), -1);
    f.depth_.assign(g.nverts(), -1);
    f.comp_.assign(g.nverts(), -1);
    for (int s = 0; s < g.nverts(); ++s) {
        if (f.comp_[s] >= 0) continue;
        f.comp_[s] = f.components_;
        f.depth_[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int v = queue[q];
            for (auto [w, e] : g.incident(v)) {
                if (f.comp_[w] >= 0) continue;
                f.comp_[w] = f.components_;
                f.depth_[w] = f.depth_[v] + 1;
                f.parent_vertex_[w] = v;
                f.parent_edge_[w] = e;
                f.tree_edges_.set(e);
                queue.push_back(w);
            }
        }
        ++f.components_;
    }
    return f;
}

SpanningForest forest_from_tree_edges(const Graph& g, const EdgeSet& tree) {
    require(static_cast<int>(tree.size()) == g.nedges(), "forest_from_tree_edges: host mismatch");
    SpanningForest f;
    f.tree_edges_ = tree;
    f.parent_vertex_.assign(g.nverts(), -1);
    f.parent_edge_.assign(g.nverts(), -1);
    f.depth_.assign(g.nverts(), -1);
    f.comp_.assign(g.nverts(), -1);
    for (int s = 0; s < g.nverts(); ++s) {
        if (f.comp_[s] >= 0) continue;
        f.comp_[s] = f.components_;
        f.depth_[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int v = queue[q];
            for (auto [w, e] : g.incident(v)) {
                if (!tree.get(e)) continue;
                if (f.comp_[w] >= 0) continue;
                f.comp_[w] = f.components_;
                f.depth_[w] = f.depth_[v] + 1;
                f.parent_vertex_[w] = v;
                f.parent_edge_[w] = e;
                queue.push_back(w);
            }
        }
        ++f.components_;
    }
    require(tree.count() == static_cast<std::size_t>(g.nverts() - f.components_),
            "forest_from_tree_edges: edge set contains a cycle");
    return f;
}

std::vector<int> SpanningForest::path_edges(int u, int v) const {
    if (comp_[u] != comp_[v]) throw std::invalid_argument("path_edges: different components");
    std::vector<int> up, down;
    int a = u, b = v;
    while (depth_[a] > depth_[b]) { up.push_back(parent_edge_[a]); a = parent_vertex_[a]; }
    while (depth_[b] > depth_[a]) { down.push_back(parent_edge_[b]); b = parent_vertex_[b]; }
    while (a != b) {
        up.push_back(parent_edge_[a]); a = parent_vertex_[a];
        down.push_back(parent_edge_[b]); b = parent_vertex_[b];
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

EdgeSet fundamental_cycle(const Graph& g, const SpanningForest& f, int sigma) {
    require(sigma >= 0 && sigma < g.nedges(), "fundamental_cycle: bad edge index");
    require(!f.tree_edges().get(sigma), "fundamental_cycle: edge lies in the forest");
    auto [u, v] = g.edge(sigma);
    EdgeSet c(g.nedges());
    c.set(sigma);
    for (int e : f.path_edges(u, v)) c.flip(e);
    return c;
}

CycleBasis cycle_space_basis(const Graph& g) {
    CycleBasis cb;
    cb.forest = bfs_forest(g);
    for (int e = 0; e < g.nedges(); ++e) {
        if (cb.forest.tree_edges().get(e)) continue;
        cb.nontree_edges.push_back(e);
        cb.basis.push_back(fundamental_cycle(g, cb.forest, e));
    }
    return cb;
}

int cycle_space_dim(const Graph& g) {
    return g.nedges() - g.nverts() + g.components();
}

gf2::BitVec decompose_cycle(const Graph& g, const CycleBasis& cb, const EdgeSet& c) {
    if (!is_one_cycle(g, c)) throw std::domain_error("decompose_cycle: input is not a 1-cycle");
    gf2::BitVec coeffs(cb.basis.size());
    for (std::size_t i = 0; i < cb.nontree_edges.size(); ++i)
        if (c.get(cb.nontree_edges[i])) coeffs.set(i);
    return coeffs;
}

std::vector<EdgeSet> simple_cycle_split(const Graph& g, const EdgeSet& c) {
    if (!is_one_cycle(g, c)) throw std::domain_error("simple_cycle_split: input is not a 1-cycle");
    EdgeSet rest = c;
    std::vector<EdgeSet> out;
    while (rest.any()) {
        int start = g.edge(static_cast<int>(rest.first_set())).first;
        // Walk unused edges until a vertex repeats, then peel that cycle.
        std::vector<int> path_verts{start};
        std::vector<int> path_edges;
        std::vector<int> at(g.nverts(), -1);
        at[start] = 0;
        int v = start;
        for (;;) {
            int next_edge = -1, next_vert = -1;
            for (auto [w, e] : g.incident(v)) {
                if (rest.get(e) && (path_edges.empty() || e != path_edges.back())) {
                    next_edge = e;
                    next_vert = w;
                    break;
                }
            }
            if (next_edge < 0) throw std::logic_error("simple_cycle_split: walk stuck");
            if (at[next_vert] >= 0) {
                EdgeSet cyc(g.nedges());
                cyc.set(next_edge);
                for (std::size_t i = at[next_vert]; i < path_edges.size(); ++i) cyc.set(path_edges[i]);
                rest ^= cyc;
                out.push_back(std::move(cyc));
                break;
            }
            path_edges.push_back(next_edge);
            path_verts.push_back(next_vert);
            at[next_vert] = static_cast<int>(path_edges.size());
            v = next_vert;
        }
    }
    return out;
}

bool relation_space_check(const std::vector<gf2::BitVec>& generators,
                          const std::vector<gf2::BitVec>& relations) {
    require(!generators.empty(), "relation_space_check: no generators");
    for (const auto& r : relations) {
        require(r.size() == generators.size(), "relation_space_check: relation length mismatch");
        if (gf2::combine(generators, r).any())
            throw std::invalid_argument("relation_space_check: a stated relation does not vanish");
    }
    std::size_t kernel_dim = generators.size() - gf2::rank(gf2::BitMatrix(generators));
    return gf2::rank(gf2::BitMatrix(relations)) == kernel_dim;
}

namespace {

void extend_cycle_search(const Graph& g, int root, std::vector<int>& path,
                         std::vector<bool>& on_path, std::vector<std::vector<int>>& out) {
    int v = path.back();
    for (auto [w, e] : g.incident(v)) {
        if (w == root && path.size() >= 3) {
            // Canonical orientation: second vertex smaller than last.
            if (path[1] < path.back()) out.push_back(path);
            continue;
        }
        if (w <= root || on_path[w]) continue;
        path.push_back(w);
        on_path[w] = true;
        extend_cycle_search(g, root, path, on_path, out);
        on_path[w] = false;
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> simple_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> on_path(g.nverts(), false);
    for (int root = 0; root < g.nverts(); ++root) {
        std::vector<int> path{root};
        on_path[root] = true;
        extend_cycle_search(g, root, path, on_path, out);
        on_path[root] = false;
    }
    return out;
}

EdgeSet cycle_from_vertices(const Graph& g, const std::vector<int>& verts) {
    require(verts.size() >= 3, "cycle_from_vertices: need at least 3 vertices");
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "cycle_from_vertices: repeated vertex");
    EdgeSet c(g.nedges());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int e = g.edge_index(verts[i], verts[(i + 1) % verts.size()]);
        require(e >= 0, "cycle_from_vertices: consecutive vertices not adjacent");
        require(!c.get(e), "cycle_from_vertices: repeated edge");
        c.set(e);
    }
    return c;
}

}  // namespace cycles
