#pragma once

#include <utility>
#include <vector>

#include "cycles/gf2.hpp"

namespace cycles {

// A set of edges of some host graph, as a GF(2) vector indexed by the host's
// canonical edge order. All cycle-space computations happen on these.
using EdgeSet = gf2::BitVec;

// Simple undirected graph. Edges are stored as (u, v) with u < v, sorted
// lexicographically and duplicate-free; the index of an edge in this order is
// the coordinate every EdgeSet over the graph refers to.
class Graph {
  public:
    Graph() = default;
    Graph(int nverts, std::vector<std::pair<int, int>> edges);

    int nverts() const { return nverts_; }
    int nedges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int i) const { return edges_[i]; }

    // Index in the canonical order, or -1 if absent. Order of u, v is free.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // Incident (neighbor, edge index) pairs, listed in edge-index order.
    const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[v]; }

    int components() const;
    bool connected() const { return nverts_ <= 1 || components() == 1; }

    bool operator==(const Graph& o) const { return nverts_ == o.nverts_ && edges_ == o.edges_; }

  private:
    int nverts_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Named generators.
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);  // parts 0..m-1 and m..m+n-1
Graph cycle_graph(int n);                // n >= 3
Graph path_graph(int n);                 // n vertices, n-1 edges
Graph wheel_graph(int n);                // hub 0, rim 1..n; wheel_graph(3) == K_4
Graph tilde_graph(int n);                // K_{n,n} minus the n edges {j, n+j}
Graph disjoint_union(const Graph& a, const Graph& b);
Graph subdivide_edge(const Graph& g, int edge_index);

EdgeSet edge_set(const Graph& g, const std::vector<std::pair<int, int>>& edges);
EdgeSet full_edge_set(const Graph& g);

// True iff every vertex meets an even number of edges of c.
bool is_one_cycle(const Graph& g, const EdgeSet& c);
// True iff c is empty or a single closed simple cycle.
bool is_simple_cycle(const Graph& g, const EdgeSet& c);

// Spanning forest grown breadth-first from the smallest vertex of each
// component; deterministic, so fundamental cycles are reproducible.
class SpanningForest {
  public:
    SpanningForest() = default;

    const EdgeSet& tree_edges() const { return tree_edges_; }
    int components() const { return components_; }
    // Edge indices of the unique tree path between u and v (same component).
    std::vector<int> path_edges(int u, int v) const;

    friend SpanningForest bfs_forest(const Graph& g);
    friend SpanningForest forest_from_tree_edges(const Graph& g, const EdgeSet& tree);

  private:
    EdgeSet tree_edges_;
    int components_ = 0;
    std::vector<int> parent_vertex_;
    std::vector<int> parent_edge_;
    std::vector<int> depth_;
    std::vector<int> comp_;
};

SpanningForest bfs_forest(const Graph& g);
// Wraps a caller-provided forest (must be acyclic). Components here are the
// forest's own, so non-spanning forests are allowed for restricted queries.
SpanningForest forest_from_tree_edges(const Graph& g, const EdgeSet& tree);

// The simple cycle formed by non-tree edge sigma plus the tree path between
// its ends.
EdgeSet fundamental_cycle(const Graph& g, const SpanningForest& f, int sigma);

struct CycleBasis {
    SpanningForest forest;
    std::vector<int> nontree_edges;  // ascending; basis[i] belongs to nontree_edges[i]
    std::vector<EdgeSet> basis;
};

// Fundamental-cycle basis of Z1(g); |basis| = E - V + components.
CycleBasis cycle_space_basis(const Graph& g);
int cycle_space_dim(const Graph& g);

// Coefficients of c over the fundamental basis: bit i set iff the i-th
// non-tree edge lies in c. Requires c to be a 1-cycle.
gf2::BitVec decompose_cycle(const Graph& g, const CycleBasis& cb, const EdgeSet& c);

// Splits a 1-cycle into edge-disjoint simple cycles whose xor is c.
std::vector<EdgeSet> simple_cycle_split(const Graph& g, const EdgeSet& c);

// True iff the given relations (each a coefficient vector over the
// generators whose combination must vanish) span every linear relation
// between the generators.
bool relation_space_check(const std::vector<gf2::BitVec>& generators,
                          const std::vector<gf2::BitVec>& relations);

// All simple cycles as vertex sequences, canonical orientation, deterministic
// order. Intended for small graphs only.
std::vector<std::vector<int>> simple_cycles(const Graph& g);

// Edge set of a closed vertex sequence v0 v1 ... vk v0.
EdgeSet cycle_from_vertices(const Graph& g, const std::vector<int>& verts);

}  // namespace cycles
