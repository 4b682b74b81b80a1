#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cycles/graph.hpp"

namespace cycles {

// Edge-preserving vertex permutation with t(t(v)) = v.
struct Involution {
    std::vector<int> perm;
};

// Validates that perm is an involutive, edge-preserving permutation of g.
Involution make_involution(const Graph& g, std::vector<int> perm);
Involution identity_involution(const Graph& g);
// For tilde_graph(n) and complete_bipartite(n, n): swaps the parts, j <-> n+j.
Involution part_swap(int n);
// For cycle_graph(2k): maps every vertex to the diametrically opposite one.
Involution antipodal(const Graph& cycle);

int image_edge(const Graph& g, const Involution& t, int edge);
// Permutation matrix on edge indices, mapping edge (u,v) to (tu,tv).
gf2::BitMatrix edge_action(const Graph& g, const Involution& t);
EdgeSet apply_involution(const Graph& g, const Involution& t, const EdgeSet& q);

struct SymmetryReport {
    int fixed_vertices = 0;
    int symmetric_edges = 0;           // edges with {tu,tv} == {u,v}
    int symmetric_dim = 0;             // dim of the fixed subspace of Z1, authoritative
    std::optional<int> formula_dim;    // closed form, present only when its hypotheses hold
    bool agrees() const { return !formula_dim || *formula_dim == symmetric_dim; }
};

// Counts symmetric 1-cycles. The closed form (E-V+2)/2 for I = 0 and
// (E-V+I)/2 for I > 0 is filled only for connected graphs with no fixed
// vertices; the linear-algebra dimension is always computed.
SymmetryReport symmetric_cycle_dim(const Graph& g, const Involution& t);
std::vector<EdgeSet> symmetric_cycle_basis(const Graph& g, const Involution& t);

// Replaces every edge ab by a path a - v_ab - b and lifts the involution by
// v_ab -> v_{t(ab)}. Preserves the symmetric-cycle dimension, and the result
// has no vertex joined to two mutually symmetric vertices.
std::pair<Graph, Involution> subdivide_all(const Graph& g, const Involution& t);

// Quotient by the involution: vertices are orbit pairs {v, tv}. Requires a
// connected graph, no fixed vertices, no symmetric edges, and no vertex
// joined to two mutually symmetric vertices.
Graph quotient_graph(const Graph& g, const Involution& t);

// The part-collapsing bijection between swap-symmetric 1-cycles of
// tilde_graph(n) and 1-cycles of complete_graph(n): edge {i,j} is in the
// image iff edge (i, n+j) is in c.
EdgeSet tilde_fold(int n, const EdgeSet& c);
EdgeSet tilde_unfold(int n, const EdgeSet& d);

// Basis of Z1(tilde_graph(n)) that the part-swap involution permutes:
// exactly one fixed element (the 6-cycle through vertices 1, 2', 3, 1', 2,
// 3' in 1-based labels) and the rest in mutually symmetric pairs. Built from
// fundamental cycles over the spanning tree {23'} u {i1'} u {1j'} with the
// pair elements re-combined through the fixed one.
struct TildeBasis {
    std::vector<EdgeSet> elements;
    std::vector<int> t_image;  // position of the part-swap image of each element
    int fixed_count = 0;
};

TildeBasis tilde_symmetric_basis(int n);

}  // namespace cycles
