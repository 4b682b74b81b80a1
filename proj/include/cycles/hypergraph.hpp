#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "cycles/graph.hpp"

namespace cycles {

using FaceSet = gf2::BitVec;
using PointSet = gf2::BitVec;

// 2-hypergraph: a vertex set plus 3-element faces. Edges are derived: the
// 2-subsets contained in some face.
class Hypergraph2 {
  public:
    Hypergraph2() = default;
    Hypergraph2(int nverts, std::vector<std::array<int, 3>> faces);

    int nverts() const { return nverts_; }
    int nfaces() const { return static_cast<int>(faces_.size()); }
    int nedges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::array<int, 3>>& faces() const { return faces_; }
    std::array<int, 3> face(int i) const { return faces_[i]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_index(int u, int v) const;

    // Graph on the same vertices whose edges are the derived edges.
    Graph edge_graph() const { return Graph(nverts_, edges_); }
    // Number of faces containing the given derived edge.
    int edge_degree(int edge) const;
    // The three derived edges of a face, as an EdgeSet of edge_graph().
    EdgeSet face_boundary(int face) const;

  private:
    int nverts_ = 0;
    std::vector<std::array<int, 3>> faces_;
    std::vector<std::pair<int, int>> edges_;
};

// True iff every derived edge lies in an even number of faces of c;
// the boundary-sum criterion is exposed for cross-checking.
bool is_two_cycle(const Hypergraph2& h, const FaceSet& c);
bool is_two_cycle_by_boundaries(const Hypergraph2& h, const FaceSet& c);

// Edge-face incidence matrix: row per derived edge, column per face.
gf2::BitMatrix face_incidence(const Hypergraph2& h);

Hypergraph2 complete_hypergraph(int n);
// Tetrahedron T_A: the four 3-subsets of {a,b,c,d}, in complete_hypergraph(n).
FaceSet tetrahedron(int n, const std::array<int, 4>& a);

struct TwoCycleSpace {
    std::size_t dim = 0;
    std::vector<FaceSet> basis;  // T_{ijk(n-1)} over i < j < k < n-1, lexicographic
};

// 2-cycles of the complete hypergraph; dim = C(n-1, 3), verified by rank.
TwoCycleSpace complete_2cycle_space(int n);

// Coefficients over the complete_2cycle_space basis: a tetrahedron
// T_{ijk(n-1)} is selected iff face {i,j,k} of c avoids vertex n-1.
gf2::BitVec decompose_two_cycle(int n, const FaceSet& c);

// Every 5-subset relation sum_{j in A} T_{A \ {j}} = 0 holds and these
// relations span all linear relations between tetrahedra.
bool tetrahedra_relation_check(int n);

// The grid [n]^ell. Points in lexicographic order; a row fixes every
// coordinate but one.
class RookGrid {
  public:
    RookGrid(int n, int ell);

    int n() const { return n_; }
    int ell() const { return ell_; }
    std::size_t npoints() const { return npoints_; }
    std::size_t point_index(const std::vector<int>& coords) const;
    std::vector<int> point(std::size_t index) const;

  private:
    int n_ = 0, ell_ = 0;
    std::size_t npoints_ = 1;
};

// True iff every row meets c in an even number of points.
bool is_rook_cycle(const RookGrid& g, const PointSet& c);
// Product P_1 x ... x P_ell of 2-element subsets of [n].
PointSet parallelepiped(const RookGrid& g, const std::vector<std::pair<int, int>>& ps);
// Row-parity constraints; rook cycles = kernel.
gf2::BitMatrix rook_constraints(const RookGrid& g);
std::size_t rook_space_dim(const RookGrid& g);

// Coefficients over the parallelepipeds P(a) spanned by a and (n-1,...,n-1),
// for a in [n-1]^ell in lexicographic order: P(a) is selected iff a in c.
gf2::BitVec rook_decompose(const RookGrid& g, const PointSet& c);
PointSet rook_recombine(const RookGrid& g, const gf2::BitVec& coeffs);

// Tripartite 2-hypergraph on [3] x [n] whose faces are the transversal
// triples; face i corresponds to point i of the [n]^3 grid, carrying
// 2-cycles to rook cycles and back.
struct HyperRookBridge {
    Hypergraph2 hyper;
    RookGrid grid;
};

HyperRookBridge hyper_rook_bridge(int n);

struct EulerReport {
    int b0 = 0, b1 = 0, b2 = 0;
    int v = 0, e = 0, f = 0;
    bool identity_holds = false;  // b0 - b1 + b2 == v - e + f
};

EulerReport euler_report(const Hypergraph2& h);

struct ExtremalReport {
    enum Case { closed, bounded, not_applicable } applied = not_applicable;
    bool face_connected = false;
    bool inequality_holds = false;
    int v = 0, e = 0, f = 0;
};

// Checks the Euler-characteristic extremal inequalities: for face-connected
// hypergraphs with every edge in exactly two faces, F <= 2V - 4; with edge
// degrees <= 2 and some degree-1 edge, V - E + F <= 1.
ExtremalReport extremal_check(const Hypergraph2& h);

// Padding moves that keep the 2-cycle count: a new face sharing exactly one
// vertex (+2V, +3E, +1F), or exactly one edge (+1V, +2E, +1F).
Hypergraph2 add_face_by_vertex(const Hypergraph2& h, int v);
Hypergraph2 add_face_by_edge(const Hypergraph2& h, int edge_index);

// Two connected 2-hypergraphs with equal (V, E, F) but 2-cycle dimensions 0
// and 1: a padded disk triangulation and a padded 6-vertex projective-plane
// triangulation.
std::pair<Hypergraph2, Hypergraph2> matched_counts_fixture();

}  // namespace cycles
