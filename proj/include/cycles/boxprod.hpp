#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cycles/graph.hpp"
#include "cycles/symmetry.hpp"

namespace cycles {

// The box product K [] L: vertices are ordered pairs (a, b), edges are
// (a, bc) over an edge bc of L and (bc, a) over an edge bc of K. Cells are
// ordered pairs (sigma, tau) of a K-edge and an L-edge; the boundary of a
// cell is the 4-edge 1-cycle ab[]uv = (a,u)(b,u)(b,v)(a,v).
class BoxProduct {
  public:
    BoxProduct() = default;
    BoxProduct(Graph k, Graph l);

    const Graph& left() const { return left_; }
    const Graph& right() const { return right_; }
    const Graph& product() const { return product_; }

    int vertex(int a, int b) const { return a * right_.nverts() + b; }
    std::pair<int, int> vertex_pair(int p) const {
        return {p / right_.nverts(), p % right_.nverts()};
    }
    // Product edge (a, tau): both endpoints share left coordinate a.
    int vertical_edge(int a, int tau) const;
    // Product edge (sigma, b): both endpoints share right coordinate b.
    int horizontal_edge(int sigma, int b) const;

    std::size_t ncells() const {
        return static_cast<std::size_t>(left_.nedges()) * right_.nedges();
    }
    std::size_t cell_index(int sigma, int tau) const {
        return static_cast<std::size_t>(sigma) * right_.nedges() + tau;
    }
    std::pair<int, int> cell(std::size_t idx) const {
        return {static_cast<int>(idx) / right_.nedges(), static_cast<int>(idx) % right_.nedges()};
    }

    // Boundary 1-cycle of the cell (sigma, tau), as an EdgeSet of product().
    EdgeSet boundary(int sigma, int tau) const;
    // All cell boundaries, row i = boundary of cell i.
    gf2::BitMatrix boundary_matrix() const;

  private:
    Graph left_, right_, product_;
};

struct HomologySpace {
    CycleBasis z1;               // fundamental basis of the product graph
    std::size_t boundary_rank = 0;
    std::size_t quotient_dim = 0;  // dim Z1 - boundary_rank
};

HomologySpace boundary_space(const BoxProduct& p);
std::size_t quotient_dim(const BoxProduct& p);

// True iff c1 + c2 is a sum of boundaries. Both must be 1-cycles.
bool homologous(const BoxProduct& p, const EdgeSet& c1, const EdgeSet& c2);

// (c_x over K, c_y over L): an edge is in a projection iff an odd number of
// opposite-factor vertices place it in c. Requires c to be a 1-cycle; both
// outputs are 1-cycles of their factors.
std::pair<EdgeSet, EdgeSet> projections(const BoxProduct& p, const EdgeSet& c);

// a x C and C x b for an edge set C of the appropriate factor.
EdgeSet left_cycle(const BoxProduct& p, int a, const EdgeSet& c_right);
EdgeSet right_cycle(const BoxProduct& p, const EdgeSet& c_left, int b);

struct KunnethReduction {
    EdgeSet c_k, c_l;       // the unique factor cycles with c ~ c_k x b + a x c_l
    gf2::BitVec witness;    // boundary coefficients certifying the reduction
};

// Kunneth reduction at basepoints a in K, b in L; requires both factors
// connected.
KunnethReduction kunneth_reduce(const BoxProduct& p, const EdgeSet& c, int a, int b);

// Special cycles in a square K [] K (left() == right() required).
EdgeSet symmetrized_cycle(const BoxProduct& p, int a, const EdgeSet& c);
// The next three take the base cycle as a vertex sequence: the construction
// depends on the cyclic order, not just the edge set.
EdgeSet diagonal_cycle(const BoxProduct& p, const std::vector<int>& verts);
EdgeSet near_diagonal_cycle(const BoxProduct& p, const std::vector<int>& verts);
EdgeSet antidiagonal_cycle(const BoxProduct& p, const std::vector<int>& verts);
// The 12-edge symmetric cycle around the star with the given center and
// leaves; lies in the deleted square.
EdgeSet triodic_cycle(const BoxProduct& p, int center, const std::array<int, 3>& leaves);

// The swap (x, y) -> (y, x) as a vertex involution of the product graph.
Involution square_swap(const BoxProduct& p);

// dim of the swap-fixed subspace of Z1(K [] K); K must be connected. Equals
// V*E - V*(V-1)/2.
int symmetric_square_dim(const Graph& k);

// Deleted box square: the induced subgraph of K [] K on pairs (a, b) with
// a != b, plus the surviving cells (pairs of non-adjacent edges).
struct DeletedSquare {
    Graph base;
    BoxProduct full;
    Graph graph;                               // the deleted square itself
    std::vector<int> vert_map;                 // product vertex -> vertex, -1 if dropped
    std::vector<std::pair<int, int>> pairs;    // vertex -> (a, b)
    std::vector<int> edge_map;                 // product edge -> edge, -1 if dropped
    std::vector<std::pair<int, int>> cells;    // non-adjacent (sigma, tau), lexicographic

    EdgeSet boundary(std::size_t cell) const;  // over graph
    gf2::BitMatrix boundary_matrix() const;
    // Maps an EdgeSet of the full product into the deleted square; every set
    // edge must survive.
    EdgeSet restrict(const EdgeSet& product_set) const;
};

DeletedSquare deleted_box_square(const Graph& k);
// dim Z1(deleted square) - rank of the surviving boundaries.
int deleted_square_quotient_dim(const Graph& k);

// Span-membership harness over named generator families.
enum class Family { boundaries, left, right, symmetrized, diagonal, near_diagonal, triodic };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

struct HarnessQuery {
    Graph base;
    bool deleted_ambient = false;
    std::vector<Family> families;
    bool mod_boundaries = false;  // append boundaries even if not listed
    EdgeSet target;               // over the ambient graph's edges
};

struct HarnessResult {
    bool in_span = false;
    std::vector<std::string> tags;   // one per generator row
    gf2::BitMatrix generators;       // rows over the ambient edge space
    gf2::BitVec witness;             // coefficients over rows, when in_span
    gf2::BitVec certificate;         // functional orthogonal to every row but
                                     // pairing 1 with the target, otherwise
};

// Decides span membership of the target and returns a machine-checkable
// certificate either way.
HarnessResult span_harness(const HarnessQuery& q);

}  // namespace cycles
