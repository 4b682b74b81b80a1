#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cycles/graph.hpp"
#include "cycles/symmetry.hpp"

namespace cycles {

// A set of 2-cells (ordered pairs of host edges), as a GF(2) vector over the
// universe's cell order.
using CellSet = gf2::BitVec;

enum class SquareMode { full, deleted };

// Cells of the combinatorial square K x K (all ordered edge pairs) or of the
// deleted square (pairs of edges sharing no vertex), in lexicographic order.
class CellUniverse {
  public:
    static CellUniverse full_square(Graph host);
    static CellUniverse deleted_square(Graph host);

    const Graph& host() const { return host_; }
    SquareMode mode() const { return mode_; }
    std::size_t ncells() const { return cells_.size(); }
    const std::vector<std::pair<int, int>>& cells() const { return cells_; }
    std::pair<int, int> cell(std::size_t i) const { return cells_[i]; }
    // Position of (sigma, tau), or -1 when the pair is not a cell here.
    int cell_index(int sigma, int tau) const;

  private:
    Graph host_;
    SquareMode mode_ = SquareMode::full;
    std::vector<std::pair<int, int>> cells_;
    std::vector<int> index_;
};

// Section {tau : (sigma, tau) in c} as an EdgeSet of the host, and its mirror.
EdgeSet row_section(const CellUniverse& u, const CellSet& c, int sigma);
EdgeSet col_section(const CellUniverse& u, const CellSet& c, int sigma);

// A cell set is a 2-cycle iff all its sections are 1-cycles; two further
// equivalent criteria (per-vertex incidence parity, vanishing boundary sum)
// are exposed for cross-checking.
bool is_cell_2cycle(const CellUniverse& u, const CellSet& c);
bool is_cell_2cycle_by_incidence(const CellUniverse& u, const CellSet& c);
bool is_cell_2cycle_by_boundaries(const CellUniverse& u, const CellSet& c);

// Product cell set {(sigma, tau) : sigma in z1, tau in z2}. torus() insists
// on simple-cycle factors; product_cells takes arbitrary edge sets. Every
// requested cell must exist in the universe.
CellSet torus(const CellUniverse& u, const EdgeSet& z1, const EdgeSet& z2);
CellSet product_cells(const CellUniverse& u, const EdgeSet& a, const EdgeSet& b);

// Per-(vertex, edge) incidence parity constraints; 2-cycles = kernel.
gf2::BitMatrix cell_constraints(const CellUniverse& u);
std::size_t h2_dim_by_constraints(const CellUniverse& u);

struct H2Space {
    std::size_t dim = 0;
    std::vector<CellSet> basis;
};

// 2-cycle space. Full squares get the product basis over fundamental cycles;
// deleted squares get a constraint-kernel basis.
H2Space h2_space(const CellUniverse& u);

// {C_i x C_j} for a caller-supplied basis of Z1; verifies the input is a
// basis and that the products span the 2-cycle space.
std::vector<CellSet> kunneth2_basis(const Graph& g, const std::vector<EdgeSet>& z1_basis);

// The adjacency-preserving bijection between deleted-square cells of K_{n,n}
// and full-square cells of tilde_graph(n):
// (s1 s2', t1 t2') -> (s1 t1', s2 t2'). Construction verifies involutivity
// and cell-adjacency preservation.
struct KnnTildeMap {
    CellUniverse domain;             // deleted square of K_{n,n}
    CellUniverse codomain;           // full square of tilde_graph(n)
    std::vector<std::size_t> forward;
    std::vector<std::size_t> inverse;

    CellSet push(const CellSet& c) const;
    CellSet pull(const CellSet& c) const;
};

KnnTildeMap knn_tilde_map(int n);

// Cell involutions: factor swap (sigma, tau) -> (tau, sigma), or
// (sigma, tau) -> (t sigma, t tau) for an involution t of the host.
struct CellSymmetry {
    enum Kind { swap_factors, t_cross_t } kind = swap_factors;
    std::optional<Involution> t;

    static CellSymmetry swap() { return {swap_factors, std::nullopt}; }
    static CellSymmetry twisted(Involution inv) { return {t_cross_t, std::move(inv)}; }
};

gf2::BitMatrix cell_action(const CellUniverse& u, const CellSymmetry& s);

// Fixed subspace of the 2-cycle space under the cell involution. For full
// squares under swap the basis comes out as
// {C_i x C_j + C_j x C_i : i < j} u {C_i x C_i}.
H2Space symmetric_h2(const CellUniverse& u, const CellSymmetry& s);

struct SpanCheck {
    bool spanning = false;
    std::size_t space_dim = 0;
    std::size_t generator_count = 0;
    std::vector<gf2::BitVec> witnesses;       // per symmetric-basis vector, when spanning
    std::optional<CellSet> counterexample;    // a symmetric 2-cycle outside the span
    std::optional<gf2::BitVec> certificate;   // functional separating it
};

// Checks that symmetrized tori over vertex-disjoint 4-cycles together with
// deleted squares of K_{3,3} subgraphs span the swap-symmetric 2-cycle space
// of the deleted square of K_{n,n}.
SpanCheck knn_symmetric_span_check(int n);

struct TxtAudit {
    int n = 0;
    int computed_dim = 0;        // fixed-subspace dimension, linear algebra
    int orbit_count = 0;         // independent oracle: orbits of the action on
                                 // a symmetric Kunneth basis
    int formula_dim = 0;         // the claimed closed form C(q+2, 2), q=(n^2-3n)/2
    bool agrees = false;
};

// Audits the claimed count of (t x t)-symmetric 2-cycles in the square of
// tilde_graph(n) against two independent computations.
TxtAudit txt_symmetric_audit(int n);

}  // namespace cycles
