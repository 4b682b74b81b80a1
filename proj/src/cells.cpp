#include "cycles/cells.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cycles/boxprod.hpp"

namespace cycles {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_host(const CellUniverse& u, const CellSet& c, const char* who) {
    require(c.size() == u.ncells(), std::string(who) + ": host mismatch");
}

bool edges_disjoint(const Graph& g, int s, int t) {
    auto [a, b] = g.edge(s);
    auto [u, v] = g.edge(t);
    return a != u && a != v && b != u && b != v;
}

bool edges_share_vertex(const Graph& g, int s, int t) {
    return !edges_disjoint(g, s, t);
}

}  // namespace

CellUniverse CellUniverse::full_square(Graph host) {
    CellUniverse u;
    u.host_ = std::move(host);
    u.mode_ = SquareMode::full;
    const int e = u.host_.nedges();
    u.index_.assign(static_cast<std::size_t>(e) * e, -1);
    for (int s = 0; s < e; ++s)
        for (int t = 0; t < e; ++t) {
            u.index_[static_cast<std::size_t>(s) * e + t] = static_cast<int>(u.cells_.size());
            u.cells_.push_back({s, t});
        }
    return u;
}

CellUniverse CellUniverse::deleted_square(Graph host) {
    CellUniverse u;
    u.host_ = std::move(host);
    u.mode_ = SquareMode::deleted;
    const int e = u.host_.nedges();
    u.index_.assign(static_cast<std::size_t>(e) * e, -1);
    for (int s = 0; s < e; ++s)
        for (int t = 0; t < e; ++t) {
            if (!edges_disjoint(u.host_, s, t)) continue;
            u.index_[static_cast<std::size_t>(s) * e + t] = static_cast<int>(u.cells_.size());
            u.cells_.push_back({s, t});
        }
    return u;
}

int CellUniverse::cell_index(int sigma, int tau) const {
    return index_[static_cast<std::size_t>(sigma) * host_.nedges() + tau];
}

EdgeSet row_section(const CellUniverse& u, const CellSet& c, int sigma) {
    check_host(u, c, "row_section");
    EdgeSet s(u.host().nedges());
    for (int tau = 0; tau < u.host().nedges(); ++tau) {
        int i = u.cell_index(sigma, tau);
        if (i >= 0 && c.get(i)) s.set(tau);
    }
    return s;
}

EdgeSet col_section(const CellUniverse& u, const CellSet& c, int sigma) {
    check_host(u, c, "col_section");
    EdgeSet s(u.host().nedges());
    for (int tau = 0; tau < u.host().nedges(); ++tau) {
        int i = u.cell_index(tau, sigma);
        if (i >= 0 && c.get(i)) s.set(tau);
    }
    return s;
}

bool is_cell_2cycle(const CellUniverse& u, const CellSet& c) {
    check_host(u, c, "is_cell_2cycle");
    for (int sigma = 0; sigma < u.host().nedges(); ++sigma) {
        if (!is_one_cycle(u.host(), row_section(u, c, sigma))) return false;
        if (!is_one_cycle(u.host(), col_section(u, c, sigma))) return false;
    }
    return true;
}

bool is_cell_2cycle_by_incidence(const CellUniverse& u, const CellSet& c) {
    check_host(u, c, "is_cell_2cycle_by_incidence");
    return !cell_constraints(u).multiply(c).any();
}

bool is_cell_2cycle_by_boundaries(const CellUniverse& u, const CellSet& c) {
    check_host(u, c, "is_cell_2cycle_by_boundaries");
    BoxProduct p(u.host(), u.host());
    EdgeSet sum(p.product().nedges());
    for (std::size_t i : c.ones()) {
        auto [s, t] = u.cell(i);
        sum ^= p.boundary(s, t);
    }
    return !sum.any();
}

CellSet product_cells(const CellUniverse& u, const EdgeSet& a, const EdgeSet& b) {
    require(a.size() == static_cast<std::size_t>(u.host().nedges()) && a.size() == b.size(),
            "product_cells: factor host mismatch");
    CellSet c(u.ncells());
    for (std::size_t s : a.ones())
        for (std::size_t t : b.ones()) {
            int i = u.cell_index(static_cast<int>(s), static_cast<int>(t));
            require(i >= 0, "product_cells: requested cell is missing from this universe");
            c.set(i);
        }
    return c;
}

CellSet torus(const CellUniverse& u, const EdgeSet& z1, const EdgeSet& z2) {
    require(is_simple_cycle(u.host(), z1) && is_simple_cycle(u.host(), z2),
            "torus: factors must be simple cycles");
    return product_cells(u, z1, z2);
}

gf2::BitMatrix cell_constraints(const CellUniverse& u) {
    const Graph& g = u.host();
    gf2::BitMatrix m(2 * static_cast<std::size_t>(g.nverts()) * g.nedges(), u.ncells());
    std::size_t r = 0;
    for (int v = 0; v < g.nverts(); ++v)
        for (int beta = 0; beta < g.nedges(); ++beta) {
            for (auto [w, alpha] : g.incident(v)) {
                int i = u.cell_index(alpha, beta);
                if (i >= 0) m.row(r).flip(i);
                int j = u.cell_index(beta, alpha);
                if (j >= 0) m.row(r + 1).flip(j);
            }
            r += 2;
        }
    return m;
}

std::size_t h2_dim_by_constraints(const CellUniverse& u) {
    return u.ncells() - gf2::rank(cell_constraints(u));
}

H2Space h2_space(const CellUniverse& u) {
    H2Space h;
    if (u.mode() == SquareMode::full) {
        auto cb = cycle_space_basis(u.host());
        for (const EdgeSet& ci : cb.basis)
            for (const EdgeSet& cj : cb.basis)
                h.basis.push_back(product_cells(u, ci, cj));
        h.dim = h.basis.size();
        for (const CellSet& b : h.basis)
            if (!is_cell_2cycle(u, b)) throw std::logic_error("h2_space: basis element is not a 2-cycle");
        if (gf2::rank(gf2::BitMatrix(h.basis)) != h.dim)
            throw std::logic_error("h2_space: product basis is dependent");
    } else {
        h.basis = gf2::kernel_basis(cell_constraints(u));
        h.dim = h.basis.size();
        for (const CellSet& b : h.basis)
            if (!is_cell_2cycle(u, b)) throw std::logic_error("h2_space: kernel vector is not a 2-cycle");
    }
    return h;
}

std::vector<CellSet> kunneth2_basis(const Graph& g, const std::vector<EdgeSet>& z1_basis) {
    if (static_cast<int>(z1_basis.size()) != cycle_space_dim(g))
        throw std::domain_error("kunneth2_basis: wrong number of basis elements");
    for (const EdgeSet& c : z1_basis)
        if (!is_one_cycle(g, c)) throw std::domain_error("kunneth2_basis: element is not a 1-cycle");
    if (gf2::rank(gf2::BitMatrix(z1_basis)) != z1_basis.size())
        throw std::domain_error("kunneth2_basis: elements are dependent");

    CellUniverse u = CellUniverse::full_square(g);
    std::vector<CellSet> out;
    for (const EdgeSet& ci : z1_basis)
        for (const EdgeSet& cj : z1_basis) out.push_back(product_cells(u, ci, cj));
    std::size_t q2 = z1_basis.size() * z1_basis.size();
    if (gf2::rank(gf2::BitMatrix(out)) != q2 || q2 != h2_dim_by_constraints(u))
        throw std::logic_error("kunneth2_basis: products do not form a basis");
    return out;
}

CellSet KnnTildeMap::push(const CellSet& c) const {
    check_host(domain, c, "KnnTildeMap::push");
    CellSet out(codomain.ncells());
    for (std::size_t i : c.ones()) out.set(forward[i]);
    return out;
}

CellSet KnnTildeMap::pull(const CellSet& c) const {
    check_host(codomain, c, "KnnTildeMap::pull");
    CellSet out(domain.ncells());
    for (std::size_t i : c.ones()) out.set(inverse[i]);
    return out;
}

KnnTildeMap knn_tilde_map(int n) {
    require(n >= 2, "knn_tilde_map: n >= 2");
    Graph knn = complete_bipartite(n, n);
    Graph tn = tilde_graph(n);
    KnnTildeMap m{CellUniverse::deleted_square(knn), CellUniverse::full_square(tn), {}, {}};
    m.forward.assign(m.domain.ncells(), 0);
    m.inverse.assign(m.codomain.ncells(), 0);
    require(m.domain.ncells() == m.codomain.ncells(), "knn_tilde_map: cell counts differ");

    std::vector<bool> hit(m.codomain.ncells(), false);
    for (std::size_t i = 0; i < m.domain.ncells(); ++i) {
        auto [s, t] = m.domain.cell(i);
        int s1 = knn.edge(s).first, s2 = knn.edge(s).second - n;
        int t1 = knn.edge(t).first, t2 = knn.edge(t).second - n;
        int e1 = tn.edge_index(s1, n + t1);
        int e2 = tn.edge_index(s2, n + t2);
        if (e1 < 0 || e2 < 0) throw std::logic_error("knn_tilde_map: image edge missing");
        int j = m.codomain.cell_index(e1, e2);
        if (j < 0 || hit[j]) throw std::logic_error("knn_tilde_map: map is not a bijection");
        hit[j] = true;
        m.forward[i] = j;
        m.inverse[j] = i;

        // Involutivity: applying the same edge-pair formula to the image
        // (read in K_{n,n}) must return the original cell.
        int a1 = s1, a2 = t1, b1 = s2, b2 = t2;
        if (knn.edge_index(a1, n + b1) != s || knn.edge_index(a2, n + b2) != t)
            throw std::logic_error("knn_tilde_map: not involutive");
    }

    // Cells are adjacent iff one coordinate agrees and the other coordinates
    // share a vertex; the map must preserve this relation exactly.
    auto adjacent = [](const Graph& g, std::pair<int, int> c1, std::pair<int, int> c2) {
        return (c1.first == c2.first && edges_share_vertex(g, c1.second, c2.second)) ||
               (c1.second == c2.second && edges_share_vertex(g, c1.first, c2.first));
    };
    for (std::size_t i = 0; i < m.domain.ncells(); ++i)
        for (std::size_t j = i + 1; j < m.domain.ncells(); ++j) {
            bool before = adjacent(knn, m.domain.cell(i), m.domain.cell(j));
            bool after = adjacent(tn, m.codomain.cell(m.forward[i]), m.codomain.cell(m.forward[j]));
            if (before != after) throw std::logic_error("knn_tilde_map: adjacency not preserved");
        }
    return m;
}

gf2::BitMatrix cell_action(const CellUniverse& u, const CellSymmetry& s) {
    gf2::BitMatrix m(u.ncells(), u.ncells());
    for (std::size_t i = 0; i < u.ncells(); ++i) {
        auto [sigma, tau] = u.cell(i);
        int j;
        if (s.kind == CellSymmetry::swap_factors) {
            j = u.cell_index(tau, sigma);
        } else {
            require(s.t.has_value(), "cell_action: missing involution");
            j = u.cell_index(image_edge(u.host(), *s.t, sigma), image_edge(u.host(), *s.t, tau));
        }
        if (j < 0) throw std::logic_error("cell_action: universe not closed under the symmetry");
        m.set(static_cast<std::size_t>(j), i);
    }
    return m;
}

H2Space symmetric_h2(const CellUniverse& u, const CellSymmetry& s) {
    H2Space all = h2_space(u);
    std::vector<CellSet> fixed = gf2::fixed_subspace_basis(all.basis, cell_action(u, s));

    if (u.mode() == SquareMode::full && s.kind == CellSymmetry::swap_factors) {
        // {C_i x C_j + C_j x C_i : i < j} u {C_i x C_i} over the fundamental basis.
        auto cb = cycle_space_basis(u.host());
        std::vector<CellSet> sym;
        for (std::size_t i = 0; i < cb.basis.size(); ++i) {
            sym.push_back(product_cells(u, cb.basis[i], cb.basis[i]));
            for (std::size_t j = i + 1; j < cb.basis.size(); ++j)
                sym.push_back(product_cells(u, cb.basis[i], cb.basis[j]) ^
                              product_cells(u, cb.basis[j], cb.basis[i]));
        }
        if (gf2::rank(gf2::BitMatrix(sym)) != fixed.size() || sym.size() != fixed.size())
            throw std::logic_error("symmetric_h2: symmetrized basis has the wrong rank");
        return {sym.size(), std::move(sym)};
    }
    return {fixed.size(), std::move(fixed)};
}

SpanCheck knn_symmetric_span_check(int n) {
    require(n >= 2, "knn_symmetric_span_check: n >= 2");
    Graph g = complete_bipartite(n, n);
    CellUniverse u = CellUniverse::deleted_square(g);
    H2Space sym = symmetric_h2(u, CellSymmetry::swap());

    // Symmetrized tori over vertex-disjoint 4-cycles.
    std::vector<EdgeSet> four_cycles;
    std::vector<std::vector<int>> supports;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            for (int b = 0; b < n; ++b)
                for (int d = b + 1; d < n; ++d) {
                    four_cycles.push_back(edge_set(
                        g, {{a, n + b}, {c, n + b}, {c, n + d}, {a, n + d}}));
                    supports.push_back({a, c, n + b, n + d});
                }
    std::vector<gf2::BitVec> gens;
    for (std::size_t i = 0; i < four_cycles.size(); ++i)
        for (std::size_t j = i + 1; j < four_cycles.size(); ++j) {
            bool disjoint = true;
            for (int v : supports[i])
                for (int w : supports[j])
                    if (v == w) disjoint = false;
            if (!disjoint) continue;
            gens.push_back(torus(u, four_cycles[i], four_cycles[j]) ^
                           torus(u, four_cycles[j], four_cycles[i]));
        }

    // Deleted squares of K_{3,3} subgraphs: all cells over the subgraph edges.
    std::vector<std::vector<int>> triples;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
    for (const auto& left : triples)
        for (const auto& right : triples) {
            std::vector<int> sub_edges;
            for (int a : left)
                for (int b : right) sub_edges.push_back(g.edge_index(a, n + b));
            CellSet cs(u.ncells());
            for (int s : sub_edges)
                for (int t : sub_edges) {
                    int i = u.cell_index(s, t);
                    if (i >= 0) cs.set(i);
                }
            gens.push_back(std::move(cs));
        }

    SpanCheck out;
    out.space_dim = sym.dim;
    out.generator_count = gens.size();
    out.spanning = true;
    for (const CellSet& s : sym.basis) {
        auto w = gf2::solve_in_span(gens, s);
        if (w) {
            out.witnesses.push_back(*w);
            continue;
        }
        out.spanning = false;
        out.counterexample = s;
        gf2::BitMatrix mat(gens);
        if (gens.empty()) mat = gf2::BitMatrix(0, u.ncells());
        for (const gf2::BitVec& y : gf2::kernel_basis(mat))
            if (y.dot(s)) { out.certificate = y; break; }
        break;
    }
    return out;
}

TxtAudit txt_symmetric_audit(int n) {
    require(n >= 3, "txt_symmetric_audit: n >= 3");
    Graph tn = tilde_graph(n);
    Involution t = part_swap(n);
    CellUniverse u = CellUniverse::full_square(tn);

    TxtAudit a;
    a.n = n;
    a.computed_dim = static_cast<int>(symmetric_h2(u, CellSymmetry::twisted(t)).dim);

    // Independent route: the t x t action permutes the Kunneth basis built
    // from a t-symmetric basis of Z1(tilde n); the fixed dimension is the
    // number of orbits of that permutation.
    TildeBasis tb = tilde_symmetric_basis(n);
    const int q = static_cast<int>(tb.elements.size());
    std::vector<CellSet> prods;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            prods.push_back(product_cells(u, tb.elements[i], tb.elements[j]));
    std::vector<bool> seen(prods.size(), false);
    int orbits = 0;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            std::size_t idx = static_cast<std::size_t>(i) * q + j;
            if (seen[idx]) continue;
            ++orbits;
            while (!seen[idx]) {
                seen[idx] = true;
                auto [x, y] = std::pair{idx / q, idx % q};
                idx = static_cast<std::size_t>(tb.t_image[x]) * q + tb.t_image[y];
            }
        }
    a.orbit_count = orbits;
    if (a.orbit_count != a.computed_dim)
        throw std::logic_error("txt_symmetric_audit: oracle disagrees with linear algebra");

    int qq = (n * n - 3 * n) / 2;
    a.formula_dim = (qq + 2) * (qq + 1) / 2;
    a.agrees = a.formula_dim == a.computed_dim;
    return a;
}

}  // namespace cycles
