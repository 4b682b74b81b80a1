#include "cycles/boxprod.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cycles {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

BoxProduct::BoxProduct(Graph k, Graph l) : left_(std::move(k)), right_(std::move(l)) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < left_.nverts(); ++a)
        for (auto [b, c] : right_.edges())
            edges.push_back({vertex(a, b), vertex(a, c)});
    for (auto [b, c] : left_.edges())
        for (int a = 0; a < right_.nverts(); ++a)
            edges.push_back({vertex(b, a), vertex(c, a)});
    product_ = Graph(left_.nverts() * right_.nverts(), std::move(edges));
}

int BoxProduct::vertical_edge(int a, int tau) const {
    auto [u, v] = right_.edge(tau);
    return product_.edge_index(vertex(a, u), vertex(a, v));
}

int BoxProduct::horizontal_edge(int sigma, int b) const {
    auto [u, v] = left_.edge(sigma);
    return product_.edge_index(vertex(u, b), vertex(v, b));
}

EdgeSet BoxProduct::boundary(int sigma, int tau) const {
    auto [a, b] = left_.edge(sigma);
    EdgeSet s(product_.nedges());
    s.set(horizontal_edge(sigma, right_.edge(tau).first));
    s.set(horizontal_edge(sigma, right_.edge(tau).second));
    s.set(vertical_edge(a, tau));
    s.set(vertical_edge(b, tau));
    return s;
}

gf2::BitMatrix BoxProduct::boundary_matrix() const {
    gf2::BitMatrix m(ncells(), product_.nedges());
    for (int s = 0; s < left_.nedges(); ++s)
        for (int t = 0; t < right_.nedges(); ++t)
            m.row(cell_index(s, t)) = boundary(s, t);
    return m;
}

HomologySpace boundary_space(const BoxProduct& p) {
    HomologySpace h;
    h.z1 = cycle_space_basis(p.product());
    h.boundary_rank = gf2::rank(p.boundary_matrix());
    h.quotient_dim = h.z1.basis.size() - h.boundary_rank;
    return h;
}

std::size_t quotient_dim(const BoxProduct& p) {
    return boundary_space(p).quotient_dim;
}

bool homologous(const BoxProduct& p, const EdgeSet& c1, const EdgeSet& c2) {
    if (!is_one_cycle(p.product(), c1) || !is_one_cycle(p.product(), c2))
        throw std::domain_error("homologous: inputs must be 1-cycles");
    return gf2::solve_in_span(p.boundary_matrix().rows(), c1 ^ c2).has_value();
}

std::pair<EdgeSet, EdgeSet> projections(const BoxProduct& p, const EdgeSet& c) {
    if (!is_one_cycle(p.product(), c)) throw std::domain_error("projections: input is not a 1-cycle");
    EdgeSet cx(p.left().nedges()), cy(p.right().nedges());
    for (int sigma = 0; sigma < p.left().nedges(); ++sigma) {
        int parity = 0;
        for (int b = 0; b < p.right().nverts(); ++b)
            parity ^= c.get(p.horizontal_edge(sigma, b));
        if (parity) cx.set(sigma);
    }
    for (int tau = 0; tau < p.right().nedges(); ++tau) {
        int parity = 0;
        for (int a = 0; a < p.left().nverts(); ++a)
            parity ^= c.get(p.vertical_edge(a, tau));
        if (parity) cy.set(tau);
    }
    return {cx, cy};
}

EdgeSet left_cycle(const BoxProduct& p, int a, const EdgeSet& c_right) {
    require(static_cast<int>(c_right.size()) == p.right().nedges(), "left_cycle: host mismatch");
    EdgeSet s(p.product().nedges());
    for (std::size_t tau : c_right.ones()) s.set(p.vertical_edge(a, static_cast<int>(tau)));
    return s;
}

EdgeSet right_cycle(const BoxProduct& p, const EdgeSet& c_left, int b) {
    require(static_cast<int>(c_left.size()) == p.left().nedges(), "right_cycle: host mismatch");
    EdgeSet s(p.product().nedges());
    for (std::size_t sigma : c_left.ones()) s.set(p.horizontal_edge(static_cast<int>(sigma), b));
    return s;
}

KunnethReduction kunneth_reduce(const BoxProduct& p, const EdgeSet& c, int a, int b) {
    if (!p.left().connected() || !p.right().connected())
        throw std::domain_error("kunneth_reduce: factors must be connected");
    auto [cx, cy] = projections(p, c);
    EdgeSet z = c ^ right_cycle(p, cx, b) ^ left_cycle(p, a, cy);
    auto witness = gf2::solve_in_span(p.boundary_matrix().rows(), z);
    if (!witness) throw std::logic_error("kunneth_reduce: residual is not a boundary sum");
    return {cx, cy, *witness};
}

namespace {

const Graph& square_base(const BoxProduct& p) {
    require(p.left() == p.right(), "special cycles need a square K [] K");
    return p.left();
}

}  // namespace

EdgeSet symmetrized_cycle(const BoxProduct& p, int a, const EdgeSet& c) {
    square_base(p);
    return left_cycle(p, a, c) ^ right_cycle(p, c, a);
}

EdgeSet diagonal_cycle(const BoxProduct& p, const std::vector<int>& verts) {
    const Graph& g = square_base(p);
    cycle_from_vertices(g, verts);  // validates the base cycle
    const std::size_t k = verts.size();
    EdgeSet s(p.product().nedges());
    for (std::size_t i = 0; i < k; ++i) {
        int vi = verts[i], vj = verts[(i + 1) % k];
        int e = g.edge_index(vi, vj);
        s.set(p.vertical_edge(vi, e));
        s.set(p.horizontal_edge(e, vj));
    }
    return s;
}

EdgeSet near_diagonal_cycle(const BoxProduct& p, const std::vector<int>& verts) {
    const Graph& g = square_base(p);
    cycle_from_vertices(g, verts);
    const std::size_t k = verts.size();
    EdgeSet s(p.product().nedges());
    for (std::size_t i = 0; i < k; ++i) {
        int vi = verts[i], v1 = verts[(i + 1) % k], v2 = verts[(i + 2) % k];
        int chord = g.edge_index(v1, v2);
        require(chord >= 0, "near_diagonal_cycle: missing chord between vertices two apart");
        s.set(p.vertical_edge(vi, chord));
        s.set(p.horizontal_edge(g.edge_index(vi, v1), v2));
    }
    return s;
}

EdgeSet antidiagonal_cycle(const BoxProduct& p, const std::vector<int>& verts) {
    const Graph& g = square_base(p);
    cycle_from_vertices(g, verts);
    const int k = static_cast<int>(verts.size());
    auto at = [&](int i) { return verts[((i % k) + k) % k]; };
    EdgeSet s(p.product().nedges());
    for (int i = 0; i < k; ++i) {
        // (v_i, w_i) -> (v_{i+1}, w_i) -> (v_{i+1}, w_{i+1}) with w_i = v_{-i}.
        s.set(p.horizontal_edge(g.edge_index(at(i), at(i + 1)), at(-i)));
        s.set(p.vertical_edge(at(i + 1), g.edge_index(at(-i), at(-i - 1))));
    }
    return s;
}

EdgeSet triodic_cycle(const BoxProduct& p, int center, const std::array<int, 3>& leaves) {
    const Graph& g = square_base(p);
    auto [l1, l2, l3] = leaves;
    require(l1 != l2 && l1 != l3 && l2 != l3 && l1 != center && l2 != center && l3 != center,
            "triodic_cycle: vertices must be distinct");
    for (int l : leaves)
        require(g.has_edge(center, l), "triodic_cycle: leaf not adjacent to center");

    // Half of the cycle; the other half swaps the coordinates of every edge.
    struct V { int a; int u, v; };  // vertical edge (a, uv)
    const int c = center;
    std::vector<V> half = {
        {l1, l3, c}, {l1, c, l2}, {l3, l2, c}, {l3, c, l1},
    };
    struct H { int u, v; int b; };  // horizontal edge (uv, b)
    std::vector<H> hhalf = {
        {l1, c, l2}, {c, l3, l2},
    };
    EdgeSet s(p.product().nedges());
    for (auto [a, u, v] : half) {
        s.set(p.vertical_edge(a, g.edge_index(u, v)));
        s.set(p.horizontal_edge(g.edge_index(u, v), a));  // swapped copy
    }
    for (auto [u, v, b] : hhalf) {
        s.set(p.horizontal_edge(g.edge_index(u, v), b));
        s.set(p.vertical_edge(b, g.edge_index(u, v)));    // swapped copy
    }
    return s;
}

Involution square_swap(const BoxProduct& p) {
    const Graph& g = square_base(p);
    std::vector<int> perm(p.product().nverts());
    for (int a = 0; a < g.nverts(); ++a)
        for (int b = 0; b < g.nverts(); ++b) perm[p.vertex(a, b)] = p.vertex(b, a);
    return make_involution(p.product(), std::move(perm));
}

int symmetric_square_dim(const Graph& k) {
    if (!k.connected()) throw std::domain_error("symmetric_square_dim: graph must be connected");
    BoxProduct p(k, k);
    auto basis = cycle_space_basis(p.product()).basis;
    return static_cast<int>(gf2::fixed_subspace_basis(basis, edge_action(p.product(), square_swap(p))).size());
}

EdgeSet DeletedSquare::boundary(std::size_t cell) const {
    auto [sigma, tau] = cells[cell];
    return restrict(full.boundary(sigma, tau));
}

gf2::BitMatrix DeletedSquare::boundary_matrix() const {
    gf2::BitMatrix m(cells.size(), graph.nedges());
    for (std::size_t i = 0; i < cells.size(); ++i) m.row(i) = boundary(i);
    return m;
}

EdgeSet DeletedSquare::restrict(const EdgeSet& product_set) const {
    require(product_set.size() == static_cast<std::size_t>(full.product().nedges()),
            "DeletedSquare::restrict: host mismatch");
    EdgeSet out(graph.nedges());
    for (std::size_t e : product_set.ones()) {
        int mapped = edge_map[e];
        require(mapped >= 0, "DeletedSquare::restrict: edge does not survive deletion");
        out.set(mapped);
    }
    return out;
}

DeletedSquare deleted_box_square(const Graph& k) {
    DeletedSquare ds;
    ds.base = k;
    ds.full = BoxProduct(k, k);
    const Graph& prod = ds.full.product();

    ds.vert_map.assign(prod.nverts(), -1);
    for (int a = 0; a < k.nverts(); ++a)
        for (int b = 0; b < k.nverts(); ++b)
            if (a != b) {
                ds.vert_map[ds.full.vertex(a, b)] = static_cast<int>(ds.pairs.size());
                ds.pairs.push_back({a, b});
            }

    std::vector<std::pair<int, int>> edges;
    std::vector<int> survivors;
    for (int e = 0; e < prod.nedges(); ++e) {
        auto [x, y] = prod.edge(e);
        if (ds.vert_map[x] >= 0 && ds.vert_map[y] >= 0) {
            edges.push_back({ds.vert_map[x], ds.vert_map[y]});
            survivors.push_back(e);
        }
    }
    ds.graph = Graph(static_cast<int>(ds.pairs.size()), edges);
    ds.edge_map.assign(prod.nedges(), -1);
    for (int e : survivors) {
        auto [x, y] = prod.edge(e);
        ds.edge_map[e] = ds.graph.edge_index(ds.vert_map[x], ds.vert_map[y]);
    }

    for (int s = 0; s < k.nedges(); ++s)
        for (int t = 0; t < k.nedges(); ++t) {
            auto [a, b] = k.edge(s);
            auto [u, v] = k.edge(t);
            if (a != u && a != v && b != u && b != v) ds.cells.push_back({s, t});
        }
    return ds;
}

int deleted_square_quotient_dim(const Graph& k) {
    DeletedSquare ds = deleted_box_square(k);
    return cycle_space_dim(ds.graph) - static_cast<int>(gf2::rank(ds.boundary_matrix()));
}

Family family_from_name(const std::string& name) {
    if (name == "boundaries") return Family::boundaries;
    if (name == "left") return Family::left;
    if (name == "right") return Family::right;
    if (name == "symmetrized") return Family::symmetrized;
    if (name == "diagonal") return Family::diagonal;
    if (name == "near_diagonal") return Family::near_diagonal;
    if (name == "triodic") return Family::triodic;
    throw std::invalid_argument("unknown generator family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::boundaries: return "boundaries";
        case Family::left: return "left";
        case Family::right: return "right";
        case Family::symmetrized: return "symmetrized";
        case Family::diagonal: return "diagonal";
        case Family::near_diagonal: return "near_diagonal";
        case Family::triodic: return "triodic";
    }
    return "?";
}

namespace {

// Generates every instance of a family as an EdgeSet over the full square,
// tagged for the harness report.
void generate_family(const BoxProduct& p, Family f,
                     std::vector<std::pair<std::string, EdgeSet>>& out) {
    const Graph& g = p.left();
    auto cycles_list = simple_cycles(g);
    std::string base = family_name(f);
    switch (f) {
        case Family::boundaries:
            for (int s = 0; s < g.nedges(); ++s)
                for (int t = 0; t < p.right().nedges(); ++t)
                    out.push_back({base + "(" + std::to_string(s) + "," + std::to_string(t) + ")",
                                   p.boundary(s, t)});
            break;
        case Family::left:
        case Family::right:
        case Family::symmetrized:
            for (const auto& verts : cycles_list) {
                EdgeSet c = cycle_from_vertices(g, verts);
                for (int a = 0; a < g.nverts(); ++a) {
                    std::string tag = base + "(v" + std::to_string(a) + ",c)";
                    if (f == Family::left) out.push_back({tag, left_cycle(p, a, c)});
                    else if (f == Family::right) out.push_back({tag, right_cycle(p, c, a)});
                    else out.push_back({tag, symmetrized_cycle(p, a, c)});
                }
            }
            break;
        case Family::diagonal:
            for (const auto& verts : cycles_list)
                out.push_back({base, diagonal_cycle(p, verts)});
            break;
        case Family::near_diagonal:
            for (auto verts : cycles_list) {
                bool chords_ok = true;
                for (std::size_t i = 0; i < verts.size() && chords_ok; ++i)
                    chords_ok = g.has_edge(verts[i], verts[(i + 2) % verts.size()]);
                if (!chords_ok) continue;
                out.push_back({base, near_diagonal_cycle(p, verts)});
                std::reverse(verts.begin(), verts.end());
                out.push_back({base, near_diagonal_cycle(p, verts)});
            }
            break;
        case Family::triodic:
            for (int c = 0; c < g.nverts(); ++c) {
                std::vector<int> nbrs;
                for (auto [w, e] : g.incident(c)) nbrs.push_back(w);
                for (int i = 0; i < static_cast<int>(nbrs.size()); ++i)
                    for (int j = 0; j < static_cast<int>(nbrs.size()); ++j)
                        for (int l = 0; l < static_cast<int>(nbrs.size()); ++l) {
                            if (i == j || i == l || j == l) continue;
                            out.push_back({base + "(v" + std::to_string(c) + ")",
                                           triodic_cycle(p, c, {nbrs[i], nbrs[j], nbrs[l]})});
                        }
            }
            break;
    }
}

}  // namespace

HarnessResult span_harness(const HarnessQuery& q) {
    BoxProduct full(q.base, q.base);
    DeletedSquare ds;
    if (q.deleted_ambient) ds = deleted_box_square(q.base);
    const Graph& ambient = q.deleted_ambient ? ds.graph : full.product();

    require(q.target.size() == static_cast<std::size_t>(ambient.nedges()),
            "span_harness: target size mismatch");
    require(is_one_cycle(ambient, q.target), "span_harness: target is not a 1-cycle");

    std::vector<Family> families = q.families;
    if (q.mod_boundaries &&
        std::find(families.begin(), families.end(), Family::boundaries) == families.end())
        families.push_back(Family::boundaries);

    HarnessResult res;
    std::vector<gf2::BitVec> rows;
    for (Family f : families) {
        if (q.deleted_ambient && f == Family::boundaries) {
            for (std::size_t i = 0; i < ds.cells.size(); ++i) {
                res.tags.push_back("boundaries(" + std::to_string(ds.cells[i].first) + "," +
                                   std::to_string(ds.cells[i].second) + ")");
                rows.push_back(ds.boundary(i));
            }
            continue;
        }
        std::vector<std::pair<std::string, EdgeSet>> raw;
        generate_family(full, f, raw);
        for (auto& [tag, vec] : raw) {
            EdgeSet v = std::move(vec);
            if (q.deleted_ambient) {
                // Keep only the instances that survive inside the deleted square.
                bool survives = true;
                for (std::size_t e : v.ones())
                    if (ds.edge_map[e] < 0) { survives = false; break; }
                if (!survives) continue;
                v = ds.restrict(v);
            }
            res.tags.push_back(tag);
            rows.push_back(std::move(v));
        }
    }

    res.generators = gf2::BitMatrix(rows);
    if (rows.empty()) res.generators = gf2::BitMatrix(0, ambient.nedges());

    if (auto w = gf2::solve_in_span(rows, q.target)) {
        res.in_span = true;
        res.witness = *w;
        if (gf2::combine(rows, res.witness) != q.target)
            throw std::logic_error("span_harness: witness check failed");
        return res;
    }

    res.in_span = false;
    res.certificate = gf2::BitVec(ambient.nedges());
    for (const gf2::BitVec& y : gf2::kernel_basis(res.generators)) {
        if (y.dot(q.target)) {
            res.certificate = y;
            break;
        }
    }
    if (!res.certificate.dot(q.target))
        throw std::logic_error("span_harness: no separating functional found");
    for (const auto& r : rows)
        if (res.certificate.dot(r))
            throw std::logic_error("span_harness: certificate not orthogonal to family");
    return res;
}

}  // namespace cycles
