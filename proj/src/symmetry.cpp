#include "cycles/symmetry.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cycles {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Involution make_involution(const Graph& g, std::vector<int> perm) {
    require(static_cast<int>(perm.size()) == g.nverts(), "involution: size mismatch");
    for (int v = 0; v < g.nverts(); ++v) {
        require(perm[v] >= 0 && perm[v] < g.nverts(), "involution: image out of range");
        require(perm[perm[v]] == v, "involution: not self-inverse");
    }
    for (auto [u, v] : g.edges())
        require(g.has_edge(perm[u], perm[v]), "involution: not edge-preserving");
    return Involution{std::move(perm)};
}

Involution identity_involution(const Graph& g) {
    std::vector<int> p(g.nverts());
    std::iota(p.begin(), p.end(), 0);
    return Involution{std::move(p)};
}

Involution part_swap(int n) {
    std::vector<int> p(2 * n);
    for (int j = 0; j < n; ++j) {
        p[j] = n + j;
        p[n + j] = j;
    }
    return Involution{std::move(p)};
}

Involution antipodal(const Graph& cycle) {
    int n = cycle.nverts();
    require(n % 2 == 0 && cycle == cycle_graph(n), "antipodal: expected an even cycle graph");
    std::vector<int> p(n);
    for (int v = 0; v < n; ++v) p[v] = (v + n / 2) % n;
    return Involution{std::move(p)};
}

int image_edge(const Graph& g, const Involution& t, int edge) {
    auto [u, v] = g.edge(edge);
    int i = g.edge_index(t.perm[u], t.perm[v]);
    require(i >= 0, "image_edge: involution is not edge-preserving");
    return i;
}

gf2::BitMatrix edge_action(const Graph& g, const Involution& t) {
    gf2::BitMatrix m(g.nedges(), g.nedges());
    for (int e = 0; e < g.nedges(); ++e) m.set(image_edge(g, t, e), e);
    return m;
}

EdgeSet apply_involution(const Graph& g, const Involution& t, const EdgeSet& q) {
    require(static_cast<int>(q.size()) == g.nedges(), "apply_involution: host mismatch");
    EdgeSet out(g.nedges());
    for (std::size_t e : q.ones()) out.set(image_edge(g, t, static_cast<int>(e)));
    return out;
}

SymmetryReport symmetric_cycle_dim(const Graph& g, const Involution& t) {
    SymmetryReport rep;
    for (int v = 0; v < g.nverts(); ++v)
        if (t.perm[v] == v) ++rep.fixed_vertices;
    for (int e = 0; e < g.nedges(); ++e)
        if (image_edge(g, t, e) == e) ++rep.symmetric_edges;

    rep.symmetric_dim = static_cast<int>(symmetric_cycle_basis(g, t).size());

    if (g.connected() && rep.fixed_vertices == 0) {
        int i = rep.symmetric_edges;
        rep.formula_dim = i == 0 ? (g.nedges() - g.nverts() + 2) / 2
                                 : (g.nedges() - g.nverts() + i) / 2;
    }
    return rep;
}

std::vector<EdgeSet> symmetric_cycle_basis(const Graph& g, const Involution& t) {
    return gf2::fixed_subspace_basis(cycle_space_basis(g).basis, edge_action(g, t));
}

std::pair<Graph, Involution> subdivide_all(const Graph& g, const Involution& t) {
    // Vertex n + i is the midpoint of edge i.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.nedges(); ++i) {
        auto [a, b] = g.edge(i);
        edges.push_back({a, g.nverts() + i});
        edges.push_back({b, g.nverts() + i});
    }
    Graph sub(g.nverts() + g.nedges(), std::move(edges));

    std::vector<int> perm(sub.nverts());
    for (int v = 0; v < g.nverts(); ++v) perm[v] = t.perm[v];
    for (int i = 0; i < g.nedges(); ++i) perm[g.nverts() + i] = g.nverts() + image_edge(g, t, i);
    return {sub, make_involution(sub, std::move(perm))};
}

Graph quotient_graph(const Graph& g, const Involution& t) {
    auto fail = [](const char* what) { throw std::domain_error(std::string("quotient_graph: ") + what); };
    if (!g.connected()) fail("graph is not connected");
    for (int v = 0; v < g.nverts(); ++v)
        if (t.perm[v] == v) fail("involution has a fixed vertex");
    for (int e = 0; e < g.nedges(); ++e)
        if (image_edge(g, t, e) == e) fail("involution has a symmetric edge");
    for (int v = 0; v < g.nverts(); ++v) {
        for (auto [w, e] : g.incident(v))
            if (g.has_edge(v, t.perm[w])) fail("a vertex is joined to two mutually symmetric vertices");
    }

    // Orbits in order of their smaller representative.
    std::vector<int> orbit(g.nverts(), -1);
    int norb = 0;
    for (int v = 0; v < g.nverts(); ++v) {
        if (orbit[v] >= 0) continue;
        orbit[v] = orbit[t.perm[v]] = norb++;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.push_back({orbit[u], orbit[v]});
    Graph q(norb, std::move(edges));
    if (q.nverts() * 2 != g.nverts() || q.nedges() * 2 != g.nedges())
        throw std::logic_error("quotient_graph: orbit counts off");
    return q;
}

EdgeSet tilde_fold(int n, const EdgeSet& c) {
    Graph tn = tilde_graph(n);
    require(static_cast<int>(c.size()) == tn.nedges(), "tilde_fold: host mismatch");
    if (!is_one_cycle(tn, c)) throw std::domain_error("tilde_fold: input is not a 1-cycle");
    if (apply_involution(tn, part_swap(n), c) != c)
        throw std::domain_error("tilde_fold: input is not part-swap symmetric");

    Graph kn = complete_graph(n);
    EdgeSet out(kn.nedges());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c.get(tn.edge_index(i, n + j))) out.set(kn.edge_index(i, j));
    return out;
}

TildeBasis tilde_symmetric_basis(int n) {
    require(n >= 3, "tilde_symmetric_basis: n >= 3");
    Graph tn = tilde_graph(n);
    Involution t = part_swap(n);

    // 1-based labels of the construction: vertex i is i-1, its copy is n+i-1.
    EdgeSet tree(tn.nedges());
    tree.set(tn.edge_index(2, n + 1));                          // 32'
    for (int i = 2; i <= n; ++i) tree.set(tn.edge_index(i - 1, n));      // i1'
    for (int j = 2; j <= n; ++j) tree.set(tn.edge_index(0, n + j - 1));  // 1j'
    SpanningForest forest = forest_from_tree_edges(tn, tree);
    require(forest.components() == 1, "tilde_symmetric_basis: tree does not span");

    auto fund = [&](int i, int j) {  // fundamental cycle of edge ij'
        return fundamental_cycle(tn, forest, tn.edge_index(i - 1, n + j - 1));
    };

    TildeBasis tb;
    EdgeSet k3t = fund(2, 3);
    tb.elements.push_back(k3t);
    tb.t_image.push_back(0);
    tb.fixed_count = 1;
    if (apply_involution(tn, t, k3t) != k3t)
        throw std::logic_error("tilde_symmetric_basis: fixed element is not fixed");

    for (int i = 3; i <= n; ++i)
        for (int j = 2; j < i; ++j) {
            if (i == 3 && j == 2) continue;
            EdgeSet a = fund(i, j);
            EdgeSet b = k3t ^ fund(j, i);
            if (apply_involution(tn, t, a) != b || apply_involution(tn, t, b) != a)
                throw std::logic_error("tilde_symmetric_basis: pair is not mutually symmetric");
            int pos = static_cast<int>(tb.elements.size());
            tb.elements.push_back(std::move(a));
            tb.elements.push_back(std::move(b));
            tb.t_image.push_back(pos + 1);
            tb.t_image.push_back(pos);
        }

    if (static_cast<int>(tb.elements.size()) != cycle_space_dim(tn) ||
        gf2::rank(gf2::BitMatrix(tb.elements)) != tb.elements.size())
        throw std::logic_error("tilde_symmetric_basis: not a basis");
    return tb;
}

EdgeSet tilde_unfold(int n, const EdgeSet& d) {
    Graph kn = complete_graph(n);
    require(static_cast<int>(d.size()) == kn.nedges(), "tilde_unfold: host mismatch");
    if (!is_one_cycle(kn, d)) throw std::domain_error("tilde_unfold: input is not a 1-cycle");

    Graph tn = tilde_graph(n);
    EdgeSet out(tn.nedges());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.get(kn.edge_index(i, j))) {
                out.set(tn.edge_index(i, n + j));
                out.set(tn.edge_index(j, n + i));
            }
    return out;
}

}  // namespace cycles
