#include "cycles/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cycles {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Hypergraph2::Hypergraph2(int nverts, std::vector<std::array<int, 3>> faces) : nverts_(nverts) {
    require(nverts >= 0, "Hypergraph2: negative vertex count");
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        require(f[0] != f[1] && f[1] != f[2], "Hypergraph2: face with repeated vertex");
        require(f[0] >= 0 && f[2] < nverts, "Hypergraph2: face vertex out of range");
    }
    std::sort(faces.begin(), faces.end());
    require(std::adjacent_find(faces.begin(), faces.end()) == faces.end(),
            "Hypergraph2: duplicate face");
    faces_ = std::move(faces);

    for (const auto& f : faces_) {
        edges_.push_back({f[0], f[1]});
        edges_.push_back({f[0], f[2]});
        edges_.push_back({f[1], f[2]});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int Hypergraph2::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
    if (it == edges_.end() || *it != std::pair{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Hypergraph2::edge_degree(int edge) const {
    auto [u, v] = edges_[edge];
    int d = 0;
    for (const auto& f : faces_) {
        bool has_u = f[0] == u || f[1] == u || f[2] == u;
        bool has_v = f[0] == v || f[1] == v || f[2] == v;
        if (has_u && has_v) ++d;
    }
    return d;
}

EdgeSet Hypergraph2::face_boundary(int face) const {
    auto [a, b, c] = faces_[face];
    EdgeSet s(nedges());
    s.set(edge_index(a, b));
    s.set(edge_index(a, c));
    s.set(edge_index(b, c));
    return s;
}

bool is_two_cycle(const Hypergraph2& h, const FaceSet& c) {
    require(static_cast<int>(c.size()) == h.nfaces(), "is_two_cycle: host mismatch");
    std::vector<int> deg(h.nedges(), 0);
    for (std::size_t i : c.ones()) {
        auto [a, b, d] = h.face(static_cast<int>(i));
        ++deg[h.edge_index(a, b)];
        ++deg[h.edge_index(a, d)];
        ++deg[h.edge_index(b, d)];
    }
    for (int d : deg)
        if (d & 1) return false;
    return true;
}

bool is_two_cycle_by_boundaries(const Hypergraph2& h, const FaceSet& c) {
    require(static_cast<int>(c.size()) == h.nfaces(), "is_two_cycle_by_boundaries: host mismatch");
    EdgeSet sum(h.nedges());
    for (std::size_t i : c.ones()) sum ^= h.face_boundary(static_cast<int>(i));
    return !sum.any();
}

gf2::BitMatrix face_incidence(const Hypergraph2& h) {
    gf2::BitMatrix m(h.nedges(), h.nfaces());
    for (int f = 0; f < h.nfaces(); ++f) {
        auto [a, b, c] = h.face(f);
        m.set(h.edge_index(a, b), f);
        m.set(h.edge_index(a, c), f);
        m.set(h.edge_index(b, c), f);
    }
    return m;
}

Hypergraph2 complete_hypergraph(int n) {
    require(n >= 3, "complete_hypergraph: n >= 3");
    std::vector<std::array<int, 3>> faces;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) faces.push_back({a, b, c});
    return Hypergraph2(n, std::move(faces));
}

namespace {

int complete_face_index(int n, std::array<int, 3> f) {
    std::sort(f.begin(), f.end());
    // Lexicographic rank of the sorted triple among all 3-subsets of [n].
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (f == std::array{a, b, c}) return idx;
                ++idx;
            }
    throw std::logic_error("complete_face_index: face not found");
}

}  // namespace

FaceSet tetrahedron(int n, const std::array<int, 4>& a) {
    Hypergraph2 h = complete_hypergraph(n);
    for (int v : a) require(v >= 0 && v < n, "tetrahedron: vertex out of range");
    FaceSet s(h.nfaces());
    for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> f;
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) f[k++] = a[i];
        s.set(complete_face_index(n, f));
    }
    require(s.count() == 4, "tetrahedron: vertices must be distinct");
    return s;
}

TwoCycleSpace complete_2cycle_space(int n) {
    require(n >= 3, "complete_2cycle_space: n >= 3");
    Hypergraph2 h = complete_hypergraph(n);
    TwoCycleSpace sp;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j)
            for (int k = j + 1; k < n - 1; ++k)
                sp.basis.push_back(tetrahedron(n, {i, j, k, n - 1}));
    sp.dim = sp.basis.size();

    // dim must agree with the incidence kernel, and the family must be free.
    std::size_t kernel_dim = h.nfaces() - gf2::rank(face_incidence(h));
    if (kernel_dim != sp.dim ||
        (sp.dim > 0 && gf2::rank(gf2::BitMatrix(sp.basis)) != sp.dim))
        throw std::logic_error("complete_2cycle_space: basis verification failed");
    return sp;
}

gf2::BitVec decompose_two_cycle(int n, const FaceSet& c) {
    Hypergraph2 h = complete_hypergraph(n);
    require(static_cast<int>(c.size()) == h.nfaces(), "decompose_two_cycle: host mismatch");
    if (!is_two_cycle(h, c)) throw std::domain_error("decompose_two_cycle: input is not a 2-cycle");

    TwoCycleSpace sp = complete_2cycle_space(n);
    gf2::BitVec coeffs(sp.basis.size());
    std::size_t pos = 0;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j)
            for (int k = j + 1; k < n - 1; ++k) {
                if (c.get(complete_face_index(n, {i, j, k}))) coeffs.set(pos);
                ++pos;
            }
    if (gf2::combine(sp.basis, coeffs) != c)
        throw std::logic_error("decompose_two_cycle: reconstruction failed");
    return coeffs;
}

bool tetrahedra_relation_check(int n) {
    require(n >= 4, "tetrahedra_relation_check: n >= 4");
    std::vector<gf2::BitVec> gens;
    std::vector<std::array<int, 4>> quads;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    quads.push_back({a, b, c, d});
                    gens.push_back(tetrahedron(n, {a, b, c, d}));
                }
    auto quad_index = [&](std::array<int, 4> q) {
        std::sort(q.begin(), q.end());
        auto it = std::lower_bound(quads.begin(), quads.end(), q);
        return static_cast<std::size_t>(it - quads.begin());
    };

    std::vector<gf2::BitVec> relations;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    for (int e = d + 1; e < n; ++e) {
                        std::array<int, 5> five{a, b, c, d, e};
                        gf2::BitVec rel(gens.size());
                        for (int skip = 0; skip < 5; ++skip) {
                            std::array<int, 4> q;
                            int k = 0;
                            for (int i = 0; i < 5; ++i)
                                if (i != skip) q[k++] = five[i];
                            rel.set(quad_index(q));
                        }
                        relations.push_back(std::move(rel));
                    }
    if (relations.empty()) return true;  // n == 4: no 5-subsets, kernel is trivial
    return relation_space_check(gens, relations);
}

RookGrid::RookGrid(int n, int ell) : n_(n), ell_(ell) {
    require(n >= 1 && ell >= 1, "RookGrid: n, ell >= 1");
    for (int i = 0; i < ell; ++i) npoints_ *= static_cast<std::size_t>(n);
}

std::size_t RookGrid::point_index(const std::vector<int>& coords) const {
    require(static_cast<int>(coords.size()) == ell_, "RookGrid: coordinate count");
    std::size_t idx = 0;
    for (int c : coords) {
        require(c >= 0 && c < n_, "RookGrid: coordinate out of range");
        idx = idx * n_ + c;
    }
    return idx;
}

std::vector<int> RookGrid::point(std::size_t index) const {
    std::vector<int> coords(ell_);
    for (int i = ell_ - 1; i >= 0; --i) {
        coords[i] = static_cast<int>(index % n_);
        index /= n_;
    }
    return coords;
}

gf2::BitMatrix rook_constraints(const RookGrid& g) {
    // One row per (free coordinate, fixed values of the others).
    std::size_t nrows = 0;
    std::size_t stride = g.npoints() / g.n();
    nrows = static_cast<std::size_t>(g.ell()) * stride;
    gf2::BitMatrix m(nrows, g.npoints());
    std::size_t r = 0;
    for (int free = 0; free < g.ell(); ++free) {
        std::vector<int> coords(g.ell(), 0);
        for (std::size_t rest = 0; rest < stride; ++rest, ++r) {
            // Decode `rest` into the fixed coordinates.
            std::size_t x = rest;
            for (int i = g.ell() - 1; i >= 0; --i) {
                if (i == free) continue;
                coords[i] = static_cast<int>(x % g.n());
                x /= g.n();
            }
            for (int v = 0; v < g.n(); ++v) {
                coords[free] = v;
                m.set(r, g.point_index(coords));
            }
        }
    }
    return m;
}

bool is_rook_cycle(const RookGrid& g, const PointSet& c) {
    require(c.size() == g.npoints(), "is_rook_cycle: host mismatch");
    return !rook_constraints(g).multiply(c).any();
}

PointSet parallelepiped(const RookGrid& g, const std::vector<std::pair<int, int>>& ps) {
    require(static_cast<int>(ps.size()) == g.ell(), "parallelepiped: need ell factors");
    for (auto [a, b] : ps)
        require(a != b && a >= 0 && b >= 0 && a < g.n() && b < g.n(),
                "parallelepiped: factors must be 2-element subsets of [n]");
    PointSet s(g.npoints());
    std::vector<int> coords(g.ell());
    for (std::size_t mask = 0; mask < (std::size_t{1} << g.ell()); ++mask) {
        for (int i = 0; i < g.ell(); ++i)
            coords[i] = (mask >> i) & 1 ? ps[i].second : ps[i].first;
        s.set(g.point_index(coords));
    }
    return s;
}

std::size_t rook_space_dim(const RookGrid& g) {
    return g.npoints() - gf2::rank(rook_constraints(g));
}

gf2::BitVec rook_decompose(const RookGrid& g, const PointSet& c) {
    require(c.size() == g.npoints(), "rook_decompose: host mismatch");
    if (!is_rook_cycle(g, c)) throw std::domain_error("rook_decompose: input is not a rook cycle");

    // Coefficient per a in [n-1]^ell, lexicographic: selected iff a in c.
    RookGrid inner(g.n() - 1 > 0 ? g.n() - 1 : 1, g.ell());
    std::size_t ninner = 1;
    for (int i = 0; i < g.ell(); ++i) ninner *= static_cast<std::size_t>(g.n() - 1);
    gf2::BitVec coeffs(ninner);
    for (std::size_t ai = 0; ai < ninner; ++ai) {
        std::vector<int> a = inner.point(ai);
        if (c.get(g.point_index(a))) coeffs.set(ai);
    }
    if (rook_recombine(g, coeffs) != c)
        throw std::logic_error("rook_decompose: reconstruction failed");
    return coeffs;
}

PointSet rook_recombine(const RookGrid& g, const gf2::BitVec& coeffs) {
    RookGrid inner(g.n() - 1 > 0 ? g.n() - 1 : 1, g.ell());
    PointSet s(g.npoints());
    for (std::size_t ai : coeffs.ones()) {
        std::vector<int> a = inner.point(ai);
        std::vector<std::pair<int, int>> ps;
        for (int x : a) ps.push_back({g.n() - 1, x});
        s ^= parallelepiped(g, ps);
    }
    return s;
}

HyperRookBridge hyper_rook_bridge(int n) {
    require(n >= 1, "hyper_rook_bridge: n >= 1");
    std::vector<std::array<int, 3>> faces;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) faces.push_back({a, n + b, 2 * n + c});
    // Face {(0,a),(1,b),(2,c)} sorts to (a, n+b, 2n+c), so the canonical face
    // order is the lexicographic point order of (a,b,c).
    return {Hypergraph2(3 * n, std::move(faces)), RookGrid(n, 3)};
}

EulerReport euler_report(const Hypergraph2& h) {
    EulerReport r;
    r.v = h.nverts();
    r.e = h.nedges();
    r.f = h.nfaces();
    Graph eg = h.edge_graph();
    r.b0 = eg.components();
    std::size_t boundary_rank = gf2::rank(face_incidence(h));
    r.b2 = static_cast<int>(h.nfaces() - boundary_rank);
    r.b1 = cycle_space_dim(eg) - static_cast<int>(boundary_rank);
    r.identity_holds = (r.b0 - r.b1 + r.b2) == (r.v - r.e + r.f);
    return r;
}

namespace {

bool face_connected(const Hypergraph2& h) {
    if (h.nfaces() == 0) return false;
    // Faces are adjacent when they share a derived edge.
    std::vector<int> comp(h.nfaces(), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        auto [a, b, c] = h.face(f);
        for (int g = 0; g < h.nfaces(); ++g) {
            if (comp[g] >= 0) continue;
            auto [x, y, z] = h.face(g);
            int shared = 0;
            for (int u : {a, b, c})
                for (int v : {x, y, z})
                    if (u == v) ++shared;
            if (shared >= 2) { comp[g] = 0; stack.push_back(g); }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c >= 0; });
}

}  // namespace

ExtremalReport extremal_check(const Hypergraph2& h) {
    ExtremalReport r;
    r.v = h.nverts();
    r.e = h.nedges();
    r.f = h.nfaces();
    r.face_connected = face_connected(h);
    if (!r.face_connected) return r;

    int max_deg = 0, min_deg = h.nfaces() ? h.nfaces() : 0;
    for (int e = 0; e < h.nedges(); ++e) {
        int d = h.edge_degree(e);
        max_deg = std::max(max_deg, d);
        min_deg = std::min(min_deg, d);
    }
    if (max_deg == 2 && min_deg == 2) {
        r.applied = ExtremalReport::closed;
        r.inequality_holds = r.f <= 2 * r.v - 4;
    } else if (max_deg <= 2 && min_deg == 1) {
        r.applied = ExtremalReport::bounded;
        r.inequality_holds = r.v - r.e + r.f <= 1;
    }
    return r;
}

Hypergraph2 add_face_by_vertex(const Hypergraph2& h, int v) {
    require(v >= 0 && v < h.nverts(), "add_face_by_vertex: vertex out of range");
    auto faces = h.faces();
    faces.push_back({v, h.nverts(), h.nverts() + 1});
    return Hypergraph2(h.nverts() + 2, std::move(faces));
}

Hypergraph2 add_face_by_edge(const Hypergraph2& h, int edge_index) {
    require(edge_index >= 0 && edge_index < h.nedges(), "add_face_by_edge: edge out of range");
    auto [u, v] = h.edges()[edge_index];
    auto faces = h.faces();
    faces.push_back({u, v, h.nverts()});
    return Hypergraph2(h.nverts() + 1, std::move(faces));
}

std::pair<Hypergraph2, Hypergraph2> matched_counts_fixture() {
    // Fan triangulation of a 10-gon: V=11, E=20, F=10, no nonzero 2-cycle.
    std::vector<std::array<int, 3>> disk_faces;
    for (int i = 1; i <= 10; ++i) disk_faces.push_back({0, i, i == 10 ? 1 : i + 1});
    Hypergraph2 disk(11, std::move(disk_faces));

    // 6-vertex triangulation of the projective plane: V=6, E=15, F=10, one
    // nonzero 2-cycle (the full face set).
    Hypergraph2 rp6(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                        {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});

    // Equalize (V, E, F): five vertex-attachments on the side with fewer
    // edges, five edge-attachments on the other; both keep b2.
    Hypergraph2 a = rp6, b = disk;
    for (int i = 0; i < 5; ++i) {
        a = add_face_by_vertex(a, 0);
        b = add_face_by_edge(b, b.edge_index(0, 1));
    }
    return {b, a};  // (b2 = 0, b2 = 1)
}

}  // namespace cycles
