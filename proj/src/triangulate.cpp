#include "hopspan/triangulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "hopspan/random.hpp"

namespace hopspan {

int incircle_perturbed(const PointSet& ps, int a, int b, int c, int d) {
    const int s = incircle_sign(ps[a], ps[b], ps[c], ps[d]);
    if (s != 0) return s;
    // Expanding the lifted determinant along the lift column gives
    //   z_a O(b,c,d) - z_b O(a,c,d) + z_c O(a,b,d) - z_d O(a,b,c).
    // Raising the lift of each point by an infinitesimal that grows with its
    // index makes the sign that of the largest-index point's cofactor.
    struct Term {
        int index;
        int sign;
    };
    std::array<Term, 4> terms = {
        Term{a, orient_sign(ps[b], ps[c], ps[d])}, Term{b, -orient_sign(ps[a], ps[c], ps[d])},
        Term{c, orient_sign(ps[a], ps[b], ps[d])}, Term{d, -orient_sign(ps[a], ps[b], ps[c])}};
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return l.index > r.index; });
    for (const Term& t : terms) {
        if (t.sign != 0) return t.sign;
    }
    return 0;
}

namespace {

constexpr int INF = -1;

struct Tri {
    std::array<int, 3> v;  // INF, if present, is always v[2]
    std::array<int, 3> n;  // neighbor opposite v[k]
    bool alive = true;
};

class Builder {
public:
    explicit Builder(const PointSet& ps) : ps_(ps) {}

    void init(int a, int b, int c) {
        if (orient_sign(ps_[a], ps_[b], ps_[c]) < 0) std::swap(b, c);
        const int t0 = add({a, b, c});
        const int g0 = add({b, a, INF});  // across edge ab (opposite c)
        const int g1 = add({c, b, INF});  // across bc (opposite a)
        const int g2 = add({a, c, INF});  // across ca (opposite b)
        tris_[t0].n = {g1, g2, g0};
        // ghost (x, y, INF): n[0] across (y, INF), n[1] across (INF, x), n[2] across (x, y)
        tris_[g0].n = {g2, g1, t0};
        tris_[g1].n = {g0, g2, t0};
        tris_[g2].n = {g1, g0, t0};
        last_ = t0;
    }

    void insert(int d) {
        int seed = locate(d);
        if (seed < 0 || !conflict(seed, d)) seed = scan_for_conflict(d);

        ++epoch_;
        mark_.resize(tris_.size(), 0);
        tested_.resize(tris_.size(), 0);
        std::vector<int> cavity{seed};
        mark_[seed] = epoch_;
        for (std::size_t i = 0; i < cavity.size(); ++i) {
            for (int nb : tris_[cavity[i]].n) {
                if (mark_[nb] == epoch_ || tested_[nb] == epoch_) continue;
                tested_[nb] = epoch_;
                if (conflict(nb, d)) {
                    mark_[nb] = epoch_;
                    cavity.push_back(nb);
                }
            }
        }

        struct Boundary {
            int a, b, outside;
        };
        std::vector<Boundary> boundary;
        for (int t : cavity) {
            const Tri& tr = tris_[t];
            for (int k = 0; k < 3; ++k) {
                if (mark_[tr.n[k]] == epoch_) continue;
                boundary.push_back({tr.v[(k + 1) % 3], tr.v[(k + 2) % 3], tr.n[k]});
            }
        }
        for (int t : cavity) {
            tris_[t].alive = false;
            free_.push_back(t);
        }

        std::map<std::pair<int, int>, std::pair<int, int>> half_edges;
        std::vector<int> created;
        for (const Boundary& e : boundary) {
            std::array<int, 3> v;
            if (e.a == INF) {
                v = {e.b, d, INF};
            } else if (e.b == INF) {
                v = {d, e.a, INF};
            } else {
                v = {e.a, e.b, d};
            }
            const int t = add(v);
            created.push_back(t);
            for (int k = 0; k < 3; ++k) {
                const int x = v[(k + 1) % 3], y = v[(k + 2) % 3];
                if (x == e.a && y == e.b) {
                    tris_[t].n[k] = e.outside;
                    Tri& out = tris_[e.outside];
                    for (int j = 0; j < 3; ++j) {
                        if (out.v[j] != e.a && out.v[j] != e.b) out.n[j] = t;
                    }
                } else {
                    half_edges[{x, y}] = {t, k};
                }
            }
        }
        for (const auto& [edge, slot] : half_edges) {
            auto twin = half_edges.find({edge.second, edge.first});
            if (twin == half_edges.end()) throw Error("delaunay: cavity is not star-shaped");
            tris_[slot.first].n[slot.second] = twin->second.first;
        }
        for (int t : created) {
            if (tris_[t].v[2] != INF) {
                last_ = t;
                break;
            }
        }
    }

    Triangulation result(std::vector<int> vertices) const {
        Triangulation out;
        out.vertices = std::move(vertices);
        std::vector<int> remap(tris_.size(), -1);
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            if (tris_[t].alive && tris_[t].v[2] != INF) {
                remap[t] = static_cast<int>(out.triangles.size());
                out.triangles.push_back(tris_[t].v);
            }
        }
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            if (remap[t] < 0) continue;
            std::array<int, 3> nb;
            for (int k = 0; k < 3; ++k) nb[k] = remap[tris_[t].n[k]];
            out.neighbors.push_back(nb);
            const auto& v = tris_[t].v;
            for (int k = 0; k < 3; ++k) out.edges.emplace_back(v[k], v[(k + 1) % 3]);
        }
        std::sort(out.edges.begin(), out.edges.end());
        out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
        return out;
    }

private:
    int add(std::array<int, 3> v) {
        Tri t{v, {-1, -1, -1}, true};
        if (!free_.empty()) {
            const int i = free_.back();
            free_.pop_back();
            tris_[i] = t;
            return i;
        }
        tris_.push_back(t);
        return static_cast<int>(tris_.size()) - 1;
    }

    bool conflict(int t, int d) const {
        const Tri& tr = tris_[t];
        if (tr.v[2] != INF) return incircle_perturbed(ps_, tr.v[0], tr.v[1], tr.v[2], d) > 0;
        const Point2& a = ps_[tr.v[0]];
        const Point2& b = ps_[tr.v[1]];
        const int o = orient_sign(a, b, ps_[d]);
        return o > 0 || (o == 0 && on_segment_interior(ps_[d], a, b));
    }

    void reject_duplicate(const Tri& tr, int d) const {
        for (int v : tr.v) {
            if (v != INF && ps_[v] == ps_[d]) {
                throw DegenerateError("delaunay: points " + std::to_string(v) + " and " +
                                      std::to_string(d) + " coincide");
            }
        }
    }

    // Visibility walk; returns a triangle containing d or a ghost facing d.
    int locate(int d) const {
        int t = last_;
        const std::size_t cap = 4 * tris_.size() + 16;
        for (std::size_t step = 0; step < cap; ++step) {
            const Tri& tr = tris_[t];
            if (tr.v[2] == INF) {
                reject_duplicate(tr, d);
                return t;
            }
            bool moved = false;
            for (int i = 0; i < 3 && !moved; ++i) {
                const int k = static_cast<int>((i + step) % 3);
                if (orient_sign(ps_[tr.v[(k + 1) % 3]], ps_[tr.v[(k + 2) % 3]], ps_[d]) < 0) {
                    t = tr.n[k];
                    moved = true;
                }
            }
            if (!moved) {
                reject_duplicate(tr, d);
                return t;
            }
        }
        return -1;
    }

    int scan_for_conflict(int d) const {
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            if (!tris_[t].alive) continue;
            reject_duplicate(tris_[t], d);
        }
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            if (tris_[t].alive && conflict(static_cast<int>(t), d)) return static_cast<int>(t);
        }
        throw Error("delaunay: no triangle in conflict with point " + std::to_string(d));
    }

    const PointSet& ps_;
    std::vector<Tri> tris_;
    std::vector<int> free_;
    std::vector<unsigned> mark_, tested_;
    unsigned epoch_ = 0;
    int last_ = 0;
};

bool lex_less(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

Triangulation chain(const PointSet& ps, std::vector<int> sorted_vertices) {
    Triangulation out;
    std::vector<int> order = sorted_vertices;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(ps[a], ps[b]); });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (ps[order[i]] == ps[order[i - 1]]) {
            throw DegenerateError("delaunay: points " + std::to_string(order[i - 1]) + " and " +
                                  std::to_string(order[i]) + " coincide");
        }
        out.edges.emplace_back(order[i - 1], order[i]);
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.vertices = std::move(sorted_vertices);
    return out;
}

}  // namespace

Triangulation delaunay(const PointSet& ps, std::span<const int> subset) {
    std::vector<int> vertices(subset.begin(), subset.end());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices) {
        if (v < 0 || v >= ps.size()) throw PreconditionError("delaunay: index out of range");
    }

    // Fixed-seed shuffle keeps the expected walk length short.
    std::vector<int> order = vertices;
    Rng rng(0x7c0ffee5eedULL);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }

    if (order.size() < 3) return chain(ps, std::move(vertices));
    std::vector<int> lex = vertices;
    std::sort(lex.begin(), lex.end(), [&](int a, int b) { return lex_less(ps[a], ps[b]); });
    for (std::size_t i = 1; i < lex.size(); ++i) {
        if (ps[lex[i]] == ps[lex[i - 1]]) {
            throw DegenerateError("delaunay: points " + std::to_string(lex[i - 1]) + " and " +
                                  std::to_string(lex[i]) + " coincide");
        }
    }
    const int a = order[0];
    const std::size_t ib = 1;
    std::size_t ic = 2;
    while (ic < order.size() && orient_sign(ps[a], ps[order[ib]], ps[order[ic]]) == 0) ++ic;
    if (ic == order.size()) return chain(ps, std::move(vertices));

    Builder b(ps);
    b.init(a, order[ib], order[ic]);
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (i == ib || i == ic) continue;
        b.insert(order[i]);
    }
    return b.result(std::move(vertices));
}

Triangulation delaunay(const PointSet& ps) {
    std::vector<int> all(ps.points.size());
    std::iota(all.begin(), all.end(), 0);
    return delaunay(ps, all);
}

std::size_t empty_circle_violations(const Triangulation& t, const PointSet& ps) {
    std::size_t bad = 0;
    for (const auto& tri : t.triangles) {
        for (int v : t.vertices) {
            if (v == tri[0] || v == tri[1] || v == tri[2]) continue;
            if (incircle_sign(ps[tri[0]], ps[tri[1]], ps[tri[2]], ps[v]) > 0) ++bad;
        }
    }
    return bad;
}

TruncatedDT truncate_unit(const Triangulation& t, const PointSet& ps) {
    TruncatedDT out;
    out.base = t;
    for (const Edge& e : t.edges) {
        if (compare_squared_distance(ps[e.u], ps[e.v], 1.0) <= 0) out.edges.push_back(e);
    }
    return out;
}

bool confined_disk_contains(const Disk& d, const Point2& x) {
    double r = d.radius;
    for (int i = 0; i < 4; ++i) r = std::nextafter(r, INFINITY);
    return disk_contains(Disk(d.center, r), x);
}

namespace {

template <class Inside>
bool confined_connected(std::span<const Edge> edges, std::size_t n, int p, int q, Inside inside_fn) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<signed char> inside(n, -1);
    auto in_disk = [&](int v) {
        if (inside[v] < 0) inside[v] = inside_fn(v) ? 1 : 0;
        return inside[v] == 1;
    };
    for (const Edge& e : edges) {
        if (in_disk(e.u) && in_disk(e.v)) parent[find(e.u)] = find(e.v);
    }
    return find(p) == find(q);
}

}  // namespace

bool disk_confined_connected(std::span<const Edge> edges, const PointSet& ps, int p, int q,
                             const Disk& d) {
    if (!confined_disk_contains(d, ps[p]) || !confined_disk_contains(d, ps[q])) {
        throw PreconditionError("disk_confined_connected: p or q lies outside the disk");
    }
    if (p == q) return true;
    return confined_connected(edges, ps.points.size(), p, q,
                              [&](int v) { return confined_disk_contains(d, ps[v]); });
}

bool diametral_confined_connected(std::span<const Edge> edges, const PointSet& ps, int p, int q) {
    if (p == q) return true;
    return confined_connected(edges, ps.points.size(), p, q,
                              [&](int v) { return in_diametral_disk(ps[p], ps[q], ps[v]); });
}

bool disk_confined_connected(const Triangulation& t, const PointSet& ps, int p, int q,
                             const Disk& d) {
    return disk_confined_connected(t.edges, ps, p, q, d);
}

bool disk_confined_connected(const TruncatedDT& t, const PointSet& ps, int p, int q,
                             const Disk& d) {
    return disk_confined_connected(t.edges, ps, p, q, d);
}

}  // namespace hopspan
