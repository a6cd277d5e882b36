#include "hopspan/udg.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hopspan/geom.hpp"
#include "hopspan/random.hpp"

namespace hopspan {

PointSet::PointSet(std::vector<Point2> pts) : points(std::move(pts)) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!is_finite(points[i])) {
            throw PreconditionError("point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw PreconditionError("Graph: negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw PreconditionError("Graph: self-loop at " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n) throw PreconditionError("Graph: vertex index out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    start_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges_) {
        ++start_[e.u + 1];
        ++start_[e.v + 1];
    }
    std::partial_sum(start_.begin(), start_.end(), start_.begin());
    adj_.resize(2 * edges_.size());
    std::vector<int> fill(start_.begin(), start_.end() - 1);
    for (const Edge& e : edges_) {
        adj_[fill[e.u]++] = e.v;
        adj_[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < n; ++v) {
        std::sort(adj_.begin() + start_[v], adj_.begin() + start_[v + 1]);
    }
}

std::span<const int> Graph::neighbors(int v) const {
    return {adj_.data() + start_[v], static_cast<std::size_t>(start_[v + 1] - start_[v])};
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

struct BucketKey {
    long x, y;
    bool operator==(const BucketKey&) const = default;
};

struct BucketHash {
    std::size_t operator()(const BucketKey& k) const {
        return std::hash<long>()(k.x * 0x9E3779B1L + k.y);
    }
};

}  // namespace

Graph build_udg(const PointSet& ps) {
    // Unit buckets: a pair at distance <= 1 differs by at most one bucket per axis.
    std::unordered_map<BucketKey, std::vector<int>, BucketHash> buckets;
    for (int i = 0; i < ps.size(); ++i) {
        buckets[{static_cast<long>(std::floor(ps[i].x)), static_cast<long>(std::floor(ps[i].y))}]
            .push_back(i);
    }
    std::vector<Edge> edges;
    for (int i = 0; i < ps.size(); ++i) {
        const long bx = static_cast<long>(std::floor(ps[i].x));
        const long by = static_cast<long>(std::floor(ps[i].y));
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                auto it = buckets.find({bx + dx, by + dy});
                if (it == buckets.end()) continue;
                for (int j : it->second) {
                    if (j > i && compare_squared_distance(ps[i], ps[j], 1.0) <= 0) {
                        edges.emplace_back(i, j);
                    }
                }
            }
        }
    }
    return Graph(ps.size(), std::move(edges));
}

std::vector<int> bfs_hops(const Graph& g, int src, int cap) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    if (src < 0 || src >= g.vertex_count()) throw PreconditionError("bfs_hops: bad source");
    std::vector<int> frontier{src}, next;
    dist[src] = 0;
    for (int level = 0; !frontier.empty() && level < cap; ++level) {
        next.clear();
        for (int u : frontier) {
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = level + 1;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

std::optional<int> hop_distance(const Graph& g, int u, int v, int cap) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("hop_distance: bad target");
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> frontier{u}, next;
    dist[u] = 0;
    for (int level = 0; !frontier.empty() && level < cap; ++level) {
        next.clear();
        for (int x : frontier) {
            for (int w : g.neighbors(x)) {
                if (dist[w] >= 0) continue;
                if (w == v) return level + 1;
                dist[w] = level + 1;
                next.push_back(w);
            }
        }
        frontier.swap(next);
    }
    return std::nullopt;
}

CellPair make_cell_pair(CellIndex a, CellIndex b) {
    return a < b ? CellPair{a, b} : CellPair{b, a};
}

std::vector<CellIndex> assign_cells(const PointSet& ps, const GridConfig& grid) {
    std::vector<CellIndex> cells;
    cells.reserve(ps.points.size());
    for (const Point2& p : ps.points) cells.push_back(cell_of(p, grid));
    return cells;
}

bool shorter_edge(const PointSet& ps, const Edge& a, const Edge& b) {
    const int c = compare_squared_distance(ps[a.u], ps[a.v], ps[b.u], ps[b.v]);
    if (c != 0) return c < 0;
    return a < b;
}

std::map<CellPair, Edge> shortest_intercell_edges(const PointSet& ps, const Graph& udg,
                                                  const GridConfig& grid) {
    const std::vector<CellIndex> cells = assign_cells(ps, grid);
    std::map<CellPair, Edge> best;
    for (const Edge& e : udg.edges()) {
        if (cells[e.u] == cells[e.v]) continue;
        const CellPair key = make_cell_pair(cells[e.u], cells[e.v]);
        auto [it, inserted] = best.try_emplace(key, e);
        if (!inserted && shorter_edge(ps, e, it->second)) it->second = e;
    }
    return best;
}

namespace {

void scan_collinear(const PointSet& ps, GeneralPositionReport& r) {
    const int n = ps.size();
    std::vector<int> order;
    for (int i = 0; i < n; ++i) {
        const Point2& o = ps[i];
        order.clear();
        for (int j = i + 1; j < n; ++j) {
            if (!(ps[j] == o)) order.push_back(j);
        }
        // Direction folded into the half-open upper half-plane.
        auto fold = [&](int j) {
            const Point2& p = ps[j];
            return (p.y < o.y || (p.y == o.y && p.x < o.x)) ? -1 : 1;
        };
        auto before = [&](int a, int b) { return fold(a) * fold(b) * orient_sign(o, ps[a], ps[b]) > 0; };
        std::sort(order.begin(), order.end(), before);
        for (std::size_t s = 0; s < order.size();) {
            std::size_t e = s + 1;
            while (e < order.size() && orient_sign(o, ps[order[s]], ps[order[e]]) == 0) ++e;
            for (std::size_t a = s; a < e; ++a) {
                for (std::size_t b = a + 1; b < e; ++b) {
                    ++r.collinear_count;
                    if (r.collinear.size() < GeneralPositionReport::kWitnessLimit) {
                        std::array<int, 3> t{i, order[a], order[b]};
                        std::sort(t.begin(), t.end());
                        r.collinear.push_back(t);
                    }
                }
            }
            s = e;
        }
    }
}

bool on_common_circle(const PointSet& ps, int a, int b, int c, int d) {
    if (incircle_sign(ps[a], ps[b], ps[c], ps[d]) != 0) return false;
    // A zero determinant also arises for four collinear points.
    return orient_sign(ps[a], ps[b], ps[c]) != 0 || orient_sign(ps[a], ps[b], ps[d]) != 0;
}

void record_cocircular(GeneralPositionReport& r, std::array<int, 4> q) {
    ++r.cocircular_count;
    if (r.cocircular.size() < GeneralPositionReport::kWitnessLimit) {
        std::sort(q.begin(), q.end());
        r.cocircular.push_back(q);
    }
}

}  // namespace

GeneralPositionReport check_general_position(const PointSet& ps, std::uint64_t sample_seed) {
    GeneralPositionReport r;
    const int n = ps.size();

    std::vector<Point2> sorted = ps.points;
    std::sort(sorted.begin(), sorted.end(),
              [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) ++r.duplicate_count;
    }

    Rng rng(sample_seed);
    constexpr int kSamples = 200000;

    if (n <= kCollinearExhaustiveLimit) {
        scan_collinear(ps, r);
    } else {
        r.collinear_exhaustive = false;
        for (int s = 0; s < kSamples; ++s) {
            const int a = static_cast<int>(rng.below(n));
            const int b = static_cast<int>(rng.below(n));
            const int c = static_cast<int>(rng.below(n));
            if (a == b || b == c || a == c) continue;
            if (orient_sign(ps[a], ps[b], ps[c]) == 0) {
                ++r.collinear_count;
                if (r.collinear.size() < GeneralPositionReport::kWitnessLimit) {
                    std::array<int, 3> t{a, b, c};
                    std::sort(t.begin(), t.end());
                    r.collinear.push_back(t);
                }
            }
        }
    }

    if (n <= kCocircularExhaustiveLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d)
                        if (on_common_circle(ps, a, b, c, d)) record_cocircular(r, {a, b, c, d});
    } else {
        r.cocircular_exhaustive = false;
        for (int s = 0; s < kSamples; ++s) {
            std::array<int, 4> q;
            for (int& v : q) v = static_cast<int>(rng.below(n));
            std::array<int, 4> t = q;
            std::sort(t.begin(), t.end());
            if (std::adjacent_find(t.begin(), t.end()) != t.end()) continue;
            if (on_common_circle(ps, q[0], q[1], q[2], q[3])) record_cocircular(r, q);
        }
    }
    return r;
}

PointSet jitter(const PointSet& ps, std::uint64_t seed, double magnitude) {
    Rng rng(seed);
    std::vector<Point2> out = ps.points;
    for (Point2& p : out) {
        p.x += magnitude * rng.uniform(-1.0, 1.0);
        p.y += magnitude * rng.uniform(-1.0, 1.0);
    }
    return PointSet(std::move(out));
}

}  // namespace hopspan
