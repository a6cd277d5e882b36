#include "hopspan/sparse.hpp"

#include <algorithm>
#include <set>

namespace hopspan {

std::vector<Edge> HexSpanner::all_edges() const {
    std::vector<Edge> out = star_edges;
    out.insert(out.end(), link_edges.begin(), link_edges.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph HexSpanner::graph() const { return Graph(static_cast<int>(n_points), all_edges()); }

HexSpanner build_hex_spanner(const PointSet& ps) {
    if (ps.points.empty()) throw PreconditionError("build_hex_spanner: empty point set");
    HexSpanner s;
    s.n_points = ps.points.size();
    s.hex = choose_hex_offset(ps.points);

    std::vector<HexCoord> cell(ps.points.size());
    for (int i = 0; i < ps.size(); ++i) {
        cell[i] = hex_cell_of(ps[i], s.hex);
        s.centers.try_emplace(cell[i], i);
    }
    for (int i = 0; i < ps.size(); ++i) {
        const int c = s.centers.at(cell[i]);
        if (c != i) s.star_edges.emplace_back(c, i);
    }
    std::sort(s.star_edges.begin(), s.star_edges.end());

    std::map<std::pair<HexCoord, HexCoord>, Edge> links;
    const Graph udg = build_udg(ps);
    for (const Edge& e : udg.edges()) {
        const HexCoord a = cell[e.u], b = cell[e.v];
        if (a == b) continue;
        const auto key = a < b ? std::pair{a, b} : std::pair{b, a};
        auto [it, inserted] = links.try_emplace(key, e);
        if (!inserted && shorter_edge(ps, e, it->second)) it->second = e;
    }
    for (const auto& [key, e] : links) s.link_edges.push_back(e);
    std::sort(s.link_edges.begin(), s.link_edges.end());
    return s;
}

HexReport verify_hex(const HexSpanner& s, const PointSet& ps) {
    if (s.n_points != ps.points.size()) {
        throw PreconditionError("verify_hex: spanner and point set sizes differ");
    }
    HexReport r;
    const Graph udg = build_udg(ps);
    const Graph h = s.graph();
    r.stretch = verify_stretch(h, udg, kHexStretchBound);
    r.edge_count = h.edge_count();
    r.nonempty_cells = s.centers.size();
    const std::size_t n = ps.points.size();
    r.within_9n = r.edge_count <= 9 * n;
    r.within_n_plus_8c = r.edge_count <= n + 8 * r.nonempty_cells;

    std::map<HexCoord, std::set<HexCoord>> partners;
    for (const Edge& e : s.link_edges) {
        const HexCoord a = hex_cell_of(ps[e.u], s.hex), b = hex_cell_of(ps[e.v], s.hex);
        partners[a].insert(b);
        partners[b].insert(a);
    }
    for (const auto& [c, p] : partners) r.max_link_partners = std::max(r.max_link_partners, p.size());
    r.partners_within_bound = r.max_link_partners <= hex_neighborhood_pairs_bound();

    for (const Edge& e : h.edges()) {
        if (!udg.has_edge(e.u, e.v)) r.edges_in_udg = false;
    }
    return r;
}

}  // namespace hopspan
