#include "hopspan/select.hpp"

#include <algorithm>
#include <set>

#include "hopspan/geom.hpp"

namespace hopspan {

const char* to_string(SelectAction a) {
    switch (a) {
        case SelectAction::skipped_empty: return "skipped_empty";
        case SelectAction::skipped_has_endpoint: return "skipped_has_endpoint";
        case SelectAction::added_missing_edge: return "added_missing_edge";
        case SelectAction::added_shared_endpoint: return "added_shared_endpoint";
        case SelectAction::replaced: return "replaced";
        case SelectAction::covered: return "covered";
    }
    return "?";
}

SubcellIndex::SubcellIndex(const PointSet& ps, const GridConfig& grid) : grid_(grid) {
    sub_.reserve(ps.points.size());
    for (int i = 0; i < ps.size(); ++i) {
        sub_.push_back(subcell_of(ps[i], grid));
        by_subcell_[sub_.back()].push_back(i);
    }
}

const std::vector<int>& SubcellIndex::members(const SubCellId& s) const {
    static const std::vector<int> none;
    auto it = by_subcell_.find(s);
    return it == by_subcell_.end() ? none : it->second;
}

std::vector<CellIndex> SubcellIndex::occupied_cells() const {
    std::vector<CellIndex> out;
    for (const auto& [s, pts] : by_subcell_) {
        if (out.empty() || !(out.back() == s.cell)) out.push_back(s.cell);
    }
    return out;
}

bool SelectionState::in_T(int v) const { return std::find(T.begin(), T.end(), v) != T.end(); }

void SelectionState::set_edge(const CellPair& key, const Edge& e) {
    auto it = E.find(key);
    if (it != E.end()) {
        --degree[it->second.u];
        --degree[it->second.v];
        it->second = e;
    } else {
        E.emplace(key, e);
    }
    ++degree[e.u];
    ++degree[e.v];
}

SelectionState initial_edge_set(const PointSet& ps, const Graph& udg, const GridConfig& grid) {
    SelectionState st;
    st.degree.assign(ps.points.size(), 0);
    for (const auto& [key, e] : shortest_intercell_edges(ps, udg, grid)) st.set_edge(key, e);
    return st;
}

namespace {

// Endpoint of the E-edge between `cell` and `other` that lies in `cell`,
// and the endpoint on the other side.
struct Anchored {
    int own = -1;
    int far = -1;
};

std::optional<Anchored> edge_between(const SelectionState& st, const SubcellIndex& index,
                                     CellIndex cell, CellIndex other) {
    auto it = st.E.find(make_cell_pair(cell, other));
    if (it == st.E.end()) return std::nullopt;
    const Edge& e = it->second;
    if (index.cell(e.u) == cell) return Anchored{e.u, e.v};
    return Anchored{e.v, e.u};
}

void add_to_T(SelectionState& st, int v) {
    if (!st.in_T(v)) st.T.push_back(v);
}

}  // namespace

void process_triplet(SelectionState& st, CellIndex cell, Quadrant quadrant,
                     const TripletAssignment& triplets, const PointSet& ps,
                     const SubcellIndex& index) {
    const SubCellId sub{cell, quadrant};
    const std::vector<int>& pts = index.members(sub);
    SelectLogEntry entry;
    entry.subcell = sub;

    // Step 1.
    if (pts.empty()) {
        entry.action = SelectAction::skipped_empty;
        st.log.push_back(entry);
        return;
    }
    if (std::any_of(pts.begin(), pts.end(), [&](int v) { return st.degree[v] > 0; })) {
        entry.action = SelectAction::skipped_has_endpoint;
        st.log.push_back(entry);
        return;
    }
    const int pick = pts.front();
    entry.added = pick;

    // Step 2.
    const TripletEntry& t = triplets[quadrant];
    const CellIndex plus_cell = cell + t.plus;
    const CellIndex far_cell = cell + t.far;
    const auto e1 = edge_between(st, index, cell, plus_cell);
    const auto eF = edge_between(st, index, cell, far_cell);
    if (!e1 || !eF) {
        entry.action = SelectAction::added_missing_edge;
        add_to_T(st, pick);
        st.log.push_back(entry);
        return;
    }

    // Step 3.
    if (e1->own == eF->own) {
        entry.action = SelectAction::added_shared_endpoint;
        add_to_T(st, pick);
        st.log.push_back(entry);
        return;
    }
    const SubCellId forced{cell, t.forced};
    if (!(index.subcell(eF->own) == forced)) {
        throw CertificateViolation("far-edge endpoint of cell (" + std::to_string(cell.col) + ", " +
                                   std::to_string(cell.row) + ") " + to_string(quadrant) +
                                   " is not in the forced sub-cell");
    }
    if (compare_squared_distance(ps[eF->own], ps[e1->far], 1.0) > 0) {
        throw CertificateViolation("replacement edge longer than 1 in cell (" +
                                   std::to_string(cell.col) + ", " + std::to_string(cell.row) + ")");
    }
    entry.action = SelectAction::replaced;
    entry.removed = Edge(e1->own, e1->far);
    entry.inserted = Edge(eF->own, e1->far);
    st.set_edge(make_cell_pair(cell, plus_cell), entry.inserted);
    add_to_T(st, pick);
    st.log.push_back(entry);
}

HubSet hub_set_of(const SelectionState& st, const PointSet& ps, const SubcellIndex& index) {
    HubSet h;
    h.is_member.assign(ps.points.size(), false);
    for (int v = 0; v < ps.size(); ++v) {
        if (st.degree[v] > 0) h.is_member[v] = true;
    }
    for (int v : st.T) h.is_member[v] = true;
    for (int v = 0; v < ps.size(); ++v) {
        if (!h.is_member[v]) continue;
        h.members.push_back(v);
        ++h.per_cell_counts[index.cell(v)];
    }
    return h;
}

SelectionResult compute_hub_set(const PointSet& ps, const Graph& udg, const GridConfig& grid,
                                const TripletAssignment& triplets) {
    if (!verify_triplet_certificate(triplets)) {
        throw CertificateViolation("triplet assignment fails its certificate");
    }
    const SubcellIndex index(ps, grid);
    SelectionResult r;
    r.state = initial_edge_set(ps, udg, grid);
    for (CellIndex c : index.occupied_cells()) {
        for (Quadrant q : kQuadrants) process_triplet(r.state, c, q, triplets, ps, index);
    }
    // A replacement can strip the only hub from a sub-cell that step 1 had
    // skipped because of that hub. Restore coverage of such sub-cells.
    for (const auto& [sub, pts] : index.all()) {
        const bool covered = std::any_of(pts.begin(), pts.end(), [&](int v) {
            return r.state.degree[v] > 0 || r.state.in_T(v);
        });
        if (covered) continue;
        SelectLogEntry entry;
        entry.action = SelectAction::covered;
        entry.subcell = sub;
        entry.added = pts.front();
        r.state.T.push_back(pts.front());
        r.state.log.push_back(entry);
    }
    r.hub = hub_set_of(r.state, ps, index);
    return r;
}

PropertyReport verify_properties(const PointSet& ps, const Graph& udg, const GridConfig& grid,
                                 const HubSet& hub) {
    PropertyReport rep;
    const SubcellIndex index(ps, grid);

    std::map<CellIndex, std::vector<int>> hubs_by_cell;
    for (int v : hub.members) hubs_by_cell[index.cell(v)].push_back(v);

    for (const auto& [cell, hs] : hubs_by_cell) {
        const int count = static_cast<int>(hs.size());
        rep.max_per_cell = std::max(rep.max_per_cell, count);
        if (count > kMaxHubsPerCell) {
            rep.p1 = false;
            rep.p1_witnesses.push_back(cell);
        }
    }

    for (const auto& [pair, e] : shortest_intercell_edges(ps, udg, grid)) {
        const NeighborKind kind = classify_neighbors(pair.first, pair.second);
        if (kind == NeighborKind::plus) {
            bool found = false;
            const auto& a = hubs_by_cell[pair.first];
            const auto& b = hubs_by_cell[pair.second];
            for (int s : a) {
                for (int t : b) {
                    if (compare_squared_distance(ps[s], ps[t], 1.0) <= 0) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) {
                rep.p2 = false;
                rep.p2_witnesses.push_back(pair);
            }
        } else if (!hub.contains(e.u) || !hub.contains(e.v)) {
            rep.p3 = false;
            rep.p3_witnesses.push_back(pair);
        }
    }

    for (const auto& [sub, pts] : index.all()) {
        if (std::none_of(pts.begin(), pts.end(), [&](int v) { return hub.contains(v); })) {
            rep.p4 = false;
            rep.p4_witnesses.push_back(sub);
        }
    }
    return rep;
}

}  // namespace hopspan
