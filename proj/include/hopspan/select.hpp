#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopspan/grid.hpp"
#include "hopspan/udg.hpp"

namespace hopspan {

enum class SelectAction {
    skipped_empty,         // step 1: sub-cell has no point
    skipped_has_endpoint,  // step 1: sub-cell holds an endpoint of E
    added_missing_edge,    // step 2
    added_shared_endpoint, // step 3 with s1 == sF
    replaced,              // step 3 with s1 != sF
    covered,               // final pass: sub-cell lost its last hub to a replacement
};

const char* to_string(SelectAction a);

struct SelectLogEntry {
    SelectAction action = SelectAction::skipped_empty;
    SubCellId subcell;
    int added = -1;     // point put into T, if any
    Edge removed{};     // replaced only
    Edge inserted{};    // replaced only
};

/// Point indices grouped by sub-cell under a fixed grid.
class SubcellIndex {
public:
    SubcellIndex(const PointSet& ps, const GridConfig& grid);

    const GridConfig& grid() const { return grid_; }
    const SubCellId& subcell(int i) const { return sub_[i]; }
    CellIndex cell(int i) const { return sub_[i].cell; }
    /// Members in ascending index order; empty if the sub-cell is empty.
    const std::vector<int>& members(const SubCellId& s) const;
    const std::map<SubCellId, std::vector<int>>& all() const { return by_subcell_; }
    std::vector<CellIndex> occupied_cells() const;  // ascending

private:
    GridConfig grid_;
    std::vector<SubCellId> sub_;
    std::map<SubCellId, std::vector<int>> by_subcell_;
};

struct SelectionState {
    /// E keyed by the unordered cell pair its edge joins.
    std::map<CellPair, Edge> E;
    std::vector<int> T;       // insertion order
    std::vector<SelectLogEntry> log;
    std::vector<int> degree;  // degree of each point in E

    bool in_T(int v) const;
    void set_edge(const CellPair& key, const Edge& e);
};

struct HubSet {
    std::vector<int> members;  // ascending
    std::vector<bool> is_member;
    std::map<CellIndex, int> per_cell_counts;

    bool contains(int v) const { return v >= 0 && v < int(is_member.size()) && is_member[v]; }
};

SelectionState initial_edge_set(const PointSet& ps, const Graph& udg, const GridConfig& grid);

/// One three-step process for the given sub-cell of `cell`.
void process_triplet(SelectionState& state, CellIndex cell, Quadrant quadrant,
                     const TripletAssignment& triplets, const PointSet& ps,
                     const SubcellIndex& index);

HubSet hub_set_of(const SelectionState& state, const PointSet& ps, const SubcellIndex& index);

struct SelectionResult {
    HubSet hub;
    SelectionState state;
};

/// Throws CertificateViolation if `triplets` fails its certificate or a
/// replacement edge would be longer than 1.
SelectionResult compute_hub_set(const PointSet& ps, const Graph& udg, const GridConfig& grid,
                                const TripletAssignment& triplets = default_triplets());

struct PropertyReport {
    bool p1 = true, p2 = true, p3 = true, p4 = true;
    int max_per_cell = 0;
    std::vector<CellIndex> p1_witnesses;
    std::vector<CellPair> p2_witnesses;
    std::vector<CellPair> p3_witnesses;
    std::vector<SubCellId> p4_witnesses;

    bool ok() const { return p1 && p2 && p3 && p4; }
};

inline constexpr int kMaxHubsPerCell = 20;

PropertyReport verify_properties(const PointSet& ps, const Graph& udg, const GridConfig& grid,
                                 const HubSet& hub);

}  // namespace hopspan
