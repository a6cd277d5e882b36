#pragma once

#include <map>
#include <vector>

#include "hopspan/hexgrid.hpp"
#include "hopspan/spanner.hpp"

namespace hopspan {

struct HexSpanner {
    HexGridConfig hex;
    std::size_t n_points = 0;
    std::map<HexCoord, int> centers;  // lowest-index point of each nonempty cell
    std::vector<Edge> star_edges;     // center to every other point of its cell
    std::vector<Edge> link_edges;     // shortest UDG edge per linked cell pair

    std::vector<Edge> all_edges() const;
    Graph graph() const;
};

HexSpanner build_hex_spanner(const PointSet& ps);

inline constexpr int kHexStretchBound = 5;

struct HexReport {
    StretchReport stretch;
    std::size_t edge_count = 0;
    std::size_t nonempty_cells = 0;
    std::size_t max_link_partners = 0;
    bool within_9n = true;
    bool within_n_plus_8c = true;
    bool partners_within_bound = true;
    bool edges_in_udg = true;

    bool ok() const {
        return stretch.ok() && within_9n && within_n_plus_8c && partners_within_bound &&
               edges_in_udg;
    }
};

HexReport verify_hex(const HexSpanner& s, const PointSet& ps);

}  // namespace hopspan
