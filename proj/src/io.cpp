#include "hopspan/io.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hopspan {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw ParseError("write failed for " + path);
}

namespace {

double parse_double(const std::string& s, const std::string& where) {
    if (s.empty()) throw ParseError(where + ": empty number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw ParseError(where + ": bad number '" + s + "'");
    return v;
}

double coordinate(const Json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_double(v.get<std::string>(), where);
    throw ParseError(where + ": coordinate must be a number or string");
}

Json edges_json(const std::vector<Edge>& edges) {
    Json a = Json::array();
    for (const Edge& e : edges) a.push_back({e.u, e.v});
    return a;
}

std::vector<Edge> edges_from(const Json& j, const char* key, int n) {
    std::vector<Edge> out;
    if (!j.contains(key) || !j[key].is_array()) {
        throw ParseError(std::string("spanner: missing array '") + key + "'");
    }
    for (const Json& e : j[key]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw ParseError(std::string("spanner: bad edge in '") + key + "'");
        }
        const int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
            throw ParseError(std::string("spanner: edge index out of range in '") + key + "'");
        }
        out.emplace_back(u, v);
    }
    return out;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void check_points(const Json& j, const PointSet& ps) {
    if (!j.contains("n_points") || !j["n_points"].is_number_integer()) {
        throw ParseError("spanner: missing n_points");
    }
    if (j["n_points"].get<long long>() != ps.size()) {
        throw PreconditionError("spanner was built for " + std::to_string(j["n_points"].get<long long>()) +
                                " points, input has " + std::to_string(ps.size()));
    }
    if (j.contains("points_fnv1a64") && j["points_fnv1a64"] != hex64(points_fingerprint(ps))) {
        throw PreconditionError("spanner was built from a different point set");
    }
}

Point2 pair_from(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2) {
        throw ParseError(std::string("spanner: missing '") + key + "'");
    }
    return {coordinate(j[key][0], key), coordinate(j[key][1], key)};
}

}  // namespace

PointSet parse_points(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    std::vector<Point2> pts;
    if (first != std::string_view::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& e) {
            throw ParseError(std::string("points: ") + e.what());
        }
        if (!j.contains("points") || !j["points"].is_array()) {
            throw ParseError("points: missing array 'points'");
        }
        for (std::size_t i = 0; i < j["points"].size(); ++i) {
            const Json& p = j["points"][i];
            const std::string where = "points[" + std::to_string(i) + "]";
            if (!p.is_array() || p.size() != 2) throw ParseError(where + ": expected [x, y]");
            pts.push_back({coordinate(p[0], where), coordinate(p[1], where)});
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string line;
        for (int lineno = 1; std::getline(in, line); ++lineno) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string xs, ys, extra;
            if (!(ls >> xs)) continue;
            const std::string where = "line " + std::to_string(lineno);
            if (!(ls >> ys) || (ls >> extra)) throw ParseError(where + ": expected 'x y'");
            pts.push_back({parse_double(xs, where), parse_double(ys, where)});
        }
    }
    try {
        return PointSet(std::move(pts));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::string points_to_json(const PointSet& ps) {
    Json pts = Json::array();
    for (const Point2& p : ps.points) pts.push_back({p.x, p.y});
    Json j;
    j["points"] = std::move(pts);
    return dump(j);
}

std::uint64_t points_fingerprint(const PointSet& ps) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](double v) {
        std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    for (const Point2& p : ps.points) {
        feed(p.x);
        feed(p.y);
    }
    return h;
}

Json spanner_to_json(const SpannerBundle& b, const PointSet& ps) {
    Json j;
    j["type"] = "plane";
    j["n_points"] = ps.size();
    j["points_fnv1a64"] = hex64(points_fingerprint(ps));
    j["grid_offset"] = {b.grid.offset_x, b.grid.offset_y};
    j["hubs"] = b.hub.members;
    j["dt_edges"] = edges_json(b.dt_edges);
    j["attachment_edges"] = edges_json(b.attachment_edges);
    const SpannerStats& s = b.stats;
    j["stats"] = {{"udg_edges", s.udg_edges},
                  {"hubs", s.hubs},
                  {"delaunay_edges", s.delaunay_edges},
                  {"dt_edges", s.dt_edges},
                  {"attachment_edges", s.attachment_edges},
                  {"replacements", s.replacements},
                  {"coverage_repairs", s.coverage_repairs},
                  {"max_hubs_per_cell", s.max_per_cell},
                  {"max_hops", s.max_hops}};
    return j;
}

std::string spanner_kind(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw ParseError("spanner: missing 'type'");
    }
    const std::string t = j["type"].get<std::string>();
    if (t != "plane" && t != "hex") throw ParseError("spanner: unknown type '" + t + "'");
    return t;
}

SpannerBundle spanner_from_json(const Json& j, const PointSet& ps) {
    if (spanner_kind(j) != "plane") throw ParseError("spanner: expected type 'plane'");
    check_points(j, ps);
    SpannerBundle b;
    const Point2 off = pair_from(j, "grid_offset");
    b.grid.offset_x = off.x;
    b.grid.offset_y = off.y;
    if (!j.contains("hubs") || !j["hubs"].is_array()) throw ParseError("spanner: missing 'hubs'");
    b.hub.is_member.assign(ps.points.size(), false);
    for (const Json& h : j["hubs"]) {
        if (!h.is_number_integer()) throw ParseError("spanner: bad hub index");
        const int v = h.get<int>();
        if (v < 0 || v >= ps.size()) throw ParseError("spanner: hub index out of range");
        b.hub.is_member[v] = true;
    }
    for (int v = 0; v < ps.size(); ++v) {
        if (!b.hub.is_member[v]) continue;
        b.hub.members.push_back(v);
        ++b.hub.per_cell_counts[cell_of(ps[v], b.grid)];
    }
    b.dt_edges = edges_from(j, "dt_edges", ps.size());
    b.attachment_edges = edges_from(j, "attachment_edges", ps.size());
    SpannerStats& s = b.stats;
    s.n_points = ps.points.size();
    if (j.contains("stats") && j["stats"].is_object()) {
        const Json& st = j["stats"];
        auto get = [&](const char* k, auto& dst) {
            if (st.contains(k) && st[k].is_number_integer()) dst = st[k].get<std::decay_t<decltype(dst)>>();
        };
        get("udg_edges", s.udg_edges);
        get("hubs", s.hubs);
        get("delaunay_edges", s.delaunay_edges);
        get("dt_edges", s.dt_edges);
        get("attachment_edges", s.attachment_edges);
        get("replacements", s.replacements);
        get("coverage_repairs", s.coverage_repairs);
        get("max_hubs_per_cell", s.max_per_cell);
        get("max_hops", s.max_hops);
    }
    return b;
}

Json hex_spanner_to_json(const HexSpanner& s, const PointSet& ps) {
    Json j;
    j["type"] = "hex";
    j["n_points"] = ps.size();
    j["points_fnv1a64"] = hex64(points_fingerprint(ps));
    j["hex_offset"] = {s.hex.offset.x, s.hex.offset.y};
    Json centers = Json::array();
    for (const auto& [cell, v] : s.centers) centers.push_back({cell.q, cell.r, v});
    j["centers"] = std::move(centers);
    j["star_edges"] = edges_json(s.star_edges);
    j["link_edges"] = edges_json(s.link_edges);
    j["stats"] = {{"edges", s.all_edges().size()}, {"cells", s.centers.size()}};
    return j;
}

HexSpanner hex_spanner_from_json(const Json& j, const PointSet& ps) {
    if (spanner_kind(j) != "hex") throw ParseError("spanner: expected type 'hex'");
    check_points(j, ps);
    HexSpanner s;
    s.n_points = ps.points.size();
    s.hex.offset = pair_from(j, "hex_offset");
    if (!j.contains("centers") || !j["centers"].is_array()) throw ParseError("spanner: missing 'centers'");
    for (const Json& c : j["centers"]) {
        if (!c.is_array() || c.size() != 3) throw ParseError("spanner: bad center entry");
        const int v = c[2].get<int>();
        if (v < 0 || v >= ps.size()) throw ParseError("spanner: center index out of range");
        s.centers[{c[0].get<int>(), c[1].get<int>()}] = v;
    }
    s.star_edges = edges_from(j, "star_edges", ps.size());
    s.link_edges = edges_from(j, "link_edges", ps.size());
    return s;
}

namespace {

bool is_flat(const Json& j) {
    return std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

// Objects and arrays of arrays open one line per element; arrays of scalars
// stay on one line so point and edge lists remain readable.
void emit(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            emit(it.value(), indent + 2, out);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        out += "[\n";
        bool first = true;
        for (const Json& e : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad;
            emit(e, indent + 2, out);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else if (j.is_array()) {
        out += "[";
        bool first = true;
        for (const Json& e : j) {
            if (!first) out += ", ";
            first = false;
            out += e.dump();
        }
        out += "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    emit(j, 0, out);
    out += "\n";
    return out;
}

}  // namespace hopspan
