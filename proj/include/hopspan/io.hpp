#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hopspan/sparse.hpp"
#include "hopspan/spanner.hpp"

namespace hopspan {

using Json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path);
/// Writes atomically enough for our purposes: truncate and write.
void write_text_file(const std::string& path, std::string_view text);

/// JSON {"points": [[x, y], ...]} with numbers or hexadecimal-float strings,
/// or plain text with one "x y" pair per line ('#' starts a comment).
PointSet parse_points(std::string_view text);
std::string points_to_json(const PointSet& ps);

/// FNV-1a over the IEEE-754 bit patterns of all coordinates.
std::uint64_t points_fingerprint(const PointSet& ps);

Json spanner_to_json(const SpannerBundle& b, const PointSet& ps);
Json hex_spanner_to_json(const HexSpanner& s, const PointSet& ps);

/// "plane" or "hex"; throws ParseError otherwise.
std::string spanner_kind(const Json& j);

/// Throws ParseError on malformed input, PreconditionError if the file was
/// built from a different point set.
SpannerBundle spanner_from_json(const Json& j, const PointSet& ps);
HexSpanner hex_spanner_from_json(const Json& j, const PointSet& ps);

/// Stable textual form: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace hopspan
