#pragma once

#include "orbsurf/serialize.hpp"

#include <string>

namespace orbsurf::cli {

// "b0:k,a,b" -> the double cover together with its pencil class.
DoubleCover parse_b0_spec(const std::string& spec);

// "p2", "p1xp1"/"quadric", "b0:k,a,b", or a path to a surface JSON file.
SurfaceModel load_surface(const std::string& spec);

// Comma-separated integer list: "1,36" -> (1, 36).
DivisorClass parse_class(const std::string& text);

// "lo..hi" or a single integer (meaning lo = hi). Throws with the
// offending token on malformed input.
SearchRange parse_range(const std::string& text);

Json read_json_file(const std::string& path);

// Deterministic output envelope shared by every subcommand.
Json envelope(const std::string& command, Json inputs, Json result);

void emit(const Json& doc);

} // namespace orbsurf::cli
