#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dessin/dessin.hpp"
#include "dessin/invariants.hpp"
#include "dessin/pattern.hpp"

namespace dessin::io {

using nlohmann::json;

// Dessin file:
//   degree: <d>
//   x: <cycles>
//   y: <cycles>
// or a JSON object {"degree": d, "x": "<cycles>", "y": "<cycles>"}.
// Blank lines and '#' comments are ignored. Throws parse_error on malformed
// text and validation_error on a non-transitive pair.
Dessin parse_dessin(std::string_view text);
std::string write_dessin(Dessin const &d);
Dessin load_dessin(std::filesystem::path const &path);

// Pattern file:
//   name: <string>
//   degree: <m>
//   xb: <cycles>
//   yb: <cycles>
//   wx: <edge>=<word>; ...
//   wy: <edge>=<word>; ...
// Unlisted edges get the empty word.
ExtendingPattern parse_pattern(std::string_view text);
std::string write_pattern(ExtendingPattern const &p);
ExtendingPattern load_pattern(std::filesystem::path const &path);

// Directories listed in DESSIN_PATTERN_PATH (colon separated).
std::vector<std::filesystem::path> pattern_search_path();

// Builtin name, then an existing file path, then <dir>/<name>.pattern for
// each directory of the search path.
ExtendingPattern
resolve_pattern(std::string const &spec,
                std::vector<std::filesystem::path> const &search_path);

std::string read_file(std::filesystem::path const &path);

json fingerprint_to_json(GroupFingerprint const &fp);
GroupFingerprint fingerprint_from_json(json const &j);

std::string report_to_text(InvariantReport const &r);
json report_to_json(InvariantReport const &r);
InvariantReport report_from_json(json const &j);

std::string verdict_to_text(Verdict const &v);
json verdict_to_json(Verdict const &v);

} // namespace dessin::io
