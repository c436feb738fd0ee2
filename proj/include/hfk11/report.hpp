#pragma once

#include <string>

#include "json.hpp"

#include "hfk11/error.hpp"
#include "hfk11/pipeline.hpp"

namespace hfk11 {

inline constexpr int kSchemaVersion = 1;

/// The canonical report document. Keys are sorted, so the textual form is
/// deterministic; `digest` hashes the document without the digest itself.
nlohmann::json report_json(const Analysis& analysis);

/// Document describing a failure, with the machine-readable error code.
nlohmann::json failure_json(const Error& error);

/// Pretty-printed text with a trailing newline.
std::string to_text(const nlohmann::json& doc);

/// FNV-1a 64 of the compact form, as 16 hex digits.
std::string digest_of(const nlohmann::json& doc);

/// Reads {"p": .., "bottom": [[a,b],..], "top": [..], "through": [[b,t],..]}
/// with optional "z_gap" and "w_gap". Throws kInputFormat on malformed input.
OneOneDiagram parse_matchings(const std::string& text);

nlohmann::json matchings_json(const OneOneDiagram& d);

}  // namespace hfk11
