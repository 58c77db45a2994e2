#pragma once

#include <string>

namespace bnconcur {

inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

/// Stable result envelope: {"version", "input_digest", "command",
/// "result": <payload>} with two-space indent and trailing newline.
/// payload_json must be a valid JSON document.
std::string report_json(const std::string& command,
                        const std::string& input_digest,
                        const std::string& payload_json);

} // namespace bnconcur
