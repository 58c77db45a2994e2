#include "bnconcur/report.hpp"

#include <cstdint>

#include "json.hpp"

#include "bnconcur/errors.hpp"

namespace bnconcur {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string report_json(const std::string& command,
                        const std::string& input_digest,
                        const std::string& payload_json) {
    nlohmann::ordered_json payload;
    try {
        payload = nlohmann::ordered_json::parse(payload_json);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("internal: bad report payload: ") + e.what());
    }
    nlohmann::ordered_json j;
    j["version"] = kToolVersion;
    j["input_digest"] = input_digest;
    j["command"] = command;
    j["result"] = std::move(payload);
    return j.dump(2) + "\n";
}

} // namespace bnconcur
