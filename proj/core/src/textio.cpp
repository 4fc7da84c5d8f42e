#include <foldship/textio.hpp>
#include <foldship/version.hpp>

#include <charconv>
#include <cstdio>
#include <ostream>

namespace foldship {

std::string num(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string num_exact(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex16(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::vector<std::string> provenance_lines(const std::string& config_fingerprint) {
    return {std::string(kToolName) + " " + kVersion,
            "config " + config_fingerprint};
}

void write_comments(std::ostream& os, const std::string& prefix,
                    const std::vector<std::string>& lines) {
    for (const auto& line : lines)
        os << prefix << line << "\n";
}

}
