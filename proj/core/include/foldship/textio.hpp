#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace foldship {

// printf-style formatting of a single double with deterministic output.
std::string num(double v, const char* spec = "%.10g");

// Shortest decimal form that parses back to the same double.
std::string num_exact(double v);

std::uint64_t fnv1a(std::string_view data);
std::string hex16(std::uint64_t v);

// Standard provenance block for generated artifacts: tool id plus the
// fingerprint of the configuration that produced the file.
std::vector<std::string> provenance_lines(const std::string& config_fingerprint);

// Write each line prefixed (e.g. "# " for CSV/OBJ).
void write_comments(std::ostream& os, const std::string& prefix,
                    const std::vector<std::string>& lines);

}
