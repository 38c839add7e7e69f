#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace setpair::cli {

// Value rounded to 10 significant digits (what the JSON carries).
double round10(double v);
// "%.10g"
std::string fixed10(double v);
// "p/q" (or "p") for the smallest q <= 1000 with |v − p/q| <= 1e-9.
std::optional<std::string> rational_hint(double v);
// fixed10 plus " (p/q)" when a hint exists.
std::string annotated(double v);

// "(1,-1,0)" or whitespace/comma separated decimals.
std::vector<double> parse_vector_text(const std::string& text);
// Inline form when the argument starts with '(' or contains ','; file otherwise.
std::vector<double> load_vector(const std::string& arg);

std::string hex_digest(unsigned long long digest);

}  // namespace setpair::cli
