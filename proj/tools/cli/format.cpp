#include "cli/format.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "setpair/error.hpp"

namespace setpair::cli {

std::string fixed10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double round10(double v) { return std::strtod(fixed10(v).c_str(), nullptr); }

std::optional<std::string> rational_hint(double v) {
  if (!std::isfinite(v) || std::fabs(v) > 1e6) return std::nullopt;
  for (long q = 1; q <= 1000; ++q) {
    const double p = std::round(v * static_cast<double>(q));
    if (std::fabs(v - p / static_cast<double>(q)) <= 1e-9) {
      const long long num = static_cast<long long>(p);
      return q == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(q);
    }
  }
  return std::nullopt;
}

std::string annotated(double v) {
  std::string out = fixed10(v);
  if (const auto hint = rational_hint(v); hint && *hint != out) out += " (" + *hint + ")";
  return out;
}

std::vector<double> parse_vector_text(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '(' || c == ')' || c == ',' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream in(cleaned);
  std::vector<double> x;
  for (std::string tok; in >> tok;) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(v)) {
      throw ParseError(ParseErrorKind::BadValue, 1, "'" + tok + "' is not a finite number");
    }
    x.push_back(v);
  }
  if (x.empty()) throw ParseError(ParseErrorKind::MissingEntry, 1, "empty vector");
  return x;
}

std::vector<double> load_vector(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '(' || arg.find(',') != std::string::npos)) {
    return parse_vector_text(arg);
  }
  std::ifstream in(arg);
  if (!in) throw InvalidArgument("cannot open vector file '" + arg + "'");
  std::ostringstream buf;
  std::string line;
  while (std::getline(in, line)) buf << line.substr(0, line.find('#')) << '\n';
  return parse_vector_text(buf.str());
}

std::string hex_digest(unsigned long long digest) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", digest);
  return buf;
}

}  // namespace setpair::cli
