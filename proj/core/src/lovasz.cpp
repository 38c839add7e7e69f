#include "setpair/lovasz.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "setpair/error.hpp"
#include "setpair/numeric.hpp"

namespace setpair {

SetPairFunction::SetPairFunction(std::string name, std::size_t n, Fn fn,
                                 std::optional<bool> symmetric_hint)
    : name_(std::move(name)),
      n_(n),
      fn_(std::make_shared<const Fn>(std::move(fn))),
      symmetric_(symmetric_hint) {}

double SetPairFunction::operator()(const SetPair& p) const {
  if (!fn_) throw InvalidArgument("SetPairFunction: empty handle");
  if (p.n() != n_) throw InvalidArgument("SetPairFunction '" + name_ + "': pair size mismatch");
  const double value = (*fn_)(p);
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidArgument("SetPairFunction '" + name_ + "' returned " + std::to_string(value) +
                          " at " + to_text(p));
  }
  return value;
}

SetPairFunction operator+(const SetPairFunction& f, const SetPairFunction& g) {
  if (f.n() != g.n()) throw InvalidArgument("SetPairFunction sum: size mismatch");
  std::optional<bool> sym;
  if (f.symmetric_hint() == true && g.symmetric_hint() == true) sym = true;
  return SetPairFunction(
      f.name() + "+" + g.name(), f.n(), [f, g](const SetPair& p) { return f(p) + g(p); }, sym);
}

SetPairFunction operator*(double c, const SetPairFunction& f) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidArgument("SetPairFunction scale: c < 0");
  std::ostringstream name;
  name << c << "*" << f.name();
  return SetPairFunction(
      name.str(), f.n(), [c, f](const SetPair& p) { return c * f(p); }, f.symmetric_hint());
}

SetFunction::SetFunction(std::string name, std::size_t n, Fn fn)
    : name_(std::move(name)), n_(n), fn_(std::make_shared<const Fn>(std::move(fn))) {}

double SetFunction::operator()(const VertexSet& s) const {
  if (!fn_) throw InvalidArgument("SetFunction: empty handle");
  if (s.universe() != n_) throw InvalidArgument("SetFunction '" + name_ + "': size mismatch");
  const double value = (*fn_)(s);
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidArgument("SetFunction '" + name_ + "' returned a negative or non-finite value");
  }
  return value;
}

PairTable::PairTable(std::size_t n, std::vector<double> values) : n_(n) {
  if (n > kMaxTabulatedVertices) {
    throw GuardExceeded("tabulated functions limited to n <= " +
                        std::to_string(kMaxTabulatedVertices));
  }
  if (values.size() != pow3(n)) throw InvalidArgument("PairTable: expected 3^n values");
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) throw InvalidArgument("PairTable: negative or non-finite");
  }
  values_ = std::make_shared<const std::vector<double>>(std::move(values));
}

PairTable PairTable::tabulate(const SetPairFunction& f) {
  if (f.n() > kMaxTabulatedVertices) {
    throw GuardExceeded("tabulated functions limited to n <= " +
                        std::to_string(kMaxTabulatedVertices));
  }
  std::vector<double> values;
  values.reserve(pow3(f.n()));
  for (const SetPair& p : SetPairRange(f.n())) values.push_back(f(p));
  return PairTable(f.n(), std::move(values));
}

PairTable PairTable::random(std::size_t n, std::uint64_t seed, bool zero_at_empty) {
  if (n > kMaxTabulatedVertices) {
    throw GuardExceeded("tabulated functions limited to n <= " +
                        std::to_string(kMaxTabulatedVertices));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(pow3(n));
  for (double& v : values) v = unit(rng);
  if (zero_at_empty) values[0] = 0.0;
  return PairTable(n, std::move(values));
}

double PairTable::max_value() const {
  return values_->empty() ? 0.0 : *std::max_element(values_->begin(), values_->end());
}

SetPairFunction PairTable::as_function(std::string name) const {
  auto values = values_;
  return SetPairFunction(std::move(name), n_,
                         [values](const SetPair& p) { return (*values)[pair_code(p)]; });
}

PairTable parse_pair_table(std::istream& in, std::size_t n) {
  if (n > kMaxTabulatedVertices) {
    throw GuardExceeded("tabulated functions limited to n <= " +
                        std::to_string(kMaxTabulatedVertices));
  }
  const std::uint64_t size = pow3(n);
  std::vector<double> values(size, 0.0);
  std::vector<bool> seen(size, false);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = raw.substr(0, raw.find('#'));
    std::istringstream fields(line);
    std::string code_tok;
    std::string value_tok;
    std::string extra;
    if (!(fields >> code_tok)) continue;
    if (!(fields >> value_tok) || (fields >> extra)) {
      throw ParseError(ParseErrorKind::Malformed, line_no, "expected \"code value\"");
    }
    if (code_tok.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(ParseErrorKind::Malformed, line_no, "code is not an integer");
    }
    std::uint64_t code = 0;
    try {
      code = std::stoull(code_tok);
    } catch (const std::exception&) {
      code = size;
    }
    if (code >= size) {
      throw ParseError(ParseErrorKind::OutOfRange, line_no,
                       "code must lie in 0.." + std::to_string(size - 1));
    }
    if (seen[code]) throw ParseError(ParseErrorKind::Malformed, line_no, "repeated code");
    double value = 0.0;
    std::size_t used = 0;
    try {
      value = std::stod(value_tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value_tok.size()) {
      throw ParseError(ParseErrorKind::Malformed, line_no, "value is not a number");
    }
    if (!std::isfinite(value) || value < 0.0) {
      throw ParseError(ParseErrorKind::BadValue, line_no, "values must be finite and >= 0");
    }
    values[code] = value;
    seen[code] = true;
  }
  for (std::uint64_t code = 0; code < size; ++code) {
    if (!seen[code]) {
      throw ParseError(ParseErrorKind::MissingEntry, line_no, "no value for code " +
                                                                  std::to_string(code));
    }
  }
  return PairTable(n, std::move(values));
}

PairTable read_pair_table(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open function file '" + path + "'");
  return parse_pair_table(in, n);
}

void write_pair_table(std::ostream& out, const PairTable& table) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (std::uint64_t code = 0; code < table.values().size(); ++code) {
    out << code << ' ' << table.at(code) << '\n';
  }
  out.precision(old_precision);
}

double setpair_extension(const SetPairFunction& f, std::span<const double> x) {
  if (x.size() != f.n()) throw InvalidArgument("setpair_extension: dimension mismatch");
  const ChainDecomposition chain = threshold_pairs(x);
  double total = 0.0;
  for (std::size_t i = 0; i < chain.pairs.size(); ++i) {
    if (chain.gaps[i] != 0.0) total += chain.gaps[i] * f(chain.pairs[i]);
  }
  return total;
}

namespace {

SetPair pair_above(std::span<const double> x, double t) {
  SetPair p(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] > t) p.a.insert(v);
    if (-x[v] > t) p.b.insert(v);
  }
  return p;
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

double setpair_extension_integral(const SetPairFunction& f, std::span<const double> x,
                                  std::size_t steps) {
  if (x.size() != f.n()) throw InvalidArgument("setpair_extension_integral: dimension mismatch");
  if (steps == 0) throw InvalidArgument("setpair_extension_integral: steps must be >= 1");
  std::vector<double> levels{0.0};
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidArgument("setpair_extension_integral: non-finite entry");
    levels.push_back(std::fabs(v));
  }
  levels = sorted_unique(std::move(levels));
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const double lo = levels[k];
    const double hi = levels[k + 1];
    if (steps == 1) {
      // The pair is constant on (lo, hi] and equals the one just above lo.
      total += (hi - lo) * f(pair_above(x, lo));
      continue;
    }
    const double h = (hi - lo) / static_cast<double>(steps);
    for (std::size_t s = 0; s < steps; ++s) {
      const double t = lo + (static_cast<double>(s) + 0.5) * h;
      total += h * f(pair_above(x, std::min(t, std::nextafter(hi, lo))));
    }
  }
  return total;
}

double setpair_extension_chain(const SetPairFunction& f, const ChainDecomposition& chain) {
  chain.validate();
  if (chain.n != f.n()) throw InvalidArgument("setpair_extension_chain: dimension mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < chain.pairs.size(); ++i) {
    if (chain.gaps[i] != 0.0) total += chain.gaps[i] * f(chain.pairs[i]);
  }
  return total;
}

double original_extension(const SetFunction& f, std::span<const double> x) {
  const std::size_t n = x.size();
  if (n != f.n()) throw InvalidArgument("original_extension: dimension mismatch");
  if (n == 0) return 0.0;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
  // i = 0 term: (x_{σ(1)} − x₀) f(V₀) with x₀ = 0 and V₀ = V.
  double total = x[order[0]] * f(VertexSet::full(n));
  VertexSet above = VertexSet::full(n);
  std::size_t dropped = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const double gap = x[order[i]] - x[order[i - 1]];
    const double level = x[order[i - 1]];
    while (dropped < n && x[order[dropped]] <= level) above.erase(order[dropped++]);
    if (gap != 0.0) total += gap * f(above);
  }
  return total;
}

double original_extension_integral(const SetFunction& f, std::span<const double> x) {
  const std::size_t n = x.size();
  if (n != f.n()) throw InvalidArgument("original_extension_integral: dimension mismatch");
  if (n == 0) return 0.0;
  const std::vector<double> levels = sorted_unique(std::vector<double>(x.begin(), x.end()));
  double total = levels.front() * f(VertexSet::full(n));
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    VertexSet above(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (x[v] > levels[k]) above.insert(v);
    }
    total += (levels[k + 1] - levels[k]) * f(above);
  }
  return total;
}

PropertyReport extension_properties_check(const SetPairFunction& f, std::size_t trials,
                                          std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("extension_properties_check: trials must be >= 1");
  const std::size_t n = f.n();
  PropertyReport report;
  report.trials = trials;

  report.symmetric = true;
  for (const SetPair& p : enumerate_setpairs(n)) {
    if (!approx_equal(f(p), f(p.swapped()))) {
      report.symmetric = false;
      break;
    }
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  std::uniform_real_distribution<double> shift(0.0, 3.0);
  const SetPairFunction g = PairTable::random(std::min<std::size_t>(n, kMaxTabulatedVertices),
                                              seed ^ 0x9E3779B97F4A7C15ULL)
                                .as_function("g");
  const bool have_g = g.n() == n;

  std::vector<double> x(n);
  std::vector<double> y(n);
  double scale_seen = 1.0;
  for (std::size_t t = 0; t < trials; ++t) {
    for (double& v : x) v = normal(rng);
    if (n > 0 && t % 4 == 0) x[t % n] = 0.0;  // exercise zero coordinates
    const double fx = setpair_extension(f, x);
    scale_seen = std::max(scale_seen, std::fabs(fx));
    const double lam = scale(rng);
    const double alpha = shift(rng);

    for (std::size_t i = 0; i < n; ++i) y[i] = lam * x[i];
    report.homogeneity = std::max(report.homogeneity, std::fabs(setpair_extension(f, y) - lam * fx));

    SetPair base(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double s = x[i] > 0.0 ? 1.0 : x[i] < 0.0 ? -1.0 : 0.0;
      y[i] = x[i] + alpha * s;
      if (s > 0) base.a.insert(i);
      if (s < 0) base.b.insert(i);
    }
    report.sign_shift = std::max(
        report.sign_shift, std::fabs(setpair_extension(f, y) - fx - alpha * f(base)));

    if (have_g) {
      const double sum = setpair_extension(f + g, x);
      report.additivity =
          std::max(report.additivity, std::fabs(sum - fx - setpair_extension(g, x)));
    }
    report.additivity =
        std::max(report.additivity, std::fabs(setpair_extension(lam * f, x) - lam * fx));

    for (std::size_t i = 0; i < n; ++i) y[i] = -x[i];
    report.evenness = std::max(report.evenness, std::fabs(setpair_extension(f, y) - fx));
  }
  const bool even = report.evenness <= kRelTol * scale_seen;
  report.even_matches_symmetric = even == report.symmetric;
  return report;
}

}  // namespace setpair
