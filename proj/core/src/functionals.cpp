#include "setpair/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "setpair/error.hpp"

namespace setpair {

namespace {

void check_dim(const Graph& g, std::span<const double> x, const char* what) {
  if (x.size() != g.n()) {
    throw InvalidArgument(std::string(what) + ": vector has " + std::to_string(x.size()) +
                          " entries, graph has " + std::to_string(g.n()) + " vertices");
  }
}

}  // namespace

double tv(const Graph& g, std::span<const double> x) {
  check_dim(g, x, "I");
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.w * std::fabs(x[e.u] - x[e.v]);
  return total;
}

double iplus(const Graph& g, std::span<const double> x) {
  check_dim(g, x, "I+");
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.w * std::fabs(x[e.u] + x[e.v]);
  return total;
}

double ihat(const Graph& g, std::span<const double> x) {
  check_dim(g, x, "Ihat");
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.w * std::fabs(std::fabs(x[e.u]) - std::fabs(x[e.v]));
  return total;
}

double dnorm1(const Graph& g, std::span<const double> x) {
  check_dim(g, x, "norm");
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) total += g.degree(i) * std::fabs(x[i]);
  return total;
}

double sup_norm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::fabs(v));
  return m;
}

MedianDeviation median_dev(const Graph& g, std::span<const double> v) {
  check_dim(g, v, "median_dev");
  const double vol = g.total_volume();
  if (vol == 0.0 || v.empty()) return {};
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
  double prefix = 0.0;
  double alpha = v[order.back()];
  for (std::size_t k : order) {
    prefix += g.degree(k);
    if (prefix >= 0.5 * vol) {
      alpha = v[k];
      break;
    }
  }
  double value = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) value += g.degree(i) * std::fabs(v[i] - alpha);
  return {value, alpha};
}

std::string_view to_string(TableRow row) noexcept {
  switch (row) {
    case TableRow::F1: return "F1";
    case TableRow::F2: return "F2";
    case TableRow::G1: return "G1";
    case TableRow::G2: return "G2";
    case TableRow::G3: return "G3";
  }
  return "?";
}

TableRow parse_table_row(std::string_view name) {
  for (TableRow row : {TableRow::F1, TableRow::F2, TableRow::G1, TableRow::G2, TableRow::G3}) {
    if (name == to_string(row)) return row;
  }
  throw InvalidArgument("unknown table function '" + std::string(name) + "'");
}

SetPairFunction table_function(const Graph& g, TableRow row) {
  const std::string name(to_string(row));
  switch (row) {
    case TableRow::F1:
      return SetPairFunction(
          name, g.n(),
          [g](const SetPair& p) { return g.boundary_weight(p.a) + g.boundary_weight(p.b); }, true);
    case TableRow::F2:
      return SetPairFunction(
          name, g.n(), [g](const SetPair& p) { return g.cross_weight(p.a, p.b); }, true);
    case TableRow::G1: {
      const double vol = g.total_volume();
      return SetPairFunction(name, g.n(), [vol](const SetPair&) { return vol; }, true);
    }
    case TableRow::G2:
      return SetPairFunction(
          name, g.n(), [g](const SetPair& p) { return g.volume(p.a) + g.volume(p.b); }, true);
    case TableRow::G3:
      return SetPairFunction(
          name, g.n(),
          [g](const SetPair& p) {
            const double vol = g.total_volume();
            const double va = g.volume(p.a);
            const double vb = g.volume(p.b);
            return std::min(va, vol - va) + std::min(vb, vol - vb);
          },
          true);
  }
  throw InvalidArgument("unknown table row");
}

double table_extension_closed(const Graph& g, TableRow row, std::span<const double> x) {
  switch (row) {
    case TableRow::F1: return tv(g, x);
    case TableRow::F2: return 0.5 * dnorm1(g, x) - 0.5 * iplus(g, x);
    case TableRow::G1: check_dim(g, x, "G1"); return g.total_volume() * sup_norm(x);
    case TableRow::G2: return dnorm1(g, x);
    case TableRow::G3: return median_dev(g, x).value;
  }
  throw InvalidArgument("unknown table row");
}

double g3_extension_magnitude(const Graph& g, std::span<const double> x) {
  std::vector<double> mag(x.size());
  std::transform(x.begin(), x.end(), mag.begin(), [](double v) { return std::fabs(v); });
  return median_dev(g, mag).value;
}

}  // namespace setpair
