#include "modknot/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "modknot/error.hpp"
#include "modknot/symbols.hpp"

namespace modknot {

std::int64_t DensityReport::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t residue(std::int64_t psi, std::int64_t m) {
  const std::int64_t r = psi % m;
  return r < 0 ? r + m : r;
}

DensityReport density_from_records(std::span<const ClassRecord> records, std::int64_t nu,
                                   std::int64_t m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "modulus must be >= 2");
  if (records.empty()) {
    throw Error(Errc::EmptySample, "no classes with trace < " + std::to_string(nu));
  }
  DensityReport rep;
  rep.modulus = m;
  rep.nu = nu;
  rep.counts.assign(static_cast<std::size_t>(m), 0);
  for (const ClassRecord& r : records) {
    ++rep.counts[static_cast<std::size_t>(residue(psi(r.rep), m))];
  }
  const double n = static_cast<double>(records.size());
  const double target = 1.0 / static_cast<double>(m);
  for (std::int64_t c : rep.counts) {
    const double dens = static_cast<double>(c) / n;
    rep.densities.push_back(dens);
    rep.max_deviation = std::max(rep.max_deviation, std::fabs(dens - target));
  }
  return rep;
}

DensityReport density_mod_m(std::int64_t nu, std::int64_t m, int worker_count) {
  if (m < 2) throw Error(Errc::InvalidArgument, "modulus must be >= 2");
  if (nu < 4) throw Error(Errc::InvalidArgument, "trace bound must be >= 4");
  EnumerationParams p;
  p.trace_bound = nu;
  p.worker_count = worker_count;
  const auto records = enumerate_classes(p);
  return density_from_records(records, nu, m);
}

double cauchy_cdf(double x) { return std::atan(std::numbers::pi * x / 3.0) / std::numbers::pi + 0.5; }

double cauchy_mass(double a, double b) {
  return (std::atan(std::numbers::pi * b / 3.0) - std::atan(std::numbers::pi * a / 3.0)) /
         std::numbers::pi;
}

double ks_distance(std::vector<double> samples) {
  if (samples.empty()) throw Error(Errc::EmptySample, "no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double best = 0.0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double f = cauchy_cdf(samples[i]);
    best = std::max({best, std::fabs(static_cast<double>(i) / n - f),
                     std::fabs(static_cast<double>(j) / n - f)});
    i = j;
  }
  return best;
}

std::size_t bin_index(std::span<const double> edges, double x) {
  const auto it = std::upper_bound(edges.begin(), edges.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - edges.begin());
  idx = idx == 0 ? 0 : idx - 1;
  return std::min(idx, edges.size() - 2);
}

std::vector<double> psi_length_ratios(std::span<const ClassRecord> records) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const ClassRecord& r : records) {
    out.push_back(static_cast<double>(psi(r.rep)) / r.spectral.length);
  }
  return out;
}

CauchyReport cauchy_from_records(std::span<const ClassRecord> records, double length_bound,
                                 std::span<const double> bin_edges) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> edges(bin_edges.begin(), bin_edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i - 1] < edges[i])) {
      throw Error(Errc::InvalidArgument, "bin edges must be strictly increasing");
    }
  }
  if (edges.empty() || edges.front() != -inf) edges.insert(edges.begin(), -inf);
  if (edges.back() != inf) edges.push_back(inf);

  std::vector<double> ratios;
  for (const ClassRecord& r : records) {
    if (r.spectral.length < length_bound) {
      ratios.push_back(static_cast<double>(psi(r.rep)) / r.spectral.length);
    }
  }
  if (ratios.empty()) {
    throw Error(Errc::EmptySample, "no classes shorter than " + std::to_string(length_bound));
  }

  std::vector<std::int64_t> counts(edges.size() - 1, 0);
  for (double x : ratios) ++counts[bin_index(edges, x)];

  CauchyReport rep;
  rep.length_bound = length_bound;
  rep.sample_count = static_cast<std::int64_t>(ratios.size());
  const double n = static_cast<double>(ratios.size());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    rep.bins.push_back(CauchyBin{edges[i], edges[i + 1], static_cast<double>(counts[i]) / n,
                                 cauchy_mass(edges[i], edges[i + 1])});
  }
  rep.ks_distance = ks_distance(std::move(ratios));
  return rep;
}

CauchyReport cauchy_cdf_compare(double length_bound, std::span<const double> bin_edges,
                                int worker_count) {
  const auto records = classes_by_length(length_bound, worker_count);
  return cauchy_from_records(records, length_bound, bin_edges);
}

std::vector<std::pair<std::int64_t, double>> convergence_trend(
    std::span<const std::int64_t> nu_list, std::int64_t m, int worker_count) {
  for (std::size_t i = 1; i < nu_list.size(); ++i) {
    if (!(nu_list[i - 1] < nu_list[i])) {
      throw Error(Errc::InvalidArgument, "trace bounds must be increasing");
    }
  }
  std::vector<std::pair<std::int64_t, double>> out;
  if (nu_list.empty()) return out;
  EnumerationParams p;
  p.trace_bound = nu_list.back();
  p.worker_count = worker_count;
  const auto all = enumerate_classes(p);
  for (std::int64_t nu : nu_list) {
    const auto end = std::partition_point(all.begin(), all.end(), [&](const ClassRecord& r) {
      return r.spectral.trace < nu;
    });
    const std::span<const ClassRecord> prefix(all.data(), static_cast<std::size_t>(end - all.begin()));
    out.emplace_back(nu, density_from_records(prefix, nu, m).max_deviation);
  }
  return out;
}

}  // namespace modknot
