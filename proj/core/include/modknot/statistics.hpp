#pragma once

// Finite-bound distribution statistics of the Rademacher symbol over modular
// knots: residues of Psi mod m, and Psi / length against the Cauchy law with
// scale 3 / pi.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "modknot/enumeration.hpp"

namespace modknot {

struct DensityReport {
  std::int64_t modulus = 0;
  std::int64_t nu = 0;
  std::vector<std::int64_t> counts;  // counts[k] = #{classes : Psi = k mod m}
  std::vector<double> densities;
  double max_deviation = 0.0;  // max_k |density_k - 1/m|
  std::int64_t total() const;
};

/// Reduces Psi into [0, m).
std::int64_t residue(std::int64_t psi, std::int64_t m);

/// Report over an already enumerated class list (all records must have trace
/// < nu). Throws Error(EmptySample) on an empty list.
DensityReport density_from_records(std::span<const ClassRecord> records, std::int64_t nu,
                                   std::int64_t m);

/// Enumerates classes with trace < nu and counts Psi mod m.
DensityReport density_mod_m(std::int64_t nu, std::int64_t m, int worker_count = 1);

struct CauchyBin {
  double lo = 0.0;
  double hi = 0.0;
  double empirical = 0.0;
  double theoretical = 0.0;
};

struct CauchyReport {
  double length_bound = 0.0;
  std::int64_t sample_count = 0;
  std::vector<CauchyBin> bins;
  double ks_distance = 0.0;
};

/// F(x) = arctan(pi x / 3) / pi + 1/2.
double cauchy_cdf(double x);

/// (arctan(pi b / 3) - arctan(pi a / 3)) / pi; a, b may be infinite.
double cauchy_mass(double a, double b);

/// Sup distance between the empirical CDF of the samples and cauchy_cdf.
double ks_distance(std::vector<double> samples);

/// Index of the bin containing x for bins [e_i, e_{i+1}) with the final bin
/// closed. Requires edges.front() <= x <= edges.back().
std::size_t bin_index(std::span<const double> edges, double x);

/// Ratios Psi / length over the records.
std::vector<double> psi_length_ratios(std::span<const ClassRecord> records);

/// Bin edges are completed with -inf / +inf tails when missing so the bins
/// cover the line. Throws Error(InvalidArgument) for non-increasing edges and
/// Error(EmptySample) when no class is shorter than the bound.
CauchyReport cauchy_cdf_compare(double length_bound, std::span<const double> bin_edges,
                                int worker_count = 1);

CauchyReport cauchy_from_records(std::span<const ClassRecord> records, double length_bound,
                                 std::span<const double> bin_edges);

/// max_deviation of density_mod_m at each bound (must be increasing).
std::vector<std::pair<std::int64_t, double>> convergence_trend(
    std::span<const std::int64_t> nu_list, std::int64_t m, int worker_count = 1);

}  // namespace modknot
