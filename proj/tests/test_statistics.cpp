#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "modknot/enumeration.hpp"
#include "modknot/error.hpp"
#include "modknot/statistics.hpp"
#include "modknot/symbols.hpp"

using namespace modknot;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("residue") {
  CHECK(residue(0, 3) == 0);
  CHECK(residue(-1, 3) == 2);
  CHECK(residue(-6, 3) == 0);
  CHECK(residue(7, 5) == 2);
}

TEST_CASE("density_mod_m examples") {
  const DensityReport r4 = density_mod_m(4, 2);
  CHECK(r4.counts == std::vector<std::int64_t>{1, 0});
  CHECK(r4.densities[0] == 1.0);
  CHECK(r4.max_deviation == doctest::Approx(0.5));

  const DensityReport r5 = density_mod_m(5, 3);
  CHECK(r5.counts == std::vector<std::int64_t>{1, 1, 1});
  for (double d : r5.densities) CHECK(d == doctest::Approx(1.0 / 3.0));
  CHECK(r5.max_deviation == doctest::Approx(0.0));
}

TEST_CASE("density_mod_m errors") {
  CHECK_THROWS_AS(density_mod_m(10, 1), Error);
  CHECK_THROWS_AS(density_mod_m(3, 2), Error);
  try {
    density_from_records({}, 4, 2);
    FAIL("expected EmptySample");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptySample);
  }
}

TEST_CASE("densities partition and match a direct recount") {
  EnumerationParams p;
  p.trace_bound = 150;
  const auto records = enumerate_classes(p);
  for (std::int64_t m : {2, 3, 4, 5, 7, 12}) {
    const DensityReport rep = density_from_records(records, 150, m);
    CHECK(rep.total() == static_cast<std::int64_t>(records.size()));
    CHECK(std::accumulate(rep.densities.begin(), rep.densities.end(), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (std::int64_t k = 0; k < m; ++k) {
      std::int64_t n = 0;
      for (const auto& r : records) {
        const std::int64_t v = psi_from_word(r.necklace);
        n += ((v - k) % m == 0);
      }
      CHECK(rep.counts[static_cast<std::size_t>(k)] == n);
    }
  }
}

TEST_CASE("residue counts are mirror symmetric at every bound") {
  EnumerationParams p;
  p.trace_bound = 200;
  const auto all = enumerate_classes(p);
  for (std::int64_t nu : {6, 17, 50, 101, 200}) {
    std::vector<ClassRecord> prefix;
    for (const auto& r : all) {
      if (r.spectral.trace < nu) prefix.push_back(r);
    }
    for (std::int64_t m : {2, 3, 5, 8}) {
      const DensityReport rep = density_from_records(prefix, nu, m);
      for (std::int64_t k = 0; k < m; ++k) {
        CHECK(rep.counts[static_cast<std::size_t>(k)] ==
              rep.counts[static_cast<std::size_t>(residue(-k, m))]);
      }
    }
  }
}

TEST_CASE("cauchy masses") {
  CHECK(cauchy_mass(-kInf, kInf) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cauchy_cdf(0.0) == 0.5);
  double prev = 0.0;
  for (double t = 0.1; t < 50.0; t *= 1.7) {
    const double mass = cauchy_mass(-t, t);
    CHECK(mass == doctest::Approx(2.0 * cauchy_mass(0.0, t)));
    CHECK(mass > prev);
    prev = mass;
  }
  CHECK(cauchy_mass(-1.0, 2.0) == doctest::Approx(cauchy_cdf(2.0) - cauchy_cdf(-1.0)));
}

TEST_CASE("bin_index convention") {
  const std::vector<double> edges{-kInf, -1.0, 0.0, 1.0, kInf};
  CHECK(bin_index(edges, -5.0) == 0);
  CHECK(bin_index(edges, -1.0) == 1);
  CHECK(bin_index(edges, -0.5) == 1);
  CHECK(bin_index(edges, 0.0) == 2);
  CHECK(bin_index(edges, 1.0) == 3);
  const std::vector<double> closed{0.0, 1.0, 2.0};
  CHECK(bin_index(closed, 2.0) == 1);
}

TEST_CASE("ks_distance") {
  CHECK(ks_distance({0.0}) == doctest::Approx(0.5));
  CHECK(ks_distance({0.0, 0.0, 0.0}) == doctest::Approx(0.5));
  // symmetric pair at the quartiles: F(x) = 1/4, 3/4
  const double q1 = -3.0 / M_PI;
  CHECK(ks_distance({q1, -q1}) == doctest::Approx(0.25));
  CHECK_THROWS_AS(ks_distance({}), Error);
}

TEST_CASE("cauchy_cdf_compare with a single sample") {
  const double shortest = 2.0 * std::log((3.0 + std::sqrt(5.0)) / 2.0);
  const std::vector<double> edges{-1.0, 0.0, 1.0};
  const CauchyReport rep = cauchy_cdf_compare(shortest + 1e-9, edges);
  CHECK(rep.sample_count == 1);
  CHECK(rep.ks_distance == doctest::Approx(0.5));
  REQUIRE(rep.bins.size() == 4);
  CHECK(rep.bins[2].lo == 0.0);
  CHECK(rep.bins[2].empirical == 1.0);
  try {
    cauchy_cdf_compare(shortest - 1e-9, edges);
    FAIL("expected EmptySample");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptySample);
  }
}

TEST_CASE("cauchy report shape") {
  const std::vector<double> edges{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  const CauchyReport rep = cauchy_cdf_compare(9.0, edges);
  REQUIRE(rep.bins.size() == edges.size() + 1);
  CHECK(rep.bins.front().lo == -kInf);
  CHECK(rep.bins.back().hi == kInf);
  double emp = 0.0, theo = 0.0, prev_cum = 0.0;
  for (const CauchyBin& b : rep.bins) {
    emp += b.empirical;
    theo += b.theoretical;
    CHECK(emp >= prev_cum);  // empirical CDF nondecreasing
    prev_cum = emp;
  }
  CHECK(emp == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(theo - 1.0) < 1e-12);
  CHECK(rep.ks_distance >= 0.0);
  CHECK(rep.ks_distance <= 1.0);

  const std::vector<double> bad{0.0, 0.0};
  CHECK_THROWS_AS(cauchy_cdf_compare(9.0, bad), Error);
}

TEST_CASE("convergence_trend") {
  const std::vector<std::int64_t> one{50};
  const auto single = convergence_trend(one, 2);
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == 50);
  CHECK(single[0].second == doctest::Approx(density_mod_m(50, 2).max_deviation));

  const std::vector<std::int64_t> list{50, 100, 200};
  const auto trend = convergence_trend(list, 2);
  REQUIRE(trend.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(trend[i].first == list[i]);
    CHECK(trend[i].second >= 0.0);
    CHECK(trend[i].second <= 1.0);
    CHECK(trend[i].second == doctest::Approx(density_mod_m(list[i], 2).max_deviation));
  }
  const std::vector<std::int64_t> unsorted{100, 50};
  CHECK_THROWS_AS(convergence_trend(unsorted, 2), Error);
}
