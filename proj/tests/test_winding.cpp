#include <doctest.h>

#include <cmath>
#include <random>

#include "modknot/enumeration.hpp"
#include "modknot/error.hpp"
#include "modknot/symbols.hpp"
#include "modknot/winding.hpp"

using namespace modknot;

namespace {

Mat2 word(const char* w) { return word_to_matrix(LRWord(w)); }

}  // namespace

TEST_CASE("axis_frame diagonalizes gamma") {
  for (const char* w : {"LR", "LRR", "LLR", "LLLLLLLRR", "LRLRRLLLRR"}) {
    const Mat2 g = word(w);
    const RealMat2 f = axis_frame(g);
    const RealMat2 diag = f.inverse() * to_real(g) * f;
    const double xi = spectral(g).xi;
    CAPTURE(w);
    CHECK(f.det() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.a > 0.0);
    CHECK(diag.a == doctest::Approx(xi).epsilon(1e-12));
    CHECK(diag.d == doctest::Approx(1.0 / xi).epsilon(1e-12));
    CHECK(std::fabs(diag.b) < 1e-12 * xi);
    CHECK(std::fabs(diag.c) < 1e-12 * xi);
  }
}

TEST_CASE("axis_frame eigenvectors of (2,1;1,1)") {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const RealMat2 f = axis_frame(Mat2(2, 1, 1, 1));
  CHECK(f.a / f.c == doctest::Approx(golden).epsilon(1e-14));
  CHECK(f.b / f.d == doctest::Approx(-1.0 / golden).epsilon(1e-14));
  // -gamma is the same element of PSL2
  const RealMat2 g = axis_frame(Mat2(-2, -1, -1, -1));
  CHECK(g.a == doctest::Approx(f.a));
  CHECK(g.d == doctest::Approx(f.d));
  CHECK_THROWS_AS(axis_frame(Mat2::gen_R()), Error);
}

TEST_CASE("orbit closes up after one period") {
  for (const char* w : {"LR", "LRR", "LLLLLLLLR", "LRLRRLLLRR"}) {
    const Mat2 g = word(w);
    const OrbitSampling o = orbit_samples(g, 16);
    CAPTURE(w);
    CHECK(o.period == doctest::Approx(spectral(g).length / 2.0));
    const TangentPoint moved = act(to_real(g), o.samples.front());
    CHECK(std::abs(moved.z - o.samples.back().z) < 1e-10);
    CHECK(std::abs(moved.v - o.samples.back().v) < 1e-10);
    for (const TangentPoint& p : o.samples) {
      CHECK(p.z.imag() > 0.0);
      CHECK(std::abs(p.v) == doctest::Approx(1.0));
    }
    for (std::size_t i = 1; i < o.phase.size(); ++i) {
      CHECK(std::fabs(std::remainder(o.phase[i] - o.phase[i - 1], 2.0 * M_PI)) < M_PI / 2.0);
    }
  }
}

TEST_CASE("F is invariant under SL2(Z)") {
  const TangentPoint p{{0.31, 0.7}, std::polar(1.0, 0.4)};
  const double base = invariant_phase(p, 20);
  for (const char* w : {"L", "R", "LRR", "RRLLR"}) {
    const TangentPoint q = act(to_real(word(w)), p);
    CHECK(std::fabs(std::remainder(invariant_phase(q, 20) - base, 2.0 * M_PI)) < 1e-9);
  }
  const TangentPoint r = reduce_to_fundamental_domain(TangentPoint{{3.7, 0.01}, {1.0, 0.0}});
  CHECK(std::fabs(r.z.real()) <= 0.5);
  CHECK(std::norm(r.z) >= 1.0 - 1e-12);
}

TEST_CASE("phase rate matches finite differences of the phase") {
  const Mat2 g = word("LLLLRLRRR");
  const RealMat2 f = axis_frame(g);
  const double h = 1e-6;
  for (double t : {0.0, 0.3, 0.9, 1.7}) {
    auto at = [&](double s) {
      return act(f, TangentPoint{{0.0, std::exp(2.0 * s)}, {0.0, 1.0}});
    };
    const double fd =
        std::remainder(invariant_phase(at(t + h), 20) - invariant_phase(at(t - h), 20), 2.0 * M_PI) /
        (2.0 * h);
    CAPTURE(t);
    CHECK(invariant_phase_rate(at(t), 20) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("winding_psi examples") {
  CHECK(winding_psi(word("LR")) == 0);
  CHECK(winding_psi(word("LRR")) == 1);
  CHECK(winding_psi(word("LLR")) == -1);
  CHECK(winding_psi(-word("LRR")) == 1);
}

TEST_CASE("winding equals psi below trace 30") {
  EnumerationParams p;
  p.trace_bound = 30;
  const auto rs = enumerate_classes(p);
  REQUIRE(rs.size() >= 20);
  for (const ClassRecord& r : rs) {
    const WindingResult w = winding_details(orbit_samples(r.rep, 8));
    CAPTURE(r.necklace.str());
    CHECK(w.winding == psi(r.rep));
    CHECK(w.residual < 0.1);
    CHECK(winding_psi(word_to_matrix(r.necklace.mirror()), 8) == -w.winding);
  }
}

TEST_CASE("winding is stable under doubling the sample count") {
  for (const char* w : {"LLLLLLLLLLLLLLLLLR", "LRLRRLLLRR", "LLRRRRRRRRR"}) {
    const std::int64_t ref = winding_psi(word(w), 8);
    for (std::size_t n = 16; n <= 1024; n *= 2) CHECK(winding_psi(word(w), n) == ref);
  }
}

TEST_CASE("winding is invariant under conjugation and frame normalization") {
  std::mt19937_64 rng(41);
  const Mat2 gens[] = {Mat2::gen_L(), Mat2::gen_R(), Mat2::gen_L().inverse(),
                       Mat2::gen_R().inverse()};
  for (const char* w : {"LRR", "LLRLR", "LLLRRRRR"}) {
    const Mat2 g = word(w);
    const std::int64_t ref = winding_psi(g);
    for (int k = 0; k < 10; ++k) {
      Mat2 p;
      for (int j = 0; j < 6; ++j) p = p * gens[rng() % 4];
      CHECK(winding_psi(conjugate(g, p)) == ref);
    }
    RealMat2 f = axis_frame(g);
    for (double s : {0.3, 2.5, -1.0}) {
      // scale the eigenvectors by s and 1/s: a different starting point
      const RealMat2 alt{f.a * s, f.b / s, f.c * s, f.d / s};
      CHECK(winding_details(orbit_samples(g, alt, 64)).winding == ref);
    }
  }
}

TEST_CASE("winding error paths") {
  CHECK_THROWS_AS(orbit_samples(word("LR"), 4), Error);
  CHECK_THROWS_AS(orbit_samples(Mat2::gen_R(), 64), Error);
  try {
    orbit_samples(word("LR"), 64, 1);
    FAIL("expected InsufficientTerms");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InsufficientTerms);
  }
  try {
    orbit_samples(word("LR"), kMaxOrbitSamples + 1);
    FAIL("expected RefinementOverflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RefinementOverflow);
  }
  OrbitSampling fake;
  fake.phase = {0.0, 1.5, 3.0};
  fake.n_samples = 3;
  try {
    winding_details(fake);
    FAIL("expected ResidualTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ResidualTooLarge);
  }
}
