#pragma once

// Rademacher symbol as a winding number.
//
// F(z, v) = Delta(z) v^6 is invariant under SL(2,Z) acting on the unit tangent
// bundle (z -> g z, v -> v / (cz + d)^2) and never vanishes, so its argument
// winds an integer number of times along a closed geodesic. That integer is the
// linking number of the modular knot with the trefoil, i.e. Psi(gamma).

#include <complex>
#include <cstdint>
#include <vector>

#include "modknot/sl2.hpp"

namespace modknot {

/// Real 2x2 matrix of determinant one.
struct RealMat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  double det() const { return a * d - b * c; }
  RealMat2 inverse() const { return {d, -b, -c, a}; }
  friend RealMat2 operator*(const RealMat2& x, const RealMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
};

RealMat2 to_real(const Mat2& m);

/// Columns are eigenvectors of +-gamma (sign chosen so the trace is positive)
/// for xi and 1/xi, first entry of the first column positive, determinant 1.
/// Throws Error(NotHyperbolic).
RealMat2 axis_frame(const Mat2& gamma);

struct TangentPoint {
  std::complex<double> z;  // Im z > 0
  std::complex<double> v;  // |v| = 1
};

/// (z, v) -> (g z, v / (cz + d)^2), renormalized.
TangentPoint act(const RealMat2& g, const TangentPoint& p);

/// Reduces to |Re z| <= 1/2, |z| >= 1 carrying v along.
TangentPoint reduce_to_fundamental_domain(const TangentPoint& p);

/// arg F(z, v) in (-pi, pi], evaluated at the reduced point.
double invariant_phase(const TangentPoint& p, int n_terms);

/// E2(z) = 1 - 24 sum n q^n / (1 - q^n); (log Delta)' = 2 pi i E2.
std::complex<double> eisenstein_e2(std::complex<double> z, int n_terms);

/// d/dt arg F along the geodesic through p moving at hyperbolic speed 2 in
/// direction v: 4 pi y Re(E2(z) v) - 12 Re(v), at the reduced point.
double invariant_phase_rate(const TangentPoint& p, int n_terms);

inline constexpr std::size_t kMaxOrbitSamples = 10'000'000;

struct OrbitSampling {
  Mat2 gamma;
  RealMat2 frame;
  double period = 0.0;  // ln xi: g_t = frame * diag(e^t, e^-t) closes up at t = period
  std::size_t n_samples = 0;
  std::vector<double> t;
  std::vector<TangentPoint> samples;
  std::vector<double> phase;  // invariant_phase at each sample
  std::vector<double> rate;   // invariant_phase_rate at each sample
};

/// Samples one primitive period of the geodesic of gamma, starting from n
/// uniform points and bisecting until consecutive phases of F differ by less
/// than pi/2 and the step times the larger endpoint phase rate is below pi/2.
/// The rate condition catches whole turns skipped high in the cusp, where the
/// wrapped difference alone aliases. n_terms <= 0 selects the term count automatically. Throws
/// Error(RefinementOverflow) past kMaxOrbitSamples and Error(InsufficientTerms)
/// if n_terms cannot reach 1e-6 accuracy in the fundamental domain.
OrbitSampling orbit_samples(const Mat2& gamma, std::size_t n, int n_terms = 0);
OrbitSampling orbit_samples(const Mat2& gamma, const RealMat2& frame, std::size_t n,
                            int n_terms = 0);

struct WindingResult {
  std::int64_t winding = 0;
  double residual = 0.0;  // |total / 2pi - winding|
  std::size_t samples = 0;
};

/// Throws Error(ResidualTooLarge) if the total argument change is 0.1 or more
/// away from a multiple of 2 pi.
WindingResult winding_details(const OrbitSampling& orbit);

std::int64_t winding_psi(const Mat2& gamma, std::size_t n = 64, int n_terms = 0);

}  // namespace modknot
