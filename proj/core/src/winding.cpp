#include "modknot/winding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "modknot/error.hpp"
#include "modknot/symbols.hpp"

namespace modknot {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x) {
  x = std::remainder(x, 2.0 * kPi);
  return x <= -kPi ? x + 2.0 * kPi : x;
}

Mat2 positive_trace(const Mat2& gamma) {
  if (abs(gamma.trace()) <= 2) {
    throw Error(Errc::NotHyperbolic, gamma.to_string() + " has |trace| <= 2");
  }
  return gamma.trace() > 0 ? gamma : -gamma;
}

// Eigenvector for eigenvalue lambda, picking the better conditioned of the two
// standard forms.
std::pair<double, double> eigenvector(const RealMat2& g, double lambda) {
  const std::pair<double, double> v1{g.b, lambda - g.a};
  const std::pair<double, double> v2{lambda - g.d, g.c};
  const double n1 = std::hypot(v1.first, v1.second);
  const double n2 = std::hypot(v2.first, v2.second);
  return n1 >= n2 ? v1 : v2;
}

}  // namespace

RealMat2 to_real(const Mat2& m) { return {m.a().get_d(), m.b().get_d(), m.c().get_d(), m.d().get_d()}; }

RealMat2 axis_frame(const Mat2& gamma) {
  const Mat2 g = positive_trace(gamma);
  const RealMat2 r = to_real(g);
  const double xi = xi_from_trace(g.trace());
  auto [u0, u1] = eigenvector(r, xi);
  auto [w0, w1] = eigenvector(r, 1.0 / xi);
  if (u0 < 0.0) u0 = -u0, u1 = -u1;
  double det = u0 * w1 - w0 * u1;
  if (det < 0.0) {
    w0 = -w0, w1 = -w1;
    det = -det;
  }
  const double s = 1.0 / std::sqrt(det);
  return {u0 * s, w0 * s, u1 * s, w1 * s};
}

TangentPoint act(const RealMat2& g, const TangentPoint& p) {
  const std::complex<double> czd = g.c * p.z + g.d;
  TangentPoint out{(g.a * p.z + g.b) / czd, p.v / (czd * czd)};
  out.v /= std::abs(out.v);
  return out;
}

TangentPoint reduce_to_fundamental_domain(const TangentPoint& p) {
  TangentPoint q = p;
  for (int iter = 0; iter < 100000; ++iter) {
    const double shift = std::round(q.z.real());
    q.z -= shift;
    if (std::norm(q.z) >= 1.0) return q;
    // S = (0 -1; 1 0): z -> -1/z, cz + d = z
    q.v /= q.z * q.z;
    q.v /= std::abs(q.v);
    q.z = -1.0 / q.z;
  }
  throw Error(Errc::DomainError, "fundamental domain reduction did not terminate");
}

double invariant_phase(const TangentPoint& p, int n_terms) {
  const TangentPoint r = reduce_to_fundamental_domain(p);
  return wrap(log_delta(r.z, n_terms).imag() + 6.0 * std::arg(r.v));
}

std::complex<double> eisenstein_e2(std::complex<double> z, int n_terms) {
  const std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) * z);
  std::complex<double> sum = 0.0;
  std::complex<double> qn = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    qn *= q;
    sum += static_cast<double>(n) * qn / (1.0 - qn);
  }
  return 1.0 - 24.0 * sum;
}

double invariant_phase_rate(const TangentPoint& p, int n_terms) {
  const TangentPoint r = reduce_to_fundamental_domain(p);
  const double y = r.z.imag();
  return 4.0 * kPi * y * (eisenstein_e2(r.z, n_terms) * r.v).real() - 12.0 * r.v.real();
}

OrbitSampling orbit_samples(const Mat2& gamma, std::size_t n, int n_terms) {
  return orbit_samples(gamma, axis_frame(gamma), n, n_terms);
}

OrbitSampling orbit_samples(const Mat2& gamma, const RealMat2& frame, std::size_t n,
                            int n_terms) {
  if (n < 8) throw Error(Errc::InvalidArgument, "need at least 8 samples");
  if (n > kMaxOrbitSamples) throw Error(Errc::RefinementOverflow, "initial sample count above cap");
  // Points of the fundamental domain have Im z >= sqrt(3)/2.
  const double im_floor = std::sqrt(3.0) / 2.0;
  if (n_terms <= 0) {
    n_terms = delta_terms_for(im_floor, 1e-12);
  } else if (delta_tail_bound(im_floor, n_terms) > 1e-6) {
    throw Error(Errc::InsufficientTerms, std::to_string(n_terms) + " terms are too few");
  }

  OrbitSampling out;
  out.gamma = positive_trace(gamma);
  out.frame = frame;
  out.period = std::log(xi_from_trace(out.gamma.trace()));

  // g_t i = frame (e^{2t} i); d/dt (e^{2t} i) points along i.
  auto point_at = [&](double t) {
    return act(frame, TangentPoint{{0.0, std::exp(2.0 * t)}, {0.0, 1.0}});
  };

  struct Sample {
    double t;
    TangentPoint p;
    double phase;
    double rate;
  };
  auto make = [&](double t) {
    const TangentPoint p = point_at(t);
    return Sample{t, p, invariant_phase(p, n_terms), invariant_phase_rate(p, n_terms)};
  };
  auto resolved = [](const Sample& left, const Sample& right) {
    const double step = right.t - left.t;
    return std::fabs(wrap(right.phase - left.phase)) < kPi / 2.0 &&
           step * std::max(std::fabs(left.rate), std::fabs(right.rate)) < kPi / 2.0;
  };

  std::vector<Sample> coarse;
  coarse.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    coarse.push_back(make(out.period * static_cast<double>(i) / static_cast<double>(n)));
  }

  std::vector<Sample> fine;
  fine.reserve(2 * n + 1);
  fine.push_back(coarse.front());
  std::vector<Sample> stack;
  for (std::size_t i = 1; i < coarse.size(); ++i) {
    stack.push_back(coarse[i]);
    while (!stack.empty()) {
      const Sample& left = fine.back();
      const Sample& right = stack.back();
      if (resolved(left, right)) {
        fine.push_back(right);
        stack.pop_back();
        continue;
      }
      if (fine.size() + stack.size() >= kMaxOrbitSamples) {
        throw Error(Errc::RefinementOverflow,
                    "orbit of " + gamma.to_string() + " needs more than the sample cap");
      }
      stack.push_back(make(0.5 * (left.t + right.t)));
    }
  }

  out.n_samples = fine.size();
  out.t.reserve(fine.size());
  out.samples.reserve(fine.size());
  out.phase.reserve(fine.size());
  out.rate.reserve(fine.size());
  for (const Sample& s : fine) {
    out.t.push_back(s.t);
    out.samples.push_back(s.p);
    out.phase.push_back(s.phase);
    out.rate.push_back(s.rate);
  }
  return out;
}

WindingResult winding_details(const OrbitSampling& orbit) {
  double total = 0.0;
  for (std::size_t i = 1; i < orbit.phase.size(); ++i) {
    total += wrap(orbit.phase[i] - orbit.phase[i - 1]);
  }
  const double turns = total / (2.0 * kPi);
  WindingResult out;
  out.winding = static_cast<std::int64_t>(std::llround(turns));
  out.residual = std::fabs(turns - static_cast<double>(out.winding));
  out.samples = orbit.n_samples;
  if (!(out.residual < 0.1)) {
    throw Error(Errc::ResidualTooLarge, "winding of " + orbit.gamma.to_string() + " is " +
                                            std::to_string(turns) + " turns");
  }
  return out;
}

std::int64_t winding_psi(const Mat2& gamma, std::size_t n, int n_terms) {
  return winding_details(orbit_samples(gamma, n, n_terms)).winding;
}

}  // namespace modknot
