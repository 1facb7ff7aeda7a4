#include "modknot/symbols.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "modknot/error.hpp"

namespace modknot {

namespace {

std::int64_t to_int64(const Integer& x, const char* what) {
  if (!x.fits_slong_p()) {
    throw Error(Errc::IntegerOverflow, std::string(what) + " does not fit in 64 bits");
  }
  return x.get_si();
}

Integer floor_mod(const Integer& h, const Integer& k) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
  return r;
}

}  // namespace

int sgn(const Integer& x) { return ::sgn(x); }

Rational dedekind_sum(const Integer& h_in, const Integer& k_in) {
  if (k_in < 1) throw Error(Errc::InvalidArgument, "dedekind_sum needs k >= 1");
  // s(h, k) + s(k, h) = -1/4 + (h/k + k/h + 1/(hk)) / 12 for coprime h, k;
  // s depends only on h mod k. Iterate the Euclidean recursion with a sign.
  Integer g = gcd(h_in, k_in);
  Integer h = floor_mod(h_in / g, k_in / g);
  Integer k = k_in / g;
  Rational acc = 0;
  int sign = 1;
  while (h != 0 && k != 1) {
    Rational hk(h, k);
    hk.canonicalize();
    Rational kh(k, h);
    kh.canonicalize();
    Rational inv(Integer(1), h * k);
    inv.canonicalize();
    acc += sign * (Rational(-1, 4) + (hk + kh + inv) / 12);
    sign = -sign;
    Integer next_h = floor_mod(k, h);
    k = h;
    h = next_h;
  }
  return acc;
}

std::int64_t phi(const Mat2& m) {
  Rational value;
  if (m.c() == 0) {
    Rational v(m.b(), m.d());
    v.canonicalize();
    value = v;
  } else {
    Rational first(m.a() + m.d(), m.c());
    first.canonicalize();
    value = first - 12 * sgn(m.c()) * dedekind_sum(m.d(), abs(m.c()));
  }
  if (value.get_den() != 1) {
    throw Error(Errc::NonIntegerPhi, "Phi of " + m.to_string() + " = " + value.get_str());
  }
  return to_int64(value.get_num(), "Phi");
}

std::int64_t psi(const Mat2& m) {
  return phi(m) - 3 * ::sgn(Integer(m.c() * m.trace()));
}

std::int64_t psi_from_word(const LRNecklace& n) {
  return static_cast<std::int64_t>(n.word().count('R')) -
         static_cast<std::int64_t>(n.word().count('L'));
}

SymbolRecord symbols_of(const Mat2& rep, const LRNecklace& n) {
  SymbolRecord s;
  s.phi = phi(rep);
  s.psi = s.phi - 3 * ::sgn(Integer(rep.c() * rep.trace()));
  s.psi_word = psi_from_word(n);
  return s;
}

double delta_tail_bound(double im_z, int n_terms) {
  const double aq = std::exp(-2.0 * std::numbers::pi * im_z);
  const double head = std::pow(aq, n_terms + 1);
  return 24.0 * head / ((1.0 - aq) * (1.0 - head));
}

int delta_terms_for(double im_z, double eps) {
  if (!(im_z > 0.0)) throw Error(Errc::DomainError, "Im z must be positive");
  const double aq = std::exp(-2.0 * std::numbers::pi * im_z);
  // solve 24 aq^{N+1} / (1-aq)^2 <= eps, then confirm with the exact bound
  double guess = std::log(eps * (1.0 - aq) * (1.0 - aq) / 24.0) / std::log(aq) - 1.0;
  int n = std::max(1, static_cast<int>(std::ceil(guess)));
  while (delta_tail_bound(im_z, n) > eps) ++n;
  return n;
}

namespace {

void require_upper(Complex z) {
  if (!(z.imag() > 0.0)) throw Error(Errc::DomainError, "Im z must be positive");
}

}  // namespace

Complex delta_q(Complex z, int n_terms) {
  require_upper(z);
  const Complex q = std::exp(Complex(0.0, 2.0 * std::numbers::pi) * z);
  Complex prod = 1.0;
  Complex qn = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    qn *= q;
    const Complex f = 1.0 - qn;
    const Complex f2 = f * f;
    const Complex f4 = f2 * f2;
    const Complex f8 = f4 * f4;
    prod *= f8 * f8 * f8;
  }
  return q * prod;
}

Complex log_delta(Complex z, int n_terms) {
  require_upper(z);
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  const Complex q = std::exp(two_pi_i * z);
  Complex sum = 0.0;
  Complex qn = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    qn *= q;
    sum += std::log(1.0 - qn);
  }
  return two_pi_i * z + 24.0 * sum;
}

Complex log_branch(Complex w) {
  Complex l = std::log(w);
  if (l.imag() >= std::numbers::pi) l -= Complex(0.0, 2.0 * std::numbers::pi);
  return l;
}

Complex mobius(const Mat2& m, Complex z) {
  const double a = m.a().get_d(), b = m.b().get_d(), c = m.c().get_d(), d = m.d().get_d();
  return (a * z + b) / (c * z + d);
}

PhiOracleResult phi_numeric_oracle(const Mat2& m, Complex z, int n_terms) {
  require_upper(z);
  const Complex gz = mobius(m, z);
  require_upper(gz);
  constexpr double kTailTolerance = 1e-6;
  const double im_min = std::min(z.imag(), gz.imag());
  if (n_terms <= 0) {
    n_terms = delta_terms_for(im_min, 1e-12);
  } else if (delta_tail_bound(im_min, n_terms) > kTailTolerance) {
    throw Error(Errc::InsufficientTerms,
                std::to_string(n_terms) + " terms are too few at Im z = " + std::to_string(im_min));
  }

  Complex diff = log_delta(gz, n_terms) - log_delta(z, n_terms);
  if (m.c() != 0) {
    const Complex czd = m.c().get_d() * z + m.d().get_d();
    diff -= 6.0 * log_branch(-(czd * czd));
  }
  const Complex raw = diff / Complex(0.0, 2.0 * std::numbers::pi);
  const double nearest = std::round(raw.real());
  PhiOracleResult out;
  out.residual = std::abs(raw - Complex(nearest, 0.0));
  if (!(out.residual < 0.1)) {
    throw Error(Errc::BranchResidualTooLarge, "raw Phi of " + m.to_string() + " is (" +
                                                  std::to_string(raw.real()) + ", " +
                                                  std::to_string(raw.imag()) + ")");
  }
  out.phi = static_cast<std::int64_t>(nearest);
  return out;
}

}  // namespace modknot
