#pragma once

// Dedekind symbol Phi and Rademacher symbol Psi on SL(2,Z).
//
// Three independent routes to Psi are provided: the Dedekind-sum closed form
// (psi), the letter count of the L/R necklace (psi_from_word), and the
// transformation law of log Delta evaluated numerically (phi_numeric_oracle).
// A fourth, geometric route lives in winding.hpp.

#include <gmpxx.h>

#include <complex>
#include <cstdint>

#include "modknot/sl2.hpp"

namespace modknot {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// s(h, k) = sum_{i=1}^{k-1} ((i/k)) ((h i / k)), via the reciprocity recursion.
/// Requires k >= 1.
Rational dedekind_sum(const Integer& h, const Integer& k);

/// Sign with sgn(0) = 0.
int sgn(const Integer& x);

/// Rademacher's closed form: b/d if c = 0, else (a+d)/c - 12 sgn(c) s(d, |c|).
/// Throws Error(NonIntegerPhi) if the value is not an integer.
std::int64_t phi(const Mat2& m);

/// phi(m) - 3 sgn(c (a + d)).
std::int64_t psi(const Mat2& m);

/// #R - #L.
std::int64_t psi_from_word(const LRNecklace& n);

struct SymbolRecord {
  std::int64_t phi = 0;
  std::int64_t psi = 0;
  std::int64_t psi_word = 0;
};

SymbolRecord symbols_of(const Mat2& rep, const LRNecklace& n);

/// Upper bound on |log of the discarded tail prod_{n > n_terms} (1 - q^n)^24|
/// for Im z = im_z:  24 |q|^{N+1} / ((1 - |q|)(1 - |q|^{N+1})).
double delta_tail_bound(double im_z, int n_terms);

/// Smallest term count with delta_tail_bound <= eps.
int delta_terms_for(double im_z, double eps);

/// q prod_{n <= n_terms} (1 - q^n)^24, q = exp(2 pi i z). Throws
/// Error(DomainError) if Im z <= 0.
Complex delta_q(Complex z, int n_terms);

/// Holomorphic branch 2 pi i z + 24 sum_{n <= n_terms} Log(1 - q^n) of log Delta.
Complex log_delta(Complex z, int n_terms);

/// Log with imaginary part in [-pi, pi).
Complex log_branch(Complex w);

struct PhiOracleResult {
  std::int64_t phi = 0;
  double residual = 0.0;  // distance of the raw value to the nearest integer
};

/// Phi from the transformation law of log Delta at the point z. n_terms <= 0
/// picks the term count automatically from Im z and Im(gamma z). Throws
/// Error(InsufficientTerms) if the tail bound at either point exceeds 1e-6, and
/// Error(BranchResidualTooLarge) if the raw value is 0.1 or more away from an
/// integer.
PhiOracleResult phi_numeric_oracle(const Mat2& m, Complex z, int n_terms = 0);

/// Moebius action on the upper half-plane.
Complex mobius(const Mat2& m, Complex z);

}  // namespace modknot
