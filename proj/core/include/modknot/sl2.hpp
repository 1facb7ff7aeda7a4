#pragma once

// Exact SL(2,Z) algebra, L/R words and necklaces, spectral data.
//
// Generators: L = (1 0; 1 1), R = (1 1; 0 1). Every primitive hyperbolic
// conjugacy class of PSL(2,Z) is the class of exactly one aperiodic cyclic
// word over {L, R} containing both letters.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace modknot {

using Integer = mpz_class;

/// 2x2 integer matrix of determinant one with arbitrary-precision entries.
class Mat2 {
 public:
  /// Identity.
  Mat2() : a_(1), b_(0), c_(0), d_(1) {}

  /// Throws Error(NotSL2) unless ad - bc = 1.
  Mat2(Integer a, Integer b, Integer c, Integer d);

  static Mat2 identity() { return Mat2(); }
  static Mat2 gen_L();
  static Mat2 gen_R();

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Integer trace() const { return a_ + d_; }
  Mat2 inverse() const;
  Mat2 operator-() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) = default;

  std::string to_string() const;

 private:
  struct Unchecked {};
  Mat2(Unchecked, Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Integer a_, b_, c_, d_;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);

/// P * M * P^-1.
Mat2 conjugate(const Mat2& m, const Mat2& p);

/// Nonempty word over {'L', 'R'}.
class LRWord {
 public:
  /// Throws Error(InvalidWord) on an empty string or a foreign letter.
  explicit LRWord(std::string letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::size_t count(char letter) const;

  friend auto operator<=>(const LRWord&, const LRWord&) = default;

 private:
  std::string letters_;
};

/// Aperiodic cyclic word in least rotation (L < R), containing both letters.
class LRNecklace {
 public:
  const LRWord& word() const { return word_; }
  const std::string& str() const { return word_.str(); }
  std::size_t size() const { return word_.size(); }
  bool period_checked() const { return period_checked_; }

  /// L <-> R swap, re-canonicalized. The mirror class has negated symbol.
  LRNecklace mirror() const;

  friend auto operator<=>(const LRNecklace& x, const LRNecklace& y) {
    return x.word_ <=> y.word_;
  }
  friend bool operator==(const LRNecklace& x, const LRNecklace& y) {
    return x.word_ == y.word_;
  }

 private:
  friend LRNecklace canonical_necklace(const LRWord& w);
  friend LRNecklace necklace_from_lyndon(std::string letters);
  explicit LRNecklace(LRWord w) : word_(std::move(w)), period_checked_(true) {}

  LRWord word_;
  bool period_checked_;
};

/// Ordered product of generator matrices.
Mat2 word_to_matrix(const LRWord& w);
inline Mat2 word_to_matrix(const LRNecklace& n) { return word_to_matrix(n.word()); }

/// Index of the least rotation of s (Booth's algorithm).
std::size_t least_rotation(std::string_view s);

/// Smallest p dividing |s| such that s is the (|s|/p)-th power of its prefix
/// of length p.
std::size_t primitive_period(std::string_view s);

/// Throws Error(AllSameLetter) for L^n / R^n and Error(Periodic) for proper
/// powers.
LRNecklace canonical_necklace(const LRWord& w);

/// Wraps a word already known to be a Lyndon word of length >= 2. Used by the
/// enumerator; validated in debug builds only.
LRNecklace necklace_from_lyndon(std::string letters);

struct SpectralData {
  Integer trace;
  double xi = 0.0;      // larger eigenvalue of +-M, > 1
  double length = 0.0;  // 2 ln xi
};

/// Throws Error(NotHyperbolic) if |tr M| <= 2.
SpectralData spectral(const Mat2& m);

/// Larger eigenvalue (|t| + sqrt(t^2 - 4)) / 2 for |t| > 2.
double xi_from_trace(const Integer& trace);

}  // namespace modknot
