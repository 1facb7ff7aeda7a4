#include "modknot/sl2.hpp"

#include <cassert>
#include <cmath>
#include <vector>

#include "modknot/error.hpp"

namespace modknot {

Mat2::Mat2(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) {
    throw Error(Errc::NotSL2, "determinant of " + to_string() + " is not 1");
  }
}

Mat2 Mat2::gen_L() { return Mat2(Unchecked{}, 1, 0, 1, 1); }
Mat2 Mat2::gen_R() { return Mat2(Unchecked{}, 1, 1, 0, 1); }

Mat2 Mat2::inverse() const { return Mat2(Unchecked{}, d_, -b_, -c_, a_); }

Mat2 Mat2::operator-() const { return Mat2(Unchecked{}, -a_, -b_, -c_, -d_); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  // det(xy) = det(x) det(y) = 1
  return Mat2(Mat2::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
              x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::string Mat2::to_string() const {
  return "(" + a_.get_str() + "," + b_.get_str() + ";" + c_.get_str() + "," + d_.get_str() + ")";
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) { return x * y; }

Mat2 conjugate(const Mat2& m, const Mat2& p) { return p * m * p.inverse(); }

LRWord::LRWord(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(Errc::InvalidWord, "empty word");
  for (char ch : letters_) {
    if (ch != 'L' && ch != 'R') {
      throw Error(Errc::InvalidWord, "letter '" + std::string(1, ch) + "' is not L or R");
    }
  }
}

std::size_t LRWord::count(char letter) const {
  std::size_t n = 0;
  for (char ch : letters_) n += (ch == letter);
  return n;
}

Mat2 word_to_matrix(const LRWord& w) {
  const Mat2 gl = Mat2::gen_L();
  const Mat2 gr = Mat2::gen_R();
  Mat2 acc;
  for (char ch : w.str()) acc = acc * (ch == 'L' ? gl : gr);
  return acc;
}

std::size_t least_rotation(std::string_view s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  // Booth: failure function over the doubled string.
  std::vector<long> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const char sj = s[j % n];
    long i = fail[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = fail[i];
    }
    if (i == -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

std::size_t primitive_period(std::string_view s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::size_t> border(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = border[k];
    if (s[i] == s[k]) ++k;
    border[i + 1] = k;
  }
  const std::size_t p = n - border[n];
  return n % p == 0 ? p : n;
}

LRNecklace canonical_necklace(const LRWord& w) {
  const std::string& s = w.str();
  const std::size_t n_l = w.count('L');
  if (n_l == 0 || n_l == s.size()) {
    throw Error(Errc::AllSameLetter, "word " + s + " is parabolic");
  }
  if (primitive_period(s) != s.size()) {
    throw Error(Errc::Periodic, "word " + s + " is a proper power");
  }
  const std::size_t k = least_rotation(s);
  return LRNecklace(LRWord(s.substr(k) + s.substr(0, k)));
}

LRNecklace necklace_from_lyndon(std::string letters) {
#ifndef NDEBUG
  assert(letters.size() >= 2);
  assert(least_rotation(letters) == 0 && primitive_period(letters) == letters.size());
#endif
  return LRNecklace(LRWord(std::move(letters)));
}

LRNecklace LRNecklace::mirror() const {
  std::string s = str();
  for (char& ch : s) ch = (ch == 'L') ? 'R' : 'L';
  return canonical_necklace(LRWord(std::move(s)));
}

double xi_from_trace(const Integer& trace) {
  const double t = std::fabs(trace.get_d());
  return 0.5 * (t + std::sqrt((t - 2.0) * (t + 2.0)));
}

SpectralData spectral(const Mat2& m) {
  Integer t = m.trace();
  if (abs(t) <= 2) {
    throw Error(Errc::NotHyperbolic, m.to_string() + " has |trace| <= 2");
  }
  SpectralData out;
  out.xi = xi_from_trace(t);
  out.length = 2.0 * std::log(out.xi);
  out.trace = std::move(t);
  return out;
}

}  // namespace modknot
