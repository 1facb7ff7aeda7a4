#include "modknot/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <set>
#include <string>
#include <thread>

#include "modknot/error.hpp"

namespace modknot {

bool record_less(const ClassRecord& x, const ClassRecord& y) {
  const int c = cmp(x.spectral.trace, y.spectral.trace);
  if (c != 0) return c < 0;
  return x.necklace < y.necklace;
}

void validate_record(const ClassRecord& r) {
  const std::string& s = r.necklace.str();
  if (!r.necklace.period_checked() || primitive_period(s) != s.size()) {
    throw Error(Errc::Periodic, "record necklace " + s + " is periodic");
  }
  if (least_rotation(s) != 0) {
    throw Error(Errc::InvalidWord, "record necklace " + s + " is not in least rotation");
  }
  if (!(word_to_matrix(r.necklace) == r.rep)) {
    throw Error(Errc::InvalidArgument, "record rep " + r.rep.to_string() + " != product of " + s);
  }
  if (abs(r.rep.trace()) <= 2 || r.spectral.trace != r.rep.trace()) {
    throw Error(Errc::NotHyperbolic, "record " + s + " has inconsistent trace");
  }
  const SpectralData sd = spectral(r.rep);
  if (sd.xi != r.spectral.xi || sd.length != r.spectral.length) {
    throw Error(Errc::InvalidArgument, "record " + s + " has stale spectral data");
  }
}

ClassRecord make_record(LRNecklace necklace) {
  Mat2 rep = word_to_matrix(necklace);
  SpectralData sd = spectral(rep);
  return ClassRecord{std::move(necklace), std::move(rep), std::move(sd)};
}

namespace {

// Entries of a nonnegative SL2 matrix with trace t are at most t^2 / 4, so a
// bound of 2^30 keeps every partial product and its one-letter extensions
// inside int64.
constexpr std::int64_t kMaxFastBound = std::int64_t{1} << 30;

struct Node {
  std::string word;
  std::size_t period;  // period of the prenecklace
  std::int64_t a, b, c, d;
};

// Depth-first search over prenecklaces (prefixes of Lyndon words) starting
// with L. Appending a letter never decreases any entry of a nonnegative
// matrix, so once the trace reaches the bound the whole subtree is dead.
class Searcher {
 public:
  Searcher(const EnumerationParams& p, std::size_t stop_depth, std::vector<Node>* frontier)
      : bound_(p.trace_bound),
        max_len_(static_cast<std::size_t>(p.trace_bound - 2)),
        prune_(p.prune_by_trace),
        stop_depth_(stop_depth),
        frontier_(frontier) {}

  void run(Node& n) {
    if (frontier_ != nullptr && n.word.size() == stop_depth_) {
      frontier_->push_back(n);
      return;
    }
    if (n.word.size() >= max_len_) return;
    extend(n, 'L');
    extend(n, 'R');
  }

  std::vector<ClassRecord> take() { return std::move(out_); }

 private:
  void extend(Node& n, char letter) {
    const std::size_t len = n.word.size();
    const char ref = n.word[len - n.period];
    if (letter < ref) return;
    const std::size_t saved_period = n.period;
    const std::int64_t sa = n.a, sb = n.b, sc = n.c, sd = n.d;
    if (letter == 'L') {
      n.a += n.b;
      n.c += n.d;
    } else {
      n.b += n.a;
      n.d += n.c;
    }
    const std::int64_t tr = n.a + n.d;
    if (!prune_ || tr < bound_) {
      if (letter > ref) n.period = len + 1;
      n.word.push_back(letter);
      if (n.period == n.word.size() && tr < bound_) emit(n);
      run(n);
      n.word.pop_back();
    }
    n.period = saved_period;
    n.a = sa, n.b = sb, n.c = sc, n.d = sd;
  }

  void emit(const Node& n) {
    Mat2 rep(Integer(static_cast<long>(n.a)), Integer(static_cast<long>(n.b)),
             Integer(static_cast<long>(n.c)), Integer(static_cast<long>(n.d)));
    SpectralData sd = spectral(rep);
    out_.push_back(ClassRecord{necklace_from_lyndon(n.word), std::move(rep), std::move(sd)});
  }

  std::int64_t bound_;
  std::size_t max_len_;
  bool prune_;
  std::size_t stop_depth_;
  std::vector<Node>* frontier_;
  std::vector<ClassRecord> out_;
};

}  // namespace

std::vector<ClassRecord> enumerate_classes(const EnumerationParams& p) {
  if (p.trace_bound < 3) {
    throw Error(Errc::InvalidArgument, "trace bound must be >= 3");
  }
  if (p.worker_count < 1) {
    throw Error(Errc::InvalidArgument, "worker count must be positive");
  }
  if (p.trace_bound > kMaxFastBound) {
    throw Error(Errc::IntegerOverflow, "trace bound above 2^30 is not supported");
  }
  if (p.trace_bound <= 3) {
    std::clog << "modknot: no hyperbolic classes with trace < " << p.trace_bound << '\n';
    return {};
  }

  const std::size_t split = static_cast<std::size_t>(std::max(1, p.split_depth));
  std::vector<Node> frontier;
  Searcher head(p, split, &frontier);
  Node root{"L", 1, 1, 0, 1, 1};
  head.run(root);
  std::vector<ClassRecord> out = head.take();

  const int workers = std::min<int>(p.worker_count, static_cast<int>(frontier.size()));
  if (workers <= 1) {
    Searcher tail(p, 0, nullptr);
    for (Node& n : frontier) tail.run(n);
    auto part = tail.take();
    std::move(part.begin(), part.end(), std::back_inserter(out));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<ClassRecord>> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(parts.size());
    for (std::size_t w = 0; w < parts.size(); ++w) {
      pool.emplace_back([&, w] {
        Searcher tail(p, 0, nullptr);
        for (std::size_t i = next++; i < frontier.size(); i = next++) tail.run(frontier[i]);
        parts[w] = tail.take();
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  }

  std::sort(out.begin(), out.end(), record_less);
  return out;
}

std::vector<ClassRecord> brute_force_classes(std::int64_t trace_bound, std::int64_t guard) {
  if (trace_bound > guard) {
    throw Error(Errc::OracleBoundExceeded, "oracle bound " + std::to_string(trace_bound) +
                                               " exceeds guard " + std::to_string(guard));
  }
  std::set<std::string> seen;
  // trace >= length + 1 for hyperbolic words
  for (std::int64_t len = 2; len <= trace_bound - 2; ++len) {
    const std::uint64_t count = std::uint64_t{1} << len;
    std::string w(static_cast<std::size_t>(len), 'L');
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      for (std::int64_t i = 0; i < len; ++i) w[i] = ((bits >> i) & 1U) ? 'R' : 'L';
      try {
        seen.insert(canonical_necklace(LRWord(w)).str());
      } catch (const Error& e) {
        if (e.code() != Errc::AllSameLetter && e.code() != Errc::Periodic) throw;
      }
    }
  }
  std::vector<ClassRecord> out;
  for (const std::string& s : seen) {
    ClassRecord r = make_record(canonical_necklace(LRWord(s)));
    if (r.spectral.trace < trace_bound) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

std::int64_t trace_bound_for_length(double length_bound) {
  if (!(length_bound > 0.0)) return 3;
  // l < L  <=>  t < e^{L/2} + e^{-L/2}
  const double t_max = 2.0 * std::cosh(0.5 * length_bound);
  if (t_max >= static_cast<double>(kMaxFastBound)) {
    throw Error(Errc::IntegerOverflow, "length bound too large");
  }
  return std::max<std::int64_t>(3, static_cast<std::int64_t>(std::floor(t_max)) + 1);
}

std::vector<ClassRecord> classes_by_length(double length_bound, int worker_count) {
  EnumerationParams p;
  p.trace_bound = trace_bound_for_length(length_bound);
  p.worker_count = worker_count;
  std::vector<ClassRecord> all = enumerate_classes(p);
  std::erase_if(all, [&](const ClassRecord& r) { return !(r.spectral.length < length_bound); });
  // length is increasing in trace, so record_less already orders by length
  return all;
}

namespace {

class ConjugatorSearch {
 public:
  ConjugatorSearch(const Mat2& m1, const Mat2& m2, int depth)
      : m1_(m1), m2_(m2), neg_m2_(-m2), depth_(depth) {
    gens_[0] = Mat2::gen_L();
    gens_[1] = Mat2::gen_R();
    gens_[2] = gens_[0].inverse();
    gens_[3] = gens_[1].inverse();
  }

  bool run() { return visit(Mat2::identity(), -1, 0); }

 private:
  bool visit(const Mat2& p, int last, int len) {
    const Mat2 img = conjugate(m1_, p);
    if (img == m2_ || img == neg_m2_) return true;
    if (len == depth_) return false;
    for (int g = 0; g < 4; ++g) {
      if (last >= 0 && (g ^ 2) == last) continue;  // skip x x^-1
      if (visit(p * gens_[g], g, len + 1)) return true;
    }
    return false;
  }

  const Mat2& m1_;
  const Mat2& m2_;
  Mat2 neg_m2_;
  int depth_;
  Mat2 gens_[4];
};

}  // namespace

bool are_conjugate_oracle(const Mat2& m1, const Mat2& m2, int depth) {
  if (abs(m1.trace()) != abs(m2.trace())) return false;
  return ConjugatorSearch(m1, m2, depth).run();
}

}  // namespace modknot
