#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <numeric>

#include "cli.hpp"
#include "modknot/enumeration.hpp"
#include "modknot/error.hpp"
#include "modknot/statistics.hpp"
#include "modknot/symbols.hpp"
#include "modknot/winding.hpp"

namespace modknot::cli {

namespace {

constexpr std::int64_t kPhiOracleTraceCap = 20;
constexpr std::int64_t kWindingTraceCap = 30;

std::string serialize(const std::vector<ClassRecord>& rs) {
  std::string s;
  for (const ClassRecord& r : rs) {
    s += r.necklace.str();
    s += ' ';
    s += r.rep.to_string();
    s += '\n';
  }
  return s;
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    return {std::move(name), true, std::move(detail)};
  } catch (const std::exception& e) {
    return {std::move(name), false, e.what()};
  }
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

}  // namespace

std::vector<CheckResult> run_verification(const RunConfig& cfg) {
  const std::int64_t nu = *cfg.trace_bound;
  EnumerationParams p;
  p.trace_bound = nu;
  p.worker_count = cfg.worker_count;
  std::vector<ClassRecord> records;
  std::vector<CheckResult> out;

  out.push_back(check("enumerate", [&] {
    records = enumerate_classes(p);
    return std::to_string(records.size()) + " classes";
  }));

  out.push_back(check("record-invariants", [&] {
    for (const ClassRecord& r : records) validate_record(r);
    return std::string();
  }));

  out.push_back(check("oracle-equivalence", [&] {
    const std::int64_t top = std::min(nu, cfg.oracle_guard);
    for (std::int64_t b = 4; b <= top; ++b) {
      EnumerationParams q;
      q.trace_bound = b;
      require(serialize(enumerate_classes(q)) == serialize(brute_force_classes(b, cfg.oracle_guard)),
              "mismatch at bound " + std::to_string(b));
    }
    return "bounds 4.." + std::to_string(top);
  }));

  out.push_back(check("worker-determinism", [&] {
    const std::string ref = serialize(records);
    for (int w : {1, 4}) {
      EnumerationParams q = p;
      q.worker_count = w;
      require(serialize(enumerate_classes(q)) == ref, "output differs with " + std::to_string(w) + " workers");
    }
    return std::string();
  }));

  out.push_back(check("psi-word-identity", [&] {
    for (const ClassRecord& r : records) {
      const SymbolRecord s = symbols_of(r.rep, r.necklace);
      require(s.psi == s.psi_word, "psi != #R - #L for " + r.necklace.str());
    }
    return std::string();
  }));

  out.push_back(check("psi-sign-and-conjugacy", [&] {
    const Mat2 conjugators[] = {Mat2::gen_L(), Mat2::gen_R().inverse(), Mat2(2, 1, 1, 1),
                                Mat2(0, -1, 1, 0), Mat2(1, -3, 0, 1)};
    for (const ClassRecord& r : records) {
      const std::int64_t v = psi(r.rep);
      require(psi(-r.rep) == v, "Psi(-M) != Psi(M) for " + r.necklace.str());
      for (const Mat2& c : conjugators) {
        require(psi(conjugate(r.rep, c)) == v, "Psi not conjugacy invariant for " + r.necklace.str());
      }
    }
    return std::string();
  }));

  out.push_back(check("mirror-symmetry", [&] {
    std::map<std::string, std::int64_t> by_word;
    for (const ClassRecord& r : records) by_word[r.necklace.str()] = psi(r.rep);
    for (const auto& [w, v] : by_word) {
      const auto it = by_word.find(canonical_necklace(LRWord(w)).mirror().str());
      require(it != by_word.end() && it->second == -v, "mirror of " + w + " missing or not negated");
    }
    if (!records.empty()) {
      for (std::int64_t m : {2, 3, 5, 7}) {
        const DensityReport d = density_from_records(records, nu, m);
        for (std::int64_t k = 0; k < m; ++k) {
          require(d.counts[static_cast<std::size_t>(k)] == d.counts[static_cast<std::size_t>(residue(-k, m))],
                  "residue counts not symmetric mod " + std::to_string(m));
        }
      }
    }
    return std::string();
  }));

  out.push_back(check("dedekind-reciprocity", [&] {
    int pairs = 0;
    for (long k = 1; k <= 40; ++k) {
      for (long h = 1; h <= 40; ++h) {
        if (std::gcd(h, k) != 1) continue;
        Rational rhs = Rational(-1, 4) + (Rational(h, k) + Rational(k, h) + Rational(1, h * k)) / 12;
        rhs.canonicalize();
        require(dedekind_sum(h, k) + dedekind_sum(k, h) == rhs,
                "reciprocity fails at (" + std::to_string(h) + "," + std::to_string(k) + ")");
        ++pairs;
      }
    }
    return std::to_string(pairs) + " pairs";
  }));

  out.push_back(check("phi-transformation-law", [&] {
    int n = 0;
    for (const ClassRecord& r : records) {
      if (r.spectral.trace >= kPhiOracleTraceCap) break;
      const PhiOracleResult o = phi_numeric_oracle(r.rep, {0.1, 2.0});
      require(o.phi == phi(r.rep), "numeric Phi differs for " + r.necklace.str());
      ++n;
    }
    return std::to_string(n) + " classes";
  }));

  out.push_back(check("winding-equals-psi", [&] {
    int n = 0;
    for (const ClassRecord& r : records) {
      if (r.spectral.trace >= kWindingTraceCap) break;
      const WindingResult w = winding_details(orbit_samples(r.rep, cfg.n_samples, cfg.n_terms));
      require(w.winding == psi(r.rep), "winding differs from Psi for " + r.necklace.str());
      ++n;
    }
    return std::to_string(n) + " classes";
  }));

  return out;
}

}  // namespace modknot::cli
