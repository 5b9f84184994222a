#include "shiftarg/verify.hpp"

#include <sstream>

namespace shiftarg {

namespace {

std::string clip(const std::string& s, size_t limit = 160) {
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + "...";
}

std::string box_name(int m, int k) {
  std::ostringstream os;
  os << "(" << m << "," << k << ")";
  return os.str();
}

}  // namespace

std::string fnv1a_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[size_t(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string matrix_digest(const QMatrix& m) { return fnv1a_digest(m.str()); }

int Rng::uniform(int lo, int hi) {
  return int(std::uniform_int_distribution<long>(lo, hi)(eng_));
}

Rational Rng::small_rational() {
  int num = uniform(-9, 9);
  int den = uniform(1, 4);
  return Rational(num, den);
}

QMatrix Rng::matrix(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = small_rational();
  return m;
}

VerificationReport commutativity_suite(const GeneratorTable& t) {
  VerificationReport r;
  r.suite = "commutativity";
  r.n = t.n;
  r.mu_digest = matrix_digest(t.mu);

  std::vector<std::pair<TableKey, const UElement*>> gens;
  for (const auto& [key, u] : t.entries)
    if (key.second < key.first) gens.push_back({key, &u});

  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      ++r.cases;
      UElement c = commutator(*gens[i].second, *gens[j].second);
      if (!c.is_zero())
        r.failures.push_back("[" + box_name(gens[i].first.first, gens[i].first.second) + ", " +
                             box_name(gens[j].first.first, gens[j].first.second) +
                             "] = " + clip(c.str()));
    }
  }
  return r;
}

VerificationReport poisson_suite(const GeneratorTable& t) {
  VerificationReport r;
  r.suite = "poisson";
  r.n = t.n;
  r.mu_digest = matrix_digest(t.mu);

  std::vector<std::pair<TableKey, const CPoly*>> gens;
  for (const auto& [key, p] : t.symbols)
    if (key.second < key.first) gens.push_back({key, &p});

  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      ++r.cases;
      CPoly b = poisson(*gens[i].second, *gens[j].second);
      if (!b.is_zero())
        r.failures.push_back("{" + box_name(gens[i].first.first, gens[i].first.second) + ", " +
                             box_name(gens[j].first.first, gens[j].first.second) +
                             "} = " + clip(b.str()));
    }
  }
  return r;
}

RankResult independence_rank(const std::map<TableKey, CPoly>& symbols, const SkewSelection& sel,
                             std::uint64_t seed, int max_retries) {
  RankResult res;
  res.expected = sel.expected_rank;
  const int n = sel.n;
  const int vars = n * n;

  std::vector<const CPoly*> rows;
  for (const auto& key : sel.retained) {
    auto it = symbols.find(key);
    rows.push_back(it == symbols.end() ? nullptr : &it->second);
  }

  std::vector<std::vector<CPoly>> jac;
  for (const CPoly* p : rows) {
    std::vector<CPoly> grad;
    for (int v = 0; v < vars; ++v)
      grad.push_back(p ? p->diff(v) : CPoly(VarTable::gl(n)));
    jac.push_back(std::move(grad));
  }

  Rng rng(seed);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Rational> point;
    for (int v = 0; v < vars; ++v) point.push_back(rng.small_rational());
    QMatrix j(int(jac.size()), vars);
    for (size_t rr = 0; rr < jac.size(); ++rr)
      for (int v = 0; v < vars; ++v) j.at(int(rr), v) = jac[rr][size_t(v)].eval(point);
    res.achieved = rank(j);
    res.retries = attempt;
    if (res.achieved > res.expected) {
      res.fatal_excess = true;
      res.conclusive = true;
      return res;
    }
    if (res.achieved == res.expected) {
      res.conclusive = true;
      return res;
    }
  }
  res.conclusive = false;
  return res;
}

VerificationReport rank_suite(const std::map<TableKey, CPoly>& symbols, const SkewSelection& sel,
                              const QMatrix& mu, std::uint64_t seed) {
  VerificationReport r;
  r.suite = "independence-rank";
  r.n = sel.n;
  r.mu_digest = matrix_digest(mu);
  r.cases = 1;
  RankResult res = independence_rank(symbols, sel, seed);
  if (res.fatal_excess) {
    r.failures.push_back("rank " + std::to_string(res.achieved) + " exceeds expected " +
                         std::to_string(res.expected) + ": fatal inconsistency");
  } else if (!res.conclusive) {
    r.failures.push_back("rank stuck at " + std::to_string(res.achieved) + " < expected " +
                         std::to_string(res.expected) + " after " + std::to_string(res.retries + 1) +
                         " points: inconclusive");
  } else if (res.achieved != res.expected) {
    r.failures.push_back("rank " + std::to_string(res.achieved) + " != expected " +
                         std::to_string(res.expected));
  }
  return r;
}

CentralizerCheck centralizer_dim(const QMatrix& mu, const JordanData& jd) {
  const int n = mu.rows();
  CentralizerCheck c;

  QMatrix ad(n * n, n * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      QMatrix unit(n, n);
      unit.at(k, j) = Rational(1);
      QMatrix image = mu * unit - unit * mu;
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) ad.at(i * n + l, k * n + j) = image.at(i, l);
    }
  c.by_linear_algebra = n * n - rank(ad);
  c.by_partitions = jd.centralizer_dim();
  c.by_gamma = 2 * jd.gamma().size() + n;
  return c;
}

VerificationReport centralizer_suite(const QMatrix& mu, const JordanData& jd) {
  VerificationReport r;
  r.suite = "centralizer-dim";
  r.n = mu.rows();
  r.mu_digest = matrix_digest(mu);
  r.cases = 1;
  CentralizerCheck c = centralizer_dim(mu, jd);
  if (!c.ok())
    r.failures.push_back("centralizer dimensions disagree: kernel " +
                         std::to_string(c.by_linear_algebra) + ", partition formula " +
                         std::to_string(c.by_partitions) + ", 2|gamma|+n " +
                         std::to_string(c.by_gamma));
  return r;
}

VerificationReport gr_suite(const GeneratorTable& t, const SkewSelection& sel) {
  VerificationReport r;
  r.suite = "gr-compatibility";
  r.n = t.n;
  r.mu_digest = matrix_digest(t.mu);

  for (const auto& [m, k] : sel.retained) {
    ++r.cases;
    UElement u = t.entry(m, k);
    CPoly expected = t.symbol_entry(m, k);
    if (u.is_zero() || expected.is_zero()) {
      r.failures.push_back("retained box " + box_name(m, k) + " has a vanishing entry or symbol");
      continue;
    }
    CPoly top = symbol(u, m - k);
    if (!(top == expected))
      r.failures.push_back("retained box " + box_name(m, k) +
                           ": top-degree image differs from the symbol table");
  }
  return r;
}

}  // namespace shiftarg
