#include "shiftarg/ugl.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace shiftarg {

namespace {

int last_gen(const PbwExp& m) {
  for (int g = int(m.size()); g-- > 0;)
    if (m[g]) return g;
  return -1;
}

// [E_h, E_g] as a list of (sign, generator); h, g are row-major indices
struct BracketTerm {
  int gen;
  int sign;
};

void bracket(int n, int h, int g, std::vector<BracketTerm>& out) {
  out.clear();
  int i = h / n, j = h % n;  // E_{i+1, j+1}
  int k = g / n, l = g % n;  // E_{k+1, l+1}
  if (j == k) out.push_back({i * n + l, +1});
  if (i == l) out.push_back({k * n + j, -1});
}

struct StraightenCache {
  std::mutex mu;
  std::map<std::pair<PbwExp, int>, std::map<PbwExp, Rational, PbwGrlexGreater>> memo;
};

StraightenCache& cache_for(int n) {
  static std::mutex table_mu;
  static std::map<int, StraightenCache*> table;
  std::lock_guard<std::mutex> lock(table_mu);
  auto it = table.find(n);
  if (it == table.end()) it = table.emplace(n, new StraightenCache).first;
  return *it->second;
}

using TermMap = std::map<PbwExp, Rational, PbwGrlexGreater>;

void add_into(TermMap& dst, const PbwExp& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = dst.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

void add_scaled(TermMap& dst, const TermMap& src, const Rational& c) {
  for (const auto& [e, v] : src) add_into(dst, e, v * c);
}

// monomial * E_g in PBW form
const TermMap& mul_gen(int n, const PbwExp& m, int g);

// element * E_g
TermMap mul_right_gen(int n, const TermMap& u, int g) {
  TermMap out;
  for (const auto& [e, c] : u) add_scaled(out, mul_gen(n, e, g), c);
  return out;
}

const TermMap& mul_gen(int n, const PbwExp& m, int g) {
  StraightenCache& cache = cache_for(n);
  std::pair<PbwExp, int> key(m, g);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.memo.find(key);
    if (it != cache.memo.end()) return it->second;
  }

  TermMap result;
  int h = last_gen(m);
  if (h <= g) {
    PbwExp e = m;
    ++e[g];
    result.emplace(std::move(e), Rational(1));
  } else {
    PbwExp rest = m;
    --rest[h];
    // m*E_g = rest*(E_g E_h + [E_h, E_g])
    result = mul_right_gen(n, mul_gen(n, rest, g), h);
    std::vector<BracketTerm> br;
    bracket(n, h, g, br);
    for (const auto& t : br) add_scaled(result, mul_gen(n, rest, t.gen), Rational(t.sign));
  }

  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] = cache.memo.emplace(std::move(key), std::move(result));
  return it->second;
}

}  // namespace

UElement::UElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("UElement needs n >= 1");
}

UElement UElement::scalar(int n, const Rational& c) {
  UElement u(n);
  if (!c.is_zero()) u.terms_.emplace(PbwExp(size_t(n) * n, 0), c);
  return u;
}

UElement UElement::gen(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("generator index out of range");
  UElement u(n);
  PbwExp e(size_t(n) * n, 0);
  e[size_t(i - 1) * n + (j - 1)] = 1;
  u.terms_.emplace(std::move(e), Rational(1));
  return u;
}

bool UElement::is_scalar(Rational* value) const {
  if (terms_.empty()) {
    if (value) *value = Rational(0);
    return true;
  }
  if (degree() != 0) return false;
  if (value) *value = terms_.begin()->second;
  return true;
}

int UElement::degree() const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (auto e : terms_.begin()->first) d += e;
  return int(d);
}

void UElement::add_term(const PbwExp& e, const Rational& c) { add_into(terms_, e, c); }

void UElement::check_compatible(const UElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("UElements over different gl_n");
}

UElement UElement::operator-() const {
  UElement r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

UElement& UElement::operator+=(const UElement& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

UElement UElement::operator*(const UElement& o) const {
  check_compatible(o);
  UElement out(n_);
  for (const auto& [mb, cb] : o.terms_) {
    // multiply by the generators of mb in PBW (ascending) order
    TermMap cur = terms_;
    for (size_t g = 0; g < mb.size(); ++g)
      for (unsigned rep = 0; rep < mb[g]; ++rep) cur = mul_right_gen(n_, cur, int(g));
    add_scaled(out.terms_, cur, cb);
  }
  return out;
}

UElement UElement::operator*(const Rational& c) const {
  UElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

bool UElement::operator==(const UElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

namespace {

CPoly to_cpoly(const UElement& u, const VarTablePtr& table) {
  CPoly p(table);
  for (const auto& [e, c] : u.terms()) {
    Exponents we(e.begin(), e.end());
    p.add_term(we, c);
  }
  return p;
}

}  // namespace

std::string UElement::str() const { return to_cpoly(*this, VarTable::gl(n_)).str(); }

UElement UElement::parse(int n, std::string_view text) {
  CPoly p = CPoly::parse(VarTable::gl(n), text);
  UElement u(n);
  for (const auto& [e, c] : p.terms()) {
    PbwExp pe(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 255) throw std::invalid_argument("exponent too large");
      pe[i] = std::uint8_t(e[i]);
    }
    u.add_term(pe, c);
  }
  return u;
}

UElement commutator(const UElement& a, const UElement& b) { return a * b - b * a; }

CPoly symbol(const UElement& a, int d) {
  if (a.degree() > d)
    throw std::invalid_argument("symbol degree " + std::to_string(d) +
                                " below filtration degree " + std::to_string(a.degree()));
  CPoly p(VarTable::gl(a.n()));
  for (const auto& [e, c] : a.terms()) {
    unsigned deg = 0;
    for (auto x : e) deg += x;
    if (int(deg) != d) continue;
    Exponents we(e.begin(), e.end());
    p.add_term(we, c);
  }
  return p;
}

CPoly poisson(const CPoly& a, const CPoly& b) {
  const VarTablePtr& table = a.table();
  if (!table || !b.table() || !(*table == *b.table()))
    throw std::invalid_argument("poisson bracket needs matching variable tables");
  int n = int(std::lround(std::sqrt(double(table->size()))));
  if (n * n != table->size())
    throw std::invalid_argument("poisson bracket needs the gl_n variable table");

  auto grad = [&](const CPoly& p) {
    std::vector<CPoly> g(size_t(n) * n, CPoly(table));
    for (int v = 0; v < n * n; ++v) g[v] = p.diff(v);
    return g;
  };
  std::vector<CPoly> ga = grad(a), gb = grad(b);

  // {a,b} = sum_{i,j,l} (da/dE_ij db/dE_jl - db/dE_ij da/dE_jl) E_il
  CPoly out(table);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      CPoly coeff(table);
      for (int j = 0; j < n; ++j) {
        const CPoly& aij = ga[size_t(i) * n + j];
        const CPoly& bjl = gb[size_t(j) * n + l];
        if (!aij.is_zero() && !bjl.is_zero()) coeff += aij * bjl;
        const CPoly& bij = gb[size_t(i) * n + j];
        const CPoly& ajl = ga[size_t(j) * n + l];
        if (!bij.is_zero() && !ajl.is_zero()) coeff -= bij * ajl;
      }
      if (!coeff.is_zero()) out += coeff * CPoly::var(table, i * n + l);
    }
  return out;
}

}  // namespace shiftarg
