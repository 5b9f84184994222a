#include "shiftarg/cpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace shiftarg {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {}

std::shared_ptr<const VarTable> VarTable::gl(int n) {
  std::vector<std::string> names;
  names.reserve(size_t(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      names.push_back("E[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return std::make_shared<const VarTable>(std::move(names));
}

std::shared_ptr<const VarTable> VarTable::single(const std::string& name) {
  return std::make_shared<const VarTable>(std::vector<std::string>{name});
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

int VarTable::index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return int(i);
  return -1;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da > db;
  return a > b;  // lexicographic: larger exponent on an earlier variable first
}

CPoly CPoly::constant(VarTablePtr table, const Rational& c) {
  CPoly p(std::move(table));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.table_->size(), 0u), c);
  return p;
}

CPoly CPoly::var(VarTablePtr table, int index, unsigned power) {
  CPoly p(std::move(table));
  if (index < 0 || index >= p.table_->size()) throw std::invalid_argument("variable index out of range");
  Exponents e(p.table_->size(), 0u);
  e[index] = power;
  if (power == 0) return constant(p.table_, Rational(1));
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

int CPoly::degree() const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (unsigned e : terms_.begin()->first) d += e;  // leading term has maximal degree
  return int(d);
}

bool CPoly::is_constant(Rational* value) const {
  if (terms_.empty()) {
    if (value) *value = Rational(0);
    return true;
  }
  if (degree() != 0) return false;
  if (value) *value = terms_.begin()->second;
  return true;
}

void CPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CPoly::check_compatible(const CPoly& o) const {
  if (!table_ || !o.table_) throw std::invalid_argument("polynomial without variable table");
  if (table_ != o.table_ && !(*table_ == *o.table_))
    throw std::invalid_argument("polynomials over different variable tables");
}

CPoly CPoly::operator-() const {
  CPoly r(table_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CPoly CPoly::operator*(const CPoly& o) const {
  check_compatible(o);
  CPoly r(table_);
  Exponents e(table_->size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

CPoly CPoly::operator*(const Rational& c) const {
  CPoly r(table_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

CPoly CPoly::pow(unsigned e) const {
  CPoly r = constant(table_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool CPoly::operator==(const CPoly& o) const {
  if (!table_ || !o.table_) return terms_.empty() && o.terms_.empty();
  if (table_ != o.table_ && !(*table_ == *o.table_)) return false;
  return terms_ == o.terms_;
}

Rational CPoly::eval(const std::vector<Rational>& point) const {
  if (int(point.size()) != (table_ ? table_->size() : 0))
    throw std::invalid_argument("evaluation point has wrong arity");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

CPoly CPoly::diff(int var) const {
  if (!table_ || var < 0 || var >= table_->size()) throw std::invalid_argument("bad variable index");
  CPoly r(table_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, c * Rational(long(e[var])));
  }
  return r;
}

std::string CPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) { os << "-"; coeff = -coeff; }
      first = false;
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      coeff = coeff.abs();
    }
    bool has_vars = false;
    std::ostringstream vars;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_vars) vars << "*";
      vars << table_->name(int(i));
      if (e[i] > 1) vars << "^" << e[i];
      has_vars = true;
    }
    if (!has_vars) {
      os << coeff.str();
    } else if (coeff.is_one()) {
      os << vars.str();
    } else {
      os << coeff.str() << "*" << vars.str();
    }
  }
  return os.str();
}

namespace {

/* Shared term-list parser for the polynomial text forms:
 *   expr   := ('-')? product (('+'|'-') product)*
 *   product:= factor ('*' factor)*
 *   factor := rational | name ('^' uint)?
 * Names may contain letters, digits, '[', ']', ',' and '_'. */
struct TermParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool name_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == ',' || c == '_';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }

  Rational parse_rational() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    return Rational::parse(text.substr(start, pos - start));
  }

  unsigned parse_uint() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer exponent");
    return unsigned(std::stoul(std::string(text.substr(start, pos - start))));
  }

  // one product; returns coefficient and multiset of (var, power)
  std::pair<Rational, std::vector<std::pair<std::string, unsigned>>> parse_product(const VarTable& table) {
    Rational coeff(1);
    std::vector<std::pair<std::string, unsigned>> povs;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos >= text.size()) fail("expected factor");
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_rational();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = pos;
        while (pos < text.size() && name_char(text[pos])) ++pos;
        std::string name(text.substr(start, pos - start));
        if (table.index(name) < 0) fail("unknown variable \"" + name + "\"");
        unsigned power = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          power = parse_uint();
        }
        povs.emplace_back(std::move(name), power);
      } else {
        fail("unexpected character");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        expect_factor = false;
      }
    }
    return {coeff, povs};
  }
};

}  // namespace

CPoly CPoly::parse(VarTablePtr table, std::string_view text) {
  CPoly out(table);
  TermParser p{text};
  p.skip_ws();
  if (p.pos >= text.size()) p.fail("empty polynomial text");
  int sign = 1;
  if (text[p.pos] == '-') { sign = -1; ++p.pos; }
  for (;;) {
    auto [coeff, povs] = p.parse_product(*table);
    Exponents e(table->size(), 0u);
    for (const auto& [name, power] : povs) e[table->index(name)] += power;
    out.add_term(e, coeff * Rational(sign));
    p.skip_ws();
    if (p.pos >= text.size()) break;
    if (text[p.pos] == '+') sign = 1;
    else if (text[p.pos] == '-') sign = -1;
    else p.fail("expected '+' or '-'");
    ++p.pos;
  }
  return out;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> divs;
  if (v == 0) return divs;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Rational eval_dense(const std::vector<Rational>& c, const Rational& x) {
  Rational v(0);
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// exact division by (t - r); caller guarantees r is a root
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  std::vector<Rational> q(c.size() - 1);
  Rational carry(0);
  for (size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

std::optional<Rational> find_root(const std::vector<Rational>& c) {
  // candidates p/q: p | numerator of trailing coeff, q | numerator of leading
  // coeff, after clearing all denominators
  mpz_class l(1);
  for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  std::vector<mpz_class> z(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    mpq_class t = c[i].raw() * mpq_class(l);
    z[i] = t.get_num();
  }
  size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) return Rational(0);
  for (const mpz_class& p : divisors(z.front()))
    for (const mpz_class& q : divisors(z.back())) {
      Rational cand{mpq_class(p, q)};
      if (eval_dense(c, cand).is_zero()) return cand;
      cand = -cand;
      if (eval_dense(c, cand).is_zero()) return cand;
    }
  return std::nullopt;
}

}  // namespace

RationalRoots rational_roots(const std::vector<Rational>& dense) {
  std::vector<Rational> c = dense;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  RationalRoots out;
  std::map<Rational, int, std::less<Rational>> found;
  while (c.size() > 1) {
    auto root = find_root(c);
    if (!root) break;
    ++found[*root];
    c = deflate(c, *root);
  }
  for (auto& [r, m] : found) out.roots.emplace_back(r, m);
  out.remainder_degree = int(c.size()) - 1;
  return out;
}

RationalRoots rational_roots(const CPoly& p) {
  if (!p.table() || p.table()->size() != 1)
    throw std::invalid_argument("rational_roots expects a univariate polynomial");
  int deg = p.degree();
  if (deg < 0) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> dense(size_t(deg) + 1);
  for (const auto& [e, c] : p.terms()) dense[e[0]] = c;
  return rational_roots(dense);
}

}  // namespace shiftarg
