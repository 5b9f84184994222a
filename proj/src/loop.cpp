#include "shiftarg/loop.hpp"

#include "shiftarg/ugl.hpp"

#include <sstream>
#include <stdexcept>

namespace shiftarg {

namespace {

/* [E_ij[r], E_kl[s]] without the central term (valid whenever r+s != 0);
 * appends the resulting generators with signs to out */
void loop_bracket(const LoopGen& a, const LoopGen& b, std::vector<std::pair<LoopGen, int>>& out) {
  out.clear();
  if (b.i == a.j) out.push_back({LoopGen{a.r + b.r, a.i, b.j}, +1});
  if (a.i == b.j) out.push_back({LoopGen{a.r + b.r, b.i, a.j}, -1});
}

}  // namespace

LoopElement::LoopElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("LoopElement needs n >= 1");
}

LoopElement LoopElement::scalar(int n, const Rational& c) {
  LoopElement e(n);
  if (!c.is_zero()) e.terms_.emplace(LoopMono{}, c);
  return e;
}

LoopElement LoopElement::gen(int n, int i, int j, int r) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("loop generator index out of range");
  if (r > -1) throw std::invalid_argument("stored loop generators need mode r <= -1");
  LoopElement e(n);
  e.terms_.emplace(LoopMono{{LoopGen{r, i, j}}, 0}, Rational(1));
  return e;
}

LoopElement LoopElement::tau(int n) {
  LoopElement e(n);
  e.terms_.emplace(LoopMono{{}, 1}, Rational(1));
  return e;
}

void LoopElement::add_term(const LoopMono& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LoopElement LoopElement::operator-() const {
  LoopElement r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("LoopElement over different gl_n");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("LoopElement over different gl_n");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

/* word * g with g a loop generator that may sort below the tail of word;
 * recursive straightening, all modes <= -1 so no central terms appear */
void mul_word_gen(int n, const std::vector<LoopGen>& word, const LoopGen& g,
                  const Rational& coeff, LoopElement& out);

void emit_sorted(const std::vector<LoopGen>& word, const Rational& coeff, LoopElement& out) {
  out.add_term(LoopMono{word, 0}, coeff);
}

void mul_word_gen(int n, const std::vector<LoopGen>& word, const LoopGen& g,
                  const Rational& coeff, LoopElement& out) {
  if (word.empty() || !(g < word.back())) {
    std::vector<LoopGen> w = word;
    w.push_back(g);
    emit_sorted(w, coeff, out);
    return;
  }
  LoopGen h = word.back();
  std::vector<LoopGen> rest(word.begin(), word.end() - 1);
  // word*g = rest*(g*h) + rest*[h,g]
  LoopElement gh(n);
  mul_word_gen(n, rest, g, coeff, gh);
  for (const auto& [m, c] : gh.terms()) mul_word_gen(n, m.word, h, c, out);
  std::vector<std::pair<LoopGen, int>> br;
  loop_bracket(h, g, br);
  for (const auto& [bg, sign] : br) mul_word_gen(n, rest, bg, coeff * Rational(sign), out);
}

}  // namespace

LoopElement LoopElement::operator*(const LoopElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("LoopElement over different gl_n");
  LoopElement out(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Rational c = ca * cb;
      // move tau^p of the left factor through the right word:
      // tau^p X[r] = sum_j C(p,j) (-1)^j r(r-1)...(r-j+1) X[r-j] tau^(p-j)
      LoopElement shifted(n_);  // sum of c_w * (word of mb with lowered modes) tau^q
      shifted.add_term(LoopMono{{}, ma.tau}, Rational(1));
      for (const LoopGen& g : mb.word) {
        LoopElement next(n_);
        for (const auto& [sm, sc] : shifted.terms()) {
          Rational fall(1);
          for (int jj = 0; jj <= sm.tau; ++jj) {
            if (jj > 0) fall *= Rational(g.r - jj + 1);
            Rational w = sc * binomial(sm.tau, jj) * fall * Rational(jj % 2 == 0 ? 1 : -1);
            if (w.is_zero()) continue;
            LoopMono t = sm;
            t.tau -= jj;
            t.word.push_back(LoopGen{g.r - jj, g.i, g.j});  // appended, sorted later
            next.add_term(t, w);
          }
        }
        shifted = std::move(next);
      }
      // now straighten ma.word * (shifted word) and collect tau powers
      for (const auto& [sm, sc] : shifted.terms()) {
        LoopElement prod(n_);
        prod.add_term(LoopMono{ma.word, 0}, Rational(1));
        for (const LoopGen& g : sm.word) {
          LoopElement next(n_);
          for (const auto& [pm, pc] : prod.terms()) mul_word_gen(n_, pm.word, g, pc, next);
          prod = std::move(next);
        }
        for (const auto& [pm, pc] : prod.terms()) {
          LoopMono t = pm;
          t.tau = sm.tau + mb.tau;
          out.add_term(t, c * sc * pc);
        }
      }
    }
  return out;
}

LoopElement LoopElement::operator*(const Rational& c) const {
  LoopElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

bool LoopElement::operator==(const LoopElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

LoopElement LoopElement::tau_coefficient(int p) const {
  LoopElement r(n_);
  for (const auto& [m, c] : terms_)
    if (m.tau == p) r.terms_.emplace(LoopMono{m.word, 0}, c);
  return r;
}

std::string LoopElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> parts;
    if (!a.is_one() || (m.word.empty() && m.tau == 0)) parts.push_back(a.str());
    for (size_t s = 0; s < m.word.size();) {
      size_t e = s;
      while (e < m.word.size() && m.word[e] == m.word[s]) ++e;
      std::ostringstream g;
      g << "E[" << m.word[s].i << "," << m.word[s].j << ";" << m.word[s].r << "]";
      if (e - s > 1) g << "^" << (e - s);
      parts.push_back(g.str());
      s = e;
    }
    if (m.tau > 0) {
      std::ostringstream g;
      g << "tau";
      if (m.tau > 1) g << "^" << m.tau;
      parts.push_back(g.str());
    }
    for (size_t p = 0; p < parts.size(); ++p) {
      if (p) os << "*";
      os << parts[p];
    }
  }
  return os.str();
}

RMatrix<LoopElement> loop_matrix(int n) {
  RMatrix<LoopElement> m(n, std::vector<LoopElement>());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LoopElement e = LoopElement::gen(n, i + 1, j + 1, -1);
      if (i == j) e += LoopElement::tau(n);
      m[i].push_back(e);
    }
  return m;
}

LoopElement translate(const LoopElement& v) {
  LoopElement out(v.n());
  for (const auto& [m, c] : v.terms()) {
    if (m.tau != 0) throw std::invalid_argument("translate needs a tau-free element");
    for (size_t p = 0; p < m.word.size(); ++p) {
      // replace factor p by its T-image and restraighten the product
      LoopElement prod = LoopElement::scalar(v.n(), c * Rational(-m.word[p].r));
      for (size_t q = 0; q < m.word.size(); ++q) {
        LoopGen g = m.word[q];
        if (q == p) g.r -= 1;
        prod = prod * LoopElement::gen(v.n(), g.i, g.j, g.r);
      }
      out += prod;
    }
  }
  return out;
}

int d_grade(const LoopElement& v) {
  if (v.is_zero()) throw std::invalid_argument("the zero element has no grading degree");
  bool have = false;
  int deg = 0;
  for (const auto& [m, c] : v.terms()) {
    int d = m.tau;
    for (const LoopGen& g : m.word) d += -g.r;
    if (have && d != deg) throw std::invalid_argument("inhomogeneous element has no grading degree");
    deg = d;
    have = true;
  }
  return deg;
}

LoopElement apply_mode(int i, int j, int r, const LoopElement& v) {
  const int n = v.n();
  if (r < 0) throw std::invalid_argument("apply_mode needs a nonnegative mode");
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("loop generator index out of range");
  LoopElement out(n);
  for (const auto& [m, c] : v.terms()) {
    if (m.tau != 0) throw std::invalid_argument("vacuum vectors are tau-free");
    if (m.word.empty()) continue;  // E_ij[r] |0> = 0
    // E_ij[r] g w|0> = g (E_ij[r] w|0>) + [E_ij[r], g] w|0>
    LoopGen g = m.word.front();
    LoopElement rest(n);
    rest.add_term(LoopMono{{m.word.begin() + 1, m.word.end()}, 0}, c);

    out += LoopElement::gen(n, g.i, g.j, g.r) * apply_mode(i, j, r, rest);

    std::vector<std::pair<LoopGen, int>> br;
    loop_bracket(LoopGen{r, i, j}, g, br);
    for (const auto& [bg, sign] : br) {
      if (bg.r >= 0)
        out += apply_mode(bg.i, bg.j, bg.r, rest) * Rational(sign);
      else
        out += LoopElement::gen(n, bg.i, bg.j, bg.r) * rest * Rational(sign);
    }
    if (r > 0 && r + g.r == 0) {
      // central term r K (d_kj d_il - d_ij d_kl / n) at K = -n,
      // for [E_ij[r], E_kl[-r]] with (k,l) = (g.i, g.j)
      Rational central(0);
      if (g.i == j && i == g.j) central += Rational(1);
      if (i == j && g.i == g.j) central -= Rational(1, n);
      central *= Rational(r) * Rational(-n);
      out += rest * central;
    }
  }
  return out;
}

SsCheck is_ss_vector(const LoopElement& v) {
  SsCheck res;
  res.image = LoopElement(v.n());
  for (int r = 0; r <= 1; ++r)
    for (int i = 1; i <= v.n(); ++i)
      for (int j = 1; j <= v.n(); ++j) {
        LoopElement w = apply_mode(i, j, r, v);
        if (!w.is_zero()) {
          res.ok = false;
          res.i = i;
          res.j = j;
          res.r = r;
          res.image = w;
          return res;
        }
      }
  return res;
}

std::vector<LoopElement> ss_family(SsFamily family, int m, int n) {
  if (m < 1) throw std::invalid_argument("ss_family needs m >= 1");
  RMatrix<LoopElement> L = loop_matrix(n);
  LoopElement full(n);
  switch (family) {
    case SsFamily::Phi:
      full = projector_trace(Projector::Antisymmetrizer, m, L);
      break;
    case SsFamily::Psi:
      full = projector_trace(Projector::Symmetrizer, m, L);
      break;
    case SsFamily::Theta:
      full = power_trace(m, L);
      break;
  }
  std::vector<LoopElement> out;
  for (int a = 0; a <= m; ++a) out.push_back(full.tau_coefficient(m - a));
  return out;
}

DOp evaluate_rho(const LoopElement& v, const QMatrix& mu) {
  const int n = v.n();
  if (mu.rows() != n || mu.cols() != n) throw std::invalid_argument("mu must be n x n");
  DOp out(n);
  for (const auto& [m, c] : v.terms()) {
    DOp prod = DOp::coeff(UElement::scalar(n, c));
    for (const LoopGen& g : m.word) {
      DOp img = DOp::monomial(UElement::gen(n, g.i, g.j), -g.r, 0);
      if (g.r == -1 && !mu.at(g.i - 1, g.j - 1).is_zero())
        img += DOp::coeff(UElement::scalar(n, mu.at(g.i - 1, g.j - 1)));
      prod = prod * img;
    }
    for (int p = 0; p < m.tau; ++p) prod = prod * (-DOp::dz(n));
    out += prod;
  }
  return out;
}

}  // namespace shiftarg
