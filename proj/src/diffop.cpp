#include "shiftarg/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace shiftarg {

DOp::DOp(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("DOp needs n >= 1");
}

DOp DOp::monomial(const UElement& u, int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("DOp powers must be nonnegative");
  DOp d(u.n());
  if (!u.is_zero()) d.terms_.emplace(Key{k, l}, u);
  return d;
}

UElement DOp::coeff_at(int k, int l) const {
  auto it = terms_.find(Key{k, l});
  return it == terms_.end() ? UElement(n_) : it->second;
}

void DOp::add_term(int k, int l, const UElement& u) {
  if (u.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{k, l}, u);
  if (!inserted) {
    it->second += u;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DOp DOp::operator-() const {
  DOp r(n_);
  for (const auto& [key, u] : terms_) r.terms_.emplace(key, -u);
  return r;
}

DOp& DOp::operator+=(const DOp& o) {
  if (n_ != o.n_) throw std::invalid_argument("DOp over different gl_n");
  for (const auto& [key, u] : o.terms_) add_term(key.k, key.l, u);
  return *this;
}

DOp& DOp::operator-=(const DOp& o) {
  if (n_ != o.n_) throw std::invalid_argument("DOp over different gl_n");
  for (const auto& [key, u] : o.terms_) add_term(key.k, key.l, -u);
  return *this;
}

DOp DOp::operator*(const DOp& o) const {
  if (n_ != o.n_) throw std::invalid_argument("DOp over different gl_n");
  DOp r(n_);
  for (const auto& [ka, ua] : terms_)
    for (const auto& [kb, ub] : o.terms_) {
      // (ua z^-k1 d^l1)(ub z^-k2 d^l2); coefficients commute with z and d.
      // d^l1 o z^-k2 = sum_j C(l1,j) (-1)^j k2 (k2+1)...(k2+j-1) z^-(k2+j) d^(l1-j)
      UElement uc = ua * ub;
      if (uc.is_zero()) continue;
      const int l1 = ka.l, k2 = kb.k;
      Rational rising(1);
      for (int j = 0; j <= l1; ++j) {
        if (j > 0) {
          if (k2 == 0) break;  // all higher derivatives of z^0 vanish
          rising *= Rational(k2 + j - 1);
        }
        Rational w = binomial(l1, j) * rising * Rational(j % 2 == 0 ? 1 : -1);
        r.add_term(ka.k + k2 + j, l1 - j + kb.l, uc * w);
      }
    }
  return r;
}

DOp DOp::operator*(const Rational& c) const {
  DOp r(n_);
  if (c.is_zero()) return r;
  for (const auto& [key, u] : terms_) r.terms_.emplace(key, u * c);
  return r;
}

bool DOp::operator==(const DOp& o) const { return n_ == o.n_ && terms_ == o.terms_; }

std::map<int, UElement> DOp::apply_to_one() const {
  std::map<int, UElement> out;
  for (const auto& [key, u] : terms_) {
    if (key.l > 0) continue;
    auto [it, inserted] = out.try_emplace(key.k, u);
    if (!inserted) it->second += u;
  }
  return out;
}

std::string DOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, u] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "z^" << -key.k << "*∂^" << key.l << "*(" << u.str() << ")";
  }
  return os.str();
}

RMatrix<DOp> operator_matrix(const QMatrix& mu) {
  if (mu.rows() != mu.cols()) throw std::invalid_argument("mu must be square");
  const int n = mu.rows();
  RMatrix<DOp> m(n, std::vector<DOp>());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      DOp e(n);
      if (i == j) e -= DOp::dz(n);
      if (!mu.at(i, j).is_zero()) e += DOp::coeff(UElement::scalar(n, mu.at(i, j)));
      e += DOp::monomial(UElement::gen(n, i + 1, j + 1), 1, 0);
      m[i].push_back(e);
    }
  return m;
}

RMatrix<DOp> coefficient_matrix(const QMatrix& mu) {
  if (mu.rows() != mu.cols()) throw std::invalid_argument("mu must be square");
  const int n = mu.rows();
  RMatrix<DOp> m(n, std::vector<DOp>());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      DOp e(n);
      if (!mu.at(i, j).is_zero()) e += DOp::coeff(UElement::scalar(n, mu.at(i, j)));
      e += DOp::monomial(UElement::gen(n, i + 1, j + 1), 1, 0);
      m[i].push_back(e);
    }
  return m;
}

}  // namespace shiftarg
