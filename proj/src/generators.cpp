#include "shiftarg/generators.hpp"

#include "shiftarg/diffop.hpp"
#include "shiftarg/loop.hpp"
#include "shiftarg/matrix_ops.hpp"

#include <optional>
#include <stdexcept>

namespace shiftarg {

namespace {

/* ascending r-subsets of {0, ..., n-1} */
template <class Fn>
void for_each_subset(int n, int r, Fn&& fn) {
  if (r == 0) {
    fn(std::vector<int>{});
    return;
  }
  if (r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/* ascending r-subsets of an ascending base list */
template <class Fn>
void for_each_subset_of(const std::vector<int>& base, int r, Fn&& fn) {
  for_each_subset(int(base.size()), r, [&](const std::vector<int>& pos) {
    std::vector<int> out(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) out[i] = base[pos[i]];
    fn(out);
  });
}

std::vector<int> set_minus(const std::vector<int>& whole, const std::vector<int>& part) {
  std::vector<int> out;
  size_t p = 0;
  for (int v : whole) {
    if (p < part.size() && part[p] == v) {
      ++p;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

/* sign of the two-row permutation (B, I\B; C, I\C), rows listed ascending */
int two_row_sign(const std::vector<int>& b, const std::vector<int>& c, const std::vector<int>& whole) {
  std::vector<int> top = b, bottom = c;
  for (int v : set_minus(whole, b)) top.push_back(v);
  for (int v : set_minus(whole, c)) bottom.push_back(v);
  std::vector<std::pair<int, int>> pairs(top.size());
  for (size_t i = 0; i < top.size(); ++i) pairs[i] = {top[i], bottom[i]};
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> image(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) image[i] = pairs[i].second;
  return detail::permutation_sign(image);
}

QMatrix submatrix(const QMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  QMatrix out(int(rows.size()), int(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out.at(int(i), int(j)) = m.at(rows[i], cols[j]);
  return out;
}

void require_square(const QMatrix& mu) {
  if (mu.rows() < 1 || mu.rows() != mu.cols()) throw std::invalid_argument("mu must be square and nonempty");
}

void require_symmetrizer_scale(int n, const char* what) {
  if (n > 4)
    throw std::invalid_argument(std::string(what) +
                                " is kept to n <= 4 (the symmetrized sum runs over n^m index tuples)");
}

/* ---- U-level phi routes ---------------------------------------------- */

void accumulate(std::map<TableKey, UElement>& entries, int m, int k, const UElement& u) {
  if (u.is_zero()) return;
  auto [it, fresh] = entries.try_emplace({m, k}, u);
  if (!fresh) {
    it->second += u;
    if (it->second.is_zero()) entries.erase(it);
  }
}

std::map<TableKey, UElement> phi_minor_entries(const QMatrix& mu) {
  const int n = mu.rows();
  auto bare = operator_matrix(QMatrix(n, n));  // -d + E z^{-1}
  std::map<TableKey, UElement> entries;

  for (int m = 1; m <= n; ++m) {
    for_each_subset(n, m, [&](const std::vector<int>& whole) {
      for (int k = 0; k <= m; ++k) {
        for_each_subset_of(whole, k, [&](const std::vector<int>& b) {
          for_each_subset_of(whole, k, [&](const std::vector<int>& c) {
            Rational weight = k == 0 ? Rational(1) : det(submatrix(mu, b, c));
            if (weight.is_zero()) return;
            weight *= Rational(two_row_sign(b, c, whole));
            if (k == m) {
              accumulate(entries, m, m, UElement::scalar(n, weight));
              return;
            }
            DOp mnr = cminor(bare, set_minus(whole, b), set_minus(whole, c));
            for (const auto& [zp, u] : mnr.apply_to_one()) {
              if (zp != m - k)
                throw std::logic_error("minor expansion produced a z-degree off its homogeneous slot");
              accumulate(entries, m, k, u * weight);
            }
          });
        });
      }
    });
  }
  return entries;
}

std::map<TableKey, UElement> phi_trace_entries(const QMatrix& mu) {
  const int n = mu.rows();
  auto op = operator_matrix(mu);
  std::map<TableKey, UElement> entries;
  for (int m = 1; m <= n; ++m) {
    DOp tr = projector_trace(Projector::Antisymmetrizer, m, op);
    for (const auto& [zp, u] : tr.apply_to_one()) {
      if (zp < 0 || zp > m) throw std::logic_error("projected trace left a z-degree outside 0..m");
      accumulate(entries, m, m - zp, u);
    }
  }
  return entries;
}

/* ---- symbol series ---------------------------------------------------- */

RMatrix<ZPoly> xbar_matrix(const QMatrix& mu) {
  const int n = mu.rows();
  auto tbl = VarTable::gl(n);
  CPoly zero(tbl);
  RMatrix<ZPoly> x(n, std::vector<ZPoly>(n, ZPoly(zero)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      x[i][j] = ZPoly::from_coeffs(zero, {CPoly::constant(tbl, mu.at(i, j)), CPoly::var(tbl, i * n + j)});
  return x;
}

ZPoly zpoly_one(int n) {
  auto tbl = VarTable::gl(n);
  return ZPoly::from_coeffs(CPoly(tbl), {CPoly::constant(tbl, Rational(1))});
}

/* z-expansion of the degree-m antisymmetrized trace of mu + E z^{-1},
 * grouped two ways: subset determinants, and the signed two-row minor sums
 * splitting mu-columns from E-columns.  Both are computed and must agree. */
ZPoly phi_bar_series(int m, const QMatrix& mu) {
  const int n = mu.rows();
  auto tbl = VarTable::gl(n);
  CPoly zero(tbl);

  auto x = xbar_matrix(mu);
  ZPoly bysubsets(zero);
  for_each_subset(n, m, [&](const std::vector<int>& whole) {
    bysubsets = bysubsets + cminor(x, whole, whole);
  });

  RMatrix<CPoly> evars(n, std::vector<CPoly>(n, zero));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) evars[i][j] = CPoly::var(tbl, i * n + j);

  std::vector<CPoly> byminors(size_t(m) + 1, zero);
  for_each_subset(n, m, [&](const std::vector<int>& whole) {
    for (int k = 0; k <= m; ++k) {
      for_each_subset_of(whole, k, [&](const std::vector<int>& b) {
        for_each_subset_of(whole, k, [&](const std::vector<int>& c) {
          Rational weight = k == 0 ? Rational(1) : det(submatrix(mu, b, c));
          if (weight.is_zero()) return;
          weight *= Rational(two_row_sign(b, c, whole));
          CPoly part = k == m ? CPoly::constant(tbl, Rational(1))
                              : cminor(evars, set_minus(whole, b), set_minus(whole, c));
          byminors[size_t(k)] += part * weight;
        });
      });
    }
  });

  ZPoly byminors_series(zero);
  for (int k = 0; k <= m; ++k)
    if (!byminors[size_t(k)].is_zero()) byminors_series.set(m - k, byminors[size_t(k)]);

  if (!(bysubsets == byminors_series))
    throw std::logic_error("symbol routes disagree for the determinant family");
  return bysubsets;
}

ZPoly theta_bar_series(int m, const QMatrix& mu) {
  return power_trace(m, xbar_matrix(mu));
}

/* Symmetrized trace via the cycle decomposition: with commuting entries,
 * tr P_s X_1...X_m collapses to the product of tr X^len over the cycles of
 * s, so the full sum costs m! products of short z-series. */
ZPoly psi_bar_series(int m, const QMatrix& mu) {
  const int n = mu.rows();
  require_symmetrizer_scale(n, "the symmetrized symbol series");
  auto x = xbar_matrix(mu);
  std::vector<ZPoly> powers(size_t(m) + 1, ZPoly(CPoly(VarTable::gl(n))));
  for (int j = 1; j <= m; ++j) powers[size_t(j)] = power_trace(j, x);

  ZPoly acc(CPoly(VarTable::gl(n)));
  ZPoly one = zpoly_one(n);
  detail::for_each_permutation(m, [&](const std::vector<int>& p, int) {
    ZPoly term = one;
    for (int len : detail::cycle_lengths(p)) term = term * powers[size_t(len)];
    acc = acc + term;
  });
  return acc * factorial(m).inv();
}

/* ---- linear algebra in PBW coordinates -------------------------------- */

std::optional<std::vector<Rational>> solve_in_pbw(const UElement& target,
                                                  const std::vector<UElement>& columns) {
  std::map<PbwExp, int> coord;
  auto note = [&](const UElement& u) {
    for (const auto& [e, c] : u.terms()) {
      (void)c;
      coord.try_emplace(e, 0);
    }
  };
  note(target);
  for (const auto& u : columns) note(u);
  if (coord.empty()) return std::vector<Rational>(columns.size(), Rational(0));

  int next = 0;
  for (auto& [e, i] : coord) {
    (void)e;
    i = next++;
  }
  QMatrix a(next, int(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j)
    for (const auto& [e, c] : columns[j].terms()) a.at(coord.at(e), int(j)) = c;
  std::vector<Rational> b(size_t(next));
  for (const auto& [e, c] : target.terms()) b[size_t(coord.at(e))] = c;
  return solve(a, b);
}

}  // namespace

/* ---- family plumbing --------------------------------------------------- */

Family family_from_string(std::string_view name) {
  if (name == "phi") return Family::Phi;
  if (name == "psi-mm") return Family::PsiMM;
  if (name == "theta-mm") return Family::ThetaMM;
  if (name == "varphi") return Family::Varphi;
  if (name == "psi") return Family::PsiPlain;
  throw std::invalid_argument("unknown family: expected phi | psi-mm | theta-mm | varphi | psi");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Phi: return "phi";
    case Family::PsiMM: return "psi-mm";
    case Family::ThetaMM: return "theta-mm";
    case Family::Varphi: return "varphi";
    case Family::PsiPlain: return "psi";
  }
  throw std::logic_error("unreachable");
}

UElement GeneratorTable::entry(int m, int k) const {
  auto it = entries.find({m, k});
  return it == entries.end() ? UElement(n) : it->second;
}

CPoly GeneratorTable::symbol_entry(int m, int k) const {
  auto it = symbols.find({m, k});
  return it == symbols.end() ? CPoly(VarTable::gl(n)) : it->second;
}

GeneratorTable generator_table(Family f, const QMatrix& mu) {
  require_square(mu);
  const int n = mu.rows();
  GeneratorTable t;
  t.family = f;
  t.n = n;
  t.mu = mu;

  switch (f) {
    case Family::Phi: {
      t.entries = phi_minor_entries(mu);
      if (n <= 4 && phi_trace_entries(mu) != t.entries)
        throw std::logic_error("determinant-family routes disagree: trace vs minor expansion");
      break;
    }
    case Family::PsiMM:
    case Family::ThetaMM: {
      if (f == Family::PsiMM) require_symmetrizer_scale(n, "the psi-mm table");
      auto op = operator_matrix(mu);
      for (int m = 1; m <= n; ++m) {
        DOp tr = f == Family::PsiMM ? projector_trace(Projector::Symmetrizer, m, op)
                                    : power_trace(m, op);
        for (const auto& [zp, u] : tr.apply_to_one()) {
          if (zp < 0 || zp > m) throw std::logic_error("projected trace left a z-degree outside 0..m");
          accumulate(t.entries, m, m - zp, u);
        }
      }
      break;
    }
    case Family::Varphi:
    case Family::PsiPlain: {
      require_symmetrizer_scale(n, "the shifted-trace table");
      auto tbl_zero = UElement(n);
      RMatrix<RingPoly<UElement>> x(n, std::vector<RingPoly<UElement>>(n, RingPoly<UElement>(tbl_zero)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          x[i][j] = RingPoly<UElement>::from_coeffs(
              tbl_zero, {UElement::scalar(n, mu.at(i, j)), UElement::gen(n, i + 1, j + 1)});
      auto kind = f == Family::Varphi ? Projector::Antisymmetrizer : Projector::Symmetrizer;
      for (int m = 1; m <= n; ++m) {
        RingPoly<UElement> tr = projector_trace(kind, m, x);
        for (int k = 0; k <= m; ++k) accumulate(t.entries, m, k, tr.at(m - k));
      }
      break;
    }
  }

  t.symbols = symbol_table(f, mu);
  return t;
}

std::map<TableKey, CPoly> symbol_table(Family f, const QMatrix& mu) {
  require_square(mu);
  const int n = mu.rows();
  std::map<TableKey, CPoly> out;
  for (int m = 1; m <= n; ++m) {
    ZPoly series = symbol_series(f, m, mu);
    for (int k = 0; k <= m; ++k) {
      const CPoly& c = series.at(m - k);
      if (c.is_zero()) continue;
      if (c.degree() != m - k) throw std::logic_error("symbol entry is not homogeneous of degree m-k");
      out[{m, k}] = c;
    }
  }
  return out;
}

ZPoly symbol_series(Family f, int m, const QMatrix& mu) {
  require_square(mu);
  if (m < 1 || m > mu.rows()) throw std::invalid_argument("series degree must satisfy 1 <= m <= n");
  switch (f) {
    case Family::Phi:
    case Family::Varphi: return phi_bar_series(m, mu);
    case Family::PsiMM:
    case Family::PsiPlain: return psi_bar_series(m, mu);
    case Family::ThetaMM: return theta_bar_series(m, mu);
  }
  throw std::logic_error("unreachable");
}

/* ---- row polynomials and their laws ------------------------------------ */

std::vector<RingPoly<UElement>> row_polynomials(const GeneratorTable& t) {
  std::vector<RingPoly<UElement>> rows;
  for (int l = 1; l <= t.n; ++l) {
    RingPoly<UElement> p(UElement(t.n));
    for (int k = 0; k <= t.n - l; ++k) {
      UElement u = t.entry(l + k, k);
      if (!u.is_zero()) p.set(t.n - l - k, u);
    }
    rows.push_back(std::move(p));
  }
  return rows;
}

RingPoly<CPoly> symbol_row_polynomial(const std::map<TableKey, CPoly>& symbols, int n, int l) {
  if (l < 1 || l > n) throw std::invalid_argument("row index out of range");
  CPoly zero(VarTable::gl(n));
  RingPoly<CPoly> p(zero);
  for (int k = 0; k <= n - l; ++k) {
    auto it = symbols.find({l + k, k});
    if (it != symbols.end()) p.set(n - l - k, it->second);
  }
  return p;
}

bool check_shift(const QMatrix& mu, const Rational& a) {
  require_square(mu);
  auto shifted_rows = row_polynomials(generator_table(Family::Phi, mu + QMatrix::scalar(mu.rows(), a)));
  auto base_rows = row_polynomials(generator_table(Family::Phi, mu));
  for (size_t l = 0; l < base_rows.size(); ++l)
    if (!(shifted_rows[l] == base_rows[l].shifted(a))) return false;
  return true;
}

std::vector<TableKey> vanishing_boxes(int n, const YoungDiagram& alpha) {
  std::vector<TableKey> out;
  for (int l = 1; l <= n; ++l) {
    int delta = 0;
    for (int j = l + 1; j <= alpha.num_rows(); ++j) delta += alpha.row(j);
    if (delta == 0) continue;
    for (int k = n - l - delta + 1; k <= n - l; ++k) out.push_back({l + k, k});
  }
  return out;
}

bool check_vanishing(const QMatrix& mu, const YoungDiagram& alpha) {
  auto t = generator_table(Family::Phi, mu);
  for (const auto& [m, k] : vanishing_boxes(mu.rows(), alpha))
    if (!t.entry(m, k).is_zero()) return false;
  return true;
}

namespace {

template <class R>
int division_multiplicity(RingPoly<R> p, const Rational& lambda) {
  int count = 0;
  while (!p.is_zero()) {
    auto [q, rem] = p.divide_linear(lambda);
    if (!rem.is_zero()) break;
    p = q;
    ++count;
  }
  return count;
}

template <class RowPolys>
std::vector<FactorExponent> factorization_profile(const RowPolys& rows, const JordanData& jd) {
  std::vector<FactorExponent> out;
  for (int l = 1; l <= jd.n(); ++l) {
    for (size_t i = 0; i < jd.parts().size(); ++i) {
      int required = jd.delta(int(i), l);
      if (required == 0) continue;
      FactorExponent fe;
      fe.l = l;
      fe.lambda = jd.parts()[i].eigenvalue;
      fe.required = required;
      fe.achieved = division_multiplicity(rows[size_t(l) - 1], fe.lambda);
      out.push_back(fe);
    }
  }
  return out;
}

}  // namespace

std::vector<FactorExponent> check_factorization(const GeneratorTable& t, const JordanData& jd) {
  if (t.n != jd.n()) throw std::invalid_argument("table and Jordan data sizes differ");
  return factorization_profile(row_polynomials(t), jd);
}

std::vector<FactorExponent> check_factorization_symbols(const std::map<TableKey, CPoly>& symbols,
                                                        const JordanData& jd) {
  std::vector<RingPoly<CPoly>> rows;
  for (int l = 1; l <= jd.n(); ++l) rows.push_back(symbol_row_polynomial(symbols, jd.n(), l));
  return factorization_profile(rows, jd);
}

bool factorization_ok(const std::vector<FactorExponent>& profile) {
  for (const auto& fe : profile)
    if (fe.achieved < fe.required) return false;
  return true;
}

/* ---- identities --------------------------------------------------------- */

bool check_loop_binomial(int n) {
  auto loop = loop_matrix(n);
  LoopElement lzero(n);
  LoopElement lone = LoopElement::scalar(n, Rational(1));

  using LPoly = RingPoly<LoopElement>;
  RMatrix<LPoly> shifted(n, std::vector<LPoly>(n, LPoly(lzero)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      shifted[i][j] = LPoly::from_coeffs(lzero, {loop[i][j], i == j ? lone : lzero});

  LPoly expansion = cdet(shifted);
  for (int m = 0; m <= n; ++m) {
    LoopElement lhs = expansion.at(n - m);
    LoopElement rhs = m == 0 ? lone : projector_trace(Projector::Antisymmetrizer, m, loop);
    if (!(lhs == rhs)) return false;
  }

  LoopElement cd = cdet(loop);
  for (int m = 1; m <= n; ++m) {
    auto fam = ss_family(SsFamily::Phi, m, n);
    for (int a = 0; a <= m; ++a)
      if (!(fam[size_t(a)] == cd.tau_coefficient(n - a) * binomial(n - a, m - a))) return false;
  }
  return true;
}

bool check_dop_binomial(const QMatrix& mu) {
  require_square(mu);
  const int n = mu.rows();
  require_symmetrizer_scale(n, "the evaluated binomial check");
  auto op = operator_matrix(mu);
  DOp cd = cdet(op);

  auto series_at = [](const DOp& d, int l) {
    std::map<int, UElement> out;
    for (const auto& [key, u] : d.terms())
      if (key.l == l) out.emplace(key.k, u);
    return out;
  };

  for (int m = 1; m <= n; ++m) {
    DOp tr = projector_trace(Projector::Antisymmetrizer, m, op);
    Rational sign((n - m) % 2 == 0 ? 1 : -1);
    for (int a = 0; a <= m; ++a) {
      auto lhs = series_at(tr, m - a);
      auto rhs = series_at(cd, n - a);
      Rational scale = sign * binomial(n - a, m - a);
      for (auto& [k, u] : rhs) u = u * scale;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

struct SymbolSeriesSet {
  std::vector<ZPoly> phi, psi, theta;  // index m; phi[0] = psi[0] = 1
};

SymbolSeriesSet symbol_series_set(const QMatrix& mu) {
  const int n = mu.rows();
  SymbolSeriesSet s;
  s.phi.push_back(zpoly_one(n));
  s.psi.push_back(zpoly_one(n));
  s.theta.push_back(zpoly_one(n));  // unused slot 0
  for (int m = 1; m <= n; ++m) {
    s.phi.push_back(symbol_series(Family::Phi, m, mu));
    s.psi.push_back(symbol_series(Family::PsiMM, m, mu));
    s.theta.push_back(symbol_series(Family::ThetaMM, m, mu));
  }
  return s;
}

}  // namespace

bool check_macmahon(const QMatrix& mu) {
  require_square(mu);
  require_symmetrizer_scale(mu.rows(), "the MacMahon check");
  auto s = symbol_series_set(mu);
  for (int m = 1; m <= mu.rows(); ++m) {
    ZPoly acc(CPoly(VarTable::gl(mu.rows())));
    for (int l = 0; l <= m; ++l)
      acc = acc + s.phi[size_t(l)] * s.psi[size_t(m - l)] * Rational(l % 2 == 0 ? 1 : -1);
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool check_newton(const QMatrix& mu) {
  require_square(mu);
  require_symmetrizer_scale(mu.rows(), "the Newton check");
  auto s = symbol_series_set(mu);
  for (int m = 1; m <= mu.rows(); ++m) {
    ZPoly rhs(CPoly(VarTable::gl(mu.rows())));
    for (int l = 1; l <= m; ++l)
      rhs = rhs + s.theta[size_t(l)] * s.phi[size_t(m - l)] * Rational(l % 2 == 1 ? 1 : -1);
    if (!(s.phi[size_t(m)] * Rational(m) == rhs)) return false;
  }
  return true;
}

TriangularChange triangular_change(const QMatrix& mu) {
  require_square(mu);
  require_symmetrizer_scale(mu.rows(), "the triangular change of family");
  auto phi = generator_table(Family::Phi, mu);
  auto varphi = generator_table(Family::Varphi, mu);

  TriangularChange out;
  out.ok = true;
  for (int m = 1; m <= mu.rows(); ++m) {
    for (int k = 0; k < m; ++k) {
      UElement target = phi.entry(m, k) - varphi.entry(m, k);
      std::vector<UElement> columns;
      for (int r = k + 1; r <= m - 1; ++r) columns.push_back(varphi.entry(r, k));
      if (columns.empty()) {
        if (!target.is_zero()) out.ok = false;
        out.constants[{m, k}] = {};
        continue;
      }
      auto sol = solve_in_pbw(target, columns);
      if (!sol) {
        out.ok = false;
      } else {
        out.constants[{m, k}] = *sol;
      }
    }
  }
  return out;
}

IdentityReport check_identities(const QMatrix& mu) {
  require_square(mu);
  const int n = mu.rows();
  IdentityReport r;
  if (n <= 3) r.loop_binomial = check_loop_binomial(n);
  if (n <= 4) {
    r.dop_binomial = check_dop_binomial(mu);
    r.macmahon = check_macmahon(mu);
    r.newton = check_newton(mu);
    auto tri = triangular_change(mu);
    r.triangular = tri.ok;
    r.triangular_constants = std::move(tri.constants);
  }
  return r;
}

RowDependence excluded_dependence(const GeneratorTable& t, const SkewSelection& sel) {
  if (t.n != sel.n) throw std::invalid_argument("table and selection sizes differ");
  RowDependence out;
  out.ok = true;
  for (const auto& [m, k] : sel.excluded) {
    const int l = m - k;
    std::vector<UElement> columns;
    for (const auto& [rm, rk] : sel.retained)
      if (rm - rk == l) columns.push_back(t.entry(rm, rk));
    auto sol = solve_in_pbw(t.entry(m, k), columns);
    if (!sol) {
      out.ok = false;
    } else {
      out.coefficients[{m, k}] = *sol;
    }
  }
  return out;
}

UElement varphi_closed_form(const QMatrix& mu, int m, int k) {
  require_square(mu);
  const int n = mu.rows();
  require_symmetrizer_scale(n, "the closed-form shifted trace");
  if (m < 1 || m > n || k < 0 || k > m) throw std::invalid_argument("need 1 <= m <= n and 0 <= k <= m");

  RMatrix<UElement> numeric(n, std::vector<UElement>(n, UElement(n)));
  RMatrix<UElement> generators(n, std::vector<UElement>(n, UElement(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      numeric[i][j] = UElement::scalar(n, mu.at(i, j));
      generators[i][j] = UElement::gen(n, i + 1, j + 1);
    }
  std::vector<RMatrix<UElement>> slots;
  for (int a = 0; a < m; ++a) slots.push_back(a < k ? numeric : generators);
  return projector_trace_mixed(Projector::Antisymmetrizer, slots) * binomial(m, k);
}

}  // namespace shiftarg
