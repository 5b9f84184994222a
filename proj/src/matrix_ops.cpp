#include "shiftarg/matrix_ops.hpp"

namespace shiftarg {

std::map<std::pair<unsigned, unsigned>, Rational> projector_matrix(Projector kind, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("projector needs m, n >= 1");
  if (kind == Projector::Antisymmetrizer && m > n)
    throw std::invalid_argument("antisymmetrizer vanishes identically for m > n");
  std::map<std::pair<unsigned, unsigned>, Rational> out;
  Rational scale = factorial(m).inv();
  std::vector<int> idx(m, 0);
  for (;;) {
    unsigned row = 0;
    for (int a = m; a-- > 0;) row = row * unsigned(n) + unsigned(idx[a]);
    detail::for_each_permutation(m, [&](const std::vector<int>& s, int sign) {
      // column tuple j_b = i_{s(b)}
      unsigned col = 0;
      for (int b = m; b-- > 0;) col = col * unsigned(n) + unsigned(idx[s[b]]);
      Rational w = kind == Projector::Antisymmetrizer ? Rational(sign) * scale : scale;
      out[{row, col}] += w;
    });
    int a = 0;
    while (a < m && ++idx[a] == n) idx[a++] = 0;
    if (a == m) break;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace shiftarg
