#include "shiftarg/jordan.hpp"

#include <algorithm>
#include <sstream>

namespace shiftarg {

JordanData::JordanData(int n, std::vector<JordanBlockSet> parts) : n_(n), parts_(std::move(parts)) {
  if (n < 1) throw JordanError("Jordan data needs n >= 1");
  if (parts_.empty()) throw JordanError("Jordan data needs at least one eigenvalue");
  std::sort(parts_.begin(), parts_.end(),
            [](const JordanBlockSet& a, const JordanBlockSet& b) { return a.eigenvalue < b.eigenvalue; });
  int total = 0;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].blocks.size() == 0) throw JordanError("empty block partition");
    if (i > 0 && parts_[i - 1].eigenvalue == parts_[i].eigenvalue)
      throw JordanError("eigenvalues must be pairwise distinct");
    total += parts_[i].blocks.size();
  }
  if (total != n) throw JordanError("block sizes must sum to n");
}

int JordanData::delta(int part_index, int l) const {
  const YoungDiagram& alpha = parts_.at(size_t(part_index)).blocks;
  int boxes = 0;
  for (int row = l + 1; row <= alpha.num_rows(); ++row) boxes += alpha.row(row);
  return boxes;
}

YoungDiagram JordanData::gamma() const {
  std::vector<int> rows;
  for (int l = 1; l <= n_; ++l) {
    int g = 0;
    for (size_t i = 0; i < parts_.size(); ++i) g += delta(int(i), l);
    if (g == 0) break;
    rows.push_back(g);
  }
  return YoungDiagram(rows);
}

int JordanData::centralizer_dim() const {
  int dim = 0;
  for (const auto& part : parts_) {
    const auto& rows = part.blocks.rows();
    for (size_t j = 0; j < rows.size(); ++j) dim += (2 * int(j) + 1) * rows[j];
  }
  return dim;
}

JordanData jordan_data(const QMatrix& mu) {
  if (mu.rows() != mu.cols()) throw JordanError("mu must be square");
  const int n = mu.rows();
  RationalRoots rr = rational_roots(charpoly(mu));
  if (rr.remainder_degree > 0)
    throw JordanError(
        "characteristic polynomial does not split over the rationals; "
        "supply the Jordan type directly instead of the matrix");

  std::vector<JordanBlockSet> parts;
  for (const auto& [lambda, mult] : rr.roots) {
    QMatrix shifted = mu - QMatrix::scalar(n, lambda);
    // b_k = rank(shifted^(k-1)) - rank(shifted^k) counts blocks of size >= k;
    // the partition of block sizes is the conjugate of (b_1, b_2, ...)
    std::vector<int> b;
    QMatrix power = QMatrix::identity(n);
    int prev = n;
    for (int k = 1; k <= mult; ++k) {
      power = power * shifted;
      int r = rank(power);
      b.push_back(prev - r);
      prev = r;
      if (r == n - mult) break;
    }
    parts.push_back({lambda, YoungDiagram(b).conjugate()});
  }
  return JordanData(n, std::move(parts));
}

QMatrix jordan_matrix(const JordanData& jd) {
  QMatrix m(jd.n(), jd.n());
  int pos = 0;
  for (const auto& part : jd.parts())
    for (int size : part.blocks.rows()) {
      for (int p = 0; p < size; ++p) {
        m.at(pos + p, pos + p) = part.eigenvalue;
        if (p + 1 < size) m.at(pos + p, pos + p + 1) = Rational(1);
      }
      pos += size;
    }
  return m;
}

SkewSelection selection(int n, const YoungDiagram& gamma) {
  SkewSelection sel;
  sel.n = n;
  sel.gamma = gamma;
  for (int i = 1; i <= n; ++i)
    if (gamma.row(i) > n - i + 1) {
      std::ostringstream os;
      os << "gamma " << gamma.str() << " does not fit inside the staircase of gl_" << n;
      throw std::invalid_argument(os.str());
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - i + 1; ++j) {
      std::pair<int, int> box{n - j + 1, n - i - j + 1};  // (m, k)
      (j <= gamma.row(i) ? sel.excluded : sel.retained).push_back(box);
    }
  std::sort(sel.retained.begin(), sel.retained.end());
  std::sort(sel.excluded.begin(), sel.excluded.end());
  sel.expected_rank = n * (n + 1) / 2 - gamma.size();
  return sel;
}

}  // namespace shiftarg
