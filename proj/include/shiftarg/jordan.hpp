#pragma once

#include "shiftarg/qmatrix.hpp"
#include "shiftarg/rational.hpp"
#include "shiftarg/young.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shiftarg {

struct JordanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JordanBlockSet {
  Rational eigenvalue;
  YoungDiagram blocks;  // Jordan block sizes, weakly decreasing
};

/* Jordan type of a matrix: distinct eigenvalues with their block-size
 * partitions.  delta(i, l) counts the boxes of the i-th partition strictly
 * below row l; gamma sums these over all eigenvalues. */
class JordanData {
 public:
  JordanData(int n, std::vector<JordanBlockSet> parts);

  int n() const { return n_; }
  const std::vector<JordanBlockSet>& parts() const { return parts_; }

  int delta(int part_index, int l) const;
  YoungDiagram gamma() const;

  /* dim gl_n^mu by the partition formula: sum over eigenvalues of
   * alpha_1 + 3 alpha_2 + ... + (2s-1) alpha_s */
  int centralizer_dim() const;

 private:
  int n_;
  std::vector<JordanBlockSet> parts_;  // sorted by eigenvalue
};

/* Jordan type from the matrix itself.  Eigenvalues come from the rational
 * roots of the characteristic polynomial; block sizes from the rank
 * sequence rank((mu - lambda)^k).  Throws JordanError when the
 * characteristic polynomial does not split over Q. */
JordanData jordan_data(const QMatrix& mu);

/* canonical block matrix of the given Jordan type (upper Jordan blocks,
 * parts in stored order, blocks within a part by decreasing size) */
QMatrix jordan_matrix(const JordanData& jd);

/* The staircase Gamma = (n, n-1, ..., 1) indexes the generator family: its
 * (i,j) box carries the table entry (m,k) = (n-j+1, n-i-j+1).  The boxes of
 * gamma are excluded; the rest are retained. */
struct SkewSelection {
  int n = 0;
  YoungDiagram gamma;
  std::vector<std::pair<int, int>> retained;  // (m,k), sorted
  std::vector<std::pair<int, int>> excluded;  // (m,k), sorted
  int expected_rank = 0;                      // n(n+1)/2 - |gamma|
};

SkewSelection selection(int n, const YoungDiagram& gamma);

}  // namespace shiftarg
