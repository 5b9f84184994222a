#include "shiftarg/young.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shiftarg {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("diagram rows must be weakly decreasing");
  }
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

int YoungDiagram::row(int l) const {
  if (l < 1) throw std::invalid_argument("row index is 1-based");
  return l <= num_rows() ? rows_[l - 1] : 0;
}

bool YoungDiagram::contains(const YoungDiagram& other) const {
  if (other.num_rows() > num_rows()) return false;
  for (int l = 1; l <= other.num_rows(); ++l)
    if (other.row(l) > row(l)) return false;
  return true;
}

YoungDiagram YoungDiagram::conjugate() const {
  std::vector<int> cols;
  for (int c = 1; !rows_.empty() && c <= rows_[0]; ++c) {
    int count = 0;
    for (int r : rows_)
      if (r >= c) ++count;
    cols.push_back(count);
  }
  return YoungDiagram(std::move(cols));
}

std::string YoungDiagram::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i];
  os << ')';
  return os.str();
}

}  // namespace shiftarg
