#pragma once

#include <string>
#include <vector>

namespace shiftarg {

/* Partition with weakly decreasing positive rows (trailing zeros trimmed). */
class YoungDiagram {
public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  int size() const;                     // number of boxes
  int num_rows() const { return int(rows_.size()); }
  int row(int l) const;                 // 1-based; 0 past the last row
  const std::vector<int>& rows() const { return rows_; }

  bool contains(const YoungDiagram& other) const;
  YoungDiagram conjugate() const;

  bool operator==(const YoungDiagram& o) const = default;

  std::string str() const;  // "(4,2,1)"

private:
  std::vector<int> rows_;
};

}  // namespace shiftarg
