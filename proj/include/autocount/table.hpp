#ifndef AUTOCOUNT_TABLE_HPP
#define AUTOCOUNT_TABLE_HPP

#include <string>
#include <vector>

#include "autocount/permutations.hpp"

namespace autocount {

// Known delta values for autotopism cycle structures of orders 8 and 9,
// used by the verify-table command as a regression corpus.
struct TableEntry {
  int n;
  CycleStructure la, lb, lg;
  std::string delta;  // decimal; several entries exceed 64 bits
};

const std::vector<TableEntry>& reference_table();

}  // namespace autocount

#endif
