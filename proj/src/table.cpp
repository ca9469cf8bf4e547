#include "autocount/table.hpp"

namespace autocount {

namespace {

TableEntry entry(int n, const std::string& la, const std::string& lg, const char* delta) {
  CycleStructure a = parse_cycle_structure(la, n);
  return TableEntry{n, a, a, parse_cycle_structure(lg, n), delta};
}

}  // namespace

const std::vector<TableEntry>& reference_table() {
  static const std::vector<TableEntry> table = {
      // order 8, alpha = beta an 8-cycle
      entry(8, "(0,0,0,0,0,0,0,1)", "(0,0,0,2,0,0,0,0)", "1152"),
      entry(8, "(0,0,0,0,0,0,0,1)", "(0,2,0,1,0,0,0,0)", "1408"),
      entry(8, "(0,0,0,0,0,0,0,1)", "(0,4,0,0,0,0,0,0)", "3456"),
      entry(8, "(0,0,0,0,0,0,0,1)", "(2,1,0,1,0,0,0,0)", "1408"),
      entry(8, "(0,0,0,0,0,0,0,1)", "(2,3,0,0,0,0,0,0)", "3456"),
      entry(8, "(0,0,0,0,0,0,0,1)", "(4,0,0,1,0,0,0,0)", "3456"),
      entry(8, "(0,0,0,0,0,0,0,1)", "(4,2,0,0,0,0,0,0)", "8064"),
      entry(8, "(0,0,0,0,0,0,0,1)", "(6,1,0,0,0,0,0,0)", "17280"),
      entry(8, "(0,0,0,0,0,0,0,1)", "(8,0,0,0,0,0,0,0)", "40320"),
      // order 8, alpha = beta two 4-cycles
      entry(8, "(0,0,0,2,0,0,0,0)", "(0,0,0,2,0,0,0,0)", "106496"),
      entry(8, "(0,0,0,2,0,0,0,0)", "(0,2,0,1,0,0,0,0)", "188416"),
      entry(8, "(0,0,0,2,0,0,0,0)", "(0,4,0,0,0,0,0,0)", "811008"),
      entry(8, "(0,0,0,2,0,0,0,0)", "(2,1,0,1,0,0,0,0)", "253952"),
      entry(8, "(0,0,0,2,0,0,0,0)", "(2,3,0,0,0,0,0,0)", "1007616"),
      entry(8, "(0,0,0,2,0,0,0,0)", "(4,0,0,1,0,0,0,0)", "712704"),
      entry(8, "(0,0,0,2,0,0,0,0)", "(4,2,0,0,0,0,0,0)", "2727936"),
      entry(8, "(0,0,0,2,0,0,0,0)", "(6,1,0,0,0,0,0,0)", "7741440"),
      entry(8, "(0,0,0,2,0,0,0,0)", "(8,0,0,0,0,0,0,0)", "23224320"),
      // order 8, mixed structures
      entry(8, "(0,1,0,0,0,1,0,0)", "(2,0,0,0,0,1,0,0)", "3456"),
      entry(8, "(0,1,0,0,0,1,0,0)", "(2,0,2,0,0,0,0,0)", "19008"),
      entry(8, "(1,0,0,0,0,0,1,0)", "(1,0,0,0,0,0,1,0)", "931"),
      entry(8, "(0,2,0,1,0,0,0,0)", "(0,2,0,1,0,0,0,0)", "16384"),
      entry(8, "(0,2,0,1,0,0,0,0)", "(2,1,0,1,0,0,0,0)", "16384"),
      entry(8, "(0,2,0,1,0,0,0,0)", "(4,0,0,1,0,0,0,0)", "147456"),
      entry(8, "(2,0,0,0,0,1,0,0)", "(2,0,0,0,0,1,0,0)", "19584"),
      entry(8, "(0,4,0,0,0,0,0,0)", "(6,1,0,0,0,0,0,0)", "198747095040"),
      entry(8, "(0,4,0,0,0,0,0,0)", "(8,0,0,0,0,0,0,0)", "828396011520"),
      entry(8, "(2,1,0,1,0,0,0,0)", "(2,1,0,1,0,0,0,0)", "8192"),
      entry(8, "(3,0,0,0,1,0,0,0)", "(3,0,0,0,1,0,0,0)", "388800"),
      entry(8, "(4,0,0,1,0,0,0,0)", "(4,0,0,1,0,0,0,0)", "7962624"),
      entry(8, "(4,2,0,0,0,0,0,0)", "(4,2,0,0,0,0,0,0)", "509607936"),
      // order 9, alpha = beta a 9-cycle
      entry(9, "(0,0,0,0,0,0,0,0,1)", "(0,0,0,0,0,0,0,0,1)", "2025"),
      entry(9, "(0,0,0,0,0,0,0,0,1)", "(0,0,3,0,0,0,0,0,0)", "7128"),
      entry(9, "(0,0,0,0,0,0,0,0,1)", "(3,0,2,0,0,0,0,0,0)", "12960"),
      entry(9, "(0,0,0,0,0,0,0,0,1)", "(6,0,1,0,0,0,0,0,0)", "71280"),
      entry(9, "(0,0,0,0,0,0,0,0,1)", "(9,0,0,0,0,0,0,0,0)", "362880"),
      // order 9, mixed structures
      entry(9, "(0,0,1,0,0,1,0,0,0)", "(0,0,1,0,0,1,0,0,0)", "15552"),
      entry(9, "(0,0,1,0,0,1,0,0,0)", "(0,3,1,0,0,0,0,0,0)", "124416"),
      entry(9, "(0,0,1,0,0,1,0,0,0)", "(3,0,0,0,0,1,0,0,0)", "62208"),
      entry(9, "(0,0,1,0,0,1,0,0,0)", "(3,3,0,0,0,0,0,0,0)", "1244160"),
      entry(9, "(1,0,0,0,0,0,0,1,0)", "(1,0,0,0,0,0,0,1,0)", "4096"),
      entry(9, "(0,0,3,0,0,0,0,0,0)", "(6,0,1,0,0,0,0,0,0)", "403813278720"),
      entry(9, "(0,0,3,0,0,0,0,0,0)", "(9,0,0,0,0,0,0,0,0)", "948109639680"),
      entry(9, "(1,0,0,2,0,0,0,0,0)", "(1,0,0,2,0,0,0,0,0)", "12189696"),
      entry(9, "(1,1,0,0,0,1,0,0,0)", "(1,1,0,0,0,1,0,0,0)", "69120"),
      entry(9, "(2,0,0,0,0,0,1,0,0)", "(2,0,0,0,0,0,1,0,0)", "101136"),
      entry(9, "(3,0,0,0,0,1,0,0,0)", "(3,0,0,0,0,1,0,0,0)", "3110400"),
      entry(9, "(4,0,0,0,1,0,0,0,0)", "(4,0,0,0,1,0,0,0,0)", "199065600"),
  };
  return table;
}

}  // namespace autocount
