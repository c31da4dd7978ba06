#pragma once

#include <string>
#include <vector>

#include "avoidance.hpp"

namespace altperm {

// One row of a reference table: the patterns sharing the row, grouped as
// printed (each inner group is a cluster forced equal by the class symmetry),
// plus the expected count per column.
struct TableRow {
    std::vector<std::vector<std::string>> groups;
    std::vector<long long> counts;

    std::vector<std::string> patterns() const;  // flattened
    std::string label() const;                  // "2413, (1423, 2314)"
};

struct ExpectedTable {
    int id = 0;
    std::string title;
    ClassSpec cls;
    std::vector<int> ns;
    std::vector<TableRow> rows;
};

// Bundled count tables (ids 1..5): length-4 and length-5 pattern avoidance in
// alternating permutations of odd/even length, and in permutations with
// descent set {3, 6, ...}.
const std::vector<ExpectedTable>& reference_tables();
const ExpectedTable& reference_table(int id);  // throws UsageError outside 1..5

}  // namespace altperm
