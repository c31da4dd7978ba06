#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "gentree.hpp"

namespace altperm {

// A Young diagram. Shifted shapes have strictly decreasing rows, with row r
// (0-based) occupying absolute columns r .. r+rows[r]-1.
struct Shape {
    std::vector<int> rows;
    bool shifted = false;

    Shape() = default;
    Shape(std::vector<int> rows, bool shifted);  // throws std::invalid_argument

    int row_count() const { return static_cast<int>(rows.size()); }
    int box_count() const;
    int row_length(int r) const { return rows[static_cast<std::size_t>(r)]; }
    int col_offset(int r) const { return shifted ? r : 0; }
    int last_col(int r) const { return col_offset(r) + row_length(r) - 1; }

    bool operator==(const Shape&) const = default;
    auto operator<=>(const Shape&) const = default;
    std::string str() const;  // "3,2,1" (+ " shifted")
};

// A standard filling: entries 1..m, strictly increasing along rows and down
// columns of the (possibly shifted) diagram.
class Tableau {
public:
    Tableau(Shape shape, std::vector<std::vector<int>> rows);  // validates

    const Shape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    // 0-based row and absolute column.
    int entry(int r, int abs_col) const;

    std::string str() const;  // rows joined by ';', entries by ','
    static Tableau parse(std::string_view text, bool shifted);

    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;

private:
    Shape shape_;
    std::vector<std::vector<int>> rows_;
};

// Enumeration by placing 1..m into corner-feasible cells, in increasing order.
void for_each_tableau(const Shape& shape, const std::function<void(const Tableau&)>& fn);
std::vector<Tableau> generate_syt(const Shape& shape);          // requires !shape.shifted
std::vector<Tableau> generate_shifted_syt(const Shape& shape);  // requires shape.shifted

// m! over the product of hook lengths.
BigInt hook_count(const Shape& shape);          // requires !shape.shifted
// Shifted analogue: the hook of a box whose column ends on the diagonal
// continues into the following row.
BigInt shifted_hook_count(const Shape& shape);  // requires shape.shifted

// Last-column labels and child construction for the <n,n,n> tree...
Label syt_label(const Tableau& t);                 // (3n+1-S(2,n), 3n+1-S(1,n))
Tableau syt_child(const Tableau& t, Label target);
// ...and for the shifted <n+2,n+1,n> tree.
Label shsyt_label(const Tableau& t);
Tableau shsyt_child(const Tableau& t, Label target);

// Drop the last column and renumber entries 1..m' preserving order: the
// parent in both generating trees.
Tableau remove_last_column(const Tableau& t);

}  // namespace altperm
