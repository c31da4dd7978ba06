#include "tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace altperm {

namespace {

int parse_entry(std::string_view tok) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad tableau entry '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Shape::Shape(std::vector<int> r, bool s) : rows(std::move(r)), shifted(s) {
    if (rows.empty()) throw std::invalid_argument("shape must have at least one row");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1) throw std::invalid_argument("shape rows must be positive");
        if (i > 0) {
            if (shifted ? rows[i] >= rows[i - 1] : rows[i] > rows[i - 1])
                throw std::invalid_argument(shifted ? "shifted shape rows must strictly decrease"
                                                    : "shape rows must weakly decrease");
        }
    }
}

int Shape::box_count() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::string Shape::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(rows[i]);
    }
    if (shifted) out += " shifted";
    return out;
}

Tableau::Tableau(Shape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.row_count())
        throw std::invalid_argument("tableau row count does not match shape");
    const int m = shape_.box_count();
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int r = 0; r < shape_.row_count(); ++r) {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != shape_.row_length(r))
            throw std::invalid_argument("tableau row length does not match shape");
        for (std::size_t j = 0; j < row.size(); ++j) {
            const int v = row[j];
            if (v < 1 || v > m) throw std::invalid_argument("tableau entry out of range 1..m");
            if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("repeated tableau entry");
            seen[static_cast<std::size_t>(v)] = 1;
            if (j > 0 && row[j - 1] >= v)
                throw std::invalid_argument("tableau rows must strictly increase");
        }
        if (r > 0) {
            // Vertical neighbours share an absolute column.
            const auto& above = rows_[static_cast<std::size_t>(r) - 1];
            const int shift = shape_.col_offset(r) - shape_.col_offset(r - 1);
            for (std::size_t j = 0; j < row.size(); ++j) {
                const std::size_t aj = j + static_cast<std::size_t>(shift);
                if (aj < above.size() && above[aj] >= row[j])
                    throw std::invalid_argument("tableau columns must strictly increase");
            }
        }
    }
}

int Tableau::entry(int r, int abs_col) const {
    const int j = abs_col - shape_.col_offset(r);
    if (r < 0 || r >= shape_.row_count() || j < 0 || j >= shape_.row_length(r))
        throw std::invalid_argument("tableau coordinates outside the diagram");
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
}

std::string Tableau::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out.push_back(';');
        for (std::size_t j = 0; j < rows_[r].size(); ++j) {
            if (j) out.push_back(',');
            out += std::to_string(rows_[r][j]);
        }
    }
    return out;
}

Tableau Tableau::parse(std::string_view text, bool shifted) {
    std::vector<std::vector<int>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string_view row_text =
            text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        std::vector<int> row;
        std::size_t rs = 0;
        while (rs <= row_text.size()) {
            std::size_t comma = row_text.find(',', rs);
            row.push_back(parse_entry(row_text.substr(
                rs, comma == std::string_view::npos ? std::string_view::npos : comma - rs)));
            if (comma == std::string_view::npos) break;
            rs = comma + 1;
        }
        rows.push_back(std::move(row));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    std::vector<int> lens;
    lens.reserve(rows.size());
    for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
    return Tableau(Shape(std::move(lens), shifted), std::move(rows));
}

void for_each_tableau(const Shape& shape, const std::function<void(const Tableau&)>& fn) {
    const int k = shape.row_count();
    const int m = shape.box_count();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) rows[static_cast<std::size_t>(r)].reserve(shape.rows[static_cast<std::size_t>(r)]);

    // Placing v into row r is legal when the cell above the next free slot is
    // already filled; for shifted rows the slot above sits one box further in.
    const int need_gap = shape.shifted ? 2 : 1;
    auto place = [&](auto&& self, int v) -> void {
        if (v > m) {
            fn(Tableau(shape, rows));
            return;
        }
        for (int r = 0; r < k; ++r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            const int filled = static_cast<int>(row.size());
            if (filled >= shape.row_length(r)) continue;
            if (r > 0 &&
                static_cast<int>(rows[static_cast<std::size_t>(r) - 1].size()) < filled + need_gap)
                continue;
            row.push_back(v);
            self(self, v + 1);
            row.pop_back();
        }
    };
    place(place, 1);
}

std::vector<Tableau> generate_syt(const Shape& shape) {
    if (shape.shifted) throw std::domain_error("generate_syt expects an unshifted shape");
    std::vector<Tableau> out;
    for_each_tableau(shape, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> generate_shifted_syt(const Shape& shape) {
    if (!shape.shifted) throw std::domain_error("generate_shifted_syt expects a shifted shape");
    std::vector<Tableau> out;
    for_each_tableau(shape, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

BigInt hook_count(const Shape& shape) {
    if (shape.shifted) throw std::domain_error("hook_count expects an unshifted shape");
    const int k = shape.row_count();
    const int width = shape.rows[0];
    std::vector<int> col_height(static_cast<std::size_t>(width), 0);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < shape.row_length(r); ++c) ++col_height[static_cast<std::size_t>(c)];

    BigInt hooks = 1;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < shape.row_length(r); ++c) {
            const int arm = shape.row_length(r) - c - 1;
            const int leg = col_height[static_cast<std::size_t>(c)] - r - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(shape.box_count()) / hooks;
}

BigInt shifted_hook_count(const Shape& shape) {
    if (!shape.shifted) throw std::domain_error("shifted_hook_count expects a shifted shape");
    const int k = shape.row_count();
    BigInt hooks = 1;
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < shape.row_length(r); ++j) {
            const int c = r + j;  // absolute column
            const int arm = shape.row_length(r) - j - 1;
            int leg = 0;
            for (int r2 = r + 1; r2 < k; ++r2)
                if (r2 <= c && c <= shape.last_col(r2)) ++leg;
            // Column c bottoms out on the diagonal box (c, c) whenever that
            // box exists, and the hook then wraps into row c + 1.
            const int wrap = (c + 1 < k) ? shape.row_length(c + 1) : 0;
            hooks *= arm + leg + 1 + wrap;
        }
    return factorial(shape.box_count()) / hooks;
}

namespace {

// <n,n,n> for n >= 1?
int rect_cols(const Tableau& t) {
    const Shape& s = t.shape();
    if (s.shifted || s.row_count() != 3 || s.rows[0] != s.rows[1] || s.rows[1] != s.rows[2])
        throw std::domain_error("tableau shape must be n,n,n");
    return s.rows[0];
}

// Shifted <n+2,n+1,n>; returns n >= 0 (the <2,1> root counts as n = 0).
int staircase_index(const Tableau& t) {
    const Shape& s = t.shape();
    if (s.shifted) {
        if (s.rows == std::vector<int>{2, 1}) return 0;
        if (s.row_count() == 3 && s.rows[1] == s.rows[0] - 1 && s.rows[2] == s.rows[0] - 2 &&
            s.rows[2] >= 1)
            return s.rows[2];
    }
    throw std::domain_error("tableau shape must be shifted n+2,n+1,n");
}

// The common piecewise renumbering of parent entries under both child maps:
// entries below t1 stay, entries in [t1, t2) move up one, entries >= t2 move
// up two; the freed values t1 and t2 become the new column's top two boxes.
std::vector<std::vector<int>> shift_rows(const std::vector<std::vector<int>>& rows, int t1, int t2) {
    std::vector<std::vector<int>> out = rows;
    for (auto& row : out)
        for (int& v : row) v = v < t1 ? v : (v < t2 ? v + 1 : v + 2);
    return out;
}

}  // namespace

Label syt_label(const Tableau& t) {
    const int n = rect_cols(t);
    const int m = 3 * n;
    return Label{m + 1 - t.entry(1, n - 1), m + 1 - t.entry(0, n - 1)};
}

Tableau syt_child(const Tableau& t, Label target) {
    const int n = rect_cols(t);
    const Label parent = syt_label(t);
    const int x = target.a, y = target.b;
    if (!(2 <= x && x <= parent.a + 1 && x + 1 <= y && y <= parent.b + 2))
        throw std::domain_error("target label " + to_string(target) + " is not a child of " +
                                to_string(parent));
    const int t1 = 3 * n + 4 - y;  // new entry at (1, n+1)
    const int t2 = 3 * n + 4 - x;  // new entry at (2, n+1)
    auto rows = shift_rows(t.rows(), t1, t2);
    rows[0].push_back(t1);
    rows[1].push_back(t2);
    rows[2].push_back(3 * n + 3);
    return Tableau(Shape({n + 1, n + 1, n + 1}, false), std::move(rows));
}

Label shsyt_label(const Tableau& t) {
    const int n = staircase_index(t);
    const int c = n + 1;  // absolute 0-based index of the last column
    return Label{3 * n + 4 - t.entry(1, c), 3 * n + 4 - t.entry(0, c)};
}

Tableau shsyt_child(const Tableau& t, Label target) {
    const int n = staircase_index(t);
    const Label parent = shsyt_label(t);
    const int x = target.a, y = target.b;
    if (!(2 <= x && x <= parent.a + 1 && x + 1 <= y && y <= parent.b + 2))
        throw std::domain_error("target label " + to_string(target) + " is not a child of " +
                                to_string(parent));
    const int t1 = 3 * n + 7 - y;
    const int t2 = 3 * n + 7 - x;
    auto rows = shift_rows(t.rows(), t1, t2);
    rows.resize(3);  // the <2,1> root grows its third row here
    rows[0].push_back(t1);
    rows[1].push_back(t2);
    rows[2].push_back(3 * n + 6);
    return Tableau(Shape({n + 3, n + 2, n + 1}, true), std::move(rows));
}

Tableau remove_last_column(const Tableau& t) {
    const Shape& s = t.shape();
    int max_col = 0;
    for (int r = 0; r < s.row_count(); ++r) max_col = std::max(max_col, s.last_col(r));

    std::vector<std::vector<int>> rows;
    std::vector<int> lens;
    for (int r = 0; r < s.row_count(); ++r) {
        auto row = t.rows()[static_cast<std::size_t>(r)];
        if (s.last_col(r) == max_col) row.pop_back();
        if (row.empty()) continue;
        lens.push_back(static_cast<int>(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::domain_error("cannot remove the only column");

    // Renumber surviving entries by rank.
    std::vector<int> all;
    for (const auto& row : rows) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    for (auto& row : rows)
        for (int& v : row)
            v = static_cast<int>(std::lower_bound(all.begin(), all.end(), v) - all.begin()) + 1;
    return Tableau(Shape(std::move(lens), s.shifted), std::move(rows));
}

}  // namespace altperm
