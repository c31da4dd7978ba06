#include "gentree.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace altperm {

std::string to_string(const Label& l) {
    return "(" + std::to_string(l.a) + "," + std::to_string(l.b) + ")";
}

std::vector<Label> SuccessionRule::children(Label parent) const {
    std::vector<Label> out;
    for (int x = x_min; x <= parent.a + 1; ++x)
        for (int y = x + y_gap; y <= parent.b + 2; ++y) out.push_back(Label{x, y});
    return out;
}

bool SuccessionRule::is_child_label(Label parent, Label child) const {
    return child.a >= x_min && child.a <= parent.a + 1 && child.b >= child.a + y_gap &&
           child.b <= parent.b + 2;
}

const SuccessionRule& rect_syt_rule() {
    static const SuccessionRule r{"rect-syt", Label{2, 3}, 2, 1};
    return r;
}

const SuccessionRule& alt_even_1234_rule() {
    static const SuccessionRule r{"alt-even-1234", Label{2, 3}, 2, 1};
    return r;
}

const SuccessionRule& alt_even_2143_rule() {
    static const SuccessionRule r{"alt-even-2143", Label{1, 3}, 1, 2};
    return r;
}

const SuccessionRule& alt_odd_2143_rule() {
    static const SuccessionRule r{"alt-odd-2143", Label{0, 2}, 1, 2};
    return r;
}

const SuccessionRule& rule_by_name(std::string_view name) {
    for (const SuccessionRule* r :
         {&rect_syt_rule(), &alt_even_1234_rule(), &alt_even_2143_rule(), &alt_odd_2143_rule()})
        if (r->name == name) return *r;
    throw UsageError("unknown rule '" + std::string(name) + "'");
}

std::vector<std::string> rule_names() {
    return {rect_syt_rule().name, alt_even_1234_rule().name, alt_even_2143_rule().name,
            alt_odd_2143_rule().name};
}

namespace {

// Multiplicity grid indexed by [a][b]. At depth d every label satisfies
// a <= root.a + d and b <= root.b + 2d, so the grid stays O(depth^2).
using Grid = std::vector<std::vector<BigInt>>;

Grid propagate(const SuccessionRule& rule, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    const int amax = rule.root.a + depth;
    const int bmax = rule.root.b + 2 * depth;
    Grid cur(static_cast<std::size_t>(amax) + 1, std::vector<BigInt>(static_cast<std::size_t>(bmax) + 1));
    cur[static_cast<std::size_t>(rule.root.a)][static_cast<std::size_t>(rule.root.b)] = 1;

    for (int d = 0; d < depth; ++d) {
        const int alim = rule.root.a + d;       // occupied bounds at depth d
        const int blim = rule.root.b + 2 * d;
        // suffix[a][b] = sum of cur over labels >= (a, b) componentwise.
        Grid suffix(static_cast<std::size_t>(alim) + 2,
                    std::vector<BigInt>(static_cast<std::size_t>(blim) + 2));
        for (int a = alim; a >= 0; --a)
            for (int b = blim; b >= 0; --b)
                suffix[a][b] = cur[a][b] + suffix[a + 1][b] + suffix[a][b + 1] - suffix[a + 1][b + 1];
        // A child (x, y) collects every parent with a >= x - 1 and b >= y - 2.
        Grid next(static_cast<std::size_t>(amax) + 1,
                  std::vector<BigInt>(static_cast<std::size_t>(bmax) + 1));
        for (int x = rule.x_min; x <= alim + 1; ++x)
            for (int y = x + rule.y_gap; y <= blim + 2; ++y)
                next[x][y] = suffix[x - 1][y - 2];
        cur.swap(next);
    }
    return cur;
}

}  // namespace

LabelDistribution label_distribution(const SuccessionRule& rule, int depth) {
    Grid grid = propagate(rule, depth);
    LabelDistribution dist;
    for (int a = 0; a < static_cast<int>(grid.size()); ++a)
        for (int b = 0; b < static_cast<int>(grid[static_cast<std::size_t>(a)].size()); ++b) {
            const BigInt& m = grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (m != 0) dist[Label{a, b}] = m;
        }
    return dist;
}

BigInt level_count(const SuccessionRule& rule, int depth) {
    Grid grid = propagate(rule, depth);
    BigInt total = 0;
    for (const auto& row : grid)
        for (const BigInt& m : row) total += m;
    return total;
}

bool shifted_isomorphic(const SuccessionRule& a, const SuccessionRule& b, int da, int db, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    for (int d = 0; d <= depth; ++d) {
        LabelDistribution da_dist = label_distribution(a, d);
        LabelDistribution db_dist = label_distribution(b, d);
        LabelDistribution shifted;
        for (const auto& [label, mult] : da_dist) shifted[Label{label.a + da, label.b + db}] = mult;
        if (shifted != db_dist) return false;
    }
    return true;
}

}  // namespace altperm
