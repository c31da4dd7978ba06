#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"

namespace altperm {

struct Label {
    int a = 0;
    int b = 0;
    auto operator<=>(const Label&) const = default;
};

std::string to_string(const Label& l);  // "(a,b)"

// A two-parameter succession rule. Every rule used here has the shape
//   (a, b) -> { (x, y) : x_min <= x <= a + 1,  x + y_gap <= y <= b + 2 },
// so a rule is plain data: the root label plus the two constants. That shape
// is also what makes exact level counting cheap (suffix sums over a grid).
struct SuccessionRule {
    std::string name;
    Label root;
    int x_min = 1;
    int y_gap = 1;

    std::vector<Label> children(Label parent) const;
    bool is_child_label(Label parent, Label child) const;
};

const SuccessionRule& rect_syt_rule();       // root (2,3); 2<=x<=a+1, x+1<=y<=b+2
const SuccessionRule& alt_even_1234_rule();  // root (2,3); same bounds
const SuccessionRule& alt_even_2143_rule();  // root (1,3); 1<=x<=a+1, x+2<=y<=b+2
const SuccessionRule& alt_odd_2143_rule();   // root (0,2); same bounds

// Lookup by CLI name: rect-syt, alt-even-1234, alt-even-2143, alt-odd-2143.
// Throws UsageError for anything else.
const SuccessionRule& rule_by_name(std::string_view name);
std::vector<std::string> rule_names();

using LabelDistribution = std::map<Label, BigInt>;

// Exact multiset of labels at `depth` (the root sits at depth 0), computed by
// propagating label multiplicities; nodes are never materialized.
LabelDistribution label_distribution(const SuccessionRule& rule, int depth);
BigInt level_count(const SuccessionRule& rule, int depth);

// True iff for every d <= depth the label distribution of `a`, with (da, db)
// added to each label, equals that of `b`. Equal distributions level by level
// certify that the trees are isomorphic to the checked depth.
bool shifted_isomorphic(const SuccessionRule& a, const SuccessionRule& b, int da, int db, int depth);

}  // namespace altperm
