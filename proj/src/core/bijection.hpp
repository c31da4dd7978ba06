#pragma once

#include <vector>

#include "avoidance.hpp"
#include "gentree.hpp"
#include "permutation.hpp"
#include "tableaux.hpp"

namespace altperm {

// One label per tree level, from the root's child down to the node itself;
// the empty path addresses the root. Under the rules here every parent has
// exactly one child per label, so a path pins down one node.
using LabelPath = std::vector<Label>;

// (a, b) for the 2143 trees: a is the next-to-last entry (0 for the length-1
// root) and b the number of active values. Even lengths must be up-down
// alternating, odd lengths down-up; the host must avoid 2143.
Label perm_label_2143(const Permutation& w);

// (a, b) for the 1234 tree on even up-down alternating avoiders: a is the
// least entry that tops a two-term rise, b the number of active values.
Label perm_label_1234(const Permutation& w);

// The unique child of u carrying the target label: u <- x, then extend by
// the (b+2+x-y)-th active value of u plus one.
Permutation child_perm_2143(const Permutation& u, Label target);

LabelPath perm_to_labelpath(const Permutation& w);
Permutation labelpath_to_perm(const LabelPath& path, Parity parity);

// Even bijection A_2n(2143) <-> SYT(n,n,n): replay the label path with the
// constant shift (a, b) -> (a+1, b) between the two trees.
Tableau perm_to_tableau(const Permutation& w);
Permutation tableau_to_perm(const Tableau& t);

// Odd bijection A'_2n+1(2143) <-> shifted SYT(n+2,n+1,n); input/output are
// down-up alternating (callers convert up-down via reverse-complement).
Tableau odd_perm_to_shsyt(const Permutation& w);
Permutation shsyt_to_odd_perm(const Tableau& t);

}  // namespace altperm
