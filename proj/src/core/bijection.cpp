#include "bijection.hpp"

#include <stdexcept>

namespace altperm {

namespace {

const Permutation& pattern_2143() {
    static const Permutation p = Permutation::parse("2143");
    return p;
}

const Permutation& pattern_1234() {
    static const Permutation p = Permutation::parse("1234");
    return p;
}

void require_2143_tree_member(const Permutation& w) {
    if (w.empty()) throw std::domain_error("permutation must be non-empty");
    const Alternation conv = w.size() % 2 == 0 ? Alternation::UpDown : Alternation::DownUp;
    if (!is_alternating(w, conv))
        throw std::domain_error("permutation " + w.str() +
                                (w.size() % 2 == 0 ? " is not up-down alternating"
                                                   : " is not down-up alternating"));
    if (contains(w, pattern_2143()))
        throw std::domain_error("permutation " + w.str() + " contains 2143");
}

}  // namespace

Label perm_label_2143(const Permutation& w) {
    require_2143_tree_member(w);
    const int a = w.size() == 1 ? 0 : w.at(w.size() - 1);
    const int b = static_cast<int>(active_values_2143(w).size());
    return Label{a, b};
}

Label perm_label_1234(const Permutation& w) {
    if (w.empty() || w.size() % 2 != 0 || !is_alternating(w, Alternation::UpDown))
        throw std::domain_error("permutation must be up-down alternating of even length");
    if (contains(w, pattern_1234()))
        throw std::domain_error("permutation " + w.str() + " contains 1234");
    int a = w.size() + 1;
    int prefix_min = w.size() + 1;
    for (int v : w.values()) {
        if (v > prefix_min) a = std::min(a, v);  // v tops a rise
        prefix_min = std::min(prefix_min, v);
    }
    const int b = static_cast<int>(active_values(w, pattern_1234()).size());
    return Label{a, b};
}

Permutation child_perm_2143(const Permutation& u, Label target) {
    const Label parent = perm_label_2143(u);
    const int x = target.a, y = target.b;
    if (!(1 <= x && x <= parent.a + 1 && x + 2 <= y && y <= parent.b + 2))
        throw std::domain_error("target label " + to_string(target) + " is not a child of " +
                                to_string(parent));
    const ActiveSet s = active_values_2143(u);
    const int index = parent.b + 2 + x - y;  // 1-based; lands in [x, b]
    return extend(extend(u, x), s[static_cast<std::size_t>(index) - 1] + 1);
}

LabelPath perm_to_labelpath(const Permutation& w) {
    require_2143_tree_member(w);
    const int root_len = w.size() % 2 == 0 ? 2 : 1;
    LabelPath path;
    for (int len = root_len + 2; len <= w.size(); len += 2)
        path.push_back(perm_label_2143(prefix_flattened(w, len)));
    return path;
}

Permutation labelpath_to_perm(const LabelPath& path, Parity parity) {
    Permutation cur =
        parity == Parity::Even ? Permutation({1, 2}) : Permutation({1});
    for (const Label& step : path) cur = child_perm_2143(cur, step);
    return cur;
}

Tableau perm_to_tableau(const Permutation& w) {
    if (w.size() % 2 != 0) throw std::domain_error("expected an even-length permutation");
    const LabelPath path = perm_to_labelpath(w);
    Tableau t(Shape({1, 1, 1}, false), {{1}, {2}, {3}});
    for (const Label& step : path) t = syt_child(t, Label{step.a + 1, step.b});
    return t;
}

Permutation tableau_to_perm(const Tableau& t) {
    syt_label(t);  // validates the shape family up front
    LabelPath path;
    Tableau cur = t;
    while (cur.shape().rows[0] > 1) {
        path.push_back(syt_label(cur));
        cur = remove_last_column(cur);
    }
    std::reverse(path.begin(), path.end());
    for (Label& step : path) step.a -= 1;
    return labelpath_to_perm(path, Parity::Even);
}

Tableau odd_perm_to_shsyt(const Permutation& w) {
    if (w.size() % 2 != 1) throw std::domain_error("expected an odd-length permutation");
    const LabelPath path = perm_to_labelpath(w);
    Tableau t(Shape({2, 1}, true), {{1, 2}, {3}});
    for (const Label& step : path) t = shsyt_child(t, Label{step.a + 1, step.b});
    return t;
}

Permutation shsyt_to_odd_perm(const Tableau& t) {
    shsyt_label(t);  // validates the shape family up front
    LabelPath path;
    Tableau cur = t;
    while (cur.shape().rows != std::vector<int>{2, 1}) {
        path.push_back(shsyt_label(cur));
        cur = remove_last_column(cur);
    }
    std::reverse(path.begin(), path.end());
    for (Label& step : path) step.a -= 1;
    return labelpath_to_perm(path, Parity::Odd);
}

}  // namespace altperm
