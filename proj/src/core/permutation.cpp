#include "permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace altperm {

namespace {

void validate_values(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values) {
        if (v < 1 || v > n) throw std::invalid_argument("permutation entry out of range 1..n");
        if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("repeated permutation entry");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

int parse_int(std::string_view tok) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad integer in permutation: '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate_values(values_);
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> vals;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                      : comma - start);
            vals.push_back(parse_int(tok));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("permutation digit string may only use 1..9");
            vals.push_back(ch - '0');
        }
    }
    return Permutation(std::move(vals));
}

int Permutation::at(int pos) const {
    if (pos < 1 || pos > size()) throw std::invalid_argument("permutation position out of range");
    return values_[static_cast<std::size_t>(pos) - 1];
}

std::string Permutation::str() const {
    std::string out;
    if (size() <= 9) {
        for (int v : values_) out.push_back(static_cast<char>('0' + v));
    } else {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(values_[i]);
        }
    }
    return out;
}

Permutation extend(const Permutation& u, int i) {
    if (i < 1 || i > u.size() + 1)
        throw std::domain_error("extension value must lie in 1..n+1");
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(u.size()) + 1);
    for (int v : u.values()) vals.push_back(v >= i ? v + 1 : v);
    vals.push_back(i);
    return Permutation(std::move(vals));
}

bool is_alternating(std::span<const int> w, Alternation conv) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        const bool ascent = w[j] < w[j + 1];
        // UpDown: w1 < w2 > w3 < ...; odd 1-based positions ascend.
        const bool want = (conv == Alternation::UpDown) ? (j % 2 == 0) : (j % 2 == 1);
        if (ascent != want) return false;
    }
    return true;
}

bool is_alternating(const Permutation& w, Alternation conv) {
    return is_alternating(w.span(), conv);
}

namespace detail {

namespace {

constexpr int kMaxPattern = 16;

struct MatchCtx {
    std::span<const int> w;
    std::span<const int> p;
    int free_count = 0;  // pattern letters placed by search
    int avail_end = 0;   // free letters use positions [0, avail_end)
    bool pinned = false; // last pattern letter bound to w.back()
    int vals[kMaxPattern] = {};
};

bool place(MatchCtx& ctx, int t, int pos) {
    if (t == ctx.free_count) return true;
    const int k = static_cast<int>(ctx.p.size());
    const int last = pos + (ctx.avail_end - pos) - (ctx.free_count - t);
    for (int i = pos; i <= last; ++i) {
        const int v = ctx.w[static_cast<std::size_t>(i)];
        bool ok = true;
        for (int s = 0; s < t && ok; ++s)
            ok = (ctx.vals[s] < v) == (ctx.p[static_cast<std::size_t>(s)] < ctx.p[static_cast<std::size_t>(t)]);
        if (ok && ctx.pinned)
            ok = (v < ctx.vals[k - 1]) ==
                 (ctx.p[static_cast<std::size_t>(t)] < ctx.p[static_cast<std::size_t>(k - 1)]);
        if (!ok) continue;
        ctx.vals[t] = v;
        if (place(ctx, t + 1, i + 1)) return true;
    }
    return false;
}

bool run_match(std::span<const int> w, std::span<const int> p, bool pin_last) {
    const int n = static_cast<int>(w.size());
    const int k = static_cast<int>(p.size());
    if (k < 1) throw std::invalid_argument("pattern must be non-empty");
    if (k > kMaxPattern) throw std::invalid_argument("pattern too long");
    if (pin_last && n < 1) throw std::invalid_argument("word must be non-empty");
    if (k > n) return false;

    MatchCtx ctx;
    ctx.w = w;
    ctx.p = p;
    ctx.pinned = pin_last;
    ctx.free_count = pin_last ? k - 1 : k;
    ctx.avail_end = pin_last ? n - 1 : n;
    if (pin_last) ctx.vals[k - 1] = w[static_cast<std::size_t>(n) - 1];
    return place(ctx, 0, 0);
}

}  // namespace

bool word_contains(std::span<const int> w, std::span<const int> p) {
    return run_match(w, p, false);
}

bool word_contains_with_last(std::span<const int> w, std::span<const int> p) {
    return run_match(w, p, true);
}

bool extension_completes(std::span<const int> w, int c, std::span<const int> p,
                         std::vector<int>& scratch) {
    scratch.resize(w.size() + 1);
    for (std::size_t j = 0; j < w.size(); ++j) scratch[j] = w[j] + (w[j] >= c ? 1 : 0);
    scratch[w.size()] = c;
    return word_contains_with_last(scratch, p);
}

}  // namespace detail

bool contains(const Permutation& w, const Permutation& p) {
    return detail::word_contains(w.span(), p.span());
}

bool contains_with_last(const Permutation& w, const Permutation& p) {
    return detail::word_contains_with_last(w.span(), p.span());
}

Permutation reverse(const Permutation& w) {
    std::vector<int> vals(w.values().rbegin(), w.values().rend());
    return Permutation(std::move(vals));
}

Permutation complement(const Permutation& w) {
    const int n = w.size();
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(n));
    for (int v : w.values()) vals.push_back(n + 1 - v);
    return Permutation(std::move(vals));
}

Permutation reverse_complement(const Permutation& w) {
    return reverse(complement(w));
}

Permutation flatten(std::span<const int> word) {
    std::vector<int> sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> vals;
    vals.reserve(word.size());
    for (int v : word) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        vals.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(vals));
}

Permutation prefix_flattened(const Permutation& w, int len) {
    if (len < 0 || len > w.size()) throw std::invalid_argument("prefix length out of range");
    return flatten(w.span().subspan(0, static_cast<std::size_t>(len)));
}

}  // namespace altperm
