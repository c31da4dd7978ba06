#include "avoidance.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <stdexcept>

#include "errors.hpp"
#include "parallel.hpp"

namespace altperm {

ActiveSet active_values(const Permutation& w, const Permutation& p) {
    if (contains(w, p)) throw std::domain_error("host permutation already contains the pattern");
    ActiveSet out;
    std::vector<int> scratch;
    for (int c = 1; c <= w.size() + 1; ++c)
        if (!detail::extension_completes(w.span(), c, p.span(), scratch)) out.push_back(c);
    return out;
}

ActiveSet active_values_2143(const Permutation& w) {
    static const Permutation kPattern = Permutation::parse("2143");
    if (contains(w, kPattern)) throw std::domain_error("host permutation already contains 2143");

    const int n = w.size();
    // blocked[c] > 0 after prefix-summing the interval marks below.
    std::vector<int> diff(static_cast<std::size_t>(n) + 3, 0);
    std::set<int> prefix_values;
    int min_top = std::numeric_limits<int>::max();

    for (int v : w.values()) {
        // v plays the role of w_k; pairs i < j < k are covered by min_top.
        if (min_top < v) {
            diff[static_cast<std::size_t>(min_top) + 1] += 1;
            diff[static_cast<std::size_t>(v) + 1] -= 1;
        }
        // Now admit pairs with j = current position: the least prefix value
        // above v is the smallest new 21-top.
        auto it = prefix_values.upper_bound(v);
        if (it != prefix_values.end()) min_top = std::min(min_top, *it);
        prefix_values.insert(v);
    }

    ActiveSet out;
    int running = 0;
    for (int c = 1; c <= n + 1; ++c) {
        running += diff[static_cast<std::size_t>(c)];
        if (running == 0) out.push_back(c);
    }
    return out;
}

ClassSpec ClassSpec::all() { return ClassSpec{Kind::All, Alternation::UpDown, 1}; }

ClassSpec ClassSpec::alternating(Alternation conv) { return ClassSpec{Kind::Alternating, conv, 1}; }

ClassSpec ClassSpec::descent_set(int k) {
    if (k < 1) throw UsageError("descent-set period must be >= 1");
    return ClassSpec{Kind::DescentSet, Alternation::UpDown, k};
}

std::optional<bool> ClassSpec::ascent_at(int pos) const {
    switch (kind) {
        case Kind::All:
            return std::nullopt;
        case Kind::Alternating:
            return (conv == Alternation::UpDown) ? (pos % 2 == 1) : (pos % 2 == 0);
        case Kind::DescentSet:
            return pos % period != 0;
    }
    return std::nullopt;
}

std::string ClassSpec::str() const {
    switch (kind) {
        case Kind::All: return "all";
        case Kind::Alternating: return conv == Alternation::UpDown ? "alt-up" : "alt-down";
        case Kind::DescentSet: return "des-" + std::to_string(period);
    }
    return "?";
}

ClassSpec ClassSpec::parse(std::string_view text) {
    if (text == "all") return all();
    if (text == "alt-up") return alternating(Alternation::UpDown);
    if (text == "alt-down") return alternating(Alternation::DownUp);
    if (text.rfind("des-", 0) == 0) {
        int k = 0;
        auto body = text.substr(4);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
        if (ec == std::errc{} && ptr == body.data() + body.size()) return descent_set(k);
    }
    throw UsageError("unknown class '" + std::string(text) + "' (expected all, alt-up, alt-down or des-<k>)");
}

namespace {

// Depth-first search over flattened prefixes. The prefix is shifted in place
// for each child and restored on return.
struct AvoiderDfs {
    int target = 0;
    std::span<const int> pattern;
    const ClassSpec* cls = nullptr;

    std::vector<int> prefix;
    std::vector<int> scratch;
    unsigned long long count = 0;
    const std::function<void(const std::vector<int>&)>* emit = nullptr;

    void run() {
        prefix.reserve(static_cast<std::size_t>(target));
        descend();
    }

    void descend() {
        const int m = static_cast<int>(prefix.size());
        if (m == target) {
            if (emit) (*emit)(prefix);
            else ++count;
            return;
        }
        for (int c = 1; c <= m + 1; ++c) {
            if (m >= 1) {
                auto req = cls->ascent_at(m);
                if (req && *req != (c > prefix[static_cast<std::size_t>(m) - 1])) continue;
            }
            if (detail::extension_completes(prefix, c, pattern, scratch)) continue;
            for (int& v : prefix)
                if (v >= c) ++v;
            prefix.push_back(c);
            descend();
            prefix.pop_back();
            for (int& v : prefix)
                if (v > c) --v;
        }
    }
};

// Class-conforming avoiding prefixes of the given length; the shard roots
// for parallel counting.
std::vector<std::vector<int>> frontier_prefixes(int depth, const Permutation& p, const ClassSpec& cls) {
    std::vector<std::vector<int>> out;
    std::function<void(const std::vector<int>&)> grab = [&](const std::vector<int>& w) { out.push_back(w); };
    AvoiderDfs dfs;
    dfs.target = depth;
    dfs.pattern = p.span();
    dfs.cls = &cls;
    dfs.emit = &grab;
    dfs.run();
    return out;
}

}  // namespace

std::vector<Permutation> generate_avoiders(int n, const Permutation& p, const ClassSpec& cls) {
    if (n < 0) throw std::invalid_argument("length must be >= 0");
    std::vector<Permutation> out;
    std::function<void(const std::vector<int>&)> grab = [&](const std::vector<int>& w) {
        out.push_back(Permutation(w));
    };
    AvoiderDfs dfs;
    dfs.target = n;
    dfs.pattern = p.span();
    dfs.cls = &cls;
    dfs.emit = &grab;
    dfs.run();
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_avoiders(int n, const Permutation& p, const ClassSpec& cls, int jobs) {
    if (n < 0) throw std::invalid_argument("length must be >= 0");
    if (jobs <= 0) jobs = default_jobs();

    const int shard_depth = 8;
    if (jobs == 1 || n <= shard_depth + 1) {
        AvoiderDfs dfs;
        dfs.target = n;
        dfs.pattern = p.span();
        dfs.cls = &cls;
        dfs.run();
        return BigInt(dfs.count);
    }

    auto roots = frontier_prefixes(shard_depth, p, cls);
    std::vector<unsigned long long> partial(roots.size(), 0);
    run_parallel(roots.size(), jobs, [&](std::size_t i) {
        AvoiderDfs dfs;
        dfs.target = n;
        dfs.pattern = p.span();
        dfs.cls = &cls;
        dfs.prefix = roots[i];
        dfs.descend();
        partial[i] = dfs.count;
    });
    BigInt total = 0;
    for (unsigned long long c : partial) total += c;
    return total;
}

}  // namespace altperm
