#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altperm {

enum class Alternation { UpDown, DownUp };
enum class Parity { Even, Odd };

// A permutation of {1..n} in one-line notation. Length 0 is allowed and is
// the seed of the extension tree. Ordering is lexicographic on values.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);  // throws std::invalid_argument

    // Accepts a digit string for n <= 9 ("2143") or a comma-separated list
    // ("10,2,9,..."), which is required for n >= 10.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    const std::vector<int>& values() const { return values_; }
    std::span<const int> span() const { return values_; }

    // 1-based entry access, matching the usual w_i indexing.
    int at(int pos) const;

    std::string str() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

// u <- i: shift every entry >= i up by one, then append i.
Permutation extend(const Permutation& u, int i);

bool is_alternating(std::span<const int> w, Alternation conv);
bool is_alternating(const Permutation& w, Alternation conv);

// True iff some subsequence of w is order-isomorphic to p.
bool contains(const Permutation& w, const Permutation& p);
// As contains, but the occurrence must end at the last position of w. After
// an extension this is the only place a new occurrence can appear.
bool contains_with_last(const Permutation& w, const Permutation& p);

Permutation reverse(const Permutation& w);
Permutation complement(const Permutation& w);
Permutation reverse_complement(const Permutation& w);

// Order-isomorphic copy of a word of distinct integers, renumbered to 1..len.
Permutation flatten(std::span<const int> word);
Permutation prefix_flattened(const Permutation& w, int len);

namespace detail {

// Containment kernels over raw words of distinct entries.
bool word_contains(std::span<const int> w, std::span<const int> p);
bool word_contains_with_last(std::span<const int> w, std::span<const int> p);

// True iff (w <- c) has an occurrence of p ending at its last position,
// without materializing the extension. `scratch` is reused between calls.
bool extension_completes(std::span<const int> w, int c, std::span<const int> p,
                         std::vector<int>& scratch);

}  // namespace detail

}  // namespace altperm
