#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "permutation.hpp"

namespace altperm {

// Values c in [n+1] for which w <- c still avoids the host pattern; sorted.
using ActiveSet = std::vector<int>;

// Definitional active values: try every extension. Requires w to avoid p.
ActiveSet active_values(const Permutation& w, const Permutation& p);

// Structural active values for the pattern 2143: c fails to be active exactly
// when some i < j < k has w_j < w_i < c <= w_k, so the blocked values are the
// union over positions k of the interval (m_k, w_k], where m_k is the least
// top of a 21-pattern occurring before k. One left-to-right pass.
ActiveSet active_values_2143(const Permutation& w);

// The permutation classes the generator understands.
struct ClassSpec {
    enum class Kind { All, Alternating, DescentSet };

    Kind kind = Kind::All;
    Alternation conv = Alternation::UpDown;
    int period = 1;  // DescentSet: descents exactly at {period, 2*period, ...}

    static ClassSpec all();
    static ClassSpec alternating(Alternation conv);
    static ClassSpec descent_set(int k);  // throws UsageError if k < 1

    // Required direction of the comparison between entries pos and pos+1
    // (1-based): true = ascent, false = descent, nullopt = unconstrained.
    std::optional<bool> ascent_at(int pos) const;

    std::string str() const;  // "all" | "alt-up" | "alt-down" | "des-<k>"
    static ClassSpec parse(std::string_view text);

    bool operator==(const ClassSpec&) const = default;
};

// All length-n members of the class avoiding p, in lexicographic order,
// each exactly once. Generation extends flattened prefixes, pruning on the
// class comparison constraints and on contains_with_last.
std::vector<Permutation> generate_avoiders(int n, const Permutation& p, const ClassSpec& cls);

// Count of the above without materializing it. jobs <= 0 picks the hardware
// default; shards the top of the extension tree across workers.
BigInt count_avoiders(int n, const Permutation& p, const ClassSpec& cls, int jobs = 1);

}  // namespace altperm
