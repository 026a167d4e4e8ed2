#pragma once

#include <utility>
#include <vector>

#include "tlj/tl.hpp"

namespace tlj {

/// Jones-Wenzl idempotent p_m in TL_m via the Wenzl recursion
/// p_{k+1} = i(p_k) - ([k]/[k+1]) i(p_k) e_k i(p_k), with i the inclusion
/// adding a strand. p_0 is the empty-diagram unit. Results are cached;
/// m above jones_wenzl_cap() is a resource error.
const TLElement& jones_wenzl(int m);

struct JWVerdict {
    bool idempotent = false;
    bool kills_left = false;  ///< e_i * p = 0 for all i
    bool kills_right = false; ///< p * e_i = 0 for all i
    bool self_adjoint = false;
    bool all() const { return idempotent && kills_left && kills_right && self_adjoint; }
};

/// Exact check of the defining properties of an alleged Jones-Wenzl element.
JWVerdict verify_jw(const TLElement& p);

/// Pairs (n, markov_trace(p_{2n})) for n = 0..n_max, each verified equal to
/// [2n+1]_q exactly; a mismatch throws naming the offending n.
std::vector<std::pair<int, Scalar>> jw_trace_table(int n_max);

} // namespace tlj
