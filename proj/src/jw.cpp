#include "tlj/jw.hpp"

#include <deque>
#include <mutex>
#include <string>

#include "tlj/config.hpp"

namespace tlj {

const TLElement& jones_wenzl(int m) {
    static std::mutex mutex;
    static std::deque<TLElement> cache; // cache[k] = p_k
    if (m < 0) throw domain_error("jones_wenzl requires m >= 0");
    if (m > jones_wenzl_cap())
        throw resource_limit_error("jones_wenzl: strand count exceeds cap " +
                                   std::to_string(jones_wenzl_cap()));
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty()) {
        cache.push_back(TLElement::identity(0));
        cache.push_back(TLElement::identity(1));
    }
    while (static_cast<int>(cache.size()) <= m) {
        int k = static_cast<int>(cache.size()) - 1;
        TLElement inc = include_strand(cache.back());
        TLElement mid = inc * TLElement::generator(k + 1, k) * inc;
        cache.push_back(inc - mid * (qint(k) / qint(k + 1)));
    }
    return cache[static_cast<std::size_t>(m)];
}

JWVerdict verify_jw(const TLElement& p) {
    JWVerdict v;
    const int m = p.size();
    v.idempotent = (p * p == p);
    v.kills_left = true;
    v.kills_right = true;
    for (int i = 1; i <= m - 1; ++i) {
        TLElement e = TLElement::generator(m, i);
        if (!(e * p).is_zero()) v.kills_left = false;
        if (!(p * e).is_zero()) v.kills_right = false;
    }
    v.self_adjoint = (adjoint(p) == p);
    return v;
}

std::vector<std::pair<int, Scalar>> jw_trace_table(int n_max) {
    std::vector<std::pair<int, Scalar>> table;
    for (int n = 0; n <= n_max; ++n) {
        Scalar tr = n == 0 ? Scalar(1) : markov_trace(jones_wenzl(2 * n));
        if (tr != qint(2 * n + 1))
            throw error("trace identity failed at n = " + std::to_string(n));
        table.emplace_back(n, std::move(tr));
    }
    return table;
}

} // namespace tlj
