#include "tlj/tl.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "tlj/config.hpp"

namespace tlj {

bool is_noncrossing_involution(int m, const std::vector<int>& pairing) {
    const int n = 2 * m;
    if (static_cast<int>(pairing.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        int j = pairing[static_cast<std::size_t>(i)];
        if (j < 0 || j >= n || j == i) return false;
        if (pairing[static_cast<std::size_t>(j)] != i) return false;
    }
    // Stack check: equivalent to the no a<b<c<d crossing condition.
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        int j = pairing[static_cast<std::size_t>(i)];
        if (j > i) {
            stack.push_back(i);
        } else {
            if (stack.empty() || stack.back() != j) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

TLDiagram::TLDiagram(int size, std::vector<int> pairing)
    : size_(size), pairing_(std::move(pairing)) {
    if (size_ < 0 || !is_noncrossing_involution(size_, pairing_))
        throw domain_error("invalid TL diagram pairing");
}

TLDiagram TLDiagram::identity(int m) {
    std::vector<int> p(static_cast<std::size_t>(2 * m));
    for (int c = 0; c < m; ++c) {
        p[static_cast<std::size_t>(c)] = bottom_index(m, c);
        p[static_cast<std::size_t>(bottom_index(m, c))] = c;
    }
    return TLDiagram(m, std::move(p));
}

TLDiagram TLDiagram::generator(int m, int i) {
    if (i < 1 || i > m - 1) throw domain_error("generator index out of range");
    std::vector<int> p(static_cast<std::size_t>(2 * m));
    for (int c = 0; c < m; ++c) {
        p[static_cast<std::size_t>(c)] = bottom_index(m, c);
        p[static_cast<std::size_t>(bottom_index(m, c))] = c;
    }
    auto pair = [&p](int a, int b) {
        p[static_cast<std::size_t>(a)] = b;
        p[static_cast<std::size_t>(b)] = a;
    };
    pair(i - 1, i);
    pair(bottom_index(m, i - 1), bottom_index(m, i));
    return TLDiagram(m, std::move(p));
}

std::string TLDiagram::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < pairing_.size(); ++i) {
        if (i) out << " ";
        out << pairing_[i];
    }
    out << "]";
    return out.str();
}

namespace {

// Non-crossing matchings of 0..2m-1 as Dyck words: openers push, closers pop.
void enumerate_dyck(int pos, int n, std::vector<int>& stack, std::vector<int>& pairing,
                    std::vector<std::vector<int>>& out) {
    if (pos == n) {
        out.push_back(pairing);
        return;
    }
    if (static_cast<int>(stack.size()) < n - pos - 1) {
        stack.push_back(pos);
        enumerate_dyck(pos + 1, n, stack, pairing, out);
        stack.pop_back();
    }
    if (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        pairing[static_cast<std::size_t>(a)] = pos;
        pairing[static_cast<std::size_t>(pos)] = a;
        enumerate_dyck(pos + 1, n, stack, pairing, out);
        stack.push_back(a);
    }
}

} // namespace

const std::vector<TLDiagram>& enumerate_basis(int m) {
    static std::mutex mutex;
    static std::map<int, std::vector<TLDiagram>> cache;
    if (m < 0) throw domain_error("negative strand count");
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::vector<std::vector<int>> raw;
    std::vector<int> pairing(static_cast<std::size_t>(2 * m), -1);
    std::vector<int> stack;
    enumerate_dyck(0, 2 * m, stack, pairing, raw);
    std::sort(raw.begin(), raw.end());

    std::vector<TLDiagram> basis;
    basis.reserve(raw.size());
    for (auto& p : raw) basis.emplace_back(m, std::move(p));
    return cache.emplace(m, std::move(basis)).first->second;
}

std::pair<TLDiagram, int> compose(const TLDiagram& d1, const TLDiagram& d2) {
    if (d1.size() != d2.size()) throw size_mismatch_error("compose: size mismatch");
    const int m = d1.size();
    const int n = 2 * m;
    // Interface: d1-bottom column c meets d2-top point c.
    // Externals: d1-top points (0..m-1) and d2-bottom points (m..2m-1).
    std::vector<bool> seen1(static_cast<std::size_t>(n), false);
    std::vector<bool> seen2(static_cast<std::size_t>(n), false);
    std::vector<int> result(static_cast<std::size_t>(n), -1);

    auto trace_from = [&](bool in_d1, int p) {
        // Walk until reaching an external point; returns (in_d1, point).
        bool el1 = in_d1;
        int cur = p;
        for (;;) {
            int q = el1 ? d1.partner(cur) : d2.partner(cur);
            (el1 ? seen1 : seen2)[static_cast<std::size_t>(cur)] = true;
            (el1 ? seen1 : seen2)[static_cast<std::size_t>(q)] = true;
            if (el1) {
                if (q < m) return std::pair<bool, int>{true, q}; // d1 top: external
                int col = 2 * m - 1 - q;
                el1 = false;
                cur = col; // d2 top point
            } else {
                if (q >= m) return std::pair<bool, int>{false, q}; // d2 bottom: external
                el1 = true;
                cur = 2 * m - 1 - q; // d1 bottom point of column q
            }
        }
    };

    // d1 top points and d2 bottom points keep their indices in the result.
    for (int c = 0; c < m; ++c) {
        if (!seen1[static_cast<std::size_t>(c)]) {
            auto [in_d1, p] = trace_from(true, c);
            (void)in_d1;
            result[static_cast<std::size_t>(c)] = p;
            result[static_cast<std::size_t>(p)] = c;
        }
    }
    for (int b = m; b < 2 * m; ++b) {
        if (!seen2[static_cast<std::size_t>(b)]) {
            auto [in_d1, p] = trace_from(false, b);
            (void)in_d1;
            result[static_cast<std::size_t>(b)] = p;
            result[static_cast<std::size_t>(p)] = b;
        }
    }
    // Anything left unvisited lies on a closed loop; every loop alternates
    // d1-bottom and d2-top points, so scanning d1 finds them all.
    int loops = 0;
    for (int p = 0; p < n; ++p) {
        if (!seen1[static_cast<std::size_t>(p)]) {
            ++loops;
            bool in_d1 = true;
            int cur = p;
            while (!(in_d1 ? seen1 : seen2)[static_cast<std::size_t>(cur)]) {
                int q = in_d1 ? d1.partner(cur) : d2.partner(cur);
                (in_d1 ? seen1 : seen2)[static_cast<std::size_t>(cur)] = true;
                (in_d1 ? seen1 : seen2)[static_cast<std::size_t>(q)] = true;
                cur = 2 * m - 1 - q; // interface jump in both directions
                in_d1 = !in_d1;
            }
        }
    }
    return {TLDiagram(m, std::move(result)), loops};
}

Scalar TLElement::coeff(const TLDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Scalar() : it->second;
}

void TLElement::add_term(const TLDiagram& d, Scalar c) {
    if (d.size() != size_) throw size_mismatch_error("term size mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TLElement TLElement::operator-() const {
    TLElement r(size_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

TLElement TLElement::operator+(const TLElement& o) const {
    if (size_ != o.size_) throw size_mismatch_error("add: size mismatch");
    TLElement r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

TLElement TLElement::operator-(const TLElement& o) const { return *this + (-o); }

TLElement TLElement::operator*(const TLElement& o) const {
    if (size_ != o.size_) throw size_mismatch_error("multiply: size mismatch");
    TLElement r(size_);
    const Scalar& d = delta_scalar();
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : o.terms_) {
            auto [prod, loops] = compose(d1, d2);
            Scalar c = c1 * c2;
            for (int k = 0; k < loops; ++k) c *= d;
            r.add_term(prod, std::move(c));
        }
    }
    return r;
}

TLElement TLElement::operator*(const Scalar& s) const {
    TLElement r(size_);
    if (s.is_zero()) return r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, c * s);
    return r;
}

std::string TLElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*" << d.str();
    }
    return out.str();
}

TLElement adjoint(const TLElement& x) {
    const int n = 2 * x.size();
    TLElement r(x.size());
    for (const auto& [d, c] : x.terms()) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            p[static_cast<std::size_t>(n - 1 - i)] = n - 1 - d.partner(i);
        r.add_term(TLDiagram(x.size(), std::move(p)), c);
    }
    return r;
}

Scalar markov_trace(const TLElement& x) {
    const int m = x.size();
    const int n = 2 * m;
    Scalar total;
    const Scalar& d = delta_scalar();
    for (const auto& [diag, c] : x.terms()) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        int loops = 0;
        for (int p = 0; p < n; ++p) {
            if (seen[static_cast<std::size_t>(p)]) continue;
            ++loops;
            int cur = p;
            while (!seen[static_cast<std::size_t>(cur)]) {
                seen[static_cast<std::size_t>(cur)] = true;
                int q = diag.partner(cur);
                seen[static_cast<std::size_t>(q)] = true;
                cur = n - 1 - q; // closure: column closure top i <-> bottom 2m-1-i
            }
        }
        total += c * d.pow(loops);
    }
    return total;
}

Scalar inner(const TLElement& x, const TLElement& y) {
    if (x.size() != y.size()) throw size_mismatch_error("inner: size mismatch");
    return markov_trace(adjoint(y) * x);
}

TLElement include_strand(const TLElement& x) {
    const int m = x.size();
    TLElement r(m + 1);
    for (const auto& [d, c] : x.terms()) {
        std::vector<int> p(static_cast<std::size_t>(2 * m + 2));
        auto remap = [m](int i) { return i < m ? i : i + 2; };
        for (int i = 0; i < 2 * m; ++i)
            p[static_cast<std::size_t>(remap(i))] = remap(d.partner(i));
        p[static_cast<std::size_t>(m)] = m + 1; // new strand: top col m to bottom col m
        p[static_cast<std::size_t>(m + 1)] = m;
        r.add_term(TLDiagram(m + 1, std::move(p)), c);
    }
    return r;
}

TLElement include_to(const TLElement& x, int m) {
    if (m < x.size()) throw domain_error("include_to: target smaller than source");
    TLElement r = x;
    while (r.size() < m) r = include_strand(r);
    return r;
}

TLElement random_element(int m, int terms, std::mt19937_64& rng) {
    const auto& basis = enumerate_basis(m);
    TLElement r(m);
    for (int k = 0; k < terms; ++k) {
        const TLDiagram& d = basis[static_cast<std::size_t>(rng() % basis.size())];
        long c = static_cast<long>(rng() % 6) - 3; // -3..2
        if (c >= 0) ++c;                           // skip zero: -3..-1, 1..3
        r.add_term(d, Scalar(c));
    }
    return r;
}

} // namespace tlj
