#pragma once

#include <map>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "tlj/annular.hpp"
#include "tlj/tl.hpp"

namespace tlj {

/// Element of the degree-0 graded algebra over the box spaces D(n,m).
/// The (n,m) component is a TL element of size n+m whose circular boundary
/// reads: positions 0..2n-1 are the M-side strings, positions 2n..2(n+m)-1
/// the op-side strings.
class BoxElement {
public:
    using Key = std::pair<int, int>;

    BoxElement() = default;

    /// Multiplicative unit: the empty diagram in D(0,0).
    static BoxElement unit();
    static BoxElement from_component(int n, int m, TLElement x);
    /// TL element of size n placed in D(n,0) (the M side).
    static BoxElement embed_left(const TLElement& x);
    /// TL element of size m placed in D(0,m) (the op side).
    static BoxElement embed_right(const TLElement& x);

    const std::map<Key, TLElement>& components() const { return components_; }
    const TLElement* component(int n, int m) const;
    void add_component(int n, int m, const TLElement& x);

    bool is_zero() const { return components_.empty(); }
    int total_degree() const; ///< max n+m over the support; -1 when zero

    BoxElement operator-() const;
    BoxElement operator+(const BoxElement& o) const;
    BoxElement operator-(const BoxElement& o) const;
    BoxElement operator*(const Scalar& s) const;
    BoxElement& operator+=(const BoxElement& o) { return *this = *this + o; }

    bool operator==(const BoxElement& o) const { return components_ == o.components_; }
    bool operator!=(const BoxElement& o) const { return !(*this == o); }

private:
    std::map<Key, TLElement> components_;
};

/// Bacher product: boxes side by side, summed over all partial contractions
/// joining x's trailing M-strings to y's leading M-strings (p pairs, nested)
/// and x's leading op-strings to y's trailing op-strings (r pairs); a
/// contraction term lands in D(n+i-p, m+j-r) and every closed loop formed
/// contributes delta.
BoxElement bacher_mul(const BoxElement& x, const BoxElement& y);

/// Componentwise reflection: anti-multiplicative involution fixing each
/// D(n,m) (coefficients are real, so no conjugation).
BoxElement dagger(const BoxElement& x);

/// Coefficient of the empty diagram in the (0,0) component.
Scalar tau(const BoxElement& x);

/// p_{2n} placed in D(n,n) (top strings = M side, bottom strings = op side).
BoxElement embed_jw(int n);

/// Deterministic list of basis boxes (n, m, diagram) with n+m <= deg_max.
std::vector<std::tuple<int, int, TLDiagram>> box_basis(int deg_max);

/// Random integer combination of basis boxes (coefficients in [-3,3] \ {0}).
BoxElement random_box(int deg_max, int terms, std::mt19937_64& rng);

/// Vector in the truncated module H = sum of H_{i,j}, H_{i,j} a copy of the
/// weight-(i+j) annular module; components above the weight cap are illegal.
class ModuleVector {
public:
    using Key = std::pair<int, int>;

    explicit ModuleVector(int weight_cap) : weight_cap_(weight_cap) {}

    /// The vacuum vector xi in H_{0,0}, coefficient 1.
    static ModuleVector vacuum(int weight_cap);

    int weight_cap() const { return weight_cap_; }
    const std::map<Key, AnnularVector>& components() const { return components_; }
    const AnnularVector* component(int i, int j) const;
    void add_component(int i, int j, const AnnularVector& v);

    bool is_zero() const { return components_.empty(); }

    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;

    bool operator==(const ModuleVector& o) const { return components_ == o.components_; }
    bool operator!=(const ModuleVector& o) const { return !(*this == o); }

private:
    int weight_cap_;
    std::map<Key, AnnularVector> components_;
};

/// Action result; components pushed past the weight cap are reported in
/// `overflow` rather than silently dropped.
struct ActionResult {
    ModuleVector value;
    std::vector<std::pair<int, int>> overflow;
    bool overflowed() const { return !overflow.empty(); }
};

ActionResult pi0_act_left(const BoxElement& x, const ModuleVector& v);
ActionResult pi0_act_right(const BoxElement& x, const ModuleVector& v);

/// Componentwise annular pairing (components of different bidegree are
/// orthogonal).
TPoly module_inner(const ModuleVector& u, const ModuleVector& v);

} // namespace tlj
