#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "tlj/scalar.hpp"

namespace tlj {

/// Non-crossing pairing of 2m boundary points of a rectangle, numbered
/// circularly: top points 0..m-1 left to right, bottom points m..2m-1 right
/// to left. Bottom point of column c therefore has index 2m-1-c. Non-crossing
/// means no a<b<c<d with pairing(a)=c, pairing(b)=d.
class TLDiagram {
public:
    TLDiagram(int size, std::vector<int> pairing);

    static TLDiagram identity(int m);
    /// e_i for 1 <= i <= m-1: cup joining top columns i-1,i and cap joining
    /// bottom columns i-1,i; all other strands vertical.
    static TLDiagram generator(int m, int i);

    int size() const { return size_; }
    const std::vector<int>& pairing() const { return pairing_; }
    int partner(int p) const { return pairing_[static_cast<std::size_t>(p)]; }

    static int bottom_index(int m, int col) { return 2 * m - 1 - col; }

    bool operator==(const TLDiagram& o) const { return pairing_ == o.pairing_; }
    bool operator!=(const TLDiagram& o) const { return !(*this == o); }
    /// Lexicographic on the pairing array (the canonical basis order).
    bool operator<(const TLDiagram& o) const { return pairing_ < o.pairing_; }

    std::string str() const;

private:
    int size_;
    std::vector<int> pairing_;
};

/// Check that `pairing` is a fixed-point-free non-crossing involution on
/// 2m points (used by the constructor and by tests on raw arrays).
bool is_noncrossing_involution(int m, const std::vector<int>& pairing);

/// All non-crossing diagrams on m strands in lexicographic order.
/// Cached per size; count is Catalan(m).
const std::vector<TLDiagram>& enumerate_basis(int m);

/// Stack d1 above d2, trace strands, remove closed loops. Returns the result
/// and the number of loops removed; the algebra product is
/// delta^loops * result.
std::pair<TLDiagram, int> compose(const TLDiagram& d1, const TLDiagram& d2);

/// Finitely supported Scalar-weighted combination of diagrams of one size.
class TLElement {
public:
    explicit TLElement(int size) : size_(size) {}
    TLElement(const TLDiagram& d, Scalar c = Scalar(1)) : size_(d.size()) {
        add_term(d, std::move(c));
    }

    static TLElement zero(int m) { return TLElement(m); }
    static TLElement identity(int m) { return TLElement(TLDiagram::identity(m)); }
    static TLElement generator(int m, int i) { return TLElement(TLDiagram::generator(m, i)); }

    int size() const { return size_; }
    const std::map<TLDiagram, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const TLDiagram& d) const;
    void add_term(const TLDiagram& d, Scalar c);

    TLElement operator-() const;
    TLElement operator+(const TLElement& o) const;
    TLElement operator-(const TLElement& o) const;
    TLElement operator*(const TLElement& o) const; ///< algebra product
    TLElement operator*(const Scalar& s) const;
    TLElement& operator+=(const TLElement& o) { return *this = *this + o; }
    TLElement& operator-=(const TLElement& o) { return *this = *this - o; }

    bool operator==(const TLElement& o) const {
        return size_ == o.size_ && terms_ == o.terms_;
    }
    bool operator!=(const TLElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    int size_;
    std::map<TLDiagram, Scalar> terms_;
};

/// Top-bottom reflection; coefficients unchanged (they are real rational
/// functions). Anti-multiplicative involution.
TLElement adjoint(const TLElement& x);

/// Close top column i onto bottom column i around the right; every closed
/// loop counts delta. markov_trace(identity_m) = delta^m.
Scalar markov_trace(const TLElement& x);

/// inner(x, y) = markov_trace(adjoint(y) * x).
Scalar inner(const TLElement& x, const TLElement& y);

/// Inclusion TL_m -> TL_{m+1} adding a vertical strand at the right.
TLElement include_strand(const TLElement& x);
/// Repeated inclusion up to size m (m >= x.size()).
TLElement include_to(const TLElement& x, int m);

/// Random element: `terms` diagrams chosen uniformly, integer coefficients
/// drawn from [-3,3] \ {0} so exact-zero tests stay inside Q(q).
TLElement random_element(int m, int terms, std::mt19937_64& rng);

} // namespace tlj
