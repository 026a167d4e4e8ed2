#pragma once

#include <map>
#include <vector>

#include "tlj/tl.hpp"

namespace tlj {

/// Face structure of a non-crossing matching on 2n points. Gap g (0..2n-1)
/// is the boundary interval just before point g; the n+1 complementary faces
/// are indexed by first occurrence scanning gaps upward, so face 0 always
/// contains gap 0.
struct FaceStructure {
    std::vector<int> gap_face;               ///< gap -> face index
    std::vector<std::vector<int>> face_gaps; ///< face -> sorted gaps
};

/// `matching` is a TLDiagram of size n reused as a pairing of 2n points.
FaceStructure matching_faces(const TLDiagram& matching);

/// Does an embedded arc between boundary points P and Q separate gap g1 from
/// gap g2 on a circle of N points? Independent of how the arc is drawn.
bool chord_separates(int P, int Q, int g1, int g2, int N);

/// Lowest-weight-0 annular basis diagram: a non-crossing matching of the 2n
/// outer points plus the complementary face holding the inner hole.
class AnnularDiagram {
public:
    AnnularDiagram(TLDiagram matching, int hole_face);

    static AnnularDiagram vacuum(); ///< n = 0

    int n() const { return matching_.size(); }
    const TLDiagram& matching() const { return matching_; }
    int hole_face() const { return hole_face_; }

    bool operator==(const AnnularDiagram& o) const {
        return matching_ == o.matching_ && hole_face_ == o.hole_face_;
    }
    bool operator!=(const AnnularDiagram& o) const { return !(*this == o); }
    bool operator<(const AnnularDiagram& o) const {
        if (matching_ != o.matching_) return matching_ < o.matching_;
        return hole_face_ < o.hole_face_;
    }

    std::string str() const;

private:
    TLDiagram matching_;
    int hole_face_;
};

/// All (matching, face) pairs at weight n, ordered (matching lex, face asc);
/// count is binom(2n, n).
const std::vector<AnnularDiagram>& enumerate_annular_basis(int n);

/// Inner product of two basis diagrams: glue a against the reflection of b
/// along the outer circle; each closed curve separating the two holes counts
/// t, every other closed curve counts delta.
TPoly gram_entry(const AnnularDiagram& a, const AnnularDiagram& b);

/// Symmetric binom(2n,n)-square Gram matrix over the canonical basis.
std::vector<std::vector<TPoly>> gram_matrix(int n);

/// Closure of a rectangular 2n-strand element around the annulus: top point i
/// joins bottom point i with arcs passing the hole. Loops of winding 0 count
/// delta, winding +-1 count t.
TPoly annular_trace(const TLElement& x);

/// Per-loop net signed closure-arc traversals for one diagram (all values
/// must land in {-1, 0, +1}; exposed for the winding sanity property).
std::vector<int> annular_closure_windings(const TLDiagram& d);

/// Weighted combination of annular basis diagrams with TPoly coefficients.
class AnnularVector {
public:
    explicit AnnularVector(int n) : n_(n) {}
    AnnularVector(const AnnularDiagram& d, TPoly c = TPoly(1)) : n_(d.n()) {
        add_term(d, std::move(c));
    }

    int n() const { return n_; }
    const std::map<AnnularDiagram, TPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TPoly coeff(const AnnularDiagram& d) const;
    void add_term(const AnnularDiagram& d, TPoly c);

    AnnularVector operator-() const;
    AnnularVector operator+(const AnnularVector& o) const;
    AnnularVector operator-(const AnnularVector& o) const;
    AnnularVector operator*(const TPoly& c) const;
    AnnularVector& operator+=(const AnnularVector& o) { return *this = *this + o; }

    bool operator==(const AnnularVector& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const AnnularVector& o) const { return !(*this == o); }

private:
    int n_;
    std::map<AnnularDiagram, TPoly> terms_;
};

/// <u, v> via bilinear extension of gram_entry (coefficients are real
/// polynomials, so no conjugation).
TPoly annular_inner(const AnnularVector& u, const AnnularVector& v);

/// Elementary annular tangles. Index conventions:
///  - cap(i) on V_n (n >= 1, 0 <= i < 2n) joins outer points i and i+1 mod 2n.
///  - cup(i): V_n -> V_{n+1} (0 <= i < 2n+2) inserts an adjacent pair so the
///    new chord occupies result positions (i, i+1) for i <= 2n, or (2n+1, 0)
///    for the wrap slot i = 2n+1. cap(i) and cup(i) are each other's
///    reflections, so dagger(cap i) = cup i over the shared index range.
///  - rotate shifts labels by +1 (point k -> k+1 mod 2n), rotate_inv by -1.
struct Tangle {
    enum class Kind { Identity, Cap, Cup, Rotate, RotateInv };
    Kind kind = Kind::Identity;
    int index = 0; ///< for Cap/Cup

    static Tangle identity() { return {Kind::Identity, 0}; }
    static Tangle cap(int i) { return {Kind::Cap, i}; }
    static Tangle cup(int i) { return {Kind::Cup, i}; }
    static Tangle rotate() { return {Kind::Rotate, 0}; }
    static Tangle rotate_inv() { return {Kind::RotateInv, 0}; }
};

/// Reflection in a circle between inner and outer boundary: swaps cap/cup
/// with the same index and inverts rotations.
Tangle dagger(const Tangle& t);

AnnularVector cap(int i, const AnnularVector& v);
AnnularVector cup(int i, const AnnularVector& v);
AnnularVector rotate(const AnnularVector& v);
AnnularVector rotate_inv(const AnnularVector& v);
AnnularVector apply_tangle(const Tangle& t, const AnnularVector& v);

/// Weight of the target module V_m for a tangle applied at weight n.
int tangle_target(const Tangle& t, int n);

/// Matrix of the tangle action, rows indexed by the target basis and columns
/// by the source basis.
std::vector<std::vector<TPoly>> action_matrix(const Tangle& t, int n);

/// Smallest k >= 1 with rotate^k = identity on the weight-n basis
/// (measured, not asserted; always divides 2n in this model).
int rotation_period(int n);

} // namespace tlj
