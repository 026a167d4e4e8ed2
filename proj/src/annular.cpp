#include "tlj/annular.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "tlj/config.hpp"

namespace tlj {

namespace {

// Gap g lies in the clockwise interval (P, Q] of gaps swept going from point
// P to point Q (gap g sits just before point g). N points and N gaps.
bool gap_in_cw(int g, int P, int Q, int N) {
    return ((g - P - 1 + 2 * N) % N) < ((Q - P + 2 * N) % N);
}

} // namespace

bool chord_separates(int P, int Q, int g1, int g2, int N) {
    return gap_in_cw(g1, P, Q, N) != gap_in_cw(g2, P, Q, N);
}

FaceStructure matching_faces(const TLDiagram& matching) {
    const int n = matching.size();
    const int N = 2 * n;
    FaceStructure fs;
    fs.gap_face.assign(static_cast<std::size_t>(N), -1);
    if (n == 0) {
        fs.face_gaps.push_back({});
        return fs;
    }
    // Walking the boundary, the chords open at gap g are those covering it;
    // the innermost one (stack top) identifies the face.
    std::vector<int> stack;
    std::map<int, int> key_to_face; // stack-top chord id (or -1) -> face index
    for (int g = 0; g < N; ++g) {
        int key = stack.empty() ? -1 : stack.back();
        auto it = key_to_face.find(key);
        int face;
        if (it == key_to_face.end()) {
            face = static_cast<int>(fs.face_gaps.size());
            key_to_face.emplace(key, face);
            fs.face_gaps.push_back({});
        } else {
            face = it->second;
        }
        fs.gap_face[static_cast<std::size_t>(g)] = face;
        fs.face_gaps[static_cast<std::size_t>(face)].push_back(g);
        int partner = matching.partner(g);
        if (partner > g)
            stack.push_back(g);
        else
            stack.pop_back();
    }
    return fs;
}

AnnularDiagram::AnnularDiagram(TLDiagram matching, int hole_face)
    : matching_(std::move(matching)), hole_face_(hole_face) {
    if (hole_face_ < 0 || hole_face_ > matching_.size())
        throw domain_error("hole face index out of range");
}

AnnularDiagram AnnularDiagram::vacuum() {
    return AnnularDiagram(TLDiagram(0, {}), 0);
}

std::string AnnularDiagram::str() const {
    std::ostringstream out;
    out << matching_.str() << "@f" << hole_face_;
    return out.str();
}

const std::vector<AnnularDiagram>& enumerate_annular_basis(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<AnnularDiagram>> cache;
    if (n < 0) throw domain_error("negative annular weight");
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<AnnularDiagram> basis;
    for (const TLDiagram& m : enumerate_basis(n))
        for (int f = 0; f <= n; ++f) basis.emplace_back(m, f);
    return cache.emplace(n, std::move(basis)).first->second;
}

TPoly gram_entry(const AnnularDiagram& a, const AnnularDiagram& b) {
    if (a.n() != b.n()) throw size_mismatch_error("gram_entry: weight mismatch");
    const int n = a.n();
    if (n == 0) return TPoly(1);
    const int N = 2 * n;
    // Reference path from each hole to the gluing circle at gap 0; a chord is
    // crossed an odd number of times exactly when it separates the hole's
    // face from gap 0. Reflection of b fixes the boundary points, so its
    // chords are tested in its own coordinates.
    const int ga = matching_faces(a.matching()).face_gaps[static_cast<std::size_t>(a.hole_face())][0];
    const int gb = matching_faces(b.matching()).face_gaps[static_cast<std::size_t>(b.hole_face())][0];

    std::vector<bool> visited(static_cast<std::size_t>(N), false);
    int c_delta = 0, c_t = 0;
    for (int p = 0; p < N; ++p) {
        if (visited[static_cast<std::size_t>(p)]) continue;
        int parity = 0;
        int cur = p;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            int qa = a.matching().partner(cur);
            visited[static_cast<std::size_t>(qa)] = true;
            parity += chord_separates(cur, qa, ga, 0, N) ? 1 : 0;
            int qb = b.matching().partner(qa);
            parity += chord_separates(qa, qb, gb, 0, N) ? 1 : 0;
            cur = qb;
        } while (cur != p);
        if (parity % 2)
            ++c_t;
        else
            ++c_delta;
    }
    return TPoly::monomial(c_t, delta_scalar().pow(c_delta));
}

std::vector<std::vector<TPoly>> gram_matrix(int n) {
    if (n < 0) throw domain_error("negative annular weight");
    if (2 * n > max_strands())
        throw resource_limit_error("gram_matrix: weight exceeds strand cap");
    const auto& basis = enumerate_annular_basis(n);
    const std::size_t d = basis.size();
    std::vector<std::vector<TPoly>> g(d, std::vector<TPoly>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            g[i][j] = gram_entry(basis[i], basis[j]);
            if (j != i) g[j][i] = g[i][j];
        }
    }
    return g;
}

std::vector<int> annular_closure_windings(const TLDiagram& d) {
    const int m = d.size();
    const int N = 2 * m;
    std::vector<bool> visited(static_cast<std::size_t>(N), false);
    std::vector<int> windings;
    for (int p = 0; p < N; ++p) {
        if (visited[static_cast<std::size_t>(p)]) continue;
        int w = 0;
        int cur = p;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            int q = d.partner(cur);
            visited[static_cast<std::size_t>(q)] = true;
            w += (q < m) ? 1 : -1; // closure arc traversed top->bottom or back
            cur = N - 1 - q;
        } while (cur != p);
        windings.push_back(w);
    }
    return windings;
}

TPoly annular_trace(const TLElement& x) {
    if (x.size() % 2 != 0) throw domain_error("annular_trace requires an even strand count");
    TPoly total;
    for (const auto& [diag, coeff] : x.terms()) {
        int c_delta = 0, c_t = 0;
        for (int w : annular_closure_windings(diag)) {
            if (w == 0) {
                ++c_delta;
            } else if (w == 1 || w == -1) {
                ++c_t;
            } else {
                throw error("annular closure produced |winding| > 1");
            }
        }
        total += TPoly::monomial(c_t, coeff * delta_scalar().pow(c_delta));
    }
    return total;
}

TPoly AnnularVector::coeff(const AnnularDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? TPoly() : it->second;
}

void AnnularVector::add_term(const AnnularDiagram& d, TPoly c) {
    if (d.n() != n_) throw size_mismatch_error("annular term weight mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AnnularVector AnnularVector::operator-() const {
    AnnularVector r(n_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

AnnularVector AnnularVector::operator+(const AnnularVector& o) const {
    if (n_ != o.n_) throw size_mismatch_error("annular add: weight mismatch");
    AnnularVector r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

AnnularVector AnnularVector::operator-(const AnnularVector& o) const { return *this + (-o); }

AnnularVector AnnularVector::operator*(const TPoly& c) const {
    AnnularVector r(n_);
    if (c.is_zero()) return r;
    for (const auto& [d, cc] : terms_) r.terms_.emplace(d, cc * c);
    return r;
}

TPoly annular_inner(const AnnularVector& u, const AnnularVector& v) {
    if (u.n() != v.n()) throw size_mismatch_error("annular_inner: weight mismatch");
    TPoly total;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) total += gram_entry(a, b) * ca * cb;
    return total;
}

Tangle dagger(const Tangle& t) {
    switch (t.kind) {
        case Tangle::Kind::Cap: return Tangle::cup(t.index);
        case Tangle::Kind::Cup: return Tangle::cap(t.index);
        case Tangle::Kind::Rotate: return Tangle::rotate_inv();
        case Tangle::Kind::RotateInv: return Tangle::rotate();
        case Tangle::Kind::Identity: return t;
    }
    return t;
}

namespace {

// cap on one basis diagram: returns the image diagram and the loop weight
// (1 when no loop closes).
std::pair<AnnularDiagram, TPoly> cap_diagram(int i, const AnnularDiagram& d) {
    const int n = d.n();
    const int N = 2 * n;
    if (n < 1) throw domain_error("cap requires weight >= 1");
    if (i < 0 || i >= N) throw domain_error("cap index out of range");
    const TLDiagram& m = d.matching();
    const int j = (i + 1) % N;
    FaceStructure fs = matching_faces(m);
    const auto& hole_gaps = fs.face_gaps[static_cast<std::size_t>(d.hole_face())];

    const bool closes_loop = (m.partner(i) == j);
    TPoly weight(1);
    if (closes_loop) {
        // The loop bounds the face wedged under the chord (i,j), whose only
        // gap is j; it encircles the hole exactly when the hole lives there.
        bool encircles = fs.gap_face[static_cast<std::size_t>(j)] == d.hole_face();
        weight = encircles ? TPoly::t() : TPoly(delta_scalar());
    }

    // Representative gap of the hole's region among the survivors. Gap j is
    // swallowed by the cap; in the loop case with the hole inside, the freed
    // region merges with the far side of the old chord (reachable via gap i).
    int g_old = -1;
    for (int g : hole_gaps) {
        if (g != j) {
            g_old = g;
            break;
        }
    }
    if (g_old == -1) {
        if (!closes_loop) throw error("cap: hole face degenerate without a loop");
        g_old = i;
    }

    if (n == 1) return {AnnularDiagram::vacuum(), weight};

    std::vector<int> relabel(static_cast<std::size_t>(N), -1);
    int next = 0;
    for (int k = 0; k < N; ++k)
        if (k != i && k != j) relabel[static_cast<std::size_t>(k)] = next++;
    std::vector<int> pairing(static_cast<std::size_t>(N - 2), -1);
    for (int k = 0; k < N; ++k) {
        if (k == i || k == j) continue;
        int partner = m.partner(k);
        if (partner == i) partner = m.partner(j); // reroute x--y through the cap
        if (partner == j) partner = m.partner(i);
        pairing[static_cast<std::size_t>(relabel[static_cast<std::size_t>(k)])] =
            relabel[static_cast<std::size_t>(partner)];
    }
    TLDiagram nm(n - 1, std::move(pairing));
    // Old gap g maps to the new gap preceding the first surviving point >= g.
    int survivors_before = 0;
    for (int k = 0; k < g_old; ++k)
        if (k != i && k != j) ++survivors_before;
    int g_new = survivors_before % (N - 2);
    int hole = matching_faces(nm).gap_face[static_cast<std::size_t>(g_new)];
    return {AnnularDiagram(std::move(nm), hole), weight};
}

AnnularDiagram cup_diagram(int i, const AnnularDiagram& d) {
    const int n = d.n();
    const int N = 2 * n;
    const int Nn = N + 2;
    if (i < 0 || i >= Nn) throw domain_error("cup index out of range");
    const TLDiagram& m = d.matching();
    const bool wrap = (i == Nn - 1);
    auto remap = [&](int k) { return wrap ? k + 1 : (k >= i ? k + 2 : k); };
    std::vector<int> pairing(static_cast<std::size_t>(Nn), -1);
    for (int k = 0; k < N; ++k)
        pairing[static_cast<std::size_t>(remap(k))] = remap(m.partner(k));
    int a = wrap ? Nn - 1 : i;
    int b = wrap ? 0 : i + 1;
    pairing[static_cast<std::size_t>(a)] = b;
    pairing[static_cast<std::size_t>(b)] = a;
    TLDiagram nm(n + 1, std::move(pairing));

    int g_new;
    if (n == 0) {
        g_new = (i == 0) ? 0 : 1; // hole stays on the side away from the cup
    } else {
        int g = matching_faces(m).face_gaps[static_cast<std::size_t>(d.hole_face())][0];
        if (wrap)
            g_new = g + 1;
        else
            g_new = (g < i) ? g : (g == i ? i : g + 2);
    }
    int hole = matching_faces(nm).gap_face[static_cast<std::size_t>(g_new)];
    return AnnularDiagram(std::move(nm), hole);
}

AnnularDiagram rotate_diagram(const AnnularDiagram& d, int shift) {
    const int n = d.n();
    const int N = 2 * n;
    if (n == 0) return d;
    const TLDiagram& m = d.matching();
    auto sigma = [&](int k) { return ((k + shift) % N + N) % N; };
    std::vector<int> pairing(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k)
        pairing[static_cast<std::size_t>(sigma(k))] = sigma(m.partner(k));
    TLDiagram nm(n, std::move(pairing));
    int g = matching_faces(m).face_gaps[static_cast<std::size_t>(d.hole_face())][0];
    int hole = matching_faces(nm).gap_face[static_cast<std::size_t>(sigma(g))];
    return AnnularDiagram(std::move(nm), hole);
}

} // namespace

AnnularVector cap(int i, const AnnularVector& v) {
    AnnularVector r(v.n() - 1);
    for (const auto& [d, c] : v.terms()) {
        auto [img, w] = cap_diagram(i, d);
        r.add_term(img, c * w);
    }
    return r;
}

AnnularVector cup(int i, const AnnularVector& v) {
    AnnularVector r(v.n() + 1);
    for (const auto& [d, c] : v.terms()) r.add_term(cup_diagram(i, d), c);
    return r;
}

AnnularVector rotate(const AnnularVector& v) {
    AnnularVector r(v.n());
    for (const auto& [d, c] : v.terms()) r.add_term(rotate_diagram(d, 1), c);
    return r;
}

AnnularVector rotate_inv(const AnnularVector& v) {
    AnnularVector r(v.n());
    for (const auto& [d, c] : v.terms()) r.add_term(rotate_diagram(d, -1), c);
    return r;
}

AnnularVector apply_tangle(const Tangle& t, const AnnularVector& v) {
    switch (t.kind) {
        case Tangle::Kind::Identity: return v;
        case Tangle::Kind::Cap: return cap(t.index, v);
        case Tangle::Kind::Cup: return cup(t.index, v);
        case Tangle::Kind::Rotate: return rotate(v);
        case Tangle::Kind::RotateInv: return rotate_inv(v);
    }
    throw domain_error("invalid tangle descriptor");
}

int tangle_target(const Tangle& t, int n) {
    switch (t.kind) {
        case Tangle::Kind::Cap: return n - 1;
        case Tangle::Kind::Cup: return n + 1;
        default: return n;
    }
}

std::vector<std::vector<TPoly>> action_matrix(const Tangle& t, int n) {
    const int m = tangle_target(t, n);
    if (m < 0) throw domain_error("tangle target weight negative");
    const auto& src = enumerate_annular_basis(n);
    const auto& dst = enumerate_annular_basis(m);
    std::map<AnnularDiagram, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index.emplace(dst[r], r);
    std::vector<std::vector<TPoly>> mat(dst.size(), std::vector<TPoly>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
        AnnularVector img = apply_tangle(t, AnnularVector(src[c]));
        for (const auto& [d, coeff] : img.terms()) mat[index.at(d)][c] = coeff;
    }
    return mat;
}

int rotation_period(int n) {
    if (n == 0) return 1;
    const auto& basis = enumerate_annular_basis(n);
    std::vector<AnnularDiagram> cur(basis.begin(), basis.end());
    for (int k = 1; k <= 2 * n; ++k) {
        bool identity = true;
        for (std::size_t c = 0; c < basis.size(); ++c) {
            cur[c] = rotate_diagram(cur[c], 1);
            if (!(cur[c] == basis[c])) identity = false;
        }
        if (identity) return k;
    }
    throw error("rotation period exceeded 2n");
}

} // namespace tlj
