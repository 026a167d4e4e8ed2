#include "tlj/boxalg.hpp"

#include <algorithm>

#include "tlj/config.hpp"
#include "tlj/jw.hpp"

namespace tlj {

BoxElement BoxElement::unit() {
    return from_component(0, 0, TLElement::identity(0));
}

BoxElement BoxElement::from_component(int n, int m, TLElement x) {
    if (x.size() != n + m) throw size_mismatch_error("box component size must be n+m");
    BoxElement b;
    if (!x.is_zero()) b.components_.emplace(Key{n, m}, std::move(x));
    return b;
}

BoxElement BoxElement::embed_left(const TLElement& x) {
    return from_component(x.size(), 0, x);
}

BoxElement BoxElement::embed_right(const TLElement& x) {
    return from_component(0, x.size(), x);
}

const TLElement* BoxElement::component(int n, int m) const {
    auto it = components_.find(Key{n, m});
    return it == components_.end() ? nullptr : &it->second;
}

void BoxElement::add_component(int n, int m, const TLElement& x) {
    if (x.size() != n + m) throw size_mismatch_error("box component size must be n+m");
    if (x.is_zero()) return;
    auto it = components_.find(Key{n, m});
    if (it == components_.end()) {
        components_.emplace(Key{n, m}, x);
    } else {
        it->second += x;
        if (it->second.is_zero()) components_.erase(it);
    }
}

int BoxElement::total_degree() const {
    int d = -1;
    for (const auto& [k, x] : components_) d = std::max(d, k.first + k.second);
    return d;
}

BoxElement BoxElement::operator-() const {
    BoxElement r;
    for (const auto& [k, x] : components_) r.components_.emplace(k, -x);
    return r;
}

BoxElement BoxElement::operator+(const BoxElement& o) const {
    BoxElement r = *this;
    for (const auto& [k, x] : o.components_) r.add_component(k.first, k.second, x);
    return r;
}

BoxElement BoxElement::operator-(const BoxElement& o) const { return *this + (-o); }

BoxElement BoxElement::operator*(const Scalar& s) const {
    BoxElement r;
    if (s.is_zero()) return r;
    for (const auto& [k, x] : components_) r.components_.emplace(k, x * s);
    return r;
}

namespace {

// Scaffold picture of one contraction term: all points of both factors on a
// single circle, diagram chords plus nested contraction arcs. Everything
// downstream (composite pairing, loops, hole location) is read off it.
struct GlueSetup {
    int total = 0;
    std::vector<int> strand_partner;
    std::vector<int> arc_partner; // -1 when the point survives
};

struct GlueWalk {
    std::vector<int> survivors; // scaffold positions, ascending = composite order
    std::vector<int> pairing;   // composite pairing over slots
    std::vector<std::vector<std::pair<int, int>>> loops;
    std::vector<std::pair<int, int>> strand_segments; // segments of boundary strands
};

GlueWalk run_glue(const GlueSetup& g) {
    const int N = g.total;
    GlueWalk out;
    std::vector<int> slot(static_cast<std::size_t>(N), -1);
    for (int p = 0; p < N; ++p) {
        if (g.arc_partner[static_cast<std::size_t>(p)] < 0) {
            slot[static_cast<std::size_t>(p)] = static_cast<int>(out.survivors.size());
            out.survivors.push_back(p);
        }
    }
    out.pairing.assign(out.survivors.size(), -1);
    std::vector<bool> visited(static_cast<std::size_t>(N), false);
    for (int s : out.survivors) {
        if (visited[static_cast<std::size_t>(s)]) continue;
        visited[static_cast<std::size_t>(s)] = true;
        int cur = s;
        int endpoint = -1;
        for (;;) {
            int q = g.strand_partner[static_cast<std::size_t>(cur)];
            visited[static_cast<std::size_t>(q)] = true;
            out.strand_segments.emplace_back(cur, q);
            int a = g.arc_partner[static_cast<std::size_t>(q)];
            if (a < 0) {
                endpoint = q;
                break;
            }
            visited[static_cast<std::size_t>(a)] = true;
            out.strand_segments.emplace_back(q, a);
            cur = a;
        }
        out.pairing[static_cast<std::size_t>(slot[static_cast<std::size_t>(s)])] =
            slot[static_cast<std::size_t>(endpoint)];
        out.pairing[static_cast<std::size_t>(slot[static_cast<std::size_t>(endpoint)])] =
            slot[static_cast<std::size_t>(s)];
    }
    for (int p = 0; p < N; ++p) {
        if (visited[static_cast<std::size_t>(p)]) continue;
        std::vector<std::pair<int, int>> segs;
        int cur = p;
        for (;;) {
            visited[static_cast<std::size_t>(cur)] = true;
            int q = g.strand_partner[static_cast<std::size_t>(cur)];
            visited[static_cast<std::size_t>(q)] = true;
            segs.emplace_back(cur, q);
            int a = g.arc_partner[static_cast<std::size_t>(q)];
            segs.emplace_back(q, a);
            if (a == p) break;
            cur = a;
        }
        out.loops.push_back(std::move(segs));
    }
    return out;
}

bool same_segment(const std::pair<int, int>& s, const std::pair<int, int>& t) {
    return (s.first == t.first && s.second == t.second) ||
           (s.first == t.second && s.second == t.first);
}

bool loop_contains(const std::vector<std::pair<int, int>>& loop, const std::pair<int, int>& seg) {
    for (const auto& s : loop)
        if (same_segment(s, seg)) return true;
    return false;
}

// One contraction term of the Bacher product or of a pi0 action. The x box
// sits with its M-strings first; `left` toggles which side of the companion
// the box attaches to.
struct Term {
    GlueSetup setup;
    int out_n = 0, out_m = 0;
    int anchor_gap = 0;                        // scaffold gap carrying the hole
    std::pair<int, int> correction{-1, -1};    // extra arc crossed reaching the hole
    bool has_correction = false;
};

Term build_term(const TLDiagram& dx, int n, int m, const TLDiagram& dv, int i, int j, int p,
                int r, bool left) {
    const int s = n + m;
    const int w = i + j;
    Term t;
    t.setup.total = 2 * s + 2 * w;
    t.setup.strand_partner.assign(static_cast<std::size_t>(t.setup.total), -1);
    t.setup.arc_partner.assign(static_cast<std::size_t>(t.setup.total), -1);
    t.out_n = n + i - p;
    t.out_m = m + j - r;

    auto xpos = [&](int c) { return left ? (c < 2 * n ? c : 2 * w + c) : 2 * i + c; };
    auto vpos = [&](int k) { return left ? 2 * n + k : (k < 2 * i ? k : 2 * s + k); };

    for (int c = 0; c < 2 * s; ++c)
        t.setup.strand_partner[static_cast<std::size_t>(xpos(c))] = xpos(dx.partner(c));
    for (int k = 0; k < 2 * w; ++k)
        t.setup.strand_partner[static_cast<std::size_t>(vpos(k))] = vpos(dv.partner(k));

    auto add_arc = [&](int a, int b) {
        t.setup.arc_partner[static_cast<std::size_t>(a)] = b;
        t.setup.arc_partner[static_cast<std::size_t>(b)] = a;
    };
    for (int d = 0; d < p; ++d) {
        if (left)
            add_arc(xpos(2 * n - 1 - d), vpos(d));
        else
            add_arc(xpos(d), vpos(2 * i - 1 - d));
    }
    for (int d = 0; d < r; ++d) {
        if (left)
            add_arc(xpos(2 * n + d), vpos(2 * w - 1 - d));
        else
            add_arc(xpos(2 * s - 1 - d), vpos(2 * i + d));
    }
    return t;
}

// Scaffold gap anchoring the hole, plus the correction arc when the hole's
// only boundary access is the seam between the two factors.
void locate_hole(Term& t, const TLDiagram& dv, int hole_face, int n, int i, int s, int w, int p,
                 bool left) {
    if (w == 0) {
        t.anchor_gap = left ? 2 * n : 0;
        return;
    }
    FaceStructure fs = matching_faces(dv);
    const auto& gaps = fs.face_gaps[static_cast<std::size_t>(hole_face)];
    const int seam = left ? 0 : 2 * i;
    int k = -1;
    for (int g : gaps) {
        if (g != seam) {
            k = g;
            break;
        }
    }
    if (k >= 0) {
        if (left)
            t.anchor_gap = 2 * n + k;
        else
            t.anchor_gap = (k < 2 * i) ? k : 2 * s + k;
        return;
    }
    // Hole face touches the boundary only at the seam.
    t.anchor_gap = left ? 2 * n : 2 * i;
    if (p >= 1) {
        t.correction = left ? std::pair<int, int>{2 * n - 1, 2 * n}
                            : std::pair<int, int>{2 * i, 2 * i - 1};
        t.has_correction = true;
    }
}

// Weight of one closed loop: does it wind around the hole?
bool loop_encircles_hole(const Term& t, const std::vector<std::pair<int, int>>& loop) {
    int parity = 0;
    if (t.has_correction && loop_contains(loop, t.correction)) parity ^= 1;
    for (const auto& [P, Q] : loop)
        if (chord_separates(P, Q, t.anchor_gap, 0, t.setup.total)) parity ^= 1;
    return parity != 0;
}

// Composite gap (slot index) on the hole's side of every boundary strand.
int output_hole_gap(const Term& t, const GlueWalk& walk) {
    int corr = 0;
    if (t.has_correction) {
        for (const auto& seg : walk.strand_segments)
            if (same_segment(seg, t.correction)) corr ^= 1;
    }
    for (std::size_t slot = 0; slot < walk.survivors.size(); ++slot) {
        int G = walk.survivors[slot];
        int parity = corr;
        for (const auto& [P, Q] : walk.strand_segments)
            if (chord_separates(P, Q, t.anchor_gap, G, t.setup.total)) parity ^= 1;
        if (parity == 0) return static_cast<int>(slot);
    }
    throw error("pi0 action: hole region lost its boundary access");
}

} // namespace

BoxElement bacher_mul(const BoxElement& x, const BoxElement& y) {
    BoxElement result;
    const Scalar& d = delta_scalar();
    for (const auto& [kx, ex] : x.components()) {
        const auto [n, m] = kx;
        for (const auto& [ky, ey] : y.components()) {
            const auto [i, j] = ky;
            for (const auto& [dx, cx] : ex.terms()) {
                for (const auto& [dy, cy] : ey.terms()) {
                    for (int p = 0; p <= std::min(2 * n, 2 * i); ++p) {
                        for (int r = 0; r <= std::min(2 * m, 2 * j); ++r) {
                            Term t = build_term(dx, n, m, dy, i, j, p, r, /*left=*/true);
                            GlueWalk walk = run_glue(t.setup);
                            Scalar c = cx * cy * d.pow(static_cast<long>(walk.loops.size()));
                            TLElement piece(TLDiagram(t.out_n + t.out_m, walk.pairing), std::move(c));
                            result.add_component(t.out_n, t.out_m, piece);
                        }
                    }
                }
            }
        }
    }
    return result;
}

BoxElement dagger(const BoxElement& x) {
    BoxElement r;
    for (const auto& [k, ex] : x.components()) {
        const auto [n, m] = k;
        const int N = 2 * (n + m);
        TLElement out(n + m);
        auto sigma = [&](int c) { return ((2 * n - 1 - c) % N + N) % N; };
        for (const auto& [dg, c] : ex.terms()) {
            std::vector<int> pairing(static_cast<std::size_t>(N));
            for (int a = 0; a < N; ++a)
                pairing[static_cast<std::size_t>(sigma(a))] = sigma(dg.partner(a));
            out.add_term(TLDiagram(n + m, std::move(pairing)), c);
        }
        r.add_component(n, m, out);
    }
    return r;
}

Scalar tau(const BoxElement& x) {
    const TLElement* c = x.component(0, 0);
    if (!c) return Scalar();
    return c->coeff(TLDiagram(0, {}));
}

BoxElement embed_jw(int n) {
    if (n < 0) throw domain_error("embed_jw requires n >= 0");
    if (2 * n > max_strands())
        throw resource_limit_error("embed_jw: strand count exceeds cap");
    return BoxElement::from_component(n, n, jones_wenzl(2 * n));
}

std::vector<std::tuple<int, int, TLDiagram>> box_basis(int deg_max) {
    std::vector<std::tuple<int, int, TLDiagram>> basis;
    for (int n = 0; n <= deg_max; ++n)
        for (int m = 0; n + m <= deg_max; ++m)
            for (const TLDiagram& d : enumerate_basis(n + m)) basis.emplace_back(n, m, d);
    return basis;
}

BoxElement random_box(int deg_max, int terms, std::mt19937_64& rng) {
    auto basis = box_basis(deg_max);
    BoxElement r;
    for (int k = 0; k < terms; ++k) {
        const auto& [n, m, d] = basis[static_cast<std::size_t>(rng() % basis.size())];
        long c = static_cast<long>(rng() % 6) - 3;
        if (c >= 0) ++c;
        r.add_component(n, m, TLElement(d, Scalar(c)));
    }
    return r;
}

ModuleVector ModuleVector::vacuum(int weight_cap) {
    ModuleVector v(weight_cap);
    v.add_component(0, 0, AnnularVector(AnnularDiagram::vacuum()));
    return v;
}

const AnnularVector* ModuleVector::component(int i, int j) const {
    auto it = components_.find(Key{i, j});
    return it == components_.end() ? nullptr : &it->second;
}

void ModuleVector::add_component(int i, int j, const AnnularVector& v) {
    if (i + j > weight_cap_)
        throw resource_limit_error("module component exceeds weight cap");
    if (v.n() != i + j) throw size_mismatch_error("module component weight mismatch");
    if (v.is_zero()) return;
    auto it = components_.find(Key{i, j});
    if (it == components_.end()) {
        components_.emplace(Key{i, j}, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) components_.erase(it);
    }
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
    ModuleVector r = *this;
    for (const auto& [k, v] : o.components_) r.add_component(k.first, k.second, v);
    return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
    ModuleVector r = *this;
    for (const auto& [k, v] : o.components_) r.add_component(k.first, k.second, -v);
    return r;
}

namespace {

ActionResult pi0_act(const BoxElement& x, const ModuleVector& v, bool left) {
    ActionResult res{ModuleVector(v.weight_cap()), {}};
    auto flag_overflow = [&res](int i, int j) {
        std::pair<int, int> key{i, j};
        for (const auto& k : res.overflow)
            if (k == key) return;
        res.overflow.push_back(key);
    };
    for (const auto& [kx, ex] : x.components()) {
        const auto [n, m] = kx;
        for (const auto& [kv, av] : v.components()) {
            const auto [i, j] = kv;
            const int w = i + j;
            const int s = n + m;
            for (const auto& [dx, cx] : ex.terms()) {
                for (const auto& [dv, cv] : av.terms()) {
                    for (int p = 0; p <= std::min(2 * n, 2 * i); ++p) {
                        for (int r = 0; r <= std::min(2 * m, 2 * j); ++r) {
                            Term t = build_term(dx, n, m, dv.matching(), i, j, p, r, left);
                            const int oi = left ? n + i - p : i + n - p;
                            const int oj = left ? m + j - r : j + m - r;
                            if (oi + oj > v.weight_cap()) {
                                flag_overflow(oi, oj);
                                continue;
                            }
                            locate_hole(t, dv.matching(), dv.hole_face(), n, i, s, w, p, left);
                            GlueWalk walk = run_glue(t.setup);
                            TPoly factor(Scalar(1));
                            int c_delta = 0, c_t = 0;
                            for (const auto& loop : walk.loops) {
                                if (loop_encircles_hole(t, loop))
                                    ++c_t;
                                else
                                    ++c_delta;
                            }
                            factor = TPoly::monomial(c_t, delta_scalar().pow(c_delta));
                            TLDiagram diag(oi + oj, walk.pairing);
                            int hole;
                            if (oi + oj == 0) {
                                hole = 0;
                            } else {
                                int gap = output_hole_gap(t, walk);
                                hole = matching_faces(diag).gap_face[static_cast<std::size_t>(gap)];
                            }
                            AnnularVector term(oi + oj);
                            term.add_term(AnnularDiagram(diag, hole), cv * factor * TPoly(cx));
                            res.value.add_component(oi, oj, term);
                        }
                    }
                }
            }
        }
    }
    return res;
}

} // namespace

ActionResult pi0_act_left(const BoxElement& x, const ModuleVector& v) {
    return pi0_act(x, v, true);
}

ActionResult pi0_act_right(const BoxElement& x, const ModuleVector& v) {
    return pi0_act(x, v, false);
}

TPoly module_inner(const ModuleVector& u, const ModuleVector& v) {
    TPoly total;
    for (const auto& [k, uv] : u.components()) {
        const AnnularVector* vv = v.component(k.first, k.second);
        if (vv) total += annular_inner(uv, *vv);
    }
    return total;
}

} // namespace tlj
