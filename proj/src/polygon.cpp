#include "k0cat/polygon.hpp"

#include <algorithm>
#include <sstream>

namespace k0cat::polygon {

namespace {

void require_allowable(const PolygonParams& par, const Diagonal& d) {
    if (!is_q_allowable(par, d.u, d.v))
        throw ValidationError("not an admissible diagonal: " + display(d));
}

// Is x strictly inside the counterclockwise open arc from `from` to `to`?
bool in_open_arc(const PolygonParams& par, int from, int to, int x) {
    int gx = gap_ccw(par, from, x);
    return 0 < gx && gx < gap_ccw(par, from, to);
}

// Endpoint labeling of a crossing pair: b keeps its canonical order
// (b0, b1) = (b.u, b.v); a is ordered so that a0 lies strictly inside the
// counterclockwise arc b0 -> b1 (crossing guarantees exactly one does).
struct CrossingFrame {
    int b0, b1, a0, a1;
};

CrossingFrame crossing_frame(const PolygonParams& par, const Diagonal& a, const Diagonal& b) {
    CrossingFrame f{b.u, b.v, a.u, a.v};
    if (!in_open_arc(par, f.b0, f.b1, f.a0)) std::swap(f.a0, f.a1);
    return f;
}

} // namespace

PolygonParams make_params(int p, int q) {
    if (p < 1) throw ValidationError("p must be at least 1");
    if (q < 2) throw ValidationError("q must be at least 2");
    PolygonParams par;
    par.p = p;
    par.q = q;
    par.n = (p + 1) * q + 2;
    return par;
}

std::string display(const Diagonal& d) {
    std::ostringstream out;
    out << "{" << d.u << "," << d.v << "}";
    return out.str();
}

int mod_n(const PolygonParams& par, long long x) {
    long long r = x % par.n;
    if (r < 0) r += par.n;
    return static_cast<int>(r);
}

int gap_ccw(const PolygonParams& par, int from, int to) {
    return mod_n(par, static_cast<long long>(to) - from);
}

bool adjacent_vertices(const PolygonParams& par, int u, int v) {
    int g = gap_ccw(par, u, v);
    return g == 1 || g == par.n - 1;
}

bool is_q_allowable(const PolygonParams& par, int u, int v) {
    if (u < 0 || u >= par.n || v < 0 || v >= par.n) return false;
    if (u == v || adjacent_vertices(par, u, v)) return false;
    int g = gap_ccw(par, u, v);
    return (g - 1) % par.q == 0 && (par.n - g - 1) % par.q == 0;
}

Diagonal make_diagonal(const PolygonParams& par, int u, int v) {
    if (!is_q_allowable(par, u, v)) {
        std::ostringstream out;
        out << "not an admissible diagonal: {" << u << "," << v << "}";
        throw ValidationError(out.str());
    }
    return Diagonal{std::min(u, v), std::max(u, v)};
}

std::vector<Diagonal> enumerate_allowable(const PolygonParams& par) {
    std::vector<Diagonal> all;
    for (int u = 0; u < par.n; ++u)
        for (int v = u + 1; v < par.n; ++v)
            if (is_q_allowable(par, u, v)) all.push_back(Diagonal{u, v});
    return all;
}

Diagonal suspend(const PolygonParams& par, const Diagonal& d, long long k) {
    require_allowable(par, d);
    int u = mod_n(par, d.u - k);
    int v = mod_n(par, d.v - k);
    return Diagonal{std::min(u, v), std::max(u, v)};
}

bool hom_nonzero(const PolygonParams& par, const Diagonal& b, const Diagonal& a) {
    require_allowable(par, b);
    require_allowable(par, a);
    const int gap01 = gap_ccw(par, b.u, b.v);
    const int gap10 = par.n - gap01;
    const int ends[2][2] = {{a.u, a.v}, {a.v, a.u}};
    for (const auto& e : ends) {
        int o0 = gap_ccw(par, b.u, e[0]);
        int o1 = gap_ccw(par, b.v, e[1]);
        if (o0 % par.q == 0 && o1 % par.q == 0 && o0 <= gap01 - 2 && o1 <= gap10 - 2)
            return true;
    }
    return false;
}

bool hom_nonzero_dual(const PolygonParams& par, const Diagonal& b, const Diagonal& a) {
    require_allowable(par, b);
    require_allowable(par, a);
    const int ends[2][2] = {{a.u, a.v}, {a.v, a.u}};
    for (const auto& e : ends) {
        int ga = gap_ccw(par, e[0], e[1]);
        int o0 = gap_ccw(par, b.u, e[0]);
        int o1 = gap_ccw(par, b.v, e[1]);
        if (o0 % par.q == 0 && o1 % par.q == 0 && o0 <= (par.n - ga) - 2 && o1 <= ga - 2)
            return true;
    }
    return false;
}

bool crossing(const PolygonParams& par, const Diagonal& a, const Diagonal& b) {
    require_allowable(par, a);
    require_allowable(par, b);
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
    int inside = 0;
    if (in_open_arc(par, a.u, a.v, b.u)) ++inside;
    if (in_open_arc(par, a.u, a.v, b.v)) ++inside;
    return inside == 1;
}

bool crossing_via_ext(const PolygonParams& par, const Diagonal& a, const Diagonal& b) {
    for (int i = 1; i <= par.q; ++i)
        if (hom_nonzero(par, a, suspend(par, b, i))) return true;
    return false;
}

void FormalObject::add(const Diagonal& d) {
    summands.insert(std::upper_bound(summands.begin(), summands.end(), d), d);
}

std::string display(const FormalObject& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < f.summands.size(); ++i) {
        if (i > 0) out << " (+) ";
        out << display(f.summands[i]);
    }
    return out.str();
}

int ext_shift(const PolygonParams& par, const Diagonal& a, const Diagonal& b) {
    if (!crossing(par, a, b))
        throw NotCrossing("diagonals do not cross: " + display(a) + ", " + display(b));
    CrossingFrame f = crossing_frame(par, a, b);
    // Rotating a clockwise moves a0 toward b0; the shifted arc {a0 - i, b0}
    // must stay on the near side of b0 (positive remaining gap) and snap to
    // an edge or an admissible arc, i.e. remaining gap 1 mod q.  Exactly one
    // shift in 0..q-1 qualifies.
    const int g = gap_ccw(par, f.b0, f.a0);
    int found = -1;
    for (int i = 0; i < par.q; ++i) {
        int gd = g - i;
        if (gd < 1) break;
        if ((gd - 1) % par.q == 0) {
            if (found >= 0)
                throw ModelScopeError("ambiguous shift for " + display(a) + " over " + display(b));
            found = i;
        }
    }
    if (found < 0)
        throw ModelScopeError("no admissible shift for " + display(a) + " over " + display(b));
    return found;
}

TriangleOver triangle_over(const PolygonParams& par, const Diagonal& a, const Diagonal& b) {
    TriangleOver t;
    t.l = ext_shift(par, a, b); // also rejects non-crossing pairs
    CrossingFrame f = crossing_frame(par, a, b);

    // Candidate middle arcs; an arc that is a polygon edge is the zero
    // summand, anything else must be admissible.
    const int arcs[2][2] = {
        {mod_n(par, static_cast<long long>(f.a0) - t.l), f.b0},
        {f.b1, mod_n(par, static_cast<long long>(f.a1) - t.l)},
    };
    for (const auto& arc : arcs) {
        if (arc[0] == arc[1])
            throw ModelScopeError("degenerate middle arc over " + display(b));
        if (adjacent_vertices(par, arc[0], arc[1])) continue;
        if (!is_q_allowable(par, arc[0], arc[1]))
            throw ModelScopeError("inadmissible middle arc over " + display(b));
        t.middle.add(Diagonal{std::min(arc[0], arc[1]), std::max(arc[0], arc[1])});
    }
    return t;
}

Angulation make_angulation(const PolygonParams& par, std::vector<Diagonal> diagonals) {
    if (static_cast<int>(diagonals.size()) != par.p)
        throw ValidationError("an angulation needs exactly p diagonals");
    for (Diagonal& d : diagonals) d = make_diagonal(par, d.u, d.v);
    std::sort(diagonals.begin(), diagonals.end());
    for (std::size_t i = 0; i + 1 < diagonals.size(); ++i)
        if (diagonals[i] == diagonals[i + 1])
            throw ValidationError("duplicate diagonal in angulation: " + display(diagonals[i]));
    for (std::size_t i = 0; i < diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals.size(); ++j)
            if (crossing(par, diagonals[i], diagonals[j]))
                throw ValidationError("angulation diagonals cross: " + display(diagonals[i]) +
                                      ", " + display(diagonals[j]));
    return Angulation{par, std::move(diagonals)};
}

Angulation fan_angulation(const PolygonParams& par) {
    std::vector<Diagonal> ds;
    ds.push_back(make_diagonal(par, 0, par.q + 1));
    for (int i = 1; i < par.p; ++i)
        ds.push_back(make_diagonal(par, par.n - i, (1 + i) * par.q + 1 - i));
    return make_angulation(par, std::move(ds));
}

std::vector<Angulation> enumerate_angulations(const PolygonParams& par) {
    std::vector<Diagonal> all = enumerate_allowable(par);
    std::vector<Angulation> result;
    std::vector<Diagonal> chosen;
    // Backtracking over the lexicographically sorted diagonal list; the
    // partial selection stays pairwise non-crossing.
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(chosen.size()) == par.p) {
            result.push_back(Angulation{par, chosen});
            return;
        }
        std::size_t needed = par.p - chosen.size();
        for (std::size_t i = start; i + needed <= all.size(); ++i) {
            bool ok = true;
            for (const Diagonal& c : chosen)
                if (crossing(par, c, all[i])) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(all[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
    return result;
}

namespace {

// The summands of `candidates` that are maximal in the factorization order:
// s is dominated when it has a nonzero morphism to another candidate.  A
// two-sided pair would make "maximal" meaningless, so it is rejected loudly.
std::vector<Diagonal> maximal_candidates(const PolygonParams& par,
                                         const std::vector<Diagonal>& candidates) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (hom_nonzero(par, candidates[i], candidates[j]) &&
                hom_nonzero(par, candidates[j], candidates[i]))
                throw ModelScopeError("two-sided morphisms between cover candidates " +
                                      display(candidates[i]) + " and " + display(candidates[j]));
    std::vector<Diagonal> maximal;
    for (const Diagonal& s : candidates) {
        bool dominated = false;
        for (const Diagonal& t : candidates)
            if (!(t == s) && hom_nonzero(par, s, t)) { dominated = true; break; }
        if (!dominated) maximal.push_back(s);
    }
    return maximal;
}

// Completes a cover u -> x (x a single diagonal) to a triangle
//   z -> u -> x -> suspend(z, -1)
// and returns z, which may have zero, one, or two summands.  Morphism
// spaces between diagonals are at most one-dimensional, so the triangle on
// a nonzero map is unique up to isomorphism and can be located inside the
// standard family: either directly as a triangle over x with middle u, or
// - when u is a single diagonal - as the rotated triangle over the shift
// of u with middle suspend(z, 1).  Both searches run; disagreement or
// absence is reported as an unsupported cone.
FormalObject cone_of_cover_single(const PolygonParams& par,
                                  const std::vector<Diagonal>& all,
                                  const FormalObject& u,
                                  const Diagonal& x) {
    if (u.is_zero()) {
        FormalObject z;
        z.add(suspend(par, x, -1));
        return z;
    }
    if (u.summands.size() == 1 && u.summands[0] == x) return FormalObject{};

    std::vector<FormalObject> found;
    auto record = [&found](const FormalObject& z) {
        if (std::find(found.begin(), found.end(), z) == found.end()) found.push_back(z);
    };

    // Triangles over x itself: single-diagonal completions.
    for (const Diagonal& a : all) {
        if (!crossing(par, a, x)) continue;
        TriangleOver t = triangle_over(par, a, x);
        if (t.middle == u) {
            FormalObject z;
            z.add(suspend(par, a, t.l));
            record(z);
        }
    }

    // Rotated presentation x -> suspend(z, -1)... over the shift of a
    // single-diagonal cover: its middle is the shift of z, which may
    // decompose.
    if (u.summands.size() == 1) {
        Diagonal su = suspend(par, u.summands[0], 1);
        for (int l = 0; l < par.q; ++l) {
            Diagonal a = suspend(par, x, -l);
            if (!crossing(par, a, su)) continue;
            TriangleOver t = triangle_over(par, a, su);
            if (t.l != l) continue; // first term of that triangle is not x
            FormalObject z;
            for (const Diagonal& s : t.middle.summands) z.add(suspend(par, s, -1));
            record(z);
        }
    }

    if (found.empty())
        throw NonIndecomposableCone("cover " + display(u) + " -> " + display(x) +
                                    " admits no completion in the triangle family");
    if (found.size() > 1)
        throw ModelScopeError("cover " + display(u) + " -> " + display(x) +
                              " admits inequivalent completions");
    return found.front();
}

// Tower variant: single-diagonal states only, as towers require.
std::optional<Diagonal> cone_of_cover(const PolygonParams& par,
                                      const std::vector<Diagonal>& all,
                                      const FormalObject& u,
                                      const std::optional<Diagonal>& x) {
    if (!x) {
        if (!u.is_zero()) throw ModelScopeError("nonzero cover over the zero object");
        return std::nullopt;
    }
    FormalObject z = cone_of_cover_single(par, all, u, *x);
    if (z.is_zero()) return std::nullopt;
    if (z.summands.size() > 1)
        throw NonIndecomposableCone("tower object over " + display(*x) +
                                    " decomposes as " + display(z));
    return z.summands.front();
}

} // namespace

FormalObject t_cover(const Angulation& t, const Diagonal& x) {
    require_allowable(t.params, x);
    FormalObject cover;
    if (std::binary_search(t.diagonals.begin(), t.diagonals.end(), x)) {
        cover.add(x);
        return cover;
    }
    std::vector<Diagonal> candidates;
    for (const Diagonal& s : t.diagonals)
        if (hom_nonzero(t.params, s, x)) candidates.push_back(s);
    for (const Diagonal& s : maximal_candidates(t.params, candidates)) cover.add(s);
    return cover;
}

ARAngleP ar_angle(const Angulation& t, const Diagonal& m) {
    const PolygonParams& par = t.params;
    if (!std::binary_search(t.diagonals.begin(), t.diagonals.end(), m))
        throw ValidationError("tower end " + display(m) + " is not a summand of the angulation");
    const std::vector<Diagonal> all = enumerate_allowable(par);

    ARAngleP angle;
    angle.end = m;

    // Almost-split start: maximal summands of t admitting a morphism to m,
    // m itself excluded.
    std::vector<Diagonal> candidates;
    for (const Diagonal& s : t.diagonals)
        if (!(s == m) && hom_nonzero(par, s, m)) candidates.push_back(s);
    FormalObject u;
    for (const Diagonal& s : maximal_candidates(par, candidates)) u.add(s);

    angle.middles.push_back(u);
    std::optional<Diagonal> x = cone_of_cover(par, all, u, m);
    angle.cones.push_back(x);

    for (int i = 1; i <= par.q; ++i) {
        FormalObject ui = x ? t_cover(t, *x) : FormalObject{};
        angle.middles.push_back(ui);
        x = cone_of_cover(par, all, ui, x);
        angle.cones.push_back(x);
    }
    if (!x || !(*x == m))
        throw ModelScopeError("tower for " + display(m) + " does not close up");
    return angle;
}

IntVec index_polygon(const Angulation& t, const Diagonal& x) {
    const PolygonParams& par = t.params;
    Diagonal d = make_diagonal(par, x.u, x.v);
    const std::vector<Diagonal> all = enumerate_allowable(par);

    // Iterated covers X_0 = x, X_{i+1} = cone(cover(X_i) -> X_i), taken
    // summand by summand since approximation triangles are additive; the
    // tail X_q must consist of angulation summands (or vanish) and enters
    // the alternating sum as the last term.
    std::vector<FormalObject> terms;
    FormalObject cur;
    cur.add(d);
    for (int i = 0; i < par.q; ++i) {
        FormalObject covers, next;
        for (const Diagonal& s : cur.summands) {
            FormalObject u = t_cover(t, s);
            for (const Diagonal& c : u.summands) covers.add(c);
            for (const Diagonal& z : cone_of_cover_single(par, all, u, s).summands)
                next.add(z);
        }
        terms.push_back(covers);
        cur = next;
    }
    for (const Diagonal& s : cur.summands)
        if (!std::binary_search(t.diagonals.begin(), t.diagonals.end(), s))
            throw ModelScopeError("tower tail " + display(s) + " for " + display(d) +
                                  " is not a summand of the angulation");
    terms.push_back(cur);

    IntVec v(t.diagonals.size(), 0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (const Diagonal& s : terms[i].summands) {
            auto it = std::lower_bound(t.diagonals.begin(), t.diagonals.end(), s);
            v[static_cast<std::size_t>(it - t.diagonals.begin())] += sign;
        }
    }
    return v;
}

GroupInvariants k0_polygon(const Angulation& t) {
    GroupPresentation pres;
    for (const Diagonal& d : t.diagonals) pres.generators.push_back(display(d));

    for (const Diagonal& m : t.diagonals) {
        ARAngleP angle = ar_angle(t, m);
        std::map<std::string, Int> rel;
        // End contributions -[m] + (-1)^{q+1}[m]: zero for odd q, -2 else.
        if (t.params.q % 2 == 0) rel[display(m)] += -2;
        for (std::size_t i = 0; i < angle.middles.size(); ++i) {
            const int sign = (i % 2 == 0) ? 1 : -1;
            for (const Diagonal& s : angle.middles[i].summands) rel[display(s)] += sign;
        }
        std::erase_if(rel, [](const auto& kv) { return kv.second == 0; });
        pres.relations.push_back(std::move(rel));
    }
    return quotient_invariants(pres);
}

} // namespace k0cat::polygon
