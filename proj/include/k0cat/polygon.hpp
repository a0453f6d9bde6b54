#pragma once

// Combinatorial model built from diagonals of a convex polygon with a step
// parameter q.  Vertices are 0..n-1 with n = (p+1)q + 2; the admissible
// diagonals are those whose endpoint gaps are congruent to 1 mod q.  On top
// of the diagonals the module provides: existence of morphisms and
// extensions, the distinguished triangle over a crossing pair, covers with
// respect to a maximal non-crossing collection (an angulation), iterated
// cover towers, index vectors, and the abelian group presented by the
// tower relations.

#include <optional>
#include <string>
#include <vector>

#include "k0cat/abelian.hpp"
#include "k0cat/errors.hpp"

namespace k0cat::polygon {

// p >= 1: number of diagonals in an angulation; q >= 2: step parameter.
struct PolygonParams {
    int p = 0;
    int q = 0;
    int n = 0; // (p+1)q + 2 vertices
};

// Validates ranges and computes n.  q = 1 is rejected: with unit step every
// cover tower degenerates and the constructions below do not apply.
PolygonParams make_params(int p, int q);

// A diagonal {u, v}, stored with u < v.
struct Diagonal {
    int u = 0;
    int v = 0;
    auto operator<=>(const Diagonal&) const = default;
};

std::string display(const Diagonal& d);

inline std::ostream& operator<<(std::ostream& out, const Diagonal& d) {
    return out << display(d);
}

int mod_n(const PolygonParams& par, long long x);
// Counterclockwise distance from one vertex to another: (to - from) mod n.
int gap_ccw(const PolygonParams& par, int from, int to);
bool adjacent_vertices(const PolygonParams& par, int u, int v);

// Admissibility of {u, v}: distinct, non-adjacent vertices whose gap is
// congruent to 1 mod q on both sides (the two conditions are equivalent
// because n = 2 mod q; both are checked for clarity).
bool is_q_allowable(const PolygonParams& par, int u, int v);

// Canonical admissible diagonal; throws ValidationError otherwise.
Diagonal make_diagonal(const PolygonParams& par, int u, int v);

// All admissible diagonals in lexicographic order.
std::vector<Diagonal> enumerate_allowable(const PolygonParams& par);

// Shift functor on diagonals: rotate both endpoints k steps clockwise,
// i.e. vertex x goes to x - k.  Negative k rotates counterclockwise.
Diagonal suspend(const PolygonParams& par, const Diagonal& d, long long k);

// Is there a nonzero morphism b -> a?  Decided by a window test: a must be
// reachable from b by rotating the two endpoints independently by multiples
// of q that stay short of the opposite endpoint.
bool hom_nonzero(const PolygonParams& par, const Diagonal& b, const Diagonal& a);

// The same question decided from the receiving side, with the windows
// anchored at a's endpoints.  Kept as a separate code path so the two
// formulations can be checked against each other.
bool hom_nonzero_dual(const PolygonParams& par, const Diagonal& b, const Diagonal& a);

// Transversal crossing: the endpoints of a and b interleave strictly.
bool crossing(const PolygonParams& par, const Diagonal& a, const Diagonal& b);

// Crossing detected through the shift functor instead: some extension
// Hom(a, suspend(b, i)) with i in 1..q is nonzero.  Equal to crossing();
// kept separate as an independent route.
bool crossing_via_ext(const PolygonParams& par, const Diagonal& a, const Diagonal& b);

// Formal finite direct sum of diagonals; the empty sum is the zero object.
struct FormalObject {
    std::vector<Diagonal> summands; // sorted multiset

    void add(const Diagonal& d);
    bool is_zero() const { return summands.empty(); }
    bool operator==(const FormalObject& other) const = default;
};

std::string display(const FormalObject& f);

inline std::ostream& operator<<(std::ostream& out, const FormalObject& f) {
    return out << display(f);
}

// The unique shift l in 0..q-1 for which a crossing pair (a, b) sits in a
// distinguished triangle  suspend(a, l) -> e -> b -> suspend(a, l + 1).
// Throws NotCrossing when the diagonals do not cross.
int ext_shift(const PolygonParams& par, const Diagonal& a, const Diagonal& b);

struct TriangleOver {
    int l = 0;          // shift applied to a
    FormalObject middle; // e: zero, one, or two diagonals
};

// The distinguished triangle over a crossing pair, with the two candidate
// middle arcs {a0 - l, b0} and {b1, a1 - l}; an arc that degenerates to a
// polygon edge contributes nothing.
TriangleOver triangle_over(const PolygonParams& par, const Diagonal& a, const Diagonal& b);

// A maximal collection of pairwise non-crossing admissible diagonals.
struct Angulation {
    PolygonParams params;
    std::vector<Diagonal> diagonals; // sorted, size p
};

// Validates size, admissibility, distinctness, and pairwise non-crossing.
Angulation make_angulation(const PolygonParams& par, std::vector<Diagonal> diagonals);

// The fan: {0, q+1} together with {n-i, (1+i)q + 1 - i} for i = 1..p-1.
Angulation fan_angulation(const PolygonParams& par);

// Every angulation, in lexicographic order of their sorted diagonal lists.
std::vector<Angulation> enumerate_angulations(const PolygonParams& par);

// The cover of x with respect to t: x itself if x belongs to t, otherwise
// the summands of t admitting a nonzero morphism to x that are maximal in
// the factorization order (s is dominated by s' when s has a nonzero
// morphism to s').  An empty result is the zero cover.
FormalObject t_cover(const Angulation& t, const Diagonal& x);

// The iterated-cover tower attached to a summand m of an angulation:
// q+2 terms running from m back to m.  middles[i] is the target of the i-th
// twist (i = 0..q, so middles[0] is the almost-split target and the list
// reads right to left in the usual diagram); cones[i] is the tower object
// X_{i+1}, with cones[q] == m on success.
struct ARAngleP {
    Diagonal end;
    std::vector<FormalObject> middles;
    std::vector<std::optional<Diagonal>> cones;
};

ARAngleP ar_angle(const Angulation& t, const Diagonal& m);

// Index vector of the tower resolution of x over the angulation t, as
// integer coordinates in the order of t.diagonals.
IntVec index_polygon(const Angulation& t, const Diagonal& x);

// The abelian group generated by the summands of t subject to one tower
// relation per summand.
GroupInvariants k0_polygon(const Angulation& t);

} // namespace k0cat::polygon
