#pragma once

// Combinatorial model in higher dimension d: objects are (d+1)-subsets of
// z = p + 2d + 1 cyclically ordered points with no two chosen points
// adjacent.  Two such subsets either leave each other alone or intertwine
// (strictly alternate around the circle); every intertwining pair spans an
// angle with d middle terms, from which index vectors with respect to a
// tilting set, relation subgroups, and presented abelian groups are
// computed along two independent routes.

#include <string>
#include <vector>

#include "k0cat/abelian.hpp"
#include "k0cat/errors.hpp"

namespace k0cat::higher {

// p >= 1: rank; d >= 1: dimension; z = p + 2d + 1 points labeled 1..z.
struct HigherParams {
    int p = 0;
    int d = 0;
    int z = 0;
};

HigherParams make_params(int p, int d);

// A sparse (d+1)-subset: sorted point labels, no two cyclically adjacent
// (z and 1 count as adjacent).
struct HIndec {
    std::vector<int> pts;
    auto operator<=>(const HIndec&) const = default;
};

// Concatenated digits when z <= 9 (e.g. "135"), comma-separated otherwise.
std::string display(const HigherParams& par, const HIndec& s);

bool are_adjacent_points(const HigherParams& par, int a, int b);

// Validating constructor: size, range, distinctness, non-adjacency.
HIndec make_indec(const HigherParams& par, std::vector<int> pts);

// All objects in lexicographic order.
std::vector<HIndec> enumerate_indecs(const HigherParams& par);

// The d-fold shift: every point moves to its predecessor (1 wraps to z).
HIndec sigma_d(const HigherParams& par, const HIndec& s);

// Do the two subsets strictly alternate around the circle?
bool intertwines(const HigherParams& par, const HIndec& a, const HIndec& b);

// Formal direct sum of objects; empty means zero.
struct HFormal {
    std::vector<HIndec> summands; // sorted multiset

    void add(const HIndec& s);
    bool is_zero() const { return summands.empty(); }
    bool operator==(const HFormal& other) const = default;
};

std::string display(const HigherParams& par, const HFormal& f);

// The angle spanned by an intertwining pair:
//   x -> E_d -> ... -> E_1 -> y -> sigma_d(x).
// With the circular labeling x_0 < y_0 < x_1 < ... < y_d (< x_0), the
// middle term E_r collects the subsets {x_i : i in I} u {y_j : j not in I}
// over all r-element index sets I, discarding those containing adjacent
// points.  The result does not depend on which x-point starts the labeling.
struct HAngle {
    HIndec x;
    HIndec y;
    std::vector<HFormal> e; // e[i] = E_{i+1}, i.e. ascending degree
    HIndec sigma_x;
};

// Throws NotIntertwining when the subsets do not alternate.
HAngle ot_angle(const HigherParams& par, const HIndec& x, const HIndec& y);

// A tilting set: pairwise non-intertwining objects, as many as the model
// supports, i.e. binom(p+d-1, d).
bool is_ot_tilting(const HigherParams& par, const std::vector<HIndec>& summands);

struct TiltingSet {
    HigherParams params;
    std::vector<HIndec> summands; // sorted
};

TiltingSet make_tilting(const HigherParams& par, std::vector<HIndec> summands);

// The objects containing the point 1; always a tilting set.
TiltingSet default_tilting(const HigherParams& par);

// Every tilting set, in lexicographic order.
std::vector<TiltingSet> enumerate_tilting_sets(const HigherParams& par);

// Index vector of s with respect to t (coordinates in t.summands order):
// the alternating sum read off an angle  x -> E_d -> ... -> E_1 -> s with
// x in t.  Middle summands outside t contribute their own index vectors,
// so objects are resolved in rounds until the table is stable; the
// identity behind each round is exact because maps from the set into the
// d-fold shift of one of its members vanish.  All usable angles must
// agree (ModelScopeError otherwise); an object no angle ever reaches has
// no index and NoResolution is thrown.
IntVec index_higher(const TiltingSet& t, const HIndec& s);

// The relation vectors: for every ordered intertwining pair (x, y), the
// alternating sum of index vectors around their angle.  Zero vectors are
// dropped, signs are normalized (first nonzero coordinate positive), and
// the result is deduplicated and sorted.
std::vector<IntVec> theta_relations(const TiltingSet& t);

// Z^{t.summands} divided by the relation vectors.
GroupInvariants k0_higher_theta(const TiltingSet& t);

// The almost-split angle of m: the angle from sigma_d(m) to m.
HAngle ar_angle_higher(const HigherParams& par, const HIndec& m);

// The group presented by all objects as generators with one almost-split
// angle relation per object; computed without reference to a tilting set.
GroupInvariants k0_higher_ar(const HigherParams& par);

// The image of the simple at a tilting summand x under the relation map:
// the alternating index sum around the almost-split angle of x.
IntVec theta_of_simple(const TiltingSet& t, const HIndec& x);

} // namespace k0cat::higher
