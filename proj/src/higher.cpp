#include "k0cat/higher.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <sstream>

namespace k0cat::higher {

namespace {

long long binom_ll(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Does the sorted point set contain two cyclically adjacent labels?
bool has_adjacent_pair(const HigherParams& par, const std::vector<int>& pts) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] - pts[i] == 1) return true;
    }
    return pts.size() >= 2 && pts.front() == 1 && pts.back() == par.z;
}

} // namespace

HigherParams make_params(int p, int d) {
    if (p < 1) throw ValidationError("rank p must be at least 1");
    if (d < 1) throw ValidationError("dimension d must be at least 1");
    return HigherParams{p, d, p + 2 * d + 1};
}

std::string display(const HigherParams& par, const HIndec& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.pts.size(); ++i) {
        if (i > 0 && par.z > 9) out << ',';
        out << s.pts[i];
    }
    return out.str();
}

bool are_adjacent_points(const HigherParams& par, int a, int b) {
    const int diff = std::abs(a - b);
    return diff == 1 || diff == par.z - 1;
}

HIndec make_indec(const HigherParams& par, std::vector<int> pts) {
    std::sort(pts.begin(), pts.end());
    if (static_cast<int>(pts.size()) != par.d + 1) {
        throw ValidationError("an object needs exactly d+1 = " +
                              std::to_string(par.d + 1) + " points, got " +
                              std::to_string(pts.size()));
    }
    for (int v : pts) {
        if (v < 1 || v > par.z) {
            throw ValidationError("point " + std::to_string(v) +
                                  " is outside 1.." + std::to_string(par.z));
        }
    }
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
        throw ValidationError("points must be distinct");
    }
    if (has_adjacent_pair(par, pts)) {
        HIndec s{std::move(pts)};
        throw ValidationError("points of " + display(par, s) +
                              " contain a cyclically adjacent pair");
    }
    return HIndec{std::move(pts)};
}

std::vector<HIndec> enumerate_indecs(const HigherParams& par) {
    std::vector<HIndec> result;
    std::vector<int> pick;
    // Depth-first over increasing labels; adjacency (including the wrap
    // between z and 1) is pruned as the subset grows.
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == par.d + 1) {
            if (!(pick.front() == 1 && pick.back() == par.z)) {
                result.push_back(HIndec{pick});
            }
            return;
        }
        for (int v = next; v <= par.z; ++v) {
            if (!pick.empty() && v - pick.back() == 1) continue;
            pick.push_back(v);
            self(self, v + 2);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return result;
}

HIndec sigma_d(const HigherParams& par, const HIndec& s) {
    std::vector<int> pts;
    pts.reserve(s.pts.size());
    for (int v : s.pts) pts.push_back(v == 1 ? par.z : v - 1);
    std::sort(pts.begin(), pts.end());
    return HIndec{std::move(pts)};
}

bool intertwines(const HigherParams& par, const HIndec& a, const HIndec& b) {
    (void)par;
    // Merge by label and demand strict alternation of ownership.  Both
    // subsets have d+1 points, so linear alternation already alternates
    // around the whole circle.
    std::size_t i = 0;
    std::size_t j = 0;
    int prev_owner = -1;
    while (i < a.pts.size() || j < b.pts.size()) {
        int owner;
        if (i < a.pts.size() && j < b.pts.size() && a.pts[i] == b.pts[j]) {
            return false; // shared point
        }
        if (j == b.pts.size() || (i < a.pts.size() && a.pts[i] < b.pts[j])) {
            owner = 0;
            ++i;
        } else {
            owner = 1;
            ++j;
        }
        if (owner == prev_owner) return false;
        prev_owner = owner;
    }
    return true;
}

void HFormal::add(const HIndec& s) {
    summands.insert(std::lower_bound(summands.begin(), summands.end(), s), s);
}

std::string display(const HigherParams& par, const HFormal& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.summands.size(); ++i) {
        if (i > 0) out += " (+) ";
        out += display(par, f.summands[i]);
    }
    return out;
}

HAngle ot_angle(const HigherParams& par, const HIndec& x, const HIndec& y) {
    if (!intertwines(par, x, y)) {
        throw NotIntertwining("objects " + display(par, x) + " and " +
                              display(par, y) + " do not intertwine");
    }
    const int k = par.d + 1;

    // Circular labeling x_0 < y_0 < x_1 < ... < y_d: merge the two point
    // lists and rotate so an x-point comes first.  (Any choice of starting
    // x-point produces the same middle terms, because the index sets I are
    // permuted along with the labels.)
    std::vector<std::pair<int, int>> seq; // (point, owner: 0 = x, 1 = y)
    for (int v : x.pts) seq.emplace_back(v, 0);
    for (int v : y.pts) seq.emplace_back(v, 1);
    std::sort(seq.begin(), seq.end());
    if (seq.front().second == 1) {
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    }
    std::vector<int> xs(k), ys(k);
    for (int i = 0; i < k; ++i) {
        xs[i] = seq[2 * i].first;
        ys[i] = seq[2 * i + 1].first;
    }

    HAngle angle;
    angle.x = x;
    angle.y = y;
    angle.sigma_x = sigma_d(par, x);
    angle.e.assign(par.d, HFormal{});

    // E_r gathers the mixed subsets with exactly r x-points; subsets that
    // acquire an adjacent pair degenerate and are dropped.
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        const int r = std::popcount(mask);
        std::vector<int> pts;
        pts.reserve(k);
        for (int i = 0; i < k; ++i) {
            pts.push_back((mask >> i) & 1u ? xs[i] : ys[i]);
        }
        std::sort(pts.begin(), pts.end());
        if (has_adjacent_pair(par, pts)) continue;
        angle.e[r - 1].add(HIndec{std::move(pts)});
    }
    return angle;
}

bool is_ot_tilting(const HigherParams& par, const std::vector<HIndec>& summands) {
    if (static_cast<long long>(summands.size()) != binom_ll(par.p + par.d - 1, par.d)) {
        return false;
    }
    for (const HIndec& s : summands) {
        make_indec(par, s.pts); // throws on malformed input
    }
    for (std::size_t i = 0; i < summands.size(); ++i) {
        for (std::size_t j = i + 1; j < summands.size(); ++j) {
            if (summands[i] == summands[j]) return false;
            if (intertwines(par, summands[i], summands[j])) return false;
        }
    }
    return true;
}

TiltingSet make_tilting(const HigherParams& par, std::vector<HIndec> summands) {
    std::sort(summands.begin(), summands.end());
    if (!is_ot_tilting(par, summands)) {
        throw ValidationError(
            "not a tilting set: need " +
            std::to_string(binom_ll(par.p + par.d - 1, par.d)) +
            " pairwise non-intertwining objects");
    }
    return TiltingSet{par, std::move(summands)};
}

TiltingSet default_tilting(const HigherParams& par) {
    std::vector<HIndec> summands;
    for (HIndec& s : enumerate_indecs(par)) {
        if (s.pts.front() == 1) summands.push_back(std::move(s));
    }
    return make_tilting(par, std::move(summands));
}

std::vector<TiltingSet> enumerate_tilting_sets(const HigherParams& par) {
    const std::vector<HIndec> all = enumerate_indecs(par);
    const std::size_t want = static_cast<std::size_t>(binom_ll(par.p + par.d - 1, par.d));
    std::vector<TiltingSet> result;
    std::vector<HIndec> pick;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (pick.size() == want) {
            result.push_back(TiltingSet{par, pick});
            return;
        }
        if (all.size() - next < want - pick.size()) return;
        for (std::size_t i = next; i < all.size(); ++i) {
            bool ok = true;
            for (const HIndec& chosen : pick) {
                if (intertwines(par, chosen, all[i])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pick.push_back(all[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

namespace {

std::size_t summand_slot(const TiltingSet& t, const HIndec& s, const char* role) {
    const auto it = std::lower_bound(t.summands.begin(), t.summands.end(), s);
    if (it == t.summands.end() || *it != s) {
        throw ValidationError(std::string(role) + " " + display(t.params, s) +
                              " is not a tilting summand");
    }
    return static_cast<std::size_t>(it - t.summands.begin());
}

bool in_tilting(const TiltingSet& t, const HIndec& s) {
    return std::binary_search(t.summands.begin(), t.summands.end(), s);
}

} // namespace

namespace {

// Index vectors for every object at once.  Tilting summands are unit
// vectors; any other object y is read off an angle
//   x -> E_d -> ... -> E_1 -> y  with x a tilting summand, as
//   idx(y) = sum_r (-1)^{r+1} idx(E_r) + (-1)^d idx(x).
// The identity is exact whenever the left end x lies in the set, because
// maps from the set into the d-fold shift of one of its own members
// vanish, so middle terms may themselves carry previously computed index
// vectors.  Objects are therefore resolved in rounds until nothing new
// can be read off; every usable angle must produce the same vector.
std::map<HIndec, IntVec> resolve_all_indexes(const TiltingSet& t) {
    const HigherParams& par = t.params;
    const std::size_t n = t.summands.size();
    std::map<HIndec, IntVec> idx;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec unit(n, 0);
        unit[i] = 1;
        idx.emplace(t.summands[i], std::move(unit));
    }

    // Alternating sum over one angle, or nothing if a middle term has no
    // index vector yet.
    const auto read_off = [&](const HAngle& angle) -> std::optional<IntVec> {
        IntVec v(n, 0);
        for (int r = 1; r <= par.d; ++r) {
            const int sign = (r % 2 == 1) ? 1 : -1;
            for (const HIndec& m : angle.e[r - 1].summands) {
                const auto it = idx.find(m);
                if (it == idx.end()) return std::nullopt;
                for (std::size_t c = 0; c < n; ++c) v[c] += sign * it->second[c];
            }
        }
        v[summand_slot(t, angle.x, "left end")] += (par.d % 2 == 0) ? 1 : -1;
        return v;
    };

    const std::vector<HIndec> all = enumerate_indecs(par);
    bool progress = true;
    while (progress) {
        progress = false;
        for (const HIndec& s : all) {
            if (idx.count(s)) continue;
            std::vector<IntVec> found;
            for (const HIndec& x : t.summands) {
                if (!intertwines(par, x, s)) continue;
                if (auto v = read_off(ot_angle(par, x, s))) {
                    found.push_back(std::move(*v));
                }
            }
            if (found.empty()) continue;
            for (std::size_t i = 1; i < found.size(); ++i) {
                if (found[i] != found[0]) {
                    throw ModelScopeError("resolutions of " + display(par, s) +
                                          " by this tilting set disagree");
                }
            }
            idx.emplace(s, std::move(found[0]));
            progress = true;
        }
    }

    // Cross-check: now that the table is final, every angle with a
    // resolved object and fully indexed middle terms must reproduce the
    // object's vector, including angles skipped in earlier rounds.
    for (const HIndec& s : all) {
        const auto have = idx.find(s);
        if (have == idx.end()) continue;
        for (const HIndec& x : t.summands) {
            if (x == s || !intertwines(par, x, s)) continue;
            const auto v = read_off(ot_angle(par, x, s));
            if (v && *v != have->second) {
                throw ModelScopeError("resolutions of " + display(par, s) +
                                      " by this tilting set disagree");
            }
        }
    }
    return idx;
}

} // namespace

IntVec index_higher(const TiltingSet& t, const HIndec& s) {
    make_indec(t.params, s.pts); // validate against these parameters
    const std::map<HIndec, IntVec> idx = resolve_all_indexes(t);
    const auto it = idx.find(s);
    if (it == idx.end()) {
        throw NoResolution("object " + display(t.params, s) +
                           " admits no resolution by this tilting set");
    }
    return it->second;
}

namespace {

// Alternating index sum around the angle from x to y:
//   idx(y) + sum_r (-1)^r idx(E_r) + (-1)^{d+1} idx(x),
// where idx extends additively over formal sums.
const IntVec& resolved_index(const TiltingSet& t,
                             const std::map<HIndec, IntVec>& idx,
                             const HIndec& s) {
    const auto it = idx.find(s);
    if (it == idx.end()) {
        throw NoResolution("object " + display(t.params, s) +
                           " admits no resolution by this tilting set");
    }
    return it->second;
}

IntVec theta_of_angle(const TiltingSet& t,
                      const std::map<HIndec, IntVec>& idx,
                      const HAngle& angle) {
    const int d = t.params.d;
    IntVec v = resolved_index(t, idx, angle.y);
    for (int r = 1; r <= d; ++r) {
        const int sign = (r % 2 == 1) ? -1 : 1;
        for (const HIndec& m : angle.e[r - 1].summands) {
            const IntVec& w = resolved_index(t, idx, m);
            for (std::size_t c = 0; c < v.size(); ++c) v[c] += sign * w[c];
        }
    }
    const int end_sign = (d % 2 == 0) ? -1 : 1;
    const IntVec& w = resolved_index(t, idx, angle.x);
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += end_sign * w[c];
    return v;
}

} // namespace

std::vector<IntVec> theta_relations(const TiltingSet& t) {
    const HigherParams& par = t.params;
    const std::vector<HIndec> all = enumerate_indecs(par);
    const std::map<HIndec, IntVec> idx = resolve_all_indexes(t);

    std::vector<IntVec> rels;
    for (const HIndec& x : all) {
        for (const HIndec& y : all) {
            if (x == y || !intertwines(par, x, y)) continue;
            IntVec v = theta_of_angle(t, idx, ot_angle(par, x, y));
            // Normalize: drop zero vectors, make the first nonzero
            // coordinate positive.
            std::size_t lead = v.size();
            for (std::size_t c = 0; c < v.size(); ++c) {
                if (v[c] != 0) {
                    lead = c;
                    break;
                }
            }
            if (lead == v.size()) continue;
            if (v[lead] < 0) {
                for (Int& entry : v) entry = -entry;
            }
            rels.push_back(std::move(v));
        }
    }
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    return rels;
}

GroupInvariants k0_higher_theta(const TiltingSet& t) {
    return quotient_invariants(t.summands.size(), theta_relations(t));
}

HAngle ar_angle_higher(const HigherParams& par, const HIndec& m) {
    return ot_angle(par, sigma_d(par, m), m);
}

GroupInvariants k0_higher_ar(const HigherParams& par) {
    const std::vector<HIndec> all = enumerate_indecs(par);
    std::map<HIndec, std::size_t> slot;
    for (std::size_t i = 0; i < all.size(); ++i) slot.emplace(all[i], i);

    // One relation per object m, from its almost-split angle
    //   sigma_d(m) -> E_d -> ... -> E_1 -> m:
    //   -[m] + (-1)^d [sigma_d(m)] + sum_i (-1)^i [E_{i+1}].
    std::vector<IntVec> rels;
    for (const HIndec& m : all) {
        const HAngle angle = ar_angle_higher(par, m);
        IntVec r(all.size(), 0);
        r[slot.at(m)] -= 1;
        r[slot.at(angle.x)] += (par.d % 2 == 0) ? 1 : -1;
        for (int i = 0; i < par.d; ++i) {
            const int sign = (i % 2 == 0) ? 1 : -1;
            for (const HIndec& s : angle.e[i].summands) {
                r[slot.at(s)] += sign;
            }
        }
        rels.push_back(std::move(r));
    }
    return quotient_invariants(all.size(), rels);
}

IntVec theta_of_simple(const TiltingSet& t, const HIndec& x) {
    summand_slot(t, x, "object"); // x must be a tilting summand
    const HAngle angle = ar_angle_higher(t.params, x);
    return theta_of_angle(t, resolve_all_indexes(t), angle);
}

} // namespace k0cat::higher
