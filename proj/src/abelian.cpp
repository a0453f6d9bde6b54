#include "k0cat/abelian.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <sstream>

namespace k0cat {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division (quotient rounded toward minus infinity); cpp_int's
// operator/ truncates toward zero, which is the wrong direction for
// reducing entries into [0, pivot).
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

} // namespace

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return IntMat(0, 0);
    IntMat m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw ValidationError("matrix rows have inconsistent lengths");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_row(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t col = 0; col < cols_; ++col) at(i, col) += c * at(j, col);
}

void IntMat::add_col(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t row = 0; row < rows_; ++row) at(row, i) += c * at(row, j);
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination: every division below is exact.
    IntMat a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = npos;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { swap_row = i; break; }
            if (swap_row == npos) return 0;
            a.swap_rows(k, swap_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

SnfResult smith_normal_form(const IntMat& m) {
    SnfResult res{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;
    const std::size_t bound = std::min(d.rows(), d.cols());

    for (std::size_t k = 0; k < bound; ++k) {
        for (;;) {
            // Move a nonzero entry of minimal absolute value in the trailing
            // submatrix to the pivot position (k, k).
            std::size_t pi = npos, pj = npos;
            for (std::size_t i = k; i < d.rows(); ++i)
                for (std::size_t j = k; j < d.cols(); ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi == npos || abs_int(d.at(i, j)) < abs_int(d.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == npos) {
                // Trailing submatrix is zero; the form is complete.
                return res;
            }
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            // One sweep of row and column reduction against the pivot.  Any
            // surviving off-pivot entry is a remainder, strictly smaller in
            // absolute value than the pivot, so the minimal pivot shrinks on
            // each round and the loop terminates.
            bool leftover = false;
            for (std::size_t i = k + 1; i < d.rows(); ++i) {
                if (d.at(i, k) == 0) continue;
                Int q = d.at(i, k) / d.at(k, k);
                if (q != 0) {
                    d.add_row(i, k, -q);
                    u.add_row(i, k, -q);
                }
                if (d.at(i, k) != 0) leftover = true;
            }
            for (std::size_t j = k + 1; j < d.cols(); ++j) {
                if (d.at(k, j) == 0) continue;
                Int q = d.at(k, j) / d.at(k, k);
                if (q != 0) {
                    d.add_col(j, k, -q);
                    v.add_col(j, k, -q);
                }
                if (d.at(k, j) != 0) leftover = true;
            }
            if (leftover) continue;

            // Pivot is isolated.  Enforce the divisibility chain: if some
            // trailing entry is not a multiple of the pivot, fold its row
            // into the pivot row and reduce again (the eventual pivot
            // becomes a proper divisor of the current one).
            bool fixed_up = false;
            for (std::size_t i = k + 1; i < d.rows() && !fixed_up; ++i)
                for (std::size_t j = k + 1; j < d.cols() && !fixed_up; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        d.add_row(k, i, 1);
                        u.add_row(k, i, 1);
                        fixed_up = true;
                    }
            if (!fixed_up) break;
        }
        if (d.at(k, k) < 0) {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    return res;
}

std::string to_string(const GroupInvariants& g) {
    if (g.free_rank == 0 && g.torsion.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    if (g.free_rank > 0) {
        out << "Z";
        if (g.free_rank > 1) out << "^" << g.free_rank;
        first = false;
    }
    for (const Int& t : g.torsion) {
        if (!first) out << " (+) ";
        out << "Z/" << t;
        first = false;
    }
    return out.str();
}

GroupInvariants quotient_invariants(std::size_t generators,
                                    const std::vector<IntVec>& relations) {
    for (const IntVec& r : relations)
        if (r.size() != generators)
            throw ValidationError("relation length does not match generator count");
    IntMat m(relations.size(), generators);
    for (std::size_t i = 0; i < relations.size(); ++i)
        for (std::size_t j = 0; j < generators; ++j) m.at(i, j) = relations[i][j];

    SnfResult snf = smith_normal_form(m);
    GroupInvariants g;
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < std::min(snf.d.rows(), snf.d.cols()); ++k) {
        const Int& dk = snf.d.at(k, k);
        if (dk == 0) break;
        ++nonzero;
        if (dk > 1) g.torsion.push_back(dk);
    }
    g.free_rank = generators - nonzero;
    return g;
}

GroupInvariants quotient_invariants(const GroupPresentation& pres) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < pres.generators.size(); ++i) {
        if (!index.emplace(pres.generators[i], i).second)
            throw ValidationError("duplicate generator label: " + pres.generators[i]);
    }
    std::vector<IntVec> dense;
    dense.reserve(pres.relations.size());
    for (const auto& rel : pres.relations) {
        IntVec row(pres.generators.size(), 0);
        for (const auto& [label, coeff] : rel) {
            auto it = index.find(label);
            if (it == index.end())
                throw ValidationError("relation uses unknown generator label: " + label);
            row[it->second] = coeff;
        }
        dense.push_back(std::move(row));
    }
    return quotient_invariants(pres.generators.size(), dense);
}

std::vector<IntVec> hermite_row_basis(std::vector<IntVec> gens, std::size_t n) {
    for (const IntVec& g : gens)
        if (g.size() != n) throw ValidationError("generator length does not match ambient rank");

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < gens.size(); ++col) {
        for (;;) {
            std::size_t best = npos;
            for (std::size_t i = rank; i < gens.size(); ++i) {
                if (gens[i][col] == 0) continue;
                if (best == npos || abs_int(gens[i][col]) < abs_int(gens[best][col]))
                    best = i;
            }
            if (best == npos) break; // column has no pivot
            std::swap(gens[rank], gens[best]);
            bool leftover = false;
            for (std::size_t i = rank + 1; i < gens.size(); ++i) {
                if (gens[i][col] == 0) continue;
                Int q = gens[i][col] / gens[rank][col];
                for (std::size_t j = 0; j < n; ++j) gens[i][j] -= q * gens[rank][j];
                if (gens[i][col] != 0) leftover = true;
            }
            if (leftover) continue;
            if (gens[rank][col] < 0)
                for (Int& x : gens[rank]) x = -x;
            // Reduce the entries above the pivot into [0, pivot).
            for (std::size_t i = 0; i < rank; ++i) {
                Int q = floor_div(gens[i][col], gens[rank][col]);
                if (q == 0) continue;
                for (std::size_t j = 0; j < n; ++j) gens[i][j] -= q * gens[rank][j];
            }
            ++rank;
            break;
        }
    }
    gens.resize(rank);
    return gens;
}

bool subgroup_contains(const std::vector<IntVec>& gens, const IntVec& v) {
    const std::size_t n = v.size();
    std::vector<IntVec> basis = hermite_row_basis(gens, n);
    IntVec w = v;
    for (const IntVec& row : basis) {
        std::size_t pc = 0;
        while (pc < n && row[pc] == 0) ++pc;
        if (w[pc] % row[pc] != 0) return false;
        Int q = w[pc] / row[pc];
        if (q != 0)
            for (std::size_t j = 0; j < n; ++j) w[j] -= q * row[j];
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

bool subgroup_equal(const std::vector<IntVec>& a, const std::vector<IntVec>& b,
                    std::size_t n) {
    // The reduced row basis is a canonical form, so two generating sets span
    // the same subgroup exactly when their bases coincide.
    return hermite_row_basis(a, n) == hermite_row_basis(b, n);
}

} // namespace k0cat
