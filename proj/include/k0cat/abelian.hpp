#pragma once

// Exact linear algebra over the integers for finitely generated abelian
// groups: Smith normal form with unimodular transforms, Hermite-style row
// bases for subgroup membership, and invariant-factor decompositions of
// finitely presented quotients.  All arithmetic uses arbitrary-precision
// integers, so no computation can overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "k0cat/errors.hpp"

namespace k0cat {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense integer matrix, row-major.  Only the handful of operations the
// normal-form algorithms need; this is not a general matrix library.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<IntVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += c * row j ; col i += c * col j
    void add_row(std::size_t i, std::size_t j, const Int& c);
    void add_col(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    bool operator==(const IntMat& other) const = default;

  private:
    std::size_t rows_, cols_;
    IntVec data_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);

// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int determinant(const IntMat& m);

// Smith normal form: d = u * m * v with u, v unimodular and d diagonal with
// nonnegative entries d_1 | d_2 | ... (zeros trailing).
struct SnfResult {
    IntMat d; // diagonal, invariant-factor chain
    IntMat u; // unimodular row transform, rows(m) x rows(m)
    IntMat v; // unimodular column transform, cols(m) x cols(m)
};

SnfResult smith_normal_form(const IntMat& m);

// Invariant-factor description of a finitely generated abelian group:
// Z^free_rank  (+)  Z/torsion[0] (+) Z/torsion[1] (+) ...
// with torsion[i] > 1 and torsion[i] | torsion[i+1].
struct GroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const GroupInvariants& other) const = default;
};

std::string to_string(const GroupInvariants& g);

inline std::ostream& operator<<(std::ostream& out, const GroupInvariants& g) {
    return out << to_string(g);
}

// Invariants of Z^generators / <relations>.  Each relation is a coefficient
// vector of length `generators`; an empty relation list gives a free group.
GroupInvariants quotient_invariants(std::size_t generators,
                                    const std::vector<IntVec>& relations);

// A presentation whose relations are sparse maps keyed by generator label.
// Convenient for callers that build relations symbol-by-symbol.
struct GroupPresentation {
    std::vector<std::string> generators;         // distinct labels, fixed order
    std::vector<std::map<std::string, Int>> relations;
};

GroupInvariants quotient_invariants(const GroupPresentation& pres);

// Basis (as rows) of the subgroup of Z^n generated by `gens`, in row-style
// Hermite normal form: pivots positive, strictly increasing pivot columns,
// entries above each pivot reduced into [0, pivot).  Zero rows are dropped.
std::vector<IntVec> hermite_row_basis(std::vector<IntVec> gens, std::size_t n);

// Does v lie in the subgroup of Z^n generated by gens?
bool subgroup_contains(const std::vector<IntVec>& gens, const IntVec& v);

// Do two generating sets span the same subgroup of Z^n?
bool subgroup_equal(const std::vector<IntVec>& a, const std::vector<IntVec>& b,
                    std::size_t n);

} // namespace k0cat
