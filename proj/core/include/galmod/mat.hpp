#pragma once

#include <optional>
#include <vector>

#include "galmod/ints.hpp"

namespace galmod {

/// Dense integer matrix, row major.
using Mat = std::vector<std::vector<i64>>;
using Vec = std::vector<i64>;

Mat identity_mat(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Zero rows are dropped; pivots are positive and entries above each
/// pivot are reduced into [0, pivot).
Mat hnf(Mat m);

/// Determinant of a full-rank square HNF basis (product of pivots).
i64 hnf_det(const Mat& h);

/// Expresses `target` as an integer combination of the rows of the HNF
/// basis `h` (full column rank assumed for our lattices, which always
/// contain a diagonal sublattice).  Returns the coefficient vector, or
/// nullopt if target is not in the lattice.
std::optional<Vec> hnf_solve(const Mat& h, Vec target);

inline bool hnf_contains(const Mat& h, Vec target) {
    return hnf_solve(h, std::move(target)).has_value();
}

/// Basis (as rows) of the integer kernel {x : a x = 0} of the column
/// action of `a` on Z^cols.
Mat int_kernel(const Mat& a, std::size_t cols);

/// Diagonal of the Smith normal form of the lattice spanned by the rows
/// of `m`, padded with zeros up to min(rank-relevant) length.  Entries
/// are nonnegative with d1 | d2 | ... .
Vec snf_diagonal(Mat m);

/// Diagonal of the Smith normal form of span(rows) + mod Z^cols.  All
/// intermediate entries stay reduced modulo `mod`, so coefficient growth
/// is bounded; intended for finite quotients whose exponent divides mod.
Vec snf_diagonal_mod(Mat m, i64 mod, std::size_t cols);

/// Smith normal form with the right transform: u * m * v = diag(d).
/// Only v and d are returned (u is not needed by callers).
struct SnfRight {
    Vec diag;  // length = columns of m
    Mat v;     // unimodular, columns of m  x  columns of m
};
SnfRight snf_right(Mat m);

/// Row basis of the solution lattice {x in Z^n : c x == 0 (mod row_mod[r])
/// for every row r of c}.  `coord_mod` gives a modulus per unknown whose
/// diagonal vectors are known a priori to be solutions (they are re-added
/// every step to keep entries small).
Mat congruence_kernel(const Mat& c, const Vec& row_mod, const Vec& coord_mod);

/// Lattice of common elements of two row-span lattices.
Mat lattice_intersection(const Mat& a, const Mat& b, std::size_t cols);

}  // namespace galmod
