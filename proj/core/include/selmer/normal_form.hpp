#pragma once

#include "selmer/int_matrix.hpp"

#include <optional>
#include <vector>

namespace selmer {

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1},
/// non-negative; zero diagonal entries come last. U_inv = U^{-1} is kept
/// because generators of quotient groups are read off its columns.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix U_inv;

    /// Diagonal of D, length min(rows, cols).
    IntVector diagonal() const;
    std::size_t rank() const;
};

SmithForm snf(const IntMatrix& a);

/// A * V = [H | 0] where the first `rank` columns of H are in column
/// echelon form: pivot of column k sits in row pivot_rows[k], rows above
/// are zero, pivots positive, entries left of a pivot reduced into
/// [0, pivot).
struct ColumnEchelon {
    IntMatrix H;
    IntMatrix V;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& a);

/// Column Hermite normal form: a canonical basis (rows x rank) of the
/// lattice spanned by the columns of A.
IntMatrix hnf_column(const IntMatrix& a);

/// Canonical basis of {x : A x = 0}, as columns in Hermite form.
IntMatrix kernel_basis(const IntMatrix& a);

/// Some x with A x = b, or nothing when no integer solution exists. The
/// returned solution is reduced modulo the kernel lattice, so it is a
/// function of (A, b) alone.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Canonical representative of v modulo the lattice whose Hermite basis is
/// `hnf` (as returned by hnf_column).
IntVector reduce_mod_lattice(const IntMatrix& hnf, const IntVector& v);

bool lattice_contains(const IntMatrix& hnf, const IntVector& v);
/// Coordinates a with hnf * a = v, or nothing if v is outside the lattice.
std::optional<IntVector> echelon_coordinates(const IntMatrix& hnf, const IntVector& v);
bool same_lattice(const IntMatrix& a, const IntMatrix& b);
std::size_t matrix_rank(const IntMatrix& a);

} // namespace selmer
