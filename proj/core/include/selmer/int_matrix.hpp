#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace selmer {

using Int = mpz_class;
using IntVector = std::vector<Int>;

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// Zero-sized shapes are meaningful: a 0 x k matrix is the map from Z^k to
/// the trivial group, a k x 0 matrix the map out of it.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const IntVector& diag);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
    static IntMatrix column_vector(const IntVector& v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector column(std::size_t j) const;
    IntVector row(std::size_t i) const;
    void set_column(std::size_t j, const IntVector& v);

    bool is_zero() const;
    IntMatrix transpose() const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    IntMatrix columns(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Int& k, const IntMatrix& a);
    friend IntVector operator*(const IntMatrix& a, const IntVector& v);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Bareiss fraction-free elimination; square input only.
Int determinant(const IntMatrix& a);

IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Int& k, const IntVector& v);
std::string to_string(const IntVector& v);

/// Least non-negative residue; a modulus of zero leaves the value untouched.
Int mod_floor(const Int& a, const Int& m);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

} // namespace selmer
