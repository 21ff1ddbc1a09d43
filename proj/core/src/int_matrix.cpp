#include "selmer/int_matrix.hpp"

#include "selmer/errors.hpp"

#include <fmt/format.h>

#include <utility>

namespace selmer {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            fail(ErrorCode::InvalidArgument, "ragged matrix literal");
        }
        for (long x : r) {
            data_.emplace_back(x);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& diag)
{
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        m.set_column(j, columns[j]);
    }
    return m;
}

IntMatrix IntMatrix::column_vector(const IntVector& v)
{
    return from_columns(v.size(), {v});
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        v[i] = (*this)(i, j);
    }
    return v;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, const IntVector& v)
{
    if (v.size() != rows_) {
        fail(ErrorCode::InvalidArgument,
             fmt::format("column of length {} in matrix with {} rows", v.size(), rows_));
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, j) = v[i];
    }
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        fail(ErrorCode::InvalidArgument, "matrix block out of range");
    }
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            b(i, j) = (*this)(r0 + i, c0 + j);
        }
    }
    return b;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) {
        return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
    }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) {
        return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
    }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k)
{
    if (k == 0) {
        return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        const Int& s = (*this)(src, j);
        if (s != 0) {
            (*this)(dst, j) += k * s;
        }
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k)
{
    if (k == 0) {
        return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        const Int& s = (*this)(i, src);
        if (s != 0) {
            (*this)(i, dst) += k * s;
        }
    }
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(i, j) = -(*this)(i, j);
    }
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, j) = -(*this)(i, j);
    }
}

std::string IntMatrix::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j != 0) {
                out += ", ";
            }
            out += (*this)(i, j).get_str();
        }
        out += "]";
    }
    out += "]";
    return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_) {
        fail(ErrorCode::InvalidArgument,
             fmt::format("cannot multiply {}x{} by {}x{}", a.rows_, a.cols_, b.rows_, b.cols_));
    }
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& x = a(i, k);
            if (x == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Int& y = b(k, j);
                if (y != 0) {
                    c(i, j) += x * y;
                }
            }
        }
    }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        fail(ErrorCode::InvalidArgument, "matrix shape mismatch in addition");
    }
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) {
        c.data_[i] += b.data_[i];
    }
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        fail(ErrorCode::InvalidArgument, "matrix shape mismatch in subtraction");
    }
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) {
        c.data_[i] -= b.data_[i];
    }
    return c;
}

IntMatrix operator*(const Int& k, const IntMatrix& a)
{
    IntMatrix c = a;
    for (auto& x : c.data_) {
        x *= k;
    }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v)
{
    if (a.cols_ != v.size()) {
        fail(ErrorCode::InvalidArgument,
             fmt::format("cannot apply {}x{} matrix to vector of length {}", a.rows_, a.cols_,
                         v.size()));
    }
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (v[j] != 0 && a(i, j) != 0) {
                out[i] += a(i, j) * v[j];
            }
        }
    }
    return out;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows()) {
        fail(ErrorCode::InvalidArgument,
             fmt::format("hconcat of {} and {} rows", a.rows(), b.rows()));
    }
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j);
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
            c(i, a.cols() + j) = b(i, j);
        }
    }
    return c;
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols()) {
        fail(ErrorCode::InvalidArgument,
             fmt::format("vconcat of {} and {} columns", a.cols(), b.cols()));
    }
    IntMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            c(i, j) = a(i, j);
        }
        for (std::size_t i = 0; i < b.rows(); ++i) {
            c(a.rows() + i, j) = b(i, j);
        }
    }
    return c;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            c(a.rows() + i, a.cols() + j) = b(i, j);
        }
    }
    return c;
}

Int determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols()) {
        fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix m = a;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntVector zero_vector(std::size_t n)
{
    return IntVector(n);
}

IntVector unit_vector(std::size_t n, std::size_t i)
{
    IntVector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const IntVector& v)
{
    for (const auto& x : v) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

IntVector add(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size()) {
        fail(ErrorCode::InvalidArgument, "vector length mismatch");
    }
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
    }
    return c;
}

IntVector sub(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size()) {
        fail(ErrorCode::InvalidArgument, "vector length mismatch");
    }
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] - b[i];
    }
    return c;
}

IntVector scale(const Int& k, const IntVector& v)
{
    IntVector c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        c[i] = k * v[i];
    }
    return c;
}

std::string to_string(const IntVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += v[i].get_str();
    }
    return out + ")";
}

Int mod_floor(const Int& a, const Int& m)
{
    if (m == 0) {
        return a;
    }
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r < 0) {
        r += abs(m);
    }
    return r;
}

Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace selmer
