#include "selmer/normal_form.hpp"

#include "selmer/errors.hpp"

#include <algorithm>

namespace selmer {

namespace {

// Quotient rounded to nearest, so the remainder a - q*b is at most |b|/2.
Int round_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int r = a - q * b;
    if (2 * abs(r) > abs(b)) {
        q += 1;
    }
    return q;
}

Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct SmithWorker {
    IntMatrix D;
    IntMatrix U;
    IntMatrix U_inv;
    IntMatrix V;

    void row_add(std::size_t dst, std::size_t src, const Int& k)
    {
        D.add_row_multiple(dst, src, k);
        U.add_row_multiple(dst, src, k);
        U_inv.add_col_multiple(src, dst, -k);
    }
    void row_swap(std::size_t a, std::size_t b)
    {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
        U_inv.swap_cols(a, b);
    }
    void row_negate(std::size_t i)
    {
        D.negate_row(i);
        U.negate_row(i);
        U_inv.negate_col(i);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& k)
    {
        D.add_col_multiple(dst, src, k);
        V.add_col_multiple(dst, src, k);
    }
    void col_swap(std::size_t a, std::size_t b)
    {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
    }
};

} // namespace

IntVector SmithForm::diagonal() const
{
    const std::size_t n = std::min(D.rows(), D.cols());
    IntVector d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = D(i, i);
    }
    return d;
}

std::size_t SmithForm::rank() const
{
    std::size_t r = 0;
    for (const auto& x : diagonal()) {
        if (x != 0) {
            ++r;
        }
    }
    return r;
}

SmithForm snf(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithWorker w{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};

    const std::size_t steps = std::min(m, n);
    for (std::size_t k = 0; k < steps; ++k) {
        bool finished = false;
        while (true) {
            // Smallest nonzero entry of the trailing block, first in row-major order.
            std::size_t pi = m;
            std::size_t pj = n;
            for (std::size_t i = k; i < m; ++i) {
                for (std::size_t j = k; j < n; ++j) {
                    const Int& x = w.D(i, j);
                    if (x != 0 && (pi == m || abs(x) < abs(w.D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == m) {
                finished = true;
                break;
            }
            w.row_swap(k, pi);
            w.col_swap(k, pj);
            const Int pivot = w.D(k, k);

            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (w.D(i, k) != 0) {
                    w.row_add(i, k, -round_div(w.D(i, k), pivot));
                    if (w.D(i, k) != 0) {
                        clean = false;
                    }
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (w.D(k, j) != 0) {
                    w.col_add(j, k, -round_div(w.D(k, j), pivot));
                    if (w.D(k, j) != 0) {
                        clean = false;
                    }
                }
            }
            if (!clean) {
                continue;
            }
            // Divisibility: fold an offending row into row k and go again.
            std::size_t bad = m;
            for (std::size_t i = k + 1; i < m && bad == m; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (w.D(i, j) % pivot != 0) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == m) {
                break;
            }
            w.row_add(k, bad, 1);
        }
        if (finished) {
            break;
        }
        if (w.D(k, k) < 0) {
            w.row_negate(k);
        }
    }
    return SmithForm{std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.U_inv)};
}

ColumnEchelon column_echelon(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ColumnEchelon e{a, IntMatrix::identity(n), 0, {}};
    IntMatrix& h = e.H;
    IntMatrix& v = e.V;

    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = c; j < n; ++j) {
                if (h(r, j) != 0 && (best == n || abs(h(r, j)) < abs(h(r, best)))) {
                    best = j;
                }
            }
            if (best == n) {
                break;
            }
            h.swap_cols(c, best);
            v.swap_cols(c, best);
            bool done = true;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (h(r, j) != 0) {
                    const Int q = round_div(h(r, j), h(r, c));
                    h.add_col_multiple(j, c, -q);
                    v.add_col_multiple(j, c, -q);
                    if (h(r, j) != 0) {
                        done = false;
                    }
                }
            }
            if (done) {
                break;
            }
        }
        if (h(r, c) == 0) {
            continue;
        }
        if (h(r, c) < 0) {
            h.negate_col(c);
            v.negate_col(c);
        }
        for (std::size_t j = 0; j < c; ++j) {
            const Int q = floor_div(h(r, j), h(r, c));
            if (q != 0) {
                h.add_col_multiple(j, c, -q);
                v.add_col_multiple(j, c, -q);
            }
        }
        e.pivot_rows.push_back(r);
        ++c;
    }
    e.rank = c;
    return e;
}

IntMatrix hnf_column(const IntMatrix& a)
{
    ColumnEchelon e = column_echelon(a);
    return e.H.columns(0, e.rank);
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    ColumnEchelon e = column_echelon(a);
    const IntMatrix k = e.V.columns(e.rank, a.cols() - e.rank);
    return hnf_column(k);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b)
{
    if (b.size() != a.rows()) {
        fail(ErrorCode::InvalidArgument, "right-hand side length does not match matrix rows");
    }
    const SmithForm s = snf(a);
    const IntVector c = s.U * b;
    const IntVector d = s.diagonal();
    IntVector w(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const bool has_pivot = i < d.size() && d[i] != 0;
        if (!has_pivot) {
            if (c[i] != 0) {
                return std::nullopt;
            }
            continue;
        }
        if (c[i] % d[i] != 0) {
            return std::nullopt;
        }
        w[i] = c[i] / d[i];
    }
    IntVector x = s.V * w;
    const IntMatrix kernel = hnf_column(s.V.columns(s.rank(), a.cols() - s.rank()));
    return reduce_mod_lattice(kernel, x);
}

IntVector reduce_mod_lattice(const IntMatrix& hnf, const IntVector& v)
{
    if (hnf.rows() != v.size()) {
        fail(ErrorCode::InvalidArgument, "lattice and vector dimensions differ");
    }
    IntVector out = v;
    std::size_t row = 0;
    for (std::size_t k = 0; k < hnf.cols(); ++k) {
        while (row < hnf.rows() && hnf(row, k) == 0) {
            ++row;
        }
        if (row == hnf.rows()) {
            fail(ErrorCode::InvalidArgument, "matrix is not in column echelon form");
        }
        const Int q = floor_div(out[row], hnf(row, k));
        if (q != 0) {
            for (std::size_t i = row; i < hnf.rows(); ++i) {
                out[i] -= q * hnf(i, k);
            }
        }
        ++row;
    }
    return out;
}

bool lattice_contains(const IntMatrix& hnf, const IntVector& v)
{
    return is_zero(reduce_mod_lattice(hnf, v));
}

std::optional<IntVector> echelon_coordinates(const IntMatrix& hnf, const IntVector& v)
{
    if (hnf.rows() != v.size()) {
        fail(ErrorCode::InvalidArgument, "lattice and vector dimensions differ");
    }
    IntVector rest = v;
    IntVector coords(hnf.cols());
    std::size_t row = 0;
    for (std::size_t k = 0; k < hnf.cols(); ++k) {
        while (row < hnf.rows() && hnf(row, k) == 0) {
            if (rest[row] != 0) {
                return std::nullopt;
            }
            ++row;
        }
        if (row == hnf.rows()) {
            fail(ErrorCode::InvalidArgument, "matrix is not in column echelon form");
        }
        if (rest[row] % hnf(row, k) != 0) {
            return std::nullopt;
        }
        coords[k] = rest[row] / hnf(row, k);
        if (coords[k] != 0) {
            for (std::size_t i = row; i < hnf.rows(); ++i) {
                rest[i] -= coords[k] * hnf(i, k);
            }
        }
        ++row;
    }
    for (; row < hnf.rows(); ++row) {
        if (rest[row] != 0) {
            return std::nullopt;
        }
    }
    return coords;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b)
{
    return hnf_column(a) == hnf_column(b);
}

std::size_t matrix_rank(const IntMatrix& a)
{
    return column_echelon(a).rank;
}

} // namespace selmer
