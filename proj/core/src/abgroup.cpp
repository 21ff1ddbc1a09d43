#include "selmer/abgroup.hpp"

#include "selmer/errors.hpp"
#include "selmer/normal_form.hpp"

#include <fmt/format.h>

namespace selmer {

FgAbGroup::FgAbGroup(std::size_t ngens, IntMatrix relations)
    : ngens_(ngens), relations_(std::move(relations))
{
    if (relations_.rows() != ngens_) {
        if (relations_.rows() == 0 && relations_.cols() == 0) {
            relations_ = IntMatrix(ngens_, 0);
        } else {
            fail(ErrorCode::InvalidArgument,
                 fmt::format("relation matrix has {} rows for {} generators", relations_.rows(), ngens_));
        }
    }
    relation_hnf_ = hnf_column(relations_);
}

FgAbGroup FgAbGroup::free(std::size_t n)
{
    return FgAbGroup(n, IntMatrix(n, 0));
}

FgAbGroup FgAbGroup::from_orders(const IntVector& orders)
{
    std::vector<IntVector> cols;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 0) {
            fail(ErrorCode::InvalidArgument, "negative order");
        }
        if (orders[i] != 0) {
            cols.push_back(scale(orders[i], unit_vector(orders.size(), i)));
        }
    }
    return FgAbGroup(orders.size(), IntMatrix::from_columns(orders.size(), cols));
}

IntVector FgAbGroup::reduce(const IntVector& x) const
{
    return reduce_mod_lattice(relation_hnf_, x);
}

bool FgAbGroup::is_zero(const IntVector& x) const
{
    return lattice_contains(relation_hnf_, x);
}

bool FgAbGroup::equal(const IntVector& x, const IntVector& y) const
{
    return is_zero(sub(x, y));
}

std::size_t FgAbGroup::free_rank() const
{
    return ngens_ - relation_hnf_.cols();
}

Int FgAbGroup::order() const
{
    if (!is_finite()) {
        return 0;
    }
    Int n = 1;
    for (std::size_t k = 0; k < relation_hnf_.cols(); ++k) {
        // Full rank: the Hermite basis is square lower triangular.
        n *= relation_hnf_(k, k);
    }
    return n;
}

FinAbGroup::FinAbGroup(IntVector invariants) : invariants_(std::move(invariants))
{
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
        if (invariants_[i] < 2) {
            fail(ErrorCode::InvalidArgument, "invariant factors must be at least 2");
        }
        if (i > 0 && invariants_[i] % invariants_[i - 1] != 0) {
            fail(ErrorCode::InvalidArgument, "invariant factors must form a divisibility chain");
        }
    }
}

Int FinAbGroup::order() const
{
    Int n = 1;
    for (const auto& d : invariants_) {
        n *= d;
    }
    return n;
}

Int FinAbGroup::exponent() const
{
    return invariants_.empty() ? Int(1) : invariants_.back();
}

std::string FinAbGroup::to_string() const
{
    if (invariants_.empty()) {
        return "0";
    }
    std::string out;
    std::size_t i = 0;
    while (i < invariants_.size()) {
        std::size_t j = i;
        while (j < invariants_.size() && invariants_[j] == invariants_[i]) {
            ++j;
        }
        if (!out.empty()) {
            out += " × ";
        }
        const std::string d = invariants_[i].get_str();
        if (j - i == 1) {
            out += "Z/" + d;
        } else {
            out += fmt::format("(Z/{})^{}", d, j - i);
        }
        i = j;
    }
    return out;
}

AbHom::AbHom(FgAbGroup dom, FgAbGroup cod, IntMatrix mat)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(mat))
{
    if (matrix.rows() != codomain.ngens() || matrix.cols() != domain.ngens()) {
        if (matrix.rows() == 0 && matrix.cols() == 0) {
            matrix = IntMatrix(codomain.ngens(), domain.ngens());
        } else {
            fail(ErrorCode::InvalidArgument,
                 fmt::format("homomorphism matrix is {}x{}, expected {}x{}", matrix.rows(), matrix.cols(),
                             codomain.ngens(), domain.ngens()));
        }
    }
}

IntVector AbHom::operator()(const IntVector& x) const
{
    return codomain.reduce(matrix * x);
}

bool AbHom::is_well_defined() const
{
    const IntMatrix img = matrix * domain.relations();
    for (std::size_t j = 0; j < img.cols(); ++j) {
        if (!codomain.is_zero(img.column(j))) {
            return false;
        }
    }
    return true;
}

AbHom compose(const AbHom& after, const AbHom& before)
{
    if (after.domain.ngens() != before.codomain.ngens()) {
        fail(ErrorCode::InvalidArgument, "composition of incompatible homomorphisms");
    }
    return AbHom(before.domain, after.codomain, after.matrix * before.matrix);
}

SubgroupResult subgroup_generated(const FgAbGroup& g, const IntMatrix& gens)
{
    if (gens.rows() != g.ngens()) {
        fail(ErrorCode::InvalidArgument, "generator columns have the wrong length");
    }
    const IntMatrix basis = hnf_column(hconcat(gens, g.relations()));
    std::vector<IntVector> rels;
    for (std::size_t j = 0; j < g.relations().cols(); ++j) {
        auto c = echelon_coordinates(basis, g.relations().column(j));
        if (!c) {
            fail(ErrorCode::Internal, "relation outside its own span");
        }
        rels.push_back(std::move(*c));
    }
    FgAbGroup sub(basis.cols(), IntMatrix::from_columns(basis.cols(), rels));
    AbHom incl(sub, g, basis);
    return {std::move(sub), std::move(incl)};
}

SubgroupResult kernel(const AbHom& f)
{
    const std::size_t n = f.domain.ngens();
    const IntMatrix k = kernel_basis(hconcat(f.matrix, f.codomain.relations()));
    return subgroup_generated(f.domain, k.block(0, 0, n, k.cols()));
}

QuotientResult image_quotient(const AbHom& f)
{
    const std::size_t m = f.codomain.ngens();
    FgAbGroup coker(m, hconcat(f.codomain.relations(), f.matrix));
    AbHom proj(f.codomain, coker, IntMatrix::identity(m));
    return {std::move(coker), std::move(proj)};
}

std::optional<IntVector> solve(const AbHom& f, const IntVector& y)
{
    auto x = solve_integer(hconcat(f.matrix, f.codomain.relations()), y);
    if (!x) {
        return std::nullopt;
    }
    x->resize(f.domain.ngens());
    return f.domain.reduce(*x);
}

GroupStructure structure(const FgAbGroup& g)
{
    const SmithForm s = snf(g.relations());
    GroupStructure out;
    for (const auto& d : s.diagonal()) {
        if (d > 1) {
            out.torsion.push_back(d);
        }
    }
    out.free_rank = g.ngens() - s.rank();
    return out;
}

FinAbGroup finite_structure(const FgAbGroup& g)
{
    GroupStructure s = structure(g);
    if (s.free_rank != 0) {
        fail(ErrorCode::Internal, "group is infinite");
    }
    return FinAbGroup(std::move(s.torsion));
}

IntVector SimplifiedGroup::coordinates(const IntVector& x) const
{
    IntVector y = to_simple * x;
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = mod_floor(y[i], orders[i]);
    }
    return y;
}

SimplifiedGroup simplify(const FgAbGroup& g)
{
    const SmithForm s = snf(g.relations());
    const IntVector d = s.diagonal();
    const std::size_t n = g.ngens();
    SimplifiedGroup out;
    std::vector<IntVector> to_rows;
    std::vector<IntVector> from_cols;
    for (std::size_t i = 0; i < n; ++i) {
        const Int di = i < d.size() ? d[i] : Int(0);
        if (di == 1) {
            continue;
        }
        out.orders.push_back(di);
        to_rows.push_back(s.U.row(i));
        from_cols.push_back(s.U_inv.column(i));
    }
    out.group = FgAbGroup::from_orders(out.orders);
    out.to_simple = IntMatrix::from_columns(n, to_rows).transpose();
    if (to_rows.empty()) {
        out.to_simple = IntMatrix(0, n);
    }
    out.from_simple = IntMatrix::from_columns(n, from_cols);
    return out;
}

GroupStructure Subquotient::structure() const
{
    GroupStructure s;
    for (const auto& d : orders) {
        if (d == 0) {
            ++s.free_rank;
        }
    }
    for (const auto& d : orders) {
        if (d != 0) {
            s.torsion.push_back(d);
        }
    }
    return s;
}

bool Subquotient::contains(const IntVector& x) const
{
    return echelon_coordinates(top_basis, x).has_value();
}

IntVector Subquotient::coordinates(const IntVector& x) const
{
    auto a = echelon_coordinates(top_basis, x);
    if (!a) {
        fail(ErrorCode::InvalidArgument, "element is outside the subquotient");
    }
    IntVector y = coordinate_transform * *a;
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = mod_floor(y[i], orders[i]);
    }
    return y;
}

Subquotient subquotient(const IntMatrix& top, const IntMatrix& bottom)
{
    if (top.rows() != bottom.rows()) {
        fail(ErrorCode::InvalidArgument, "top and bottom live in different ambient lattices");
    }
    Subquotient q;
    q.top_basis = hnf_column(top);
    q.bottom_basis = hnf_column(bottom);
    const std::size_t k = q.top_basis.cols();
    std::vector<IntVector> coords;
    for (std::size_t j = 0; j < q.bottom_basis.cols(); ++j) {
        auto c = echelon_coordinates(q.top_basis, q.bottom_basis.column(j));
        if (!c) {
            fail(ErrorCode::Internal, "bottom lattice is not contained in top lattice");
        }
        coords.push_back(std::move(*c));
    }
    const SmithForm s = snf(IntMatrix::from_columns(k, coords));
    const IntVector d = s.diagonal();
    std::vector<IntVector> gens;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < k; ++i) {
        const Int di = i < d.size() ? d[i] : Int(0);
        if (di == 1) {
            continue;
        }
        q.orders.push_back(di);
        gens.push_back(reduce_mod_lattice(q.bottom_basis, q.top_basis * s.U_inv.column(i)));
        rows.push_back(s.U.row(i));
    }
    q.generators = IntMatrix::from_columns(top.rows(), gens);
    q.coordinate_transform = rows.empty() ? IntMatrix(0, k) : IntMatrix::from_columns(k, rows).transpose();
    return q;
}

} // namespace selmer
