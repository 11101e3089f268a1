#include "klein_lie/derivations.hpp"

#include <stdexcept>

#include "klein_lie/errors.hpp"

namespace klein_lie {

std::size_t DerivationSpace::dim() const {
    std::size_t total = 0;
    for (const auto& [d, basis] : by_degree) total += basis.size();
    return total;
}

std::vector<RationalMatrix> DerivationSpace::all() const {
    std::vector<RationalMatrix> out;
    for (const auto& [d, basis] : by_degree)
        out.insert(out.end(), basis.begin(), basis.end());
    return out;
}

std::size_t DerivationSpace::degree_dim(GroupElement d) const {
    for (const auto& [deg, basis] : by_degree)
        if (deg == d) return basis.size();
    return 0;
}

namespace {

// Residue of the identity for a candidate degree-d block matrix f at the
// basis pair (i, j): f([x_i,x_j]) - theta(d,i) r_i f(x_j) + theta(d i, j) r_j f(x_i).
RationalVector derivation_residue(const GradedLieAlgebra& L, const Representation& r,
                                  GroupElement d, const RationalMatrix& f, int i, int j) {
    const int vdim = r.space.dim();
    Rational theta_di = L.color().scalar(d, L.degree(i));
    Rational theta_dij = L.color().scalar(d * L.degree(i), L.degree(j));

    RationalVector lhs(vdim);
    RationalVector br = L.bracket_basis(i, j);
    for (int k = 0; k < L.dim(); ++k)
        if (!br[k].is_zero()) add_scaled(lhs, f.col(k), br[k]);

    add_scaled(lhs, r.images[i] * f.col(j), -theta_di);
    add_scaled(lhs, r.images[j] * f.col(i), theta_dij);
    return lhs;
}

}  // namespace

DerivationSpace der_module(const GradedLieAlgebra& L, const Representation& r) {
    if (r.algebra != &L) throw MixedAlgebras();
    const int vdim = r.space.dim();
    DerivationSpace out;
    out.algebra = &L;

    for (auto d : L.group().elements()) {
        // Unknown entries of a degree-d map: f(L_h) subset V_{dh}.
        std::vector<std::pair<int, int>> slots;
        for (int row = 0; row < vdim; ++row)
            for (int col = 0; col < L.dim(); ++col)
                if (r.space.degree(row) == d * L.degree(col)) slots.emplace_back(row, col);
        if (slots.empty()) {
            out.by_degree.push_back({d, {}});
            continue;
        }

        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < L.dim(); ++i)
            for (int j = i; j < L.dim(); ++j) pairs.emplace_back(i, j);

        RationalMatrix sys(pairs.size() * vdim, slots.size());
        for (std::size_t sidx = 0; sidx < slots.size(); ++sidx) {
            RationalMatrix unit(vdim, L.dim());
            unit.at(slots[sidx].first, slots[sidx].second) = 1;
            for (std::size_t pidx = 0; pidx < pairs.size(); ++pidx) {
                auto [i, j] = pairs[pidx];
                RationalVector res = derivation_residue(L, r, d, unit, i, j);
                for (int k = 0; k < vdim; ++k) sys.at(pidx * vdim + k, sidx) = res[k];
            }
        }

        std::vector<RationalMatrix> basis;
        for (const auto& k : sys.kernel()) {
            RationalMatrix f(vdim, L.dim());
            for (std::size_t sidx = 0; sidx < slots.size(); ++sidx)
                f.at(slots[sidx].first, slots[sidx].second) = k[sidx];
            basis.push_back(std::move(f));
        }
        out.by_degree.push_back({d, std::move(basis)});
    }
    return out;
}

DerivationSpace der(const GradedLieAlgebra& L) { return der_module(L, adjoint(L)); }

std::vector<RationalMatrix> inner(const GradedLieAlgebra& L, const Representation& r) {
    if (r.algebra != &L) throw MixedAlgebras();
    const int vdim = r.space.dim();
    std::vector<RationalVector> flat;
    for (int u = 0; u < vdim; ++u) {
        RationalVector v(static_cast<std::size_t>(vdim) * L.dim());
        for (int i = 0; i < L.dim(); ++i)
            for (int k = 0; k < vdim; ++k) v[static_cast<std::size_t>(k) * L.dim() + i] =
                r.images[i].at(k, u);
        flat.push_back(std::move(v));
    }
    RationalMatrix m = RationalMatrix::from_rows(flat, static_cast<std::size_t>(vdim) * L.dim());
    std::vector<std::size_t> pivots;
    RationalMatrix reduced = m.rref(&pivots);

    std::vector<RationalMatrix> basis;
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        RationalMatrix f(vdim, L.dim());
        for (int k = 0; k < vdim; ++k)
            for (int i = 0; i < L.dim(); ++i)
                f.at(k, i) = reduced.at(row, static_cast<std::size_t>(k) * L.dim() + i);
        basis.push_back(std::move(f));
    }
    return basis;
}

std::size_t inner_dim(const GradedLieAlgebra& L, const Representation& r) {
    return inner(L, r).size();
}

int h1_dimension(const GradedLieAlgebra& L, const Representation& r) {
    return static_cast<int>(der_module(L, r).dim()) - static_cast<int>(inner_dim(L, r));
}

bool is_module_derivation(const Representation& r, const RationalMatrix& f) {
    const auto& L = *r.algebra;
    const int vdim = r.space.dim();
    if (f.rows() != static_cast<std::size_t>(vdim) ||
        f.cols() != static_cast<std::size_t>(L.dim()))
        throw std::invalid_argument("derivation matrix shape mismatch");

    for (auto d : L.group().elements()) {
        RationalMatrix block(vdim, L.dim());
        bool nonzero = false;
        for (int row = 0; row < vdim; ++row)
            for (int col = 0; col < L.dim(); ++col)
                if (!f.at(row, col).is_zero() &&
                    r.space.degree(row) == d * L.degree(col)) {
                    block.at(row, col) = f.at(row, col);
                    nonzero = true;
                }
        if (!nonzero) continue;
        for (int i = 0; i < L.dim(); ++i)
            for (int j = i; j < L.dim(); ++j)
                if (!is_zero_vector(derivation_residue(L, r, d, block, i, j))) return false;
    }
    return true;
}

std::vector<std::pair<GroupElement, RationalMatrix>> homogeneous_decomposition(
    const Representation& r, const RationalMatrix& f) {
    if (!is_module_derivation(r, f)) throw NotADerivation();
    const auto& L = *r.algebra;
    const int vdim = r.space.dim();

    std::vector<std::pair<GroupElement, RationalMatrix>> out;
    for (auto d : L.group().elements()) {
        RationalMatrix block(vdim, L.dim());
        bool nonzero = false;
        for (int row = 0; row < vdim; ++row)
            for (int col = 0; col < L.dim(); ++col)
                if (!f.at(row, col).is_zero() &&
                    r.space.degree(row) == d * L.degree(col)) {
                    block.at(row, col) = f.at(row, col);
                    nonzero = true;
                }
        if (nonzero) out.push_back({d, std::move(block)});
    }
    return out;
}

}  // namespace klein_lie
