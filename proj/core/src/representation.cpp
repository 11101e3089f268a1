#include "klein_lie/representation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "klein_lie/errors.hpp"

namespace klein_lie {

RationalMatrix Representation::image_of(const RationalVector& element) const {
    RationalMatrix m(space.dim(), space.dim());
    for (std::size_t i = 0; i < element.size(); ++i) {
        if (element[i].is_zero()) continue;
        m = m + images[i].scaled(element[i]);
    }
    return m;
}

std::vector<PlUnit> pl_units(const GradedVectorSpace& space) {
    std::vector<PlUnit> units;
    for (auto d : space.group().elements())
        for (int row = 0; row < space.dim(); ++row)
            for (int col = 0; col < space.dim(); ++col)
                if (space.degree(row) * space.degree(col) == d) units.push_back({row, col});
    return units;
}

GradedLieAlgebra pl(const GradedVectorSpace& space, const ColorMap& color) {
    if (!(color.group() == space.group()))
        throw std::invalid_argument("color map is over a different group");
    auto units = pl_units(space);
    std::vector<BasisVector> basis;
    basis.reserve(units.size());
    for (const auto& u : units) {
        std::ostringstream name;
        name << "E" << (u.row + 1) << "_" << (u.col + 1);
        basis.push_back({name.str(), space.degree(u.row) * space.degree(u.col)});
    }

    GradedLieAlgebra L(space.group(), color, std::move(basis));

    auto unit_index = [&](int row, int col) -> int {
        for (std::size_t k = 0; k < units.size(); ++k)
            if (units[k].row == row && units[k].col == col) return static_cast<int>(k);
        return -1;
    };

    const int n = static_cast<int>(units.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const auto& u = units[i];
            const auto& v = units[j];
            Rational theta = color.scalar(L.degree(i), L.degree(j));
            SparseVec terms;
            if (u.col == v.row) terms.emplace_back(unit_index(u.row, v.col), Rational(1));
            if (v.col == u.row) terms.emplace_back(unit_index(v.row, u.col), -theta);
            L.set_bracket(i, j, std::move(terms));
        }
    return L;
}

RationalMatrix pl_to_matrix(const GradedVectorSpace& space, const RationalVector& coords) {
    auto units = pl_units(space);
    if (coords.size() != units.size()) throw std::invalid_argument("coordinate length mismatch");
    RationalMatrix m(space.dim(), space.dim());
    for (std::size_t k = 0; k < units.size(); ++k) m.at(units[k].row, units[k].col) += coords[k];
    return m;
}

RationalVector matrix_to_pl(const GradedVectorSpace& space, const RationalMatrix& m) {
    auto units = pl_units(space);
    RationalVector coords(units.size());
    for (std::size_t k = 0; k < units.size(); ++k) coords[k] = m.at(units[k].row, units[k].col);
    return coords;
}

RepresentationCheck check_representation(const Representation& r) {
    const auto& L = *r.algebra;
    if (r.images.size() != static_cast<std::size_t>(L.dim()))
        return {false, std::nullopt, "one image per basis element required"};
    for (int i = 0; i < L.dim(); ++i) {
        const auto& m = r.images[i];
        if (m.rows() != static_cast<std::size_t>(r.space.dim()) || m.rows() != m.cols())
            return {false, std::pair{i, i}, "image shape mismatch"};
        if (!is_block_homogeneous(m, r.space, r.space, L.degree(i)))
            return {false, std::pair{i, i}, "image is not homogeneous of the basis degree"};
    }
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i; j < L.dim(); ++j) {
            RationalMatrix lhs = r.image_of(L.bracket_basis(i, j));
            RationalMatrix rhs =
                r.images[i] * r.images[j] -
                (r.images[j] * r.images[i]).scaled(L.color().scalar(L.degree(i), L.degree(j)));
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "bracket relation fails on (" << L.name(i) << "," << L.name(j) << ")";
                return {false, std::pair{i, j}, os.str()};
            }
        }
    return {true, std::nullopt, ""};
}

Representation adjoint(const GradedLieAlgebra& L) {
    GradedVectorSpace space(L.group(), [&] {
        std::vector<GroupElement> degrees;
        for (int i = 0; i < L.dim(); ++i) degrees.push_back(L.degree(i));
        return degrees;
    }());
    std::vector<RationalMatrix> images;
    images.reserve(L.dim());
    for (int i = 0; i < L.dim(); ++i) images.push_back(ad_matrix(L, i));
    return {&L, std::move(space), std::move(images)};
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.algebra != b.algebra) throw MixedAlgebras();
    std::vector<GroupElement> degrees = a.space.degrees();
    degrees.insert(degrees.end(), b.space.degrees().begin(), b.space.degrees().end());
    GradedVectorSpace space(a.space.group(), std::move(degrees));

    std::vector<RationalMatrix> images;
    for (std::size_t i = 0; i < a.images.size(); ++i) {
        RationalMatrix m(space.dim(), space.dim());
        for (std::size_t r = 0; r < a.images[i].rows(); ++r)
            for (std::size_t c = 0; c < a.images[i].cols(); ++c)
                m.at(r, c) = a.images[i].at(r, c);
        std::size_t off = a.images[i].rows();
        for (std::size_t r = 0; r < b.images[i].rows(); ++r)
            for (std::size_t c = 0; c < b.images[i].cols(); ++c)
                m.at(off + r, off + c) = b.images[i].at(r, c);
        images.push_back(std::move(m));
    }
    return {a.algebra, std::move(space), std::move(images)};
}

bool SpaceSubspace::is_graded() const {
    std::vector<std::size_t> pivots;
    RationalMatrix r = rows.rref(&pivots);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        RationalVector row = rows.row(i);
        for (auto g : space.group().elements()) {
            RationalVector comp(row.size());
            bool nonzero = false;
            for (std::size_t k = 0; k < row.size(); ++k)
                if (space.degree(static_cast<int>(k)) == g && !row[k].is_zero()) {
                    comp[k] = row[k];
                    nonzero = true;
                }
            if (nonzero && !is_zero_vector(eliminate(r, pivots, comp))) return false;
        }
    }
    return true;
}

SpaceSubspace invariants_of(const Representation& r) {
    RationalMatrix stacked(0, r.space.dim());
    for (const auto& m : r.images) stacked = stacked.vstack(m);
    auto basis = stacked.kernel();
    RationalMatrix rows = RationalMatrix::from_rows(basis, r.space.dim()).rref();
    RationalMatrix trimmed(basis.size(), r.space.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) trimmed.set_row(i, rows.row(i));
    return {r.space, std::move(trimmed)};
}

std::vector<RationalMatrix> module_endomorphisms(const Representation& r, GroupElement d) {
    const int n = r.space.dim();
    const auto& L = *r.algebra;

    // Unknowns: the entries at block-allowed positions of a degree-d map.
    std::vector<std::pair<int, int>> slots;
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col)
            if (r.space.degree(row) == d * r.space.degree(col)) slots.emplace_back(row, col);
    if (slots.empty()) return {};

    // Constraints: f r(x_i) - theta(d, deg x_i) r(x_i) f = 0 entrywise.
    RationalMatrix sys(static_cast<std::size_t>(L.dim()) * n * n, slots.size());
    for (int i = 0; i < L.dim(); ++i) {
        Rational theta = L.color().scalar(d, L.degree(i));
        const RationalMatrix& ri = r.images[i];
        for (std::size_t sidx = 0; sidx < slots.size(); ++sidx) {
            auto [a, b] = slots[sidx];
            // (U_{ab} ri)(p,q) = delta_{pa} ri(b,q); (ri U_{ab})(p,q) = ri(p,a) delta_{qb}
            for (int q = 0; q < n; ++q) {
                std::size_t row = static_cast<std::size_t>(i) * n * n + a * n + q;
                sys.at(row, sidx) += ri.at(b, q);
            }
            for (int p = 0; p < n; ++p) {
                std::size_t row = static_cast<std::size_t>(i) * n * n + p * n + b;
                sys.at(row, sidx) -= theta * ri.at(p, a);
            }
        }
    }

    std::vector<RationalMatrix> basis;
    for (const auto& k : sys.kernel()) {
        RationalMatrix f(n, n);
        for (std::size_t sidx = 0; sidx < slots.size(); ++sidx)
            f.at(slots[sidx].first, slots[sidx].second) = k[sidx];
        basis.push_back(std::move(f));
    }
    return basis;
}

bool is_simple(const Representation& r) {
    const int n = r.space.dim();
    if (n == 0) return false;
    for (int v0 = 0; v0 < n; ++v0) {
        // Generated submodule of the basis vector v0: closure under images.
        std::vector<RationalVector> gen;
        RationalVector start(n);
        start[v0] = 1;
        gen.push_back(std::move(start));
        std::size_t rank = 1;
        for (;;) {
            std::vector<RationalVector> next = gen;
            for (const auto& v : gen)
                for (const auto& m : r.images) next.push_back(m * v);
            RationalMatrix reduced = RationalMatrix::from_rows(next, n);
            std::vector<std::size_t> pivots;
            RationalMatrix rr = reduced.rref(&pivots);
            if (pivots.size() == rank) break;
            rank = pivots.size();
            gen.clear();
            for (std::size_t i = 0; i < pivots.size(); ++i) gen.push_back(rr.row(i));
        }
        if (rank < static_cast<std::size_t>(n)) return false;
    }
    return true;
}

namespace {
// Writes m = c * candidate when m is in the line spanned by candidate.
bool in_line(const RationalMatrix& m, const RationalMatrix& candidate) {
    Rational ratio;
    bool have = false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m.at(r, c);
            const Rational& y = candidate.at(r, c);
            if (y.is_zero()) {
                if (!x.is_zero()) return false;
                continue;
            }
            Rational q = x / y;
            if (!have) {
                ratio = q;
                have = true;
            } else if (q != ratio) {
                return false;
            }
        }
    return true;
}
}  // namespace

SchurReport schur_structure(const Representation& r) {
    if (!is_simple(r)) throw NotSimple("representation has a proper generated submodule");
    SchurReport report;
    const int n = r.space.dim();
    std::map<std::uint8_t, const RationalMatrix*> generators;

    for (auto d : r.space.group().elements()) {
        SchurDegreeReport entry;
        entry.degree = d;
        auto basis = module_endomorphisms(r, d);
        entry.hom_dim = basis.size();
        if (basis.size() == 1) {
            RationalMatrix u = basis[0];
            RationalMatrix u2 = u * u;
            Rational c = u2.at(0, 0);
            bool scalar = u2 == RationalMatrix::identity(n).scaled(c);
            if (scalar) {
                if (!c.is_zero() && c.is_perfect_square()) {
                    u = u.scaled(c.sqrt().inverse());
                    entry.normalized = true;
                } else {
                    entry.square_scalar = c;
                }
                entry.generator = std::move(u);
            }
        }
        report.degrees.push_back(std::move(entry));
    }

    for (const auto& e : report.degrees)
        if (e.generator) generators[e.degree.bits] = &*e.generator;

    // u_a u_b must land in the line of u_{ab}.
    for (const auto& [abits, ua] : generators)
        for (const auto& [bbits, ub] : generators) {
            GroupElement ab = GroupElement{abits} * GroupElement{bbits};
            RationalMatrix prod = (*ua) * (*ub);
            auto it = generators.find(ab.bits);
            if (it != generators.end()) {
                if (!in_line(prod, *it->second)) report.products_in_span = false;
            } else if (!prod.is_zero()) {
                report.products_in_span = false;
            }
        }
    return report;
}

}  // namespace klein_lie
