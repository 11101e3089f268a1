#include "klein_lie/lie_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "klein_lie/errors.hpp"

namespace klein_lie {

GradedLieAlgebra::GradedLieAlgebra(GradeGroup group, ColorMap color,
                                   std::vector<BasisVector> basis)
    : group_(group), color_(std::move(color)), basis_(std::move(basis)) {
    if (!(color_.group() == group_))
        throw std::invalid_argument("color map is over a different group");
    for (const auto& b : basis_)
        if (b.degree.bits >= group_.size())
            throw std::invalid_argument("basis degree outside the grade group");
}

void GradedLieAlgebra::set_bracket(int i, int j, SparseVec value) {
    if (i < 0 || j < 0 || i >= dim() || j >= dim())
        throw std::invalid_argument("bracket index out of range");
    std::sort(value.begin(), value.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec pruned;
    for (auto& [k, c] : value) {
        if (c.is_zero()) continue;
        if (!pruned.empty() && pruned.back().first == k)
            pruned.back().second += c;
        else
            pruned.emplace_back(k, c);
    }
    pruned.erase(std::remove_if(pruned.begin(), pruned.end(),
                                [](const auto& t) { return t.second.is_zero(); }),
                 pruned.end());
    if (pruned.empty())
        sc_.erase({i, j});
    else
        sc_[{i, j}] = std::move(pruned);
}

void GradedLieAlgebra::add_bracket_term(int i, int j, int k, const Rational& c) {
    auto& v = sc_[{i, j}];
    v.emplace_back(k, c);
    auto copy = v;
    sc_.erase({i, j});
    set_bracket(i, j, std::move(copy));
}

int GradedLieAlgebra::index_of(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].name == name) return i;
    return -1;
}

RationalVector GradedLieAlgebra::bracket_basis(int i, int j) const {
    RationalVector out(basis_.size());
    auto it = sc_.find({i, j});
    if (it != sc_.end()) {
        for (const auto& [k, c] : it->second) out[k] = c;
        return out;
    }
    if (i == j) return out;  // theta(d,d) = +1 forces 0; -1 squares default to 0 unless stored
    auto mirror = sc_.find({j, i});
    if (mirror != sc_.end()) {
        Rational sign = -color_.scalar(degree(i), degree(j));
        for (const auto& [k, c] : mirror->second) out[k] = c * sign;
    }
    return out;
}

LieElement GradedLieAlgebra::basis_element(int i) const {
    RationalVector v(basis_.size());
    v[i] = 1;
    return {this, std::move(v)};
}

LieElement GradedLieAlgebra::element(RationalVector coords) const {
    if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate length mismatch");
    return {this, std::move(coords)};
}

std::optional<GroupElement> GradedLieAlgebra::degree_of(const RationalVector& coords) const {
    std::optional<GroupElement> deg;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!deg)
            deg = degree(static_cast<int>(i));
        else if (*deg != degree(static_cast<int>(i)))
            return std::nullopt;
    }
    if (!deg) return group_.identity();
    return deg;
}

std::string GradedLieAlgebra::element_str(const RationalVector& coords) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!first) os << " + ";
        if (!coords[i].is_one()) os << coords[i].str() << "*";
        os << basis_[i].name;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

LieElement LieElement::operator+(const LieElement& o) const {
    if (algebra != o.algebra) throw MixedAlgebras();
    LieElement out = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += o.coeffs[i];
    return out;
}

LieElement LieElement::operator-(const LieElement& o) const {
    if (algebra != o.algebra) throw MixedAlgebras();
    LieElement out = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] -= o.coeffs[i];
    return out;
}

LieElement LieElement::scaled(const Rational& c) const {
    return {algebra, scaled_vector(coeffs, c)};
}

RationalVector bracket(const GradedLieAlgebra& L, const RationalVector& a,
                       const RationalVector& b) {
    RationalVector out(L.dim());
    for (int i = 0; i < L.dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < L.dim(); ++j) {
            if (b[j].is_zero()) continue;
            Rational c = a[i] * b[j];
            RationalVector bij = L.bracket_basis(i, j);
            add_scaled(out, bij, c);
        }
    }
    return out;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
    if (a.algebra == nullptr || a.algebra != b.algebra) throw MixedAlgebras();
    return {a.algebra, bracket(*a.algebra, a.coeffs, b.coeffs)};
}

RationalMatrix ad_matrix(const GradedLieAlgebra& L, int i) {
    RationalMatrix m(L.dim(), L.dim());
    for (int j = 0; j < L.dim(); ++j) {
        RationalVector col = L.bracket_basis(i, j);
        for (int k = 0; k < L.dim(); ++k) m.at(k, j) = col[k];
    }
    return m;
}

RationalMatrix ad_matrix(const GradedLieAlgebra& L, const RationalVector& v) {
    RationalMatrix m(L.dim(), L.dim());
    for (int i = 0; i < L.dim(); ++i) {
        if (v[i].is_zero()) continue;
        m = m + ad_matrix(L, i).scaled(v[i]);
    }
    return m;
}

std::string Violation::describe(const GradedLieAlgebra& L) const {
    std::ostringstream os;
    switch (kind) {
        case ViolationKind::Grading:
            os << "grading violation: c(" << L.name(i) << "," << L.name(j) << ")^"
               << L.name(k) << " lands outside L_" << L.group().name(L.degree(i) * L.degree(j));
            break;
        case ViolationKind::Skew:
            os << "skew violation at pair (" << L.name(i) << "," << L.name(j)
               << "): residue " << L.element_str(lhs);
            break;
        case ViolationKind::Jacobi:
            os << "Jacobi violation at triple (" << L.name(i) << "," << L.name(j) << ","
               << L.name(k) << "): sum = " << L.element_str(lhs);
            break;
    }
    return os.str();
}

ValidationReport validate(const GradedLieAlgebra& L) {
    const int n = L.dim();
    const auto& color = L.color();

    // Grading closure on every stored constant.
    for (const auto& [pair, terms] : L.stored_brackets()) {
        auto [i, j] = pair;
        GroupElement target = L.degree(i) * L.degree(j);
        for (const auto& [k, c] : terms) {
            (void)c;
            if (L.degree(k) != target)
                return {false, Violation{ViolationKind::Grading, i, j, k, {}}, 0};
        }
    }

    // Graded skew-symmetry. Diagonals: theta(d,d)=+1 forces [x,x]=0. Stored
    // mirrors must agree with -theta c_ij.
    for (int i = 0; i < n; ++i) {
        if (color.sign(L.degree(i), L.degree(i)) == 1) {
            RationalVector sq = L.bracket_basis(i, i);
            if (!is_zero_vector(sq))
                return {false, Violation{ViolationKind::Skew, i, i, -1, sq}, 0};
        }
    }
    for (const auto& [pair, terms] : L.stored_brackets()) {
        auto [i, j] = pair;
        (void)terms;
        if (i >= j || !L.has_stored(j, i)) continue;
        RationalVector cij = L.bracket_basis(i, j);
        RationalVector cji = L.bracket_basis(j, i);
        RationalVector residue(n);
        Rational sign = -color.scalar(L.degree(i), L.degree(j));
        for (int k = 0; k < n; ++k) residue[k] = cji[k] - sign * cij[k];
        if (!is_zero_vector(residue))
            return {false, Violation{ViolationKind::Skew, i, j, -1, residue}, 0};
    }

    // Graded Jacobi on all basis triples (with repetition), lowest first:
    //   theta(a,c)[A,[B,C]] + theta(a,b)[B,[C,A]] + theta(b,c)[C,[A,B]] = 0.
    std::size_t triples = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                ++triples;
                GroupElement a = L.degree(i), b = L.degree(j), c = L.degree(k);
                RationalVector bc = L.bracket_basis(j, k);
                RationalVector ca = L.bracket_basis(k, i);
                RationalVector ab = L.bracket_basis(i, j);
                RationalVector sum(n);
                RationalVector ei(n), ej(n), ek(n);
                ei[i] = 1; ej[j] = 1; ek[k] = 1;
                add_scaled(sum, bracket(L, ei, bc), color.scalar(a, c));
                add_scaled(sum, bracket(L, ej, ca), color.scalar(a, b));
                add_scaled(sum, bracket(L, ek, ab), color.scalar(b, c));
                if (!is_zero_vector(sum))
                    return {false, Violation{ViolationKind::Jacobi, i, j, k, sum}, triples};
            }

    return {true, std::nullopt, triples};
}

GradedLieAlgebra regrade(const GradedLieAlgebra& L,
                         const std::vector<std::pair<GroupElement, GroupElement>>& degree_map,
                         GradeGroup new_group, ColorMap new_color) {
    auto mapped = [&](GroupElement d) -> std::optional<GroupElement> {
        for (const auto& [from, to] : degree_map)
            if (from == d) return to;
        return std::nullopt;
    };

    std::vector<int> keep;            // old indices kept, in order
    std::vector<int> new_index(L.dim(), -1);
    std::vector<BasisVector> basis;
    for (int i = 0; i < L.dim(); ++i) {
        auto to = mapped(L.degree(i));
        if (!to) continue;
        new_index[i] = static_cast<int>(keep.size());
        keep.push_back(i);
        basis.push_back({L.name(i), *to});
    }

    GradedLieAlgebra out(new_group, new_color, std::move(basis));
    for (std::size_t u = 0; u < keep.size(); ++u)
        for (std::size_t v = u; v < keep.size(); ++v) {
            RationalVector br = L.bracket_basis(keep[u], keep[v]);
            SparseVec terms;
            for (int k = 0; k < L.dim(); ++k) {
                if (br[k].is_zero()) continue;
                if (new_index[k] < 0)
                    throw std::invalid_argument("regrade: bracket leaves the selected degrees");
                terms.emplace_back(new_index[k], br[k]);
            }
            out.set_bracket(static_cast<int>(u), static_cast<int>(v), std::move(terms));
        }
    return out;
}

}  // namespace klein_lie
