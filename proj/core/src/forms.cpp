#include "klein_lie/forms.hpp"

#include <stdexcept>

#include "klein_lie/errors.hpp"

namespace klein_lie {

RationalMatrix gamma_matrix(const GradedVectorSpace& space, const ColorMap& color) {
    RationalMatrix g(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i)
        g.at(i, i) = color.scalar(space.degree(i), space.degree(i));
    return g;
}

GradedLinearMap gamma(const GradedVectorSpace& space, const ColorMap& color) {
    return GradedLinearMap::endomorphism(space, gamma_matrix(space, color),
                                         space.group().identity());
}

Rational supertrace(const RationalMatrix& a, const GradedVectorSpace& space,
                    const ColorMap& color) {
    if (a.rows() != a.cols() || a.rows() != static_cast<std::size_t>(space.dim()))
        throw NotSquare();
    Rational t;
    for (int i = 0; i < space.dim(); ++i)
        t += color.scalar(space.degree(i), space.degree(i)) * a.at(i, i);
    return t;
}

Rational supertrace(const GradedLinearMap& a, const ColorMap& color) {
    if (!(a.source == a.target)) throw NotSquare();
    return supertrace(a.matrix, a.source, color);
}

BilinearForm killing_form(const GradedLieAlgebra& L) {
    GradedVectorSpace space(L.group(), [&] {
        std::vector<GroupElement> degrees;
        for (int i = 0; i < L.dim(); ++i) degrees.push_back(L.degree(i));
        return degrees;
    }());
    std::vector<RationalMatrix> ad;
    ad.reserve(L.dim());
    for (int i = 0; i < L.dim(); ++i) ad.push_back(ad_matrix(L, i));

    RationalMatrix gram(L.dim(), L.dim());
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
            gram.at(i, j) = supertrace(ad[i] * ad[j], space, L.color());
    return {&L, std::move(gram)};
}

bool form_vanishes_off_degree_e(const BilinearForm& b) {
    const auto& L = *b.algebra;
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
            if (!b.gram.at(i, j).is_zero() && !(L.degree(i) * L.degree(j)).is_identity())
                return false;
    return true;
}

bool form_is_color_symmetric(const BilinearForm& b) {
    const auto& L = *b.algebra;
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
            if (b.gram.at(j, i) != L.color().scalar(L.degree(i), L.degree(j)) * b.gram.at(i, j))
                return false;
    return true;
}

bool form_is_invariant(const BilinearForm& b) {
    const auto& L = *b.algebra;
    for (int c = 0; c < L.dim(); ++c)
        for (int a = 0; a < L.dim(); ++a)
            for (int j = 0; j < L.dim(); ++j) {
                RationalVector ca = L.bracket_basis(c, a);
                RationalVector cb = L.bracket_basis(c, j);
                RationalVector ea(L.dim()), eb(L.dim());
                ea[a] = 1;
                eb[j] = 1;
                Rational lhs = b.eval(ca, eb) +
                               L.color().scalar(L.degree(c), L.degree(a)) * b.eval(ea, cb);
                if (!lhs.is_zero()) return false;
            }
    return true;
}

std::vector<RationalVector> dual_basis(const BilinearForm& b) {
    RationalMatrix inv = b.gram.inverse();  // throws Degenerate when singular
    std::vector<RationalVector> dual;
    dual.reserve(inv.rows());
    for (std::size_t j = 0; j < inv.rows(); ++j) dual.push_back(inv.row(j));
    return dual;
}

NLinearForm::NLinearForm(const Representation& r, int n) : rep_(&r), n_(n) {
    if (n < 1) throw std::invalid_argument("n-linear form needs n >= 1");
}

Rational NLinearForm::eval(const std::vector<RationalVector>& args) const {
    if (static_cast<int>(args.size()) != n_)
        throw std::invalid_argument("argument count mismatch");
    RationalMatrix prod = RationalMatrix::identity(rep_->space.dim());
    for (const auto& a : args) prod = prod * rep_->image_of(a);
    return supertrace(prod, rep_->space, rep_->algebra->color());
}

RationalMatrix NLinearForm::gram() const {
    if (n_ != 2) throw std::invalid_argument("Gram matrix defined for n = 2");
    const auto& L = *rep_->algebra;
    RationalMatrix g(L.dim(), L.dim());
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
            g.at(i, j) = supertrace(rep_->images[i] * rep_->images[j], rep_->space, L.color());
    return g;
}

NLinearForm nlinear_form(const Representation& r, int n) { return NLinearForm(r, n); }

}  // namespace klein_lie
