#pragma once

#include <vector>

#include "klein_lie/graded_space.hpp"
#include "klein_lie/lie_algebra.hpp"
#include "klein_lie/representation.hpp"

namespace klein_lie {

// The degree-sign involution: multiplies the block of degree a by theta(a,a).
// gamma^2 = Id.
GradedLinearMap gamma(const GradedVectorSpace& space, const ColorMap& color);
RationalMatrix gamma_matrix(const GradedVectorSpace& space, const ColorMap& color);

// str(A) = Tr(gamma A). Throws NotSquare on shape mismatch.
Rational supertrace(const RationalMatrix& a, const GradedVectorSpace& space,
                    const ColorMap& color);
Rational supertrace(const GradedLinearMap& a, const ColorMap& color);

// Degree-e bilinear form on an algebra, held as its Gram matrix in the
// algebra basis.
struct BilinearForm {
    const GradedLieAlgebra* algebra = nullptr;
    RationalMatrix gram;

    Rational eval(const RationalVector& x, const RationalVector& y) const {
        return dot(x, gram * y);
    }
    bool is_degenerate() const { return gram.rank() < gram.rows(); }
};

// phi(A,B) = str(ad A ad B).
BilinearForm killing_form(const GradedLieAlgebra& L);

// Contract checks used by the property tests and the analyze report.
bool form_vanishes_off_degree_e(const BilinearForm& b);       // support only where ab = e
bool form_is_color_symmetric(const BilinearForm& b);          // b(B,A) = theta(a,b) b(A,B)
bool form_is_invariant(const BilinearForm& b);                // b([C,A],B) + theta(c,a) b(A,[C,B]) = 0

// Basis F with b(F_j, E_i) = delta_ij, by exact Gram inversion; F_j is row j
// of the returned list. Throws Degenerate.
std::vector<RationalVector> dual_basis(const BilinearForm& b);

// Evaluator for (A^1,...,A^n) -> str(A^1_V ... A^n_V); the n=2 adjoint
// specialization equals the Killing form.
class NLinearForm {
public:
    NLinearForm(const Representation& r, int n);
    int arity() const { return n_; }
    Rational eval(const std::vector<RationalVector>& args) const;

    // Gram matrix on basis pairs (only for n = 2).
    RationalMatrix gram() const;

private:
    const Representation* rep_;
    int n_;
};

NLinearForm nlinear_form(const Representation& r, int n);

}  // namespace klein_lie
