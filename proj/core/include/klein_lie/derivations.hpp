#pragma once

#include <utility>
#include <vector>

#include "klein_lie/representation.hpp"

namespace klein_lie {

// Solution of the module-derivation identity
//   f([x,y]) = theta(d, x) x.f(y) - theta(d x, y) y.f(x)
// split by homogeneity degree d. Maps f : L -> V are stored as
// dim(V) x dim(L) matrices with column i = f(x_i).
struct DerivationSpace {
    const GradedLieAlgebra* algebra = nullptr;
    std::vector<std::pair<GroupElement, std::vector<RationalMatrix>>> by_degree;

    std::size_t dim() const;
    std::vector<RationalMatrix> all() const;
    std::size_t degree_dim(GroupElement d) const;
};

// Derivations of L valued in the module r; the adjoint module gives der(L).
DerivationSpace der_module(const GradedLieAlgebra& L, const Representation& r);
DerivationSpace der(const GradedLieAlgebra& L);

// Inner derivations x -> r(x) u over module basis vectors u, reduced to a
// basis. For the adjoint module this is the image of ad.
std::vector<RationalMatrix> inner(const GradedLieAlgebra& L, const Representation& r);
std::size_t inner_dim(const GradedLieAlgebra& L, const Representation& r);

// dim Der(L,V) - dim Inn(L,V).
int h1_dimension(const GradedLieAlgebra& L, const Representation& r);

// True iff every homogeneous block of f satisfies the identity at its own
// degree (the identity only type-checks on homogeneous components).
bool is_module_derivation(const Representation& r, const RationalMatrix& f);

// Splits a derivation into its homogeneous blocks; every component passes
// the identity and they sum back to f. Throws NotADerivation.
std::vector<std::pair<GroupElement, RationalMatrix>> homogeneous_decomposition(
    const Representation& r, const RationalMatrix& f);

}  // namespace klein_lie
