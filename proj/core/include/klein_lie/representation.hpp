#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein_lie/graded_space.hpp"
#include "klein_lie/lie_algebra.hpp"

namespace klein_lie {

// Graded representation r of L in V: each r(x_i) is homogeneous of
// degree(x_i) and r([A,B]) = r(A)r(B) - theta(a,b) r(B)r(A).
struct Representation {
    const GradedLieAlgebra* algebra = nullptr;
    GradedVectorSpace space;
    std::vector<RationalMatrix> images;  // one per basis element of L

    RationalMatrix image_of(const RationalVector& element) const;
};

// The general linear graded algebra pl(V): all matrix units of End(V),
// graded by block position, with bracket [A,B] = AB - theta(a,b)BA.
GradedLieAlgebra pl(const GradedVectorSpace& space, const ColorMap& color);

// Conversions between pl(V) coordinates and concrete matrices. The pl basis
// is ordered by degree block, then (row, col); these helpers recover it.
struct PlUnit {
    int row, col;  // matrix unit E_{row,col}
};
std::vector<PlUnit> pl_units(const GradedVectorSpace& space);
RationalMatrix pl_to_matrix(const GradedVectorSpace& space, const RationalVector& coords);
RationalVector matrix_to_pl(const GradedVectorSpace& space, const RationalMatrix& m);

struct RepresentationCheck {
    bool ok = false;
    std::optional<std::pair<int, int>> witness;  // failing basis pair (i,i) for degree faults
    std::string message;
};

RepresentationCheck check_representation(const Representation& r);

Representation adjoint(const GradedLieAlgebra& L);

// Direct sum acting blockwise; the summands must be over the same algebra.
Representation direct_sum(const Representation& a, const Representation& b);

// Subspace of a graded vector space (not of an algebra); echelon rows.
struct SpaceSubspace {
    GradedVectorSpace space;
    RationalMatrix rows;
    std::size_t dim() const { return rows.rows(); }
    bool is_graded() const;
};

// Invariants x with r(A)x = 0 for all A: the exact kernel of the stacked
// image matrices; always a graded subspace.
SpaceSubspace invariants_of(const Representation& r);

// Basis of Hom_L(V)_d: homogeneous degree-d matrices f with
// f r(x) = theta(d, deg x) r(x) f for every basis x.
std::vector<RationalMatrix> module_endomorphisms(const Representation& r, GroupElement d);

// Brute-force simplicity: every nonzero homogeneous basis vector generates
// the whole space under the images.
bool is_simple(const Representation& r);

struct SchurDegreeReport {
    GroupElement degree;
    std::size_t hom_dim = 0;
    std::optional<RationalMatrix> generator;  // u_d, rescaled when possible
    std::optional<Rational> square_scalar;    // c with u_d^2 = c Id (before rescale,
                                              // reported when c is not a rational square)
    bool normalized = false;                  // u_d^2 == Id after rescaling
};

struct SchurReport {
    std::vector<SchurDegreeReport> degrees;
    bool products_in_span = true;  // u_a u_b lies in span(u_{ab})
};

// Schur data of a simple representation; throws NotSimple otherwise.
SchurReport schur_structure(const Representation& r);

}  // namespace klein_lie
