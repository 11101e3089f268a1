#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klein_lie/color_map.hpp"
#include "klein_lie/grade_group.hpp"
#include "klein_lie/rational_matrix.hpp"

namespace klein_lie {

struct BasisVector {
    std::string name;
    GroupElement degree;
};

// Sparse vector over the algebra basis: (index, coefficient), index-sorted.
using SparseVec = std::vector<std::pair<int, Rational>>;

class GradedLieAlgebra;

// An element of a fixed algebra, as dense coordinates over its basis.
// Holds a non-owning pointer; the algebra must outlive its elements.
struct LieElement {
    const GradedLieAlgebra* algebra = nullptr;
    RationalVector coeffs;

    bool is_zero() const { return is_zero_vector(coeffs); }
    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement scaled(const Rational& c) const;
};

// Finite-dimensional (G,theta)-graded Lie algebra given by an ordered
// homogeneous basis and sparse structure constants. Constants are normally
// declared for i <= j only; the (j,i) mirror is derived from graded
// skew-symmetry c_ji = -theta(d_i,d_j) c_ij. A mirror entry may still be
// declared explicitly (e.g. by the file loader when checking a full table),
// in which case validate() checks its consistency instead of assuming it.
class GradedLieAlgebra {
public:
    GradedLieAlgebra(GradeGroup group, ColorMap color, std::vector<BasisVector> basis);

    void set_bracket(int i, int j, SparseVec value);
    void add_bracket_term(int i, int j, int k, const Rational& c);

    const GradeGroup& group() const { return group_; }
    const ColorMap& color() const { return color_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisVector>& basis() const { return basis_; }
    GroupElement degree(int i) const { return basis_[i].degree; }
    const std::string& name(int i) const { return basis_[i].name; }
    int index_of(const std::string& name) const;  // -1 when absent

    int theta(int i, int j) const { return color_.sign(degree(i), degree(j)); }

    // Resolved bracket [x_i, x_j] as dense coordinates, deriving mirrors.
    RationalVector bracket_basis(int i, int j) const;
    const std::map<std::pair<int, int>, SparseVec>& stored_brackets() const { return sc_; }
    bool has_stored(int i, int j) const { return sc_.count({i, j}) != 0; }

    LieElement zero() const { return {this, RationalVector(basis_.size())}; }
    LieElement basis_element(int i) const;
    LieElement element(RationalVector coords) const;

    // Homogeneous degree of an element; identity for zero, nullopt if mixed.
    std::optional<GroupElement> degree_of(const RationalVector& coords) const;

    std::string element_str(const RationalVector& coords) const;

private:
    GradeGroup group_;
    ColorMap color_;
    std::vector<BasisVector> basis_;
    std::map<std::pair<int, int>, SparseVec> sc_;
};

// Bilinear extension of the structure constants. Throws MixedAlgebras when
// the operands belong to different algebra objects.
LieElement bracket(const LieElement& a, const LieElement& b);
RationalVector bracket(const GradedLieAlgebra& L, const RationalVector& a, const RationalVector& b);

// Matrix of ad_{x_i} : x_j -> [x_i, x_j] in the algebra basis (column j).
RationalMatrix ad_matrix(const GradedLieAlgebra& L, int i);
RationalMatrix ad_matrix(const GradedLieAlgebra& L, const RationalVector& v);

enum class ViolationKind { Grading, Skew, Jacobi };

struct Violation {
    ViolationKind kind;
    int i = -1, j = -1, k = -1;      // witness indices (k unused for Skew)
    RationalVector lhs;              // evaluated left-hand side
    std::string describe(const GradedLieAlgebra& L) const;
};

struct ValidationReport {
    bool ok = false;
    std::optional<Violation> violation;
    std::size_t jacobi_triples = 0;  // number of basis triples checked
};

// Checks grading closure, graded skew-symmetry (including the forced
// [x_i,x_i] = 0 when theta(d_i,d_i) = +1 and mirror consistency when both
// triangles are stored) and the graded Jacobi identity
//   theta(a,c)[A,[B,C]] + theta(a,b)[B,[C,A]] + theta(b,c)[C,[A,B]] = 0
// on all basis triples i <= j <= k. Returns the first failure, lowest
// lexicographic witness first.
ValidationReport validate(const GradedLieAlgebra& L);

// The same algebra on the sub-basis of the listed degrees, with degrees
// renamed through `degree_map` into `new_group` and the bracket kept as is.
// The caller is expected to validate the result; that is the point of the
// operation (checking which regradings remain graded Lie algebras).
GradedLieAlgebra regrade(const GradedLieAlgebra& L,
                         const std::vector<std::pair<GroupElement, GroupElement>>& degree_map,
                         GradeGroup new_group, ColorMap new_color);

}  // namespace klein_lie
