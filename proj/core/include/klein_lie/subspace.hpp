#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "klein_lie/lie_algebra.hpp"

namespace klein_lie {

// Subspace of a fixed algebra, canonicalized as the reduced row echelon form
// of its spanning vectors (first-nonzero-column pivot order). Equality of
// subspaces is therefore literal row equality.
class Subspace {
public:
    static Subspace zero(const GradedLieAlgebra* L);
    static Subspace full(const GradedLieAlgebra* L);
    static Subspace span(const GradedLieAlgebra* L, const std::vector<RationalVector>& vectors);

    const GradedLieAlgebra* algebra() const { return algebra_; }
    const RationalMatrix& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t dim() const { return rows_.rows(); }
    bool is_zero() const { return dim() == 0; }

    std::vector<RationalVector> basis_vectors() const;

    // Residue of v after eliminating against the echelon rows; zero iff v is
    // in the span.
    RationalVector reduce(RationalVector v) const;
    bool contains(const RationalVector& v) const { return is_zero_vector(reduce(v)); }
    bool contains_subspace(const Subspace& other) const;

    // Graded iff each spanning vector's homogeneous components stay inside
    // the span.
    bool is_graded() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.algebra_ == b.algebra_ && a.rows_ == b.rows_;
    }

private:
    Subspace(const GradedLieAlgebra* L, RationalMatrix rows, std::vector<std::size_t> pivots)
        : algebra_(L), rows_(std::move(rows)), pivots_(std::move(pivots)) {}
    const GradedLieAlgebra* algebra_;
    RationalMatrix rows_;
    std::vector<std::size_t> pivots_;
};

// Span of basis vectors of a fixed degree.
Subspace degree_component(const GradedLieAlgebra& L, GroupElement g);

// Plain subspace operations (no ideal precondition).
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
Subspace subspace_bracket(const Subspace& a, const Subspace& b);

bool is_ideal(const Subspace& s);
bool is_graded_ideal(const Subspace& s);

// Ideal arithmetic; throws NotAnIdeal when an operand fails is_ideal.
Subspace ideal_sum(const Subspace& i, const Subspace& j);
Subspace ideal_intersection(const Subspace& i, const Subspace& j);
Subspace ideal_bracket(const Subspace& i, const Subspace& j);

// Smallest ideal containing the given vectors (closure under [L, -]).
Subspace ideal_generated_by(const GradedLieAlgebra& L, const std::vector<RationalVector>& gens);

Subspace center(const GradedLieAlgebra& L);

// L^0 = L, L^{k+1} = [L^k, L^k], appended until stabilization.
std::vector<Subspace> derived_series(const GradedLieAlgebra& L);
// L_0 = L, L_{k+1} = [L, L_k], appended until stabilization.
std::vector<Subspace> lower_central_series(const GradedLieAlgebra& L);
bool is_solvable(const GradedLieAlgebra& L);
bool is_nilpotent(const GradedLieAlgebra& L);

// Degree-e linear map between algebras; matrix is dim(target) x dim(source),
// column i = f(x_i). Non-owning pointers, as with LieElement.
struct AlgebraMorphism {
    const GradedLieAlgebra* source = nullptr;
    const GradedLieAlgebra* target = nullptr;
    RationalMatrix matrix;

    RationalVector apply(const RationalVector& v) const { return matrix * v; }
};

struct QuotientResult {
    std::shared_ptr<GradedLieAlgebra> algebra;  // stable address for the projection
    AlgebraMorphism projection;                 // L -> L/a
    std::vector<int> coset_reps;                // parent basis index per quotient basis vector
};

// Quotient by a graded ideal. Coset representatives are the parent basis
// vectors at the non-pivot coordinates of the ideal's echelon form, so they
// are homogeneous and the choice is deterministic. Throws NotGradedIdeal.
QuotientResult quotient(const GradedLieAlgebra& L, const Subspace& ideal);

struct MorphismReport {
    bool ok = false;                               // degree-e + bracket-compatible
    std::optional<std::pair<int, int>> witness;    // first failing basis pair
    std::optional<Subspace> kernel;                // graded ideal of the source
    std::optional<Subspace> image;                 // subalgebra of the target
    bool kernel_is_graded_ideal = false;
    bool first_iso_ok = false;  // quotient(source, kernel) ~ image via the induced map
};

// Verifies f[x,y] = [f(x),f(y)] on basis pairs and degree-e homogeneity,
// computes kernel and image, and checks the first isomorphism theorem by
// constructing the induced map on the quotient and testing bijectivity onto
// the image.
MorphismReport check_morphism(const AlgebraMorphism& f);

// The unique f' with f' o pi = f, for f vanishing on the quotient's ideal.
AlgebraMorphism induce_morphism(const QuotientResult& q, const AlgebraMorphism& f);

// Maximal solvable ideal of a trivially graded algebra, computed as the
// Killing-orthogonal complement of [L,L]. Throws NotTriviallyGraded.
Subspace radical(const GradedLieAlgebra& L);

}  // namespace klein_lie
