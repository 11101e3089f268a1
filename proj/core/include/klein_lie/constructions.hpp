#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "klein_lie/lie_algebra.hpp"
#include "klein_lie/representation.hpp"
#include "klein_lie/subspace.hpp"

namespace klein_lie {

// Thrown by builders whose assembled table fails the axioms; carries the
// witness from the validator.
class ValidationFailure : public Error {
public:
    ValidationFailure(std::string what, Violation violation)
        : Error(std::move(what)), violation(std::move(violation)) {}
    Violation violation;
};

// sl(2) with basis (h, x, y): [h,x] = 2x, [h,y] = -2y, [x,y] = h, over the
// given group with every degree e (trivial group by default).
GradedLieAlgebra sl2(GradeGroup group, ColorMap color);
GradedLieAlgebra sl2();

// The (n+1)-dimensional irreducible module: h e_i = (n-2i) e_i,
// x e_i = (n-i+1) e_{i-1}, y e_i = (i+1) e_{i+1}. Throws NegativeWeight.
Representation sl2_module(const GradedLieAlgebra& sl2_algebra, int n);

// Antidiagonal pairing data for L_e = sl(2) acting on a single irreducible
// module: [e_i, e_j] = a_ij h + b_ij x + c_ij y with a supported on i+j = n,
// b on i+j = n-1, c on i+j = n+1.
struct Sl2CaseSolution {
    int n = 0;
    int theta_rr = -1;
    std::size_t solution_dim = 0;  // 0 or 1
    RationalMatrix a, b, c;        // (n+1)x(n+1); normalized by a_{0,n} = 1 when dim 1

    // Residues of the nine defining equations under this solution; all zero
    // for a valid solve.
    bool satisfies_equations() const;
};

// Assembles the exact linear system (the nine relations over the supported
// antidiagonals plus the theta(r,r) symmetry constraint) and solves it as
// one kernel problem.
Sl2CaseSolution solve_sl2_equations(int n, int theta_rr);

// The closed forms, evaluated exactly:
//   a_{i,n-i}   = (-1)^i     C(n,i)   (n-2i)/n    a_{0,n}
//   b_{i,n-1-i} = (-1)^{i+1} C(n,i)   2(n-i)/n    a_{0,n}
//   c_{i,n+1-i} = (-1)^{i-1} C(n,i-1) 2(n-i+1)/n  a_{0,n}
// Slots whose second index falls outside [0,n] are reported as zero.
// Throws IndexOutOfRange for i outside [0,n] or n < 1.
struct ClosedFormABC {
    Rational a, b, c;
};
ClosedFormABC closed_form_abc(int n, int i, const Rational& a0n);

// Bilinear pairing P : L_x x L_y -> L_{xy} on local part coordinates;
// entries are given for u <= v when x = y (the mirror follows from skew).
struct PairingTable {
    std::map<std::pair<int, int>, SparseVec> entries;
    bool empty() const { return entries.empty(); }
};

// Data for the reassembly: the Lie algebra L_e = sl(2), one representation
// per nonzero part (direct sums of irreducibles by weight), and the six
// pairings. A Klein graded Lie algebra is uniquely fixed by these; it is an
// algebra at all iff the pairings are invariant and the pairing-Jacobi
// condition holds, which assembly + validation decides.
struct Sl2KleinSpec {
    ColorMap color;  // Klein color
    std::vector<int> weights_r, weights_s, weights_t;
    PairingTable p_rr, p_ss, p_tt, p_rs, p_rt, p_st;

    Sl2KleinSpec() : color(ColorMap::theta(3)) {}
};

struct Sl2ModuleRange {
    GroupElement part;
    int weight = 0;
    int offset = 0;  // first basis index of this module
    int dim = 0;
};

struct Sl2KleinAlgebra {
    std::shared_ptr<GradedLieAlgebra> algebra;
    std::vector<Sl2ModuleRange> modules;  // h,x,y always occupy indices 0..2
};

// Assembly without validation (used to probe invalid colors).
Sl2KleinAlgebra assemble_sl2_klein(const Sl2KleinSpec& spec);
// Assembly + validation; throws ValidationFailure with the witness triple.
Sl2KleinAlgebra build_sl2_klein_algebra(const Sl2KleinSpec& spec);

struct Sl2ModuleInfo {
    GroupElement part;
    int weight = 0;
    int dim = 0;
    bool self_bracket_zero = true;   // [M_k, M_k] = 0
    bool self_bracket_full = false;  // [M_k, M_k] = L_e
    bool parity_consistent = true;   // dim parity vs theta(part,part), when pairing nonzero
};

struct Sl2CaseReport {
    std::vector<Sl2ModuleInfo> modules;
    bool cross_brackets_zero = true;  // [M_k, M_l] = 0 for k != l
    bool full_implies_unique = true;  // [M,M] = L_e only when M is the whole part
    std::string case_label;
    std::optional<std::size_t> radical_dim;  // for the trivially-gradable (Lie) case
};

Sl2CaseReport classify_sl2_case(const Sl2KleinAlgebra& built);

// ---- relative parabose set ----

struct ParaboseAlgebra {
    std::shared_ptr<GradedLieAlgebra> algebra;
    int bosons = 0, fermions = 0;

    // index lookups (generator arguments are 0-based gen slots:
    // (mode-1)*2 + (sign>0)).
    int bb_index(int g1, int g2) const;  // unordered with repetition
    int ff_index(int g1, int g2) const;  // ordered pair g1 < g2
    int bf_index(int bg, int fg) const;
    int b_index(int g) const;
    int f_index(int g) const;

    int e_dim() const;
    int r_dim() const;
    int s_dim() const;
    int t_dim() const;
};

// Assembles the structure-constant table from the trilinear relations:
// generator pairs map to their composites, composite-generator brackets are
// the defining relations, and composite-composite brackets are expanded via
// the graded Leibniz rule down to generator level. The two expansion orders
// are compared; a mismatch raises ClosureFailure. Caller validates.
ParaboseAlgebra assemble_parabose(int bosons, int fermions, const ColorMap& color);

// assemble + validate under theta3. Throws ValidationFailure.
ParaboseAlgebra build_parabose(int bosons, int fermions);

struct ParaboseReport {
    bool theta_ss_matches = false;  // -1: boson pairs close through anticommutators
    bool theta_tt_matches = false;  // +1: fermion pairs close through commutators
    bool theta_st_matches = false;  // -1: mixed pairs land in L_r
    ValidationReport validation;
    bool e_plus_t_is_lie_algebra = false;
    std::vector<int> graded_dims;  // (e, r, s, t)
};

ParaboseReport parabose_consistency(const ParaboseAlgebra& built);

}  // namespace klein_lie
