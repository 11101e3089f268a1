#include "klein_lie/subspace.hpp"

#include <algorithm>

#include "klein_lie/errors.hpp"
#include "klein_lie/forms.hpp"

namespace klein_lie {

Subspace Subspace::zero(const GradedLieAlgebra* L) {
    return Subspace(L, RationalMatrix(0, L->dim()), {});
}

Subspace Subspace::full(const GradedLieAlgebra* L) {
    std::vector<std::size_t> pivots(L->dim());
    for (int i = 0; i < L->dim(); ++i) pivots[i] = i;
    return Subspace(L, RationalMatrix::identity(L->dim()), std::move(pivots));
}

Subspace Subspace::span(const GradedLieAlgebra* L, const std::vector<RationalVector>& vectors) {
    RationalMatrix m = RationalMatrix::from_rows(vectors, L->dim());
    std::vector<std::size_t> pivots;
    RationalMatrix r = m.rref(&pivots);
    RationalMatrix trimmed(pivots.size(), L->dim());
    for (std::size_t i = 0; i < pivots.size(); ++i) trimmed.set_row(i, r.row(i));
    return Subspace(L, std::move(trimmed), std::move(pivots));
}

std::vector<RationalVector> Subspace::basis_vectors() const {
    std::vector<RationalVector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(rows_.row(i));
    return out;
}

RationalVector Subspace::reduce(RationalVector v) const {
    for (std::size_t i = 0; i < dim(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Rational f = c;  // pivot entries are 1 in RREF
        RationalVector row = rows_.row(i);
        add_scaled(v, row, -f);
    }
    return v;
}

bool Subspace::contains_subspace(const Subspace& other) const {
    if (algebra_ != other.algebra_) throw MixedAlgebras();
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.rows_.row(i))) return false;
    return true;
}

bool Subspace::is_graded() const {
    const auto& L = *algebra_;
    for (std::size_t i = 0; i < dim(); ++i) {
        RationalVector row = rows_.row(i);
        for (auto g : L.group().elements()) {
            RationalVector component(L.dim());
            bool nonzero = false;
            for (int k = 0; k < L.dim(); ++k)
                if (L.degree(k) == g && !row[k].is_zero()) {
                    component[k] = row[k];
                    nonzero = true;
                }
            if (nonzero && !contains(component)) return false;
        }
    }
    return true;
}

Subspace degree_component(const GradedLieAlgebra& L, GroupElement g) {
    std::vector<RationalVector> vecs;
    for (int i = 0; i < L.dim(); ++i)
        if (L.degree(i) == g) {
            RationalVector v(L.dim());
            v[i] = 1;
            vecs.push_back(std::move(v));
        }
    return Subspace::span(&L, vecs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.algebra() != b.algebra()) throw MixedAlgebras();
    auto vecs = a.basis_vectors();
    for (auto& v : b.basis_vectors()) vecs.push_back(v);
    return Subspace::span(a.algebra(), vecs);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.algebra() != b.algebra()) throw MixedAlgebras();
    // v in both spans: v = alpha A = beta B. Solve [A^T | -B^T] null space.
    const std::size_t da = a.dim(), db = b.dim();
    const std::size_t n = static_cast<std::size_t>(a.algebra()->dim());
    RationalMatrix sys(n, da + db);
    for (std::size_t c = 0; c < da; ++c) {
        RationalVector row = a.rows().row(c);
        for (std::size_t r = 0; r < n; ++r) sys.at(r, c) = row[r];
    }
    for (std::size_t c = 0; c < db; ++c) {
        RationalVector row = b.rows().row(c);
        for (std::size_t r = 0; r < n; ++r) sys.at(r, da + c) = -row[r];
    }
    std::vector<RationalVector> vecs;
    for (const auto& k : sys.kernel()) {
        RationalVector v(n);
        for (std::size_t c = 0; c < da; ++c) add_scaled(v, a.rows().row(c), k[c]);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(a.algebra(), vecs);
}

Subspace subspace_bracket(const Subspace& a, const Subspace& b) {
    if (a.algebra() != b.algebra()) throw MixedAlgebras();
    const auto& L = *a.algebra();
    std::vector<RationalVector> vecs;
    for (const auto& u : a.basis_vectors())
        for (const auto& v : b.basis_vectors()) vecs.push_back(bracket(L, u, v));
    return Subspace::span(&L, vecs);
}

bool is_ideal(const Subspace& s) {
    const auto& L = *s.algebra();
    for (int i = 0; i < L.dim(); ++i) {
        RationalVector ei(L.dim());
        ei[i] = 1;
        for (const auto& v : s.basis_vectors())
            if (!s.contains(bracket(L, ei, v))) return false;
    }
    return true;
}

bool is_graded_ideal(const Subspace& s) { return s.is_graded() && is_ideal(s); }

Subspace ideal_sum(const Subspace& i, const Subspace& j) {
    if (!is_ideal(i) || !is_ideal(j)) throw NotAnIdeal();
    return subspace_sum(i, j);
}

Subspace ideal_intersection(const Subspace& i, const Subspace& j) {
    if (!is_ideal(i) || !is_ideal(j)) throw NotAnIdeal();
    return subspace_intersection(i, j);
}

Subspace ideal_bracket(const Subspace& i, const Subspace& j) {
    if (!is_ideal(i) || !is_ideal(j)) throw NotAnIdeal();
    return subspace_bracket(i, j);
}

Subspace ideal_generated_by(const GradedLieAlgebra& L, const std::vector<RationalVector>& gens) {
    Subspace current = Subspace::span(&L, gens);
    for (;;) {
        Subspace next = subspace_sum(current, subspace_bracket(Subspace::full(&L), current));
        if (next.dim() == current.dim()) return current;
        current = next;
    }
}

Subspace center(const GradedLieAlgebra& L) {
    RationalMatrix stacked(0, L.dim());
    for (int j = 0; j < L.dim(); ++j) stacked = stacked.vstack(ad_matrix(L, j));
    std::vector<RationalVector> vecs = stacked.kernel();
    return Subspace::span(&L, vecs);
}

namespace {
std::vector<Subspace> series(const GradedLieAlgebra& L, bool derived) {
    std::vector<Subspace> chain{Subspace::full(&L)};
    for (;;) {
        const Subspace& last = chain.back();
        Subspace next = derived ? subspace_bracket(last, last)
                                : subspace_bracket(Subspace::full(&L), last);
        if (next.dim() == last.dim()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}
}  // namespace

std::vector<Subspace> derived_series(const GradedLieAlgebra& L) { return series(L, true); }
std::vector<Subspace> lower_central_series(const GradedLieAlgebra& L) { return series(L, false); }

bool is_solvable(const GradedLieAlgebra& L) { return derived_series(L).back().is_zero(); }
bool is_nilpotent(const GradedLieAlgebra& L) { return lower_central_series(L).back().is_zero(); }

QuotientResult quotient(const GradedLieAlgebra& L, const Subspace& ideal) {
    if (ideal.algebra() != &L) throw MixedAlgebras();
    if (!is_graded_ideal(ideal)) throw NotGradedIdeal();

    std::vector<bool> is_pivot(L.dim(), false);
    for (auto p : ideal.pivots()) is_pivot[p] = true;

    std::vector<int> coset_reps;
    std::vector<BasisVector> basis;
    for (int i = 0; i < L.dim(); ++i) {
        if (is_pivot[i]) continue;
        coset_reps.push_back(i);
        basis.push_back({L.name(i), L.degree(i)});
    }
    const int q = static_cast<int>(coset_reps.size());

    // pi(x_i) = residue of e_i mod the ideal, read off at coset coordinates.
    RationalMatrix proj(q, L.dim());
    for (int i = 0; i < L.dim(); ++i) {
        RationalVector ei(L.dim());
        ei[i] = 1;
        RationalVector res = ideal.reduce(std::move(ei));
        for (int u = 0; u < q; ++u) proj.at(u, i) = res[coset_reps[u]];
    }

    auto algebra = std::make_shared<GradedLieAlgebra>(L.group(), L.color(), basis);
    for (int u = 0; u < q; ++u)
        for (int v = u; v < q; ++v) {
            RationalVector br = bracket(L, L.basis_element(coset_reps[u]).coeffs,
                                        L.basis_element(coset_reps[v]).coeffs);
            RationalVector proj_br = proj * br;
            SparseVec terms;
            for (int k = 0; k < q; ++k)
                if (!proj_br[k].is_zero()) terms.emplace_back(k, proj_br[k]);
            algebra->set_bracket(u, v, std::move(terms));
        }

    AlgebraMorphism pi{&L, algebra.get(), std::move(proj)};
    return {std::move(algebra), std::move(pi), std::move(coset_reps)};
}

AlgebraMorphism induce_morphism(const QuotientResult& q, const AlgebraMorphism& f) {
    if (f.source != q.projection.source) throw MixedAlgebras();
    const int qdim = static_cast<int>(q.coset_reps.size());
    RationalMatrix m(f.matrix.rows(), qdim);
    for (int u = 0; u < qdim; ++u) {
        RationalVector col = f.matrix.col(q.coset_reps[u]);
        for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, u) = col[r];
    }
    return {q.algebra.get(), f.target, std::move(m)};
}

MorphismReport check_morphism(const AlgebraMorphism& f) {
    MorphismReport report;
    const auto& S = *f.source;
    const auto& T = *f.target;
    if (f.matrix.rows() != static_cast<std::size_t>(T.dim()) ||
        f.matrix.cols() != static_cast<std::size_t>(S.dim()))
        throw std::invalid_argument("morphism matrix shape mismatch");

    // Degree e: f(x_i) must stay inside the target component of degree(i).
    for (int i = 0; i < S.dim(); ++i)
        for (int r = 0; r < T.dim(); ++r)
            if (!f.matrix.at(r, i).is_zero() && T.degree(r) != S.degree(i)) {
                report.witness = {i, i};
                return report;
            }

    // Bracket compatibility on basis pairs.
    for (int i = 0; i < S.dim(); ++i)
        for (int j = i; j < S.dim(); ++j) {
            RationalVector lhs = f.apply(S.bracket_basis(i, j));
            RationalVector rhs = bracket(T, f.matrix.col(i), f.matrix.col(j));
            for (int k = 0; k < T.dim(); ++k)
                if (lhs[k] != rhs[k]) {
                    report.witness = {i, j};
                    return report;
                }
        }
    report.ok = true;

    report.kernel = Subspace::span(&S, f.matrix.kernel());
    report.kernel_is_graded_ideal = is_graded_ideal(*report.kernel);
    std::vector<RationalVector> image_vecs;
    for (int i = 0; i < S.dim(); ++i) image_vecs.push_back(f.matrix.col(i));
    report.image = Subspace::span(&T, image_vecs);

    // First isomorphism: the induced map on L/ker f is bijective onto the
    // image and still a morphism.
    if (report.kernel_is_graded_ideal) {
        QuotientResult q = quotient(S, *report.kernel);
        AlgebraMorphism induced = induce_morphism(q, f);
        bool compose_ok = induced.matrix * q.projection.matrix == f.matrix;
        bool injective = induced.matrix.rank() == q.algebra->dim();
        std::vector<RationalVector> ind_image;
        for (int u = 0; u < q.algebra->dim(); ++u) ind_image.push_back(induced.matrix.col(u));
        bool image_match = Subspace::span(&T, ind_image) == *report.image;
        bool induced_morphism_ok = check_morphism(induced).ok;
        report.first_iso_ok = compose_ok && injective && image_match && induced_morphism_ok;
    }
    return report;
}

Subspace radical(const GradedLieAlgebra& L) {
    for (int i = 0; i < L.dim(); ++i)
        if (!L.degree(i).is_identity()) throw NotTriviallyGraded();

    BilinearForm kf = killing_form(L);
    Subspace derived = subspace_bracket(Subspace::full(&L), Subspace::full(&L));

    // { v : phi(v, d) = 0 for all d in [L,L] }.
    RationalMatrix constraints(derived.dim(), L.dim());
    for (std::size_t r = 0; r < derived.dim(); ++r) {
        RationalVector gd = kf.gram * derived.rows().row(r);
        constraints.set_row(r, gd);
    }
    return Subspace::span(&L, constraints.kernel());
}

}  // namespace klein_lie
