#include "klein_lie/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "klein_lie/errors.hpp"

namespace klein_lie {

GradedLieAlgebra sl2(GradeGroup group, ColorMap color) {
    GroupElement e = group.identity();
    GradedLieAlgebra L(group, std::move(color), {{"h", e}, {"x", e}, {"y", e}});
    L.set_bracket(0, 1, {{1, Rational(2)}});    // [h,x] = 2x
    L.set_bracket(0, 2, {{2, Rational(-2)}});   // [h,y] = -2y
    L.set_bracket(1, 2, {{0, Rational(1)}});    // [x,y] = h
    return L;
}

GradedLieAlgebra sl2() {
    GradeGroup g = GradeGroup::trivial();
    return sl2(g, ColorMap::trivial(g));
}

Representation sl2_module(const GradedLieAlgebra& sl2_algebra, int n) {
    if (n < 0) throw NegativeWeight();
    if (sl2_algebra.dim() != 3) throw std::invalid_argument("expected an sl(2) basis (h,x,y)");
    const int dim = n + 1;
    GroupElement e = sl2_algebra.group().identity();
    GradedVectorSpace space(sl2_algebra.group(), std::vector<GroupElement>(dim, e));

    RationalMatrix h(dim, dim), x(dim, dim), y(dim, dim);
    for (int i = 0; i <= n; ++i) {
        h.at(i, i) = n - 2 * i;
        if (i >= 1) x.at(i - 1, i) = n - i + 1;
        if (i < n) y.at(i + 1, i) = i + 1;
    }
    return {&sl2_algebra, std::move(space), {std::move(h), std::move(x), std::move(y)}};
}

namespace {

// Unknown layout for the antidiagonal system: a-slots, then b, then c.
struct Sl2Slots {
    int n;
    int slot_a(int i, int j) const {
        return (i >= 0 && i <= n && i + j == n) ? i : -1;
    }
    int slot_b(int i, int j) const {
        return (i >= 0 && i <= n - 1 && i + j == n - 1) ? (n + 1) + i : -1;
    }
    int slot_c(int i, int j) const {
        return (i >= 1 && i <= n && i + j == n + 1 && j >= 0 && j <= n) ? (n + 1) + n + (i - 1)
                                                                        : -1;
    }
    int total() const { return 3 * n + 1; }
};

}  // namespace

Sl2CaseSolution solve_sl2_equations(int n, int theta_rr) {
    if (n < 1) throw IndexOutOfRange();
    if (theta_rr != 1 && theta_rr != -1)
        throw std::invalid_argument("theta(r,r) must be +-1");

    Sl2Slots slots{n};
    std::vector<RationalVector> rows;
    auto fresh = [&] { return RationalVector(slots.total()); };
    auto push = [&](RationalVector&& row) {
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
    };
    auto add = [&](RationalVector& row, int slot, long coeff) {
        if (slot >= 0 && coeff != 0) row[slot] += Rational(coeff);
    };

    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            // a_{i-1,j}(n-i+1) + a_{i,j-1}(n-j+1) - c_{i,j} = 0
            RationalVector r4 = fresh();
            add(r4, slots.slot_a(i - 1, j), n - i + 1);
            add(r4, slots.slot_a(i, j - 1), n - j + 1);
            add(r4, slots.slot_c(i, j), -1);
            push(std::move(r4));
            // b_{i-1,j}(n-i+1) + b_{i,j-1}(n-j+1) + 2a_{i,j} = 0
            RationalVector r5 = fresh();
            add(r5, slots.slot_b(i - 1, j), n - i + 1);
            add(r5, slots.slot_b(i, j - 1), n - j + 1);
            add(r5, slots.slot_a(i, j), 2);
            push(std::move(r5));
            // c_{i-1,j}(n-i+1) + c_{i,j-1}(n-j+1) = 0
            RationalVector r6 = fresh();
            add(r6, slots.slot_c(i - 1, j), n - i + 1);
            add(r6, slots.slot_c(i, j - 1), n - j + 1);
            push(std::move(r6));
            // a_{i+1,j}(i+1) + a_{i,j+1}(j+1) + b_{i,j} = 0
            RationalVector r7 = fresh();
            add(r7, slots.slot_a(i + 1, j), i + 1);
            add(r7, slots.slot_a(i, j + 1), j + 1);
            add(r7, slots.slot_b(i, j), 1);
            push(std::move(r7));
            // b_{i+1,j}(i+1) + b_{i,j+1}(j+1) = 0
            RationalVector r8 = fresh();
            add(r8, slots.slot_b(i + 1, j), i + 1);
            add(r8, slots.slot_b(i, j + 1), j + 1);
            push(std::move(r8));
            // c_{i+1,j}(i+1) + c_{i,j+1}(j+1) - 2a_{i,j} = 0
            RationalVector r9 = fresh();
            add(r9, slots.slot_c(i + 1, j), i + 1);
            add(r9, slots.slot_c(i, j + 1), j + 1);
            add(r9, slots.slot_a(i, j), -2);
            push(std::move(r9));
        }

    // Graded skew-symmetry across the antidiagonal: x_{i,j} = -theta(r,r) x_{j,i}.
    for (int i = 0; i <= n; ++i) {
        RationalVector row = fresh();
        add(row, slots.slot_a(i, n - i), 1);
        add(row, slots.slot_a(n - i, i), theta_rr);
        push(std::move(row));
    }
    for (int i = 0; i <= n - 1; ++i) {
        RationalVector row = fresh();
        add(row, slots.slot_b(i, n - 1 - i), 1);
        add(row, slots.slot_b(n - 1 - i, i), theta_rr);
        push(std::move(row));
    }
    for (int i = 1; i <= n; ++i) {
        RationalVector row = fresh();
        add(row, slots.slot_c(i, n + 1 - i), 1);
        add(row, slots.slot_c(n + 1 - i, i), theta_rr);
        push(std::move(row));
    }

    RationalMatrix sys = RationalMatrix::from_rows(rows, slots.total());
    auto kernel = sys.kernel();

    Sl2CaseSolution out;
    out.n = n;
    out.theta_rr = theta_rr;
    out.solution_dim = kernel.size();
    out.a = RationalMatrix(n + 1, n + 1);
    out.b = RationalMatrix(n + 1, n + 1);
    out.c = RationalMatrix(n + 1, n + 1);
    if (kernel.size() == 1) {
        RationalVector v = kernel[0];
        int a0n = slots.slot_a(0, n);
        if (!v[a0n].is_zero()) v = scaled_vector(v, v[a0n].inverse());
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (int s = slots.slot_a(i, j); s >= 0) out.a.at(i, j) = v[s];
                if (int s = slots.slot_b(i, j); s >= 0) out.b.at(i, j) = v[s];
                if (int s = slots.slot_c(i, j); s >= 0) out.c.at(i, j) = v[s];
            }
    }
    return out;
}

bool Sl2CaseSolution::satisfies_equations() const {
    const int size = n + 1;
    auto A = [&](int i, int j) {
        return (i < 0 || j < 0 || i >= size || j >= size) ? Rational(0) : a.at(i, j);
    };
    auto B = [&](int i, int j) {
        return (i < 0 || j < 0 || i >= size || j >= size) ? Rational(0) : b.at(i, j);
    };
    auto C = [&](int i, int j) {
        return (i < 0 || j < 0 || i >= size || j >= size) ? Rational(0) : c.at(i, j);
    };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (!(A(i, j) * Rational(n - i - j)).is_zero()) return false;
            if (!(B(i, j) * Rational(n - i - j - 1)).is_zero()) return false;
            if (!(C(i, j) * Rational(n - i - j + 1)).is_zero()) return false;
            if (!(A(i - 1, j) * Rational(n - i + 1) + A(i, j - 1) * Rational(n - j + 1) -
                  C(i, j))
                     .is_zero())
                return false;
            if (!(B(i - 1, j) * Rational(n - i + 1) + B(i, j - 1) * Rational(n - j + 1) +
                  A(i, j) * Rational(2))
                     .is_zero())
                return false;
            if (!(C(i - 1, j) * Rational(n - i + 1) + C(i, j - 1) * Rational(n - j + 1))
                     .is_zero())
                return false;
            if (!(A(i + 1, j) * Rational(i + 1) + A(i, j + 1) * Rational(j + 1) + B(i, j))
                     .is_zero())
                return false;
            if (!(B(i + 1, j) * Rational(i + 1) + B(i, j + 1) * Rational(j + 1)).is_zero())
                return false;
            if (!(C(i + 1, j) * Rational(i + 1) + C(i, j + 1) * Rational(j + 1) -
                  A(i, j) * Rational(2))
                     .is_zero())
                return false;
        }
    return true;
}

ClosedFormABC closed_form_abc(int n, int i, const Rational& a0n) {
    if (n < 1 || i < 0 || i > n) throw IndexOutOfRange();
    ClosedFormABC out;
    Rational sign_i = (i % 2 == 0) ? Rational(1) : Rational(-1);
    out.a = sign_i * binomial(n, i) * Rational(n - 2 * i, 1) / Rational(n) * a0n;
    if (i <= n - 1)
        out.b = -sign_i * binomial(n, i) * Rational(2 * (n - i), 1) / Rational(n) * a0n;
    if (i >= 1)
        out.c = sign_i * binomial(n, i - 1) * Rational(2 * (n - i + 1), 1) / Rational(n) * a0n;
    return out;
}

namespace {

struct PartLayout {
    GroupElement part;
    const std::vector<int>* weights;
    int offset = 0;  // first basis index
    int dim = 0;
};

int part_rank(GroupElement g) { return g.bits; }  // r=1, s=2, t=3 ordering

}  // namespace

Sl2KleinAlgebra assemble_sl2_klein(const Sl2KleinSpec& spec) {
    if (!spec.color.group().is_klein())
        throw std::invalid_argument("the reassembly is a Klein construction");
    GradeGroup klein = GradeGroup::klein();

    std::vector<BasisVector> basis = {
        {"h", klein.identity()}, {"x", klein.identity()}, {"y", klein.identity()}};

    std::vector<Sl2ModuleRange> modules;
    PartLayout parts[3] = {{GradeGroup::r, &spec.weights_r},
                           {GradeGroup::s, &spec.weights_s},
                           {GradeGroup::t, &spec.weights_t}};
    const char* part_names[3] = {"r", "s", "t"};
    for (int p = 0; p < 3; ++p) {
        parts[p].offset = static_cast<int>(basis.size());
        int k = 0;
        for (int w : *parts[p].weights) {
            Sl2ModuleRange range{parts[p].part, w, static_cast<int>(basis.size()), w + 1};
            for (int i = 0; i <= w; ++i) {
                std::ostringstream name;
                name << part_names[p] << k << "_" << i;
                basis.push_back({name.str(), parts[p].part});
            }
            modules.push_back(range);
            ++k;
        }
        parts[p].dim = static_cast<int>(basis.size()) - parts[p].offset;
    }

    auto algebra = std::make_shared<GradedLieAlgebra>(klein, spec.color, basis);
    GradedLieAlgebra& L = *algebra;

    L.set_bracket(0, 1, {{1, Rational(2)}});
    L.set_bracket(0, 2, {{2, Rational(-2)}});
    L.set_bracket(1, 2, {{0, Rational(1)}});

    // Module actions of h, x, y.
    for (const auto& m : modules)
        for (int i = 0; i < m.dim; ++i) {
            int v = m.offset + i;
            int w = m.weight;
            if (w - 2 * i != 0) L.set_bracket(0, v, {{v, Rational(w - 2 * i)}});
            if (i >= 1) L.set_bracket(1, v, {{v - 1, Rational(w - i + 1)}});
            if (i < w) L.set_bracket(2, v, {{v + 1, Rational(i + 1)}});
        }

    // Pairings P_xy, given on local part coordinates for x <= y.
    struct Entry {
        const PairingTable* table;
        int px, py;  // indices into parts[]
    };
    Entry entries[6] = {{&spec.p_rr, 0, 0}, {&spec.p_ss, 1, 1}, {&spec.p_tt, 2, 2},
                        {&spec.p_rs, 0, 1}, {&spec.p_rt, 0, 2}, {&spec.p_st, 1, 2}};
    for (const auto& entry : entries) {
        const PartLayout& X = parts[entry.px];
        const PartLayout& Y = parts[entry.py];
        GroupElement target = X.part * Y.part;
        for (const auto& [uv, value] : entry.table->entries) {
            auto [u, v] = uv;
            if (u < 0 || u >= X.dim || v < 0 || v >= Y.dim)
                throw std::invalid_argument("pairing index outside the part");
            if (entry.px == entry.py && u > v)
                throw std::invalid_argument("pairing entries are expected for u <= v");
            SparseVec terms;
            for (const auto& [k, coeff] : value) {
                int global;
                if (target.is_identity()) {
                    if (k < 0 || k > 2) throw std::invalid_argument("sl2 target index");
                    global = k;
                } else {
                    const PartLayout& T = parts[part_rank(target) - 1];
                    if (k < 0 || k >= T.dim)
                        throw std::invalid_argument("pairing target outside the part");
                    global = T.offset + k;
                }
                terms.emplace_back(global, coeff);
            }
            L.set_bracket(X.offset + u, Y.offset + v, std::move(terms));
        }
    }

    return {std::move(algebra), std::move(modules)};
}

Sl2KleinAlgebra build_sl2_klein_algebra(const Sl2KleinSpec& spec) {
    Sl2KleinAlgebra built = assemble_sl2_klein(spec);
    ValidationReport report = validate(*built.algebra);
    if (!report.ok)
        throw ValidationFailure(report.violation->describe(*built.algebra), *report.violation);
    return built;
}

Sl2CaseReport classify_sl2_case(const Sl2KleinAlgebra& built) {
    const GradedLieAlgebra& L = *built.algebra;
    Sl2CaseReport report;

    std::vector<RationalVector> sl2_vecs;
    for (int i = 0; i < 3; ++i) sl2_vecs.push_back(L.basis_element(i).coeffs);
    Subspace le = Subspace::span(&L, sl2_vecs);

    auto module_span = [&](const Sl2ModuleRange& m) {
        std::vector<RationalVector> vecs;
        for (int i = 0; i < m.dim; ++i) vecs.push_back(L.basis_element(m.offset + i).coeffs);
        return Subspace::span(&L, vecs);
    };

    for (const auto& m : built.modules) {
        Sl2ModuleInfo info;
        info.part = m.part;
        info.weight = m.weight;
        info.dim = m.dim;
        Subspace mm = subspace_bracket(module_span(m), module_span(m));
        info.self_bracket_zero = mm.is_zero();
        info.self_bracket_full = (mm == le);
        if (!info.self_bracket_zero) {
            int theta_pp = L.color().sign(m.part, m.part);
            bool odd = (m.dim % 2) == 1;
            info.parity_consistent = (theta_pp == 1) ? odd : !odd;
        }
        report.modules.push_back(info);
    }

    for (std::size_t k = 0; k < built.modules.size(); ++k)
        for (std::size_t l = k + 1; l < built.modules.size(); ++l) {
            if (!(built.modules[k].part == built.modules[l].part)) continue;
            Subspace cross =
                subspace_bracket(module_span(built.modules[k]), module_span(built.modules[l]));
            if (!cross.is_zero()) report.cross_brackets_zero = false;
        }

    for (std::size_t k = 0; k < report.modules.size(); ++k) {
        if (!report.modules[k].self_bracket_full) continue;
        for (std::size_t l = 0; l < report.modules.size(); ++l)
            if (l != k && built.modules[l].part == built.modules[k].part)
                report.full_implies_unique = false;
    }

    // Case labels follow the two-block (L_e + one part) families.
    bool single_part = true;
    std::optional<GroupElement> used;
    for (const auto& m : built.modules) {
        if (!used)
            used = m.part;
        else if (!(*used == m.part))
            single_part = false;
    }
    if (!used) {
        report.case_label = "sl(2) alone";
    } else if (!single_part) {
        report.case_label = "general Klein assembly";
    } else {
        int theta_pp = L.color().sign(*used, *used);
        bool any_full = std::any_of(report.modules.begin(), report.modules.end(),
                                    [](const auto& m) { return m.self_bracket_full; });
        bool all_zero = std::all_of(report.modules.begin(), report.modules.end(),
                                    [](const auto& m) { return m.self_bracket_zero; });
        if (theta_pp == 1)
            report.case_label = "Case 2 (Lie algebra)";
        else if (any_full)
            report.case_label = "Case 1, subcase 1 ([M,M] = L_e)";
        else if (all_zero)
            report.case_label = "Case 1, subcase 2 ([M_k,M_l] = 0)";
        else
            report.case_label = "Case 1 (Lie superalgebra)";
    }

    // Radical of the underlying Lie algebra, when the bracket is one.
    try {
        std::vector<std::pair<GroupElement, GroupElement>> to_trivial;
        GradeGroup trivial = GradeGroup::trivial();
        for (auto g : L.group().elements()) to_trivial.push_back({g, trivial.identity()});
        GradedLieAlgebra plain = regrade(L, to_trivial, trivial, ColorMap::trivial(trivial));
        if (validate(plain).ok) report.radical_dim = radical(plain).dim();
    } catch (const Error&) {
        // not a plain Lie algebra; leave radical_dim empty
    }
    return report;
}

// ---- relative parabose set ----

namespace {

struct ParaboseLayout {
    int p, f;
    int nb() const { return 2 * p; }
    int nf() const { return 2 * f; }
    int bb_count() const { return p * (2 * p + 1); }
    int ff_count() const { return f * (2 * f - 1); }
    int e_dim() const { return bb_count() + ff_count(); }
    int r_dim() const { return 4 * p * f; }

    int bb(int g1, int g2) const {  // g1 <= g2, unordered with repetition
        if (g1 > g2) std::swap(g1, g2);
        return g1 * nb() - g1 * (g1 - 1) / 2 + (g2 - g1);
    }
    int ff(int g1, int g2) const {  // g1 < g2
        return bb_count() + g1 * nf() - g1 * (g1 + 1) / 2 + (g2 - g1 - 1);
    }
    int bf(int bg, int fg) const { return e_dim() + bg * nf() + fg; }
    int b(int g) const { return e_dim() + r_dim() + g; }
    int fgen(int g) const { return e_dim() + r_dim() + nb() + g; }
    int total() const { return e_dim() + r_dim() + nb() + nf(); }

    static int mode(int slot) { return slot / 2 + 1; }
    static int sgn(int slot) { return (slot % 2) ? 1 : -1; }
};

std::string slot_name(const char* letter, int slot) {
    std::ostringstream os;
    os << letter << ParaboseLayout::mode(slot) << (ParaboseLayout::sgn(slot) > 0 ? "p" : "m");
    return os.str();
}

}  // namespace

int ParaboseAlgebra::bb_index(int g1, int g2) const {
    return ParaboseLayout{bosons, fermions}.bb(g1, g2);
}
int ParaboseAlgebra::ff_index(int g1, int g2) const {
    return ParaboseLayout{bosons, fermions}.ff(g1, g2);
}
int ParaboseAlgebra::bf_index(int bg, int fg) const {
    return ParaboseLayout{bosons, fermions}.bf(bg, fg);
}
int ParaboseAlgebra::b_index(int g) const { return ParaboseLayout{bosons, fermions}.b(g); }
int ParaboseAlgebra::f_index(int g) const { return ParaboseLayout{bosons, fermions}.fgen(g); }
int ParaboseAlgebra::e_dim() const { return ParaboseLayout{bosons, fermions}.e_dim(); }
int ParaboseAlgebra::r_dim() const { return ParaboseLayout{bosons, fermions}.r_dim(); }
int ParaboseAlgebra::s_dim() const { return 2 * bosons; }
int ParaboseAlgebra::t_dim() const { return 2 * fermions; }

ParaboseAlgebra assemble_parabose(int bosons, int fermions, const ColorMap& color) {
    if (bosons < 1 || bosons > 2 || fermions < 1 || fermions > 2)
        throw std::invalid_argument("mode counts are limited to 1..2");
    if (!color.group().is_klein())
        throw std::invalid_argument("the parabose set is Klein graded");
    ParaboseLayout lay{bosons, fermions};

    // Basis blocks: {B,B} and [F,F] composites (degree e), {B,F} (degree r),
    // B generators (degree s), F generators (degree t).
    std::vector<BasisVector> basis(lay.total());
    std::vector<std::pair<int, int>> comp_gens(lay.e_dim() + lay.r_dim());
    for (int g1 = 0; g1 < lay.nb(); ++g1)
        for (int g2 = g1; g2 < lay.nb(); ++g2) {
            basis[lay.bb(g1, g2)] = {"BB_" + slot_name("", g1) + "_" + slot_name("", g2),
                                     GradeGroup::e};
            comp_gens[lay.bb(g1, g2)] = {lay.b(g1), lay.b(g2)};
        }
    for (int g1 = 0; g1 < lay.nf(); ++g1)
        for (int g2 = g1 + 1; g2 < lay.nf(); ++g2) {
            basis[lay.ff(g1, g2)] = {"FF_" + slot_name("", g1) + "_" + slot_name("", g2),
                                     GradeGroup::e};
            comp_gens[lay.ff(g1, g2)] = {lay.fgen(g1), lay.fgen(g2)};
        }
    for (int bg = 0; bg < lay.nb(); ++bg)
        for (int fg = 0; fg < lay.nf(); ++fg) {
            basis[lay.bf(bg, fg)] = {"BF_" + slot_name("", bg) + "_" + slot_name("", fg),
                                     GradeGroup::r};
            comp_gens[lay.bf(bg, fg)] = {lay.b(bg), lay.fgen(fg)};
        }
    for (int g = 0; g < lay.nb(); ++g) basis[lay.b(g)] = {slot_name("B", g), GradeGroup::s};
    for (int g = 0; g < lay.nf(); ++g) basis[lay.fgen(g)] = {slot_name("F", g), GradeGroup::t};

    GradedLieAlgebra L(GradeGroup::klein(), color, basis);

    // (1) generator pairs are the defining composites.
    for (int g1 = 0; g1 < lay.nb(); ++g1)
        for (int g2 = g1; g2 < lay.nb(); ++g2)
            L.set_bracket(lay.b(g1), lay.b(g2), {{lay.bb(g1, g2), Rational(1)}});
    for (int g1 = 0; g1 < lay.nf(); ++g1)
        for (int g2 = g1 + 1; g2 < lay.nf(); ++g2)
            L.set_bracket(lay.fgen(g1), lay.fgen(g2), {{lay.ff(g1, g2), Rational(1)}});
    for (int bg = 0; bg < lay.nb(); ++bg)
        for (int fg = 0; fg < lay.nf(); ++fg)
            L.set_bracket(lay.b(bg), lay.fgen(fg), {{lay.bf(bg, fg), Rational(1)}});

    // (2) composite vs generator: the trilinear relations.
    for (int g1 = 0; g1 < lay.nb(); ++g1)
        for (int g2 = g1; g2 < lay.nb(); ++g2)
            for (int k = 0; k < lay.nb(); ++k) {
                int eps = ParaboseLayout::sgn(k);
                SparseVec terms;
                if (ParaboseLayout::mode(g2) == ParaboseLayout::mode(k)) {
                    long c = eps - ParaboseLayout::sgn(g2);
                    if (c) terms.emplace_back(lay.b(g1), Rational(c));
                }
                if (ParaboseLayout::mode(g1) == ParaboseLayout::mode(k)) {
                    long c = eps - ParaboseLayout::sgn(g1);
                    if (c) terms.emplace_back(lay.b(g2), Rational(c));
                }
                L.set_bracket(lay.bb(g1, g2), lay.b(k), std::move(terms));
            }
    for (int g1 = 0; g1 < lay.nf(); ++g1)
        for (int g2 = g1 + 1; g2 < lay.nf(); ++g2)
            for (int k = 0; k < lay.nf(); ++k) {
                int eps = ParaboseLayout::sgn(k);
                SparseVec terms;
                if (ParaboseLayout::mode(g2) == ParaboseLayout::mode(k)) {
                    long d = eps - ParaboseLayout::sgn(g2);
                    if (d) terms.emplace_back(lay.fgen(g1), Rational(d * d / 2));
                }
                if (ParaboseLayout::mode(g1) == ParaboseLayout::mode(k)) {
                    long d = eps - ParaboseLayout::sgn(g1);
                    if (d) terms.emplace_back(lay.fgen(g2), Rational(-d * d / 2));
                }
                L.set_bracket(lay.ff(g1, g2), lay.fgen(k), std::move(terms));
            }
    for (int bg = 0; bg < lay.nb(); ++bg)
        for (int fg = 0; fg < lay.nf(); ++fg) {
            for (int k = 0; k < lay.nb(); ++k) {
                if (ParaboseLayout::mode(bg) != ParaboseLayout::mode(k)) continue;
                long c = ParaboseLayout::sgn(k) - ParaboseLayout::sgn(bg);
                if (!c) continue;
                L.set_bracket(lay.bf(bg, fg), lay.b(k), {{lay.fgen(fg), Rational(c)}});
            }
            for (int k = 0; k < lay.nf(); ++k) {
                if (ParaboseLayout::mode(fg) != ParaboseLayout::mode(k)) continue;
                long d = ParaboseLayout::sgn(k) - ParaboseLayout::sgn(fg);
                if (!d) continue;
                L.set_bracket(lay.bf(bg, fg), lay.fgen(k), {{lay.b(bg), Rational(d * d / 2)}});
            }
        }

    // (3) composite vs composite, by the graded Leibniz rule
    //       [X,[u,v]] = [[X,u],v] + theta(x,u)[u,[X,v]],
    //     cross-checked against the expansion through [v,u].
    const int comps = lay.e_dim() + lay.r_dim();
    auto basis_vec = [&](int i) {
        RationalVector v(L.dim());
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < comps; ++i) {
        GroupElement di = L.degree(i);
        for (int j = i; j < comps; ++j) {
            auto [gu, gv] = comp_gens[j];
            GroupElement du = L.degree(gu), dv = L.degree(gv);

            RationalVector xu = L.bracket_basis(i, gu);
            RationalVector xv = L.bracket_basis(i, gv);
            RationalVector primary = bracket(L, xu, basis_vec(gv));
            add_scaled(primary, bracket(L, basis_vec(gu), xv), L.color().scalar(di, du));

            RationalVector alt = bracket(L, xv, basis_vec(gu));
            add_scaled(alt, bracket(L, basis_vec(gv), xu), L.color().scalar(di, dv));
            alt = scaled_vector(alt, -L.color().scalar(du, dv));

            for (int k = 0; k < L.dim(); ++k)
                if (primary[k] != alt[k])
                    throw ClosureFailure("expansion orders disagree at [" + L.name(i) + "," +
                                         L.name(j) + "]");

            if (i == j && L.color().sign(di, di) == 1) {
                if (!is_zero_vector(primary))
                    throw ClosureFailure("nonzero square at even composite " + L.name(i));
                continue;
            }
            SparseVec terms;
            for (int k = 0; k < L.dim(); ++k)
                if (!primary[k].is_zero()) terms.emplace_back(k, primary[k]);
            L.set_bracket(i, j, std::move(terms));
        }
    }

    ParaboseAlgebra out;
    out.algebra = std::make_shared<GradedLieAlgebra>(std::move(L));
    out.bosons = bosons;
    out.fermions = fermions;
    return out;
}

ParaboseAlgebra build_parabose(int bosons, int fermions) {
    ParaboseAlgebra built = assemble_parabose(bosons, fermions, ColorMap::theta(3));
    ValidationReport report = validate(*built.algebra);
    if (!report.ok)
        throw ValidationFailure(report.violation->describe(*built.algebra), *report.violation);
    return built;
}

ParaboseReport parabose_consistency(const ParaboseAlgebra& built) {
    const GradedLieAlgebra& L = *built.algebra;
    ParaboseReport report;
    const ColorMap& color = L.color();
    report.theta_ss_matches = color.sign(GradeGroup::s, GradeGroup::s) == -1;
    report.theta_tt_matches = color.sign(GradeGroup::t, GradeGroup::t) == 1;
    report.theta_st_matches = color.sign(GradeGroup::s, GradeGroup::t) == -1;
    report.validation = validate(L);

    GradeGroup trivial = GradeGroup::trivial();
    try {
        GradedLieAlgebra et =
            regrade(L, {{GradeGroup::e, trivial.identity()}, {GradeGroup::t, trivial.identity()}},
                    trivial, ColorMap::trivial(trivial));
        report.e_plus_t_is_lie_algebra = validate(et).ok;
    } catch (const std::invalid_argument&) {
        report.e_plus_t_is_lie_algebra = false;
    }

    for (auto g : L.group().elements()) {
        int d = 0;
        for (int i = 0; i < L.dim(); ++i)
            if (L.degree(i) == g) ++d;
        report.graded_dims.push_back(d);
    }
    return report;
}

}  // namespace klein_lie
