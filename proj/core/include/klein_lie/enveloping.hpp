#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein_lie/forms.hpp"
#include "klein_lie/lie_algebra.hpp"

namespace klein_lie {

// Word in U(L): a sequence of basis indices; the empty word is the unit.
using Word = std::vector<int>;

// Graded length-then-lexicographic order; keeps elements canonically sorted.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Element of U(L): finite linear combination of words. Plain data plus an
// owner tag; the algebra must outlive its elements.
struct EnvelopingElement {
    const GradedLieAlgebra* algebra = nullptr;
    std::map<Word, Rational, WordOrder> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& w, const Rational& c);
    EnvelopingElement operator+(const EnvelopingElement& o) const;
    EnvelopingElement operator-(const EnvelopingElement& o) const;
    EnvelopingElement scaled(const Rational& c) const;
    friend bool operator==(const EnvelopingElement& a, const EnvelopingElement& b) {
        return a.algebra == b.algebra && a.terms == b.terms;
    }

    std::string str() const;  // words as basis names with ^k sugar
};

// The enveloping algebra U(L) as words modulo the rewriting rules
//   x_i x_j -> theta(d_i,d_j) x_j x_i + [x_i,x_j]           (i > j)
//   x_i x_i -> 1/2 [x_i,x_i]              (theta(d_i,d_i) = -1)
// applied at the leftmost violating adjacent pair. Each step lowers
// (length, disorder) lexicographically, so rewriting terminates; the
// irreducible words are the PBW monomials.
class EnvelopingAlgebra {
public:
    explicit EnvelopingAlgebra(const GradedLieAlgebra& L) : L_(&L) {}

    const GradedLieAlgebra& algebra() const { return *L_; }

    EnvelopingElement zero() const { return {L_, {}}; }
    EnvelopingElement one() const;
    EnvelopingElement letter(int i) const;
    EnvelopingElement from_word(const Word& w) const;                  // not normalized
    EnvelopingElement scalar(const Rational& c) const;
    EnvelopingElement embed(const RationalVector& lie_element) const;  // sigma

    GroupElement word_degree(const Word& w) const;
    // Homogeneous degree of an element (identity for zero; nullopt if mixed).
    std::optional<GroupElement> degree_of(const EnvelopingElement& x) const;

    // Number of inverted adjacent-comparable pairs; the termination measure.
    std::size_t disorder(const Word& w) const;

    bool is_normal_word(const Word& w) const { return leftmost_violation(w) < 0; }
    int leftmost_violation(const Word& w) const;  // position, or -1 when normal

    EnvelopingElement normal_form(const EnvelopingElement& x) const;
    EnvelopingElement multiply(const EnvelopingElement& a, const EnvelopingElement& b) const;

    // xy - theta(deg x, deg y) yx in normal form; requires homogeneous
    // arguments (NotHomogeneous otherwise).
    EnvelopingElement super_commutator(const EnvelopingElement& a,
                                       const EnvelopingElement& b) const;

    // All normal words of length exactly `len` / up to `maxlen`, in order.
    std::vector<Word> normal_words_of_length(int len) const;
    std::vector<Word> normal_words_up_to(int maxlen) const;

    struct GradedDimension {
        long normal_words = 0;     // irreducible words of the rewriting system
        long symmetric_count = 0;  // multiset count, strict on theta(d,d)=-1 letters
        bool equal = false;
    };
    // PBW dimension check in filtration degree d; throws BoundExceeded when
    // d exceeds `bound`.
    GradedDimension graded_dimension(int d, int bound = kDefaultDegreeBound) const;

    // Generalized Casimir element from a nondegenerate invariant degree-e
    // form b and an n-linear weight h (defaults: n = 2, h = b). The phase
    // prescribed for a degree-beta form collapses to 1 when beta = e, which
    // is the only case a degree-e Gram matrix can carry; the general path is
    // kept in the code. Throws Degenerate.
    EnvelopingElement casimir(const BilinearForm& b) const;
    EnvelopingElement casimir(const BilinearForm& b, const NLinearForm& h) const;

    static constexpr int kDefaultDegreeBound = 6;

private:
    void check_owner(const EnvelopingElement& x) const;
    const GradedLieAlgebra* L_;
};

}  // namespace klein_lie
