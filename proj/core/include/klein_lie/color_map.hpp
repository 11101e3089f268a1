#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klein_lie/grade_group.hpp"
#include "klein_lie/rational.hpp"

namespace klein_lie {

// Sign-valued bicharacter theta on the grade group. Governs the twisted
// skew-symmetry [A,B] = -theta(a,b)[B,A] of every graded bracket. All values
// are +-1; theta(a,b)theta(b,a) = 1 together with the sign restriction makes
// every valid table symmetric.
class ColorMap {
public:
    ColorMap(GradeGroup group, std::vector<int> table);

    static ColorMap trivial(GradeGroup group);
    static ColorMap super();               // Z2, theta(1,1) = -1
    static ColorMap theta(int k);          // Klein tables theta1..theta4
    static std::optional<ColorMap> named(const std::string& name);  // CLI builtins

    const GradeGroup& group() const { return group_; }
    int sign(GroupElement a, GroupElement b) const {
        return table_[a.bits * group_.size() + b.bits];
    }
    Rational scalar(GroupElement a, GroupElement b) const { return Rational(sign(a, b)); }
    const std::vector<int>& table() const { return table_; }

    bool is_trivial() const;
    friend bool operator==(const ColorMap& a, const ColorMap& b) {
        return a.group_ == b.group_ && a.table_ == b.table_;
    }

    std::string str() const;

private:
    GradeGroup group_;
    std::vector<int> table_;  // row-major over element bits
};

enum class ColorAxiom {
    SymmetryPairing,   // theta(a,b) theta(b,a) = 1
    RightBicharacter,  // theta(a,bc) = theta(a,b) theta(a,c)
    LeftBicharacter,   // theta(ab,c) = theta(a,c) theta(b,c)
};

struct ColorViolation {
    ColorAxiom axiom;
    std::vector<GroupElement> witness;  // the pair or triple that fails
    std::string describe(const GradeGroup& group) const;
};

struct ColorValidation {
    std::optional<ColorMap> color;        // set iff valid
    std::optional<ColorViolation> violation;
    bool ok() const { return color.has_value(); }
};

// Checks the three bicharacter axioms on a candidate +-1 table (row-major
// over element bits); reports the first violated axiom with its witness.
ColorValidation validate_color(const GradeGroup& group, const std::vector<int>& table);

struct ColorEnumeration {
    std::vector<ColorMap> colors;            // every valid sign table
    std::vector<std::vector<int>> orbits;    // indices into `colors`, grouped
                                             // under grade-group automorphisms
    std::vector<int> representatives;        // one index per orbit
};

// All bicharacters of an elementary abelian 2-group of rank <= 3, plus their
// partition into relabeling orbits. For the Klein group: 8 tables, 4 orbits
// represented by theta1..theta4.
ColorEnumeration enumerate_colors(const GradeGroup& group);

// Bilinear form f over F2 with theta = (-1)^f, for Klein colors. Identifying
// e=(0,0), r=(1,0), s=(0,1), t=(1,1), the form is
//   f((a1,b1),(a2,b2)) = alpha a1 a2 + beta (a1 b2 + b1 a2) + delta b1 b2.
struct ColorExponentForm {
    int alpha = 0, beta = 0, delta = 0;  // F2 coefficients
    int eval(GroupElement g, GroupElement h) const;
    std::string str() const;
};

ColorExponentForm color_exponent_form(const ColorMap& color);

}  // namespace klein_lie
