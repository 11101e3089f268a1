#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "klein_lie/enveloping.hpp"
#include "klein_lie/lie_algebra.hpp"
#include "klein_lie/representation.hpp"

namespace klein_lie {

// Parse failure with position information; thrown by parse().
class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, const std::string& expected)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                expected),
          line(line), col(col), expected(expected) {}
    int line, col;
    std::string expected;
};

class UnknownName : public Error {
public:
    UnknownName(int line, const std::string& name)
        : Error("line " + std::to_string(line) + ": unknown name '" + name + "'") {}
};

class DuplicateBracket : public Error {
public:
    DuplicateBracket(int line, const std::string& pair)
        : Error("line " + std::to_string(line) + ": duplicate bracket " + pair) {}
};

// Parsed module stanza: a graded space by dimensions plus action matrices.
struct ModuleStanza {
    std::string name;
    std::vector<int> dims;  // one per group element, block order
    // (algebra basis index, row, col) -> value
    std::vector<std::tuple<int, int, int, Rational>> actions;
};

// Line-oriented algebra description:
//   group (Z2 | klein)
//   color (trivial | super | theta1..theta4 | table s11 s12 ...)
//   basis name:degree ...
//   bracket a b = c1 n1 + c2 n2 ...
//   module NAME dims d_e d_r ... / action basis row col value / endmodule
// Comments (#) and blank lines are ignored. Unlisted brackets are zero; the
// (j,i) mirror of a listed (i,j) may not be independently listed.
struct AlgebraFile {
    GradeGroup group = GradeGroup::z2();
    ColorMap color = ColorMap::trivial(GradeGroup::z2());
    std::vector<BasisVector> basis;
    // brackets as listed, with (i, j) basis indices
    std::vector<std::tuple<int, int, SparseVec>> brackets;
    std::vector<ModuleStanza> modules;

    friend bool operator==(const AlgebraFile& a, const AlgebraFile& b);
};

AlgebraFile parse_algebra_file(const std::string& text);
std::string print_algebra_file(const AlgebraFile& file);

// Instantiates the parsed data. The returned algebra stores exactly the
// listed brackets (mirrors derived), ready for validate().
std::shared_ptr<GradedLieAlgebra> to_algebra(const AlgebraFile& file);
Representation to_representation(const ModuleStanza& stanza, const GradedLieAlgebra& L);

// Serialization of an existing algebra into the file format (stored
// brackets only; named colors are recognized, others printed as a table).
AlgebraFile from_algebra(const GradedLieAlgebra& L);

// Word expressions over U(L): whitespace-separated basis names with ^k
// exponent sugar, rational coefficients, +/- separators. Example:
//   "1/8 h^2 + 1/2 x y - 1/4 h"
EnvelopingElement parse_word_expression(const EnvelopingAlgebra& U, const std::string& text);

}  // namespace klein_lie
