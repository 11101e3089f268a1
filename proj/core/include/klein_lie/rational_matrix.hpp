#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "klein_lie/rational.hpp"

namespace klein_lie {

using RationalVector = std::vector<Rational>;

// Dense matrix over exact rationals. Row reduction, kernels and inverses are
// exact; this is the single linear-algebra workhorse behind centers,
// derivation solves, Schur computations and quotients.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> data);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector col(std::size_t c) const;
    void set_row(std::size_t r, const RationalVector& v);

    bool is_zero() const;
    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalVector operator*(const RationalVector& v) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

    Rational trace() const;

    // Stacks `o` below *this (column counts must match).
    RationalMatrix vstack(const RationalMatrix& o) const;

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> reduce();
    RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

    std::size_t rank() const;

    // Basis of { v : A v = 0 }, exact; empty when the kernel is trivial.
    std::vector<RationalVector> kernel() const;

    // Exact inverse; throws Degenerate if singular (square required).
    RationalMatrix inverse() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Residue of v after elimination against echelon rows with the given pivot
// columns; zero iff v lies in the row space.
RationalVector eliminate(const RationalMatrix& rref_rows, const std::vector<std::size_t>& pivots,
                         RationalVector v);

// Free-standing helpers shared by the solvers.
Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero_vector(const RationalVector& v);
RationalVector scaled_vector(const RationalVector& v, const Rational& c);
void add_scaled(RationalVector& target, const RationalVector& v, const Rational& c);

}  // namespace klein_lie
