#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "klein_lie/color_map.hpp"
#include "klein_lie/grade_group.hpp"
#include "klein_lie/rational_matrix.hpp"

namespace klein_lie {

// Finite-dimensional graded vector space, tracked as a degree per basis
// index. Spaces built from component dimensions are block-ordered
// (e, r, s, t for Klein; 0, 1 for Z2); spaces built from an explicit degree
// list (e.g. an algebra basis) keep that order.
class GradedVectorSpace {
public:
    GradedVectorSpace(GradeGroup group, std::vector<GroupElement> degrees)
        : group_(group), degrees_(std::move(degrees)) {}

    // dims[k] = dimension of the component of group.element(k).
    static GradedVectorSpace from_dims(GradeGroup group, const std::vector<int>& dims);

    const GradeGroup& group() const { return group_; }
    int dim() const { return static_cast<int>(degrees_.size()); }
    GroupElement degree(int i) const { return degrees_[i]; }
    const std::vector<GroupElement>& degrees() const { return degrees_; }
    int component_dim(GroupElement g) const;

    friend bool operator==(const GradedVectorSpace& a, const GradedVectorSpace& b) {
        return a.group_ == b.group_ && a.degrees_ == b.degrees_;
    }

private:
    GradeGroup group_;
    std::vector<GroupElement> degrees_;
};

// Linear map between graded spaces with an optional homogeneity degree d;
// when d is claimed, nonzero entries may occur only where
// deg(row) = d * deg(col) (the map sends V_b into W_{db}).
struct GradedLinearMap {
    GradedVectorSpace source;
    GradedVectorSpace target;
    RationalMatrix matrix;  // dim(target) x dim(source)
    std::optional<GroupElement> degree;

    static GradedLinearMap endomorphism(const GradedVectorSpace& space, RationalMatrix m,
                                        std::optional<GroupElement> degree = std::nullopt);

    bool is_homogeneous_of(GroupElement d) const;

    // The unique homogeneity degree of a nonzero map, if one exists; the
    // zero map reports the identity.
    std::optional<GroupElement> homogeneity_degree() const;

    // Split into homogeneous blocks; zero components are omitted.
    std::vector<std::pair<GroupElement, GradedLinearMap>> decompose() const;
};

// Block pattern test on a raw matrix.
bool is_block_homogeneous(const RationalMatrix& m, const GradedVectorSpace& target,
                          const GradedVectorSpace& source, GroupElement d);

}  // namespace klein_lie
