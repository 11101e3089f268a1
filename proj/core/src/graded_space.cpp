#include "klein_lie/graded_space.hpp"

#include <stdexcept>

namespace klein_lie {

GradedVectorSpace GradedVectorSpace::from_dims(GradeGroup group, const std::vector<int>& dims) {
    if (dims.size() != static_cast<std::size_t>(group.size()))
        throw std::invalid_argument("one dimension per group element required");
    std::vector<GroupElement> degrees;
    for (int k = 0; k < group.size(); ++k)
        for (int c = 0; c < dims[k]; ++c) degrees.push_back(group.element(k));
    return GradedVectorSpace(group, std::move(degrees));
}

int GradedVectorSpace::component_dim(GroupElement g) const {
    int d = 0;
    for (auto x : degrees_)
        if (x == g) ++d;
    return d;
}

GradedLinearMap GradedLinearMap::endomorphism(const GradedVectorSpace& space, RationalMatrix m,
                                              std::optional<GroupElement> degree) {
    if (m.rows() != static_cast<std::size_t>(space.dim()) || m.rows() != m.cols())
        throw std::invalid_argument("endomorphism shape mismatch");
    return {space, space, std::move(m), degree};
}

bool is_block_homogeneous(const RationalMatrix& m, const GradedVectorSpace& target,
                          const GradedVectorSpace& source, GroupElement d) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() &&
                target.degree(static_cast<int>(r)) != d * source.degree(static_cast<int>(c)))
                return false;
    return true;
}

bool GradedLinearMap::is_homogeneous_of(GroupElement d) const {
    return is_block_homogeneous(matrix, target, source, d);
}

std::optional<GroupElement> GradedLinearMap::homogeneity_degree() const {
    std::optional<GroupElement> found;
    for (std::size_t r = 0; r < matrix.rows(); ++r)
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            if (matrix.at(r, c).is_zero()) continue;
            GroupElement d = target.degree(static_cast<int>(r)) *
                             source.degree(static_cast<int>(c));
            if (!found)
                found = d;
            else if (*found != d)
                return std::nullopt;
        }
    if (!found) return source.group().identity();
    return found;
}

std::vector<std::pair<GroupElement, GradedLinearMap>> GradedLinearMap::decompose() const {
    std::vector<std::pair<GroupElement, GradedLinearMap>> out;
    for (auto d : source.group().elements()) {
        RationalMatrix block(matrix.rows(), matrix.cols());
        bool nonzero = false;
        for (std::size_t r = 0; r < matrix.rows(); ++r)
            for (std::size_t c = 0; c < matrix.cols(); ++c) {
                if (matrix.at(r, c).is_zero()) continue;
                if (target.degree(static_cast<int>(r)) ==
                    d * source.degree(static_cast<int>(c))) {
                    block.at(r, c) = matrix.at(r, c);
                    nonzero = true;
                }
            }
        if (nonzero) out.push_back({d, GradedLinearMap{source, target, std::move(block), d}});
    }
    return out;
}

}  // namespace klein_lie
