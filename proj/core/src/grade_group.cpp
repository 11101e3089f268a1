#include "klein_lie/grade_group.hpp"

#include <stdexcept>

#include "klein_lie/errors.hpp"

namespace klein_lie {

namespace {
constexpr const char* kKleinNames[4] = {"e", "r", "s", "t"};
}

GradeGroup GradeGroup::elementary(int rank) {
    if (rank < 0 || rank > kMaxRank) throw GroupTooLarge();
    return GradeGroup(rank);
}

std::vector<GroupElement> GradeGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(size());
    for (int i = 0; i < size(); ++i) out.push_back(element(i));
    return out;
}

std::string GradeGroup::name(GroupElement g) const {
    if (rank_ == 1) return g.bits ? "1" : "0";
    if (rank_ == 2) return kKleinNames[g.bits & 3];
    std::string out;
    for (int i = 0; i < rank_; ++i) out += static_cast<char>('0' + g.coordinate(i));
    return out.empty() ? "e" : out;
}

std::optional<GroupElement> GradeGroup::parse(std::string_view text) const {
    for (int i = 0; i < size(); ++i)
        if (name(element(i)) == text) return element(i);
    return std::nullopt;
}

std::vector<GroupAutomorphism> GradeGroup::automorphisms() const {
    // Enumerate rank x rank matrices over F2; keep the invertible ones.
    std::vector<GroupAutomorphism> out;
    const int k = rank_;
    const int n = size();
    const int total = 1 << (k * k);
    for (int m = 0; m < total; ++m) {
        // Column j of the matrix = image of generator j, as a bit mask.
        std::vector<std::uint8_t> gen_image(k);
        for (int j = 0; j < k; ++j)
            gen_image[j] = static_cast<std::uint8_t>((m >> (j * k)) & ((1 << k) - 1));

        GroupAutomorphism phi;
        phi.image.resize(n);
        std::vector<bool> hit(n, false);
        bool bijective = true;
        for (int g = 0; g < n; ++g) {
            std::uint8_t img = 0;
            for (int j = 0; j < k; ++j)
                if ((g >> j) & 1) img ^= gen_image[j];
            phi.image[g] = GroupElement{img};
            if (hit[img]) bijective = false;
            hit[img] = true;
        }
        if (bijective) out.push_back(std::move(phi));
    }
    return out;
}

}  // namespace klein_lie
