#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace klein_lie {

// Element of an elementary abelian 2-group, stored as a bit vector.
// The group operation is componentwise addition mod 2, so every element is
// its own inverse and the identity is the zero vector.
struct GroupElement {
    std::uint8_t bits = 0;

    friend GroupElement operator*(GroupElement a, GroupElement b) {
        return GroupElement{static_cast<std::uint8_t>(a.bits ^ b.bits)};
    }
    friend bool operator==(GroupElement a, GroupElement b) { return a.bits == b.bits; }
    friend bool operator!=(GroupElement a, GroupElement b) { return a.bits != b.bits; }
    friend bool operator<(GroupElement a, GroupElement b) { return a.bits < b.bits; }

    bool is_identity() const { return bits == 0; }
    int coordinate(int i) const { return (bits >> i) & 1; }
};

// An automorphism of the grade group, tabulated as image-per-element.
struct GroupAutomorphism {
    std::vector<GroupElement> image;  // indexed by element bits
    GroupElement operator()(GroupElement g) const { return image[g.bits]; }
};

// Finite elementary abelian 2-group (Z_2)^rank with rank <= 3. The Klein
// group is rank 2 with elements e=(0,0), r=(1,0), s=(0,1), t=(1,1).
class GradeGroup {
public:
    static constexpr int kMaxRank = 3;

    static GradeGroup trivial() { return GradeGroup(0); }
    static GradeGroup z2() { return GradeGroup(1); }
    static GradeGroup klein() { return GradeGroup(2); }
    static GradeGroup elementary(int rank);

    int rank() const { return rank_; }
    int size() const { return 1 << rank_; }
    GroupElement identity() const { return GroupElement{0}; }
    GroupElement element(int index) const { return GroupElement{static_cast<std::uint8_t>(index)}; }
    std::vector<GroupElement> elements() const;

    bool is_z2() const { return rank_ == 1; }
    bool is_klein() const { return rank_ == 2; }

    // Klein element shorthands (valid only for rank 2).
    static constexpr GroupElement e{0}, r{1}, s{2}, t{3};

    // "0"/"1" for Z2; "e","r","s","t" for Klein; bitstrings otherwise.
    std::string name(GroupElement g) const;
    std::optional<GroupElement> parse(std::string_view name) const;

    // All linear automorphisms (GL(rank, F2)); for the Klein group this is
    // the S3 permuting r, s, t.
    std::vector<GroupAutomorphism> automorphisms() const;

    friend bool operator==(const GradeGroup& a, const GradeGroup& b) { return a.rank_ == b.rank_; }

private:
    explicit GradeGroup(int rank) : rank_(rank) {}
    int rank_;
};

}  // namespace klein_lie
