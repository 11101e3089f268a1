#include "klein_lie/color_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "klein_lie/errors.hpp"

namespace klein_lie {

ColorMap::ColorMap(GradeGroup group, std::vector<int> table)
    : group_(group), table_(std::move(table)) {
    const std::size_t n = static_cast<std::size_t>(group_.size());
    if (table_.size() != n * n) throw std::invalid_argument("color table size mismatch");
    for (int v : table_)
        if (v != 1 && v != -1) throw std::invalid_argument("color values must be +-1");
}

ColorMap ColorMap::trivial(GradeGroup group) {
    return ColorMap(group, std::vector<int>(group.size() * group.size(), 1));
}

ColorMap ColorMap::super() {
    // theta(a,b) = (-1)^{ab} on Z2.
    return ColorMap(GradeGroup::z2(), {1, 1, 1, -1});
}

ColorMap ColorMap::theta(int k) {
    GradeGroup klein = GradeGroup::klein();
    // Rows/columns in element order e, r, s, t.
    switch (k) {
        case 1:
            return trivial(klein);
        case 2:
            return ColorMap(klein, {1, 1,  1,  1,
                                    1, 1,  -1, -1,
                                    1, -1, 1,  -1,
                                    1, -1, -1, 1});
        case 3:
            return ColorMap(klein, {1, 1,  1,  1,
                                    1, -1, 1,  -1,
                                    1, 1,  -1, -1,
                                    1, -1, -1, 1});
        case 4:
            return ColorMap(klein, {1, 1,  1,  1,
                                    1, -1, -1, 1,
                                    1, -1, -1, 1,
                                    1, 1,  1,  1});
        default:
            throw std::invalid_argument("theta index must be 1..4");
    }
}

std::optional<ColorMap> ColorMap::named(const std::string& name) {
    if (name == "super") return super();
    if (name == "theta1") return theta(1);
    if (name == "theta2") return theta(2);
    if (name == "theta3") return theta(3);
    if (name == "theta4") return theta(4);
    return std::nullopt;
}

bool ColorMap::is_trivial() const {
    return std::all_of(table_.begin(), table_.end(), [](int v) { return v == 1; });
}

std::string ColorMap::str() const {
    std::ostringstream os;
    for (auto a : group_.elements()) {
        for (auto b : group_.elements()) os << (sign(a, b) > 0 ? " +1" : " -1");
        os << '\n';
    }
    return os.str();
}

std::string ColorViolation::describe(const GradeGroup& group) const {
    std::ostringstream os;
    switch (axiom) {
        case ColorAxiom::SymmetryPairing: os << "theta(a,b)theta(b,a)=1 fails at ("; break;
        case ColorAxiom::RightBicharacter: os << "theta(a,bc)=theta(a,b)theta(a,c) fails at ("; break;
        case ColorAxiom::LeftBicharacter: os << "theta(ab,c)=theta(a,c)theta(b,c) fails at ("; break;
    }
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ",";
        os << group.name(witness[i]);
    }
    os << ")";
    return os.str();
}

ColorValidation validate_color(const GradeGroup& group, const std::vector<int>& table) {
    const std::size_t n = static_cast<std::size_t>(group.size());
    if (table.size() != n * n) throw std::invalid_argument("color table size mismatch");
    for (int v : table)
        if (v != 1 && v != -1) throw std::invalid_argument("color values must be +-1");

    auto th = [&](GroupElement a, GroupElement b) { return table[a.bits * n + b.bits]; };
    auto elems = group.elements();

    for (auto a : elems)
        for (auto b : elems)
            if (th(a, b) * th(b, a) != 1)
                return {std::nullopt, ColorViolation{ColorAxiom::SymmetryPairing, {a, b}}};

    for (auto a : elems)
        for (auto b : elems)
            for (auto c : elems) {
                if (th(a, b * c) != th(a, b) * th(a, c))
                    return {std::nullopt, ColorViolation{ColorAxiom::RightBicharacter, {a, b, c}}};
                if (th(a * b, c) != th(a, c) * th(b, c))
                    return {std::nullopt, ColorViolation{ColorAxiom::LeftBicharacter, {a, b, c}}};
            }

    // theta(e,a) = theta(a,e) = 1 follows from the axioms, but the contract
    // asserts it directly.
    for (auto a : elems)
        if (th(group.identity(), a) != 1 || th(a, group.identity()) != 1)
            return {std::nullopt,
                    ColorViolation{ColorAxiom::RightBicharacter, {group.identity(), a, a}}};

    return {ColorMap(group, table), std::nullopt};
}

ColorEnumeration enumerate_colors(const GradeGroup& group) {
    if (group.rank() > GradeGroup::kMaxRank) throw GroupTooLarge();
    const int k = group.rank();
    const int n = group.size();

    // A bicharacter is fixed by its values on generator pairs (i <= j);
    // bilinearity forces the rest.
    std::vector<std::pair<int, int>> free_pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) free_pairs.emplace_back(i, j);

    ColorEnumeration out;
    for (int choice = 0; choice < (1 << free_pairs.size()); ++choice) {
        std::vector<std::vector<int>> gen(k, std::vector<int>(k, 1));
        for (std::size_t p = 0; p < free_pairs.size(); ++p) {
            int v = (choice >> p) & 1 ? -1 : 1;
            auto [i, j] = free_pairs[p];
            gen[i][j] = gen[j][i] = v;
        }
        std::vector<int> table(n * n, 1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int v = 1;
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        if (((a >> i) & 1) && ((b >> j) & 1)) v *= gen[i][j];
                table[a * n + b] = v;
            }
        auto checked = validate_color(group, table);
        if (!checked.ok()) throw std::logic_error("generated table failed validation");
        out.colors.push_back(*checked.color);
    }

    // Orbits under relabeling: theta'(a,b) = theta(phi(a), phi(b)).
    auto autos = group.automorphisms();
    std::map<std::vector<int>, int> index_of;
    for (std::size_t i = 0; i < out.colors.size(); ++i) index_of[out.colors[i].table()] = static_cast<int>(i);

    std::vector<bool> seen(out.colors.size(), false);
    for (std::size_t i = 0; i < out.colors.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        for (const auto& phi : autos) {
            std::vector<int> relabeled(n * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    relabeled[a * n + b] =
                        out.colors[i].sign(phi(GroupElement{static_cast<std::uint8_t>(a)}),
                                           phi(GroupElement{static_cast<std::uint8_t>(b)}));
            int idx = index_of.at(relabeled);
            if (!seen[idx]) {
                seen[idx] = true;
                orbit.push_back(idx);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.representatives.push_back(orbit.front());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

int ColorExponentForm::eval(GroupElement g, GroupElement h) const {
    int a1 = g.coordinate(0), b1 = g.coordinate(1);
    int a2 = h.coordinate(0), b2 = h.coordinate(1);
    return (alpha * a1 * a2 + beta * (a1 * b2 + b1 * a2) + delta * b1 * b2) & 1;
}

std::string ColorExponentForm::str() const {
    std::vector<std::string> terms;
    if (alpha) terms.push_back("a1*a2");
    if (beta) {
        terms.push_back("a1*b2");
        terms.push_back("a2*b1");
    }
    if (delta) terms.push_back("b1*b2");
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
    return out;
}

ColorExponentForm color_exponent_form(const ColorMap& color) {
    if (!color.group().is_klein())
        throw std::invalid_argument("exponent forms are defined for Klein colors");
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int beta = 0; beta < 2; ++beta)
            for (int delta = 0; delta < 2; ++delta) {
                ColorExponentForm f{alpha, beta, delta};
                bool match = true;
                for (auto g : color.group().elements())
                    for (auto h : color.group().elements())
                        if ((f.eval(g, h) ? -1 : 1) != color.sign(g, h)) match = false;
                if (match) return f;
            }
    // Every Klein bicharacter is (-1)^f for a symmetric bilinear f; the 8x8
    // correspondence is exhaustively covered above.
    throw std::logic_error("no exponent form reproduces the color table");
}

}  // namespace klein_lie
