#include "sqav/delaunay.hpp"

#include <algorithm>

namespace sqav {

std::vector<IntVec> minimal_cell_containing(const StarComplex& star, const RatVec& z) {
    // A cell containing z has a vertex t within its diameter, at most twice the covering radius.
    const Rational bound = 4 * star.covering_radius_sq();
    for (const auto& t : enumerate_ellipsoid(star.form(), z, bound)) {
        const RatVec local = sub(z, to_rat(t));
        for (std::size_t k = 0; k < star.max_cells().size(); ++k) {
            const auto& poly = star.max_polytope(k);
            if (!poly.contains(local)) continue;
            auto face = poly.minimal_face_containing(local);
            for (auto& v : face) v = add(v, t);
            std::sort(face.begin(), face.end());
            return face;
        }
    }
    throw InvariantViolation("no Delaunay cell contains " + to_string(z));
}

std::vector<std::vector<IntVec>> cells_containing(const StarComplex& star, const RatVec& z) {
    const auto sigma0 = minimal_cell_containing(star, z);
    const IntVec w = sigma0.front();
    std::vector<IntVec> key;
    for (const auto& v : sigma0) key.push_back(sub(v, w));
    auto idx = star.find(key);
    if (!idx) throw InvariantViolation("minimal cell of " + to_string(z) + " is not a Delaunay cell");
    std::vector<std::size_t> ids{*idx};
    for (auto j : star.cofaces_of(*idx)) ids.push_back(j);
    std::vector<std::vector<IntVec>> out;
    for (auto i : ids) {
        std::vector<IntVec> verts;
        for (const auto& v : star.cells()[i].vertices) verts.push_back(add(v, w));
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sqav
