#pragma once

#include <cstddef>
#include <vector>

#include "wst/complex.hpp"
#include "wst/errors.hpp"
#include "wst/rational.hpp"
#include "wst/weights.hpp"

namespace wsttest {

inline wst::Rational q(long num, long den = 1) { return wst::make_rational(num, den); }

inline wst::VertexWeights ones(std::size_t count) {
    return wst::VertexWeights(count, wst::Rational(1));
}

inline wst::VertexWeights weights_of(std::initializer_list<wst::Rational> values) {
    return wst::VertexWeights(values);
}

inline std::vector<std::string> names(std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

// Full 2-simplex on v0,v1,v2 with all faces.
inline wst::SimplicialComplex solid_triangle() {
    return wst::build_complex(names(3), {{"v0", "v1", "v2"}});
}

// Boundary of the triangle: three vertices, three edges.
inline wst::SimplicialComplex hollow_triangle() {
    return wst::build_complex(names(3), {{"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}});
}

inline wst::SimplicialComplex tetrahedron() {
    return wst::build_complex(names(4), {{"v0", "v1", "v2", "v3"}});
}

// Solid triangle on v0,v1,v2 plus edges from each to v3.
inline wst::SimplicialComplex coned_solid_triangle() {
    return wst::build_complex(
        names(4), {{"v0", "v1", "v2"}, {"v0", "v3"}, {"v1", "v3"}, {"v2", "v3"}});
}

// Hollow triangle on v0,v1,v2 plus edges from each to v3.
inline wst::SimplicialComplex coned_hollow_triangle() {
    return wst::build_complex(names(4), {{"v0", "v1"},
                                         {"v0", "v2"},
                                         {"v1", "v2"},
                                         {"v0", "v3"},
                                         {"v1", "v3"},
                                         {"v2", "v3"}});
}

inline wst::SimplicialComplex path4() {
    return wst::build_complex(names(4), {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"}});
}

inline wst::SimplicialComplex k4_skeleton() {
    return wst::build_complex(names(4), {{"v0", "v1"},
                                         {"v0", "v2"},
                                         {"v0", "v3"},
                                         {"v1", "v2"},
                                         {"v1", "v3"},
                                         {"v2", "v3"}});
}

// Five vertices, edges from v0 to each of v1..v4.
inline wst::SimplicialComplex star5() {
    return wst::build_complex(
        names(5), {{"v0", "v1"}, {"v0", "v2"}, {"v0", "v3"}, {"v0", "v4"}});
}

}  // namespace wsttest
