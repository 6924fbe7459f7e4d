#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "wst/complex.hpp"
#include "wst/random.hpp"

using namespace wsttest;

TEST_CASE("simplices sort their vertices and reject repeats") {
    auto s = wst::Simplex::from_vertices({4, 1, 2});
    CHECK(s.dimension() == 2);
    CHECK(s.ranks() == std::vector<std::size_t>{1, 2, 4});
    CHECK(s.has_vertex(4));
    CHECK_FALSE(s.has_vertex(3));

    CHECK_THROWS_AS(wst::Simplex::from_vertices({1, 1}), wst::DuplicateVertex);
    CHECK_THROWS_AS(wst::Simplex::from_vertices({}), wst::Error);

    auto edge = s.face(1);
    CHECK(edge.ranks() == std::vector<std::size_t>{1, 4});
    CHECK_THROWS_AS(s.face(3), wst::IndexOutOfRange);
    auto vert = wst::Simplex::from_vertices({0});
    CHECK_THROWS_AS(vert.face(0), wst::IndexOutOfRange);
}

TEST_CASE("build_complex closes generators under faces") {
    auto tetra = tetrahedron();
    CHECK(tetra.dimension() == 3);
    CHECK(tetra.simplex_count(0) == 4);
    CHECK(tetra.simplex_count(1) == 6);
    CHECK(tetra.simplex_count(2) == 4);
    CHECK(tetra.simplex_count(3) == 1);
    CHECK(tetra.simplex_count() == 15);

    // vertex ranks follow declaration order
    CHECK(tetra.vertex_rank("v0") == 0);
    CHECK(tetra.vertex_rank("v3") == 3);
    CHECK_THROWS_AS(tetra.vertex_rank("w"), wst::UnknownVertex);

    // simplices of a fixed dimension are stored in lexicographic rank order
    const auto& edges = tetra.simplices(1);
    CHECK(std::is_sorted(edges.begin(), edges.end()));
    CHECK(tetra.index_of(wst::Simplex::from_vertices({0, 1})) == 0);
    CHECK(tetra.label(edges[1]) == "{v0,v2}");
}

TEST_CASE("generators may omit faces and reference later vertices") {
    // the bare vertex v3 is added by closure of its edges
    auto k = coned_solid_triangle();
    CHECK(k.dimension() == 2);
    CHECK(k.simplex_count(0) == 4);
    CHECK(k.simplex_count(1) == 6);
    CHECK(k.simplex_count(2) == 1);
    CHECK(wst::euler_characteristic(k) == -1);

    auto l = coned_hollow_triangle();
    CHECK(l.dimension() == 1);
    CHECK(l.simplex_count(0) == 4);
    CHECK(l.simplex_count(1) == 6);
    CHECK(wst::euler_characteristic(l) == -2);

    CHECK_THROWS_AS(wst::build_complex({"a"}, {{"a", "b"}}), wst::UnknownVertex);
    CHECK_THROWS_AS(wst::build_complex({"a", "a"}, {}), wst::DuplicateVertex);
    CHECK_THROWS_AS(wst::build_complex({""}, {}), wst::Error);
}

TEST_CASE("an empty complex is legal") {
    auto k = wst::build_complex({}, {});
    CHECK(k.dimension() == -1);
    CHECK(k.simplex_count() == 0);
    CHECK(wst::euler_characteristic(k) == 0);
    CHECK(k.maximal_faces().empty());

    // declared vertices enter the complex only through generators
    auto dots = wst::build_complex({"a", "b"}, {});
    CHECK(dots.vertex_count() == 2);
    CHECK(dots.dimension() == -1);
    CHECK(dots.simplex_count(0) == 0);
    CHECK(wst::euler_characteristic(dots) == 0);

    auto points = wst::build_complex({"a", "b"}, {{"a"}, {"b"}});
    CHECK(points.dimension() == 0);
    CHECK(points.simplex_count(0) == 2);
    CHECK(wst::euler_characteristic(points) == 2);
}

TEST_CASE("maximal faces are exactly the uncovered simplices") {
    auto k = coned_solid_triangle();
    auto maximal = k.maximal_faces();
    REQUIRE(maximal.size() == 4);
    CHECK(maximal[0].dimension() == 1);
    CHECK(maximal[3] == wst::Simplex::from_vertices({0, 1, 2}));

    // regenerating from the maximal faces reproduces the complex
    std::vector<std::vector<std::string>> gens;
    for (const auto& s : maximal) {
        std::vector<std::string> g;
        for (auto r : s.ranks()) g.push_back(k.vertex(r).name);
        gens.push_back(g);
    }
    auto rebuilt = wst::build_complex(names(4), gens);
    CHECK(rebuilt.simplex_count() == k.simplex_count());
    for (int n = 0; n <= k.dimension(); ++n) CHECK(rebuilt.simplices(n) == k.simplices(n));
}

TEST_CASE("star collects every simplex through a vertex") {
    auto k = solid_triangle();
    auto st = wst::star(k, "v0");
    // v0, two edges, one triangle
    CHECK(st.size() == 4);
    for (const auto& s : st) CHECK(s.has_vertex(0));

    auto lone = wst::star(star5(), "v4");
    CHECK(lone.size() == 2);
}

TEST_CASE("restriction keeps the vertex universe and drops flagged stars") {
    auto k = coned_solid_triangle();
    wst::VertexWeights g = {q(1), q(1), q(1), q(0)};
    auto kx = wst::restrict_nonvanishing(k, g);

    // same universe, so ranks and weight vectors stay aligned
    CHECK(kx.vertex_count() == 4);
    CHECK(kx.vertex_rank("v3") == 3);
    // v3 and its edges are gone, the solid triangle survives
    CHECK(kx.simplex_count(0) == 3);
    CHECK(kx.simplex_count(1) == 3);
    CHECK(kx.simplex_count(2) == 1);
    CHECK(kx.dimension() == 2);

    // removing nothing is the identity
    auto same = wst::restrict_nonvanishing(k, ones(4));
    CHECK(same.simplex_count() == k.simplex_count());

    // removing everything leaves the bare universe
    auto empty = wst::restrict_nonvanishing(k, wst::VertexWeights(4, q(0)));
    CHECK(empty.dimension() == -1);
    CHECK(empty.vertex_count() == 4);
}

TEST_CASE("restriction agrees with deleting open stars") {
    wst::WeightRng rng(417);
    for (int trial = 0; trial < 25; ++trial) {
        auto k = rng.subcomplex(names(1 + rng.below(5)));
        auto w = rng.weights(k.vertex_count(), true);
        auto kx = wst::restrict_nonvanishing(k, w);

        // dual route: collect the union of open stars of the zero vertices
        std::set<wst::Simplex> removed;
        for (std::size_t v = 0; v < w.size(); ++v) {
            if (w[v] != 0) continue;
            for (const auto& s : wst::star(k, k.vertex(v).name)) removed.insert(s);
        }
        std::size_t kept = 0;
        for (int n = 0; n <= k.dimension(); ++n) {
            for (const auto& s : k.simplices(n)) {
                if (removed.count(s)) continue;
                ++kept;
                CHECK(kx.contains(s));
            }
        }
        CHECK(kept == kx.simplex_count());
    }
}
