#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "wst/random.hpp"
#include "wst/wsc.hpp"

using namespace wsttest;

TEST_CASE("a small document parses into a weighted complex") {
    const std::string text =
        "wsc v1\n"
        "vertex a f=1/2 g=-3\n"
        "vertex b f=0 g=2\n"
        "simplex a b\n";
    auto [k, w] = wst::parse_wsc(text);
    CHECK(k.vertex_count() == 2);
    CHECK(k.simplex_count(1) == 1);
    CHECK(w.f == weights_of({q(1, 2), q(0)}));
    CHECK(w.g == weights_of({q(-3), q(2)}));
}

TEST_CASE("comments, blank lines, CRLF and decimals are accepted") {
    const std::string text =
        "# leading comment\r\n"
        "\r\n"
        "wsc v1\r\n"
        "vertex a f=0.25 g=-1.5 # trailing comment\r\n"
        "vertex b f=1 g=1\r\n"
        "\r\n"
        "simplex b a # edge\r\n";
    auto doc = wst::parse_wsc_document(text);
    CHECK(doc.version == "v1");
    CHECK(doc.f == weights_of({q(1, 4), q(1)}));
    CHECK(doc.g == weights_of({q(-3, 2), q(1)}));
    REQUIRE(doc.generators.size() == 1);
    CHECK(doc.generators[0] == std::vector<std::string>{"b", "a"});

    // a file without a final newline still parses
    auto tail = wst::parse_wsc_document("wsc v1\nvertex a f=1 g=1");
    CHECK(tail.vertex_names == std::vector<std::string>{"a"});
}

TEST_CASE("simplex lines may precede their vertex declarations") {
    const std::string text =
        "wsc v1\n"
        "simplex a b c\n"
        "vertex a f=1 g=1\n"
        "vertex b f=1 g=1\n"
        "vertex c f=1 g=1\n";
    auto [k, w] = wst::parse_wsc(text);
    CHECK(k.dimension() == 2);
    CHECK(k.simplex_count() == 7);
}

TEST_CASE("diagnostics carry the line and column of the offense") {
    using wst::SyntaxError;

    CHECK_THROWS_AS(wst::parse_wsc_document(""), SyntaxError);
    CHECK_THROWS_AS(wst::parse_wsc_document("vertex a f=1 g=1\n"), SyntaxError);
    CHECK_THROWS_AS(wst::parse_wsc_document("wsc v2\n"), wst::UnsupportedVersion);

    try {
        wst::parse_wsc_document("wsc v1\nvertex a f=x g=1\n");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 12);  // the malformed literal, not the token start
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    // strict rational grammar: no zero denominators, no lone dots
    CHECK_THROWS_AS(wst::parse_wsc_document("wsc v1\nvertex a f=1/0 g=1\n"),
                    SyntaxError);
    CHECK_THROWS_AS(wst::parse_wsc_document("wsc v1\nvertex a f=1. g=1\n"),
                    SyntaxError);
    CHECK_THROWS_AS(wst::parse_wsc_document("wsc v1\nvertex a g=1 f=1\n"),
                    SyntaxError);
    CHECK_THROWS_AS(wst::parse_wsc_document("wsc v1\nvertex a f=1\n"), SyntaxError);
    CHECK_THROWS_AS(wst::parse_wsc_document("wsc v1\nvertex 9a f=1 g=1\n"),
                    SyntaxError);

    CHECK_THROWS_AS(
        wst::parse_wsc_document("wsc v1\nvertex a f=1 g=1\nvertex a f=2 g=2\n"),
        wst::DuplicateVertex);
    CHECK_THROWS_AS(wst::parse_wsc_document("wsc v1\nsimplex a a\nvertex a f=1 g=1\n"),
                    wst::DuplicateVertex);
    CHECK_THROWS_AS(wst::parse_wsc_document("wsc v1\nvertex a f=1 g=1\nsimplex a b\n"),
                    wst::UnknownVertex);
}

TEST_CASE("serialization is canonical and round-trips") {
    auto k = coned_solid_triangle();
    wst::WeightPair w{{q(1), q(2), q(-1, 3), q(0)}, {q(1, 2), q(1), q(1), q(4)}};
    auto text = wst::serialize_wsc(k, w);
    const std::string expected =
        "wsc v1\n"
        "vertex v0 f=1 g=1/2\n"
        "vertex v1 f=2 g=1\n"
        "vertex v2 f=-1/3 g=1\n"
        "vertex v3 f=0 g=4\n"
        "simplex v0 v3\n"
        "simplex v1 v3\n"
        "simplex v2 v3\n"
        "simplex v0 v1 v2\n";
    CHECK(text == expected);

    auto [k2, w2] = wst::parse_wsc(text);
    CHECK(k2.simplex_count() == k.simplex_count());
    for (int n = 0; n <= k.dimension(); ++n) CHECK(k2.simplices(n) == k.simplices(n));
    CHECK(w2.f == w.f);
    CHECK(w2.g == w.g);
    // a second pass is byte-identical
    CHECK(wst::serialize_wsc(k2, w2) == text);
}

TEST_CASE("lone vertices survive the round trip") {
    auto k = wst::build_complex({"only"}, {{"only"}});
    wst::WeightPair w{{q(7)}, {q(-7)}};
    auto text = wst::serialize_wsc(k, w);
    CHECK(text.find("simplex only") != std::string::npos);
    auto [k2, w2] = wst::parse_wsc(text);
    CHECK(k2.vertex_count() == 1);
    CHECK(k2.simplex_count(0) == 1);
    CHECK(w2.f == w.f);

    // a declared vertex outside the complex stays in the universe
    auto bare = wst::parse_wsc("wsc v1\nvertex a f=1 g=1\n");
    CHECK(bare.first.vertex_count() == 1);
    CHECK(bare.first.simplex_count() == 0);
    CHECK(wst::serialize_wsc(bare.first, bare.second) == "wsc v1\nvertex a f=1 g=1\n");

    auto empty = wst::build_complex({}, {});
    CHECK(wst::serialize_wsc(empty, wst::WeightPair{{}, {}}) == "wsc v1\n");
}

TEST_CASE("random complexes round-trip through the text form") {
    wst::WeightRng rng(16619);
    for (int trial = 0; trial < 20; ++trial) {
        auto k = rng.subcomplex(names(1 + rng.below(6)));
        wst::WeightPair w{rng.weights(k.vertex_count(), true),
                          rng.weights(k.vertex_count(), true)};
        auto text = wst::serialize_wsc(k, w);
        auto [k2, w2] = wst::parse_wsc(text);
        CHECK(k2.simplex_count() == k.simplex_count());
        for (int n = 0; n <= k.dimension(); ++n)
            CHECK(k2.simplices(n) == k.simplices(n));
        CHECK(w2.f == w.f);
        CHECK(w2.g == w.g);
        CHECK(wst::serialize_wsc(k2, w2) == text);
    }
}
