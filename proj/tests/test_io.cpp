#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "chrom/io.hpp"
#include "chrom/oracles.hpp"
#include "fixtures.hpp"

using namespace chrom;

#ifndef CHROM_DATA_DIR
#define CHROM_DATA_DIR "."
#endif

TEST_CASE("text tensor format") {
    std::istringstream in(R"(# comment
        n 2
        a 2
        1 0
        0 1   # identity
        0 2
        3 0
    )");
    Tensor T = parse_tensor(in);
    CHECK(T.n == 2);
    CHECK(T.a == 2);
    CHECK(T.slices[1][0][1] == 2);
    CHECK(T.slices[1][1][0] == 3);
}

TEST_CASE("json tensor format") {
    std::istringstream in(R"({"n": 2, "a": 1, "slices": [[[1, 0], [0, -1]]]})");
    Tensor T = parse_tensor(in);
    CHECK(T.n == 2);
    CHECK(T.a == 1);
    CHECK(T.slices[0][1][1] == -1);
}

TEST_CASE("tensor parse errors") {
    auto expect_fail = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_tensor(in), ParseError);
    };
    expect_fail("a 2 n 2 1 0 0 1 1 0 0 1");           // fields out of order
    expect_fail("n 2 a 1 1 0 0");                      // truncated slice
    expect_fail("n 2 a 1 1 0 0 1 7");                  // trailing tokens
    expect_fail("n 2 a 1 1 0 x 1");                    // non-integer
    expect_fail(R"({"n": 2, "a": 2, "slices": [[[1,0],[0,1]]]})"); // count mismatch
    expect_fail(R"({"n": 2, "slices": []})");
    CHECK_THROWS_AS(parse_tensor_file("/nonexistent/x.tensor"), ParseError);
}

TEST_CASE("shipped data files parse to the expected spaces") {
    SplitMix64 rng(404);
    PrimeField F = random_prime(31, rng);
    const std::string dir = CHROM_DATA_DIR;

    Tensor mle = parse_tensor_file(dir + "/concentration5_3x3.tensor");
    CHECK(contract(mle, F).d() == 4);

    Tensor quad = parse_tensor_file(dir + "/quadrics8_4x4.tensor");
    CHECK(contract(quad, F).d() == 7);

    Tensor blocks = parse_tensor_file(dir + "/symblock4_3x3.tensor");
    CHECK(contract(blocks, F).d() == 3);

    // the shipped diagonal space is exactly the 6-cycle's tensor
    Tensor diag = parse_tensor_file(dir + "/traceless_diag6.tensor");
    Tensor from_graph = graph_to_tensor(fixtures::cycle_graph(6));
    CHECK(diag.slices == from_graph.slices);

    Graph c6 = parse_graph_file(dir + "/c6.graph");
    CHECK(c6.vertex_count == 6);
    CHECK(c6.edges.size() == 6);
    CHECK(c6.connected());

    Graph k3 = parse_graph_file(dir + "/k3.graph");
    CHECK(graph_chromatic_oracle(k3) == std::vector<std::int64_t>{1, 2});

    Graph loop = parse_graph_file(dir + "/loop.graph");
    CHECK(loop.has_loop());
}

TEST_CASE("graph parse errors") {
    auto expect_fail = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_graph(in), ParseError);
    };
    expect_fail("3");            // missing edge count
    expect_fail("3 2 0 1");      // too few pairs
    expect_fail("3 1 0 1 2 2");  // too many pairs
    expect_fail("2 1 0 5");      // endpoint out of range
}
