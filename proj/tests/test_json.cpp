#include <catch2/catch_amalgamated.hpp>

#include "dvblab/dualization.hpp"
#include "dvblab/json_io.hpp"

using namespace dvblab;

TEST_CASE("matrix serialization round trips") {
    Rng rng(3);
    const Space d(3, "X"), c(2, "Y");
    LinMap f = rng.map(d, c);
    f.at(0, 0) = Rat(-7, 3); // a non-integer entry travels as "p/q"
    const nlohmann::json j = matrix_to_json(f);
    CHECK(j[0][0] == "-7/3");
    const LinMap g = matrix_from_json(j, d, c);
    CHECK(f == g);
    CHECK_THROWS_AS(matrix_from_json(j, Space(4, "X"), c), ParseError);
}

TEST_CASE("sequence serialization round trips") {
    const DVBSeq s = random_seq(2, 1, 2, 77);
    const nlohmann::json j = to_json(s);
    const DVBSeq back = seq_from_json(j);
    CHECK(back.e() == s.e());
    CHECK(back.p() == s.p());
    CHECK(back.A.dim == 2);

    nlohmann::json bad = j;
    bad.erase("p");
    CHECK_THROWS_AS(seq_from_json(bad), ParseError);
    bad = j;
    bad["A"] = -1;
    CHECK_THROWS_AS(seq_from_json(bad), ParseError);
}

TEST_CASE("trivial doubles with named elements") {
    const nlohmann::json j = {
        {"kind", "dvb"},
        {"A", 1},
        {"B", 2},
        {"C", 1},
        {"elements",
         {{"d0", {{"a", {"1"}}, {"b", {"1/2", "-3"}}, {"c", {"5"}}}},
          {"zero", {{"a", {"0"}}, {"b", {"0", "0"}}, {"c", {"0"}}}}}},
    };
    const TrivialDVB d = dvb_from_json(j);
    const auto elems = named_elements_from_json(j, d);
    REQUIRE(elems.size() == 2);
    CHECK(elems.at("d0").b == Vec{Rat(1, 2), Rat(-3)});
    CHECK(is_zero(elems.at("zero").c));

    nlohmann::json bad = j;
    bad["elements"]["d0"]["b"] = {"1/2"};
    CHECK_THROWS_AS(named_elements_from_json(bad, d), ParseError);
}

TEST_CASE("valued pairings serialize with their value space") {
    const Triality tr = triality_pairing(random_star_seq(1, 2, 1, 5));
    const ValuedPairing vp = tr.v_pairing();
    const nlohmann::json j = to_json(vp);
    CHECK(j.contains("value"));
    CHECK(j["form"].size() == static_cast<std::size_t>(vp.left.dim));

    // the stored 3-tensor agrees with the defining function on random
    // (non-basis) inputs, which certifies bilinearity of the construction
    Rng rng(9);
    for (int t = 0; t < 15; ++t) {
        const Vec l = rng.vec(vp.left.dim), r = rng.vec(vp.right.dim);
        CHECK(vp.pair(l, r) == tr.pair(l, r));
    }
}
