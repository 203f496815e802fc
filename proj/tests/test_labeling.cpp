#include <doctest.h>
#include <json.hpp>

#include <cmath>

#include "geometry_oracle.hpp"
#include "orbital/labeling.hpp"
#include "orbital/solver_uniform.hpp"
#include "testutil.hpp"

using namespace orbital;
using testutil::make_instance;

TEST_SUITE("labeling") {

TEST_CASE("place_from_order with uniform widths reproduces the uniform ports") {
    Rng rng(11001);
    const Instance inst = testutil::random_instance(rng, 6, /*uniform_widths=*/true);
    std::vector<int> identity{0, 1, 2, 3, 4, 5};
    const Labeling lab = place_from_order(inst, identity, LeaderStyle::OR);
    const std::vector<Port> ports = uniform_ports(6);
    for (int i = 0; i < 6; ++i)
        CHECK(lab.ports[i].beta == doctest::Approx(ports[i].beta).epsilon(1e-12));
}

TEST_CASE("place_from_order applies the prefix-sum rule") {
    const Instance inst = make_instance(
        200.0, {{50.0, 0.2, 1.0}, {100.0, 4.0, 3.0}});  // widths 1:3 -> quarter and three-quarter
    const Labeling lab = place_from_order(inst, {0, 1}, LeaderStyle::SL);
    CHECK(lab.ports[0].beta == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    CHECK(lab.ports[1].beta == doctest::Approx(5.0 * kPi / 4.0).epsilon(1e-12));
    CHECK(lab.label_arcs[0].start == doctest::Approx(0.0));
    CHECK(lab.label_arcs[0].end == doctest::Approx(100.0 * kPi).epsilon(1e-12));
    CHECK(lab.label_arcs[1].end == doctest::Approx(400.0 * kPi).epsilon(1e-12));
}

TEST_CASE("the anchored frame makes order reversal change the ports") {
    const Instance inst = make_instance(200.0, {{50.0, 0.2, 1.0}, {100.0, 4.0, 3.0}});
    const Labeling fwd = place_from_order(inst, {0, 1}, LeaderStyle::SL);
    const Labeling rev = place_from_order(inst, {1, 0}, LeaderStyle::SL);
    CHECK(std::abs(fwd.ports[0].beta - rev.ports[0].beta) > 0.1);
    CHECK(std::abs(fwd.ports[1].beta - rev.ports[1].beta) > 0.1);
}

TEST_CASE("place_from_order rejects non-permutations") {
    const Instance inst = make_instance(200.0, {{50.0, 0.2, 1.0}, {100.0, 4.0, 3.0}});
    CHECK_THROWS_AS(place_from_order(inst, {0, 0}, LeaderStyle::SL), std::invalid_argument);
    CHECK_THROWS_AS(place_from_order(inst, {0}, LeaderStyle::SL), std::invalid_argument);
    CHECK_THROWS_AS(place_from_order(inst, {1, 2}, LeaderStyle::SL), std::invalid_argument);
}

TEST_CASE("check_labeling flags structural damage") {
    const Instance inst = make_instance(200.0, {{50.0, 0.2, 1.0}, {100.0, 4.0, 3.0}});
    Labeling lab = place_from_order(inst, {0, 1}, LeaderStyle::SL);
    CHECK(check_labeling(inst, lab).empty());

    Labeling off_port = lab;
    off_port.ports[0].beta += 0.01;
    CHECK_FALSE(check_labeling(inst, off_port).empty());

    Labeling gap = lab;
    gap.label_arcs[1].start += 1.0;
    CHECK_FALSE(check_labeling(inst, gap).empty());

    Labeling short_arcs = lab;
    short_arcs.label_arcs[1].end -= 5.0;
    CHECK_FALSE(check_labeling(inst, short_arcs).empty());
}

TEST_CASE("count_crossings: solver outputs are clean, a swapped pair is not") {
    SUBCASE("uniform solver output has zero crossings") {
        Rng rng(11002);
        const Instance inst = testutil::random_instance(rng, 9, /*uniform_widths=*/true);
        const auto [lab, report] = solve_uniform(inst, LeaderStyle::SL);
        CHECK(count_crossings(inst, lab).count == 0);
    }
    SUBCASE("single feature never crosses") {
        const Instance inst = make_instance(200.0, {{80.0, 2.0, 1.0}});
        const Labeling lab = place_from_order(inst, {0}, LeaderStyle::OR);
        CHECK(count_crossings(inst, lab).count == 0);
    }
    SUBCASE("two features on the same side with crossed assignment (SL)") {
        // Both features sit in the right half-plane. Sending the lower one to
        // the top port and the upper one to the bottom port makes the two
        // straight leaders intersect; the exchanged order is clean.
        const Instance inst = make_instance(200.0, {{100.0, 0.3, 1.0}, {150.0, 1.2, 1.0}});
        const Labeling crossed = place_from_order(inst, {0, 1}, LeaderStyle::SL);
        const CrossingReport rep = count_crossings(inst, crossed);
        CHECK(rep.count == 1);
        REQUIRE(rep.pairs.size() == 1);
        CHECK(rep.pairs[0] == std::pair<int, int>{0, 1});
        // Independent confirmation by the dense-sampling oracle.
        CHECK(oracle::crossing_verdict(LeaderStyle::SL, inst.features[0].position,
                                       crossed.ports[0], inst.features[1].position,
                                       crossed.ports[1], inst.radius) == 1);
        // The exchanged order is clean.
        const Labeling clean = place_from_order(inst, {1, 0}, LeaderStyle::SL);
        CHECK(count_crossings(inst, clean).count == 0);
    }
}

TEST_CASE("count_crossings validates its input") {
    const Instance inst = make_instance(200.0, {{50.0, 0.2, 1.0}, {100.0, 4.0, 3.0}});
    Labeling lab = place_from_order(inst, {0, 1}, LeaderStyle::SL);
    lab.ports.pop_back();
    CHECK_THROWS_AS(count_crossings(inst, lab), std::invalid_argument);
}

TEST_CASE("total_leader_length sums the per-leader lengths") {
    const Instance inst = make_instance(200.0, {{50.0, 0.2, 1.0}, {100.0, 4.0, 3.0}});
    for (const LeaderStyle style : {LeaderStyle::SL, LeaderStyle::OR}) {
        const Labeling lab = place_from_order(inst, {0, 1}, style);
        double expect = 0.0;
        for (int i = 0; i < 2; ++i)
            expect += leader_length(style, inst.features[i].position, lab.ports[i], 200.0);
        CHECK(total_leader_length(inst, lab) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("labeling JSON round trip") {
    const Instance inst = make_instance(200.0, {{50.0, 0.2, 2.0}, {100.0, 4.0, 3.0}});
    const Labeling lab = place_from_order(inst, {1, 0}, LeaderStyle::OR);
    const double tll = total_leader_length(inst, lab);
    const std::string text = labeling_to_json_string(lab, tll);
    const Labeling back = labeling_from_json_string(text, inst);
    CHECK(back.style == lab.style);
    CHECK(back.order == lab.order);
    for (int i = 0; i < 2; ++i)
        CHECK(back.ports[i].beta == doctest::Approx(lab.ports[i].beta).epsilon(1e-12));

    CHECK_THROWS_AS(labeling_from_json_string("{", inst), ParseError);
    // A stored port that contradicts the order's arc midpoints is rejected.
    auto doc = nlohmann::json::parse(text);
    doc["ports"][0] = doc["ports"][0].get<double>() + 0.5;
    CHECK_THROWS_AS(labeling_from_json_string(doc.dump(), inst), SchemaError);
}

}  // TEST_SUITE
