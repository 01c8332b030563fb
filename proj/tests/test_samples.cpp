#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "iterkit/samples.hpp"

using namespace iterkit;

TEST_CASE("create_sample_set accepts well-formed input") {
    const SampleSet set = create_sample_set({0, 1, 2}, {0, 1, 4});
    CHECK(set.size() == 3);
    CHECK(set.degree() == 2);
    CHECK(set.span() == 2.0);
}

TEST_CASE("fields read back bit-exactly and in the given order") {
    const std::vector<double> xs = {2.5, -0.0, 0.1, -3.75};
    const std::vector<double> ys = {1e-300, 7.0, -0.3, 0.0};
    const SampleSet set = create_sample_set(xs, ys);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(set.node(i) == xs[i]);
        CHECK(set.value(i) == ys[i]);
    }
}

TEST_CASE("exact duplicate nodes are rejected with the offending pair") {
    try {
        create_sample_set({0, 0}, {1, 2});
        FAIL("expected DuplicateNodeError");
    } catch (const DuplicateNodeError& e) {
        CHECK(e.first == 0);
        CHECK(e.second == 1);
    }
}

TEST_CASE("length mismatch is rejected") {
    CHECK_THROWS_AS(create_sample_set({0, 1}, {1}), LengthMismatchError);
    CHECK_THROWS_AS(create_sample_set({}, {}), InputError);
}

TEST_CASE("near-duplicates below the relative separation threshold are rejected") {
    // span < 1, so the radius is kSeparationEpsilon * 1
    CHECK_THROWS_AS(create_sample_set({0.0, 5e-13}, {1, 2}), DuplicateNodeError);
    CHECK_NOTHROW(create_sample_set({0.0, 1e-11}, {1, 2}));
    // wide span scales the radius: 0.5 apart is a duplicate when span ~ 1e12
    CHECK_THROWS_AS(create_sample_set({0.0, 1e12, 1e12 + 0.5}, {1, 2, 3}), DuplicateNodeError);
    CHECK_NOTHROW(create_sample_set({0.0, 1e12, 1e12 + 10.0}, {1, 2, 3}));
}

TEST_CASE("non-finite entries are rejected with the index") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    try {
        create_sample_set({0, nan}, {1, 2});
        FAIL("expected NonFiniteError");
    } catch (const NonFiniteError& e) {
        CHECK(e.index == 1);
    }
    try {
        create_sample_set({0, 1}, {inf, 2});
        FAIL("expected NonFiniteError");
    } catch (const NonFiniteError& e) {
        CHECK(e.index == 0);
    }
}

TEST_CASE("check_eval_point guards only when distinctness is needed") {
    const SampleSet set = create_sample_set({1, 2}, {1, 1});
    CHECK_NOTHROW(check_eval_point(set, 0.0, true));
    try {
        check_eval_point(set, 1.0, true);
        FAIL("expected EvalPointCollisionError");
    } catch (const EvalPointCollisionError& e) {
        CHECK(e.node_index == 0);
    }
    CHECK_NOTHROW(check_eval_point(set, 1.0, false));
}

TEST_CASE("validation outcome is permutation-covariant") {
    std::mt19937 rng(7101);
    std::uniform_real_distribution<double> node_dist(-5.0, 5.0);
    std::uniform_real_distribution<double> value_dist(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t count = 2 + static_cast<std::size_t>(rng() % 6);
        std::vector<double> xs(count);
        std::vector<double> ys(count);
        for (std::size_t i = 0; i < count; ++i) {
            xs[i] = node_dist(rng);
            ys[i] = value_dist(rng);
        }
        if (trial % 3 == 0) xs[count - 1] = xs[0]; // inject a duplicate
        bool accepted = true;
        try {
            create_sample_set(xs, ys);
        } catch (const Error&) {
            accepted = false;
        }
        std::vector<std::size_t> perm(count);
        for (std::size_t i = 0; i < count; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<double> px(count);
        std::vector<double> py(count);
        for (std::size_t i = 0; i < count; ++i) {
            px[i] = xs[perm[i]];
            py[i] = ys[perm[i]];
        }
        bool accepted_perm = true;
        try {
            create_sample_set(px, py);
        } catch (const Error&) {
            accepted_perm = false;
        }
        CHECK(accepted == accepted_perm);
    }
}

TEST_CASE("without_node shrinks the stencil and refuses to empty it") {
    const SampleSet set = create_sample_set({1, 2, 3}, {1, 4, 9});
    const SampleSet smaller = set.without_node(1);
    CHECK(smaller.size() == 2);
    CHECK(smaller.node(0) == 1.0);
    CHECK(smaller.node(1) == 3.0);
    CHECK(smaller.value(1) == 9.0);
    const SampleSet single = create_sample_set({5}, {7});
    CHECK_THROWS_AS(single.without_node(0), EmptyStencilError);
}
