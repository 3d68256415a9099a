#include <doctest.h>

#include <random>

#include "dmst/template_update.hpp"
#include "oracles.hpp"

using namespace dmst;

namespace {

WeightedHistogram hist(std::vector<double> w) {
    return WeightedHistogram::fromWeights(std::move(w), HistogramRole::CbwhTarget);
}

} // namespace

TEST_CASE("matching error is the sum of squared differences") {
    const auto p = hist({1.0, 0.0});
    const auto q = hist({0.0, 1.0});
    CHECK(matchingErrorL2(p, p) == 0.0);
    CHECK(matchingErrorL2(p, q) == doctest::Approx(2.0));
    CHECK_THROWS_AS(matchingErrorL2(p, hist({1, 1, 1})), DimensionMismatchError);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const auto a = oracle::randomNormalizedHistogram(rng, 8);
        const auto b = oracle::randomNormalizedHistogram(rng, 8);
        CHECK(matchingErrorL2(hist(a), hist(b)) ==
              doctest::Approx(oracle::squaredDistance(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("recordCandidate bounds the store and counts changes") {
    TemplateConfig cfg;
    cfg.dLimit = 3;
    TemplateStore store(hist({0.5, 0.5}), cfg);

    store.recordCandidate(hist({0.6, 0.4}), 10);
    CHECK(store.storedCount() == 1);
    CHECK(store.changeCount() == 1);

    store.recordCandidate(hist({0.7, 0.3}), 20);
    store.recordCandidate(hist({0.8, 0.2}), 30);
    store.recordCandidate(hist({0.9, 0.1}), 40); // evicts the oldest
    CHECK(store.storedCount() == 3);
    CHECK(store.changeCount() == 4);
}

TEST_CASE("maybeReplace keeps the key model while similarity holds") {
    TemplateConfig cfg;
    TemplateStore store(hist({0.5, 0.5}), cfg);
    for (int i = 0; i < cfg.dLimit; ++i) {
        store.recordCandidate(hist({0.5, 0.5}), i + 1);
    }
    CHECK_FALSE(store.maybeReplace());
    CHECK(store.changeCount() == 0);
    CHECK(store.storedCount() == 0);
    CHECK(store.theta() == cfg.theta0);
    CHECK(store.keyModel().weights() == hist({0.5, 0.5}).weights());
}

TEST_CASE("maybeReplace swaps in the drifted model and adapts the threshold") {
    // Initial model is a spike; the stored model has rho(M, q0) = 0.7 < 0.8.
    TemplateConfig cfg;
    TemplateStore store(hist({1.0, 0.0}), cfg);
    const auto drifted = hist({0.49, 0.51});
    store.recordCandidate(drifted, 5);
    store.recordCandidate(hist({0.25, 0.75}), 6); // rho = 0.5, worse match to the key
    store.recordCandidate(hist({0.36, 0.64}), 7); // rho = 0.6
    CHECK(store.maybeReplace());
    CHECK(store.keyModel().weights() == drifted.weights());
    // theta <- clamp(0.8 - (1.0 - 0.7)) = 0.5
    CHECK(store.theta() == doctest::Approx(0.5));
    CHECK(store.changeCount() == 0);
    CHECK(store.storedCount() == 0);
}

TEST_CASE("equal old and new similarity leaves the threshold unchanged") {
    TemplateConfig cfg;
    cfg.thetaMin = 0.75; // keep the threshold above the drifted similarity
    TemplateStore store(hist({1.0, 0.0}), cfg);
    // Move the key model away from the initial one first.
    store.recordCandidate(hist({0.49, 0.51}), 3); // rho(., q0) = 0.7
    store.recordCandidate(hist({0.49, 0.51}), 4);
    store.recordCandidate(hist({0.49, 0.51}), 5);
    REQUIRE(store.maybeReplace());
    const double thetaAfterFirst = store.theta(); // clamped at thetaMin = 0.75

    // A second round whose best candidate has the same similarity to q0 as
    // the current key model: rho_old == rho_new, theta must not move.
    store.recordCandidate(hist({0.49, 0.51}), 13);
    store.recordCandidate(hist({0.49, 0.51}), 14);
    store.recordCandidate(hist({0.49, 0.51}), 15);
    REQUIRE(store.maybeReplace());
    CHECK(store.theta() == doctest::Approx(thetaAfterFirst));
}

TEST_CASE("maybeReplace with nothing stored is an error") {
    TemplateStore store(hist({1.0, 0.0}), TemplateConfig{});
    CHECK_THROWS_AS(store.maybeReplace(), EmptyStoreError);
}

TEST_CASE("threshold stays inside its bounds across replacements") {
    TemplateConfig cfg;
    cfg.dLimit = 1;
    TemplateStore store(hist({1.0, 0.0, 0.0}), cfg);
    std::mt19937_64 rng(29);
    for (int round = 0; round < 20; ++round) {
        store.recordCandidate(hist(oracle::randomNormalizedHistogram(rng, 3)), round);
        store.maybeReplace();
        CHECK(store.theta() >= cfg.thetaMin);
        CHECK(store.theta() <= cfg.thetaMax);
        CHECK(store.keyModel().sum() == doctest::Approx(1.0).epsilon(1e-9));
    }
}
