#include <doctest.h>

#include "dmst/synthetic.hpp"

using namespace dmst;

namespace {

SyntheticSpec baseSpec() {
    SyntheticSpec s;
    s.width = 80;
    s.height = 60;
    s.frames = 10;
    s.cx0 = 30;
    s.cy0 = 30;
    s.hx0 = 8;
    s.hy0 = 8;
    return s;
}

} // namespace

TEST_CASE("static spec renders identical frames") {
    const auto seq = generateSynthetic(baseSpec());
    REQUIRE(seq.frames.size() == 10);
    for (std::size_t i = 1; i < seq.frames.size(); ++i) {
        CHECK(seq.frames[i] == seq.frames[0]);
        CHECK(seq.groundTruth[i] == seq.groundTruth[0]);
    }
}

TEST_CASE("velocity advances the ground truth linearly") {
    SyntheticSpec s = baseSpec();
    s.vx = 3.0;
    s.frames = 12;
    const auto seq = generateSynthetic(s);
    for (int t = 0; t < s.frames; ++t) {
        CHECK(seq.groundTruth[static_cast<std::size_t>(t)].cx ==
              doctest::Approx(30.0 + 3.0 * t));
        CHECK(seq.groundTruth[static_cast<std::size_t>(t)].cy == doctest::Approx(30.0));
    }
}

TEST_CASE("the same seed reproduces frames bit for bit") {
    SyntheticSpec s = baseSpec();
    s.background = SyntheticSpec::Background::Noise;
    s.noiseAmplitude = 20;
    s.texture = SyntheticSpec::Texture::Speckle;
    s.seed = 1234;
    const auto a = generateSynthetic(s);
    const auto b = generateSynthetic(s);
    for (std::size_t i = 0; i < a.frames.size(); ++i) {
        CHECK(a.frames[i] == b.frames[i]);
    }
}

TEST_CASE("scale ramp multiplies the target size per frame") {
    SyntheticSpec s = baseSpec();
    s.scaleRamp = 1.05;
    s.frames = 8;
    const auto seq = generateSynthetic(s);
    for (int t = 1; t < s.frames; ++t) {
        CHECK(seq.groundTruth[static_cast<std::size_t>(t)].hx ==
              doctest::Approx(seq.groundTruth[static_cast<std::size_t>(t - 1)].hx * 1.05));
    }
}

TEST_CASE("a target leaving the frame is rejected") {
    SyntheticSpec s = baseSpec();
    s.vx = 20.0;
    s.frames = 10;
    CHECK_THROWS_AS(generateSynthetic(s), SpecError);
}

TEST_CASE("hue drift rotates the drawn colors") {
    SyntheticSpec s = baseSpec();
    s.hueDriftPerFrame = 9.0;
    s.frames = 5;
    const auto seq = generateSynthetic(s);
    const int cx = 30, cy = 30;
    CHECK(seq.frames[0].at(cx, cy) == s.fill);
    CHECK(seq.frames[4].at(cx, cy) == rotateHue(s.fill, 36.0));
    CHECK(seq.frames[4].at(cx, cy) != s.fill);
    // Background pixels stay put.
    CHECK(seq.frames[4].at(2, 2) == s.backgroundColor);
}

TEST_CASE("hue rotation by 360 degrees is close to identity") {
    const Rgb c{200, 80, 40};
    const Rgb spun = rotateHue(c, 360.0);
    CHECK(std::abs(spun.r - c.r) <= 1);
    CHECK(std::abs(spun.g - c.g) <= 1);
    CHECK(std::abs(spun.b - c.b) <= 1);
}

TEST_CASE("spec JSON round-trips") {
    SyntheticSpec s = baseSpec();
    s.texture = SyntheticSpec::Texture::Checker;
    s.scaleRamp = 1.003;
    s.hueDriftPerFrame = 0.2;
    s.seed = 99;
    const SyntheticSpec back = SyntheticSpec::fromJsonText(s.toJsonText());
    CHECK(back.width == s.width);
    CHECK(back.texture == SyntheticSpec::Texture::Checker);
    CHECK(back.scaleRamp == doctest::Approx(s.scaleRamp));
    CHECK(back.seed == 99);
    CHECK(back.fill == s.fill);

    CHECK_THROWS_AS(SyntheticSpec::fromJsonText("not json"), SpecError);
    CHECK_THROWS_AS(SyntheticSpec::fromJsonText("{\"shape\": \"triangle\"}"), SpecError);
}
