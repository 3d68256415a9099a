#include <doctest.h>

#include <cmath>
#include <random>

#include "dmst/histogram.hpp"
#include "oracles.hpp"

using namespace dmst;

namespace {

const ColorQuantizer kQuant(16);
const KernelProfile kEpan{KernelKind::Epanechnikov};
const KernelProfile kUniform{KernelKind::Uniform};

const Rgb kRed{200, 40, 40};
const Rgb kBlue{40, 40, 200};

} // namespace

TEST_CASE("target model of a single-color window is one full bin") {
    const FrameImage frame(21, 21, kRed);
    const auto q = buildTargetModel(frame, Window{10, 10, 6, 6}, kQuant, kEpan);
    CHECK(q.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q[static_cast<std::size_t>(kQuant.bin(kRed))] == doctest::Approx(1.0));
}

TEST_CASE("two colors split symmetrically about the center weigh equally") {
    // Left half red, right half blue, window centered on the seam.
    const auto frame = oracle::paintFrame(40, 21, [](int x, int) {
        return x < 20 ? kRed : kBlue;
    });
    const auto q = buildTargetModel(frame, Window{19.5, 10, 8, 8}, kQuant, kEpan);
    CHECK(q[static_cast<std::size_t>(kQuant.bin(kRed))] ==
          doctest::Approx(q[static_cast<std::size_t>(kQuant.bin(kBlue))]).epsilon(1e-12));
}

TEST_CASE("checkerboard masses match the direct-summation oracle") {
    const auto frame = oracle::paintFrame(9, 9, [](int x, int y) {
        return (x + y) % 2 == 0 ? kRed : kBlue;
    });
    const Window w{4, 4, 2.5, 2.5}; // 5x5 region
    const auto got = buildTargetModel(frame, w, kQuant, kEpan);
    const auto want = oracle::kernelHistogram(frame, w, kQuant, KernelKind::Epanechnikov);
    for (std::size_t u = 0; u < got.size(); ++u) {
        CHECK(got[u] == doctest::Approx(want[u]).epsilon(1e-12));
    }
}

TEST_CASE("uniform kernel reduces the model to normalized bin counts") {
    std::mt19937_64 rng(3);
    const auto frame = oracle::paintFrame(15, 15, [&](int, int) {
        return (rng() & 1) != 0 ? kRed : kBlue;
    });
    const Window w{7, 7, 4, 4};
    const auto got = buildTargetModel(frame, w, kQuant, kUniform);
    // Count pixels inside the elliptical support directly.
    long long total = 0, red = 0;
    for (const PixelSample& s : pixelsIn(frame, w)) {
        if (normalizedOffset(s.x, s.y, w) > 1.0) {
            continue;
        }
        ++total;
        if (s.color == kRed) {
            ++red;
        }
    }
    CHECK(got[static_cast<std::size_t>(kQuant.bin(kRed))] ==
          doctest::Approx(static_cast<double>(red) / total).epsilon(1e-12));
}

TEST_CASE("degenerate windows raise the documented errors") {
    const FrameImage frame(10, 10, kRed);
    CHECK_THROWS_AS(buildTargetModel(frame, Window{50, 50, 2, 2}, kQuant, kEpan),
                    EmptyWindowError);
    // A sliver of in-frame pixels, all beyond the unit ellipse.
    CHECK_THROWS_AS(buildTargetModel(frame, Window{-5, -3, 6, 3.2}, kQuant, kEpan),
                    DegenerateKernelError);
}

TEST_CASE("candidate equals target for identical windows") {
    const auto frame = oracle::paintFrame(20, 20, [](int x, int y) {
        return (x / 3 + y / 3) % 2 == 0 ? kRed : kBlue;
    });
    const Window w{9, 9, 5, 5};
    const auto q = buildTargetModel(frame, w, kQuant, kEpan);
    const auto p = buildCandidateModel(frame, w, kQuant, kEpan);
    CHECK(p.weights() == q.weights());
    CHECK(p.role() == HistogramRole::Candidate);
}

TEST_CASE("overlapping shift on a two-color scene matches the oracle") {
    const auto frame = oracle::paintFrame(30, 20, [](int x, int) {
        return x < 14 ? kRed : kBlue;
    });
    const Window shifted{16.3, 9.2, 5, 4};
    const auto p = buildCandidateModel(frame, shifted, kQuant, kEpan);
    const auto want = oracle::kernelHistogram(frame, shifted, kQuant, KernelKind::Epanechnikov);
    for (std::size_t u = 0; u < p.size(); ++u) {
        CHECK(p[u] == doctest::Approx(want[u]).epsilon(1e-12));
    }
}

TEST_CASE("bhattacharyya trivia and the frozen hand case") {
    const auto p = WeightedHistogram::fromWeights({0.5, 0.5}, HistogramRole::Candidate);
    const auto q = WeightedHistogram::fromWeights({1.0, 0.0}, HistogramRole::Target);
    CHECK(bhattacharyya(p, p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bhattacharyya(p, q) == doctest::Approx(0.70710678118654757).epsilon(1e-12));
    CHECK(bhattDistance(p, q) == doctest::Approx(0.54119610014619701).epsilon(1e-9));
    CHECK(bhattDistance(p, p) == doctest::Approx(0.0));

    const auto a = WeightedHistogram::fromWeights({1.0, 0.0}, HistogramRole::Target);
    const auto b = WeightedHistogram::fromWeights({0.0, 1.0}, HistogramRole::Target);
    CHECK(bhattacharyya(a, b) == 0.0);
    CHECK(bhattDistance(a, b) == doctest::Approx(1.0));

    const auto wide = WeightedHistogram::fromWeights({0.5, 0.25, 0.25}, HistogramRole::Target);
    CHECK_THROWS_AS(bhattacharyya(p, wide), DimensionMismatchError);
}

TEST_CASE("bhattacharyya is symmetric and bounded over random pairs") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const auto pw = oracle::randomNormalizedHistogram(rng, 64, 0.5);
        const auto qw = oracle::randomNormalizedHistogram(rng, 64, 0.5);
        const auto p = WeightedHistogram::fromWeights(pw, HistogramRole::Candidate);
        const auto q = WeightedHistogram::fromWeights(qw, HistogramRole::Target);
        const double rho = bhattacharyya(p, q);
        CHECK(rho >= 0.0);
        CHECK(rho <= 1.0 + 1e-12);
        CHECK(rho == doctest::Approx(bhattacharyya(q, p)).epsilon(1e-12));
        CHECK(rho == doctest::Approx(oracle::bhattacharyya(p.weights(), q.weights()))
                         .epsilon(1e-12));
        // Cauchy-Schwarz equality only at p == q.
        if (rho > 1.0 - 1e-9) {
            for (std::size_t u = 0; u < p.size(); ++u) {
                CHECK(p[u] == doctest::Approx(q[u]).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("background histogram counts the ring region") {
    SUBCASE("uniform background is a single spike") {
        const FrameImage frame(40, 40, kBlue);
        const auto o = buildBackgroundHistogram(frame, Window{20, 20, 5, 5}, kQuant);
        CHECK(o[static_cast<std::size_t>(kQuant.bin(kBlue))] == doctest::Approx(1.0));
    }
    SUBCASE("ring fully outside the frame raises EmptyWindow") {
        const FrameImage frame(40, 40, kBlue);
        CHECK_THROWS_AS(buildBackgroundHistogram(frame, Window{500, 500, 5, 5}, kQuant),
                        EmptyWindowError);
    }
    SUBCASE("window covering the whole frame leaves no ring") {
        const FrameImage frame(20, 20, kBlue);
        CHECK_THROWS_AS(buildBackgroundHistogram(frame, Window{9.5, 9.5, 40, 40}, kQuant),
                        EmptyWindowError);
    }
    SUBCASE("two-tone ring matches the counting oracle") {
        const auto frame = oracle::paintFrame(60, 40, [](int x, int) {
            return x < 30 ? kRed : kBlue;
        });
        const Window target{28.2, 19.7, 6, 5};
        const auto got = buildBackgroundHistogram(frame, target, kQuant, 2.0);
        const auto want = oracle::ringHistogram(frame, target, kQuant, 2.0);
        for (std::size_t u = 0; u < got.size(); ++u) {
            CHECK(got[u] == doctest::Approx(want[u]).epsilon(1e-12));
        }
    }
}

TEST_CASE("transfer function follows Eq. 8 with the zero-bin convention") {
    SUBCASE("uniform background keeps everything") {
        const auto o = WeightedHistogram::fromWeights({0.25, 0.25, 0.25, 0.25},
                                                      HistogramRole::Background);
        CHECK(computeTransfer(o).isIdentity());
    }
    SUBCASE("hand case") {
        const auto o =
            WeightedHistogram::fromWeights({0.5, 0.25, 0.25, 0.0}, HistogramRole::Background);
        const auto v = computeTransfer(o).v;
        CHECK(v[0] == doctest::Approx(0.5));
        CHECK(v[1] == doctest::Approx(1.0));
        CHECK(v[2] == doctest::Approx(1.0));
        CHECK(v[3] == doctest::Approx(1.0));
    }
    SUBCASE("single spike attenuates nothing") {
        const auto o = WeightedHistogram::fromWeights({0.0, 1.0}, HistogramRole::Background);
        CHECK(computeTransfer(o).isIdentity());
    }
}

TEST_CASE("CBWH target model") {
    const auto frame = oracle::paintFrame(30, 30, [](int x, int y) {
        return (x + y) % 2 == 0 ? kRed : kBlue;
    });
    const Window w{14, 14, 6, 6};

    SUBCASE("identity transfer reproduces the plain model exactly") {
        TransferFunction ident;
        ident.v.assign(static_cast<std::size_t>(kQuant.binCount()), 1.0);
        const auto plain = buildTargetModel(frame, w, kQuant, kEpan);
        const auto cbwh = buildCbwhTargetModel(frame, w, kQuant, kEpan, ident);
        CHECK(cbwh.weights() == plain.weights());
    }
    SUBCASE("attenuated bin is halved pre-normalization") {
        TransferFunction v;
        v.v.assign(static_cast<std::size_t>(kQuant.binCount()), 1.0);
        const std::size_t redBin = static_cast<std::size_t>(kQuant.bin(kRed));
        v.v[redBin] = 0.5;
        const auto raw = oracle::kernelHistogram(frame, w, kQuant, KernelKind::Epanechnikov);
        std::vector<double> expect = raw;
        expect[redBin] *= 0.5;
        double total = 0.0;
        for (double e : expect) {
            total += e;
        }
        for (double& e : expect) {
            e /= total;
        }
        const auto got = buildCbwhTargetModel(frame, w, kQuant, kEpan, v);
        for (std::size_t u = 0; u < got.size(); ++u) {
            CHECK(got[u] == doctest::Approx(expect[u]).epsilon(1e-12));
        }
    }
    SUBCASE("suppressing the only occupied bin still renormalizes to a spike") {
        const FrameImage solid(20, 20, kRed);
        TransferFunction v;
        v.v.assign(static_cast<std::size_t>(kQuant.binCount()), 1.0);
        v.v[static_cast<std::size_t>(kQuant.bin(kRed))] = 0.01;
        const auto got = buildCbwhTargetModel(solid, Window{10, 10, 5, 5}, kQuant, kEpan, v);
        CHECK(got[static_cast<std::size_t>(kQuant.bin(kRed))] == doctest::Approx(1.0));
    }
}

TEST_CASE("plain BWH weighting") {
    const auto q = WeightedHistogram::fromWeights({0.4, 0.3, 0.2, 0.1}, HistogramRole::Target);
    const auto p =
        WeightedHistogram::fromWeights({0.1, 0.2, 0.3, 0.4}, HistogramRole::Candidate);

    SUBCASE("identity transfer changes nothing") {
        TransferFunction v{{1.0, 1.0, 1.0, 1.0}};
        const auto [wq, wp] = applyBwhWeighting(q, p, v);
        CHECK(wq.weights() == q.weights());
        CHECK(wp.weights() == p.weights());
    }
    SUBCASE("uniform scaling cancels in the renormalization") {
        TransferFunction v{{0.5, 0.5, 0.5, 0.5}};
        const auto [wq, wp] = applyBwhWeighting(q, p, v);
        CHECK(wq.weights() == q.weights());
        CHECK(wp.weights() == p.weights());
    }
    SUBCASE("mixed transfer is the renormalized elementwise product") {
        TransferFunction v{{1.0, 0.5, 0.25, 1.0}};
        const auto [wq, wp] = applyBwhWeighting(q, p, v);
        // Hand arithmetic: q*v = [0.4, 0.15, 0.05, 0.1], total 0.7.
        CHECK(wq[0] == doctest::Approx(0.4 / 0.7).epsilon(1e-12));
        CHECK(wq[1] == doctest::Approx(0.15 / 0.7).epsilon(1e-12));
        CHECK(wq[2] == doctest::Approx(0.05 / 0.7).epsilon(1e-12));
        CHECK(wq[3] == doctest::Approx(0.1 / 0.7).epsilon(1e-12));
        // p*v = [0.1, 0.1, 0.075, 0.4], total 0.675.
        CHECK(wp[3] == doctest::Approx(0.4 / 0.675).epsilon(1e-12));
    }
    SUBCASE("annihilating every occupied bin raises ZeroMass") {
        const auto spike = WeightedHistogram::fromWeights({1.0, 0.0}, HistogramRole::Target);
        const auto other = WeightedHistogram::fromWeights({0.0, 1.0}, HistogramRole::Candidate);
        TransferFunction v{{0.0, 1.0}};
        CHECK_THROWS_AS(applyBwhWeighting(spike, other, v), ZeroMassError);
    }
}

TEST_CASE("every constructed histogram is normalized to 1e-9") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coord(0, 31);
    std::uniform_real_distribution<double> ext(1.0, 10.0);
    const auto frame = oracle::paintFrame(32, 32, [&](int, int) {
        return Rgb{static_cast<std::uint8_t>(rng() & 255), static_cast<std::uint8_t>(rng() & 255),
                   static_cast<std::uint8_t>(rng() & 255)};
    });
    for (int i = 0; i < 200; ++i) {
        const Window w{static_cast<double>(coord(rng)), static_cast<double>(coord(rng)),
                       ext(rng), ext(rng)};
        try {
            CHECK(std::fabs(buildTargetModel(frame, w, kQuant, kEpan).sum() - 1.0) < 1e-9);
            CHECK(std::fabs(buildBackgroundHistogram(frame, w, kQuant).sum() - 1.0) < 1e-9);
        } catch (const Error&) {
            // degenerate placements are exercised elsewhere
        }
    }
}
