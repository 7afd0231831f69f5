#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "helpers.hpp"
#include "oracle/reference.hpp"
#include "zetaline/checkpoint.hpp"
#include "zetaline/engine.hpp"
#include "zetaline/quad.hpp"

using namespace zetaline;
using zltest::SinSampler;

namespace {
struct TempFile {
    std::string path;
    explicit TempFile(const char* name)
        : path((std::filesystem::temp_directory_path() / name).string()) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("Gauss-Legendre panel is exact on polynomials") {
    auto g = [](double t) -> Sample { return {std::pow(t, 14.0) - 3.0 * t * t, 0.0}; };
    const QuadResult r = integrate(g, 0.0, 2.0, 1e-12);
    const double expect = std::pow(2.0, 15.0) / 15.0 - 8.0;
    REQUIRE(std::abs(r.value - expect) <= 1e-12 * expect);
}

TEST_CASE("synthetic oracle: prefix integrals of sin reproduce the closed forms") {
    PrefixSweeper<SinSampler> sweep(SinSampler{}, QuadOptions{}, 1);
    for (const double T : {10.0, 100.0, 1000.0}) {
        const QuadResult r2 = sweep.z2_prefix(T);
        const QuadResult r4 = sweep.z4_prefix(T);
        REQUIRE(std::abs(r2.value - zltest::sin2_prefix(T)) <= 1e-10 * zltest::sin2_prefix(T));
        REQUIRE(std::abs(r4.value - zltest::sin4_prefix(T)) <= 1e-10 * zltest::sin4_prefix(T));
        REQUIRE(r2.est_error >= 0.0);
        REQUIRE(r2.panels >= 1);
        REQUIRE(r2.evals >= r2.panels);
    }
}

TEST_CASE("empty prefix is zero") {
    PrefixSweeper<SinSampler> sweep(SinSampler{}, QuadOptions{}, 1);
    const QuadResult r = sweep.z2_prefix(0.0);
    REQUIRE(r.value == 0.0);
    REQUIRE(r.est_error == 0.0);
}

TEST_CASE("prefix integrals are nondecreasing") {
    PrefixSweeper<SinSampler> sweep(SinSampler{}, QuadOptions{}, 1);
    zltest::Rng rng(11);
    double T = 0.0, last2 = 0.0, last4 = 0.0;
    for (int i = 0; i < 25; ++i) {
        T += 40.0 * rng.uniform();
        const double v2 = sweep.z2_prefix(T).value;
        const double v4 = sweep.z4_prefix(T).value;
        REQUIRE(v2 >= last2);
        REQUIRE(v4 >= last4);
        last2 = v2;
        last4 = v4;
    }
}

TEST_CASE("frozen oracle: Z prefix integrals at T = 50 and 200") {
    EvalConfig hi;
    hi.rs_correction_order = 4;
    hi.em_threshold = 100.0;
    hi.em_terms = 64;
    Workspace ws(hi, QuadOptions{});
    REQUIRE(std::abs(ws.z2_prefix(50.0).value - oracle::kI2_50) <= 1e-9 * oracle::kI2_50);
    REQUIRE(std::abs(ws.z4_prefix(50.0).value - oracle::kI4_50) <= 1e-9 * oracle::kI4_50);

    // Default configuration: the coarser Z error model must still cover the
    // true deviation from the oracle.
    Workspace def{EvalConfig{}, QuadOptions{}};
    const QuadResult r2 = def.z2_prefix(200.0);
    const QuadResult r4 = def.z4_prefix(200.0);
    REQUIRE(std::abs(r2.value - oracle::kI2_200) <= r2.est_error);
    REQUIRE(std::abs(r4.value - oracle::kI4_200) <= r4.est_error);
}

TEST_CASE("checkpoint resume equals the uninterrupted sweep") {
    SECTION("synthetic integrand, within 1e-12 relative") {
        PrefixSweeper<SinSampler> full(SinSampler{}, QuadOptions{}, 1);
        PrefixSweeper<SinSampler> halved(SinSampler{}, QuadOptions{}, 1);
        const double T = 1000.0;
        const double one = full.z2_prefix(T).value;
        halved.z2_prefix(T / 2.0);
        const double two = halved.z2_prefix(T).value;
        REQUIRE(std::abs(one - two) <= 1e-12 * std::abs(one));
    }
    SECTION("Z integrand through a checkpoint CSV, bit-identical") {
        TempFile tmp("zl_quad_ckpt.csv");
        Workspace full{EvalConfig{}, QuadOptions{}};
        Workspace part{EvalConfig{}, QuadOptions{}};
        const double T = 500.0;
        const QuadResult one = full.z2_prefix(T);

        part.z2_prefix(T / 2.0);
        CheckpointFile file(tmp.path);
        file.append(part.checkpoint());

        Workspace resumed{EvalConfig{}, QuadOptions{}};
        const auto saved = file.last_matching(resumed.cfg_hash());
        REQUIRE(saved.has_value());
        resumed.restore(*saved);
        const QuadResult two = resumed.z2_prefix(T);
        REQUIRE(one.value == two.value);
        REQUIRE(full.z4_prefix(T).value == resumed.z4_prefix(T).value);
    }
}

TEST_CASE("identical configurations give bit-identical values") {
    Workspace a{EvalConfig{}, QuadOptions{}};
    Workspace b{EvalConfig{}, QuadOptions{}};
    REQUIRE(a.z2_prefix(300.0).value == b.z2_prefix(300.0).value);
    REQUIRE(a.z4_prefix(300.0).value == b.z4_prefix(300.0).value);
}

TEST_CASE("regressing the frontier is rejected") {
    PrefixSweeper<SinSampler> sweep(SinSampler{}, QuadOptions{}, 1);
    sweep.z2_prefix(100.0);
    REQUIRE_THROWS_AS(sweep.z2_prefix(50.0), std::domain_error);
}

TEST_CASE("checkpoint file round trip and hash matching") {
    TempFile tmp("zl_ckpt_roundtrip.csv");
    CheckpointFile file(tmp.path);
    SweepCheckpoint c;
    c.frontier = 123.456789012345678;
    c.i2 = 9876.54321012345678;
    c.i4 = 1.2345678901234567e8;
    c.est_error_i2 = 1e-9;
    c.est_error_i4 = 2e-7;
    c.cfg_hash = 0xdeadbeefcafe1234ull;
    file.append(c);
    c.frontier *= 2.0;
    file.append(c);

    const auto rows = file.load();
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[1].frontier == c.frontier);
    REQUIRE(rows[0].i2 == c.i2);
    REQUIRE(rows[0].cfg_hash == c.cfg_hash);
    REQUIRE(file.count_matching(c.cfg_hash) == 2);
    REQUIRE(!file.last_matching(1).has_value());

    Workspace ws{EvalConfig{}, QuadOptions{}};
    REQUIRE_THROWS_AS(ws.restore(rows[0]), checkpoint_error);
}

TEST_CASE("config hash is sensitive to every knob") {
    EvalConfig cfg;
    QuadOptions opt;
    const auto base = config_hash(cfg, opt);
    EvalConfig c2 = cfg;
    c2.rs_correction_order = 3;
    REQUIRE(config_hash(c2, opt) != base);
    QuadOptions o2 = opt;
    o2.rel_tol = 1e-9;
    REQUIRE(config_hash(cfg, o2) != base);
}

TEST_CASE("weighted integral basics") {
    ZSampler z{EvalConfig{}};
    SECTION("large decay collapses the support near 0") {
        const double delta = 10.0;
        const QuadResult r = weighted_square_integral(z, 5.0, delta);
        double max_sq = 0.0;
        for (double t = 0.0; t <= 5.0; t += 0.01)
            max_sq = std::max(max_sq, z(t).value * z(t).value);
        REQUIRE(r.value > 0.0);
        REQUIRE(r.value < max_sq / (2.0 * delta));
    }
    SECTION("monotone in the upper limit") {
        const QuadResult a = weighted_square_integral(z, 50.0, 0.05);
        const QuadResult b = weighted_square_integral(z, 100.0, 0.05);
        REQUIRE(b.value >= a.value);
    }
    SECTION("early truncation is reflected in est_error") {
        const QuadResult tight = weighted_square_integral(z, 400.0, 0.05);
        const QuadResult cut = weighted_square_integral(z, 40.0, 0.05);  // < 20/delta
        REQUIRE(cut.est_error > tight.est_error);
        REQUIRE(cut.est_error > 0.01 * cut.value);  // visibly truncated
    }
    SECTION("domain errors") {
        REQUIRE_THROWS_AS(weighted_square_integral(z, -1.0, 0.1), std::domain_error);
        REQUIRE_THROWS_AS(weighted_square_integral(z, 1.0, 0.0), std::domain_error);
    }
}

TEST_CASE("tolerance failure after max subdivisions reports the worst panel") {
    // A jump discontinuity defeats polynomial panels: the refinement floor
    // is reached and the shortfall must surface, not vanish.
    struct StepSampler {
        Sample operator()(double t) const { return {t < 5.0 ? 0.0 : 1.0, 0.0}; }
    };
    QuadOptions opt;
    opt.rel_tol = 1e-14;
    opt.max_depth = 6;
    PrefixSweeper<StepSampler> sweep(StepSampler{}, opt, 1);
    const QuadResult r = sweep.z2_prefix(10.0);
    REQUIRE(std::abs(r.value - 5.0) <= 1e-3);
    REQUIRE(sweep.worst_excess() > 0.0);
    const auto [lo, hi] = sweep.worst_panel();
    REQUIRE(lo <= 5.0);
    REQUIRE(hi >= 5.0);
    REQUIRE(r.est_error >= sweep.worst_excess());
}

TEST_CASE("prefix main term at T = 1e4", "[slow]") {
    Workspace ws{EvalConfig{}, QuadOptions{}};
    const double T = 1e4;
    const QuadResult r2 = ws.z2_prefix(T);
    const double main =
        T * std::log(T) + (2.0 * kEulerGamma - 1.0 - kLn2Pi) * T;
    REQUIRE(std::abs(r2.value - main) <= 0.02 * main);

    const double ratio = fourth_moment_ratio(ws.z4_prefix(T).value, T);
    REQUIRE(ratio >= 0.5);
    REQUIRE(ratio <= 1.5);
}
