#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "negaspec/negativity.hpp"
#include "negaspec/spectrum.hpp"
#include "negaspec/statmech.hpp"
#include "helpers.hpp"

using namespace negaspec;
using negaspec::test::cylinder_layout;

namespace {

std::vector<double> abs_multiset(const NegativitySpectrum &s) {
    std::vector<double> out;
    for (const auto &e : s.entries)
        for (std::uint64_t k = 0; k < e.multiplicity; ++k) out.push_back(std::fabs(e.lambda));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> signed_multiset(const NegativitySpectrum &s) {
    std::vector<double> out;
    for (const auto &e : s.entries)
        for (std::uint64_t k = 0; k < e.multiplicity; ++k) out.push_back(e.lambda);
    std::sort(out.begin(), out.end());
    return out;
}

void check_close(const std::vector<double> &a, const std::vector<double> &b, double tol) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(std::fabs(a[i] - b[i]) <= tol * std::max(1.0, std::fabs(a[i])));
}

} // namespace

TEST_CASE("uniform spectrum at zero noise") {
    auto lo = cylinder_layout(2, 2);
    auto s = spectrum_z(lo, NoiseModel{NoiseKind::Z, 0.0, 0.0});
    CHECK(s.trace_sum() == doctest::Approx(1.0).epsilon(1e-12));
    double mag = std::fabs(s.entries.front().lambda);
    for (const auto &e : s.entries) CHECK(std::fabs(e.lambda) == doctest::Approx(mag));

    auto sx = spectrum_x(cylinder_layout(2, 3), NoiseModel{NoiseKind::X, 0.0, 0.0});
    CHECK(sx.trace_sum() == doctest::Approx(1.0).epsilon(1e-12));
    double magx = std::fabs(sx.entries.front().lambda);
    for (const auto &e : sx.entries) CHECK(std::fabs(e.lambda) == doctest::Approx(magx));
}

TEST_CASE("2d L = 4 closed-form cross-check at beta = 0.5") {
    auto lo = cylinder_layout(2, 4);
    double p = beta_to_noise(0.5);
    auto s = spectrum_z(lo, NoiseModel{NoiseKind::Z, p, 0.0});
    double alpha = std::log(1.0 + std::exp(-1.0));
    double e_topo = std::log(2.0) - std::log1p(std::pow(std::tanh(0.5), 4));
    CHECK(s.log_abs_sum() == doctest::Approx(alpha * 4 - e_topo).epsilon(1e-12));
    CHECK(s.trace_sum() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("nonzero entry count is 2^{2 rank} for pure Z noise") {
    for (int l : {3, 4, 5}) {
        auto lo = cylinder_layout(2, l);
        auto s = spectrum_z(lo, NoiseModel{NoiseKind::Z, 0.2, 0.0});
        std::uint64_t total = 0;
        for (const auto &e : s.entries) {
            CHECK(e.lambda != 0.0);
            total += e.multiplicity;
        }
        CHECK(total == std::uint64_t(1) << (2 * (l - 1)));
    }
}

TEST_CASE("3d Z noise matches the boundary gauge model by enumeration") {
    auto lo = cylinder_layout(3, 2);
    const double beta = 0.3;
    auto s = spectrum_z(lo, NoiseModel{NoiseKind::Z, beta_to_noise(beta), 0.0});
    auto model = model_from_layout(lo, NoiseKind::Z, beta);
    auto z = logZ_enumerate(model);
    CHECK(s.log_abs_sum() == doctest::Approx(z.log_z - z.log_z_restricted).epsilon(1e-10));
    // the boundary model is the 2d gauge theory on the boundary torus
    auto g = logZ_gauge2d(beta, 2);
    CHECK(z.log_z == doctest::Approx(g.log_z).epsilon(1e-10));
    CHECK(s.trace_sum() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("3d X noise matches the boundary Ising model by enumeration") {
    auto lo = cylinder_layout(3, 2);
    const double beta = 0.4;
    auto s = spectrum_x(lo, NoiseModel{NoiseKind::X, 0.0, beta_to_noise(beta)});
    auto model = model_from_layout(lo, NoiseKind::X, beta);
    auto z = logZ_enumerate(model);
    CHECK(s.log_abs_sum() == doctest::Approx(z.log_z - z.log_z_restricted).epsilon(1e-10));
    auto k = logZ_ising2d(beta, 2);
    CHECK(z.log_z == doctest::Approx(k.log_z).epsilon(1e-10));
}

TEST_CASE("2d X/Z duality gives the same |lambda| multiset") {
    for (int l : {3, 4}) {
        auto lo = cylinder_layout(2, l);
        double p = 0.23;
        auto sz = spectrum_z(lo, NoiseModel{NoiseKind::Z, p, 0.0});
        auto sx = spectrum_x(lo, NoiseModel{NoiseKind::X, 0.0, p});
        check_close(abs_multiset(sz), abs_multiset(sx), 1e-10);
    }
}

TEST_CASE("p = 1/2 limit collapses the spectrum") {
    auto lo = cylinder_layout(2, 4);
    auto s = spectrum_z(lo, NoiseModel{NoiseKind::Z, 0.5, 0.0});
    REQUIRE(s.entries.size() == 1);
    CHECK(s.entries[0].lambda == doctest::Approx(1.0 / 8.0));
    CHECK(s.entries[0].multiplicity == 8);
    CHECK(s.trace_sum() == doctest::Approx(1.0));
    CHECK(s.log_abs_sum() == doctest::Approx(0.0)); // E_N = 0 at maximal noise
}

TEST_CASE("XZ spectrum reduces to the single-noise limits") {
    auto lo = cylinder_layout(2, 4);
    {
        auto xz = spectrum_xz_2d(lo, NoiseModel{NoiseKind::XZ, 0.2, 0.0});
        auto z = spectrum_z(lo, NoiseModel{NoiseKind::Z, 0.2, 0.0});
        check_close(signed_multiset(xz), signed_multiset(z), 1e-10);
    }
    {
        auto xz = spectrum_xz_2d(lo, NoiseModel{NoiseKind::XZ, 0.0, 0.2});
        auto x = spectrum_x(lo, NoiseModel{NoiseKind::X, 0.0, 0.2});
        check_close(signed_multiset(xz), signed_multiset(x), 1e-10);
    }
}

TEST_CASE("XZ trace normalization and sign structure at L = 4") {
    auto lo = cylinder_layout(2, 4);
    auto s = spectrum_xz_2d(lo, NoiseModel{NoiseKind::XZ, 0.1, 0.1});
    CHECK(s.trace_sum() == doctest::Approx(1.0).epsilon(1e-10));

    // the XZ sign is not set by chi alone: some negative eigenvalue comes
    // from a chi = +1 configuration once the tau correlator turns negative
    // (at weak symmetric noise the correlator is positive throughout, so a
    // stronger, asymmetric point is probed here)
    auto s2 = spectrum_xz_2d(lo, NoiseModel{NoiseKind::XZ, 0.3, 0.05});
    CHECK(s2.trace_sum() == doctest::Approx(1.0).epsilon(1e-10));
    ChiSolver solver(lo);
    bool found = false;
    for (const auto &e : s2.entries) {
        if (e.lambda >= 0.0 || !e.config) continue;
        if (solver.chi(*e.config) == 1) { found = true; break; }
    }
    CHECK(found);
}

TEST_CASE("spectrum agrees with closed-form E_N across a noise grid") {
    for (int l : {2, 4, 6}) {
        auto lo = cylinder_layout(2, l);
        for (double p : {0.05, 0.2, 0.35, 0.45}) {
            auto s = spectrum_z(lo, NoiseModel{NoiseKind::Z, p, 0.0});
            auto r = negativity_2d_z(p, l);
            CHECK(s.log_abs_sum() == doctest::Approx(r.e_n).epsilon(1e-10));
            CHECK(s.trace_sum() == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("csv and json output") {
    auto lo = cylinder_layout(2, 3);
    auto s = spectrum_z(lo, NoiseModel{NoiseKind::Z, 0.2, 0.0});
    auto csv = spectrum_csv(s);
    CHECK(csv.rfind("lambda,multiplicity,config\n", 0) == 0);
    // one line per entry plus header
    std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == s.entries.size() + 1);
    auto hdr = spectrum_json_header(s);
    CHECK(hdr.find("\"negaspec/1\"") != std::string::npos);
    CHECK(hdr.find("\"d\":2") != std::string::npos);
}

TEST_CASE("guard rejections") {
    auto lo = cylinder_layout(3, 2);
    CHECK_THROWS(spectrum_xz_2d(lo, NoiseModel{NoiseKind::XZ, 0.1, 0.1})); // d = 3
    auto lo2 = cylinder_layout(2, 4);
    CHECK_THROWS(spectrum_xz_2d(lo2, NoiseModel{NoiseKind::XZ, 0.5, 0.1})); // p_z = 1/2
}
