#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/sampling.hpp"

using namespace qcorr;

TEST_CASE("phase flip trajectory") {
  SUBCASE("traces the straight segment in the c2 = 0 plane") {
    const Trajectory t = phase_flip_trajectory(BellDiag(0.6, 0, 0.3), 101);
    REQUIRE(t.samples.size() == 101);
    CHECK(t.samples.front().p == 0.0);
    CHECK(t.samples.back().p == doctest::Approx(1.0 - 1e-9));
    for (size_t i = 0; i < t.samples.size(); ++i) {
      const auto& s = t.samples[i];
      const double q2 = (1.0 - s.p) * (1.0 - s.p);
      CHECK(s.c[0] == doctest::Approx(0.6 * q2).epsilon(1e-15));
      CHECK(s.c[1] == 0.0);
      CHECK(s.c[2] == 0.3);
      if (i > 0) CHECK(s.p > t.samples[i - 1].p);
    }
  }
  SUBCASE("axis states stay put") {
    const Trajectory t = phase_flip_trajectory(BellDiag(0, 0, 0.4), 21);
    for (const auto& s : t.samples) {
      CHECK(s.c.isApprox(Eigen::Vector3d(0, 0, 0.4), 1e-15));
      CHECK(s.D_G == 0.0);
    }
  }
  SUBCASE("scaling both c1 and c2 gives strictly decreasing D_G") {
    const Trajectory t = phase_flip_trajectory(BellDiag(0.5, -0.5, 0.2), 101);
    for (size_t i = 1; i < t.samples.size(); ++i) {
      CHECK(t.samples[i].c[0] == doctest::Approx(-t.samples[i].c[1]).epsilon(1e-15));
      CHECK(t.samples[i].D_G < t.samples[i - 1].D_G);
    }
  }
  SUBCASE("samples agree with the per-channel closed form and stay continuous") {
    const BellDiag c0(0.6, -0.1, 0.4);
    const Trajectory t = phase_flip_trajectory(c0, 401);
    double prev_dg = t.samples.front().D_G;
    double prev_p = t.samples.front().p;
    for (const auto& s : t.samples) {
      CHECK(std::abs(s.D_G - geometric_discord_after(c0, Channel{ChannelKind::phase_flip, s.p})) <
            1e-12);
      // |d D_G / dp| <= 1 on this trajectory bounds the sample-to-sample jump.
      CHECK(std::abs(s.D_G - prev_dg) <= 1.0 * (s.p - prev_p) + 1e-12);
      prev_dg = s.D_G;
      prev_p = s.p;
    }
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(phase_flip_trajectory(BellDiag(0.6, 0, 0.3), 1), std::invalid_argument);
    CHECK_THROWS_AS(phase_flip_trajectory(BellDiag(1, 1, 1), 10), PhysicalityError);
  }
}

TEST_CASE("trajectory csv format") {
  const Trajectory t = phase_flip_trajectory(BellDiag(0.6, 0, 0.3), 3);
  std::ostringstream os;
  write_trajectory_csv(t, os);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "p,c1,c2,c3,D_G,D,C");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(rows == 3);
  // 17-significant-digit round trip: the first row is p = 0 exactly.
  CHECK(os.str().find("0,0.59999999999999998,0,0.29999999999999999,") != std::string::npos);
}

TEST_CASE("piecewise D_G law") {
  const BellDiag c0(0.6, 0, 0.3);
  const double p_star = 1.0 - std::sqrt(0.5);

  SUBCASE("early branch is frozen at c3^2/4") {
    const PiecewiseDg at0 = piecewise_dg(c0, 0.0);
    CHECK(at0.value == doctest::Approx(0.0225).epsilon(1e-15));
    CHECK(at0.branch == DgBranch::early);
    for (double p : {0.05, 0.15, 0.25, p_star - 1e-12}) {
      const PiecewiseDg v = piecewise_dg(c0, p);
      CHECK(v.value == 0.0225);
      CHECK(v.branch == DgBranch::early);
    }
  }
  SUBCASE("branches agree at the breakpoint") {
    const PiecewiseDg early = piecewise_dg(c0, p_star);
    const PiecewiseDg late = piecewise_dg(c0, p_star + 1e-13);
    CHECK(early.branch == DgBranch::early);
    CHECK(late.branch == DgBranch::late);
    CHECK(std::abs(early.value - late.value) < 1e-13);
  }
  SUBCASE("late branch decays with (1-p)^4") {
    const PiecewiseDg v = piecewise_dg(c0, 0.9);
    CHECK(v.branch == DgBranch::late);
    CHECK(v.value == doctest::Approx(9e-6).epsilon(1e-12));
  }
  SUBCASE("matches the channel closed form everywhere") {
    for (int i = 0; i <= 200; ++i) {
      const double p = i / 200.0 * (1.0 - 1e-9);
      CHECK(std::abs(piecewise_dg(c0, p).value -
                     geometric_discord_after(c0, Channel{ChannelKind::phase_flip, p})) < 1e-12);
    }
  }
  SUBCASE("breakpoint continuity on random admissible states") {
    BellDiagSampler sampler(501);
    int tested = 0;
    while (tested < 200) {
      BellDiag bd = sampler.next();
      if (std::abs(bd.c[1]) > std::abs(bd.c[0])) std::swap(bd.c[0], bd.c[1]);
      if (!(std::abs(bd.c[0]) > std::abs(bd.c[2]) && std::abs(bd.c[2]) > 0)) continue;
      ++tested;
      const double brk = 1.0 - std::sqrt(std::abs(bd.c[2]) / std::abs(bd.c[0]));
      const double left = piecewise_dg(bd, brk).value;
      const double right = piecewise_dg(bd, std::nextafter(brk, 1.0)).value;
      CAPTURE(bd.c.transpose());
      CHECK(std::abs(left - right) < 1e-14);
    }
  }
  SUBCASE("ordering precondition is enforced") {
    CHECK_THROWS_AS(piecewise_dg(BellDiag(0.1, 0.6, 0.3), 0.2), std::invalid_argument);
    CHECK_THROWS_AS(piecewise_dg(BellDiag(0.3, 0, 0.6), 0.2), std::invalid_argument);
    CHECK_THROWS_AS(piecewise_dg(BellDiag(0, 0, 0), 0.2), std::invalid_argument);
  }
}

TEST_CASE("sudden change point") {
  CHECK(sudden_change_point(BellDiag(0.6, 0, 0.3)).value() ==
        doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-15));
  CHECK(!sudden_change_point(BellDiag(0.3, 0, 0.6)).has_value());
  CHECK(!sudden_change_point(BellDiag(0.6, 0, 0)).has_value());
  // Relabeling: the larger of |c1|, |c2| plays the role of c1.
  CHECK(sudden_change_point(BellDiag(0, 0.6, 0.3)).value() ==
        doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-15));
  // Axis tie |c1| = |c3| reports none.
  CHECK(!sudden_change_point(BellDiag(0.5, 0, 0.5)).has_value());
  CHECK(!sudden_change_point(BellDiag(0.5, 0, -0.5)).has_value());
}

TEST_CASE("freezing interval") {
  SUBCASE("reference state freezes until the breakpoint") {
    const auto f = freezing_interval(BellDiag(0.6, 0, 0.3));
    REQUIRE(f.has_value());
    CHECK(f->p_lo == 0.0);
    CHECK(f->p_hi == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-15));
    CHECK(f->value == doctest::Approx(0.0225).epsilon(1e-15));
    // Constant along the interval, exactly.
    for (double p = 0.0; p < f->p_hi; p += f->p_hi / 50)
      CHECK(piecewise_dg(BellDiag(0.6, 0, 0.3), p).value == 0.0225);
  }
  SUBCASE("c2 != 0 decays immediately") {
    CHECK(!freezing_interval(BellDiag(0.6, 0.1, 0.3)).has_value());
  }
  SUBCASE("c3 = 0 would freeze at zero, excluded") {
    CHECK(!freezing_interval(BellDiag(0.6, 0, 0)).has_value());
  }
  SUBCASE("axis relabeling applies to the first two axes and is recorded") {
    const auto f = freezing_interval(BellDiag(0, 0.6, 0.3));
    REQUIRE(f.has_value());
    CHECK(f->value == doctest::Approx(0.0225).epsilon(1e-15));
    CHECK(f->axes_swapped);
    CHECK(!freezing_interval(BellDiag(0.6, 0, 0.3))->axes_swapped);
  }
  SUBCASE("|c1| = |c3| ties report none") {
    CHECK(!freezing_interval(BellDiag(0.5, 0, 0.5)).has_value());
  }
}

TEST_CASE("frozen initial states are separable") {
  SUBCASE("reference values") {
    const SeparabilityProof proof = frozen_initial_is_separable(BellDiag(0.6, 0, 0.3));
    CHECK(proof.separable);
    CHECK(proof.concurrence == 0.0);
    CHECK(proof.lambda1 == doctest::Approx(-0.025).epsilon(1e-15));
    CHECK(proof.lambda2 == doctest::Approx(-0.175).epsilon(1e-15));
    CHECK(proof.min_pt_eigenvalue >= -1e-12);
  }
  SUBCASE("more frozen states") {
    CHECK(frozen_initial_is_separable(BellDiag(0.9, 0, 0.1)).separable);
    CHECK(frozen_initial_is_separable(BellDiag(-0.8, 0, 0.15)).separable);
    CHECK(frozen_initial_is_separable(BellDiag(0.7, 0, -0.2)).separable);
  }
  SUBCASE("precondition failure throws") {
    CHECK_THROWS_AS(frozen_initial_is_separable(BellDiag(0.6, 0.1, 0.3)), std::invalid_argument);
    CHECK_THROWS_AS(frozen_initial_is_separable(BellDiag(1, 0, 0)), std::invalid_argument);
  }
  SUBCASE("random frozen states scan") {
    Rng rng(511);
    int tested = 0;
    while (tested < 500) {
      const double c1 = rng.uniform(-1.0, 1.0), c3 = rng.uniform(-1.0, 1.0);
      const BellDiag bd(c1, 0, c3);
      if (!is_physical(bd) || !(std::abs(c1) > std::abs(c3) && std::abs(c3) > 0)) continue;
      ++tested;
      CAPTURE(c1);
      CAPTURE(c3);
      CHECK(frozen_initial_is_separable(bd).separable);
    }
  }
}

TEST_CASE("kink detector") {
  SUBCASE("finds the breakpoint of the frozen D_G curve") {
    const BellDiag c0(0.6, 0, 0.3);
    std::vector<double> ps, fs;
    for (double p = 0.0; p <= 0.8; p += 1e-3) {
      ps.push_back(p);
      fs.push_back(piecewise_dg(c0, p).value);
    }
    const auto kink = detect_slope_kink(ps, fs);
    REQUIRE(kink.has_value());
    CHECK(std::abs(*kink - (1.0 - std::sqrt(0.5))) <= 2e-3);
  }
  SUBCASE("smooth curves report none") {
    std::vector<double> ps, fs;
    for (double p = 0.0; p <= 1.0; p += 1e-3) {
      ps.push_back(p);
      fs.push_back(std::exp(-2.0 * p));
    }
    CHECK(!detect_slope_kink(ps, fs).has_value());
  }
  SUBCASE("constant curves report none") {
    std::vector<double> ps(100), fs(100, 0.25);
    for (int i = 0; i < 100; ++i) ps[i] = i * 1e-3;
    CHECK(!detect_slope_kink(ps, fs).has_value());
  }
  SUBCASE("needs enough samples") {
    std::vector<double> ps{0, 0.1, 0.2}, fs{0, 1, 2};
    CHECK_THROWS_AS(detect_slope_kink(ps, fs), std::invalid_argument);
  }
}

TEST_CASE("D and D_G kink simultaneously along the frozen trajectory") {
  const BellDiag c0(0.6, 0, 0.3);
  const double h = 1e-3;
  std::vector<double> ps, dgs, ds;
  for (double p = 0.0; p <= 0.9 + 1e-12; p += h) {
    ps.push_back(p);
    const double q2 = (1.0 - p) * (1.0 - p);
    const BellDiag evolved(q2 * c0.c[0], 0, c0.c[2]);
    dgs.push_back(geometric_discord_belldiag(evolved));
    ds.push_back(quantum_discord_belldiag(evolved));
  }
  const auto dg_kink = detect_slope_kink(ps, dgs);
  const auto d_kink = detect_slope_kink(ps, ds);
  REQUIRE(dg_kink.has_value());
  REQUIRE(d_kink.has_value());
  CHECK(std::abs(*dg_kink - *d_kink) <= h + 1e-12);
  CHECK(std::abs(*dg_kink - (1.0 - std::sqrt(0.5))) <= 2 * h);
}
