#include "rhwarp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "rhwarp/augment.hpp"
#include "rhwarp/distortion.hpp"
#include "rhwarp/error.hpp"
#include "rhwarp/pyconv.hpp"
#include "rhwarp/rigidity.hpp"
#include "rhwarp/synth.hpp"

namespace rhwarp {

namespace {

constexpr double kInject = 1e-3;

struct Check {
  const char* name;
  Compare cmp;
  double limit;
  std::function<double(double)> run;  // argument: input perturbation
};

bool compare(double v, Compare c, double limit) {
  switch (c) {
    case Compare::le: return v <= limit;
    case Compare::lt: return v < limit;
    case Compare::ge: return v >= limit;
    case Compare::gt: return v > limit;
    case Compare::eq: return v == limit;
  }
  return false;
}

double rel(const Vec2& a, const Vec2& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

// so3py ------------------------------------------------------------------

double exp_orthonormal(double p) {
  Rng rng(11);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Mat3 m = exp_py(rng.py(0.0, 4.0 * kPi)).matrix();
    m(0, 0) += p;
    worst = std::max(worst, Rotation3::orthonormality_error(m));
  }
  return worst;
}

double exp_commuting(double p) {
  Rng rng(12);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PYVec a = rng.py(0.0, 2.0 * kPi);
    const double t = rng.uniform(-2.0, 2.0);
    const Mat3 lhs = (exp_py(a) * exp_py((t + p) * a)).matrix();
    worst = std::max(worst, (lhs - exp_py((1.0 + t) * a).matrix()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double log_roundtrip(double p) {
  Rng rng(13);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const PYVec a = rng.py(0.0, kPi - 1e-6);
    worst = std::max(worst, (min_py_log(exp_py_e2(a + PYVec{p, 0.0})) - a).vec().norm());
  }
  return worst;
}

double phi_roundtrip(double p) {
  Rng rng(14);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const PYVec a = rng.py(0.0, 4.0 * kPi);
    const double r = a.norm();
    if (std::abs(r - kPi * std::round(r / kPi)) < 1e-6) continue;
    IndexedSpherePoint s = phi_map(a);
    s.p = (s.p + Vec3(p, 0.0, 0.0)).normalized();
    worst = std::max(worst, (phi_inverse(s) - a).vec().norm());
  }
  return worst;
}

double geodesic(double p) {
  Rng rng(15);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const PYVec a = rng.py(0.0, 3.0 * kPi);
    const double t = rng.unit();
    const double s = std::fmod(t * a.norm(), 2.0 * kPi);
    const double expected = s <= kPi ? s : 2.0 * kPi - s;
    worst = std::max(worst, std::abs(sphere_distance(exp_py_e2(t * a), kE2) + p - expected));
  }
  return worst;
}

double py_to_plane_check(double p) {
  Rng rng(16);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const PYVec a = rng.py(0.0, 1.5);
    const Vec3 x = exp_py(a).matrix() * kE2;
    worst = std::max(worst, rel(py_to_plane(a) + Vec2(p, 0.0), project(x)));
  }
  return worst;
}

// camera -----------------------------------------------------------------

double project_unproject(double p) {
  Rng rng(21);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Vec2 u(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0));
    worst = std::max(worst, rel(project(unproject(u) + Vec3(p, 0.0, 0.0)), u));
  }
  return worst;
}

double unproject_upper(double p) {
  Rng rng(22);
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10000; ++i) {
    const Vec2 u(rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3));
    lowest = std::min(lowest, unproject(u).z() - p);
  }
  return lowest;
}

double rh_composition(double p) {
  Rng rng(23);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Camera cam = rng.camera();
    const Rotation3 r1 = rng.rotation();
    const Rotation3 r2 = rng.rotation();
    Mat3 lhs = (rotational_homography(cam, r1, cam) * rotational_homography(cam, r2, cam)).matrix();
    lhs(0, 0) *= 1.0 + p;
    worst = std::max(worst, projective_distance(lhs, rotational_homography(cam, r1 * r2, cam).matrix()));
  }
  return worst;
}

double rh_principal_point(double p) {
  Rng rng(24);
  const Camera cam(Mat3::Identity(), 2, 2);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const PYVec a = rng.py(0.0, 1.5);
    const Vec2 y = apply_homography(rotational_homography(cam, exp_py(a), cam), Vec2(p, 0.0));
    worst = std::max(worst, rel(y, project(exp_py_e2(a))));
  }
  return worst;
}

double relabel_reprojection(double p) {
  Rng rng(25);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Camera cam = rng.camera();
    const Rotation3 R_aug = exp_py(rng.py(0.0, 0.4)) * Rotation3::axis_angle(kE2, rng.uniform(-kPi, kPi));
    const CameraPose pose{rng.rotation(), Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1))};
    const Homography H = rotational_homography(cam, R_aug, cam);
    Vec3 x;
    do {
      x = pose.c + pose.R.transpose() * Vec3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(1, 10));
    } while ((R_aug * (pose.R * (x - pose.c))).z() <= 0.1);
    const Vec2 warped = apply_homography(H, project_pixel(cam, pose, x));
    const CameraPose moved = relabel_pose(pose, R_aug);
    worst = std::max(worst, rel(warped + Vec2(p, 0.0), project_pixel(cam, moved, x)));
  }
  return worst;
}

// rigidity ---------------------------------------------------------------

double witness_min_cross(double p) {
  Rng rng(31);
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const Vec3 v = rng.direction() * rng.uniform(1e-3, 10.0);
    const RigidMotion rho{rng.rotation(), v};
    const RigidityWitness w = rigidity_witness(rho, static_cast<std::uint64_t>(i));
    const Vec3 a = rho(w.u);
    const Vec3 b = rho(w.lambda * w.u) * (1.0 - p);
    lowest = std::min(lowest, a.cross(b).norm());
  }
  return lowest;
}

double sset_grid(double p) {
  const SSetResult r = sset_solve(Vec2(1.0, 0.0), RigidMotion{Rotation3(), kE0});
  SSetResult shifted = r;
  for (EigenCase& c : shifted.cases)
    if (c.basepoint) *c.basepoint += Vec3(0.0, 0.0, p);
  return sset_grid_check(shifted, 101, 5.0, 1e-6).max_distance;
}

double sset_rank1_kernel(double p) {
  Rng rng(33);
  double worst = 0.0;
  const Vec3 n(p, 0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Vec2 tau(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const RigidMotion rho{Rotation3::axis_angle(kE2, i == 0 ? 0.0 : rng.uniform(-kPi, kPi)), rng.direction()};
    for (const EigenCase& c : sset_solve(tau, rho).cases) {
      if (c.rank != 1) continue;
      for (const Vec3& d : c.directions) worst = std::max(worst, std::abs(d.dot(n.normalized())));
    }
  }
  return worst;
}

double sset_eigen_count(double) {
  Rng rng(34);
  std::size_t most = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vec2 tau(rng.uniform(-2, 2), rng.uniform(-2, 2));
    most = std::max(most, sset_solve(tau, RigidMotion{rng.rotation(), rng.direction()}).eigenvalues.size());
  }
  return static_cast<double>(most);
}

double sset_curve_continuity(double p) {
  Rng rng(35);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const SSetResult r = sset_solve(Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2)), RigidMotion{rng.rotation(), rng.direction()});
    const double lambda = rng.uniform(-10.0, 10.0);
    bool near = false;
    for (double m : r.eigenvalues) near |= std::abs(lambda - m) < 0.1;
    if (near) continue;
    worst = std::max(worst, (r.curve_at(lambda) - r.curve_at(lambda + 1e-6 + p)).norm());
  }
  return worst;
}

double sset_curve_equation(double p) {
  Rng rng(36);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Vec2 tau(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const RigidMotion rho{rng.rotation(), rng.direction()};
    const SSetResult r = sset_solve(tau, rho);
    for (const CurveSample& s : r.curve) {
      const Vec3 x = s.point + Vec3(p, 0.0, 0.0);
      if (!(x.z() > 1e-3) || !(std::abs(rho(x).z()) > 1e-3)) continue;
      if (x.norm() > 1e3) continue;
      worst = std::max(worst, sset_residual(tau, rho, x) / std::max(1.0, project(x).norm()));
    }
  }
  return worst;
}

// pywarp -----------------------------------------------------------------

Camera fixture_camera() {
  Mat3 K;
  K << 150.0, 0.0, 79.5, 0.0, 150.0, 59.5, 0.0, 0.0, 1.0;
  return Camera(K, 160, 120);
}

double interior_mae(const Raster& a, const Raster& b, int border) {
  double sum = 0.0;
  std::size_t n = 0;
  for (int y = border; y < a.height() - border; ++y)
    for (int x = border; x < a.width() - border; ++x) {
      if (!a.valid(y, x) || !b.valid(y, x)) continue;
      for (int c = 0; c < a.channels(); ++c) sum += std::abs(a.at(c, y, x) - b.at(c, y, x));
      n += static_cast<std::size_t>(a.channels());
    }
  if (n == 0) fail(ErrorKind::precondition, "no interior pixels");
  return sum / static_cast<double>(n);
}

double py_roundtrip(double p) {
  const Camera cam = fixture_camera();
  Raster img = smooth_image(cam.height(), cam.width(), 1, 7);
  const Raster py = warp_to_py(img, cam, 160, 200);
  Raster back = warp_from_py(py, cam, cam.height(), cam.width());
  back.at(0, cam.height() / 2, cam.width() / 2) += p * 1e4;
  return interior_mae(back, img, 2);
}

double py_mask_consistency(double p) {
  const Camera cam = fixture_camera();
  const Affine2 grid = fit_py_grid(cam, 160, 200);
  const Raster py = warp_to_py(Raster(cam.height(), cam.width(), 1), cam, 160, 200, grid);
  std::size_t bad = 0;
  for (int y = 0; y < py.height(); ++y)
    for (int x = 0; x < py.width(); ++x) {
      if (!py.valid(y, x)) continue;
      const Vec2 s = cam.to_pixel(warp_to_plane(grid(Vec2(x, y)))) + Vec2(p * 1e3, 0.0);
      bad += (s.x() >= 0 && s.y() >= 0 && s.x() <= cam.width() - 1 && s.y() <= cam.height() - 1) ? 0 : 1;
    }
  return static_cast<double>(bad);
}

double py_radial_monotone(double p) {
  std::size_t bad = 0;
  for (int k = 0; k < 8; ++k) {
    const double phi = k * kPi / 4.0;
    const Vec2 dir(std::cos(phi), std::sin(phi));
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      const Vec2 u = dir * (i * 0.05) * (1.0 + (i == 500 ? -p * 100 : 0.0));
      const Vec2 q = plane_to_warp(u);
      if (q.norm() <= prev) ++bad;
      if (i > 0 && std::abs(std::atan2(q.y(), q.x()) - std::atan2(u.y(), u.x())) > 1e-12) ++bad;
      prev = q.norm();
    }
  }
  return static_cast<double>(bad);
}

double target_roundtrip(double p) {
  Rng rng(41);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double z = rng.uniform(0.1, 10.0);
    const Vec3 t(rng.uniform(-3.0, 3.0) * z, rng.uniform(-3.0, 3.0) * z, z);
    PYPoseTarget tgt = target_to_py(t);
    tgt.s += p;
    worst = std::max(worst, (target_from_py(tgt) - t).norm() / t.norm());
  }
  return worst;
}

double py_translation_approx(double p) {
  const FovComparison c = compare_fov(PYVec{kPi / 9.0 + p * 100, 0.0}, kPi / 6.0, 101);
  return c.ratio() + p * 1e3;
}

// augment ----------------------------------------------------------------

double aug_determinism(double p) {
  const Camera cam = fixture_camera();
  AugConfig cfg;
  cfg.seed = 1234;
  std::size_t bad = 0;
  const Raster img = smooth_image(cam.height(), cam.width(), 1, 3);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const AugSample a = sample_aug(cfg, i, cam);
    AugSample b = sample_aug(cfg, i, cam);
    b.f += p;
    bad += (a.f == b.f && a.roll == b.roll && a.tilt_alpha == b.tilt_alpha && a.H.matrix() == b.H.matrix()) ? 0 : 1;
    if (i < 3) {
      const ObjectPose pose{Rotation3(), Vec3(0.1, 0.0, 2.0)};
      const auto ra = apply_aug_p2(img, pose, cam, a);
      const auto rb = apply_aug_p2(img, pose, cam, sample_aug(cfg, i, cam));
      bad += (ra.first.data() == rb.first.data() && ra.first.mask() == rb.first.mask()) ? 0 : 1;
    }
  }
  return static_cast<double>(bad);
}

double aug_tilt_reprojection(double p) {
  Rng rng(51);
  const Camera cam = fixture_camera();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    AugSample a;
    a.tilt_alpha = rng.py(0.0, 20.0 * kPi / 180.0);
    a.H = aug_homography(cam, 1.0, 0.0, a.tilt_alpha);
    const ObjectPose pose{rng.rotation(), Vec3(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(2, 5))};
    const Raster dummy(cam.height(), cam.width(), 1);
    const ObjectPose moved = apply_aug_p2(dummy, pose, cam, a).second;
    const Vec3 x = rng.direction() * 0.2;
    const Vec2 warped = apply_homography(a.H, project_pixel(cam, pose, x));
    worst = std::max(worst, (warped + Vec2(p, 0.0) - project_pixel(cam, moved, x)).norm());
  }
  return worst;
}

double aug_factor_product(double p) {
  Rng rng(52);
  const Camera cam = fixture_camera();
  AugConfig cfg;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const AugSample a = sample_aug(cfg, i, cam);
    const AugFactors f = aug_factors(cam, a);
    Mat3 prod = (f.scale * f.tilt * f.roll).matrix();
    prod(0, 1) += p;
    worst = std::max(worst, projective_distance(prod, a.H.matrix()));
  }
  return worst;
}

double aug_scale_rule(double p) {
  std::size_t bad = 0;
  for (double f : {0.7, 0.9, 1.1, 1.3}) {
    if (scale_rule_discrepancy(Vec3(p, 0.0, 3.0), f) != 0.0) ++bad;
    double prev = 0.0;
    for (int i = 1; i <= 50; ++i) {
      const double r = 0.02 * i;
      const double d = scale_rule_discrepancy(Vec3(std::tan(r) * 3.0 * 0.6, std::tan(r) * 3.0 * 0.8, 3.0), f);
      if (!(d > prev)) ++bad;
      prev = d;
    }
  }
  return static_cast<double>(bad);
}

// distortion -------------------------------------------------------------

double actions_unit_norm(double p) {
  Rng rng(61);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const PYVec a = rng.py(0.0, 1.2);
    const SpherePoint th = unproject(Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2)));
    worst = std::max({worst, std::abs(psi(a, th).norm() - 1.0 + p), std::abs(phi_act(a, th).norm() - 1.0),
                      std::abs(chi_act(a, th).norm() - 1.0)});
  }
  return worst;
}

double great_circle(double p) {
  Rng rng(62);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PYVec a = rng.py(0.0, 1.5);
    const SpherePoint th = exp_py_e2(rng.uniform(-1.5, 1.5) * a + PYVec{p, 0.0});
    worst = std::max(worst, (phi_act(a, th) - psi(a, th)).norm());
  }
  return worst;
}

double fixed_point(double p) {
  Rng rng(63);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PYVec a = rng.py(0.0, 1.5);
    const SpherePoint omega = unproject(-t_of_alpha(a) + Vec2(p, 0.0));
    worst = std::max({worst, (chi_act(a, omega) - psi(a, omega)).norm(), (psi(a, omega) - kE2).norm()});
  }
  return worst;
}

double phi_group_action(double p) {
  Rng rng(64);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const PYVec a = rng.py(0.0, 1.0);
    const PYVec b = rng.py(0.0, 1.0);
    const SpherePoint th = exp_py_e2(rng.py(0.0, 1.0));
    const double r = (a + b + min_py_log(th)).norm();
    if (std::abs(r - kPi * std::round(r / kPi)) < 1e-3) continue;
    worst = std::max(worst, (phi_act(b, phi_act(a, th)) - phi_act(a + b + PYVec{p, 0.0}, th)).norm());
  }
  return worst;
}

double fov_ratio(double mag, double p) { return compare_fov(PYVec{mag, 0.0}, kPi / 6.0, 201).ratio() + p * 1e3; }

double taylor_slope(TaylorProp prop, double p) {
  std::vector<double> ladder = kDefaultLadder;
  ladder.back() *= 1.0 + p * 1e3;
  return taylor_order_check(prop, default_taylor_cases(), ladder).min_slope;
}

// pyconv -----------------------------------------------------------------

Raster random_grid(Rng& rng, int h, int w, double spacing) {
  Raster r(h, w, 1, py_grid_with_spacing(spacing, h, w));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) r.at(0, y, x) = rng.uniform(-1.0, 1.0);
  return r;
}

PYKernel random_kernel(Rng& rng, int k, double spacing) {
  PYKernel g;
  g.k = k;
  g.spacing = spacing;
  for (int i = 0; i < k * k; ++i) g.weights.push_back(rng.uniform(-1.0, 1.0));
  return g;
}

double conv_shift(double p) {
  Rng rng(71);
  std::size_t bad = 0;
  const int h = 40, w = 50, dx = 7, dy = -4;
  const Raster F = random_grid(rng, h, w, 0.01);
  Raster S(h, w, 1, F.pix2cal());
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const int sx = x - dx, sy = y - dy;
      const bool in = sx >= 0 && sy >= 0 && sx < w && sy < h;
      S.set_valid(y, x, in);
      S.at(0, y, x) = in ? F.at(0, sy, sx) : 0.0;
    }
  const PYKernel G = random_kernel(rng, 5, 0.02);
  const Raster a = py_convolve(F, G);
  Raster b = py_convolve(S, G);
  b.at(0, h / 2, w / 2) += p;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const int sx = x - dx, sy = y - dy;
      if (sx < 0 || sy < 0 || sx >= w || sy >= h || !a.valid(sy, sx) || !b.valid(y, x)) continue;
      bad += b.at(0, y, x) == a.at(0, sy, sx) ? 0 : 1;
    }
  return static_cast<double>(bad);
}

double conv_sifting(double p) {
  Rng rng(72);
  const Raster F = random_grid(rng, 30, 30, 0.05);
  const PYKernel G = PYKernel::impulse(0.05, 3);
  Raster out = py_convolve(F, G);
  out.at(0, 15, 15) += p;
  std::size_t bad = 0;
  for (int y = 0; y < 30; ++y)
    for (int x = 0; x < 30; ++x)
      if (out.valid(y, x)) bad += out.at(0, y, x) == F.at(0, y, x) * (0.05 * 0.05) ? 0 : 1;
  return static_cast<double>(bad);
}

double conv_linearity(double p) {
  Rng rng(73);
  const Raster F1 = random_grid(rng, 30, 30, 0.01);
  const Raster F2 = random_grid(rng, 30, 30, 0.01);
  const PYKernel G = random_kernel(rng, 3, 0.01);
  const double a = 0.7, b = -1.3;
  Raster mix(30, 30, 1, F1.pix2cal());
  for (int y = 0; y < 30; ++y)
    for (int x = 0; x < 30; ++x) mix.at(0, y, x) = a * F1.at(0, y, x) + b * F2.at(0, y, x) + (x == 3 ? p : 0.0);
  const Raster c1 = py_convolve(F1, G), c2 = py_convolve(F2, G), cm = py_convolve(mix, G);
  double worst = 0.0;
  for (int y = 0; y < 30; ++y)
    for (int x = 0; x < 30; ++x)
      if (cm.valid(y, x)) worst = std::max(worst, std::abs(cm.at(0, y, x) - (a * c1.at(0, y, x) + b * c2.at(0, y, x))));
  return worst;
}

double conv_commutative(double p) {
  // Two finitely supported 5x5 functions embedded with zero margins in a
  // 15x15 grid; F*G and G*F compared at the centre region.
  Rng rng(74);
  const int k = 5, n = 15;
  const PYKernel Fk = random_kernel(rng, k, 0.1), Gk = random_kernel(rng, k, 0.1);
  auto embed = [&](const PYKernel& g) {
    Raster r(n, n, 1, py_grid_with_spacing(0.1, n, n));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) r.at(0, n / 2 - k / 2 + i, n / 2 - k / 2 + j) = g.weights[i * k + j];
    return r;
  };
  PYKernel Fw = Fk;
  Fw.weights[0] += p;
  const Raster a = convolve_raster(embed(Fk), Gk, 1);
  const Raster b = convolve_raster(embed(Gk), Fw, 1);
  double worst = 0.0;
  for (int y = k / 2; y < n - k / 2; ++y)
    for (int x = k / 2; x < n - k / 2; ++x) worst = std::max(worst, std::abs(a.at(0, y, x) - b.at(0, y, x)));
  return worst;
}

double simd_equivalence(double p) {
  if (!kernels::available(kernels::Isa::avx2)) return 0.0;
  Rng rng(75);
  const Raster F = random_grid(rng, 37, 53, 0.01);
  const PYKernel G = random_kernel(rng, 5, 0.02);
  std::size_t bad = 0;
  Raster a = py_convolve(F, G, kernels::Isa::scalar);
  const Raster b = py_convolve(F, G, kernels::Isa::avx2);
  a.at(0, 18, 26) += p;
  bad += a.data() == b.data() ? 0 : 1;
  const Raster t1 = translate(F, Vec2(0.37, -2.61), kernels::Isa::scalar);
  const Raster t2 = translate(F, Vec2(0.37, -2.61), kernels::Isa::avx2);
  bad += t1.data() == t2.data() ? 0 : 1;
  return static_cast<double>(bad);
}

double equivariance_zero(double p) {
  const Camera cam = fixture_camera();
  const Raster img = smooth_image(cam.height(), cam.width(), 1, 5);
  PYKernel G = PYKernel::impulse(0.004, 3);
  G.weights[0] = 0.5;
  const EquivarianceReport r = equivariance_report(img, cam, G, PYVec{p, 0.0});
  return std::max(r.err_py, r.err_p2);
}

const std::vector<Check>& registry() {
  using P = TaylorProp;
  static const std::vector<Check> checks = {
      {"so3py.exp_orthonormal", Compare::le, 1e-12, exp_orthonormal},
      {"so3py.exp_commuting", Compare::le, 1e-12, exp_commuting},
      {"so3py.log_roundtrip", Compare::le, 1e-9, log_roundtrip},
      {"so3py.phi_roundtrip", Compare::le, 1e-9, phi_roundtrip},
      {"so3py.geodesic", Compare::le, 1e-9, geodesic},
      {"so3py.py_to_plane", Compare::le, 1e-12, py_to_plane_check},
      {"camera.project_unproject", Compare::le, 1e-12, project_unproject},
      {"camera.unproject_upper", Compare::gt, 0.0, unproject_upper},
      {"camera.rh_composition", Compare::le, 1e-10, rh_composition},
      {"camera.rh_principal_point", Compare::le, 1e-12, rh_principal_point},
      {"camera.relabel_reprojection", Compare::le, 1e-9, relabel_reprojection},
      {"rigidity.witness_cross", Compare::gt, 1e-6, witness_min_cross},
      {"rigidity.sset_grid", Compare::le, 1e-4, sset_grid},
      {"rigidity.sset_rank1_kernel", Compare::le, 1e-8, sset_rank1_kernel},
      {"rigidity.sset_eigen_count", Compare::le, 3.0, sset_eigen_count},
      {"rigidity.sset_curve_continuity", Compare::le, 1e-3, sset_curve_continuity},
      {"rigidity.sset_curve_equation", Compare::le, 1e-8, sset_curve_equation},
      {"pywarp.roundtrip", Compare::lt, 0.01, py_roundtrip},
      {"pywarp.mask_consistency", Compare::eq, 0.0, py_mask_consistency},
      {"pywarp.radial_monotone", Compare::eq, 0.0, py_radial_monotone},
      {"pywarp.target_roundtrip", Compare::le, 1e-10, target_roundtrip},
      {"pywarp.translation_approx", Compare::lt, 1.0, py_translation_approx},
      {"augment.determinism", Compare::eq, 0.0, aug_determinism},
      {"augment.tilt_reprojection", Compare::le, 1e-6, aug_tilt_reprojection},
      {"augment.factor_product", Compare::le, 1e-10, aug_factor_product},
      {"augment.scale_rule", Compare::eq, 0.0, aug_scale_rule},
      {"distortion.unit_norm", Compare::le, 1e-12, actions_unit_norm},
      {"distortion.great_circle", Compare::le, 1e-12, great_circle},
      {"distortion.fixed_point", Compare::le, 1e-12, fixed_point},
      {"distortion.phi_group_action", Compare::le, 1e-10, phi_group_action},
      {"distortion.fov_ratio_pi9", Compare::lt, 1.0, [](double p) { return fov_ratio(kPi / 9.0, p); }},
      {"distortion.fov_ratio_pi6", Compare::lt, 1.0, [](double p) { return fov_ratio(kPi / 6.0, p); }},
      {"taylor.p10", Compare::ge, 2.7, [](double p) { return taylor_slope(P::p10, p); }},
      {"taylor.p12", Compare::ge, 2.7, [](double p) { return taylor_slope(P::p12, p); }},
      {"taylor.p14", Compare::ge, 2.7, [](double p) { return taylor_slope(P::p14, p); }},
      {"taylor.eq9", Compare::ge, 2.7, [](double p) { return taylor_slope(P::eq9, p); }},
      {"pyconv.shift_equivariance", Compare::eq, 0.0, conv_shift},
      {"pyconv.impulse_sifting", Compare::eq, 0.0, conv_sifting},
      {"pyconv.linearity", Compare::le, 1e-12, conv_linearity},
      {"pyconv.commutativity", Compare::le, 1e-12, conv_commutative},
      {"pyconv.simd_equivalence", Compare::eq, 0.0, simd_equivalence},
      {"pyconv.equivariance_zero", Compare::le, 1e-6, equivariance_zero},
  };
  return checks;
}

}  // namespace

const char* to_string(Compare c) {
  switch (c) {
    case Compare::le: return "<=";
    case Compare::lt: return "<";
    case Compare::ge: return ">=";
    case Compare::gt: return ">";
    case Compare::eq: return "==";
  }
  return "?";
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const Check& c : registry()) out.emplace_back(c.name);
  return out;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  const auto& checks = registry();
  if (!opts.inject.empty() &&
      std::none_of(checks.begin(), checks.end(), [&](const Check& c) { return opts.inject == c.name; }))
    fail(ErrorKind::invalid_argument, "verify: unknown check \"" + opts.inject + "\"");

  std::vector<CheckResult> out;
  for (const Check& c : checks) {
    if (std::string(c.name).find(opts.filter) == std::string::npos) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = c.name;
    r.cmp = c.cmp;
    r.limit = c.limit;
    try {
      r.value = c.run(opts.inject == c.name ? kInject : 0.0);
      r.pass = compare(r.value, c.cmp, c.limit);
    } catch (const Error&) {
      r.value = std::numeric_limits<double>::quiet_NaN();
      r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(r);
  }
  if (out.empty()) fail(ErrorKind::invalid_argument, "verify: filter \"" + opts.filter + "\" selects no checks");
  return out;
}

}  // namespace rhwarp
