#include "rhwarp/augment.hpp"

#include <cmath>
#include <random>

#include "rhwarp/error.hpp"

namespace rhwarp {

namespace {

constexpr double kDeg = kPi / 180.0;

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng); }

Mat3 scale_matrix(double f) { return Vec3(f, f, 1.0).asDiagonal(); }

}  // namespace

void AugConfig::validate() const {
  if (!(scale_lo > 0.0) || !(scale_lo <= scale_hi) || !std::isfinite(scale_hi))
    fail(ErrorKind::invalid_argument, "AugConfig: scale range must satisfy 0 < lo <= hi");
  if (!(roll_lo_deg <= roll_hi_deg) || !std::isfinite(roll_lo_deg) || !std::isfinite(roll_hi_deg))
    fail(ErrorKind::invalid_argument, "AugConfig: roll range must satisfy lo <= hi");
  if (!(tilt_max_deg >= 0.0 && tilt_max_deg < 90.0))
    fail(ErrorKind::invalid_argument, "AugConfig: tilt_max_deg must lie in [0, 90)");
}

Rotation3 roll_rotation(double angle) { return Rotation3::axis_angle(kE2, angle); }

Rotation3 aug_rotation(double roll, PYVec tilt_alpha) { return exp_py(tilt_alpha) * roll_rotation(roll); }

Homography aug_homography(const Camera& cam, double f, double roll, PYVec tilt_alpha) {
  return Homography(cam.K() * scale_matrix(f) * aug_rotation(roll, tilt_alpha).matrix() * cam.K_inv());
}

AugFactors aug_factors(const Camera& cam, const AugSample& a) {
  return {Homography(cam.K() * scale_matrix(a.f) * cam.K_inv()),
          Homography(cam.K() * exp_py(a.tilt_alpha).matrix() * cam.K_inv()),
          Homography(cam.K() * roll_rotation(a.roll).matrix() * cam.K_inv())};
}

AugSample sample_aug(const AugConfig& cfg, std::uint64_t index, const Camera& cam) {
  cfg.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  AugSample a;
  a.f = uniform(rng, cfg.scale_lo, cfg.scale_hi);
  a.roll = uniform(rng, cfg.roll_lo_deg, cfg.roll_hi_deg) * kDeg;
  const double radius = uniform(rng, 0.0, cfg.tilt_max_deg) * kDeg;
  const double direction = uniform(rng, 0.0, 2.0 * kPi);
  a.tilt_alpha = {radius * std::cos(direction), radius * std::sin(direction)};
  a.H = aug_homography(cam, a.f, a.roll, a.tilt_alpha);
  return a;
}

std::pair<Raster, ObjectPose> apply_aug_p2(const Raster& img, const ObjectPose& label, const Camera& cam,
                                           const AugSample& a, kernels::Isa isa) {
  if (img.width() != cam.width() || img.height() != cam.height())
    fail(ErrorKind::invalid_argument, "apply_aug_p2: image size does not match camera");
  Raster out = warp_by_homography(img, a.H, cam.height(), cam.width(), isa);
  ObjectPose pose = object_pose_relabel(label, aug_rotation(a.roll, a.tilt_alpha));
  pose.t.z() /= a.f;
  return {std::move(out), pose};
}

std::pair<PYPoseTarget, Rotation3> apply_aug_py(const PYPoseTarget& tgt, const Rotation3& R_obj,
                                                const AugSample& a) {
  const double c = std::cos(a.roll);
  const double s = std::sin(a.roll);
  PYVec alpha{c * tgt.alpha.a0 - s * tgt.alpha.a1, s * tgt.alpha.a0 + c * tgt.alpha.a1};
  Rotation3 R = roll_rotation(a.roll) * R_obj;

  alpha = alpha + a.tilt_alpha;
  R = exp_py(a.tilt_alpha) * R;

  R = exp_py((1.0 - a.f) * alpha) * R;
  alpha = a.f * alpha;
  if (!(alpha.norm() < kPi / 2.0)) fail(ErrorKind::out_of_domain, "apply_aug_py: |f alpha| >= pi/2");
  return {PYPoseTarget{alpha, tgt.s / a.f}, R};
}

double scale_rule_discrepancy(const Vec3& t, double f) {
  const Vec3 p2(t.x(), t.y(), t.z() / f);
  const PYPoseTarget tgt = target_to_py(t);
  const Vec3 py = (tgt.s / f) * exp_py_e2(f * tgt.alpha);
  return (p2 - py).norm();
}

}  // namespace rhwarp
