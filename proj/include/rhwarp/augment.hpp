#pragma once

// Rotational-homography augmentation: scale, roll and tilt combined into a
// single homography H = K diag(f, f, 1) R_tilt R_roll K^-1 together with the
// matching label updates.

#include <cstdint>
#include <utility>

#include "rhwarp/pywarp.hpp"

namespace rhwarp {

struct AugConfig {
  double scale_lo = 0.7;
  double scale_hi = 1.3;
  double roll_lo_deg = -45.0;
  double roll_hi_deg = 45.0;
  double tilt_max_deg = 20.0;
  std::uint64_t seed = 0;

  /// Throws ErrorKind::invalid_argument on empty ranges, f <= 0 or a tilt
  /// bound outside [0, 90).
  void validate() const;
};

struct AugSample {
  double f = 1.0;
  double roll = 0.0;  // radians, about the optical axis
  PYVec tilt_alpha;
  Homography H;
};

/// Rotation about e2 by `angle`.
Rotation3 roll_rotation(double angle);

/// R_tilt R_roll
Rotation3 aug_rotation(double roll, PYVec tilt_alpha);

/// K diag(f, f, 1) R_tilt R_roll K^-1
Homography aug_homography(const Camera& cam, double f, double roll, PYVec tilt_alpha);

struct AugFactors {
  Homography scale;  // K diag(f, f, 1) K^-1
  Homography tilt;   // K R_tilt K^-1
  Homography roll;   // K R_roll K^-1
};

AugFactors aug_factors(const Camera& cam, const AugSample& a);

/// Deterministic in (cfg.seed, index). Draw order: f, roll, tilt radius,
/// tilt direction.
AugSample sample_aug(const AugConfig& cfg, std::uint64_t index, const Camera& cam);

/// Image warped by a.H into the camera's raster; pose relabelled by
/// R_tilt R_roll, then t2 -> t2 / f.
std::pair<Raster, ObjectPose> apply_aug_p2(const Raster& img, const ObjectPose& label, const Camera& cam,
                                           const AugSample& a, kernels::Isa isa = kernels::best());

/// Label update in PY form, roll then tilt then scale:
///   roll:  alpha rotated by the roll angle, R -> R_roll R
///   tilt:  alpha += tilt_alpha,             R -> exp(tilt_alpha) R
///   scale: (alpha, s) -> (f alpha, s / f),  R -> exp(alpha (1 - f)) R
/// Throws ErrorKind::out_of_domain when the final |alpha| >= pi/2.
std::pair<PYPoseTarget, Rotation3> apply_aug_py(const PYPoseTarget& tgt, const Rotation3& R_obj,
                                                const AugSample& a);

/// |t_p2 - t_py| for a pure rescale by f of an object at t: the P^2 rule
/// (t0, t1, t2 / f) against the PY rule (s / f) exp(f alpha) e2.
double scale_rule_discrepancy(const Vec3& t, double f);

}  // namespace rhwarp
