#pragma once

// Three actions of a pitch-yaw alpha on the sphere and the distortion
// between them:
//   psi_alpha(theta) = exp(alpha) theta                     (rotation)
//   phi_alpha(theta) = exp(alpha + log(theta)) e2            (PY translation)
//   chi_alpha(theta) = pi^-1(pi(theta) + t), t = pi(exp(alpha) e2)
//                                                           (image translation)
// Distances are chord lengths on the unit sphere.

#include <cstdint>
#include <vector>

#include "rhwarp/so3py.hpp"

namespace rhwarp {

SpherePoint psi(PYVec alpha, const SpherePoint& theta);

/// Throws ErrorKind::degenerate for theta = -e2 and non_injective when
/// |alpha + min_py_log(theta)| is a positive multiple of pi.
SpherePoint phi_act(PYVec alpha, const SpherePoint& theta);

/// Throws ErrorKind::behind_camera for theta2 <= 0 and out_of_domain for
/// |alpha| >= pi/2.
SpherePoint chi_act(PYVec alpha, const SpherePoint& theta);

/// Exact image translation pi(exp(alpha) e2); |alpha| < pi/2.
Vec2 t_of_alpha(PYVec alpha);

/// First-order part (a1, -a0) of t_of_alpha.
Vec2 t_linear(PYVec alpha);

enum class Action { py, translation };

const char* to_string(Action a);

/// rows x cols samples of warp coordinates q over [-radius, radius]^2;
/// sample theta = exp_py(from_warp_coords(q)) e2.
struct GridSpec {
  int rows = 201;
  int cols = 201;
  double radius = kPi / 2.0;

  /// Throws ErrorKind::invalid_argument on nonpositive sizes or radius.
  void validate() const;
  Vec2 q_at(int row, int col) const;
};

struct SphereField {
  GridSpec grid;
  Action which = Action::py;
  std::vector<Vec2> coords;  // q for py, pi(theta) for translation (undefined if invalid)
  std::vector<double> error;
  std::vector<std::uint8_t> valid;
};

/// Pointwise |action(alpha, theta) - psi(alpha, theta)|. Points where the
/// action is undefined (|q| >= pi/2 for translation) are invalid.
SphereField error_field(PYVec alpha, Action which, const GridSpec& grid = {});

/// Mean error over valid samples with |q| <= window.
double window_mean(const SphereField& field, double window);

struct FovComparison {
  double mean_py = 0.0;
  double mean_translation = 0.0;
  double ratio() const { return mean_py / mean_translation; }
};

/// Both fields over the same sphere samples |q| <= window.
FovComparison compare_fov(PYVec alpha, double window = kPi / 6.0, int n = 201);

enum class TaylorProp { p10, p12, p14, eq9 };

const char* to_string(TaylorProp p);

/// One direction pair: alpha = h a, beta = h b (p10, p12; theta =
/// exp(beta) e2 for p12). For p14 theta is the point of G at signed
/// distance `offset` from -t/2 along t's normal; eq9 uses only a.
struct TaylorCase {
  Vec2 a = Vec2::UnitX();
  Vec2 b = Vec2::UnitY();
  double offset = 0.7;
};

struct TaylorResult {
  TaylorCase dirs;
  std::vector<double> h;
  std::vector<double> error;     // measured |action - psi| (|t - t_linear| for eq9)
  std::vector<double> residual;  // error minus the leading-order expression
  bool exact = false;            // residual < 1e-13 at the largest h
  double residual_slope = 0.0;   // least-squares slope of log residual vs log h
  double error_slope = 0.0;      // same for the raw error
};

TaylorResult taylor_order(TaylorProp prop, const TaylorCase& dirs, const std::vector<double>& h);

/// Five fixed non-parallel direction pairs.
std::vector<TaylorCase> default_taylor_cases();

inline const std::vector<double> kDefaultLadder = {0.2, 0.1, 0.05, 0.025};

struct TaylorReport {
  TaylorProp prop = TaylorProp::p10;
  std::vector<TaylorResult> results;
  double min_slope = 0.0;  // over non-exact results
  double max_slope = 0.0;
};

TaylorReport taylor_order_check(TaylorProp prop, const std::vector<TaylorCase>& cases = default_taylor_cases(),
                                const std::vector<double>& h = kDefaultLadder);

}  // namespace rhwarp
