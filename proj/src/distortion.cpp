#include "rhwarp/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rhwarp/camera.hpp"
#include "rhwarp/error.hpp"

namespace rhwarp {

namespace {

Vec3 lift(const Vec2& v) { return {v.x(), v.y(), 0.0}; }

double fit_slope(const std::vector<double>& h, const std::vector<double>& r) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(r[i] > 10.0 * std::numeric_limits<double>::epsilon())) continue;
    const double x = std::log(h[i]);
    const double y = std::log(r[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

SpherePoint psi(PYVec alpha, const SpherePoint& theta) { return exp_py(alpha) * theta; }

SpherePoint phi_act(PYVec alpha, const SpherePoint& theta) {
  return phi_map(alpha + min_py_log(theta)).p;
}

SpherePoint chi_act(PYVec alpha, const SpherePoint& theta) {
  if (!(theta.z() > 0.0)) fail(ErrorKind::behind_camera, "chi_act: theta must lie on the upper hemisphere");
  return unproject(project(theta) + t_of_alpha(alpha));
}

Vec2 t_of_alpha(PYVec alpha) { return py_to_plane(alpha); }

Vec2 t_linear(PYVec alpha) { return {alpha.a1, -alpha.a0}; }

const char* to_string(Action a) { return a == Action::py ? "py" : "translation"; }

void GridSpec::validate() const {
  if (rows < 2 || cols < 2) fail(ErrorKind::invalid_argument, "GridSpec: need at least 2x2 samples");
  if (!(radius > 0.0) || !std::isfinite(radius)) fail(ErrorKind::invalid_argument, "GridSpec: radius must be positive");
}

Vec2 GridSpec::q_at(int row, int col) const {
  return {-radius + 2.0 * radius * col / (cols - 1), -radius + 2.0 * radius * row / (rows - 1)};
}

SphereField error_field(PYVec alpha, Action which, const GridSpec& grid) {
  grid.validate();
  SphereField f;
  f.grid = grid;
  f.which = which;
  const std::size_t n = static_cast<std::size_t>(grid.rows) * grid.cols;
  f.coords.assign(n, Vec2::Constant(std::numeric_limits<double>::quiet_NaN()));
  f.error.assign(n, std::numeric_limits<double>::quiet_NaN());
  f.valid.assign(n, 0);
  const Rotation3 R = exp_py(alpha);
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * grid.cols + c;
      const Vec2 q = grid.q_at(r, c);
      const SpherePoint theta = exp_py_e2(from_warp_coords(q));
      if (which == Action::py) f.coords[i] = q;
      try {
        SpherePoint moved;
        if (which == Action::py) {
          moved = phi_act(alpha, theta);
        } else {
          if (!(q.norm() < kPi / 2.0)) continue;
          f.coords[i] = project(theta);
          moved = chi_act(alpha, theta);
        }
        f.error[i] = (moved - R * theta).norm();
        f.valid[i] = 1;
      } catch (const Error&) {
        f.error[i] = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
  return f;
}

double window_mean(const SphereField& field, double window) {
  double sum = 0.0;
  std::size_t count = 0;
  for (int r = 0; r < field.grid.rows; ++r) {
    for (int c = 0; c < field.grid.cols; ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * field.grid.cols + c;
      if (!field.valid[i] || field.grid.q_at(r, c).norm() > window) continue;
      sum += field.error[i];
      ++count;
    }
  }
  if (count == 0) fail(ErrorKind::precondition, "window_mean: no valid samples in window");
  return sum / static_cast<double>(count);
}

FovComparison compare_fov(PYVec alpha, double window, int n) {
  const GridSpec grid{n, n, window};
  FovComparison out;
  out.mean_py = window_mean(error_field(alpha, Action::py, grid), window);
  out.mean_translation = window_mean(error_field(alpha, Action::translation, grid), window);
  return out;
}

const char* to_string(TaylorProp p) {
  switch (p) {
    case TaylorProp::p10: return "p10";
    case TaylorProp::p12: return "p12";
    case TaylorProp::p14: return "p14";
    case TaylorProp::eq9: return "eq9";
  }
  return "unknown";
}

TaylorResult taylor_order(TaylorProp prop, const TaylorCase& dirs, const std::vector<double>& h) {
  if (h.size() < 2) fail(ErrorKind::invalid_argument, "taylor_order: need at least two step sizes");
  TaylorResult res;
  res.dirs = dirs;
  res.h = h;
  for (double hi : h) {
    const PYVec alpha = PYVec::from(hi * dirs.a);
    const PYVec beta = PYVec::from(hi * dirs.b);
    double err = 0.0;
    double resid = 0.0;
    switch (prop) {
      case TaylorProp::p10: {
        const SpherePoint theta = exp_py_e2(beta);
        err = (phi_act(alpha, theta) - psi(alpha, theta)).norm();
        const Mat3 A = py_matrix(alpha);
        const Mat3 B = py_matrix(beta);
        const double lead = ((A * B - B * A) * (A + 2.0 * B) * kE2).norm() / 6.0;
        resid = std::abs(err - lead);
        break;
      }
      case TaylorProp::p12: {
        const SpherePoint theta = exp_py_e2(beta);
        const Vec3 d = chi_act(alpha, theta) - psi(alpha, theta);
        const Vec3 t = lift(t_of_alpha(alpha));
        const Vec3 a = lift(alpha.vec());
        const Vec3 theta_hat(theta.x(), theta.y(), 0.0);
        const Vec3 expr = -t.dot(theta) * (t + theta_hat) - 0.5 * theta.dot(a) * a +
                          (theta.z() - 1.0) * t.squaredNorm() / 2.0 * kE2;
        err = d.norm();
        resid = (d - expr).norm();
        break;
      }
      case TaylorProp::p14: {
        const Vec2 t = t_of_alpha(alpha);
        const Vec2 tn = t.normalized();
        const Vec2 u = -t / 2.0 + dirs.offset * Vec2(-tn.y(), tn.x());
        const SpherePoint theta = unproject(u);
        err = (chi_act(alpha, theta) - psi(alpha, theta)).norm();
        resid = std::abs(err - 0.25 * theta.z() * alpha.vec().squaredNorm());
        break;
      }
      case TaylorProp::eq9: {
        err = (t_of_alpha(alpha) - t_linear(alpha)).norm();
        resid = err;
        break;
      }
    }
    res.error.push_back(err);
    res.residual.push_back(resid);
  }
  const std::size_t largest = static_cast<std::size_t>(std::max_element(h.begin(), h.end()) - h.begin());
  res.exact = res.residual[largest] < 1e-13;
  res.error_slope = fit_slope(h, res.error);
  if (res.exact) {
    res.residual_slope = std::numeric_limits<double>::quiet_NaN();
  } else {
    res.residual_slope = fit_slope(h, res.residual);
  }
  return res;
}

std::vector<TaylorCase> default_taylor_cases() {
  const double pairs[5][3] = {
      {0.0, kPi / 2.0, 0.7}, {0.3, 2.0, 0.3}, {1.1, -0.7, 1.5}, {2.5, 0.9, -0.6}, {-1.8, 0.4, 1.0},
  };
  std::vector<TaylorCase> out;
  for (const auto& p : pairs)
    out.push_back({Vec2(std::cos(p[0]), std::sin(p[0])), Vec2(std::cos(p[1]), std::sin(p[1])), p[2]});
  return out;
}

TaylorReport taylor_order_check(TaylorProp prop, const std::vector<TaylorCase>& cases, const std::vector<double>& h) {
  TaylorReport rep;
  rep.prop = prop;
  rep.min_slope = std::numeric_limits<double>::infinity();
  rep.max_slope = -std::numeric_limits<double>::infinity();
  for (const TaylorCase& c : cases) {
    TaylorResult r = taylor_order(prop, c, h);
    if (!r.exact) {
      rep.min_slope = std::min(rep.min_slope, r.residual_slope);
      rep.max_slope = std::max(rep.max_slope, r.residual_slope);
    }
    rep.results.push_back(std::move(r));
  }
  return rep;
}

}  // namespace rhwarp
