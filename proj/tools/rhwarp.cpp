// rhwarp: command-line front end.
//
// Exit codes: 0 success, 2 bad arguments or unreadable input, 3 domain or
// precondition error, 4 verification failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rhwarp/augment.hpp"
#include "rhwarp/distortion.hpp"
#include "rhwarp/error.hpp"
#include "rhwarp/io.hpp"
#include "rhwarp/rigidity.hpp"
#include "rhwarp/verify.hpp"

namespace fs = std::filesystem;
using namespace rhwarp;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgs = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

std::vector<double> parse_list(const std::string& text, std::size_t n, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::invalid_argument, std::string(what) + ": cannot parse \"" + item + "\"");
    }
  }
  if (out.size() != n)
    fail(ErrorKind::invalid_argument, std::string(what) + ": expected " + std::to_string(n) + " comma-separated numbers");
  return out;
}

std::pair<int, int> parse_size(const std::string& text, const char* what) {
  const auto x = text.find('x');
  int a = 0, b = 0;
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t ua = 0, ub = 0;
    a = std::stoi(text.substr(0, x), &ua);
    b = std::stoi(text.substr(x + 1), &ub);
    if (ua != x || ub != text.size() - x - 1) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    fail(ErrorKind::invalid_argument, std::string(what) + ": expected AxB, got \"" + text + "\"");
  }
  if (a < 2 || b < 2) fail(ErrorKind::invalid_argument, std::string(what) + ": sizes must be at least 2");
  return {a, b};
}

fs::path sidecar_path(const fs::path& image) {
  fs::path p = image;
  return p.replace_extension(".pix2cal.json");
}

std::vector<std::uint8_t> read_mask(const fs::path& path, int w, int h) {
  const Raster m = io::read_png(path);
  if (m.width() != w || m.height() != h) fail(ErrorKind::invalid_argument, "mask size does not match image");
  std::vector<std::uint8_t> out(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out[static_cast<std::size_t>(y) * w + x] = m.at(0, y, x) >= 0.5 ? 1 : 0;
  return out;
}

// warp ---------------------------------------------------------------------

struct WarpArgs {
  std::string in, camera, out, size, direction = "to-py", mask, in_mask;
};

int cmd_warp(const WarpArgs& a) {
  const Camera cam = io::camera_from_json(io::read_json(a.camera));
  Raster img = io::read_png(a.in);
  if (!a.in_mask.empty()) {
    img.mask() = read_mask(a.in_mask, img.width(), img.height());
    img.zero_invalid();
  }
  int h = cam.height(), w = cam.width();
  if (!a.size.empty()) std::tie(h, w) = parse_size(a.size, "--size");

  Raster out;
  if (a.direction == "to-py") {
    out = warp_to_py(img, cam, h, w);
  } else if (a.direction == "from-py") {
    img.set_pix2cal(io::affine_from_json(io::read_json(sidecar_path(a.in))));
    out = warp_from_py(img, cam, h, w);
  } else {
    fail(ErrorKind::invalid_argument, "--direction must be to-py or from-py");
  }
  io::write_png(a.out, out);
  io::write_json(sidecar_path(a.out), io::affine_to_json(out.pix2cal()));
  if (!a.mask.empty()) io::write_mask_png(a.mask, out.mask(), out.width(), out.height());
  return kExitOk;
}

// augment ------------------------------------------------------------------

struct AugmentArgs {
  std::string in, ann, camera, config, out_dir;
  std::uint64_t index = 0;
};

int cmd_augment(const AugmentArgs& a) {
  const Camera cam = io::camera_from_json(io::read_json(a.camera));
  const Raster img = io::read_png(a.in);
  const io::PoseRecord pose = io::pose_from_json(io::read_json(a.ann));
  const AugConfig cfg = io::aug_config_from_json(io::read_json(a.config));
  const AugSample s = sample_aug(cfg, a.index, cam);

  fs::create_directories(a.out_dir);
  const std::string stem = fs::path(a.in).stem().string() + "_aug" + std::to_string(a.index);
  const fs::path dir(a.out_dir);

  io::PoseRecord new_pose;
  Raster warped;
  if (pose.t) {
    auto [r, p] = apply_aug_p2(img, ObjectPose{pose.R, *pose.t}, cam, s);
    warped = std::move(r);
    new_pose.R = p.R;
    new_pose.t = p.t;
  } else {
    // Camera poses: the rotation relabels exactly; the zoom lives in K'.
    warped = warp_by_homography(img, s.H, cam.height(), cam.width());
    const CameraPose p = relabel_pose(CameraPose{pose.R, *pose.c}, aug_rotation(s.roll, s.tilt_alpha));
    new_pose.R = p.R;
    new_pose.c = p.c;
  }

  json prov = io::aug_provenance(cfg, a.index, s);
  Mat3 K_aug = cam.K() * Vec3(s.f, s.f, 1.0).asDiagonal();
  prov["K_aug"] = json::array();
  for (int i = 0; i < 9; ++i) prov["K_aug"].push_back(K_aug(i / 3, i % 3));

  io::write_png(dir / (stem + ".png"), warped);
  io::write_mask_png(dir / (stem + "_mask.png"), warped.mask(), warped.width(), warped.height());
  io::write_json(dir / (stem + "_pose.json"), io::pose_to_json(new_pose));
  io::write_json(dir / (stem + "_provenance.json"), prov);
  return kExitOk;
}

// distort ------------------------------------------------------------------

struct DistortArgs {
  std::string alpha, which = "py", grid = "201x201", out;
  double radius = kPi / 2.0;
};

int cmd_distort(const DistortArgs& a) {
  const auto al = parse_list(a.alpha, 2, "--alpha");
  const PYVec alpha{al[0], al[1]};
  const auto [rows, cols] = parse_size(a.grid, "--grid");
  GridSpec grid{rows, cols, a.radius};
  grid.validate();
  Action which;
  if (a.which == "py") which = Action::py;
  else if (a.which == "translation") which = Action::translation;
  else fail(ErrorKind::invalid_argument, "--which must be py or translation");

  const SphereField field = error_field(alpha, which, grid);
  io::write_field_csv(a.out, field);

  // Means over the samples where both actions are defined.
  const SphereField py = which == Action::py ? field : error_field(alpha, Action::py, grid);
  const SphereField tr = which == Action::translation ? field : error_field(alpha, Action::translation, grid);
  double sp = 0.0, st = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < py.error.size(); ++i) {
    if (!py.valid[i] || !tr.valid[i]) continue;
    sp += py.error[i];
    st += tr.error[i];
    ++n;
  }
  if (n == 0) fail(ErrorKind::precondition, "no grid sample where both actions are defined");
  std::printf("mean_py %s\nmean_translation %s\nratio %s\n", io::format_double(sp / n).c_str(),
              io::format_double(st / n).c_str(), io::format_double(st > 0 ? sp / st : std::nan("")).c_str());
  return kExitOk;
}

// sset ---------------------------------------------------------------------

struct SSetArgs {
  std::string tau, rot = "1,0,0,0,1,0,0,0,1", v, out;
  bool check = false;
};

int cmd_sset(const SSetArgs& a) {
  const auto t = parse_list(a.tau, 2, "--tau");
  const auto r = parse_list(a.rot, 9, "--rot");
  const auto v = parse_list(a.v, 3, "--v");
  Mat3 R;
  for (int i = 0; i < 9; ++i) R(i / 3, i % 3) = r[static_cast<std::size_t>(i)];
  const RigidMotion rho{Rotation3::from_matrix(R, 1e-9), Vec3(v[0], v[1], v[2])};
  const SSetResult res = sset_solve(Vec2(t[0], t[1]), rho);
  json j = io::sset_to_json(res);
  int code = kExitOk;
  if (a.check) {
    const GridCheck gc = sset_grid_check(res);
    j["check"] = {{"tested", gc.tested}, {"satisfying", gc.satisfying}, {"max_distance", gc.max_distance},
                  {"pass", gc.max_distance <= 1e-4}};
    if (!(gc.max_distance <= 1e-4)) code = kExitVerify;
  }
  if (a.out.empty()) std::cout << j.dump(2) << "\n";
  else io::write_json(a.out, j);
  return code;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  VerifyOptions opts;
  bool list = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.list) {
    for (const std::string& n : check_names()) std::cout << n << "\n";
    return kExitOk;
  }
  const auto results = run_verify(a.opts);
  bool all = true;
  std::printf("%-34s %-6s %-24s %-3s %-12s %s\n", "check", "result", "value", "", "limit", "seconds");
  for (const CheckResult& r : results) {
    std::printf("%-34s %-6s %-24s %-3s %-12g %.3f\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                io::format_double(r.value).c_str(), to_string(r.cmp), r.limit, r.seconds);
    all = all && r.pass;
  }
  return all ? kExitOk : kExitVerify;
}

int exit_code(ErrorKind k) {
  return (k == ErrorKind::io || k == ErrorKind::invalid_argument) ? kExitArgs : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity-preserving image warps, PY resampling and geometric checks"};
  app.require_subcommand(1);

  WarpArgs wa;
  auto* warp = app.add_subcommand("warp", "Resample an image to or from a PY grid");
  warp->add_option("--in", wa.in, "input PNG")->required();
  warp->add_option("--camera", wa.camera, "camera JSON")->required();
  warp->add_option("--out", wa.out, "output PNG; pix2cal goes to <out>.pix2cal.json")->required();
  warp->add_option("--size", wa.size, "output size HxW (default: camera size)");
  warp->add_option("--direction", wa.direction, "to-py or from-py")->check(CLI::IsMember({"to-py", "from-py"}));
  warp->add_option("--mask", wa.mask, "write the output validity mask PNG here");
  warp->add_option("--in-mask", wa.in_mask, "validity mask PNG of the input");

  AugmentArgs aa;
  auto* aug = app.add_subcommand("augment", "Rotational-homography augmentation of one image and label");
  aug->add_option("--in", aa.in, "input PNG")->required();
  aug->add_option("--ann", aa.ann, "pose JSON")->required();
  aug->add_option("--camera", aa.camera, "camera JSON")->required();
  aug->add_option("--config", aa.config, "augmentation config JSON")->required();
  aug->add_option("--index", aa.index, "sample index")->required();
  aug->add_option("--out-dir", aa.out_dir, "output directory")->required();

  DistortArgs da;
  auto* dist = app.add_subcommand("distort", "Distortion field of a PY or image translation");
  dist->add_option("--alpha", da.alpha, "a0,a1")->required();
  dist->add_option("--which", da.which, "py or translation")->check(CLI::IsMember({"py", "translation"}));
  dist->add_option("--grid", da.grid, "RxC samples");
  dist->add_option("--radius", da.radius, "half-width of the warp-coordinate window");
  dist->add_option("--out", da.out, "CSV output")->required();

  SSetArgs sa;
  auto* sset = app.add_subcommand("sset", "Points where an image translation agrees with a rigid motion");
  sset->add_option("--tau", sa.tau, "t0,t1")->required();
  sset->add_option("--rot", sa.rot, "9 comma-separated entries, row-major");
  sset->add_option("--v", sa.v, "v0,v1,v2")->required();
  sset->add_option("--out", sa.out, "JSON output (default stdout)");
  sset->add_flag("--check", sa.check, "brute-force grid cross-check");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run the invariant suite");
  ver->add_option("--filter", va.opts.filter, "substring of check names");
  ver->add_option("--inject", va.opts.inject, "perturb the input of this check");
  ver->add_flag("--list", va.list, "list check names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitArgs;
  }

  try {
    if (*warp) return cmd_warp(wa);
    if (*aug) return cmd_augment(aa);
    if (*dist) return cmd_distort(da);
    if (*sset) return cmd_sset(sa);
    if (*ver) return cmd_verify(va);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  }
  return kExitArgs;
}
