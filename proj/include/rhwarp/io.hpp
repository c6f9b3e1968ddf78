#pragma once

// File formats: JSON descriptions of cameras, poses, kernels, pix2cal
// sidecars and augmentation configs; 8-bit PNG rasters; CSV fields.
// Missing or unreadable files throw ErrorKind::io, malformed content
// ErrorKind::invalid_argument.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "rhwarp/augment.hpp"
#include "rhwarp/distortion.hpp"
#include "rhwarp/pyconv.hpp"
#include "rhwarp/rigidity.hpp"

namespace rhwarp::io {

using nlohmann::json;
namespace fs = std::filesystem;

/// %.17g
std::string format_double(double v);

json read_json(const fs::path& path);
void write_json(const fs::path& path, const json& j);
void write_text(const fs::path& path, const std::string& text);

/// {"K": [9 row-major], "width": int, "height": int}
Camera camera_from_json(const json& j);
json camera_to_json(const Camera& cam);

/// {"R": [9], "t": [3]} or {"R": [9], "c": [3]}; exactly one of t, c.
struct PoseRecord {
  Rotation3 R;
  std::optional<Vec3> t;
  std::optional<Vec3> c;
};
PoseRecord pose_from_json(const json& j);
json pose_to_json(const PoseRecord& p);

/// {"k": int, "spacing": real, "weights": [k*k]}
PYKernel kernel_from_json(const json& j);
json kernel_to_json(const PYKernel& g);

/// {"A": [4 row-major], "b": [2]}
Affine2 affine_from_json(const json& j);
json affine_to_json(const Affine2& a);

/// {"scale_range": [lo, hi], "roll_range_deg": [lo, hi],
///  "tilt_max_deg": real, "seed": uint}; missing keys keep defaults.
AugConfig aug_config_from_json(const json& j);

/// {"seed", "index", "f", "roll_rad", "tilt_alpha": [2], "H": [9]}
json aug_provenance(const AugConfig& cfg, std::uint64_t index, const AugSample& a);

/// {"eigenvalues": [...], "cases": [...], "curve": [[lambda, x0, x1, x2], ...]}
json sset_to_json(const SSetResult& r);

/// 8-bit PNG -> values in [0, 1]; gray files give 1 channel, everything
/// else 3 (RGB). All pixels valid, pix2cal identity.
Raster read_png(const fs::path& path);

/// Channels 1 (gray) or 3 (RGB); values clamped to [0, 1] and rounded.
void write_png(const fs::path& path, const Raster& r);

/// 255 where mask is set.
void write_mask_png(const fs::path& path, const std::vector<std::uint8_t>& mask, int w, int h);

/// u0,u1,error,valid with a header row; invalid rows carry nan.
void write_field_csv(const fs::path& path, const SphereField& f);

}  // namespace rhwarp::io
