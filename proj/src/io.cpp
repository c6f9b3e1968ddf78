#include "rhwarp/io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rhwarp/error.hpp"

namespace rhwarp::io {

namespace {

std::vector<double> numbers(const json& j, const char* key, std::size_t n) {
  if (!j.contains(key)) fail(ErrorKind::invalid_argument, std::string("missing key \"") + key + "\"");
  const json& a = j.at(key);
  if (!a.is_array() || a.size() != n)
    fail(ErrorKind::invalid_argument, std::string("\"") + key + "\" must hold " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (const json& v : a) {
    if (!v.is_number()) fail(ErrorKind::invalid_argument, std::string("\"") + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Mat3 mat3(const std::vector<double>& v) {
  Mat3 m;
  for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = v[static_cast<std::size_t>(i)];
  return m;
}

json mat3_json(const Mat3& m) {
  json a = json::array();
  for (int i = 0; i < 9; ++i) a.push_back(m(i / 3, i % 3));
  return a;
}

Vec3 vec3(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_argument, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_argument, path.string() + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrorKind::io, "write failed for " + path.string());
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

Camera camera_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::invalid_argument, "camera: expected a JSON object");
  return Camera(mat3(numbers(j, "K", 9)), get_as<int>(j, "width"), get_as<int>(j, "height"));
}

json camera_to_json(const Camera& cam) {
  return {{"K", mat3_json(cam.K())}, {"width", cam.width()}, {"height", cam.height()}};
}

PoseRecord pose_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::invalid_argument, "pose: expected a JSON object");
  const bool has_t = j.contains("t");
  const bool has_c = j.contains("c");
  if (has_t == has_c) fail(ErrorKind::invalid_argument, "pose: exactly one of \"t\" and \"c\" is required");
  PoseRecord p;
  p.R = Rotation3::nearest(mat3(numbers(j, "R", 9)));
  if (has_t) p.t = vec3(numbers(j, "t", 3));
  if (has_c) p.c = vec3(numbers(j, "c", 3));
  return p;
}

json pose_to_json(const PoseRecord& p) {
  json j = {{"R", mat3_json(p.R.matrix())}};
  if (p.t) j["t"] = {p.t->x(), p.t->y(), p.t->z()};
  if (p.c) j["c"] = {p.c->x(), p.c->y(), p.c->z()};
  return j;
}

PYKernel kernel_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::invalid_argument, "kernel: expected a JSON object");
  PYKernel g;
  g.k = get_as<int>(j, "k");
  g.spacing = get_as<double>(j, "spacing");
  if (g.k < 1) fail(ErrorKind::invalid_argument, "kernel: k must be positive");
  g.weights = numbers(j, "weights", static_cast<std::size_t>(g.k) * g.k);
  g.validate();
  return g;
}

json kernel_to_json(const PYKernel& g) { return {{"k", g.k}, {"spacing", g.spacing}, {"weights", g.weights}}; }

Affine2 affine_from_json(const json& j) {
  const auto a = numbers(j, "A", 4);
  const auto b = numbers(j, "b", 2);
  Affine2 out;
  out.A << a[0], a[1], a[2], a[3];
  out.b = Vec2(b[0], b[1]);
  return out;
}

json affine_to_json(const Affine2& a) {
  return {{"A", {a.A(0, 0), a.A(0, 1), a.A(1, 0), a.A(1, 1)}}, {"b", {a.b.x(), a.b.y()}}};
}

AugConfig aug_config_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::invalid_argument, "aug config: expected a JSON object");
  AugConfig cfg;
  if (j.contains("scale_range")) {
    const auto r = numbers(j, "scale_range", 2);
    cfg.scale_lo = r[0];
    cfg.scale_hi = r[1];
  }
  if (j.contains("roll_range_deg")) {
    const auto r = numbers(j, "roll_range_deg", 2);
    cfg.roll_lo_deg = r[0];
    cfg.roll_hi_deg = r[1];
  }
  if (j.contains("tilt_max_deg")) cfg.tilt_max_deg = get_as<double>(j, "tilt_max_deg");
  if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j, "seed");
  cfg.validate();
  return cfg;
}

json aug_provenance(const AugConfig& cfg, std::uint64_t index, const AugSample& a) {
  return {{"seed", cfg.seed},
          {"index", index},
          {"f", a.f},
          {"roll_rad", a.roll},
          {"tilt_alpha", {a.tilt_alpha.a0, a.tilt_alpha.a1}},
          {"H", mat3_json(a.H.matrix())}};
}

json sset_to_json(const SSetResult& r) {
  json cases = json::array();
  for (const EigenCase& c : r.cases) {
    json jc = {{"lambda", c.lambda}, {"kind", to_string(c.kind)}, {"rank", c.rank}};
    jc["basepoint"] = c.basepoint ? json{c.basepoint->x(), c.basepoint->y(), c.basepoint->z()} : json(nullptr);
    json dirs = json::array();
    for (const Vec3& d : c.directions) dirs.push_back({d.x(), d.y(), d.z()});
    jc["directions"] = dirs;
    cases.push_back(jc);
  }
  json curve = json::array();
  for (const CurveSample& s : r.curve) curve.push_back({s.lambda, s.point.x(), s.point.y(), s.point.z()});
  return {{"eigenvalues", r.eigenvalues}, {"cases", cases}, {"curve", curve}};
}

Raster read_png(const fs::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!fs::exists(path)) fail(ErrorKind::io, "cannot open " + path.string());
  if (!png_image_begin_read_from_file(&image, path.string().c_str()))
    fail(ErrorKind::invalid_argument, path.string() + ": " + image.message);
  const bool gray = (image.format & PNG_FORMAT_FLAG_COLOR) == 0;
  image.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  std::vector<png_byte> buf(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buf.data(), 0, nullptr)) {
    png_image_free(&image);
    fail(ErrorKind::invalid_argument, path.string() + ": " + image.message);
  }
  const int w = static_cast<int>(image.width);
  const int h = static_cast<int>(image.height);
  const int ch = gray ? 1 : 3;
  Raster r(h, w, ch);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < ch; ++c)
        r.at(c, y, x) = buf[(static_cast<std::size_t>(y) * w + x) * ch + c] / 255.0;
  return r;
}

namespace {

void write_bytes(const fs::path& path, const std::vector<png_byte>& buf, int w, int h, int ch) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(w);
  image.height = static_cast<png_uint_32>(h);
  image.format = ch == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&image, path.string().c_str(), 0, buf.data(), 0, nullptr))
    fail(ErrorKind::io, path.string() + ": " + image.message);
}

}  // namespace

void write_png(const fs::path& path, const Raster& r) {
  if (r.channels() != 1 && r.channels() != 3) fail(ErrorKind::invalid_argument, "write_png: need 1 or 3 channels");
  const int w = r.width();
  const int h = r.height();
  const int ch = r.channels();
  std::vector<png_byte> buf(static_cast<std::size_t>(w) * h * ch);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < ch; ++c) {
        const double v = std::clamp(r.at(c, y, x), 0.0, 1.0);
        buf[(static_cast<std::size_t>(y) * w + x) * ch + c] = static_cast<png_byte>(std::lround(v * 255.0));
      }
  write_bytes(path, buf, w, h, ch);
}

void write_mask_png(const fs::path& path, const std::vector<std::uint8_t>& mask, int w, int h) {
  if (mask.size() != static_cast<std::size_t>(w) * h) fail(ErrorKind::invalid_argument, "write_mask_png: size mismatch");
  std::vector<png_byte> buf(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) buf[i] = mask[i] ? 255 : 0;
  write_bytes(path, buf, w, h, 1);
}

void write_field_csv(const fs::path& path, const SphereField& f) {
  std::ostringstream out;
  out << "u0,u1,error,valid\n";
  for (std::size_t i = 0; i < f.error.size(); ++i) {
    const bool ok = f.valid[i] != 0;
    out << format_double(f.coords[i].x()) << ',' << format_double(f.coords[i].y()) << ','
        << format_double(ok ? f.error[i] : std::nan("")) << ',' << (ok ? 1 : 0) << '\n';
  }
  write_text(path, out.str());
}

}  // namespace rhwarp::io
