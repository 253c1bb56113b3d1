#include "ctstreak/ctt_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace ctstreak {

namespace {

static_assert(std::endian::native == std::endian::little,
              "serializers assume a little-endian host");

void append_u32(std::string& out, std::uint32_t v) {
  out.append(reinterpret_cast<const char*>(&v), 4);
}

std::uint32_t take_u32(const std::string& bytes, std::size_t& pos) {
  if (pos + 4 > bytes.size()) throw std::runtime_error("CTT1: truncated file");
  std::uint32_t v;
  std::memcpy(&v, bytes.data() + pos, 4);
  pos += 4;
  return v;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return bytes;
}

}  // namespace

void write_file_atomic(const std::string& path, const void* bytes, std::size_t size) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(static_cast<const char*>(bytes), static_cast<std::streamsize>(size));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_file_atomic(const std::string& path, const std::string& text) {
  write_file_atomic(path, text.data(), text.size());
}

void write_ctt1(const std::string& path, std::span<const std::uint32_t> dims,
                std::span<const double> values) {
  std::size_t count = 1;
  for (std::uint32_t d : dims) count *= d;
  if (count != values.size())
    throw std::invalid_argument("write_ctt1: dims do not match value count");

  std::string out;
  out.reserve(8 + 4 * dims.size() + 4 * values.size());
  out.append("CTT1", 4);
  append_u32(out, static_cast<std::uint32_t>(dims.size()));
  for (std::uint32_t d : dims) append_u32(out, d);
  for (double v : values) {
    const float f = static_cast<float>(v);
    out.append(reinterpret_cast<const char*>(&f), 4);
  }
  write_file_atomic(path, out);
}

Ctt1 read_ctt1(const std::string& path) {
  const std::string bytes = read_all(path);
  if (bytes.size() < 8 || bytes.compare(0, 4, "CTT1") != 0)
    throw std::runtime_error("CTT1: bad magic in " + path);
  std::size_t pos = 4;
  const std::uint32_t rank = take_u32(bytes, pos);
  if (rank > 8) throw std::runtime_error("CTT1: implausible rank in " + path);
  Ctt1 result;
  std::size_t count = 1;
  for (std::uint32_t i = 0; i < rank; ++i) {
    result.dims.push_back(take_u32(bytes, pos));
    count *= result.dims.back();
  }
  if (pos + 4 * count != bytes.size())
    throw std::runtime_error("CTT1: payload size mismatch in " + path);
  result.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    float f;
    std::memcpy(&f, bytes.data() + pos + 4 * i, 4);
    result.values[i] = f;
  }
  return result;
}

void write_ctt1(const std::string& path, const Image& image) {
  const std::uint32_t dims[2] = {static_cast<std::uint32_t>(image.height),
                                 static_cast<std::uint32_t>(image.width)};
  write_ctt1(path, dims, image.data);
}

void write_ctt1(const std::string& path, const Sinogram& sinogram) {
  const std::uint32_t dims[2] = {static_cast<std::uint32_t>(sinogram.n_angles),
                                 static_cast<std::uint32_t>(sinogram.n_detectors)};
  write_ctt1(path, dims, sinogram.data);
}

Image read_ctt1_image(const std::string& path) {
  Ctt1 raw = read_ctt1(path);
  if (raw.dims.size() != 2)
    throw std::runtime_error("CTT1: expected a rank-2 image in " + path);
  Image img(static_cast<int>(raw.dims[1]), static_cast<int>(raw.dims[0]));
  img.data = std::move(raw.values);
  return img;
}

Sinogram read_ctt1_sinogram(const std::string& path) {
  Ctt1 raw = read_ctt1(path);
  if (raw.dims.size() != 2)
    throw std::runtime_error("CTT1: expected a rank-2 sinogram in " + path);
  const int n_angles = static_cast<int>(raw.dims[0]);
  const int n_detectors = static_cast<int>(raw.dims[1]);
  Sinogram s(n_angles, n_detectors);
  s.data = std::move(raw.values);
  for (int k = 0; k < n_angles; ++k)
    s.angles.push_back(k * std::numbers::pi / n_angles);
  return s;
}

}  // namespace ctstreak
