#include "ctstreak/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "ctstreak/ctt_io.hpp"

namespace ctstreak {

namespace {

struct MemReader {
  const unsigned char* bytes;
  std::size_t size;
  std::size_t pos;
};

void mem_read(png_structp png, png_bytep out, png_size_t count) {
  auto* r = static_cast<MemReader*>(png_get_io_ptr(png));
  if (r->pos + count > r->size) png_error(png, "unexpected end of PNG data");
  std::memcpy(out, r->bytes + r->pos, count);
  r->pos += count;
}

void mem_write(png_structp png, png_bytep bytes, png_size_t count) {
  auto* sink = static_cast<std::string*>(png_get_io_ptr(png));
  sink->append(reinterpret_cast<const char*>(bytes), count);
}

void mem_flush(png_structp) {}

double luma(double r, double g, double b) {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

}  // namespace

Image read_png_grayscale(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<unsigned char> file((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (file.size() < 8 || png_sig_cmp(file.data(), 0, 8) != 0)
    throw std::runtime_error("not a PNG file: " + path);

  std::vector<png_byte> pixels;
  std::vector<png_bytep> row_ptrs;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  MemReader reader{file.data(), file.size(), 0};

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("PNG decode failed: " + path);
  }

  png_set_read_fn(png, &reader, mem_read);
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
    png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_set_strip_alpha(png);
  if (bit_depth == 16) png_set_swap(png);  // little-endian samples
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const int channels = png_get_channels(png, info);
  const std::size_t rowbytes = png_get_rowbytes(png, info);
  pixels.resize(rowbytes * height);
  row_ptrs.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) row_ptrs[y] = pixels.data() + y * rowbytes;
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  const int out_depth = png_get_bit_depth(png, info);
  png_destroy_read_struct(&png, &info, nullptr);

  if (channels != 1 && channels != 3)
    throw std::runtime_error("unsupported PNG channel layout in " + path);

  Image img(static_cast<int>(width), static_cast<int>(height));
  const double scale = out_depth == 16 ? 1.0 / 65535.0 : 1.0 / 255.0;
  for (png_uint_32 y = 0; y < height; ++y) {
    const png_byte* row = pixels.data() + y * rowbytes;
    for (png_uint_32 x = 0; x < width; ++x) {
      double v;
      if (out_depth == 16) {
        const auto* samples = reinterpret_cast<const std::uint16_t*>(row);
        if (channels == 1) {
          v = samples[x] * scale;
        } else {
          v = luma(samples[3 * x] * scale, samples[3 * x + 1] * scale,
                   samples[3 * x + 2] * scale);
        }
      } else {
        if (channels == 1) {
          v = row[x] * scale;
        } else {
          v = luma(row[3 * x] * scale, row[3 * x + 1] * scale, row[3 * x + 2] * scale);
        }
      }
      img.at(static_cast<int>(x), static_cast<int>(y)) = v;
    }
  }
  return img;
}

void write_png(const std::string& path, const Image& image) {
  double lo = image.data.empty() ? 0.0 : image.data[0];
  double hi = lo;
  for (double v : image.data) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi - lo;

  std::vector<png_byte> pixels(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const double w = span > 0.0 ? (image.data[i] - lo) / span : 0.0;
    pixels[i] = static_cast<png_byte>(std::lround(255.0 * std::clamp(w, 0.0, 1.0)));
  }

  std::string sink;
  std::vector<png_bytep> row_ptrs(image.height);
  for (int y = 0; y < image.height; ++y)
    row_ptrs[y] = pixels.data() + static_cast<std::size_t>(y) * image.width;

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("PNG encode failed: " + path);
  }
  png_set_write_fn(png, &sink, mem_write, mem_flush);
  png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, row_ptrs.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);

  write_file_atomic(path, sink);
}

Image resize_bilinear(const Image& src, int width, int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("resize_bilinear: target dims must be >= 1");
  if (src.width == width && src.height == height) return src;
  Image dst(width, height);
  const double sx = static_cast<double>(src.width) / width;
  const double sy = static_cast<double>(src.height) / height;
  for (int y = 0; y < height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, src.height - 1.0);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, src.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, src.width - 1.0);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, src.width - 1);
      const double wx = fx - x0;
      const double top = (1.0 - wx) * src.at(x0, y0) + wx * src.at(x1, y0);
      const double bottom = (1.0 - wx) * src.at(x0, y1) + wx * src.at(x1, y1);
      dst.at(x, y) = (1.0 - wy) * top + wy * bottom;
    }
  }
  return dst;
}

Image ingest_image(const std::string& path, int size) {
  if (size < 1) throw std::invalid_argument("ingest_image: size must be >= 1");
  Image img = read_png_grayscale(path);  // already rescaled to [0, 1]
  return resize_bilinear(img, size, size);
}

void write_comparison_grid(const std::string& path,
                           const std::vector<std::vector<const Image*>>& rows) {
  if (rows.empty() || rows[0].empty())
    throw std::invalid_argument("write_comparison_grid: no panels");
  const int panel_w = rows[0][0]->width;
  const int panel_h = rows[0][0]->height;
  const int cols = static_cast<int>(rows[0].size());
  const int gap = 2;
  Image grid(cols * panel_w + (cols - 1) * gap,
             static_cast<int>(rows.size()) * panel_h +
                 (static_cast<int>(rows.size()) - 1) * gap,
             0.0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw std::invalid_argument("write_comparison_grid: ragged rows");
    for (int c = 0; c < cols; ++c) {
      const Image& panel = *rows[r][c];
      if (panel.width != panel_w || panel.height != panel_h)
        throw std::invalid_argument("write_comparison_grid: panel size mismatch");
      // window each panel independently so dim outputs stay visible
      double lo = panel.data[0], hi = panel.data[0];
      for (double v : panel.data) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      const double span = hi > lo ? hi - lo : 1.0;
      for (int y = 0; y < panel_h; ++y)
        for (int x = 0; x < panel_w; ++x)
          grid.at(c * (panel_w + gap) + x, static_cast<int>(r) * (panel_h + gap) + y) =
              (panel.at(x, y) - lo) / span;
    }
  }
  write_png(path, grid);
}

}  // namespace ctstreak
