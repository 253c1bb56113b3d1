#include "ctstreak/nn/checkpoint.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "ctstreak/ctt_io.hpp"

namespace ctstreak::nn {

namespace {

void append_u32(std::string& out, std::uint32_t v) {
  out.append(reinterpret_cast<const char*>(&v), 4);
}

std::uint32_t take_u32(const std::string& bytes, std::size_t& pos) {
  if (pos + 4 > bytes.size()) throw std::runtime_error("CTW1: truncated file");
  std::uint32_t v;
  std::memcpy(&v, bytes.data() + pos, 4);
  pos += 4;
  return v;
}

}  // namespace

void save_ctw1(const std::string& path, const std::vector<NamedTensor>& items) {
  std::string out;
  out.append("CTW1", 4);
  append_u32(out, static_cast<std::uint32_t>(items.size()));
  for (const NamedTensor& item : items) {
    append_u32(out, static_cast<std::uint32_t>(item.name.size()));
    out.append(item.name);
    append_u32(out, static_cast<std::uint32_t>(item.tensor.shape.size()));
    for (int d : item.tensor.shape) append_u32(out, static_cast<std::uint32_t>(d));
    out.append(reinterpret_cast<const char*>(item.tensor.data.data()),
               item.tensor.data.size() * sizeof(double));
  }
  write_file_atomic(path, out);
}

std::vector<NamedTensor> load_ctw1(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (bytes.size() < 8 || bytes.compare(0, 4, "CTW1") != 0)
    throw std::runtime_error("CTW1: bad magic in " + path);

  std::size_t pos = 4;
  const std::uint32_t count = take_u32(bytes, pos);
  std::vector<NamedTensor> items;
  items.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t name_len = take_u32(bytes, pos);
    if (pos + name_len > bytes.size()) throw std::runtime_error("CTW1: truncated name");
    NamedTensor item;
    item.name.assign(bytes, pos, name_len);
    pos += name_len;
    const std::uint32_t rank = take_u32(bytes, pos);
    if (rank == 0 || rank > 5) throw std::runtime_error("CTW1: bad rank");
    std::vector<int> shape;
    std::size_t n = 1;
    for (std::uint32_t r = 0; r < rank; ++r) {
      const std::uint32_t d = take_u32(bytes, pos);
      shape.push_back(static_cast<int>(d));
      n *= d;
    }
    if (pos + 8 * n > bytes.size()) throw std::runtime_error("CTW1: truncated payload");
    item.tensor = Tensor(shape);
    std::memcpy(item.tensor.data.data(), bytes.data() + pos, 8 * n);
    pos += 8 * n;
    items.push_back(std::move(item));
  }
  return items;
}

const Tensor& find_tensor(const std::vector<NamedTensor>& items, const std::string& name) {
  for (const NamedTensor& item : items)
    if (item.name == name) return item.tensor;
  throw std::runtime_error("CTW1: missing tensor " + name);
}

bool has_tensor(const std::vector<NamedTensor>& items, const std::string& name) {
  for (const NamedTensor& item : items)
    if (item.name == name) return true;
  return false;
}

}  // namespace ctstreak::nn
