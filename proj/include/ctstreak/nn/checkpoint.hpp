#pragma once

#include <string>
#include <vector>

#include "ctstreak/nn/tensor.hpp"

namespace ctstreak::nn {

struct NamedTensor {
  std::string name;
  Tensor tensor;
};

// CTW1 container: magic "CTW1", u32 LE tensor count, then per tensor:
// u32 LE name length, UTF-8 name, u32 LE rank, rank u32 LE dims, and the
// payload as 64-bit LE floats. Reserved names: `meta.*` carries key-value
// metadata (variant flags and the like); `*.adam_m` / `*.adam_v` /
// `adam.step_count` carry optimizer state.
void save_ctw1(const std::string& path, const std::vector<NamedTensor>& items);
std::vector<NamedTensor> load_ctw1(const std::string& path);

// Lookup helper; throws std::runtime_error when the name is missing.
const Tensor& find_tensor(const std::vector<NamedTensor>& items, const std::string& name);
bool has_tensor(const std::vector<NamedTensor>& items, const std::string& name);

}  // namespace ctstreak::nn
