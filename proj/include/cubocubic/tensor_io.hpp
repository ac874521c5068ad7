#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cubocubic/tensor.hpp"

namespace cubocubic {

/// Tensor files are JSON objects
///   {"field": "rational" | {"prime": P}, "seed": S, "retries": R,
///    "a": [[[a_000, a_001, a_002, a_003], ...], ...]}
/// with a[i][j][k] integers; "seed" and "retries" are optional. Prime-field
/// integers are reduced mod P. Anything malformed is a ParseError.
struct TensorFile {
  CoefficientTensor tensor;
  std::optional<std::uint64_t> retries;
};

TensorFile parse_tensor(std::string_view json_text);
TensorFile load_tensor(const std::filesystem::path& path);

/// Canonical rendering, one innermost row per line. Rational tensors must
/// have integer entries (InvalidArgument otherwise).
std::string serialize_tensor(const CoefficientTensor& t, std::optional<std::uint64_t> retries = std::nullopt);
void save_tensor(const std::filesystem::path& path, const CoefficientTensor& t,
                 std::optional<std::uint64_t> retries = std::nullopt);

}  // namespace cubocubic
