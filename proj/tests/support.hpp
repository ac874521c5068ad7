#pragma once

#include <string>

#include "cubocubic/pipeline.hpp"
#include "cubocubic/tensor_io.hpp"

namespace cubocubic::fixtures {

inline std::string data_path(const std::string& name) { return std::string(CUBOCUBIC_TEST_DATA) + "/" + name; }

inline CoefficientTensor golden() { return load_tensor(data_path("golden_tensor.json")).tensor; }

// Uniform entries of F_p, reproducible per seed.
inline CoefficientTensor random_tensor(std::uint64_t seed, std::uint64_t p) {
  return draw_tensor(seed, 0, Field::prime(p), 0, static_cast<long long>(p) - 1);
}

inline Parallelism single_thread() { return Parallelism{1}; }

}  // namespace cubocubic::fixtures
