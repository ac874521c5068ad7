#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubocubic/geometry.hpp"
#include "cubocubic/parallel.hpp"
#include "cubocubic/report.hpp"
#include "cubocubic/tensor.hpp"

namespace cubocubic {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::uint64_t seed = 1;
  Field field = Field::rational();
  long long coeff_lo = -5;
  long long coeff_hi = 5;
  std::vector<std::uint64_t> primes{7, 11, 13};
  int max_degree = 8;
  int retries = 5;  // total generation attempts
  OutputFormat format = OutputFormat::Text;
  std::string out;
  bool timings = false;
  Parallelism parallelism;

  // InvalidArgument unless primes are prime and >= 3, retries >= 1,
  // 1 <= max_degree <= 10 and coeff_lo <= coeff_hi.
  void validate() const;
};

/// Draws 64 coefficients, in a[i][j][k] order, from SplitMix64 seeded with
/// seed + attempt.
CoefficientTensor draw_tensor(std::uint64_t seed, std::uint64_t attempt, const Field& field, long long lo,
                              long long hi);

struct GenerateResult {
  CoefficientTensor tensor;
  std::uint64_t attempt;  // 0-based index of the accepted draw
  std::uint64_t subseed;  // seed + attempt
};

/// Retries draws until the fast genericity gates pass; GenericityExhausted
/// (with the failing gate per attempt) after config.retries attempts.
GenerateResult generate(const RunConfig& config);

/// Runs every check. Symbolic checks use the tensor's own field; scans use
/// the tensor reduced modulo each configured prime.
VerificationReport verify(const CoefficientTensor& tensor, const RunConfig& config,
                          std::optional<std::uint64_t> retries = std::nullopt);

enum class ScanTarget { Curve, S1, S2 };

struct ScanResult {
  ScanTarget target;
  std::uint64_t prime;
  std::vector<ProjPoint> points;
  // Hasse-Weil interval for curve scans.
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  bool within_bounds() const noexcept;

  Json to_json() const;
  std::string to_text() const;
};

/// PrimeTooLarge above kMaxScanPrime; BadPrime for p < 3 or a prime that
/// cannot reduce the tensor.
ScanResult scan(const CoefficientTensor& tensor, std::uint64_t prime, ScanTarget target, const Parallelism& par);

std::string_view to_string(ScanTarget t) noexcept;

}  // namespace cubocubic
