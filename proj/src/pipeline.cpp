#include "cubocubic/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "cubocubic/cremona.hpp"
#include "cubocubic/error.hpp"
#include "cubocubic/rng.hpp"

namespace cubocubic {

void RunConfig::validate() const {
  for (std::uint64_t p : primes) {
    if (p < 3 || !is_prime_number(p)) {
      throw Error(ErrorKind::InvalidArgument, "scan prime " + std::to_string(p) + " must be a prime >= 3");
    }
  }
  if (retries < 1) throw Error(ErrorKind::InvalidArgument, "retry limit must be at least 1");
  if (max_degree < 1 || max_degree > 10) throw Error(ErrorKind::InvalidArgument, "max degree must lie in 1..10");
  if (coeff_lo > coeff_hi) throw Error(ErrorKind::InvalidArgument, "empty coefficient range");
}

CoefficientTensor draw_tensor(std::uint64_t seed, std::uint64_t attempt, const Field& field, long long lo,
                              long long hi) {
  SplitMix64 rng(seed + attempt);
  std::vector<long long> values(CoefficientTensor::kSize);
  for (auto& v : values) v = rng.uniform(lo, hi);
  CoefficientTensor t = CoefficientTensor::from_integers(field, values);
  t.seed = seed;
  t.source = "seed";
  return t;
}

GenerateResult generate(const RunConfig& config) {
  config.validate();
  std::string diagnostics;
  for (int attempt = 0; attempt < config.retries; ++attempt) {
    const auto a = static_cast<std::uint64_t>(attempt);
    CoefficientTensor t = draw_tensor(config.seed, a, config.field, config.coeff_lo, config.coeff_hi);
    const auto gate = first_failed_gate(t);
    if (!gate) return {std::move(t), a, config.seed + a};
    diagnostics += " attempt " + std::to_string(attempt) + ": " + *gate + ";";
  }
  throw Error(ErrorKind::GenericityExhausted,
              "no generic tensor after " + std::to_string(config.retries) + " attempts:" + diagnostics);
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
CheckRecord timed(const std::string& fallback_name, Fn fn) {
  const auto start = Clock::now();
  CheckRecord rec;
  try {
    rec = fn();
  } catch (const Error& e) {
    rec = CheckRecord{};
    rec.name = fallback_name;
    rec.fail(e.what());
  }
  rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rec;
}

std::string suffix(std::uint64_t p) { return "[p=" + std::to_string(p) + "]"; }

CheckRecord hilbert_record(const DeterminantalData& d, int max_degree) {
  CheckRecord rec;
  rec.name = "hilbert_function";
  const GradedIdealView ideal({d.phi.components().begin(), d.phi.components().end()});
  Json values = Json::array();
  for (int deg = 1; deg <= max_degree; ++deg) {
    const auto hf = static_cast<std::int64_t>(hilbert_dim(ideal, deg));
    values.push_back(hf);
    if (hf != 6 * deg - 2 || hf != hilbert_burch_dim(deg)) {
      rec.fail("HF(" + std::to_string(deg) + ") = " + std::to_string(hf) + ", expected " +
               std::to_string(6 * deg - 2));
    }
  }
  rec.details["values"] = std::move(values);
  return rec;
}

CheckRecord degree_genus_record(const DeterminantalData& d) {
  CheckRecord rec;
  rec.name = "curve_degree_genus";
  const GradedIdealView ideal({d.phi.components().begin(), d.phi.components().end()});
  const DegreeGenus dg = curve_degree_genus(ideal);
  rec.details["degree"] = dg.degree;
  rec.details["genus"] = dg.genus;
  if (dg.degree != 6 || dg.genus != 3) rec.fail("expected a curve of degree 6 and genus 3");
  return rec;
}

CheckRecord intersection_record() {
  CheckRecord rec;
  rec.name = "intersection_matrix";
  const auto m = intersection_matrix();
  rec.details["matrix"] = Json::array({Json::array({m[0][0], m[0][1]}), Json::array({m[1][0], m[1][1]})});
  rec.details["determinant"] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (m != std::array<std::array<std::int64_t, 2>, 2>{{{4, 6}, {6, 4}}}) rec.fail("unexpected intersection numbers");
  return rec;
}

}  // namespace

VerificationReport verify(const CoefficientTensor& tensor, const RunConfig& config,
                          std::optional<std::uint64_t> retries) {
  config.validate();
  VerificationReport report;
  report.provenance["field"] = tensor.field().is_rational() ? Json("rational")
                                                            : Json({{"prime", tensor.field().characteristic()}});
  report.provenance["seed"] = tensor.seed ? Json(*tensor.seed) : Json(nullptr);
  report.provenance["retries"] = retries ? Json(*retries) : Json(nullptr);
  report.provenance["source"] = tensor.source;
  report.provenance["primes"] = config.primes;
  report.provenance["max_degree"] = config.max_degree;

  const DeterminantalData data = assemble(tensor);
  auto& checks = report.checks;

  checks.push_back(timed("swap_identity", [&] { return check_swap_identity(data); }));
  checks.push_back(timed("laplace_containment", [&] { return check_laplace_containment(data); }));
  bool birational = false;
  checks.push_back(timed("inverse_composition", [&] {
    auto r = check_inverse_composition(data);
    birational = r.record.passed();
    return r.record;
  }));
  if (birational) {
    checks.push_back(timed("surface_transfer_symbolic", [&] { return check_surface_transfer_symbolic(data).record; }));
  } else {
    CheckRecord skipped;
    skipped.name = "surface_transfer_symbolic";
    skipped.status = CheckStatus::Skipped;
    skipped.message = "requires inverse_composition to pass";
    checks.push_back(std::move(skipped));
  }
  checks.push_back(timed("hilbert_function", [&] { return hilbert_record(data, config.max_degree); }));
  checks.push_back(timed("curve_degree_genus", [&] { return degree_genus_record(data); }));

  const Parallelism& par = config.parallelism;
  for (std::uint64_t p : config.primes) {
    const std::string sfx = suffix(p);
    std::optional<DeterminantalData> reduced;
    std::string reduce_error;
    try {
      reduced = assemble(tensor.reduce_mod(p));
    } catch (const Error& e) {
      reduce_error = e.what();
    }
    const char* per_prime[] = {"curve_point_count", "base_locus_consistency", "curve_smooth_scan",
                               "quartic_smooth_scan_s1", "quartic_smooth_scan_s2", "point_transfer"};
    if (!reduced) {
      for (const char* name : per_prime) {
        CheckRecord skipped;
        skipped.name = name + sfx;
        skipped.status = CheckStatus::Skipped;
        skipped.message = "tensor cannot be reduced mod " + std::to_string(p) + ": " + reduce_error;
        checks.push_back(std::move(skipped));
      }
      continue;
    }
    const DeterminantalData& dp = *reduced;
    std::vector<ProjPoint> curve;
    checks.push_back(timed(per_prime[0] + sfx, [&] {
      curve = enumerate_curve_points(dp, par);
      return curve_point_count(dp, curve);
    }));
    checks.push_back(timed(per_prime[1] + sfx, [&] { return base_locus_consistency(dp, curve, par); }));
    checks.push_back(timed(per_prime[2] + sfx, [&] { return smooth_scan_curve(dp, curve); }));
    checks.push_back(timed(per_prime[3] + sfx, [&] { return smooth_scan_quartic(dp.det_M, par, per_prime[3]); }));
    checks.push_back(timed(per_prime[4] + sfx, [&] { return smooth_scan_quartic(dp.det_N, par, per_prime[4]); }));
    checks.push_back(timed(per_prime[5] + sfx, [&] { return transfer_points(dp, par); }));
  }

  checks.push_back(timed("intersection_matrix", [] { return intersection_record(); }));
  return report;
}

bool ScanResult::within_bounds() const noexcept {
  if (!lower || !upper) return true;
  const auto n = static_cast<std::int64_t>(points.size());
  return *lower <= n && n <= *upper;
}

std::string_view to_string(ScanTarget t) noexcept {
  switch (t) {
    case ScanTarget::Curve: return "curve";
    case ScanTarget::S1: return "s1";
    case ScanTarget::S2: return "s2";
  }
  return "unknown";
}

Json ScanResult::to_json() const {
  Json out = Json::object();
  out["schema"] = 1;
  out["target"] = std::string(to_string(target));
  out["prime"] = prime;
  out["count"] = points.size();
  if (lower && upper) {
    out["weil_interval"] = Json::array({*lower, *upper});
    out["within_weil_bounds"] = within_bounds();
  }
  Json pts = Json::array();
  for (const auto& pt : points) {
    Json c = Json::array();
    for (const auto& e : pt.coords()) c.push_back(e.residue());
    pts.push_back(std::move(c));
  }
  out["points"] = std::move(pts);
  return out;
}

std::string ScanResult::to_text() const {
  std::ostringstream os;
  os << "target " << to_string(target) << " over GF(" << prime << "): " << points.size() << " points\n";
  if (lower && upper) {
    os << "Hasse-Weil interval [" << *lower << ", " << *upper << "]: "
       << (within_bounds() ? "within" : "OUTSIDE") << '\n';
  }
  for (const auto& pt : points) os << pt.to_string() << '\n';
  return os.str();
}

ScanResult scan(const CoefficientTensor& tensor, std::uint64_t prime, ScanTarget target, const Parallelism& par) {
  if (prime > kMaxScanPrime) {
    throw Error(ErrorKind::PrimeTooLarge, std::to_string(prime) + " > " + std::to_string(kMaxScanPrime));
  }
  if (prime < 3 || !is_prime_number(prime)) {
    throw Error(ErrorKind::BadPrime, std::to_string(prime) + " is not an odd prime");
  }
  CoefficientTensor reduced(Field::rational());
  try {
    reduced = tensor.reduce_mod(prime);
  } catch (const Error& e) {
    throw Error(ErrorKind::BadPrime, e.what());
  }
  const DeterminantalData d = assemble(reduced);
  ScanResult out{target, prime, {}, std::nullopt, std::nullopt};
  switch (target) {
    case ScanTarget::Curve: {
      out.points = enumerate_curve_points(d, par);
      const std::int64_t r = weil_radius(prime, 3);
      out.lower = std::max<std::int64_t>(0, static_cast<std::int64_t>(prime) + 1 - r);
      out.upper = static_cast<std::int64_t>(prime) + 1 + r;
      break;
    }
    case ScanTarget::S1: out.points = enumerate_zeros(d.det_M, par); break;
    case ScanTarget::S2: out.points = enumerate_zeros(d.det_N, par); break;
  }
  return out;
}

}  // namespace cubocubic
