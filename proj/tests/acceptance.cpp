// Acceptance gate: each criterion prints one PASS/FAIL line; the exit status
// is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cubocubic/cremona.hpp"
#include "cubocubic/error.hpp"
#include "cubocubic/geometry.hpp"
#include "cubocubic/pipeline.hpp"
#include "cubocubic/tensor_io.hpp"

using namespace cubocubic;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    note += (note.empty() ? "" : "; ") + what;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0) out.require(secs < budget_s, "over time budget");
  if (!out.ok) ++failures;
  std::printf("[%s] %2d %-28s %8.3fs", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs);
  if (budget_s > 0) std::printf(" (budget %gs)", budget_s);
  if (!out.note.empty()) std::printf("  %s", out.note.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

CoefficientTensor random_f101(std::uint64_t seed) { return draw_tensor(seed, 0, Field::prime(101), 0, 100); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected a cubocubic::Error");
}

}  // namespace

int main() {
  const TensorFile golden_file = load_tensor(std::string(CUBOCUBIC_TEST_DATA) + "/golden_tensor.json");
  const CoefficientTensor& golden = golden_file.tensor;
  const DeterminantalData gd = assemble(golden);
  const Parallelism par = Parallelism::from_env();

  criterion(1, "swap identity", 1.0, [&](Outcome& o) {
    int passed = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) passed += check_swap_identity(assemble(random_f101(seed))).passed();
    o.require(passed == 100, std::to_string(passed) + "/100 random tensors over F_101");
    o.require(check_swap_identity(gd).passed(), "golden tensor");
  });

  criterion(2, "laplace containment", 5.0, [&](Outcome& o) {
    o.require(check_laplace_containment(gd).passed(), "symbolic expansion on the golden tensor");
    const DeterminantalData d11 = assemble(golden.reduce_mod(11));
    const auto curve = enumerate_curve_points(d11, par);
    std::size_t contained = 0;
    for (const auto& pt : curve) contained += d11.det_M.evaluate(pt.span()).is_zero();
    o.require(contained == curve.size(), "C(F_11) not inside S1(F_11)");
    o.require(base_locus_consistency(d11, curve, par).passed(), "base locus over F_11");
    o.note = std::to_string(curve.size()) + " points of C(F_11) on S1";
  });

  criterion(3, "multidegree (3,3)", 30.0, [&](Outcome& o) {
    for (const auto& f : gd.phi.components()) o.require(f.is_homogeneous() && f.degree() == 3, "phi not cubic");
    for (const auto& f : gd.psi.components()) o.require(f.is_homogeneous() && f.degree() == 3, "psi not cubic");
    const auto r = check_inverse_composition(gd);
    o.require(r.record.passed(), r.record.message);
    o.require(r.lambda && r.lambda->is_homogeneous() && r.lambda->degree() == 8, "lambda of degree 8");
    o.require(r.mu && r.mu->is_homogeneous() && r.mu->degree() == 8, "mu of degree 8");
  });

  criterion(4, "surface transfer", 30.0, [&](Outcome& o) {
    const auto r = check_surface_transfer_symbolic(gd);
    o.require(r.record.passed(), r.record.message);
    o.require(r.q && r.q->degree() == 8, "deg q = 8");
    o.require(r.q_mirror && r.q_mirror->degree() == 8, "mirror quotient of degree 8");
  });

  criterion(5, "hilbert function", 10.0, [&](Outcome& o) {
    const GradedIdealView ideal({gd.phi.components().begin(), gd.phi.components().end()});
    std::vector<std::int64_t> hf;
    for (int d = 1; d <= 8; ++d) {
      hf.push_back(static_cast<std::int64_t>(hilbert_dim(ideal, d)));
      o.require(hf.back() == 6 * d - 2 && hf.back() == hilbert_burch_dim(d), "HF(" + std::to_string(d) + ")");
    }
    o.require(fit_degree_genus(hf[5], hf[6], hf[7]) == DegreeGenus{6, 3}, "degree/genus fit");
    o.require(curve_degree_genus(ideal) == DegreeGenus{6, 3}, "curve_degree_genus");
  });

  criterion(6, "weil bounds", 10.0, [&](Outcome& o) {
    for (std::uint64_t p : {7ULL, 11ULL, 13ULL}) {
      const DeterminantalData d = assemble(golden.reduce_mod(p));
      const auto curve = enumerate_curve_points(d, par);
      const auto rec = curve_point_count(d, curve);
      o.require(rec.passed(), rec.name + ": " + rec.message);
      o.note += (o.note.empty() ? "" : ", ") + std::string("#C(F_") + std::to_string(p) +
                ")=" + std::to_string(curve.size());
    }
  });

  criterion(7, "smoothness scans", 30.0, [&](Outcome& o) {
    for (std::uint64_t p : {11ULL, 13ULL}) {
      const DeterminantalData d = assemble(golden.reduce_mod(p));
      const auto curve = enumerate_curve_points(d, par);
      const auto c = smooth_scan_curve(d, curve);
      const auto s1 = smooth_scan_quartic(d.det_M, par, "S1");
      const auto s2 = smooth_scan_quartic(d.det_N, par, "S2");
      o.require(c.passed(), c.name);
      o.require(s1.passed(), s1.name);
      o.require(s2.passed(), s2.name);
    }
  });

  criterion(8, "point transfer", 10.0, [&](Outcome& o) {
    const auto rec = transfer_points(assemble(golden.reduce_mod(11)), par);
    o.require(rec.passed(), rec.message);
    o.note = rec.details["transferred"].dump() + " points of S1(F_11)\\C: " +
             rec.details["round_trips_via_psi"].dump() + " round-trip through psi, " +
             rec.details["round_trips_via_kernel_of_N"].dump() + " map onto C' and return via ker N(y0); " +
             rec.details["kernel_spanned_by_image"].dump() + " span ker M(x0)";
  });

  criterion(9, "intersection matrix", 1.0, [&](Outcome& o) {
    o.require(intersection_matrix() == std::array<std::array<std::int64_t, 2>, 2>{{{4, 6}, {6, 4}}},
              "expected ((4,6),(6,4))");
  });

  double pipeline_secs = 0;
  bool pipeline_pass = false;
  criterion(10, "determinism", 0, [&](Outcome& o) {
    RunConfig one;
    one.parallelism = Parallelism{1};
    RunConfig many = one;
    many.parallelism = Parallelism{4};
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport a = verify(golden, one, golden_file.retries);
    pipeline_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    pipeline_pass = a.verdict();
    const VerificationReport b = verify(golden, many, golden_file.retries);
    o.require(a.to_json().dump(2) == b.to_json().dump(2), "reports differ between 1 and 4 threads");
  });

  criterion(11, "degenerate inputs", 0, [&](Outcome& o) {
    const CoefficientTensor zero(Field::rational());
    o.require(kind_of([&] { (void)build_data(zero); }) == ErrorKind::DegenerateTensor, "zero tensor");
    CoefficientTensor dup = golden;
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) dup.set(1, j, k, dup.at(0, j, k));
    }
    const DeterminantalData dd = assemble(dup);
    o.require(kind_of([&] { (void)proportionality_factor(compose(dd.psi, dd.phi)); }) == ErrorKind::NotBirational,
              "duplicated rows");
    const auto rec = check_inverse_composition(dd);
    o.require(!rec.record.passed() && rec.record.message.find("NotBirational") != std::string::npos,
              "inverse_composition record");
  });

  criterion(12, "full verify budget", 0, [&](Outcome& o) {
    o.require(pipeline_pass, "golden verify verdict");
    o.require(pipeline_secs < 120.0, "verify exceeded 2 minutes");
    char buf[64];
    std::snprintf(buf, sizeof buf, "verify took %.3fs (budget 120s)", pipeline_secs);
    o.note = buf;
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
