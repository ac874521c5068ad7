// Command-line driver: generate, verify, scan, hilbert, intersection-matrix.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cubocubic/cremona.hpp"
#include "cubocubic/error.hpp"
#include "cubocubic/geometry.hpp"
#include "cubocubic/pipeline.hpp"
#include "cubocubic/tensor_io.hpp"

namespace {

using namespace cubocubic;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Field parse_field_flag(const std::string& s) {
  if (s == "rational" || s == "QQ") return Field::rational();
  try {
    std::size_t used = 0;
    const unsigned long long p = std::stoull(s, &used);
    if (used == s.size()) return Field::prime(p);
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorKind::InvalidArgument, "--field expects \"rational\" or a prime, got \"" + s + "\"");
}

void parse_range_flag(const std::string& s, RunConfig& cfg) {
  const auto colon = s.find(':', 1);
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    cfg.coeff_lo = std::stoll(s.substr(0, colon));
    cfg.coeff_hi = std::stoll(s.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "--coeff-range expects LO:HI, got \"" + s + "\"");
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + cfg.out);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubo-cubic Cremona transformations and determinantal quartic K3 surfaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.parallelism = Parallelism::from_env();
  std::string field_flag = "rational";
  std::string range_flag = "-5:5";
  std::string format_flag = "text";
  std::string tensor_path;
  std::vector<std::uint64_t> primes;
  std::string target_flag = "curve";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };

  auto* gen = app.add_subcommand("generate", "Draw a seeded tensor that passes the genericity gates");
  gen->add_option("--seed", cfg.seed, "64-bit seed");
  gen->add_option("--field", field_flag, "\"rational\" or a prime");
  gen->add_option("--coeff-range", range_flag, "Integer coefficient range LO:HI");
  gen->add_option("--retries", cfg.retries, "Maximum number of draws");
  gen->add_option("--out", cfg.out, "Tensor file to write (stdout if omitted)");

  auto* ver = app.add_subcommand("verify", "Run every check on a tensor file");
  ver->add_option("tensor", tensor_path, "Tensor JSON file")->required();
  ver->add_option("--prime", primes, "Scan prime (repeatable; default 7 11 13)");
  ver->add_option("--max-degree", cfg.max_degree, "Largest Hilbert-function degree");
  ver->add_flag("--timings", cfg.timings, "Include per-check timings in JSON output");
  add_format(ver);

  auto* sc = app.add_subcommand("scan", "List F_p-points of C, S1 or S2");
  sc->add_option("tensor", tensor_path, "Tensor JSON file")->required();
  sc->add_option("--prime", primes, "Prime")->required()->expected(1);
  sc->add_option("--target", target_flag, "curve | s1 | s2")->check(CLI::IsMember({"curve", "s1", "s2"}));
  add_format(sc);

  auto* hil = app.add_subcommand("hilbert", "Hilbert function of the ideal of the base curve");
  hil->add_option("tensor", tensor_path, "Tensor JSON file")->required();
  hil->add_option("--max-degree", cfg.max_degree, "Largest degree");
  add_format(hil);

  auto* im = app.add_subcommand("intersection-matrix", "Intersection numbers of h1, h2 on S");
  add_format(im);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    cfg.format = format_flag == "json" ? OutputFormat::Json : OutputFormat::Text;
    cfg.field = parse_field_flag(field_flag);
    parse_range_flag(range_flag, cfg);
    if (!primes.empty()) cfg.primes = primes;
    cfg.validate();

    if (gen->parsed()) {
      try {
        const GenerateResult r = generate(cfg);
        const std::string text = serialize_tensor(r.tensor, r.attempt);
        emit(cfg, text);
        std::cerr << "accepted subseed " << r.subseed << " after " << r.attempt << " retries\n";
        return kExitPass;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::GenericityExhausted) throw;
        std::cerr << e.what() << '\n';
        return kExitFail;
      }
    }

    if (ver->parsed()) {
      const TensorFile tf = load_tensor(tensor_path);
      const VerificationReport report = verify(tf.tensor, cfg, tf.retries);
      emit(cfg, cfg.format == OutputFormat::Json ? report.to_json(cfg.timings).dump(2) + "\n"
                                                 : report.to_text());
      return report.verdict() ? kExitPass : kExitFail;
    }

    if (sc->parsed()) {
      const TensorFile tf = load_tensor(tensor_path);
      const ScanTarget target = target_flag == "s1"   ? ScanTarget::S1
                                : target_flag == "s2" ? ScanTarget::S2
                                                      : ScanTarget::Curve;
      const ScanResult r = scan(tf.tensor, cfg.primes.front(), target, cfg.parallelism);
      emit(cfg, cfg.format == OutputFormat::Json ? r.to_json().dump(2) + "\n" : r.to_text());
      return r.within_bounds() ? kExitPass : kExitFail;
    }

    if (hil->parsed()) {
      const TensorFile tf = load_tensor(tensor_path);
      const DeterminantalData d = assemble(tf.tensor);
      const GradedIdealView ideal({d.phi.components().begin(), d.phi.components().end()});
      Json values = Json::array();
      std::string text;
      bool ok = true;
      for (int deg = 1; deg <= cfg.max_degree; ++deg) {
        const auto hf = static_cast<std::int64_t>(hilbert_dim(ideal, deg));
        ok = ok && hf == hilbert_burch_dim(deg);
        values.push_back({{"d", deg}, {"dim", hf}, {"expected", hilbert_burch_dim(deg)}});
        text += "HF(" + std::to_string(deg) + ") = " + std::to_string(hf) + "  (expected " +
                std::to_string(hilbert_burch_dim(deg)) + ")\n";
      }
      Json doc = {{"schema", 1}, {"hilbert_function", values}};
      if (cfg.max_degree >= 8) {
        try {
          const DegreeGenus dg = curve_degree_genus(ideal);
          doc["degree"] = dg.degree;
          doc["genus"] = dg.genus;
          text += "degree " + std::to_string(dg.degree) + ", genus " + std::to_string(dg.genus) + "\n";
        } catch (const Error& e) {
          ok = false;
          doc["error"] = e.what();
          text += std::string(e.what()) + "\n";
        }
      }
      emit(cfg, cfg.format == OutputFormat::Json ? doc.dump(2) + "\n" : text);
      return ok ? kExitPass : kExitFail;
    }

    if (im->parsed()) {
      const auto m = intersection_matrix();
      if (cfg.format == OutputFormat::Json) {
        emit(cfg, Json({{"schema", 1}, {"matrix", {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}}}).dump(2) + "\n");
      } else {
        emit(cfg, "[[" + std::to_string(m[0][0]) + ", " + std::to_string(m[0][1]) + "], [" +
                      std::to_string(m[1][0]) + ", " + std::to_string(m[1][1]) + "]]\n");
      }
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidArgument ||
                   e.kind() == ErrorKind::PrimeTooLarge || e.kind() == ErrorKind::BadPrime ||
                   e.kind() == ErrorKind::FieldMismatch
               ? kExitUsage
               : kExitFail;
  }
  return kExitUsage;
}
