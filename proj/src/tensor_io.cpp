#include "cubocubic/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubocubic/error.hpp"

namespace cubocubic {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Field parse_field(const nlohmann::json& f) {
  if (f.is_string()) {
    if (f.get<std::string>() == "rational") return Field::rational();
    parse_error("unknown field \"" + f.get<std::string>() + "\"");
  }
  if (f.is_object() && f.size() == 1 && f.contains("prime") && f["prime"].is_number_unsigned()) {
    const auto p = f["prime"].get<std::uint64_t>();
    try {
      return Field::prime(p);
    } catch (const Error&) {
      parse_error("field prime " + std::to_string(p) + " is not a prime below 2^31");
    }
  }
  parse_error(R"(field must be "rational" or {"prime": P})");
}

}  // namespace

TensorFile parse_tensor(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(e.what());
  }
  if (!doc.is_object()) parse_error("tensor file must be a JSON object");
  if (!doc.contains("field")) parse_error("missing \"field\"");
  if (!doc.contains("a")) parse_error("missing \"a\"");
  const Field field = parse_field(doc["field"]);

  const auto& a = doc["a"];
  std::vector<FieldElem> entries;
  entries.reserve(CoefficientTensor::kSize);
  auto require_len4 = [](const nlohmann::json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 4) parse_error(where + " must be an array of length 4");
  };
  require_len4(a, "a");
  for (std::size_t i = 0; i < 4; ++i) {
    require_len4(a[i], "a[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < 4; ++j) {
      const auto where = "a[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      require_len4(a[i][j], where);
      for (std::size_t k = 0; k < 4; ++k) {
        const auto& v = a[i][j][k];
        if (!v.is_number_integer()) parse_error(where + "[" + std::to_string(k) + "] is not an integer");
        if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
          parse_error(where + " entry out of range");
        }
        entries.emplace_back(field, static_cast<long long>(v.get<std::int64_t>()));
      }
    }
  }

  TensorFile out{CoefficientTensor(field, std::move(entries)), std::nullopt};
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) parse_error("seed must be a nonnegative integer");
    out.tensor.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("retries")) {
    if (!doc["retries"].is_number_unsigned()) parse_error("retries must be a nonnegative integer");
    out.retries = doc["retries"].get<std::uint64_t>();
  }
  return out;
}

TensorFile load_tensor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  TensorFile tf = parse_tensor(buf.str());
  tf.tensor.source = path.filename().string();
  return tf;
}

std::string serialize_tensor(const CoefficientTensor& t, std::optional<std::uint64_t> retries) {
  std::ostringstream os;
  os << "{\n  \"field\": ";
  if (t.field().is_rational()) {
    os << "\"rational\"";
  } else {
    os << "{\"prime\": " << t.field().characteristic() << "}";
  }
  os << ",\n";
  if (t.seed) os << "  \"seed\": " << *t.seed << ",\n";
  if (retries) os << "  \"retries\": " << *retries << ",\n";
  os << "  \"a\": [\n";
  for (std::size_t i = 0; i < 4; ++i) {
    os << "    [";
    for (std::size_t j = 0; j < 4; ++j) {
      os << (j ? ", [" : "[");
      for (std::size_t k = 0; k < 4; ++k) {
        const FieldElem& e = t.at(i, j, k);
        if (t.field().is_rational() && e.rational().get_den() != 1) {
          throw Error(ErrorKind::InvalidArgument, "tensor files hold integer entries only");
        }
        os << (k ? ", " : "") << e.to_string();
      }
      os << "]";
    }
    os << (i < 3 ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

void save_tensor(const std::filesystem::path& path, const CoefficientTensor& t, std::optional<std::uint64_t> retries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << serialize_tensor(t, retries);
}

}  // namespace cubocubic
