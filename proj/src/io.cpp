#include "qalloc/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qalloc/errors.hpp"

namespace qalloc {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InvalidInput(std::string("missing \"") + key + "\"");
  }
  return doc.at(key);
}

std::int64_t as_int(const json& node, const std::string& where) {
  if (!node.is_number_integer()) throw InvalidInput(where + " must be an integer");
  return node.get<std::int64_t>();
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  return os.str();
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const json doc = parse_json(text, "instance");
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw InvalidInput("\"kind\" must be a string");
  const auto n = as_int(field(doc, "agents"), "\"agents\"");
  const auto m = as_int(field(doc, "items"), "\"items\"");
  if (n < 1 || m < 1) throw InvalidInput("\"agents\" and \"items\" must be positive");

  const json& qs = field(doc, "quantiles");
  if (!qs.is_array() || static_cast<std::int64_t>(qs.size()) != n) {
    throw InvalidInput("\"quantiles\" must list one \"p/q\" string per agent");
  }
  std::vector<Quantile> quantiles;
  for (const json& q : qs) {
    if (!q.is_string()) throw InvalidInput("quantiles are written as \"p/q\" strings");
    quantiles.push_back(Quantile::parse(q.get<std::string>()));
  }

  const json& rows = field(doc, "values");
  if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != n) {
    throw InvalidInput("\"values\" must have one row per agent");
  }
  std::vector<Value> values;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != m) {
      throw InvalidInput("value row " + std::to_string(i) + " must have " + std::to_string(m) +
                         " entries");
    }
    for (const json& v : row) values.push_back(as_int(v, "value entries"));
  }
  return Instance(parse_kind(kind.get<std::string>()), std::move(quantiles), std::move(values),
                  static_cast<int>(m));
}

std::string format_instance(const Instance& instance) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"kind\": \"" << to_string(instance.kind()) << "\",\n";
  os << "  \"agents\": " << instance.agents() << ",\n";
  os << "  \"items\": " << instance.items() << ",\n";
  std::vector<std::string> qs;
  for (const Quantile& q : instance.quantiles()) qs.push_back('"' + q.to_string() + '"');
  os << "  \"quantiles\": [" << join(qs) << "],\n";
  os << "  \"values\": [\n";
  for (int i = 0; i < instance.agents(); ++i) {
    const auto row = instance.row(i);
    os << "    [" << join(std::vector<Value>(row.begin(), row.end())) << "]"
       << (i + 1 < instance.agents() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

AllocationFile parse_allocation(const std::string& text) {
  const json doc = parse_json(text, "allocation");
  const json& owner = field(doc, "owner");
  if (!owner.is_array()) throw InvalidInput("\"owner\" must be an array");
  AllocationFile file;
  for (const json& a : owner) {
    const auto idx = as_int(a, "owner entries");
    if (idx < 0 || idx > std::numeric_limits<int>::max()) {
      throw InvalidInput("owner index " + std::to_string(idx) + " is out of range");
    }
    file.allocation.owner.push_back(static_cast<int>(idx));
  }
  if (doc.contains("welfare")) file.welfare = as_int(doc.at("welfare"), "\"welfare\"");
  if (doc.contains("algorithm")) {
    if (!doc.at("algorithm").is_string()) throw InvalidInput("\"algorithm\" must be a string");
    file.algorithm = doc.at("algorithm").get<std::string>();
  }
  if (doc.contains("feasible")) {
    if (!doc.at("feasible").is_boolean()) throw InvalidInput("\"feasible\" must be a boolean");
    file.feasible = doc.at("feasible").get<bool>();
  }
  return file;
}

std::string format_allocation(const AllocationFile& file) {
  std::ostringstream os;
  os << "{\n  \"owner\": [" << join(file.allocation.owner) << "]";
  if (file.welfare) os << ",\n  \"welfare\": " << *file.welfare;
  if (file.algorithm) os << ",\n  \"algorithm\": " << json(*file.algorithm).dump();
  if (file.feasible) os << ",\n  \"feasible\": " << (*file.feasible ? "true" : "false");
  os << "\n}\n";
  return os.str();
}

AllocationFile to_file(const SolveReport& report) {
  return AllocationFile{report.allocation, report.welfare, report.algorithm, report.feasible};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

}  // namespace qalloc
