#include "acnet/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace acnet {

namespace {

using nlohmann::json;

std::string render(double x) {
  if (!std::isfinite(x)) throw IoError("cannot serialize non-finite number");
  if (x == 0.0 && std::signbit(x)) return "-0.0";  // "-0" would parse as integer zero
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

std::string render(Complex z) { return "[" + render(z.real()) + ", " + render(z.imag()) + "]"; }

json parse_document(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(origin + ": " + e.what());
  }
}

double number_at(const json& j, const std::string& origin, const std::string& where) {
  if (!j.is_number()) throw IoError(origin + ": " + where + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw IoError(origin + ": " + where + " is not finite");
  return x;
}

Complex complex_at(const json& j, const std::string& origin, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw IoError(origin + ": " + where + " must be a two-element [re, im] array");
  return {number_at(j[0], origin, where + "[0]"), number_at(j[1], origin, where + "[1]")};
}

std::size_t count_at(const json& j, const std::string& origin, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw IoError(origin + ": " + where + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return buffer.str();
}

void write_file(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out.good()) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string matrix_to_string(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw IoError("matrix file requires a square matrix of size >= 1");
  std::string out = "{\n  \"size\": " + std::to_string(n) + ",\n  \"entries\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    out += "    ";
    for (std::size_t j = 0; j < n; ++j) {
      out += render(m(i, j));
      if (j + 1 < n) out += ", ";
    }
    out += (i + 1 < n) ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

ComplexMatrix matrix_from_string(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  if (!doc.is_object()) throw IoError(origin + ": matrix file must be a JSON object");
  if (!doc.contains("size")) throw IoError(origin + ": missing \"size\"");
  if (!doc.contains("entries")) throw IoError(origin + ": missing \"entries\"");

  const std::size_t n = count_at(doc["size"], origin, "\"size\"");
  if (n == 0) throw IoError(origin + ": \"size\" must be at least 1");
  const json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != n * n)
    throw IoError(origin + ": \"entries\" must hold exactly size*size = " +
                  std::to_string(n * n) + " pairs");

  ComplexMatrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k)
    m(k / n, k % n) = complex_at(entries[k], origin, "entries[" + std::to_string(k) + "]");
  return m;
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  return matrix_from_string(read_file(path), path.string());
}

void write_matrix(const ComplexMatrix& m, const std::filesystem::path& path) {
  write_file(matrix_to_string(m), path);
}

std::string network_to_string(const Network& net) {
  std::string out = "{\n  \"boundary_count\": " + std::to_string(net.boundary_count()) +
                    ",\n  \"interior_count\": " + std::to_string(net.interior_count()) +
                    ",\n  \"edges\": [";
  for (std::size_t i = 0; i < net.edges().size(); ++i) {
    const Edge& e = net.edges()[i];
    out += (i == 0) ? "\n" : ",\n";
    out += "    {\"u\": " + std::to_string(e.u) + ", \"v\": " + std::to_string(e.v) +
           ", \"conductance\": " + render(e.conductance) + "}";
  }
  out += net.edges().empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

Network network_from_string(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  if (!doc.is_object()) throw IoError(origin + ": network file must be a JSON object");
  for (const char* key : {"boundary_count", "interior_count", "edges"})
    if (!doc.contains(key)) throw IoError(origin + ": missing \"" + std::string(key) + "\"");

  const std::size_t boundary = count_at(doc["boundary_count"], origin, "\"boundary_count\"");
  const std::size_t interior = count_at(doc["interior_count"], origin, "\"interior_count\"");
  const json& edges_json = doc["edges"];
  if (!edges_json.is_array()) throw IoError(origin + ": \"edges\" must be an array");

  std::vector<Edge> edges;
  edges.reserve(edges_json.size());
  for (std::size_t k = 0; k < edges_json.size(); ++k) {
    const json& e = edges_json[k];
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (!e.is_object()) throw IoError(origin + ": " + where + " must be an object");
    for (const char* key : {"u", "v", "conductance"})
      if (!e.contains(key)) throw IoError(origin + ": " + where + " missing \"" + key + "\"");
    edges.push_back({count_at(e["u"], origin, where + ".u"), count_at(e["v"], origin, where + ".v"),
                     complex_at(e["conductance"], origin, where + ".conductance")});
  }
  return Network(boundary, interior, merge_parallel_edges(edges));
}

Network read_network(const std::filesystem::path& path) {
  return network_from_string(read_file(path), path.string());
}

void write_network(const Network& net, const std::filesystem::path& path) {
  write_file(network_to_string(net), path);
}

std::string vector_to_string(const ComplexVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += render(v[i]);
  }
  out += "]\n";
  return out;
}

ComplexVector vector_from_string(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  if (!doc.is_array()) throw IoError(origin + ": vector file must be a JSON array of [re, im] pairs");
  ComplexVector v(doc.size());
  for (std::size_t k = 0; k < doc.size(); ++k)
    v[k] = complex_at(doc[k], origin, "[" + std::to_string(k) + "]");
  return v;
}

ComplexVector read_vector(const std::filesystem::path& path) {
  return vector_from_string(read_file(path), path.string());
}

void write_vector(const ComplexVector& v, const std::filesystem::path& path) {
  write_file(vector_to_string(v), path);
}

}  // namespace acnet
