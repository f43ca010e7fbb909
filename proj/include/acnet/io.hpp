#pragma once

#include <filesystem>
#include <string>

#include "acnet/matrix.hpp"
#include "acnet/network.hpp"

namespace acnet {

/// JSON serialization with deterministic bytes: fixed key order and shortest
/// round-trip decimal rendering, so equal values always produce identical
/// files and every finite double survives a write/read cycle bit for bit.
/// All parse failures throw IoError with a position and reason.

std::string matrix_to_string(const ComplexMatrix& m);
ComplexMatrix matrix_from_string(const std::string& text, const std::string& origin = "<string>");
ComplexMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const ComplexMatrix& m, const std::filesystem::path& path);

/// Networks are written with edges sorted by (u, v); parallel edges in input
/// files are summed into a single conductance before the Network is built.
std::string network_to_string(const Network& net);
Network network_from_string(const std::string& text, const std::string& origin = "<string>");
Network read_network(const std::filesystem::path& path);
void write_network(const Network& net, const std::filesystem::path& path);

/// Complex vectors (boundary voltages) as a bare JSON array of [re, im] pairs.
std::string vector_to_string(const ComplexVector& v);
ComplexVector vector_from_string(const std::string& text, const std::string& origin = "<string>");
ComplexVector read_vector(const std::filesystem::path& path);
void write_vector(const ComplexVector& v, const std::filesystem::path& path);

}  // namespace acnet
