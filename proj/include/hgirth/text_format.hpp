#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hgirth/hypergraph.hpp"

namespace hgirth {

// Canonical line-oriented formats. Serialization is bit-exact and the parsers
// accept only canonical text, reporting the first deviation with its line
// number.
//
//   hgt 1                  bgt 1
//   vertices <N>           left <n1>
//   edges <M>              right <n2>
//   e <v1> ... <vk>        a <u> <v>      (one line per incidence, sorted)

std::string to_hgt(const Hypergraph& h);
std::string to_bgt(const BipartiteGraph& g);

Hypergraph parse_hgt(std::string_view text);
BipartiteGraph parse_bgt(std::string_view text);

enum class FileKind { hypergraph, bipartite, certificate, unknown };

/// Classifies text by its first line.
FileKind sniff(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary sibling opened exclusively, then renames over
/// the target.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace hgirth
