#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace skc {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kManifestFormat = "1";

/// FNV-1a over the raw file bytes. Collision resistance is irrelevant here;
/// the digest only detects that an input changed between runs.
std::uint64_t fnv1a64_file(const std::string& path);
std::string digest_string(std::uint64_t h);

/// Everything needed to repeat a run: the subcommand, its fully resolved
/// parameters (defaults and derived values filled in), input digests, and
/// where the outputs went. Written next to the primary output as
/// "<output>.manifest.json".
struct RunManifest {
  std::string subcommand;
  nlohmann::ordered_json params;
  nlohmann::ordered_json inputs;   // role -> {path, digest}
  nlohmann::ordered_json outputs;  // role -> path

  void add_input(const std::string& role, const std::string& path);
  void add_output(const std::string& role, const std::string& path);

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

std::string manifest_path_for(const std::string& output_path);
void write_manifest(const RunManifest& m, const std::string& primary_output_path);
RunManifest load_manifest(const std::string& path);

}  // namespace skc
