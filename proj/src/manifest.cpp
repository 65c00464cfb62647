#include "skc/manifest.hpp"

#include <cstdio>
#include <fstream>

#include "skc/errors.hpp"
#include "skc/io.hpp"

namespace skc {

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open for digest");
  std::uint64_t h = 14695981039346656037ull;
  char buf[65536];
  for (;;) {
    in.read(buf, sizeof buf);
    const std::streamsize got = in.gcount();
    if (got <= 0) break;
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::string digest_string(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void RunManifest::add_input(const std::string& role, const std::string& path) {
  inputs[role] = {{"path", path}, {"digest", digest_string(fnv1a64_file(path))}};
}

void RunManifest::add_output(const std::string& role, const std::string& path) {
  outputs[role] = path;
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "skc";
  j["version"] = kToolVersion;
  j["manifest_format"] = kManifestFormat;
  j["subcommand"] = subcommand;
  j["params"] = params;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  try {
    if (j.at("tool") != "skc") throw DataError("not an skc manifest");
    if (j.at("manifest_format") != kManifestFormat)
      throw DataError("unsupported manifest format");
    m.subcommand = j.at("subcommand").get<std::string>();
    m.params = j.at("params");
    m.inputs = j.at("inputs");
    m.outputs = j.at("outputs");
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string manifest_path_for(const std::string& output_path) {
  return output_path + ".manifest.json";
}

void write_manifest(const RunManifest& m, const std::string& primary_output_path) {
  atomic_write_text(manifest_path_for(primary_output_path), m.to_json().dump(2) + "\n");
}

RunManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
  return RunManifest::from_json(j);
}

}  // namespace skc
