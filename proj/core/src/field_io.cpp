#include "claws/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "claws/errors.hpp"

namespace claws {

namespace {

std::filesystem::path with_suffix(const std::filesystem::path& stem, const char* suffix) {
  return std::filesystem::path(stem.string() + suffix);
}

std::string encode_le(const std::vector<double>& values) {
  std::string bytes(values.size() * 8, '\0');
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto bits = std::bit_cast<std::uint64_t>(values[i]);
    for (int b = 0; b < 8; ++b) bytes[i * 8 + b] = static_cast<char>((bits >> (8 * b)) & 0xffu);
  }
  return bytes;
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = with_suffix(path, ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_snapshot(const RealField& field, const std::filesystem::path& stem) {
  const Grid& g = field.grid;
  nlohmann::ordered_json header;
  header["format"] = "claws-snapshot";
  header["version"] = 1;
  header["dim"] = g.dim();
  header["points"] = g.points();
  header["length"] = g.length();
  header["dtype"] = "float64";
  header["byte_order"] = "little";
  header["layout"] = "row-major";
  header["origin"] = -0.5 * g.length();
  header["tag"] = field.tag == Provenance::raw ? "raw" : "dealiased";
  write_file_atomic(with_suffix(stem, ".bin"), encode_le(field.values));
  write_file_atomic(with_suffix(stem, ".json"), header.dump(2) + "\n");
}

RealField read_snapshot(const std::filesystem::path& stem) {
  std::ifstream hin(with_suffix(stem, ".json"));
  if (!hin) throw Error("missing snapshot header for " + stem.string());
  const auto header = nlohmann::json::parse(hin);
  const Grid g(header.at("dim").get<int>(), header.at("points").get<int>(),
               header.at("length").get<double>());

  std::ifstream bin(with_suffix(stem, ".bin"), std::ios::binary);
  if (!bin) throw Error("missing snapshot payload for " + stem.string());
  std::string bytes((std::istreambuf_iterator<char>(bin)), std::istreambuf_iterator<char>());
  if (bytes.size() != g.size() * 8) throw Error("snapshot payload size does not match header");

  std::vector<double> values(g.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) {
      bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i * 8 + b])) << (8 * b);
    }
    values[i] = std::bit_cast<double>(bits);
  }
  const auto tag = header.value("tag", "raw") == "dealiased" ? Provenance::dealiased : Provenance::raw;
  return RealField(g, std::move(values), tag);
}

}  // namespace claws
