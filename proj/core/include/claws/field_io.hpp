#pragma once

#include <filesystem>

#include "claws/field.hpp"

namespace claws {

/// Writes `<stem>.bin` (little-endian float64, row-major, last axis fastest)
/// and `<stem>.json` (grid metadata).  Both files are written atomically.
void write_snapshot(const RealField& field, const std::filesystem::path& stem);

RealField read_snapshot(const std::filesystem::path& stem);

/// Writes `contents` to `path` through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace claws
