#pragma once

#include <isoparam/check.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace isoparam::verify {

struct Record {
  ClaimCheck check;
  double elapsed_ms = 0.0;
};

struct Report {
  nlohmann::json config = nlohmann::json::object();
  std::vector<Record> records;

  bool ok() const;
  std::size_t count(Status s) const;
  // timings = false writes elapsed_ms as 0 so the file is byte-stable.
  nlohmann::json to_json(bool timings = true) const;
  // FNV-1a over the serialized records with elapsed_ms removed.
  std::string determinism_hash() const;
};

std::uint64_t fnv1a(std::string_view bytes);

// Writes to path + ".tmp" and renames over path.
void write_atomic(const std::string& path, const std::string& contents);

}  // namespace isoparam::verify
