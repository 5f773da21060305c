#include <isoparam/errors.hpp>
#include <isoparam/verify/report.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace isoparam::verify {

bool Report::ok() const {
  for (const auto& r : records)
    if (!r.check.ok()) return false;
  return true;
}

std::size_t Report::count(Status s) const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.check.status == s;
  return c;
}

namespace {

nlohmann::json record_json(const Record& r, bool timings) {
  nlohmann::json j{{"claim", r.check.claim},
                   {"paper_ref", r.check.paper_ref},
                   {"status", to_string(r.check.status)},
                   {"witness", r.check.witness}};
  j["elapsed_ms"] = timings ? r.elapsed_ms : 0.0;
  return j;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Report::determinism_hash() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j = record_json(r, false);
    j.erase("elapsed_ms");
    arr.push_back(std::move(j));
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a(config.dump() + arr.dump());
  return out.str();
}

nlohmann::json Report::to_json(bool timings) const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) recs.push_back(record_json(r, timings));
  return {{"schema", "isocheck-report/1"},
          {"config", config},
          {"summary",
           {{"total", records.size()},
            {"pass", count(Status::pass)},
            {"flagged", count(Status::flagged)},
            {"fail", count(Status::fail)},
            {"ok", ok()}}},
          {"determinism_hash", determinism_hash()},
          {"records", recs}};
}

void write_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw PreconditionError("cannot open " + tmp + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace isoparam::verify
