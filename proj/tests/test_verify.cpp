#include <isoparam/errors.hpp>
#include <isoparam/verify/dump.hpp>
#include <isoparam/verify/report.hpp>
#include <isoparam/verify/suite.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace isoparam;
using namespace isoparam::verify;

TEST_SUITE("verify") {
  TEST_CASE("run config parsing and validation") {
    RunConfig def;
    CHECK_NOTHROW(def.validate());
    const RunConfig c = RunConfig::from_json(nlohmann::json::parse(
        R"({"n_range": [3, 4], "k_max": 20, "tau_samples": ["9/4", "-1"], "tolerances": {"cmc": 1e-7}, "timings": false})"));
    CHECK(c.n_range == std::vector<int>{3, 4});
    CHECK(c.k_max == 20);
    CHECK(c.tau_samples.size() == 2);
    CHECK(c.tau_samples[0] == exact::make_rational(9, 4));
    CHECK(c.tol.cmc == 1e-7);
    CHECK(c.tol.jacobi == 1e-9);
    CHECK_FALSE(c.timings);
    CHECK(RunConfig::from_json(c.to_json()).to_json() == c.to_json());

    RunConfig bad;
    bad.n_range = {1};
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    bad.n_range = {3};
    bad.k_max = 5;
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    CHECK_THROWS_AS(RunConfig::from_json(nlohmann::json::parse(R"({"n_range": "two"})")), PreconditionError);
    CHECK_THROWS_AS(RunConfig::from_json(nlohmann::json::array()), PreconditionError);
  }

  TEST_CASE("dump targets") {
    const std::string z = dump({"Z", "2"}, DumpFormat::csv);
    std::istringstream lines(z);
    std::string first;
    std::getline(lines, first);
    CHECK(first.find("t") != std::string::npos);
    int count = 1;
    for (std::string l; std::getline(lines, l);) ++count;
    CHECK(count >= 3);

    const nlohmann::json zj = nlohmann::json::parse(dump({"Z", "3"}, DumpFormat::json));
    CHECK(zj["rows"] == 5);
    CHECK(zj["cols"] == 6);

    const nlohmann::json bowl = nlohmann::json::parse(dump({"bowl", "3", "1"}, DumpFormat::json));
    CHECK(bowl["rho"] == "1/2");

    CHECK_NOTHROW(dump({"kac", "4"}, DumpFormat::json));
    CHECK_NOTHROW(dump({"Q", "3", "2"}, DumpFormat::csv));
    CHECK_NOTHROW(dump({"system", "3"}, DumpFormat::csv));
    CHECK_NOTHROW(dump({"profile", "horosphere", "3", "1", "0.2", "0", "1"}, DumpFormat::csv));
    CHECK_THROWS_AS(dump({"nonsense"}, DumpFormat::json), PreconditionError);
    CHECK_THROWS_AS(dump({"Z"}, DumpFormat::json), PreconditionError);
    CHECK_THROWS_AS(dump({"Q", "3", "0"}, DumpFormat::json), PreconditionError);
  }

  TEST_CASE("report schema and determinism") {
    RunConfig c;
    c.n_range = {2, 3};
    const Report a = run_verify(c), b = run_verify(c);
    CHECK(a.ok());
    CHECK(a.records.size() >= 30);
    CHECK(a.count(Status::fail) == 0);
    CHECK(a.determinism_hash() == b.determinism_hash());
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());

    const nlohmann::json j = a.to_json();
    CHECK(j["schema"] == "isocheck-report/1");
    CHECK(j.contains("config"));
    CHECK(j.contains("summary"));
    CHECK(j["determinism_hash"] == a.determinism_hash());
    for (const auto& r : j["records"]) {
      for (const char* key : {"claim", "paper_ref", "status", "witness", "elapsed_ms"}) CHECK(r.contains(key));
      const std::string s = r["status"];
      CHECK((s == "pass" || s == "flagged"));
    }
  }

  TEST_CASE("hash sees record content") {
    Report r;
    r.records.push_back({make_check("x", "y", true), 1.0});
    const std::string h1 = r.determinism_hash();
    r.records[0].elapsed_ms = 99.0;
    CHECK(r.determinism_hash() == h1);
    r.records[0].check.witness["v"] = 1;
    CHECK(r.determinism_hash() != h1);
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  }

  TEST_CASE("atomic write") {
    const auto dir = std::filesystem::temp_directory_path() / "isocheck_test_write";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "out.json").string();
    write_atomic(path, "first");
    write_atomic(path, "second");
    std::ifstream in(path);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body == "second");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
  }
}
