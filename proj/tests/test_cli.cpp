#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "zksym/algebra_io.hpp"
#include "zksym/cli.hpp"
#include "zksym/errors.hpp"
#include "zksym/so5.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zksym::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& body)
      : path_(fs::temp_directory_path() / ("zksym_test_" + std::to_string(::getpid()) + "_" + name)) {
    std::ofstream(path_) << body;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> docs;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) docs.push_back(json::parse(line));
  }
  return docs;
}

}  // namespace

TEST(Cli, InspectBuiltin) {
  const auto r = run({"inspect"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension: 10"), std::string::npos);
  EXPECT_NE(r.out.find("00:2 01:2 10:4 11:2"), std::string::npos);
  EXPECT_NE(r.out.find("valid"), std::string::npos);

  const auto j = run({"inspect", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const auto doc = json::parse(j.out);
  EXPECT_EQ(doc["algebra"]["dim"], 10);
  EXPECT_TRUE(doc["validation"]["valid"].get<bool>());
}

TEST(Cli, InspectCorruptedAlgebra) {
  auto doc = zksym::algebra_to_json(zksym::so5::instance());
  doc["structure"].push_back({0, 2, 4, 0.5});
  TempFile f("bad_algebra.json", doc.dump());
  const auto r = run({"inspect", "--algebra", f.path()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("invalid"), std::string::npos);

  TempFile good("good_algebra.json", zksym::algebra_to_json(zksym::so5::instance()).dump());
  EXPECT_EQ(run({"inspect", "--algebra", good.path()}).code, 0);

  TempFile broken("broken.json", "{\"dim\": 3");
  EXPECT_EQ(run({"inspect", "--algebra", broken.path()}).code, 1);
  EXPECT_EQ(run({"inspect", "--algebra", "/nonexistent/algebra.json"}).code, 1);
}

TEST(Cli, RicciValues) {
  const auto r = run({"ricci", "--t", "1", "--u", "0", "--v", "1", "--w", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["entries"]["rho11"].get<double>(), 2.5, 1e-12);
  EXPECT_NEAR(doc["entries"]["rho55"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(doc["entries"]["rho14"].get<double>(), 0.0, 1e-14);
  EXPECT_EQ(doc["ricci"].size(), 8u);
}

TEST(Cli, TablesText) {
  const auto r = run({"tables", "--t", "1", "--u", "0.5", "--v", "1", "--w", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[X, Y]_m"), std::string::npos);
  EXPECT_NE(r.out.find("U(X, Y)"), std::string::npos);
}

TEST(Cli, CheckNrAndIsometries) {
  auto r = run({"check-nr", "--t", "1", "--u", "0", "--v", "1", "--w", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("false", 0), 0u);
  r = run({"check-nr", "--t", "2", "--u", "0", "--v", "-2", "--w", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["naturally_reductive"].get<bool>());

  r = run({"isometries", "--t", "1", "--u", "0.5", "--v", "2", "--w", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["dimension"], 4);
}

TEST(Cli, LedgerReport) {
  auto r = run({"ledger", "--t", "1", "--u", "0", "--v", "1", "--w", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["first_ledger_condition"].get<bool>());
  r = run({"ledger", "--t", "1", "--u", "0", "--v", "1", "--w", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fails"), std::string::npos);
}

TEST(Cli, ParamsFileJsonAndToml) {
  TempFile js("p.json", R"({"t": 1, "u": 0, "v": 1, "w": 2})");
  TempFile toml("p.toml", "# metric\nt = 1.0\nu = 0.0  # isotropic\nv = 1.0\nw = 2.0\n");
  const auto a = run({"check-nr", "--params", js.path(), "--format", "json"});
  const auto b = run({"check-nr", "--params", toml.path(), "--format", "json"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(json::parse(a.out), json::parse(b.out));

  // Flags override file keys.
  const auto c = run({"check-nr", "--params", toml.path(), "--w", "1", "--format", "json"});
  ASSERT_EQ(c.code, 0);
  EXPECT_TRUE(json::parse(c.out)["naturally_reductive"].get<bool>());

  const auto src = zksym::cli::read_param_file(toml.path());
  EXPECT_EQ(*src.w, 2.0);

  TempFile partial("partial.toml", "t = 1\nv = 1\n");
  EXPECT_EQ(run({"ricci", "--params", partial.path()}).code, 1);
  EXPECT_EQ(run({"ricci", "--params", partial.path(), "--u", "0", "--w", "1"}).code, 0);

  TempFile junk("junk.toml", "t = one\n");
  EXPECT_THROW(zksym::cli::read_param_file(junk.path()), zksym::InvalidInput);
  EXPECT_EQ(run({"ricci", "--params", junk.path()}).code, 1);
}

TEST(Cli, EnvironmentTolerance) {
  ::setenv("ZKSYM_TOL", "1e-3", 1);
  EXPECT_DOUBLE_EQ(zksym::cli::default_tolerance(), 1e-3);
  // u = 1e-4 is naturally reductive up to the looser tolerance only.
  const auto loose = run({"check-nr", "--t", "1", "--u", "1e-4", "--v", "1", "--w", "1"});
  ::unsetenv("ZKSYM_TOL");
  EXPECT_EQ(loose.out.rfind("true", 0), 0u);
  EXPECT_DOUBLE_EQ(zksym::cli::default_tolerance(), 1e-9);
  const auto strict = run({"check-nr", "--t", "1", "--u", "1e-4", "--v", "1", "--w", "1"});
  EXPECT_EQ(strict.out.rfind("false", 0), 0u);
  const auto flag = run({"check-nr", "--t", "1", "--u", "1e-4", "--v", "1", "--w", "1", "--tol", "1e-3"});
  EXPECT_EQ(flag.out.rfind("true", 0), 0u);
}

TEST(Cli, SolveSinglePoints) {
  auto r = run({"solve", "--branch", "u0", "--S", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto docs = json_lines(r.out);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_NEAR(docs[0]["V"].get<double>(), 0.438447, 1e-6);
  EXPECT_NEAR(docs[0]["W"].get<double>(), 4.561553, 1e-6);
  EXPECT_TRUE(docs[0]["verified"].get<bool>());

  r = run({"solve", "--branch", "u1", "--S", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  docs = json_lines(r.out);
  ASSERT_EQ(docs.size(), 4u);
  for (const auto& d : docs) {
    EXPECT_DOUBLE_EQ(d["Usq"].get<double>(), 1.6);
    EXPECT_EQ(d["verification"], "PASS");
  }
}

TEST(Cli, SweepJsonLinesInOrder) {
  const auto r = run({"sweep", "--branch", "u0", "--S-steps", "7", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto docs = json_lines(r.out);
  ASSERT_EQ(docs.size(), 14u);
  double prev = 1.0;
  for (std::size_t i = 0; i < docs.size(); i += 2) {
    const double S = docs[i]["S"].get<double>();
    EXPECT_GT(S, prev);
    EXPECT_LT(S, 9.0);
    EXPECT_EQ(docs[i + 1]["S"].get<double>(), S);
    prev = S;
    EXPECT_TRUE(docs[i]["verified"].get<bool>());
  }

  const auto text = run({"sweep", "--branch", "u1"});
  ASSERT_EQ(text.code, 0) << text.err;
  std::size_t rows = 0;
  for (char ch : text.out) rows += ch == '\n';
  EXPECT_EQ(rows, 1u + 200u);
}

TEST(Cli, SweepCsv) {
  const auto r = run({"sweep", "--branch", "u1", "--S-steps", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("branch,S,V,W,Usq,", 0), 0u);
  int rows = 0;
  for (std::string line; std::getline(in, line); ++rows) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 13);
    EXPECT_EQ(line.back(), '1');
  }
  EXPECT_EQ(rows, 12);
  EXPECT_EQ(run({"ricci", "--t", "1", "--u", "0", "--v", "1", "--w", "1", "--format", "csv"}).code, 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"ricci", "--t", "1", "--u", "4", "--v", "1", "--w", "1"}).code, 1);
  EXPECT_EQ(run({"ricci", "--t", "1", "--u", "-4", "--v", "1", "--w", "1"}).code, 1);
  EXPECT_EQ(run({"ricci", "--t", "0", "--u", "0", "--v", "1", "--w", "1"}).code, 1);
  EXPECT_EQ(run({"ricci", "--t", "1", "--u", "-3.9", "--v", "1", "--w", "1"}).code, 2);
  EXPECT_EQ(run({"ricci", "--t", "1", "--u", "nan", "--v", "1", "--w", "1"}).code, 1);
  EXPECT_EQ(run({"solve", "--branch", "u0", "--S", "1"}).code, 1);
  EXPECT_EQ(run({"solve", "--branch", "u0", "--S", "9"}).code, 1);
  EXPECT_EQ(run({"solve", "--branch", "u1", "--S", "2"}).code, 1);
  EXPECT_EQ(run({"solve", "--branch", "u2", "--S", "2"}).code, 1);
  EXPECT_EQ(run({"solve", "--S", "2"}).code, 1);
  EXPECT_EQ(run({"ricci", "--tol", "-1", "--t", "1", "--u", "0", "--v", "1", "--w", "1"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
