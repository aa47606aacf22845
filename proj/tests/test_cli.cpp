#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sympow/cli.hpp"

using namespace sympow;

namespace {

struct TempConfig {
  std::string path;

  explicit TempConfig(const std::string& contents) {
    static int counter = 0;
    path = "sympow_test_cfg_" + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << contents;
  }
  ~TempConfig() { std::remove(path.c_str()); }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

const char* kAc3 = R"({"kind":"ac","n":3,"slopes":["1","2"]})";
const char* kNci2 = R"({"kind":"nci","n":2,"alphas":["1","2"],"betas":["1","2"]})";
const char* kNci1 = R"({"kind":"nci","n":1,"alphas":["1"],"betas":["1"]})";

}  // namespace

TEST_CASE("decide emits a verdict document") {
  TempConfig cfg(kAc3);
  const RunResult r = run({"decide", "--config", cfg.path, "--m", "2", "--r", "2", "--json"});
  CHECK(r.code == 0);
  const OrderedJson doc = OrderedJson::parse(r.out);
  CHECK(doc["contained"] == false);
  CHECK(doc["method"] == "closed_form");
  CHECK(doc["threshold"] == "15/7");
  CHECK(doc["witness"]["i"] == 3);
  CHECK(doc["witness"]["l"] == 1);
  CHECK(doc["m"] == 2);
  CHECK(doc["r"] == 2);
  // exactly one newline-terminated document
  CHECK(r.out.back() == '\n');
  CHECK(doc.dump() + "\n" == r.out);
}

TEST_CASE("verdicts agree across decision methods") {
  TempConfig cfg(kNci2);
  for (int m = 1; m <= 4; ++m) {
    for (int r = 1; r <= 4; ++r) {
      const RunResult closed = run({"decide", "--config", cfg.path, "--m",
                                    std::to_string(m), "--r", std::to_string(r),
                                    "--method", "closed-form", "--json"});
      const RunResult lattice = run({"decide", "--config", cfg.path, "--m",
                                     std::to_string(m), "--r", std::to_string(r),
                                     "--method", "lattice", "--json"});
      const OrderedJson a = OrderedJson::parse(closed.out);
      const OrderedJson b = OrderedJson::parse(lattice.out);
      CHECK(a["contained"] == b["contained"]);
      CHECK(a["witness"].is_null() == b["witness"].is_null());
    }
  }
  const RunResult two_two =
      run({"decide", "--config", cfg.path, "--m", "2", "--r", "2", "--json"});
  const OrderedJson w = OrderedJson::parse(two_two.out)["witness"];
  CHECK(w["a"] == 1);
  CHECK(w["b"] == 1);
  CHECK(w["c"] == 0);
  CHECK(w["d"] == 1);
}

TEST_CASE("oracle method decides the same verdicts") {
  TempConfig cfg(kNci1);
  for (int m : {1, 2, 3}) {
    for (int r : {1, 2}) {
      const RunResult closed = run({"decide", "--config", cfg.path, "--m",
                                    std::to_string(m), "--r", std::to_string(r), "--json"});
      const RunResult oracle = run({"decide", "--config", cfg.path, "--m",
                                    std::to_string(m), "--r", std::to_string(r),
                                    "--method", "oracle", "--json"});
      CHECK(OrderedJson::parse(closed.out)["contained"] ==
            OrderedJson::parse(oracle.out)["contained"]);
      CHECK(OrderedJson::parse(oracle.out)["method"] == "oracle");
    }
  }
  TempConfig ac(kAc3);
  const RunResult r = run({"decide", "--config", ac.path, "--m", "2", "--r", "2",
                           "--method", "oracle", "--json"});
  const OrderedJson doc = OrderedJson::parse(r.out);
  CHECK(doc["contained"] == false);
  CHECK(doc["witness"]["poly"] == "x^3*z - 3*x^2*y*z + 2*x*y^2*z");
}

TEST_CASE("resurgence output") {
  TempConfig cfg(kNci2);
  CHECK(run({"resurgence", "--config", cfg.path}).out == "4/3\n");
  const RunResult est = run({"resurgence", "--config", cfg.path, "--estimate", "4", "--json"});
  const OrderedJson doc = OrderedJson::parse(est.out);
  CHECK(doc["resurgence_estimate"] == "1");
  CHECK(doc["N"] == 4);
}

TEST_CASE("alpha output") {
  TempConfig cfg(kAc3);
  CHECK(run({"alpha", "--config", cfg.path, "--symbolic", "3"}).out == "5\n");
  CHECK(run({"alpha", "--config", cfg.path, "--power", "4"}).out == "8\n");
  CHECK(run({"alpha", "--config", cfg.path}).code == 2);
}

TEST_CASE("basis listing") {
  TempConfig cfg(kAc3);
  const RunResult r =
      run({"basis", "--config", cfg.path, "--degree", "2", "--symbolic", "1", "--json"});
  CHECK(r.code == 0);
  const OrderedJson doc = OrderedJson::parse(r.out);
  CHECK(doc["count"] == 2);
  CHECK(doc["elements"][0]["i"] == 1);
  CHECK(doc["elements"][0]["poly"] == "x*z");
  CHECK(doc["elements"][1]["poly"] == "y*z");
}

TEST_CASE("verify runs a claim and reports cells") {
  TempConfig cfg(kAc3);
  const RunResult r = run({"verify", "--config", cfg.path, "--claim", "basis_sym",
                           "--m-max", "2", "--max-degree", "6", "--json"});
  CHECK(r.code == 0);
  const OrderedJson doc = OrderedJson::parse(r.out);
  CHECK(doc["claim"] == "basis_sym");
  CHECK(doc["all_pass"] == true);
  CHECK(doc["max_degree"] == 6);
  CHECK(doc["cells"].size() == 2 * 7);
  // byte-identical round trip
  CHECK(doc.dump() + "\n" == r.out);
}

TEST_CASE("verify with default bounds covers the basis claims") {
  TempConfig cfg(kAc3);
  const RunResult r = run({"verify", "--config", cfg.path, "--claim", "basis_sym", "--json"});
  CHECK(r.code == 0);
  const OrderedJson doc = OrderedJson::parse(r.out);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["max_degree"] == 10);
  CHECK(doc["cells"].size() == 3 * 11);
}

TEST_CASE("verification failure exits with 3") {
  TempConfig cfg(kAc3);
  // A degree bound of 2 cannot exhibit the escape for the failing pair
  // (2, 2), so the containment summary cell flags it.
  const RunResult r = run({"verify", "--config", cfg.path, "--claim", "containment",
                           "--m-max", "2", "--r-max", "2", "--max-degree", "2", "--json"});
  CHECK(r.code == 3);
  const OrderedJson doc = OrderedJson::parse(r.out);
  CHECK(doc["all_pass"] == false);
}

TEST_CASE("the full catalogue runs to completion") {
  TempConfig cfg(kNci1);
  const RunResult r = run({"verify", "--config", cfg.path, "--claim", "all", "--json"});
  CHECK(r.code == 0);
  const OrderedJson doc = OrderedJson::parse(r.out);
  CHECK(doc["claim"] == "all");
  CHECK(doc["all_pass"] == true);
  CHECK(doc["reports"].size() == 9);
  CHECK(doc.dump() + "\n" == r.out);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({"decide", "--config", "no_such_file.json", "--m", "1", "--r", "1"}).code == 2);
  TempConfig bad(R"({"kind":"ac","n":3,"slopes":["1","1"]})");
  CHECK(run({"decide", "--config", bad.path, "--m", "1", "--r", "1"}).code == 2);
  TempConfig cfg(kAc3);
  CHECK(run({"verify", "--config", cfg.path, "--claim", "no_such_claim"}).code == 2);
  CHECK(run({"verify", "--config", cfg.path, "--claim", "nci_split_odd"}).code == 2);
  CHECK(run({"decide", "--config", cfg.path, "--m", "0", "--r", "1"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("the degenerate NCI prints a caveat and tags documents") {
  TempConfig cfg(kNci1);
  const RunResult r = run({"decide", "--config", cfg.path, "--m", "2", "--r", "2", "--json"});
  CHECK(r.code == 0);
  CHECK(r.err.find("degenerate") != std::string::npos);
  const OrderedJson doc = OrderedJson::parse(r.out);
  CHECK(doc.contains("scope_note"));

  TempConfig big(kNci2);
  const RunResult clean = run({"decide", "--config", big.path, "--m", "2", "--r", "2", "--json"});
  CHECK_FALSE(OrderedJson::parse(clean.out).contains("scope_note"));
}

TEST_CASE("config documents round trip") {
  for (const char* text : {kAc3, kNci2, kNci1}) {
    const Config cfg = config_from_json(OrderedJson::parse(text));
    const OrderedJson emitted = config_to_json(cfg);
    CHECK(emitted.dump() == OrderedJson::parse(text).dump());
    const Config again = config_from_json(emitted);
    CHECK(config_to_json(again).dump() == emitted.dump());
  }
}
