#include <doctest.h>

#include <stdexcept>
#include <sstream>
#include <string>

#include "rsg/io.hpp"
#include "rsg/models.hpp"
#include "rsg/oracle.hpp"
#include "rsg/runner.hpp"
#include "rsg/verify.hpp"

using namespace rsg;

TEST_SUITE_BEGIN("runner");

namespace {

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n' ? 1 : 0;
  return lines;
}

}  // namespace

TEST_CASE("jsonl golden line") {
  const ModelParams p{ModelKind::Sprime, 2, 0, 3};
  RngStream stream = RngStream::substream(7, 0);
  const SurfaceSummary s = summarize(build_instance(p, stream));
  CHECK(jsonl_summary(p, 7, 0, s) ==
        "{\"model\":\"sprime\",\"n\":2,\"m\":0,\"t\":3,\"seed\":7,\"index\":0,"
        "\"B\":0,\"I\":2,\"genus\":0,\"chi\":2,\"components\":1,\"connected\":true}\n");
}

TEST_CASE("sample records are deterministic and thread-invariant") {
  const ModelParams p{ModelKind::Sprime, 100, 10, 3};
  const std::string once = sample_records(p, 20'000, 99, 1, false);
  const std::string twice = sample_records(p, 20'000, 99, 1, false);
  const std::string threaded = sample_records(p, 20'000, 99, 4, false);
  CHECK(once == twice);
  CHECK(once == threaded);
  CHECK(count_lines(once) == 20'000);

  // prefix-valid JSONL: every line is one object
  std::istringstream in(once);
  std::string line;
  std::size_t checked = 0;
  while (std::getline(in, line) && checked < 100) {
    REQUIRE(line.front() == '{');
    REQUIRE(line.back() == '}');
    ++checked;
  }
}

TEST_CASE("csv format carries a header") {
  const ModelParams p{ModelKind::Tprime, 4, 2, 3};
  const std::string csv = sample_records(p, 50, 3, 2, true);
  CHECK(csv.rfind("model,n,m,t,seed,index,B,I,genus,chi,components,connected\n", 0) == 0);
  CHECK(count_lines(csv) == 51);
}

TEST_CASE("sampled genus-1 fraction of s(4,0) matches the 3-matching law") {
  const std::string jsonl = sample_records({ModelKind::S, 4, 0, 3}, 100'000, 2, 0, false);
  std::istringstream in(jsonl);
  std::string line;
  std::int64_t genus1 = 0, total = 0;
  while (std::getline(in, line)) {
    ++total;
    genus1 += line.find("\"genus\":1") != std::string::npos ? 1 : 0;
  }
  CHECK(total == 100'000);
  CHECK(std::abs(static_cast<double>(genus1) / total - 1.0 / 3.0) <= 0.005);
}

TEST_CASE("dist output") {
  SUBCASE("m=0 omits normalization and B stays zero") {
    const DistOutput out = run_dist({ModelKind::Sprime, 8, 0, 3}, 500, 21, 2);
    CHECK(out.csv.find("# normalization omitted") != std::string::npos);
    CHECK(out.csv.find("\nB,0,,,,500\n") != std::string::npos);
    CHECK(out.report.mean_B == 0.0);
    CHECK(out.moments_json.find("\"K\":500") != std::string::npos);
  }
  SUBCASE("normalized columns appear and runs are byte-identical") {
    const DistOutput a = run_dist({ModelKind::Sprime, 16, 4, 3}, 400, 23, 1);
    const DistOutput b = run_dist({ModelKind::Sprime, 16, 4, 3}, 400, 23, 3);
    CHECK(a.csv == b.csv);
    CHECK(a.moments_json == b.moments_json);
    CHECK(a.csv.find("log_m=") != std::string::npos);
    CHECK(a.csv.find("r=") != std::string::npos);
    CHECK(a.csv.find("table,B,genus,b_hat,g_hat,count") != std::string::npos);
    // every data row carries 6 columns
    std::istringstream in(a.csv);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("table,", 0) == 0) continue;
      CHECK(std::count(line.begin(), line.end(), ',') == 5);
    }
  }
  SUBCASE("rejects a single sample") {
    CHECK_THROWS_AS(run_dist({ModelKind::Sprime, 8, 0, 3}, 1, 3, 1), std::invalid_argument);
  }
}

TEST_CASE("exact distribution csv golden") {
  CHECK(exact_distribution_csv(exact_joint({ModelKind::S, 4, 0, 3})) ==
        "B,genus,connected,numerator,denominator\n"
        "0,0,true,2,3\n"
        "0,1,true,1,3\n");
}

TEST_CASE("moment report json shapes") {
  MomentAccumulator acc;
  acc.add(1, 2);
  acc.add(3, 4);
  const std::string json = moment_report_json(acc.report());
  CHECK(json.find("\"K\":2") != std::string::npos);
  CHECK(json.find("\"mean_B\":2") != std::string::npos);
  CHECK(json.find("\"corr_BG\":1") != std::string::npos);

  MomentAccumulator flat;
  flat.add(1, 1);
  flat.add(1, 1);
  CHECK(moment_report_json(flat.report()).find("\"corr_BG\":null") != std::string::npos);
}

TEST_CASE("verify plumbing") {
  CHECK(verify::criterion_ids().size() == 11);
  CHECK_THROWS_AS(verify::run_criterion("nope", {}), std::invalid_argument);

  verify::CriterionResult fake;
  fake.number = 3;
  fake.id = "demo";
  fake.title = "demo title";
  fake.checks.push_back({"a", true, "fine"});
  fake.checks.push_back({"b", false, "broken"});
  CHECK_FALSE(fake.pass());
  const std::string text = verify::format_result(fake);
  CHECK(text.find("[FAIL] 03 demo") != std::string::npos);
  CHECK(text.find("[ok] a: fine") != std::string::npos);
  CHECK(text.find("[FAIL] b: broken") != std::string::npos);

  const std::string json = verify::verdicts_json({fake});
  CHECK(json.find("\"id\":\"demo\"") != std::string::npos);
  CHECK(json.find("\"pass\":false") != std::string::npos);
}

TEST_SUITE_END();
