#include <doctest.h>

#include <limits>

#include "pdfl/errors.hpp"
#include "pdfl/report.hpp"
#include "test_util.hpp"

using namespace pdfl;

namespace {

Report sample_report() {
  const double inf = std::numeric_limits<double>::infinity();
  Report report;
  SpectraRecord r0;
  r0.k = 0;
  r0.a = 0.0;
  r0.b = 1.5;
  r0.eigenvalues = Eigen::Vector3d(0.0, 0.0, 0.1);
  r0.betti = 2;
  r0.lambda_min_nonzero = 0.1;
  SpectraRecord r1;
  r1.k = 1;
  r1.a = 1.5;
  r1.b = inf;
  r1.eigenvalues = Eigen::VectorXd::Zero(1);
  r1.betti = 1;
  SpectraRecord r2;  // empty chain group
  r2.k = 2;
  r2.a = 2.0;
  r2.b = 2.0;
  report.records = {r0, r1, r2};
  report.provenance.version = "test";
  report.provenance.config = {{"max_dim", 2}, {"input", "x.flag"}};
  report.provenance.timings_ms = {{"solve", 1.25}};
  return report;
}

}  // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("CSV layout, infinities and empty fields") {
  CHECK(emit_csv(sample_report()) ==
        "dim,a,b,betti,lambda_min_nonzero,n_eigenvalues\n"
        "0,0,1.5,2,0.1,3\n"
        "1,1.5,inf,1,,1\n"
        "2,2,2,0,,0\n");
}

TEST_CASE("JSON round-trips records exactly") {
  const Report report = sample_report();
  const Report back = parse_report_json(emit_json(report));
  REQUIRE(back.records.size() == report.records.size());
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    CAPTURE(i);
    CHECK(back.records[i] == report.records[i]);
  }
  CHECK(back.provenance.version == report.provenance.version);
  CHECK(back.provenance.config == report.provenance.config);
  CHECK(back.provenance.timings_ms == report.provenance.timings_ms);
}

TEST_CASE("JSON rejects malformed documents") {
  CHECK_THROWS_AS(parse_report_json("not json"), ValidationError);
  CHECK_THROWS_AS(parse_report_json("{}"), ValidationError);
  CHECK_THROWS_AS(
      parse_report_json(R"({"records":[{"dim":0,"a":"oops","b":1,)"
                        R"("betti":0,"lambda_min_nonzero":null,)"
                        R"("eigenvalues":[]}],"provenance":{}})"),
      ValidationError);
}

TEST_CASE("plot is a standalone SVG with machine-readable markers") {
  const std::string svg = emit_plot(sample_report());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("data-dim=\"0\"") != std::string::npos);
  CHECK(svg.find("data-dim=\"1\"") != std::string::npos);
  CHECK(svg.find("class=\"betti\"") != std::string::npos);
  CHECK(svg.find("data-betti=\"2\"") != std::string::npos);
  CHECK(svg.find("data-lambda=\"0.1\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  // the infinite-b record still contributes its finite a marker
  CHECK(svg.find("data-a=\"1.5\"") != std::string::npos);
}

TEST_CASE("doubles are written in shortest round-trip form") {
  Report report;
  SpectraRecord r;
  r.k = 0;
  r.a = 0.1;
  r.b = 0.30000000000000004;  // 0.1 + 0.2
  r.eigenvalues = Eigen::VectorXd::Zero(0);
  report.records = {r};
  const std::string csv = emit_csv(report);
  CHECK(csv.find("0,0.1,0.30000000000000004,0,,0") != std::string::npos);
}

TEST_SUITE_END();
