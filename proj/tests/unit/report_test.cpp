#include <gtest/gtest.h>

#include "ledin/errors.hpp"
#include "ledin/report.hpp"

namespace ledin {
namespace {

TEST(SumReport, RoundTrip) {
  SumReport report;
  report.value = Scalar(-7, 3);
  report.routes = {{"ap", Scalar(-7, 3)}, {"brute", Scalar(-7, 3)}};
  report.guards = {Scalar(-1), Scalar(5, 9)};
  EXPECT_EQ(parse_sum_report(serialize(report)), report);
}

TEST(SumReport, RationalsTravelAsStrings) {
  SumReport report;
  report.value = Scalar(21);
  report.routes = {{"ap", Scalar(21)}};
  EXPECT_EQ(serialize(report), R"({"guards":[],"routes":{"ap":"21"},"value":"21"})");
}

TEST(VerificationReport, RoundTripWithoutMismatches) {
  VerificationReport report;
  report.grid_description = "m=0..2 n=0..5";
  report.cases_run = 42;
  report.comparisons = 120;
  report.guard_skips = 3;
  report.wall_time = 0.25;
  EXPECT_EQ(parse_verification_report(serialize(report)), report);
}

TEST(VerificationReport, RoundTripWithMismatch) {
  VerificationReport report;
  report.grid_description = "custom";
  report.cases_run = 1;
  report.comparisons = 1;
  report.mismatches.push_back(Mismatch{SumSpec{3, 7, -2, 2, HoradamParams(Scalar(3, 2), -5, Scalar(7, 3), Scalar(2, 5)), true},
                                       Route::weighted_ap, Scalar(11, 4), Scalar(-1, 8)});
  const std::string text = serialize(report);
  EXPECT_NE(text.find("\"FAIL\""), std::string::npos);
  EXPECT_EQ(parse_verification_report(text), report);
}

TEST(VerificationReport, RejectsMalformedInput) {
  EXPECT_THROW(parse_verification_report("{"), InvalidInput);
  EXPECT_THROW(parse_verification_report("{}"), InvalidInput);
  EXPECT_THROW(parse_sum_report(R"({"value":"1/0","routes":{},"guards":[]})"), InvalidInput);
  VerificationReport report;
  std::string text = serialize(report);
  text.replace(text.find("PASS"), 4, "FAIL");
  EXPECT_THROW(parse_verification_report(text), InvalidInput);
}

}  // namespace
}  // namespace ledin
