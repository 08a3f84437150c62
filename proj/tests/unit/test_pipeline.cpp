#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "iara/pipeline.hpp"

using namespace iara;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_line(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Config, ParsesSectionsAndComments) {
  const auto cfg = PipelineConfig::parse("# top\n[global]\nwindow = 3  # trailing\n\n[build-base g]\nbuilder=sl\nn = 2\n");
  ASSERT_EQ(cfg.sections.size(), 2u);
  EXPECT_EQ(cfg.sections[0].kind, "global");
  EXPECT_EQ(cfg.sections[0].get("window"), "3");
  EXPECT_EQ(cfg.sections[1].name, "g");
  EXPECT_EQ(cfg.sections[1].get("builder"), "sl");
  EXPECT_EQ(cfg.sections[1].line, 5);
}

TEST(Config, ErrorsCarryLineNumbers) {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    try {
      run_pipeline(text, "t");
      ADD_FAILURE() << "no error for: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ConfigError) << e.what();
      EXPECT_TRUE(has_line(e.what(), fragment)) << e.what();
    }
  };
  expect_error("[bogus]\n", "line 1: unknown section");
  expect_error("[global\n", "unclosed");
  expect_error("window = 2\n", "outside any section");
  expect_error("[global]\nwindow\n", "line 2: expected key = value");
  expect_error("[build-base g]\nbuilder = sl\nn = two\n", "not an integer");
  expect_error("[build-base g]\nn = 2\n", "missing key 'builder'");
  expect_error("[grade G]\nbase = g\nautomorphism = nowhere\n", "no automorphism named 'nowhere'");
  expect_error("", "no steps");
  expect_error("[global]\nwindow = 1\n", "no steps");
}

TEST(Report, RenderIsDeterministic) {
  const std::string& text = presets().at("sl3_transpose_involution");
  const std::string a = run_pipeline(text, "x").render(), b = run_pipeline(text, "x").render();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("iara report v1\ntitle: x\n", 0), 0u);
  EXPECT_TRUE(has_line(a, "\nresult: PASS\n"));
}

TEST(Report, TimingAndWitnessFlags) {
  const Report r = run_pipeline(presets().at("sl3_transpose_involution"), "x");
  EXPECT_FALSE(has_line(r.render(), "  time "));
  EXPECT_TRUE(has_line(r.render({false, true}), "  time "));
  EXPECT_EQ(r.count("FAIL"), 0u);
  EXPECT_EQ(r.count("PASS"), r.verdict_count());
}

TEST(Report, WindowOverride) {
  RunOptions ro;
  ro.window = 1;
  const std::string text = "[coeff-algebra A]\nbase = Q\nrank = 1\n";
  EXPECT_TRUE(has_line(run_pipeline(text, "x", ro).render(), "|lambda|<=1"));
  EXPECT_TRUE(has_line(run_pipeline(text, "x").render(), "|lambda|<=2"));
}

TEST(Report, FailingExpectationFailsTheRun) {
  std::string text = presets().at("sl3_transpose_involution");
  text.replace(text.find("expect = BC1"), 12, "expect = A2");
  const Report r = run_pipeline(text, "x");
  EXPECT_FALSE(r.all_pass());
  ASSERT_NE(r.find("type-is-A2"), nullptr);
  EXPECT_EQ(r.find("type-is-A2")->status(), "FAIL");
  EXPECT_TRUE(has_line(r.render(), "\nresult: FAIL\n"));
}

TEST(Presets, AllPass) {
  for (const auto& [name, text] : presets()) {
    const Report r = run_pipeline(text, name);
    EXPECT_TRUE(r.all_pass()) << name << "\n" << r.render();
    EXPECT_GT(r.verdict_count(), 20u) << name;
  }
}

TEST(Presets, ConfigFilesMatchPresets) {
  for (const auto& [name, text] : presets())
    EXPECT_EQ(slurp(std::string(IARA_SOURCE_DIR) + "/configs/" + name + ".cfg"), text) << name;
}

TEST(Presets, LoopInvolutionReport) {
  const std::string out = run_pipeline(presets().at("example7_3"), "e").render();
  EXPECT_TRUE(has_line(out, "type pi(R) BC1"));
  EXPECT_TRUE(has_line(out, "pi(a_-1,1)(e_-1-1-e_11) = 2"));
  EXPECT_TRUE(has_line(out, "pi(a_0,1)(e_00-e_11) = 1/2"));
  EXPECT_TRUE(has_line(out, "PASS type-is-BC1"));
  EXPECT_TRUE(has_line(out, "PASS g0-abelian-iff-A0-commutative"));
}

TEST(Presets, RootsDumpRoundTrip) {
  std::string text = "[roots]\n" + slurp(std::string(IARA_SOURCE_DIR) + "/configs/bc1_roots.dump") + "dump = yes\n";
  const std::string out = run_pipeline(text, "d").render();
  EXPECT_TRUE(has_line(out, "type BC1 nullity 0"));
  EXPECT_TRUE(has_line(out, "gram = 1\n"));
  EXPECT_TRUE(has_line(out, "string beta=(2) alpha=(1) d=4 u=0"));
  EXPECT_TRUE(has_line(out, "\nresult: PASS\n"));
}
