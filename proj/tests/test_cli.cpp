#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mzlab/cli.hpp"
#include "support.hpp"

namespace mzlab {
namespace {

using testing::Rng;

const Field Q = Field::rationals();

// ---- parser ----

TEST(Parser, DocumentedExamples) {
  const RingContext ctx{2, Q};
  const auto f = parse_laurent("3/2*x1^2*x2^-1 - x1 + 5", ctx);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.coeff(MultiIndex({2, -1})), Q.parse("3/2"));
  EXPECT_EQ(parse_laurent("(1+x1)^3", ctx).to_string(), "1 + 3*x1 + 3*x1^2 + x1^3");
  try {
    parse_series("x1^-1", ctx, 4);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("negative exponent in power-series context"), std::string::npos);
  }
}

TEST(Parser, Precedence) {
  const RingContext ctx{2, Q};
  EXPECT_EQ(parse_laurent("-x1^2", ctx), parse_laurent("-(x1^2)", ctx));
  EXPECT_EQ(parse_laurent("2*x1^-1*x2", ctx), parse_laurent("2*x2/x1", ctx));
  EXPECT_EQ(parse_laurent("1 - x1 - x2", ctx), parse_laurent("1 - (x1 + x2)", ctx));
  EXPECT_EQ(parse_laurent("x1^(-2)", ctx), parse_laurent("1/x1^2", ctx));
  EXPECT_EQ(parse_laurent("6/4", ctx), LaurentPoly::constant(ctx, Q.parse("3/2")));
}

TEST(Parser, ErrorsCarryPosition) {
  const RingContext ctx{2, Q};
  auto message = [&](const std::string& text) {
    try {
      parse_laurent(text, ctx);
    } catch (const ParseError& e) {
      return std::string(e.what());
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("x1 +* 2").rfind("line 1, column 5", 0), 0u);
  EXPECT_NE(message("x3").find("context has 2 variables"), std::string::npos);
  EXPECT_NE(message("x1^2^3").find("line 1"), std::string::npos);
  EXPECT_NE(message("(x1").find("line 1"), std::string::npos);
  EXPECT_NE(message("x1 +\n y").find("line 2"), std::string::npos);
  EXPECT_NE(message("(1+x1)^-1").find("not a unit"), std::string::npos);
}

TEST(Parser, RoundTripOnRandomElements) {
  Rng rng(61);
  for (std::size_t n = 1; n <= 3; ++n) {
    const RingContext ctx{n, Q};
    for (int k = 0; k < 300; ++k) {
      const auto f = testing::random_laurent(rng, ctx, 5, -4, 4);
      const std::string text = f.to_string();
      const auto g = parse_laurent(text, ctx);
      ASSERT_EQ(g, f) << text;
      ASSERT_EQ(g.to_string(), text);
    }
  }
  const RingContext ctx{2, Field::prime(7)};
  for (int k = 0; k < 100; ++k) {
    const auto f = testing::random_poly(rng, ctx, 5, 4);
    ASSERT_EQ(parse_laurent(f.to_string(), ctx), f);
  }
}

TEST(Parser, SeriesRoundTrip) {
  Rng rng(62);
  const RingContext ctx{2, Q};
  for (int k = 0; k < 100; ++k) {
    const auto f = testing::random_series(rng, ctx, 6, 6);
    ASSERT_EQ(parse_series(f.to_string(), ctx, 6), f);
  }
  EXPECT_EQ(parse_series("(1-x1)^-1", ctx, 5), TruncSeries::geometric(ctx, 5, 0));
}

TEST(OperatorTextTest, KindsAndDefaults) {
  const auto d = parse_operator_text("derivation: D(x1)=1, D(x3)=x1");
  EXPECT_EQ(d.kind, OperatorText::Kind::derivation);
  EXPECT_EQ(d.max_variable(), 3u);
  const RingContext ctx{3, Q};
  const auto der = build_derivation<LaurentPoly>(d, ctx, 0);
  EXPECT_TRUE(der.coeffs()[1].is_zero());
  const auto e = parse_operator_text("phi(x2)=x1", OperatorText::Kind::endo);
  const auto phi = build_endomorphism<LaurentPoly>(e, RingContext{2, Q}, 0);
  EXPECT_EQ(phi.images()[0], LaurentPoly::variable(RingContext{2, Q}, 0));
  EXPECT_THROW(parse_operator_text("D(x1)=1, phi(x2)=x1"), InputError);
}

// ---- command line ----

CliResult run(std::vector<std::string> args) { return run_subcommand(args); }

TEST(Cli, DocumentedExamplesExitCodes) {
  const auto img = run({"image", "--endo", "phi(x1)=2*x1,phi(x2)=3*x2", "--f", "x1*x2^-1"});
  EXPECT_EQ(img.code, 0);
  EXPECT_NE(img.out.find("verdict: member"), std::string::npos);
  const auto rad = run({"radical", "--f", "x1+x2+(x1*x2)^-1", "--support", "{(0,0)}", "--mmax", "10"});
  EXPECT_EQ(rad.code, 1);
  EXPECT_NE(rad.out.find("witness_m: 3"), std::string::npos);
  const auto rep = run({"repro", "dk-image"});
  EXPECT_EQ(rep.code, 0);
  EXPECT_NE(rep.out.find("result: PASS"), std::string::npos);
}

TEST(Cli, ExitCodeContract) {
  EXPECT_EQ(run({"apply", "--derivation", "D(x1)=1", "--f", "x1^2"}).code, exit_ok);
  EXPECT_EQ(run({"cyclo", "--matrix", "1 2"}).code, exit_violation);
  EXPECT_EQ(run({"apply", "--derivation", "D(x1)=1", "--f", "x1 +* 2"}).code, exit_input);
  EXPECT_EQ(run({"apply", "--f", "x1"}).code, exit_input);
  EXPECT_EQ(run({"nonsense"}).code, exit_input);
  EXPECT_EQ(run({"--char", "4", "apply", "--derivation", "D(x1)=1", "--f", "x1"}).code, exit_input);
  EXPECT_EQ(run({"cyclic", "--derivation", "D(x1)=x1^2", "--f", "x1", "--cap", "5"}).code, exit_inconclusive);
  EXPECT_EQ(run({"periodicity", "--endo", "phi(x1)=x1+x1^2", "--imax", "4"}).code, exit_inconclusive);
  EXPECT_EQ(run({"normalize", "--endo", "phi(x1)=-x2,phi(x2)=x1", "--order", "6"}).code, exit_input);
}

TEST(Cli, MachineAndHumanShareEntries) {
  const auto h = run({"repro", "telescope", "--p", "7"});
  const auto m = run({"repro", "telescope", "--p", "7", "--machine"});
  EXPECT_NE(h.out.find("  sum: 6\n"), std::string::npos);
  EXPECT_NE(m.out.find("  sum\t6\n"), std::string::npos);
  EXPECT_EQ(std::count(h.out.begin(), h.out.end(), '\n'), std::count(m.out.begin(), m.out.end(), '\n'));
}

TEST(Cli, ArgumentFilesAndConfig) {
  const auto dir = std::filesystem::temp_directory_path() / "mzlab_cli_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "f.txt") << "x1^3 + x2\n";
    std::ofstream(dir / "conf.ini") << "machine = true\n";
  }
  const auto r = run({"--config", (dir / "conf.ini").string(), "apply", "--derivation", "D(x1)=1, D(x2)=0", "--f",
                      "@" + (dir / "f.txt").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result\t3*x1^2\n"), std::string::npos);
  EXPECT_EQ(run({"apply", "--derivation", "D(x1)=1", "--f", "@/nonexistent/file"}).code, exit_input);
  std::filesystem::remove_all(dir);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"repro", "--all", "--machine"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, BinaryReturnsContractCodes) {
  const std::string tool = MZLAB_TOOL;
  auto status = [&](const std::string& args) {
    const int rc = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
  };
  EXPECT_EQ(status("repro dk-image"), 0);
  EXPECT_EQ(status("radical --f 'x1+x2+(x1*x2)^-1' --support '{(0,0)}' --mmax 10"), 1);
  EXPECT_EQ(status("apply --f 'x1^' --derivation 'D(x1)=1'"), 2);
  EXPECT_EQ(status("cyclic --derivation 'D(x1)=x1^2' --f x1 --cap 3"), 3);
}

// ---- golden files ----

struct GoldenCase {
  std::string name;
  int code;
  std::vector<std::string> args;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = [] {
    std::vector<GoldenCase> v{
        {"repro_all", 0, {"repro", "--all"}},
        {"repro_telescope_p7", 0, {"repro", "telescope", "--p", "7"}},
        {"repro_series_k60", 0, {"repro", "series-counterexample", "--mmax", "50", "--order", "60"}},
        {"image_endo", 0, {"image", "--endo", "phi(x1)=2*x1,phi(x2)=3*x2", "--f", "x1*x2^-1"}},
        {"image_weights", 0, {"image", "--weights", "(1,0);(0,1)", "--f", "x1*x2^-1 - 2*x2"}},
        {"image_weights_constant", 1, {"image", "--weights", "(1,0);(0,1)", "--f", "x1*x2^-1 + 3"}},
        {"image_charp", 1, {"--char", "5", "image", "--derivation", "D(x1)=1", "--f", "x1^4", "--bound", "15"}},
        {"radical_witness", 1, {"radical", "--f", "x1+x2+(x1*x2)^-1", "--support", "{(0,0)}", "--mmax", "10"}},
        {"mz_tail", 0, {"mz", "--a", "x1+x2", "--b", "x1^-2", "--b", "1", "--mmax", "8"}},
        {"mz_localized", 1,
         {"--carrier", "localized", "--order", "60", "mz", "--a", "x1^-1", "--b", "(1-x1)^-1", "--mmax", "50"}},
        {"apply_derivation", 0, {"apply", "--derivation", "D(x1)=1, D(x2)=x1", "--f", "x1^2*x2"}},
        {"iterate_ederivation", 0, {"iterate", "--ederivation", "phi(x1)=x1+1", "--f", "x1^3", "--m", "2"}},
        {"cyclic_closed", 0, {"cyclic", "--derivation", "D(x1)=1", "--f", "x1^4"}},
        {"cyclic_cap", 3, {"cyclic", "--derivation", "D(x1)=x1^2", "--f", "x1", "--cap", "5"}},
        {"cyclic_series", 0, {"--carrier", "series", "--order", "8", "cyclic", "--derivation", "D(x1)=x1", "--f",
                              "(1-x1)^-1"}},
        {"ddeg_additive", 0, {"ddeg", "--derivation", "D(x1)=1, D(x2)=x1", "--f", "x2", "--g", "x1^2+x2"}},
        {"periodicity_swap", 0, {"periodicity", "--endo", "phi(x1)=x2, phi(x2)=x1"}},
        {"periodicity_none", 3, {"periodicity", "--endo", "phi(x1)=x1+x1^2", "--imax", "5"}},
        {"jc_block", 0, {"jc", "--matrix", "2 1 1 0 1"}},
        {"cyclo_rotation", 0, {"cyclo", "--matrix", "2 0 -1 1 0"}},
        {"cyclo_refused", 1, {"cyclo", "--matrix", "1 2"}},
        {"grade", 0, {"grade", "--derivation", "D(x1)=x2^2, D(x2)=1", "--d", "(1,2)"}},
        {"inverse", 0, {"--carrier", "series", "--order", "5", "inverse", "--component", "x1+x2^2", "--component",
                        "x2"}},
        {"normalize_swap", 0, {"--order", "16", "normalize", "--endo", "phi(x1)=x2, phi(x2)=x1"}},
        {"normalize_unsupported", 2, {"--order", "8", "normalize", "--endo", "phi(x1)=-x2, phi(x2)=x1"}},
        {"parse_error", 2, {"apply", "--derivation", "D(x1)=1", "--f", "x1 +* 2"}},
        {"series_negative_exponent", 2, {"--carrier", "series", "apply", "--derivation", "D(x1)=1", "--f", "x1^-1"}},
    };
    for (const auto& c : repro_registry()) v.push_back({"repro_" + c.id, 0, {"repro", c.id}});
    return v;
  }();
  return cases;
}

std::string render(const CliResult& r) {
  std::string s = r.out;
  if (!r.err.empty()) s += "--- stderr\n" + r.err;
  s += "--- exit " + std::to_string(r.code) + "\n";
  return s;
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesStoredOutput) {
  const GoldenCase& c = GetParam();
  std::vector<std::string> args = c.args;
  args.insert(args.begin(), "--machine");
  const CliResult r = run_subcommand(args);
  EXPECT_EQ(r.code, c.code);
  const std::string got = render(r);
  const auto path = std::filesystem::path(MZLAB_GOLDEN_DIR) / (c.name + ".txt");
  if (std::getenv("MZLAB_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << got;
    GTEST_SKIP() << "wrote " << path;
  }
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file " << path;
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(got, want.str());
}

INSTANTIATE_TEST_SUITE_P(Cases, Golden, ::testing::ValuesIn(golden_cases()),
                         [](const ::testing::TestParamInfo<GoldenCase>& info) {
                           std::string n = info.param.name;
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });

}  // namespace
}  // namespace mzlab
