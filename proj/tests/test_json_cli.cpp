#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "weil/error.hpp"
#include "weil/json_io.hpp"
#include "weil/random.hpp"
#include "weil/sampling.hpp"

using namespace weil;

namespace {

struct Run {
  std::string out;
  int status = -1;
};

Run cli(const std::string& args) {
  Run r;
  FILE* p = popen((std::string(WEIL_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::string(::testing::TempDir()) + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Json, RationalRoundTrip) {
  for (const auto& r : {Rational(0), Rational(-3, 4), Rational(7)}) EXPECT_EQ(rational_from_json(rational_to_json(r)), r);
  EXPECT_EQ(rational_to_json(Rational(-3, 4)), Json("-3/4"));
  EXPECT_THROW(rational_from_json(Json("1/0")), ParseError);
}

TEST(Json, AlgebraRoundTrip) {
  for (const auto& name : builtin_algebra_names()) {
    const auto l = builtin_algebra(name);
    EXPECT_TRUE(same_structure(algebra_from_json(to_json(l)), l)) << name;
  }
  Json bad = to_json(builtin_algebra("su2"));
  // [e1,e2] = e1, [e2,e3] = e2 breaks Jacobi
  bad["brackets"] = Json::array({{{"i", 1}, {"j", 2}, {"k", 1}, {"c", "1"}}, {{"i", 2}, {"j", 3}, {"k", 2}, {"c", "1"}}});
  EXPECT_THROW(algebra_from_json(bad), DomainError);
}

TEST(Json, ElementRoundTrips) {
  Rng rng(77);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_weil_element(rng, 3, static_cast<int>(rng.int_in(0, 5)), 4);
    EXPECT_EQ(weil_from_json(to_json(a), 3), a);
    const auto f = random_form(rng, 3, static_cast<int>(rng.int_in(0, 3)), 3, 4);
    EXPECT_EQ(form_from_json(to_json(f)), f);
    const auto c = random_connection(rng, builtin_algebra("su2"), 3, 2, 2);
    EXPECT_EQ(connection_from_json(to_json(c)), c);
  }
}

TEST(Json, Digest) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_NE(fnv1a_hex("a"), fnv1a_hex("b"));
}

TEST(Cli, Cohomology) {
  const auto r = cli("cohomology --dim 1 --max-degree 6");
  ASSERT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["results"]["cohomology"], Json::array({1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(j["command"], "cohomology");
  EXPECT_TRUE(j.contains("inputs_digest"));
  EXPECT_TRUE(j.contains("version"));
}

TEST(Cli, BasicAndOracle) {
  const auto b = cli("basic --algebra su2 --degree 4");
  ASSERT_EQ(b.status, 0);
  EXPECT_EQ(Json::parse(b.out)["results"]["dim"], 1);
  const auto o = cli("oracle --p 1 --q 1 --dimV 2");
  ASSERT_EQ(o.status, 0);
  const auto res = Json::parse(o.out)["results"];
  EXPECT_EQ(res["dimW"], 3);
  EXPECT_EQ(res["expected"], 4);
  EXPECT_EQ(res["computed"], 4);
  EXPECT_EQ(res["match"], true);
}

TEST(Cli, CwFromFile) {
  auto a = Connection::zero(builtin_algebra("abelian(1)"), 2);
  a.components[0] = wedge(RationalForm::coordinate(2, 0), RationalForm::differential(2, 1));
  const auto path = temp_file("weil_conn.json", to_json(a).dump());
  const auto r = cli("cw --connection " + path + " --invariant basis:1:1");
  ASSERT_EQ(r.status, 0);
  const auto res = Json::parse(r.out)["results"];
  EXPECT_EQ(form_from_json(res["form"]), wedge(RationalForm::differential(2, 0), RationalForm::differential(2, 1)));
  EXPECT_EQ(res["closed"], true);
}

TEST(Cli, ExitCodes) {
  const auto unknown = cli("basic --algebra e8 --degree 2");
  EXPECT_EQ(unknown.status, 1);
  EXPECT_TRUE(Json::parse(unknown.out).contains("error"));
  const auto bad = temp_file("weil_bad.json", "{ not json");
  const auto malformed = cli("cw --connection " + bad);
  EXPECT_EQ(malformed.status, 1);
  EXPECT_EQ(Json::parse(malformed.out)["error"]["type"], "parse_error");
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("basic --degree").status, 2);
  const auto cap = cli("oracle --p 4 --q 2 --dimV 3");
  EXPECT_EQ(cap.status, 1);
  EXPECT_EQ(Json::parse(cap.out)["error"]["type"], "resource_cap_exceeded");
}

TEST(Cli, Deterministic) {
  const std::string args = "equivariant --algebra 'abelian(1)' --action rot2 --degree 1 --poly-cap 2";
  const auto a = cli(args), b = cli(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto p = cli("polyfunc detect --expr 'abs(x)' --degree 2 --dim 1");
  ASSERT_EQ(p.status, 0);
  EXPECT_EQ(Json::parse(p.out)["results"]["verdict"], "not-polynomial");
}
