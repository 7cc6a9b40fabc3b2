#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "generators.hpp"
#include "modsym/catalog.hpp"
#include "modsym/errors.hpp"

using namespace modsym;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("modsym_test_" + name + ".json");
}

std::string fib_doc(const std::string& theta = "[0, 24]", const std::string& s01 = "[[1,2,0],[1,2,12],[-1,2,24],[-1,2,36],[1,2,48]]") {
  return R"({"name": "fib", "ambient": 60, "rank": 2, "s_tilde": [[[[1,1,0]], )" + s01 + "], [" + s01 +
         R"(, [[-1,1,0]]]], "theta": )" + theta + "}";
}

}  // namespace

TEST(Catalog, NamesAndUnknown) {
  EXPECT_EQ(builtin_names().size(), 6u);
  EXPECT_THROW(builtin("nope"), InvalidInput);
}

TEST(Catalog, FibonacciEntries) {
  const ModularData d = builtin("fibonacci");
  const CycloNum phi = d.s_tilde()(0, 1);
  // phi^2 = phi + 1 pins phi down up to its conjugate; numeric sign picks it.
  EXPECT_EQ(phi * phi, phi + CycloNum::integer(d.ambient(), 1));
  EXPECT_GT(numeric(phi).real(), 1.6);
  EXPECT_TRUE(in_subfield(phi, 5));
  EXPECT_EQ(d.theta()[1], RootOfUnity(5, 2));
}

TEST(Catalog, IsingSelfCertifies) {
  const ModularData d = builtin("ising");
  EXPECT_TRUE(validate(d).ok());
  const auto& inv = d.derived();
  const CycloNum r2 = inv.dims[1];
  EXPECT_EQ(r2 * r2, CycloNum::integer(d.ambient(), 2));
  EXPECT_TRUE(in_subfield(r2, 8));
  EXPECT_EQ(d.theta()[2], RootOfUnity(2, 1));
  EXPECT_EQ(inv.fsexp, 16);
  EXPECT_EQ(inv.anomaly, RootOfUnity(8, 1));
}

TEST(Catalog, ExpectedValuesMatchDerivation) {
  for (const auto& name : builtin_names()) {
    const CatalogEntry e = catalog_entry(name);
    const auto& inv = e.data.derived();
    EXPECT_TRUE(validate(e.data).ok()) << name;
    EXPECT_EQ(inv.global_dim, e.expected.dim) << name;
    EXPECT_EQ(inv.fsexp, e.expected.fsexp) << name;
    EXPECT_EQ(inv.anomaly.multiplicative_order(), e.expected.ord_alpha) << name;
    EXPECT_EQ(central_charge(e.data), e.expected.central_charge) << name;
  }
}

TEST(FileFormat, RoundTripAllBuiltins) {
  for (const auto& name : builtin_names()) {
    const ModularData d = builtin(name);
    const auto path = temp_file(name);
    write(d, path);
    const ModularData back = read(path);
    EXPECT_EQ(back, d) << name;
    EXPECT_EQ(to_json(back), to_json(d)) << name;
    std::filesystem::remove(path);
  }
}

TEST(FileFormat, RoundTripRandomData) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const ModularData d = modsym::testing::random_data(rng);
    EXPECT_EQ(from_json(to_json(d)), d) << d.name();
  }
}

TEST(FileFormat, ParsesHandWrittenFibonacci) {
  const ModularData d = from_json(fib_doc());
  EXPECT_EQ(d.s_tilde(), builtin("fibonacci").s_tilde());
  EXPECT_TRUE(validate(d).ok());
}

TEST(FileFormat, BigIntegersAsStrings) {
  const std::string big = "123456789012345678901234567890";
  const CycloNum z = CycloNum::make(4, {{1, Rational(Integer(big), Integer(1))}});
  const std::string lit = literal_to_json(z);
  EXPECT_NE(lit.find('"' + big + '"'), std::string::npos);
}

TEST(FileFormat, CanonicalTermsSortedAndNonzero) {
  const CycloNum z = CycloNum::make(12, {{3, 2}, {1, 3}, {2, 0}});
  EXPECT_EQ(literal_to_json(z), "[[3,1,1],[2,1,3]]");
}

TEST(FileFormat, NonSymmetricIsNotAParseError) {
  const std::string doc = R"({"name": "asym", "ambient": 60, "rank": 2,
    "s_tilde": [[[[1,1,0]], [[1,1,0]]], [[[1,2,0],[1,2,12],[-1,2,24],[-1,2,36],[1,2,48]], [[-1,1,0]]]],
    "theta": [0, 24]})";
  const ModularData d = from_json(doc);
  EXPECT_FALSE(validate(d).passed("symmetric"));
  EXPECT_THROW(d.derived(), NotModular);
}

TEST(FileFormat, ThetaZeroMustBeTrivial) { EXPECT_THROW(from_json(fib_doc("[1, 24]")), InvalidInput); }

TEST(FileFormat, DiagnosticsCarryLocation) {
  try {
    from_json("{\n  \"name\": \"x\",\n  \"ambient\": 5,\n  oops\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
  try {
    from_json(fib_doc("[0, 24]", "[[1,0,0]]"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("s_tilde[0][1][0]"), std::string::npos) << e.what();
  }
  try {
    from_json(R"({"name": "x", "ambient": 5, "rank": 2, "s_tilde": [[[[1,1,0]]], [[[1,1,0]]]], "theta": [0, 0]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("square"), std::string::npos) << e.what();
  }
  EXPECT_THROW(from_json(fib_doc("[0]")), ParseError);
  EXPECT_THROW(from_json(R"({"name": "x", "rank": 1})"), ParseError);
  EXPECT_THROW(read("/nonexistent/file.json"), ParseError);
}
