#include "arkimex/catalog.hpp"
#include "arkimex/coefficient_file.hpp"
#include "arkimex/errors.hpp"
#include "arkimex/tableau.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace arkimex;

namespace {

std::string read_file(const char* path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kOneMethod = R"({
  "schema_version": 1,
  "methods": [
    {
      "name": "EulerPair",
      "declared": {"order": 1, "implicit_solves": 1, "explicit_evals": 1},
      "explicit": {"A": [["0", "0"], ["1", "0"]], "b": ["1", "0"], "c": ["0", "1"]},
      "implicit": {"A": [["0", "0"], ["0", "1"]], "b": ["0", "1"], "c": ["0", "1"]}
    }
  ]
})";

}  // namespace

TEST(Catalog, ShipsTheExpectedMethods) {
  const std::set<std::string> expected = {"KGU35",   "ARS222", "ARS232", "GSA222", "SSP2232",
                                          "ARS233",  "SSP3333b", "SSP3333c", "ARK324", "ARS343",
                                          "ARS443",  "DBM453", "ARK436", "ARK437", "ARK548"};
  const auto names = method_names(builtin_catalog());
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()), expected);
  for (const auto& m : builtin_catalog()) EXPECT_NO_THROW(validate(m)) << m.name;
}

TEST(Catalog, DeclaredCounts) {
  struct Row { const char* name; int order, fi, fe; };
  // Method, order, implicit solves, explicit evaluations per step.
  const Row rows[] = {{"KGU35", 3, 0, 5},  {"ARS222", 2, 2, 3},  {"ARS232", 2, 2, 3},  {"GSA222", 2, 2, 3},
                      {"SSP2232", 2, 2, 3}, {"ARS233", 3, 2, 3},  {"SSP3333b", 3, 2, 3}, {"SSP3333c", 3, 2, 3},
                      {"ARK324", 3, 3, 4}, {"ARS343", 3, 3, 4},  {"ARS443", 3, 4, 4},  {"DBM453", 3, 4, 5},
                      {"ARK436", 4, 5, 6}, {"ARK437", 4, 6, 7},  {"ARK548", 5, 7, 8}};
  for (const auto& r : rows) {
    const ArkMethod& m = get_method(r.name);
    EXPECT_EQ(m.declared_order, r.order) << r.name;
    EXPECT_EQ(m.declared_implicit_solves, r.fi) << r.name;
    EXPECT_EQ(m.declared_explicit_evals, r.fe) << r.name;
    EXPECT_EQ(m.implicit_solve_count(), r.fi) << r.name;
  }
}

TEST(Catalog, ExplicitEvaluationAccounting) {
  // ARS222 and GSA222 never read their last explicit stage, so a need-based
  // stepper evaluates f^E twice although three evaluations are declared.
  for (const auto& m : builtin_catalog()) {
    if (m.name == "ARS222" || m.name == "GSA222") {
      EXPECT_EQ(m.declared_explicit_evals, 3);
      EXPECT_EQ(m.explicit_eval_count(), 2) << m.name;
    } else {
      EXPECT_EQ(m.explicit_eval_count(), m.declared_explicit_evals) << m.name;
    }
  }
}

TEST(Catalog, UnknownNameThrows) {
  EXPECT_THROW(get_method("NOSUCH"), UnknownMethodError);
  EXPECT_EQ(find_method(builtin_catalog(), "NOSUCH"), nullptr);
  EXPECT_NE(find_method(builtin_catalog(), "ARS343"), nullptr);
}

TEST(Dbm453, Coefficients) {
  const ArkMethod& m = get_method("DBM453");
  const double gamma = 0.32591194130117247;
  ASSERT_EQ(m.stages(), 5u);
  EXPECT_EQ(m.implicit_tableau.A(0, 0), 0.0);
  for (int i = 1; i < 5; ++i) EXPECT_DOUBLE_EQ(m.implicit_tableau.A(i, i), gamma);

  const double c[] = {0.0, 0.1030620881159184, 0.72139131281753662, 1.28181117351981733, 1.0};
  const double b[] = {0.87795339639076672, -0.72692641526151549, 0.7520413715737272,
                      -0.22898029400415090, 0.32591194130117247};
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(m.explicit_tableau.c(i), c[i], 1e-15);
    EXPECT_NEAR(m.implicit_tableau.c(i), c[i], 1e-15);
    EXPECT_NEAR(m.explicit_tableau.b(i), b[i], 1e-16);
    EXPECT_NEAR(m.implicit_tableau.b(i), b[i], 1e-16);
  }
  EXPECT_DOUBLE_EQ(m.explicit_tableau.A(1, 0), 0.10306208811591838);
  for (int j = 1; j < 5; ++j) EXPECT_EQ(m.explicit_tableau.A(1, j), 0.0);
  // Sum of the four printed row-5 entries.
  const double row5 = -0.81287582068772448 + 0.81223739060505738 + 0.90644429603699305 + 0.094194134045674111;
  EXPECT_NEAR(row5, 1.0, 1e-13);
  EXPECT_NEAR(m.explicit_tableau.A.row(4).sum(), 1.0, 1e-13);
}

TEST(Tableau, ShapePredicates) {
  const ArkMethod& m = get_method("ARS343");
  EXPECT_TRUE(m.explicit_tableau.is_explicit());
  EXPECT_FALSE(m.implicit_tableau.is_explicit());
  EXPECT_TRUE(m.implicit_tableau.is_diagonally_implicit());
  EXPECT_TRUE(get_method("KGU35").implicit_tableau.is_zero());
}

TEST(Validate, RejectsBrokenRecords) {
  ArkMethod m = get_method("ARS232");
  m.explicit_tableau.A(0, 1) = 0.5;
  EXPECT_THROW(validate(m), InvariantError);

  m = get_method("ARS232");
  m.implicit_tableau.c(2) += 1e-6;
  try {
    validate(m);
    FAIL() << "expected InvariantError";
  } catch (const InvariantError& e) {
    EXPECT_EQ(e.method(), "ARS232");
    EXPECT_NE(e.check().find("c[2]"), std::string::npos) << e.check();
  }

  m = get_method("ARS232");
  m.declared_implicit_solves = 3;
  EXPECT_THROW(validate(m), InvariantError);

  m = get_method("KGU35");
  m.implicit_tableau.b(0) = 1.0;
  EXPECT_THROW(validate(m), InvariantError);
}

TEST(CoefficientFile, ParsesAndValidates) {
  const auto methods = parse_coefficient_file(kOneMethod);
  ASSERT_EQ(methods.size(), 1u);
  EXPECT_EQ(methods[0].name, "EulerPair");
  EXPECT_EQ(methods[0].implicit_solve_count(), 1);
  EXPECT_FALSE(methods[0].declared_properties.has_value());
}

TEST(CoefficientFile, RowSumMismatchNamesTheRow) {
  std::string text = kOneMethod;
  const std::string from = R"("c": ["0", "1"]},
      "implicit")";
  const auto pos = text.find(from);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, from.size(), R"("c": ["0", "0.5"]},
      "implicit")");
  try {
    parse_coefficient_file(text);
    FAIL() << "expected InvariantError";
  } catch (const InvariantError& e) {
    EXPECT_NE(e.check().find("c[1]"), std::string::npos) << e.check();
  }
}

TEST(CoefficientFile, BadValueCarriesLineAndField) {
  std::string text = kOneMethod;
  const auto pos = text.find(R"(["1", "0"]])");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 4, R"(["1x")");
  try {
    parse_coefficient_file(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "methods[0].explicit.A[1][0]");
    EXPECT_EQ(e.line(), 7u);
  }
}

TEST(CoefficientFile, MalformedInput) {
  EXPECT_THROW(parse_coefficient_file("{"), ParseError);
  EXPECT_THROW(parse_coefficient_file(R"({"schema_version": 2, "methods": []})"), ParseError);
  EXPECT_THROW(parse_coefficient_file(R"({"schema_version": 1})"), ParseError);
  std::string unknown = kOneMethod;
  unknown.replace(unknown.find(R"("name")"), 6, R"("colour": 1, "name")");
  EXPECT_THROW(parse_coefficient_file(unknown), ParseError);
  EXPECT_THROW(load_coefficient_file("/nonexistent/coefficients.json"), ParseError);
}

TEST(CoefficientFile, RoundTripIsBitwise) {
  const std::string text = serialize_coefficient_file(builtin_catalog());
  const auto back = parse_coefficient_file(text);
  ASSERT_EQ(back.size(), builtin_catalog().size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    const ArkMethod& a = builtin_catalog()[k];
    const ArkMethod& b = back[k];
    EXPECT_EQ(a.name, b.name);
    EXPECT_EQ(a.explicit_tableau.A, b.explicit_tableau.A) << a.name;
    EXPECT_EQ(a.explicit_tableau.b, b.explicit_tableau.b) << a.name;
    EXPECT_EQ(a.implicit_tableau.A, b.implicit_tableau.A) << a.name;
    EXPECT_EQ(a.implicit_tableau.c, b.implicit_tableau.c) << a.name;
    EXPECT_EQ(a.declared_properties.has_value(), b.declared_properties.has_value());
  }
}

TEST(CoefficientFile, ShippedDataMatchesBuiltin) {
  const auto methods = parse_coefficient_file(read_file(ARKIMEX_CATALOG_JSON));
  ASSERT_EQ(methods.size(), builtin_catalog().size());
  for (std::size_t k = 0; k < methods.size(); ++k)
    EXPECT_EQ(methods[k].implicit_tableau.A, builtin_catalog()[k].implicit_tableau.A);
}

TEST(Decimal, ParseAndFormat) {
  EXPECT_EQ(parse_decimal("0.1"), 0.1);
  EXPECT_EQ(parse_decimal("-0.72692641526151549"), -0.72692641526151549);
  EXPECT_EQ(parse_decimal("1e-3"), 1e-3);
  EXPECT_THROW(parse_decimal("0.1abc"), std::invalid_argument);
  EXPECT_THROW(parse_decimal("inf"), std::invalid_argument);
  EXPECT_THROW(parse_decimal(""), std::invalid_argument);
  for (double x : {0.1, 1.0 / 3.0, 0.32591194130117247, -1e-300, 12345.678})
    EXPECT_EQ(parse_decimal(format_decimal(x)), x);
  EXPECT_EQ(format_decimal(0.1), "0.1");
}

TEST(ExplicitMethod, BuildsZeroImplicitHalf) {
  const ArkMethod m = make_explicit_method("Heun", oracle::tableau({{0, 0}, {1, 0}}, {0.5, 0.5}), 2);
  EXPECT_TRUE(m.pure_explicit);
  EXPECT_TRUE(m.implicit_tableau.is_zero());
  EXPECT_EQ(m.implicit_solve_count(), 0);
  EXPECT_NO_THROW(validate(m));
}
