#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "oracle.hpp"
#include "ssarr/errors.hpp"
#include "ssarr/families.hpp"
#include "ssarr/serialize.hpp"

using namespace ssarr;

TEST(Serialize, ArrangementShape) {
  const Json j = to_json(a_of_w(3, std::vector<int>{0}));
  EXPECT_EQ(j["cyclotomic_order"], 3);
  EXPECT_EQ(j["lines"].size(), 10u);
  EXPECT_EQ(j["lines"][0][0].size(), 2u);  // phi(3) coefficients
  EXPECT_EQ(j["lines"][0][0][0], "1/1");
}

TEST(SerializeProperty, RoundTripIsExact) {
  oracle::Rng rng(31);
  for (int n : {1, 3, 4, 5, 6, 12}) {
    const CycField f(n);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<ProjLine> lines;
      while (lines.size() < 6) {
        const ProjLine l = ProjLine::make(Triple{oracle::random_number(f, rng), oracle::random_number(f, rng),
                                                 oracle::random_number(f, rng)});
        if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
      }
      const Arrangement a(f, lines);
      const Arrangement back = arrangement_from_json(Json::parse(to_json(a).dump()));
      EXPECT_EQ(back.lines(), a.lines());
      EXPECT_EQ(back.field().order(), n);
    }
  }
}

TEST(Serialize, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "ssarr_serialize_test.json";
  const Arrangement a = full_monomial(2);
  save_json(to_json(a), path.string());
  EXPECT_EQ(load_arrangement(path.string()).lines(), a.lines());
  std::filesystem::remove(path);
  EXPECT_THROW(load_arrangement(path.string()), InputError);
}

TEST(Serialize, MalformedInput) {
  EXPECT_THROW(arrangement_from_json(Json::parse("[]")), InputError);
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"cyclotomic_order": 0, "lines": []})")), InputError);
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"cyclotomic_order": 1, "lines": [[["1/1"], ["0/1"]]]})")),
               InputError);
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"cyclotomic_order": 3, "lines": [[["1/1"], ["0/1"], ["0/1"]]]})")),
               InputError);
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"cyclotomic_order": 1, "lines": [[["a"], ["0"], ["0"]]]})")),
               InputError);
  // Duplicate lines after normalization.
  EXPECT_THROW(
      arrangement_from_json(Json::parse(R"({"cyclotomic_order": 1, "lines": [[["1"], ["0"], ["0"]], [["2"], ["0"], ["0"]]]})")),
      InputError);
}

TEST(Serialize, Reports) {
  const Arrangement a = full_monomial(1);
  const Json lat = to_json(build_lattice(a));
  EXPECT_EQ(lat["census"]["2"], 3);
  EXPECT_EQ(lat["census"]["3"], 4);
  const Json rep = to_json(check_identities(a));
  EXPECT_EQ(rep["M"], 4);
  EXPECT_EQ(rep["checks"].size(), check_names().size());
  EXPECT_EQ(to_json(mdr(a))["value"], 2);
  EXPECT_EQ(to_json(WClass{4, 2, {0, 1}}).dump(), R"({"n":4,"k":2,"exponents":[0,1]})");
}
