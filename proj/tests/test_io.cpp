#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "osgm/io.hpp"

using namespace osgm;
using namespace osgm::testing;
using osgm::io::json;

namespace {

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n) {
  Polynomial p(n, random_rational(rng));
  for (std::size_t i = 0; i < n; ++i) p += Polynomial::variable(n, i) * random_rational(rng);
  return p * (Polynomial::variable(n, 0) + Polynomial(n, Rational(1)));
}

}  // namespace

TEST(Io, RationalFormat) {
  EXPECT_EQ(io::to_json(ratio(-3, 6)), "-1/2");
  EXPECT_EQ(io::to_json(Rational(4)), "4");
  EXPECT_EQ(io::rational_from_json(json("6/4")), ratio(3, 2));
  EXPECT_EQ(io::rational_from_json(json(7)), Rational(7));
  EXPECT_THROW(io::rational_from_json(json(0.5)), ValidationError);
  EXPECT_THROW(io::rational_from_json(json("1/0")), ValidationError);
}

TEST(Io, PolynomialFormat) {
  auto p = Polynomial::variable(3, 0) * Rational(2) - Polynomial::variable(3, 2) * ratio(1, 2);
  auto j = io::to_json(p);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["coefficient"], "2");
  EXPECT_EQ(j[0]["exponents"], json({1, 0, 0}));
  EXPECT_EQ(j[1]["coefficient"], "-1/2");
  EXPECT_EQ(io::to_json(Polynomial(3)), json::array());
  EXPECT_THROW(io::polynomial_from_json(json::parse(R"([{"coefficient":"1","exponents":[1]}])"), 3), ValidationError);
}

TEST(Io, RoundTrips) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    auto r = random_rational(rng);
    EXPECT_EQ(io::rational_from_json(json::parse(io::to_json(r).dump())), r);

    auto p = random_polynomial(rng, 4);
    EXPECT_EQ(io::polynomial_from_json(json::parse(io::to_json(p).dump()), 4), p);

    auto m = random_matrix(rng, 3, 4);
    EXPECT_EQ(io::rational_matrix_from_json(json::parse(io::to_json(m).dump())), m);

    PolynomialMatrix pm(2, 2, Polynomial(4));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) pm(i, k) = random_polynomial(rng, 4);
    EXPECT_EQ(io::polynomial_matrix_from_json(json::parse(io::to_json(pm).dump()), 4), pm);

    Combination<Rational> x;
    accumulate(x, Subset{1, 3}, random_rational(rng));
    accumulate(x, Subset{2, 5}, random_rational(rng));
    EXPECT_EQ(io::rational_element_from_json(json::parse(io::to_json(x).dump())), x);

    Combination<Polynomial> y;
    accumulate(y, Subset{2}, random_polynomial(rng, 4));
    EXPECT_EQ(io::polynomial_element_from_json(json::parse(io::to_json(y).dump()), 4), y);
  }
}

TEST(Io, ElementFormat) {
  Combination<Rational> x;
  accumulate(x, Subset{1, 5}, Rational(1));
  accumulate(x, Subset{1, 3}, Rational(-1));
  auto j = io::to_json(x);
  EXPECT_EQ(j, json::parse(R"([{"monomial":[1,3],"coeff":"-1"},{"monomial":[1,5],"coeff":"1"}])"));
}

TEST(Io, ArrangementRoundTrip) {
  auto a = selberg();
  auto j = io::to_json(a);
  EXPECT_EQ(j["ell"], 2);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["rows"][1], json({"-1", "1", "0"}));
  auto b = io::arrangement_from_json(json::parse(j.dump()));
  EXPECT_EQ(b.rows(), a.rows());
  EXPECT_EQ(b.ell(), a.ell());
}

TEST(Io, ArrangementDiagnostics) {
  auto bad_rational = json::parse(R"({"ell":2,"n":3,"rows":[["0","1","0"],["1/0","0","1"],["0","1","1"]]})");
  try {
    io::arrangement_from_json(bad_rational);
    FAIL() << "accepted 1/0";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::arrangement_from_json(json::parse(R"({"ell":2,"rows":[]})")), ValidationError);
  EXPECT_THROW(io::arrangement_from_json(json::parse(R"({"ell":2,"n":4,"rows":[["0","1","0"]]})")), ValidationError);
  EXPECT_THROW(io::arrangement_from_json(json::parse(R"({"ell":"2","n":1,"rows":[["0","1","0"]]})")), ValidationError);
  EXPECT_THROW(io::arrangement_from_json(json::parse(R"([1,2])")), ValidationError);
  EXPECT_THROW(io::arrangement_from_json(json::parse(R"({"ell":2,"n":2,"rows":[["0","1","0"],["1","2","0"]]})")),
               ValidationError);
  EXPECT_THROW(io::read_arrangement("/nonexistent/file.json"), ValidationError);
}

TEST(Io, DataFilesParse) {
  auto a = io::read_arrangement(std::string(OSGM_DATA_DIR) + "/selberg.json");
  EXPECT_EQ(a.rows(), selberg().rows());
  auto d = io::read_arrangement(std::string(OSGM_DATA_DIR) + "/selberg-degenerate.json");
  EXPECT_EQ(d.rows(), selberg_degenerate().rows());
  auto g = io::read_arrangement(std::string(OSGM_DATA_DIR) + "/generic.json");
  EXPECT_EQ(g.rows(), generic_lines().rows());
  auto w = io::weights_from_json(io::read_json_file(std::string(OSGM_DATA_DIR) + "/selberg-weights.json"));
  EXPECT_EQ(w.values(), io::parse_weights("1/2,1/3,1/5,1/7,1/11").values());
}

TEST(Io, Weights) {
  auto w = io::parse_weights(" 1/2, -3 ,0");
  EXPECT_EQ(w.values(), (std::vector<Rational>{ratio(1, 2), Rational(-3), Rational(0)}));
  EXPECT_EQ(io::weights_from_json(json::parse(io::to_json(w).dump())).values(), w.values());
  EXPECT_THROW(io::parse_weights("1/2,,3"), ValidationError);
  EXPECT_THROW(io::parse_weights(""), ValidationError);
  EXPECT_THROW(io::weights_from_json(json::parse(R"({"w":[1]})")), ValidationError);
}

TEST(Io, CohomologyRoundTrip) {
  AomotoComplex c(CombinatorialType::from_realization(selberg()));
  auto h = os_cohomology(c, Weights({1, 2, 2, 1, -3}));
  auto j = json::parse(io::to_json(h, c).dump());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[1]["dim"], 1);
  EXPECT_EQ(j[2]["dim"], 3);
  auto reps = io::representatives_from_json(j, c);
  for (int q = 0; q <= 2; ++q) EXPECT_EQ(reps[q], h.degrees[q].representatives);
}

TEST(Io, EndomorphismAndSpectrumRoundTrip) {
  auto e = omega_tilde_pencil(Subset{3, 4, 5}, 1, 5, 2);
  EXPECT_EQ(io::endomorphism_from_json(json::parse(io::to_json(e).dump()), 5), e);
  SpectrumReport r{ratio(167, 385), 0, 2, true, true};
  auto back = io::spectrum_report_from_json(json::parse(io::to_json(r).dump()));
  EXPECT_EQ(back.lambda_s, r.lambda_s);
  EXPECT_EQ(back.d0, 0);
  EXPECT_EQ(back.ds, 2);
  EXPECT_TRUE(back.verified);
  EXPECT_TRUE(back.applicable);
  SpectrumReport z{Rational(0), 3, 0, true, false};
  auto jz = io::to_json(z);
  EXPECT_EQ(jz["note"], "spectrum theorem inapplicable: lambda_S = 0");
  EXPECT_FALSE(io::spectrum_report_from_json(jz).applicable);
}
