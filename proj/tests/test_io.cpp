#include <doctest.h>

#include "hkoebe/io.hpp"
#include "hkoebe/shear.hpp"
#include "hkoebe/verify.hpp"

using namespace hkoebe;
using C = std::complex<double>;

TEST_CASE("deterministic dump") {
  Json j = {{"b", 0.1}, {"a", Json::array({1.0 / 3.0, 2})}, {"c", std::numeric_limits<double>::infinity()}};
  CHECK(dump_deterministic(j) == "{\"a\":[0.33333333333333331,2],\"b\":0.10000000000000001,\"c\":null}");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-1.0 / 6.0) == "-0.16666666666666666");
}

TEST_CASE("series round trip") {
  const Series s{C(1, -2), C(0.1, 0), C(-3e-20, 7)};
  const auto back = series_from_json(Json::parse(dump_deterministic(series_to_json(s))));
  CHECK(max_coeff_distance(back, s) == 0.0);
  CHECK_THROWS_AS(series_from_json(Json::array()), ParseError);
  CHECK_THROWS_AS(series_from_json(Json::parse("[[1]]")), ParseError);
  CHECK_THROWS_AS(series_from_json(Json::parse("[[1, \"x\"]]")), ParseError);
  CHECK_THROWS_AS(series_from_json(Json::parse("{}")), ParseError);
}

TEST_CASE("map JSON") {
  const auto map = sheared_koebe(DilatationSpec(0.5, 2, 0.3), 16);
  const std::string text = dump_deterministic(map_to_json(map, Json{{"k", 0.5}}));
  CHECK(text.find("\"meta\"") != std::string::npos);
  const auto back = std::get<HarmonicMap<double>>(map_from_json_text(text));
  CHECK(max_coeff_distance(back.h(), map.h()) == 0.0);
  CHECK(max_coeff_distance(back.g(), map.g()) == 0.0);
  CHECK(dump_deterministic(map_to_json(back, Json{{"k", 0.5}})) == text);

  const std::string cf = dump_deterministic(map_to_json(ClosedFormId::harmonic_koebe(3)));
  CHECK(cf == "{\"closed_form\":\"KH_3\",\"m\":3}");
  CHECK(std::get<ClosedFormId>(map_from_json_text(cf)) == ClosedFormId::harmonic_koebe(3));
  CHECK(std::get<ClosedFormId>(map_from_json_text("{\"closed_form\":\"K\"}")) == ClosedFormId::koebe());
}

TEST_CASE("malformed map JSON") {
  const char* bad[] = {"", "{", "[]", "42", "{\"h\":[[0,0],[1,0]]}", "{\"closed_form\":3}",
                       "{\"closed_form\":\"KH_9\"}", "{\"closed_form\":\"KH_2\",\"m\":3}",
                       "{\"h\":[[0,0],[1,0]],\"g\":[[0]]}", "{\"h\":\"z\",\"g\":[[0,0]]}"};
  for (const char* t : bad) {
    CAPTURE(t);
    CHECK_THROWS_AS(map_from_json_text(t), ParseError);
  }
}

TEST_CASE("report JSON") {
  BoundReport r;
  r.name = "x";
  r.inputs = {{"k", 1.0}};
  r.value = 0.25;
  CHECK(dump_deterministic(report_to_json(r)) ==
        "{\"inputs\":{\"k\":1},\"measured\":null,\"name\":\"x\",\"pass\":null,\"value\":0.25,\"witness\":null}");
  r.compare(0.3, BoundDirection::AtLeast, 0.0);
  r.witness = C(0, -1);
  CHECK(dump_deterministic(report_to_json(r)) ==
        "{\"inputs\":{\"k\":1},\"measured\":0.29999999999999999,\"name\":\"x\",\"pass\":true,\"value\":0.25,"
        "\"witness\":[0,-1]}");
}

TEST_CASE("other report encoders") {
  RadiusEstimate e;
  e.value = 0.5;
  e.r_ladder = {{0.5, 0.25}};
  e.j_lo = 4;
  e.j_hi = 5;
  CHECK(dump_deterministic(radius_to_json(e)) ==
        "{\"argmin_theta\":0,\"clipped\":false,\"extrapolated\":0,\"j_hi\":5,\"j_lo\":4,\"r_ladder\":[[0.5,0.25]],"
        "\"value\":0.5}");
  CHECK(dump_deterministic(area_to_json({std::numeric_limits<double>::infinity(), true})) ==
        "{\"divergent\":true,\"value\":null}");
  ModulusCheck m;
  m.params = {{"t0", 0.5}};
  m.closed_form = 1;
  m.numeric = 1;
  CHECK(dump_deterministic(modulus_check_to_json(m)) ==
        "{\"closed_form\":1,\"numeric\":1,\"params\":{\"t0\":0.5},\"residual\":0}");
}

TEST_CASE("boundary CSV") {
  const auto p = boundary_profile(HarmonicMap<double>(), 0.5, 4);
  const std::string csv = boundary_csv(p);
  CHECK(csv.rfind("theta,re,im,modulus\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("\n0,0.5,0,0.5\n") != std::string::npos);
  CHECK(csv.find("1.5707963267948966,") != std::string::npos);
}

TEST_CASE("verification suite") {
  const auto names = verification_check_names();
  CHECK(names.size() == 12);
  const auto one = run_verification("kh2-minus-one");
  REQUIRE(one.size() == 1);
  CHECK(one[0].pass);
  CHECK_THROWS_AS(run_verification("nope"), DomainError);
  const auto j = verification_to_json(one);
  CHECK(dump_deterministic(j) == dump_deterministic(verification_to_json(run_verification("kh2-minus-one"))));
}
