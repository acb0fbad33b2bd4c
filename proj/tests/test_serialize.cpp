#include <string>

#include "doctest.h"
#include "rz/serialize.hpp"

using namespace rz;

TEST_CASE("polygon json round trip") {
  NewtonPolygon np = parse_newton("1:2,1:1,2:1");
  Json j = polygon_to_json(np);
  CHECK(j["summands"].size() == 3);
  // canonical ascending slope order is preserved in the array
  CHECK(j["summands"][0][0] == 1);
  CHECK(j["summands"][0][1] == 2);
  NewtonPolygon back = polygon_from_json(j);
  CHECK(back.str() == np.str());
  CHECK(polygon_to_json(back).dump() == j.dump());
  CHECK_THROWS_AS(polygon_from_json(Json{{"summands", "zap"}}), ParseError);
  CHECK_THROWS_AS(polygon_from_json(Json::object()), ParseError);
  // shared validation path rejects junk summands
  CHECK_THROWS_AS(polygon_from_json(Json::parse(R"({"summands":[[2,4]]})")), NonCoprime);
}

TEST_CASE("coweight json round trip") {
  Coweight nu = newton_vector(parse_newton("1:2,2:1"));
  Json j = coweight_to_json(nu);
  CHECK(j["c"] == "1");
  CHECK(coweight_from_json(j) == nu);
  CHECK(coweight_to_json(coweight_from_json(j)).dump() == j.dump());
}

TEST_CASE("dimension report json") {
  DimensionReport rep = full_report(parse_newton("1:1,1:1"));
  Json j = report_to_json(rep);
  CHECK(j["height"] == 4);
  CHECK(j["dim_closed_form"] == "1");
  CHECK(j["dim_closed_form_decimal"] == 1.0);
  CHECK(j["dim_weight_floor"] == j["dim_defect"]);
  CHECK(j["agree"] == true);
  CHECK(j["np"]["summands"].size() == 2);
}

TEST_CASE("component group json") {
  Json j = components_to_json(component_group(parse_newton("0:1,1:1,1:0")));
  CHECK(j["mult_height"] == 1);
  CHECK(j["pi0"] == "GL_1(Qp)/GL_1(Zp) x Z");
  Json j2 = components_to_json(component_group(parse_newton("1:1")));
  CHECK(j2["mult_height"] == 0);
  CHECK(j2["pi0"] == "Z");
}

TEST_CASE("ring and scalar json round trip") {
  WittRing R(3, 2, 4);
  Json rj = ring_to_json(R);
  CHECK(rj["p"] == 3);
  CHECK(rj["r"] == 2);
  CHECK(rj["n"] == 4);
  auto back = ring_from_json(rj);
  CHECK(R.same(*back));

  WittScalar a(R, 47);
  Json aj = scalar_to_json(a);
  CHECK(aj["digits"].size() == 4);
  CHECK(scalar_from_json(aj, R) == a);
  CHECK(scalar_to_json(scalar_from_json(aj, R)).dump() == aj.dump());

  WittRing other(3, 2, 3);
  CHECK_THROWS_AS(scalar_from_json(aj, other), RingMismatch);
}

TEST_CASE("lattice json round trip") {
  auto sp = DieuSpace::polarized(parse_newton("1:1"), 3, 1, 6);
  WindowLattice lat = WindowLattice::minimal(sp, -1, 1).f_image();
  Json j = lattice_to_json(lat);
  CHECK(j["space"]["pairing"] == true);
  CHECK(j["window"][0] == -1);
  CHECK(j["window"][1] == 2);
  WindowLattice back = lattice_from_json(j);
  CHECK(back.same_presentation(lat));
  CHECK(lattice_to_json(back).dump() == j.dump());

  auto spc = DieuSpace::plain(parse_newton("1:2"), 3, 2, 5);
  WindowLattice plain_lat = WindowLattice::minimal(spc, 0, 2);
  WindowLattice plain_back = lattice_from_json(lattice_to_json(plain_lat));
  CHECK(plain_back.same_presentation(plain_lat));
  CHECK(!plain_back.space().has_pairing());
}

TEST_CASE("sigma system json round trip") {
  Fq F = Fq::make(3, 2);
  auto poly = [&](std::vector<Fq::Elt> v) {
    AdditivePoly a;
    a.coef = std::move(v);
    return ap_normalize(std::move(a));
  };
  SigmaSystem sys{F,
                  {{poly({F.one()}), poly({F.zero(), F.one()})},
                   {poly({F.zero(), F.one()}), poly({F.x()})}},
                  {F.x(), F.from_int(2)}};
  Json j = system_to_json(sys);
  SigmaSystem back = system_from_json(j);
  CHECK(system_to_json(back).dump() == j.dump());

  // solving the reconstruction gives the same answers
  CHECK(brute_solutions(sys, 1) == brute_solutions(back, 1));
  SigmaSystem tri = triangularize(back);
  CHECK(tri.lhs[1][0].zero());
}

TEST_CASE("census interchange formats") {
  auto np = parse_newton("1:1");
  auto recs = enumerate_census(np, 3, 1, -1, 1);
  CensusQuery q{np, 3, 1, -1, 1, kDefaultCensusBudget};

  std::string csv = census_to_csv(q, recs);
  CHECK(csv.find("# np=1:1\n") != std::string::npos);
  CHECK(csv.find("# window=-1:1\n") != std::string::npos);
  CHECK(csv.find("# residue_field=F_3\n") != std::string::npos);
  CHECK(csv.find("kappa,a_inv,rel_volume,a0,a1,basis\n") != std::string::npos);
  CHECK(csv.find("\n2,1,-2,0,0,") != std::string::npos);
  // header comments + column line + one line per record
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6 + 1 + 5);

  Json j = census_to_json(q, recs);
  CHECK(j["metadata"]["np"] == "1:1");
  CHECK(j["metadata"]["residue_field"] == "F_3");
  CHECK(j["records"].size() == 5);
  CHECK(j["records"][0]["kappa"] == 2);
  CHECK(j["records"][4]["kappa"] == -2);
  for (const auto& rec : j["records"]) CHECK(rec["a_inv"] == 1);
}
