#include "doctest.h"
#include "resq/error.hpp"
#include "resq/io.hpp"

using namespace resq;

TEST_CASE("number formatting round-trips") {
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(-0.75) == "-0.75");
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  for (double x : {1.0 / 3.0, 2.0 / 3.0, 1e-300, -123456.789e10}) CHECK(std::stod(io::format_double(x)) == x);
}

TEST_CASE("matrix CSV and JSON") {
  const ResistanceBundle b = resistance_bundle(generate(FamilySpec::complete(2)));
  CHECK(io::matrix_to_csv(b.rl) == "1,-1\n-1,1\n");
  CHECK(io::matrix_to_csv(b.r) == "0,1\n1,0\n");

  const ResistanceBundle c = resistance_bundle(generate(FamilySpec::cycle(5)));
  const io::json j = io::matrix_to_json(c.rq, "rq");
  CHECK(j.at("n") == 5);
  CHECK(j.at("kind") == "rq");
  CHECK(j.at("data").size() == 25);
  const DenseMatrix back = io::matrix_from_json(io::json::parse(j.dump()));
  CHECK(back == c.rq);

  io::json bad = j;
  bad["data"].erase(0);
  CHECK_THROWS_AS(io::matrix_from_json(bad), Error);
}

TEST_CASE("spectrum serialization") {
  const Spectrum s = Spectrum::from_values({3.5, 3.5, 3.0, 0.0});
  const io::json j = io::spectrum_to_json(s);
  CHECK(j.at("values").size() == 4);
  CHECK(j.at("multiplicities").size() == 3);
  CHECK(j.at("multiplicities")[0][0] == 3.5);
  CHECK(j.at("multiplicities")[0][1] == 2);
  CHECK(io::spectrum_to_csv(s) == "3.5\n3.5\n3\n0\n");
}

TEST_CASE("energy serialization") {
  const EnergyReport r = resistance_laplacian_energy(generate(FamilySpec::complete(4)));
  const io::json j = io::energy_to_json(r);
  CHECK(j.at("n") == 4);
  CHECK(j.at("le_r").get<double>() == doctest::Approx(3.0));
  CHECK(j.at("satisfied").at("upper_eta1") == true);
  CHECK(j.at("eta").size() == 4);
  CHECK(j.at("graph") == r.graph_tag);
  const std::string csv = io::energy_to_csv(r);
  CHECK(csv.rfind("key,value\n", 0) == 0);
  CHECK(csv.find("\nn,4\n") != std::string::npos);
  CHECK(csv.find("eta[3],") != std::string::npos);
  CHECK(csv.find("all_bounds_satisfied,true") != std::string::npos);
}

TEST_CASE("closed form serialization") {
  const io::json j = io::closed_form_to_json(closed_forms::closed_form(FamilySpec::bipartite(2, 3)));
  CHECK(j.at("family") == "K2,3");
  CHECK(j.at("n") == 5);
  CHECK(j.at("rl").at("data").size() == 25);
  CHECK(j.at("rq_spectrum").at("values").size() == 5);
}
