// Writes the named fixtures as JSON documents into a directory (default: fixtures/).

#include <filesystem>
#include <fstream>
#include <iostream>

#include "json_io.hpp"

using namespace crossmod;
using crossmod::cli::Json;
using crossmod::cli::to_json;

namespace {

void write(const std::filesystem::path& dir, const std::string& name, const Json& doc) {
  std::ofstream out(dir / name);
  out << doc.dump(2) << '\n';
}

Json coboundary_bialgebra(const LieAlg& g, const Bivector& r) {
  return {{"schema", "bialgebra/1"}, {"g", to_json(g)}, {"r_matrix", to_json(r)}};
}

Json coboundary_2bialgebra_doc(const LieCrossedModule& cm, const Bivector& mu) {
  return {{"schema", "two_bialgebra/1"}, {"cm", to_json(cm)}, {"r_matrix", to_json(mu)}};
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  write(dir, "cm_z4.json", to_json(fixtures::cm_z4()));
  write(dir, "cm_s3.json", to_json(fixtures::cm_s3()));
  FinCrossedModule broken = fixtures::cm_z4();
  broken.phi[2] = 1;  // Phi no longer a homomorphism
  write(dir, "cm_z4_broken.json", to_json(broken));

  write(dir, "x_flow.json", to_json(fixtures::x_flow()));
  write(dir, "x_flow_2bialg.json", coboundary_2bialgebra_doc(fixtures::x_flow(), Multivector::basis(2, {0, 1})));
  write(dir, "id_sl2_2bialg.json",
        coboundary_2bialgebra_doc(fixtures::identity_cm(fixtures::sl2()), Multivector::basis(3, {1, 2})));
  write(dir, "b_sol2.json", to_json(fixtures::b_sol2()));
  write(dir, "b_sl2.json", coboundary_bialgebra(fixtures::sl2(), Multivector::basis(3, {0, 1})));

  write(dir, "mat_heis.json", to_json(fixtures::mat_heis()));
  write(dir, "mat_affine.json", to_json(fixtures::mat_affine()));
  write(dir, "mat_affine_identity.json", to_json(fixtures::mat_affine_identity()));
  write(dir, "mat_linear_plane.json", to_json(fixtures::mat_linear_plane()));

  write(dir, "v_line_f3.json", to_json(fixtures::v_line(Field::prime(3))));
  Mat phi(1, 2);
  phi(0, 0) = 1;
  write(dir, "v21_f3.json", to_json(TwoVectSpace::make(phi, Field::prime(3))));
  write(dir, "sign_rep_f3.json", to_json(fixtures::sign_rep(Field::prime(3))));

  write(dir, "z4_subgroup.json", to_json(TwoSubgroup{{0}, {0, 2}}));
  write(dir, "s3_subgroup.json", to_json(TwoSubgroup{fixtures::a3(), {0}}));
  write(dir, "z4_pair_action.json",
        Json{{"schema", "action_table/1"}, {"kind", "pair"}, {"sigma", Json::array({{0, 1, 2}, {1, 0, 2}})}});
  write(dir, "pair3_groupoid.json", Json{{"schema", "groupoid/1"}, {"kind", "pair"}, {"points", 3}});
  return 0;
}
