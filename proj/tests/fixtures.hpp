#pragma once

#include <string>
#include <vector>

#include "nacoh/io.hpp"

namespace fixtures {

struct Case {
  std::string name;
  nacoh::GammaGroup a;
};

inline nacoh::GammaGroup trivial(const char* gamma, const char* group) {
  return nacoh::trivial_gamma_group(nacoh::standard_group_by_name(gamma), nacoh::standard_group_by_name(group));
}

inline nacoh::GammaGroup z3_inversion() {
  return nacoh::make_gamma_group(nacoh::cyclic_group(2), nacoh::cyclic_group(3), {{0, 1, 2}, {0, 2, 1}});
}

// A in {Z2, Z3, Z4, Z2xZ2, S3} x Gamma in {Z2, Z3} trivially, plus Z2
// inverting Z3.
inline std::vector<Case> grid() {
  std::vector<Case> out;
  for (const char* g : {"Z2", "Z3"})
    for (const char* a : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"})
      out.push_back({std::string(a) + "/" + g, trivial(g, a)});
  out.push_back({"Z3/Z2 inversion", z3_inversion()});
  return out;
}

inline std::string data_dir() { return NACOH_DATA_DIR; }

inline std::vector<std::string> corpus() {
  return {"z2_z4_z2_gamma_z2", "z2_z4_z2_gamma_z3", "z3_s3_z2_gamma_z2", "z3_s3_z2_gamma_z3",
          "z2_v4_z2_gamma_z2", "z2_v4_z2_gamma_z3", "z3_s3_z2_gamma_z2_inner"};
}

inline nacoh::ShortExactSequence corpus_ses(const std::string& name) {
  return nacoh::Loader(data_dir() + "/corpus/" + name + ".json").ses();
}

}  // namespace fixtures
