// Copyright (c) 2026 The kerr-casimir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Writes the synthetic iron-like optical tables shipped under data/.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "kcasimir/synthetic.hpp"

namespace {

bool write(const std::string& path, const kcasimir::OpticalTable& t, const char* what) {
  std::ofstream out(path);
  out << "# Synthetic iron-like " << what << " (not measured data)\n";
  out << "# columns: photon energy hbar*omega [eV], dimensionless value\n";
  char buf[64];
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.10e %.10e\n", t.omega()[i], t.value()[i]);
    out << buf;
  }
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  const kcasimir::synthetic::FeLikeRecipe r;
  const bool ok = write(dir + "/fe_like_im_eps_xx.dat", kcasimir::synthetic::fe_like_xx_table(r),
                        "Im eps_xx") &&
                  write(dir + "/fe_like_re_eps_xy.dat", kcasimir::synthetic::fe_like_xy_table(r),
                        "Re eps_xy");
  if (!ok) {
    std::cerr << "failed writing tables to " << dir << '\n';
    return 3;
  }
  return 0;
}
