// Copyright 2026 The eqb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eqb/group.hpp"

#include <stdexcept>

namespace eqb {

DihedralParams::DihedralParams(std::int64_t n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("dihedral parameter n must be >= 2, got " + std::to_string(n));
  }
}

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::int64_t signed_residue(std::int64_t v, std::int64_t m) {
  const std::int64_t r = floor_mod(v, m);
  // (-m/2, m/2]: anything above m/2 wraps to the negative side.
  return 2 * r > m ? r - m : r;
}

GroupElement::GroupElement(std::int64_t rot, bool refl, const DihedralParams& p)
    : rot_(floor_mod(rot, p.n())), refl_(refl) {}

RailPermutation RailPermutation::then(const RailPermutation& next) const {
  if (next.image.size() != image.size()) {
    throw std::invalid_argument("rail permutations act on different rail counts");
  }
  RailPermutation out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    out.image[i] = next.image[static_cast<std::size_t>(image[i])];
  }
  return out;
}

bool RailPermutation::is_bijection() const {
  std::vector<bool> seen(image.size(), false);
  for (const auto r : image) {
    if (r < 0 || static_cast<std::size_t>(r) >= image.size() || seen[static_cast<std::size_t>(r)]) {
      return false;
    }
    seen[static_cast<std::size_t>(r)] = true;
  }
  return true;
}

GroupElement mul(const GroupElement& e1, const GroupElement& e2, const DihedralParams& p) {
  const std::int64_t j = e1.refl() ? -e2.rot() : e2.rot();
  return {e1.rot() + j, e1.refl() != e2.refl(), p};
}

GroupElement inv(const GroupElement& e, const DihedralParams& p) {
  if (e.refl()) {
    return e;
  }
  return {-e.rot(), false, p};
}

RailPermutation to_permutation(const GroupElement& e, const DihedralParams& p) {
  const std::int64_t n = p.n();
  RailPermutation perm;
  perm.image.resize(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t rail = floor_mod(i + e.rot(), n);
    if (e.refl()) {
      rail = floor_mod(n - rail, n);
    }
    perm.image[static_cast<std::size_t>(i)] = rail;
  }
  return perm;
}

std::vector<GroupElement> elements(const DihedralParams& p) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(p.order()));
  for (const bool refl : {false, true}) {
    for (std::int64_t r = 0; r < p.n(); ++r) {
      out.emplace_back(r, refl, p);
    }
  }
  return out;
}

std::string to_string(const GroupElement& e, const DihedralParams& p) {
  if (e.is_identity()) {
    return "I";
  }
  const std::int64_t k = signed_residue(e.rot(), p.n());
  if (k == 0) {
    return "g";
  }
  std::string s = "a^" + std::to_string(k);
  if (e.refl()) {
    s += " g";
  }
  return s;
}

}  // namespace eqb
