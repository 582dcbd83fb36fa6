// Copyright 2026 The ksctx developers
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

#include "ksctx/ray.hpp"

#include <algorithm>
#include <cstdlib>

#include "ksctx/errors.hpp"

namespace ksctx {

Ray::Ray(std::vector<RadScalar> components) : components_(std::move(components)) {
  canonicalize();
}

Ray Ray::from_sqmag(const std::vector<long long>& sqmag) {
  std::vector<RadScalar> comps;
  comps.reserve(sqmag.size());
  for (long long a : sqmag) {
    if (a == 0) {
      comps.emplace_back();
    } else {
      RadScalar c = RadScalar::sqrt_of(static_cast<std::uint64_t>(std::llabs(a)));
      comps.push_back(a < 0 ? -c : c);
    }
  }
  return Ray(std::move(comps));
}

void Ray::canonicalize() {
  auto first_nonzero = std::find_if(components_.begin(), components_.end(),
                                    [](const RadScalar& c) { return !c.is_zero(); });
  if (first_nonzero == components_.end())
    throw InvalidRay("ray with all components zero");

  all_single_term_ = std::all_of(components_.begin(), components_.end(),
                                 [](const RadScalar& c) { return c.is_single_term(); });

  // For single-term rays, divide the leading radical out so proportional rays
  // land on identical components: scaling such a ray by any single-term
  // factor is absorbed by this step plus the integer normalization below.
  if (all_single_term_ && first_nonzero->radicand() != 1) {
    RadScalar factor = RadScalar::sqrt_of(first_nonzero->radicand());
    for (auto& c : components_) c *= factor;
  }

  BigInt den_lcm = 1;
  for (const auto& c : components_)
    for (const auto& [d, q] : c.terms())
      den_lcm = boost::multiprecision::lcm(den_lcm, denominator(q));
  if (den_lcm != 1) {
    RadScalar factor{Rational(den_lcm)};
    for (auto& c : components_) c *= factor;
  }

  BigInt num_gcd = 0;
  for (const auto& c : components_)
    for (const auto& [d, q] : c.terms())
      num_gcd = boost::multiprecision::gcd(num_gcd, numerator(q));
  if (num_gcd > 1) {
    RadScalar factor{Rational(1, num_gcd)};
    for (auto& c : components_) c *= factor;
  }

  if (first_nonzero->sign() < 0)
    for (auto& c : components_) c = -c;

  canonical_key_.clear();
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) canonical_key_ += ", ";
    canonical_key_ += components_[i].to_string();
  }
}

bool Ray::operator==(const Ray& rhs) const {
  if (dim() != rhs.dim()) return false;
  if (canonical_key_ == rhs.canonical_key_) return true;
  return proportional(*this, rhs);
}

RadScalar dot(const Ray& a, const Ray& b) {
  if (a.dim() != b.dim())
    throw DimError("dot: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                   std::to_string(b.dim()) + ")");
  RadScalar acc;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

bool proportional(const Ray& a, const Ray& b) {
  if (a.dim() != b.dim())
    throw DimError("proportional: dimension mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

Ray complete(const Ray& a, const Ray& b) {
  if (a.dim() != 3 || b.dim() != 3)
    throw DimError("complete: triad completion requires dimension 3");
  if (proportional(a, b))
    throw NotAPair("complete: rays are proportional");
  if (!dot(a, b).is_zero())
    throw NotAPair("complete: rays are not orthogonal");
  std::vector<RadScalar> c{
      a[1] * b[2] - a[2] * b[1],
      a[2] * b[0] - a[0] * b[2],
      a[0] * b[1] - a[1] * b[0],
  };
  return Ray(std::move(c));
}

RaySet::RaySet(std::size_t dim) : dim_(dim) {}

std::optional<std::size_t> RaySet::find(const Ray& ray) const {
  if (ray.dim() != dim_)
    throw DimError("RaySet: ray of dimension " + std::to_string(ray.dim()) +
                   " in set of dimension " + std::to_string(dim_));
  if (ray.all_single_term()) {
    auto it = key_to_index_.find(ray.canonical_key());
    if (it != key_to_index_.end()) return it->second;
    // a single-term ray may still be proportional to a stored multi-term ray
    // (the scale factor is then itself a multi-term radical)
    for (std::size_t idx : multi_term_)
      if (proportional(rays_[idx], ray)) return idx;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (proportional(rays_[i], ray)) return i;
  return std::nullopt;
}

std::pair<std::size_t, bool> RaySet::insert(Ray ray) {
  if (auto existing = find(ray)) {
    ++duplicates_dropped_;
    return {*existing, false};
  }
  std::size_t index = rays_.size();
  if (ray.all_single_term())
    key_to_index_.emplace(ray.canonical_key(), index);
  else
    multi_term_.push_back(index);
  rays_.push_back(std::move(ray));
  return {index, true};
}

RaySet triad_closure(const RaySet& s, std::size_t max_rays) {
  if (s.dim() != 3)
    throw DimError("triad_closure: requires dimension 3");
  RaySet out(3);
  for (const Ray& r : s) out.insert(r);
  // scan pairs (i, j) with j advancing over the growing set; completions are
  // appended, so pairs within the input are handled before pairs that touch
  // discovered rays, and the output order is deterministic
  for (std::size_t j = 1; j < out.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!dot(out[i], out[j]).is_zero()) continue;
      Ray third = complete(out[i], out[j]);
      if (!out.contains(third)) {
        if (out.size() >= max_rays)
          throw TooLarge("triad_closure: exceeded " + std::to_string(max_rays) + " rays");
        out.insert(std::move(third));
      }
    }
  }
  return out;
}

}  // namespace ksctx
