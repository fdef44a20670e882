// Copyright 2026 The conecheck authors
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

#ifndef CONECHECK_INSTANCES_HPP_
#define CONECHECK_INSTANCES_HPP_

#include <string>
#include <utility>

#include "conecheck/cone_laws.hpp"
#include "conecheck/indexed_cone.hpp"

namespace conecheck {

/// The indexed cone P packaged for the generic law checks.
inline ConeInstance<PElem> make_indexed_cone_instance(const SampleConfig& cfg) {
  ConeInstance<PElem> inst;
  inst.name = "P";
  inst.zero = PElem::zero();
  inst.sample = [cfg](Rng& rng) { return sample_pelem(rng, cfg); };
  inst.add = [](const PElem& a, const PElem& b) { return a + b; };
  inst.scale = [](const Rational& r, const PElem& x) { return scale(r, x); };
  inst.equal = [](const PElem& a, const PElem& b) { return a == b; };
  inst.preorder = [](const PElem& a, const PElem& b) { return preceq(a, b); };
  inst.le_v = [](const PElem& a, const PElem& b, const Rational& v) {
    return le_v(a, b, v);
  };
  inst.sample_le_v_pair = [cfg](Rng& rng, const Rational& v) {
    return sample_le_v_pair(rng, v, cfg);
  };
  inst.sample_target = [cfg](Rng& rng, const PElem& y, const Rational& u) {
    return sample_relation_target(rng, y, u, cfg);
  };
  inst.show = [](const PElem& x) { return x.str(); };
  return inst;
}

inline ExtReal sample_extreal(Rng& rng, const SampleConfig& cfg) {
  switch (rng.below(10)) {
    case 0:
      return ExtReal::infinity();
    case 1:
      return ExtReal(Rational());
    default:
      return ExtReal(sample_rational(rng, cfg));
  }
}

/// The extended nonnegative reals with the relation x <= y + v.
inline ConeInstance<ExtReal> make_extreal_instance(const SampleConfig& cfg) {
  ConeInstance<ExtReal> inst;
  inst.name = "rbar";
  inst.zero = ExtReal(Rational());
  inst.sample = [cfg](Rng& rng) { return sample_extreal(rng, cfg); };
  inst.add = [](const ExtReal& a, const ExtReal& b) { return a + b; };
  inst.scale = [](const Rational& r, const ExtReal& x) { return scale(r, x); };
  inst.equal = [](const ExtReal& a, const ExtReal& b) { return a == b; };
  inst.preorder = [](const ExtReal& a, const ExtReal& b) { return a <= b; };
  inst.le_v = [](const ExtReal& a, const ExtReal& b, const Rational& v) {
    return extreal_le_v(a, b, v);
  };
  inst.sample_le_v_pair = [cfg](Rng& rng, const Rational& v) {
    ExtReal y = sample_extreal(rng, cfg);
    if (y.is_infinite()) return std::make_pair(sample_extreal(rng, cfg), y);
    Rational x;
    switch (rng.below(3)) {
      case 0:
        x = y.finite() + v;  // exact boundary
        break;
      case 1:
        x = y.finite() + sample_unit_open(rng) * v;
        break;
      default:
        x = sample_unit_open(rng) * y.finite();
        break;
    }
    return std::make_pair(ExtReal(x), y);
  };
  inst.sample_target = [cfg](Rng& rng, const ExtReal& y, const Rational& u) {
    if (y.is_infinite()) return ExtReal::infinity();
    if (rng.chance(1, 8)) return ExtReal::infinity();
    switch (rng.below(3)) {
      case 0:
        return ExtReal(y.finite() > u ? y.finite() - u : Rational());
      case 1:
        return y;
      default:
        return ExtReal(y.finite() + sample_rational(rng, cfg));
    }
  };
  inst.show = [](const ExtReal& x) { return x.str(); };
  return inst;
}

// --- negative controls ------------------------------------------------------
// Deliberately broken instances; the law checks must report violations for
// them. They certify that the checker can detect defects at all.

/// Addition replaced by the left projection: commutativity must fail.
inline ConeInstance<PElem> make_broken_add_instance(const SampleConfig& cfg) {
  auto inst = make_indexed_cone_instance(cfg);
  inst.name = "P-broken-add";
  inst.add = [](const PElem& a, const PElem&) { return a; };
  return inst;
}

/// Preorder replaced by the strict comparison: reflexivity must fail.
inline ConeInstance<PElem> make_broken_order_instance(const SampleConfig& cfg) {
  auto inst = make_indexed_cone_instance(cfg);
  inst.name = "P-broken-order";
  inst.preorder = [](const PElem& a, const PElem& b) {
    return preceq(a, b) && !(a == b);
  };
  return inst;
}

/// Relation constantly false: the order embedding must fail.
inline ConeInstance<PElem> make_false_relation_instance(
    const SampleConfig& cfg) {
  auto inst = make_indexed_cone_instance(cfg);
  inst.name = "P-false-relation";
  inst.le_v = [](const PElem&, const PElem&, const Rational&) { return false; };
  return inst;
}

}  // namespace conecheck

#endif  // CONECHECK_INSTANCES_HPP_
