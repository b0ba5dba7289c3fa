#pragma once

#include <string>
#include <vector>

#include "softcvx/convexity.hpp"

namespace fixture {

using namespace softcvx;

// X = {x1,x2,x3}, E = {e1,e2} and the soft sets of the non-convex family.
struct Nonconvex {
  SpacePtr space = Space::make({"x1", "x2", "x3"}, {"e1", "e2"});
  SoftSet set(std::vector<std::string> a, std::vector<std::string> b) const {
    return make_soft_set(space, {{"e1", a}, {"e2", b}});
  }
  SoftSet phi = SoftSet::null(space);
  SoftSet abs = SoftSet::absolute(space);
  SoftSet o1 = set({"x1"}, {"x1"});
  SoftSet o2 = set({"x1"}, {"x1", "x2"});
  SoftSet o3 = set({"x1", "x2", "x3"}, {"x1", "x3"});
  SoftSet o4 = set({"x2"}, {"x2"});
  SoftSet o5 = set({"x1", "x2"}, {"x1", "x2"});
  SoftSet m24 = set({}, {"x2"});
  SoftSet m34 = set({"x2"}, {});
  SoftSet m35 = set({"x1", "x2"}, {"x1"});
  SoftSet target = set({"x3"}, {"x1", "x3"});

  SoftFamily zeta() const { return SoftFamily(space, {phi, o1, o2, o3, o4, o5, abs}); }
  SoftFamily zetastar() const {
    return SoftFamily(space, {phi, o1, o2, o3, o4, o5, abs, m24, m34, m35});
  }
  SoftConvexStructure structure() const { return SoftConvexStructure::make(zetastar()); }
};

}  // namespace fixture
