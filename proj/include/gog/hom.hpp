#pragma once

#include <vector>

#include "gog/group.hpp"

namespace gog {

// Homomorphism between finite groups, stored as the image of every element.
struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<Elt> image;
  bool injective = false;

  Elt apply(Elt a) const { return image[a]; }
};

// Checks image size, identity preservation, the homomorphism law on all
// pairs, and (when required) injectivity. Throws on the first violation.
GroupHom validate_hom(GroupPtr domain, GroupPtr codomain, std::vector<Elt> image,
                      bool require_injective = false);

GroupHom identity_hom(const GroupPtr& g);

// Cyclic domain: the map k -> image_of_one^k. Throws if that is not well defined.
GroupHom cyclic_hom(const GroupPtr& domain, const GroupPtr& codomain, Elt image_of_one,
                    bool require_injective = false);

}  // namespace gog
