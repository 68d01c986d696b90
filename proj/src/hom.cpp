#include "gog/hom.hpp"

#include <string>

namespace gog {

GroupHom validate_hom(GroupPtr domain, GroupPtr codomain, std::vector<Elt> image,
                      bool require_injective) {
  if (!domain || !codomain) fail(errc::bad_shape, "hom needs domain and codomain");
  if (static_cast<int>(image.size()) != domain->order)
    fail(errc::bad_shape, "hom image table has " + std::to_string(image.size()) +
                              " entries, expected " + std::to_string(domain->order));
  for (Elt x = 0; x < domain->order; ++x)
    if (image[x] < 0 || image[x] >= codomain->order)
      fail(errc::bad_hom_target, "image of " + std::to_string(x) + " out of range");
  if (image[FiniteGroup::identity] != FiniteGroup::identity)
    fail(errc::not_homomorphism, "identity not preserved");
  for (Elt x = 0; x < domain->order; ++x)
    for (Elt y = 0; y < domain->order; ++y)
      if (image[domain->times(x, y)] != codomain->times(image[x], image[y]))
        fail(errc::not_homomorphism,
             "pair (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  bool injective = true;
  for (Elt x = 0; x < domain->order && injective; ++x)
    for (Elt y = x + 1; y < domain->order; ++y)
      if (image[x] == image[y]) {
        if (require_injective)
          fail(errc::not_injective,
               "elements " + std::to_string(x) + " and " + std::to_string(y) + " collide");
        injective = false;
        break;
      }
  GroupHom h;
  h.domain = std::move(domain);
  h.codomain = std::move(codomain);
  h.image = std::move(image);
  h.injective = injective;
  return h;
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Elt> image(g->order);
  for (Elt x = 0; x < g->order; ++x) image[x] = x;
  return validate_hom(g, g, std::move(image), true);
}

GroupHom cyclic_hom(const GroupPtr& domain, const GroupPtr& codomain, Elt image_of_one,
                    bool require_injective) {
  std::vector<Elt> image(domain->order);
  Elt acc = FiniteGroup::identity;
  for (Elt x = 0; x < domain->order; ++x) {
    image[x] = acc;
    acc = codomain->times(acc, image_of_one);
  }
  return validate_hom(domain, codomain, std::move(image), require_injective);
}

}  // namespace gog
