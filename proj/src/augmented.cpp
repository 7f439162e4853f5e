#include "misere/augmented.hpp"

namespace misere {

AugId mk_aug(Engine& eng, const std::vector<AugId>& lefts, const std::vector<AugId>& rights,
             bool left_tomb, bool right_tomb) {
  return eng.intern(std::vector<AugId>(lefts), std::vector<AugId>(rights), left_tomb, right_tomb);
}

}  // namespace misere
