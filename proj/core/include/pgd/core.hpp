#ifndef PGD_CORE_HPP
#define PGD_CORE_HPP

#include "pgd/errors.hpp"
#include "pgd/types.hpp"

namespace pgd {

// Checks the deal for totality on players x N, global injectivity and
// in-range pictures/suits, and interns all names. Throws ValidationError
// identifying the first violation in declared (player, index) order.
Instance validate_instance(const InstanceData& data);

// Deals the table: hand slot (p, j) holds deal(p, j), the deck is the rest
// of the pictures x suits universe.
TableState new_table(const Instance& inst);
TableState new_table(const InjectionMap& deal, int num_pictures);

// Number of spots whose card matches the hand's name in picture and the
// spot's naming suit ("k-of-a-kind"). 0 for unnamed (spadeless) hands.
int quality(const TableState& state, int player);

} // namespace pgd

#endif
