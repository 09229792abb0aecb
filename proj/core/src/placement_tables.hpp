#pragma once

#include <array>
#include <cstdint>

#include "cubefold/cube_model.hpp"

namespace cubefold {

// Index-level lookup tables over the 48 placements, shared by the search.
// Agreement keys are derived from corner identities only; the oracle uses
// them too, while the extension tables are exclusive to the search path.
struct PlacementTables {
    std::array<std::array<int, 4>, 48> ext_quarter{};  // [placement][direction]
    std::array<std::array<int, 4>, 48> ext_flat{};
    std::array<std::uint8_t, 48> face_bit{};
    std::array<std::array<std::uint16_t, 4>, 48> my_key{}; // my shared-edge corners
    std::array<std::array<std::uint16_t, 4>, 48> nb_key{}; // neighbor's matching corners

    bool agree(int mine, Direction dir, int neighbor) const {
        return my_key[static_cast<std::size_t>(mine)][static_cast<int>(dir)] ==
               nb_key[static_cast<std::size_t>(neighbor)][static_cast<int>(dir)];
    }
};

const PlacementTables& placement_tables();

} // namespace cubefold
