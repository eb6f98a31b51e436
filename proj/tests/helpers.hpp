#pragma once

#include <string>
#include <vector>

#include "floercone/knot_complex.hpp"

namespace testutil {

// The trefoil staircase, assembled by hand (independent of make_staircase):
// x-1 at (-1, 2), x0 at (0, 1), x1 at (1, 0); d(x-1) = x0; xi swaps x±1.
inline floercone::KnotComplex trefoil_by_hand() {
    return floercone::KnotComplex(
        "trefoil",
        {{"x-1", -1, 2}, {"x0", 0, 1}, {"x1", 1, 0}},
        {{"x-1", {"x0"}}},
        {{"x-1", "x1"}, {"x0", "x0"}, {"x1", "x-1"}});
}

inline floercone::KnotComplex unknot_by_hand() {
    return floercone::KnotComplex("unknot", {{"x", 0, 0}}, {}, {{"x", "x"}});
}

inline std::string fixture_path(const std::string& name) {
    return std::string(FLOERCONE_FIXTURE_DIR) + "/" + name;
}

} // namespace testutil
