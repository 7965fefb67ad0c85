#pragma once

#include <string>

namespace fixtures {

// Rows as published in Cremona's tables; used where a test must not depend on
// the bundled corpus file.
inline const std::string kSmallDb =
    "# label a1 a2 a3 a4 a6 rank torsion [conductor]\n"
    "11a1 0 -1 1 -10 -20 0 5 11\n"
    "37a1 0 0 1 -1 0 1 1 37\n"
    "57a1 0 -1 1 -2 2 1 1 57\n"
    "114c1 1 1 1 -352 -2431 0 4 114\n";

}  // namespace fixtures
