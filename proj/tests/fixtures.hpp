#pragma once

// Small tables written out literally.

#include <ostream>

#include "cclosed/table.hpp"

namespace cclosed {
  // lets doctest print subsets in failure messages
  inline std::ostream& operator<<(std::ostream& os, Subset const& s) {
    return os << s.to_string();
  }
}  // namespace cclosed

namespace fixtures {

  using cclosed::CayleyTable;

  inline CayleyTable const L3{{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  inline CayleyTable const Z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  inline CayleyTable const Z4{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  inline CayleyTable const N3{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  inline CayleyTable const LZ2{{0, 0}, {1, 1}};
  inline CayleyTable const T5{{0, 0, 0, 0, 0},
                              {0, 0, 0, 0, 0},
                              {0, 0, 0, 1, 1},
                              {0, 0, 1, 0, 1},
                              {0, 0, 1, 1, 0}};

}  // namespace fixtures
