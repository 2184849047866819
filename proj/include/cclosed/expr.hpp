#pragma once

// Descriptor expression language:
//
//   desc   := "(" ( "table" PATH | "group" factor+ | "semilattice" slspec
//                 | "product" desc desc | "adjoin-zero" desc
//                 | "adjoin-identity" desc | "taimanov" | "null" ) ")"
//   factor := "(" ( "cyclic" INT | "prufer" PRIME | "integers"
//                 | "cyclic-tower" PRIME ) [ "x" ( INT | "omega" ) ] ")"
//   slspec := "chain-omega" | "antichain-omega-zero" | "(" "poset" PATH ")"
//
// PATH is a bare token or a double-quoted string with backslash escapes.

#include <functional>
#include <string>
#include <string_view>

#include "cclosed/descriptor.hpp"

namespace cclosed {

  //! Resolves the PATH of (table PATH) and (poset PATH) to a table.
  using TableLoader = std::function<CayleyTable(std::string const&)>;

  //! Reads table files relative to the working directory.
  CayleyTable load_table_from_file(std::string const& path);

  //! Throws ParseError carrying the line and column of the offending token
  //! for syntax errors, unknown constructors, wrong arity, non-prime
  //! parameters and tables that do not describe commutative semigroups.
  Descriptor parse_descriptor(std::string_view   text,
                              TableLoader const& loader = load_table_from_file);

}  // namespace cclosed
