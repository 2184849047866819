#pragma once

// Table file format: the first non-comment line holds n, followed by n lines
// of n space-separated integers in [0, n). Row index is the left operand.
// Lines whose first non-blank character is '#' are comments; blank lines
// are ignored.

#include <string>
#include <string_view>
#include <vector>

#include "cclosed/table.hpp"

namespace cclosed {

  enum class Associativity { require, skip };

  //! Throws ParseError (with line and column) on syntax or range errors and,
  //! unless \p check is Associativity::skip, on non-associative input.
  CayleyTable parse_table(std::string_view text,
                          Associativity    check = Associativity::require);

  CayleyTable read_table_file(std::string const& path,
                              Associativity      check = Associativity::require);

  //! Inverse of parse_table. Each comment line is emitted as "# <line>"
  //! before the table.
  std::string render_table(CayleyTable const&              table,
                           std::vector<std::string> const& comments = {});

  void write_table_file(std::string const&              path,
                        CayleyTable const&              table,
                        std::vector<std::string> const& comments = {});

}  // namespace cclosed
