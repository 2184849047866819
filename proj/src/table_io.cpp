#include "cclosed/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cclosed/error.hpp"
#include "cclosed/semigroup.hpp"

namespace cclosed {

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      column;
    };

    std::vector<Token> split(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
          ++i;
        }
        std::size_t const start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
          ++i;
        }
        if (i > start) {
          out.push_back({line.substr(start, i - start), start + 1});
        }
      }
      return out;
    }

    std::size_t
    to_number(Token const& token, std::size_t line, char const* what) {
      std::size_t value = 0;
      auto const* first = token.text.data();
      auto const* last  = first + token.text.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw ParseError(std::string("expected ") + what + ", found '"
                             + std::string(token.text) + "'",
                         line,
                         token.column);
      }
      return value;
    }
  }  // namespace

  CayleyTable parse_table(std::string_view text, Associativity check) {
    std::vector<element_type> entries;
    std::size_t               n         = 0;
    std::size_t               rows_read = 0;
    bool                      have_n    = false;
    std::size_t               line_no   = 0;
    std::size_t               last_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto const end  = text.find('\n', pos);
      auto       line = text.substr(
          pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      auto const tokens = split(line);
      if (tokens.empty() || tokens.front().text.front() == '#') {
        continue;
      }
      last_line = line_no;
      if (!have_n) {
        if (tokens.size() != 1) {
          throw ParseError("expected the element count alone on its line",
                           line_no,
                           tokens[1].column);
        }
        n = to_number(tokens[0], line_no, "an element count");
        if (n == 0) {
          throw ParseError("element count must be positive", line_no, tokens[0].column);
        }
        have_n = true;
        continue;
      }
      if (rows_read == n) {
        throw ParseError("unexpected extra row", line_no, tokens[0].column);
      }
      if (tokens.size() != n) {
        auto const col = tokens.size() > n ? tokens[n].column
                                           : tokens.back().column
                                                 + tokens.back().text.size();
        throw ParseError("expected " + std::to_string(n) + " entries, found "
                             + std::to_string(tokens.size()),
                         line_no,
                         col);
      }
      for (auto const& token : tokens) {
        auto const v = to_number(token, line_no, "a table entry");
        if (v >= n) {
          throw ParseError("entry " + std::to_string(v) + " out of range [0, "
                               + std::to_string(n) + ")",
                           line_no,
                           token.column);
        }
        entries.push_back(static_cast<element_type>(v));
      }
      ++rows_read;
    }
    if (!have_n) {
      throw ParseError("missing element count", line_no, 1);
    }
    if (rows_read != n) {
      throw ParseError("expected " + std::to_string(n) + " rows, found "
                           + std::to_string(rows_read),
                       last_line,
                       1);
    }
    CayleyTable table(n, std::move(entries));
    if (check == Associativity::require) {
      auto const report = validate(table);
      if (!report.associative) {
        auto const& w = *report.associativity_witness;
        throw PreconditionError("operation is not associative: witness ("
                                + std::to_string(w[0]) + ","
                                + std::to_string(w[1]) + ","
                                + std::to_string(w[2]) + ")");
      }
    }
    return table;
  }

  CayleyTable read_table_file(std::string const& path, Associativity check) {
    std::ifstream in(path);
    if (!in) {
      throw ArgumentError("cannot open table file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table(buffer.str(), check);
  }

  std::string render_table(CayleyTable const&              table,
                           std::vector<std::string> const& comments) {
    std::ostringstream os;
    for (auto const& c : comments) {
      os << "# " << c << '\n';
    }
    os << table.size() << '\n';
    for (element_type x = 0; x < table.size(); ++x) {
      auto const row = table.row(x);
      for (std::size_t y = 0; y < row.size(); ++y) {
        os << (y == 0 ? "" : " ") << row[y];
      }
      os << '\n';
    }
    return os.str();
  }

  void write_table_file(std::string const&              path,
                        CayleyTable const&              table,
                        std::vector<std::string> const& comments) {
    std::ofstream out(path);
    if (!out) {
      throw ArgumentError("cannot write table file '" + path + "'");
    }
    out << render_table(table, comments);
  }

}  // namespace cclosed
