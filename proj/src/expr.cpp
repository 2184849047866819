#include "cclosed/expr.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "cclosed/error.hpp"
#include "cclosed/table_io.hpp"

namespace cclosed {

  CayleyTable load_table_from_file(std::string const& path) {
    return read_table_file(path);
  }

  namespace {
    struct Token {
      enum class Kind { open, close, atom, string, end };
      Kind        kind;
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    class Lexer {
     public:
      explicit Lexer(std::string_view text) : _text(text) {}

      std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
          skip_space();
          if (_pos == _text.size()) {
            out.push_back({Token::Kind::end, "", _line, _column});
            return out;
          }
          auto const line = _line, column = _column;
          char const c    = _text[_pos];
          if (c == '(' || c == ')') {
            advance();
            out.push_back({c == '(' ? Token::Kind::open : Token::Kind::close,
                           std::string(1, c),
                           line,
                           column});
          } else if (c == '"') {
            out.push_back({Token::Kind::string, read_string(), line, column});
          } else {
            std::string atom;
            while (_pos < _text.size() && !is_space(_text[_pos])
                   && _text[_pos] != '(' && _text[_pos] != ')'
                   && _text[_pos] != '"') {
              atom += _text[_pos];
              advance();
            }
            out.push_back({Token::Kind::atom, atom, line, column});
          }
        }
      }

     private:
      static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r';
      }

      void advance() {
        if (_text[_pos] == '\n') {
          ++_line;
          _column = 1;
        } else {
          ++_column;
        }
        ++_pos;
      }

      void skip_space() {
        while (_pos < _text.size()) {
          if (is_space(_text[_pos])) {
            advance();
          } else if (_text[_pos] == ';') {
            while (_pos < _text.size() && _text[_pos] != '\n') {
              advance();
            }
          } else {
            return;
          }
        }
      }

      std::string read_string() {
        auto const line = _line, column = _column;
        advance();  // opening quote
        std::string out;
        while (_pos < _text.size() && _text[_pos] != '"') {
          if (_text[_pos] == '\\') {
            advance();
            if (_pos == _text.size()) {
              break;
            }
          }
          out += _text[_pos];
          advance();
        }
        if (_pos == _text.size()) {
          throw ParseError("unterminated string", line, column);
        }
        advance();  // closing quote
        return out;
      }

      std::string_view _text;
      std::size_t      _pos    = 0;
      std::size_t      _line   = 1;
      std::size_t      _column = 1;
    };

    class Parser {
     public:
      Parser(std::vector<Token> tokens, TableLoader const& loader)
          : _tokens(std::move(tokens)), _loader(loader) {}

      Descriptor parse_all() {
        auto d = descriptor();
        if (peek().kind != Token::Kind::end) {
          fail("unexpected input after the expression", peek());
        }
        return d;
      }

     private:
      Token const& peek() const {
        return _tokens[_pos];
      }

      Token const& next() {
        auto const& t = _tokens[_pos];
        if (t.kind != Token::Kind::end) {
          ++_pos;
        }
        return t;
      }

      [[noreturn]] static void fail(std::string const& what, Token const& at) {
        throw ParseError(what, at.line, at.column);
      }

      static std::string describe(Token const& t) {
        switch (t.kind) {
          case Token::Kind::open:
            return "'('";
          case Token::Kind::close:
            return "')'";
          case Token::Kind::end:
            return "end of input";
          default:
            return "'" + t.text + "'";
        }
      }

      void expect_open(char const* context) {
        auto const& t = next();
        if (t.kind != Token::Kind::open) {
          fail(std::string("expected '(' to start ") + context + ", found "
                   + describe(t),
               t);
        }
      }

      void expect_close(std::string const& head) {
        auto const& t = next();
        if (t.kind != Token::Kind::close) {
          fail("too many arguments to '" + head + "': expected ')', found "
                   + describe(t),
               t);
        }
      }

      Token const& expect_atom(std::string const& what) {
        auto const& t = next();
        if (t.kind != Token::Kind::atom) {
          fail("expected " + what + ", found " + describe(t), t);
        }
        return t;
      }

      std::uint64_t number(Token const& t) {
        std::uint64_t value = 0;
        auto const*   first = t.text.data();
        auto const*   last  = first + t.text.size();
        auto [ptr, ec]      = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
          fail("expected a non-negative integer, found " + describe(t), t);
        }
        return value;
      }

      std::string path() {
        auto const& t = next();
        if (t.kind != Token::Kind::atom && t.kind != Token::Kind::string) {
          fail("expected a path, found " + describe(t), t);
        }
        return t.text;
      }

      CayleyTable load(std::string const& p, Token const& at) {
        try {
          return _loader(p);
        } catch (ParseError const& e) {
          fail("in table '" + p + "': " + e.what(), at);
        } catch (Error const& e) {
          fail(e.what(), at);
        }
      }

      Descriptor descriptor() {
        expect_open("a descriptor");
        auto const&       head_token = expect_atom("a constructor name");
        std::string const head       = head_token.text;
        std::optional<Descriptor> out;
        if (head == "table") {
          auto const& at = peek();
          auto        p  = path();
          try {
            out = Descriptor::finite_table(load(p, at), p);
          } catch (PreconditionError const& e) {
            fail(e.what(), at);
          }
        } else if (head == "group") {
          out = group(head_token);
        } else if (head == "semilattice") {
          out = semilattice();
        } else if (head == "product") {
          auto left  = descriptor_argument(head);
          auto right = descriptor_argument(head);
          out        = Descriptor::product(std::move(left), std::move(right));
        } else if (head == "adjoin-zero") {
          out = Descriptor::adjoin_zero(descriptor_argument(head));
        } else if (head == "adjoin-identity") {
          out = Descriptor::adjoin_identity(descriptor_argument(head));
        } else if (head == "taimanov") {
          out = Descriptor::taimanov();
        } else if (head == "null") {
          out = Descriptor::null();
        } else {
          fail("unknown constructor '" + head + "'", head_token);
        }
        expect_close(head);
        return std::move(*out);
      }

      Descriptor descriptor_argument(std::string const& head) {
        if (peek().kind != Token::Kind::open) {
          fail("'" + head + "' expects a descriptor argument, found "
                   + describe(peek()),
               peek());
        }
        return descriptor();
      }

      Descriptor group(Token const& head) {
        GroupSpec spec;
        while (peek().kind == Token::Kind::open) {
          spec.factors.push_back(factor());
        }
        if (spec.factors.empty()) {
          fail("'group' needs at least one factor", peek().kind == Token::Kind::end ? head : peek());
        }
        return Descriptor::group(std::move(spec));
      }

      GroupFactor factor() {
        expect_open("a group factor");
        auto const&       kind_token = expect_atom("a factor kind");
        std::string const kind       = kind_token.text;
        GroupFactor       f          = GroupFactor::integers();
        auto prime = [&]() {
          auto const& t = expect_atom("a prime");
          auto const  p = number(t);
          if (!is_prime(p)) {
            fail(std::to_string(p) + " is not prime", t);
          }
          return p;
        };
        if (kind == "cyclic") {
          auto const& t     = expect_atom("an order");
          auto const  order = number(t);
          if (order == 0) {
            fail("cyclic order must be positive", t);
          }
          f = GroupFactor::cyclic(order);
        } else if (kind == "prufer") {
          f = GroupFactor::prufer(prime());
        } else if (kind == "cyclic-tower") {
          f = GroupFactor::cyclic_tower(prime());
        } else if (kind == "integers") {
          f = GroupFactor::integers();
        } else {
          fail("unknown group factor '" + kind + "'", kind_token);
        }
        if (peek().kind == Token::Kind::atom && peek().text == "x") {
          next();
          auto const& t = expect_atom("a multiplicity");
          if (t.text == "omega") {
            f.multiplicity = Multiplicity::omega();
          } else {
            auto const m = number(t);
            if (m == 0) {
              fail("multiplicity must be positive", t);
            }
            f.multiplicity = Multiplicity(m);
          }
        }
        expect_close(kind);
        return f;
      }

      Descriptor semilattice() {
        auto const& t = peek();
        if (t.kind == Token::Kind::atom) {
          next();
          if (t.text == "chain-omega") {
            return Descriptor::semilattice(OmegaChain{});
          }
          if (t.text == "antichain-omega-zero") {
            return Descriptor::semilattice(OmegaAntichainZero{});
          }
          fail("unknown semilattice '" + t.text + "'", t);
        }
        if (t.kind != Token::Kind::open) {
          fail("expected a semilattice, found " + describe(t), t);
        }
        next();
        auto const& kind = expect_atom("'poset'");
        if (kind.text != "poset") {
          fail("unknown semilattice '" + kind.text + "'", kind);
        }
        auto const& at = peek();
        auto        p  = path();
        auto        table = load(p, at);
        expect_close("poset");
        try {
          return Descriptor::semilattice(FinitePoset{std::move(table), p});
        } catch (PreconditionError const& e) {
          fail(e.what(), at);
        }
      }

      std::vector<Token> _tokens;
      std::size_t        _pos = 0;
      TableLoader const& _loader;
    };
  }  // namespace

  Descriptor parse_descriptor(std::string_view text, TableLoader const& loader) {
    return Parser(Lexer(text).run(), loader).parse_all();
  }

}  // namespace cclosed
