#include "cclosed/table.hpp"

#include <algorithm>
#include <sstream>

#include "cclosed/error.hpp"

namespace cclosed {

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  Subset Subset::of(std::size_t n, std::initializer_list<element_type> xs) {
    return of(n, std::span<element_type const>(xs.begin(), xs.size()));
  }

  Subset Subset::of(std::size_t n, std::span<element_type const> xs) {
    Subset s(n);
    for (auto x : xs) {
      s.insert(x);
    }
    return s;
  }

  void Subset::insert(element_type x) {
    if (x >= _bits.size()) {
      throw ArgumentError("element " + std::to_string(x)
                          + " out of range for a subset of [0, "
                          + std::to_string(_bits.size()) + ")");
    }
    _bits[x] = true;
  }

  void Subset::erase(element_type x) {
    if (x < _bits.size()) {
      _bits[x] = false;
    }
  }

  std::size_t Subset::count() const noexcept {
    return static_cast<std::size_t>(std::count(_bits.begin(), _bits.end(), true));
  }

  std::vector<element_type> Subset::members() const {
    std::vector<element_type> out;
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i]) {
        out.push_back(static_cast<element_type>(i));
      }
    }
    return out;
  }

  bool Subset::is_subset_of(Subset const& other) const {
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i] && !other.contains(static_cast<element_type>(i))) {
        return false;
      }
    }
    return true;
  }

  std::string Subset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto x : members()) {
      os << (first ? "" : ",") << x;
      first = false;
    }
    os << '}';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // CayleyTable
  ////////////////////////////////////////////////////////////////////////

  CayleyTable::CayleyTable(std::size_t n, std::vector<element_type> entries)
      : _n(n), _op(std::move(entries)) {
    if (n == 0) {
      throw MalformedTable("a table must have at least one element");
    }
    if (_op.size() != n * n) {
      throw MalformedTable("expected " + std::to_string(n * n)
                           + " entries, found " + std::to_string(_op.size()));
    }
    for (std::size_t i = 0; i < _op.size(); ++i) {
      if (_op[i] >= n) {
        throw MalformedTable("entry " + std::to_string(_op[i]) + " at cell ("
                             + std::to_string(i / n) + ","
                             + std::to_string(i % n) + ") out of range [0, "
                             + std::to_string(n) + ")");
      }
    }
  }

  namespace {
    std::vector<element_type>
    flatten(std::initializer_list<std::initializer_list<element_type>> rows) {
      std::vector<element_type> out;
      for (auto const& row : rows) {
        if (row.size() != rows.size()) {
          throw MalformedTable("table rows must have length "
                               + std::to_string(rows.size()));
        }
        out.insert(out.end(), row.begin(), row.end());
      }
      return out;
    }
  }  // namespace

  CayleyTable::CayleyTable(
      std::initializer_list<std::initializer_list<element_type>> rows)
      : CayleyTable(rows.size(), flatten(rows)) {}

  CayleyTable CayleyTable::from_function(
      std::size_t                                             n,
      std::function<element_type(element_type, element_type)> f) {
    std::vector<element_type> op(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        op[x * n + y] = f(x, y);
      }
    }
    return CayleyTable(n, std::move(op));
  }

  element_type CayleyTable::power(element_type x, std::size_t k) const {
    if (k == 0) {
      throw ArgumentError("power exponent must be positive");
    }
    element_type result = x;
    for (std::size_t i = 1; i < k; ++i) {
      result = (*this)(result, x);
    }
    return result;
  }

  CayleyTable
  CayleyTable::restrict_to(std::span<element_type const> elements) const {
    std::vector<std::size_t> position(_n, _n);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      position[elements[i]] = i;
    }
    std::size_t const         m = elements.size();
    std::vector<element_type> op(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto const xy = (*this)(elements[i], elements[j]);
        if (position[xy] == _n) {
          throw PreconditionError(
              "subset is not closed: " + std::to_string(elements[i]) + "*"
              + std::to_string(elements[j]) + "=" + std::to_string(xy));
        }
        op[i * m + j] = static_cast<element_type>(position[xy]);
      }
    }
    return CayleyTable(m, std::move(op));
  }

  Subset product(CayleyTable const& table, Subset const& a, Subset const& b) {
    Subset out(table.size());
    auto   bs = b.members();
    for (auto x : a.members()) {
      for (auto y : bs) {
        out.insert(table(x, y));
      }
    }
    return out;
  }

  CayleyTable direct_product(CayleyTable const& left,
                             CayleyTable const& right) {
    auto const m = right.size();
    return CayleyTable::from_function(
        left.size() * m, [&](element_type x, element_type y) {
          auto const l = left(x / m, y / m);
          auto const r = right(x % m, y % m);
          return static_cast<element_type>(l * m + r);
        });
  }

  namespace tables {
    CayleyTable cyclic_group(std::size_t n) {
      return CayleyTable::from_function(n, [n](element_type x, element_type y) {
        return static_cast<element_type>((x + y) % n);
      });
    }

    CayleyTable chain(std::size_t n) {
      return CayleyTable::from_function(
          n, [](element_type x, element_type y) { return std::min(x, y); });
    }

    CayleyTable null(std::size_t n) {
      return CayleyTable::from_function(
          n, [](element_type, element_type) { return element_type(0); });
    }

    CayleyTable taimanov(std::size_t n) {
      return CayleyTable::from_function(n, [](element_type x, element_type y) {
        return (x != y && x > 1 && y > 1) ? element_type(1) : element_type(0);
      });
    }

    CayleyTable antichain_with_zero(std::size_t n) {
      return CayleyTable::from_function(n, [](element_type x, element_type y) {
        return x == y ? x : element_type(0);
      });
    }

    CayleyTable left_zero(std::size_t n) {
      return CayleyTable::from_function(
          n, [](element_type x, element_type) { return x; });
    }

    CayleyTable adjoin_zero(CayleyTable const& table) {
      auto const n = static_cast<element_type>(table.size());
      return CayleyTable::from_function(n + 1, [&](element_type x, element_type y) {
        return (x == n || y == n) ? n : table(x, y);
      });
    }

    CayleyTable adjoin_identity(CayleyTable const& table) {
      auto const n = static_cast<element_type>(table.size());
      return CayleyTable::from_function(n + 1, [&](element_type x, element_type y) {
        if (x == n) {
          return y;
        }
        if (y == n) {
          return x;
        }
        return table(x, y);
      });
    }
  }  // namespace tables

}  // namespace cclosed
