#include "cclosed/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>

#include "cclosed/error.hpp"

namespace cclosed {

  namespace {
    constexpr element_type undefined = ~element_type(0);

    // A partially filled commutative table. Cells of the upper triangle are
    // assigned in row-major order; each assignment also fills its mirror.
    class EnumerationCursor {
     public:
      explicit EnumerationCursor(std::size_t n) : _n(n), _op(n * n, undefined) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i; j < n; ++j) {
            _cells.push_back(i * n + j);
          }
        }
      }

      std::size_t order() const noexcept {
        return _n;
      }

      std::size_t depth() const noexcept {
        return _depth;
      }

      bool complete() const noexcept {
        return _depth == _cells.size();
      }

      void push(element_type value) {
        auto const cell = _cells[_depth++];
        auto const i = cell / _n, j = cell % _n;
        _op[i * _n + j] = value;
        _op[j * _n + i] = value;
      }

      void pop() {
        auto const cell = _cells[--_depth];
        auto const i = cell / _n, j = cell % _n;
        _op[i * _n + j] = undefined;
        _op[j * _n + i] = undefined;
      }

      // No fully determined triple violates associativity.
      bool consistent() const {
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            auto const xy = _op[x * _n + y];
            if (xy == undefined) {
              continue;
            }
            for (std::size_t z = 0; z < _n; ++z) {
              auto const yz = _op[y * _n + z];
              if (yz == undefined) {
                continue;
              }
              auto const l = _op[xy * _n + z];
              auto const r = _op[x * _n + yz];
              if (l != undefined && r != undefined && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      CayleyTable table() const {
        return CayleyTable(_n, _op);
      }

     private:
      std::size_t               _n;
      std::vector<element_type> _op;
      std::vector<std::size_t>  _cells;
      std::size_t               _depth = 0;
    };

    void complete_from(EnumerationCursor&        cursor,
                       UpTo                      mode,
                       std::vector<CayleyTable>& out) {
      if (cursor.complete()) {
        auto t = cursor.table();
        if (mode == UpTo::labelled || is_canonical(t)) {
          out.push_back(std::move(t));
        }
        return;
      }
      for (element_type v = 0; v < cursor.order(); ++v) {
        cursor.push(v);
        if (cursor.consistent()) {
          complete_from(cursor, mode, out);
        }
        cursor.pop();
      }
    }

    void check_order(std::size_t n) {
      if (n < 1 || n > max_enumeration_order) {
        throw ArgumentError("enumeration order must be between 1 and "
                            + std::to_string(max_enumeration_order));
      }
    }

    // Consistent assignments of the first `depth` cells, in lexicographic
    // order.
    std::vector<std::vector<element_type>> prefixes(std::size_t n, std::size_t depth) {
      std::vector<std::vector<element_type>> out;
      std::vector<element_type>              current;
      EnumerationCursor                      cursor(n);
      auto visit = [&](auto&& self) -> void {
        if (cursor.depth() == depth) {
          out.push_back(current);
          return;
        }
        for (element_type v = 0; v < n; ++v) {
          cursor.push(v);
          current.push_back(v);
          if (cursor.consistent()) {
            self(self);
          }
          current.pop_back();
          cursor.pop();
        }
      };
      visit(visit);
      return out;
    }
  }  // namespace

  CayleyTable canonical_form(CayleyTable const& t) {
    auto const                n = t.size();
    std::vector<element_type> perm(n);
    std::iota(perm.begin(), perm.end(), element_type(0));
    std::vector<element_type> best = t.entries();
    std::vector<element_type> relabelled(n * n);
    do {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          relabelled[perm[x] * n + perm[y]] = perm[t(x, y)];
        }
      }
      if (relabelled < best) {
        best = relabelled;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CayleyTable(n, std::move(best));
  }

  bool is_canonical(CayleyTable const& t) {
    return canonical_form(t) == t;
  }

  namespace kernels {

    std::vector<CayleyTable> enumerate_commutative_serial(std::size_t n, UpTo mode) {
      check_order(n);
      std::vector<CayleyTable> out;
      EnumerationCursor        cursor(n);
      complete_from(cursor, mode, out);
      return out;
    }

    std::vector<CayleyTable> enumerate_commutative_parallel(std::size_t n,
                                                            UpTo        mode) {
      check_order(n);
      // row 0 has n upper-triangle cells
      auto const work = prefixes(n, n);
      std::vector<std::vector<CayleyTable>> parts(work.size());
      auto const                            count = static_cast<std::int64_t>(work.size());
      std::vector<std::exception_ptr> errors(parts.size());
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t k = 0; k < count; ++k) {
        try {
          EnumerationCursor cursor(n);
          for (auto v : work[k]) {
            cursor.push(v);
          }
          complete_from(cursor, mode, parts[k]);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      std::vector<CayleyTable> out;
      for (auto& part : parts) {
        std::move(part.begin(), part.end(), std::back_inserter(out));
      }
      return out;
    }

  }  // namespace kernels

  std::vector<CayleyTable> enumerate_commutative(std::size_t n, UpTo mode) {
    return kernels::enumerate_commutative_parallel(n, mode);
  }

}  // namespace cclosed
