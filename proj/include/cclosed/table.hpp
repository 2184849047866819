#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cclosed {

  //! Elements of a finite semigroup are dense indices 0..n-1.
  using element_type = std::uint32_t;

  //! A membership mask over [0, n).
  class Subset {
   public:
    Subset() = default;
    explicit Subset(std::size_t n) : _bits(n, false) {}

    static Subset full(std::size_t n) {
      Subset s(n);
      s._bits.assign(n, true);
      return s;
    }

    //! Throws ArgumentError if some member is not below \p n.
    static Subset of(std::size_t n, std::initializer_list<element_type> xs);
    static Subset of(std::size_t n, std::span<element_type const> xs);

    std::size_t universe() const noexcept {
      return _bits.size();
    }

    bool contains(element_type x) const {
      return x < _bits.size() && _bits[x];
    }

    void insert(element_type x);
    void erase(element_type x);

    std::size_t count() const noexcept;
    bool empty() const noexcept {
      return count() == 0;
    }

    //! Members in increasing order.
    std::vector<element_type> members() const;

    bool is_subset_of(Subset const& other) const;

    //! "{0,2,3}"
    std::string to_string() const;

    bool operator==(Subset const&) const = default;

   private:
    std::vector<bool> _bits;
  };

  //! A finite magma given by its multiplication table; row index is the left
  //! operand. Every library operation other than validate() assumes the
  //! operation is associative.
  class CayleyTable {
   public:
    //! \p entries is the row-major n*n table. Throws MalformedTable naming
    //! the first bad cell when an entry is out of range.
    CayleyTable(std::size_t n, std::vector<element_type> entries);

    CayleyTable(std::initializer_list<std::initializer_list<element_type>>);

    static CayleyTable
    from_function(std::size_t                                       n,
                  std::function<element_type(element_type, element_type)> f);

    std::size_t size() const noexcept {
      return _n;
    }

    element_type operator()(element_type x, element_type y) const {
      return _op[static_cast<std::size_t>(x) * _n + y];
    }

    std::span<element_type const> row(element_type x) const {
      return {_op.data() + static_cast<std::size_t>(x) * _n, _n};
    }

    std::vector<element_type> const& entries() const noexcept {
      return _op;
    }

    //! x^k for k >= 1.
    element_type power(element_type x, std::size_t k) const;

    //! Restriction to \p elements, which must be closed under the operation.
    //! Element i of the result is elements[i]. Throws PreconditionError when
    //! the set is not closed.
    CayleyTable restrict_to(std::span<element_type const> elements) const;

    bool operator==(CayleyTable const&) const = default;
    auto operator<=>(CayleyTable const& that) const {
      return _op <=> that._op;
    }

   private:
    std::size_t               _n;
    std::vector<element_type> _op;
  };

  //! The elementwise product AB = {ab : a in A, b in B}.
  Subset product(CayleyTable const& table, Subset const& a, Subset const& b);

  //! Direct product; element (x, y) has index x * right.size() + y.
  CayleyTable direct_product(CayleyTable const& left, CayleyTable const& right);

  namespace tables {
    //! (i + j) mod n
    CayleyTable cyclic_group(std::size_t n);
    //! min on {0 < 1 < ... < n-1}
    CayleyTable chain(std::size_t n);
    //! every product is 0
    CayleyTable null(std::size_t n);
    //! xy = 1 when x != y and both lie outside {0, 1}, otherwise 0.
    CayleyTable taimanov(std::size_t n);
    //! 0 below pairwise incomparable 1..n-1
    CayleyTable antichain_with_zero(std::size_t n);
    //! xy = x
    CayleyTable left_zero(std::size_t n);
    //! Append a new element n that is a zero (absorbing).
    CayleyTable adjoin_zero(CayleyTable const& table);
    //! Append a new element n that is an identity.
    CayleyTable adjoin_identity(CayleyTable const& table);
  }  // namespace tables

}  // namespace cclosed
