#include "cclosed/power.hpp"

#include <bit>
#include <string>

#include "cclosed/error.hpp"

namespace cclosed {

  namespace {
    void check_size(CayleyTable const& t) {
      if (t.size() > power_semigroup_max_base) {
        throw SizeLimitError("power semigroup of a table of order "
                             + std::to_string(t.size())
                             + " exceeds the limit of "
                             + std::to_string(power_semigroup_max_base));
      }
    }
  }  // namespace

  subset_mask to_mask(Subset const& s) {
    if (s.universe() > 32) {
      throw SizeLimitError("subset masks hold at most 32 elements");
    }
    subset_mask mask = 0;
    for (auto x : s.members()) {
      mask |= subset_mask(1) << x;
    }
    return mask;
  }

  Subset from_mask(std::size_t n, subset_mask mask) {
    Subset s(n);
    for (element_type x = 0; x < n; ++x) {
      if (mask & (subset_mask(1) << x)) {
        s.insert(x);
      }
    }
    return s;
  }

  Subset PowerSemigroup::subset(element_type index) const {
    return from_mask(_base.size(), mask_of(index));
  }

  Subset subset_product(CayleyTable const& t, Subset const& u, Subset const& v) {
    if (u.empty() || v.empty()) {
      throw ArgumentError("subset_product needs nonempty operands");
    }
    return product(t, u, v);
  }

  std::vector<Subset> basic_open(CayleyTable const& t, Subset const& u) {
    if (u.empty()) {
      throw ArgumentError("basic_open needs a nonempty subset");
    }
    check_size(t);
    auto const          mask = to_mask(u);
    std::vector<Subset> out;
    // all nonempty submasks of mask, in increasing order
    for (subset_mask b = 1; b <= mask; ++b) {
      if ((b & ~mask) == 0) {
        out.push_back(from_mask(t.size(), b));
      }
    }
    return out;
  }

  namespace kernels {

    std::vector<subset_mask> power_table_serial(CayleyTable const& t) {
      check_size(t);
      auto const               n     = t.size();
      std::size_t const        count = (std::size_t(1) << n) - 1;
      std::vector<subset_mask> out(count * count);
      for (subset_mask u = 1; u <= count; ++u) {
        for (subset_mask v = 1; v <= count; ++v) {
          subset_mask uv = 0;
          for (element_type x = 0; x < n; ++x) {
            if (!(u & (subset_mask(1) << x))) {
              continue;
            }
            for (element_type y = 0; y < n; ++y) {
              if (v & (subset_mask(1) << y)) {
                uv |= subset_mask(1) << t(x, y);
              }
            }
          }
          out[(u - 1) * count + (v - 1)] = uv;
        }
      }
      return out;
    }

    std::vector<subset_mask> power_table_parallel(CayleyTable const& t) {
      check_size(t);
      auto const        n     = t.size();
      std::size_t const count = (std::size_t(1) << n) - 1;

      // left[x][V] = xV as a mask, for every mask V including 0
      std::vector<subset_mask> left(n * (count + 1), 0);
      for (element_type x = 0; x < n; ++x) {
        subset_mask* row = left.data() + x * (count + 1);
        for (std::size_t v = 1; v <= count; ++v) {
          auto const low = static_cast<element_type>(std::countr_zero(v));
          row[v]         = row[v & (v - 1)] | (subset_mask(1) << t(x, low));
        }
      }

      std::vector<subset_mask> out(count * count);
      auto const columns = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
      for (std::int64_t col = 0; col < columns; ++col) {
        auto const v = static_cast<std::size_t>(col) + 1;
        for (std::size_t u = 1; u <= count; ++u) {
          auto const low  = static_cast<std::size_t>(std::countr_zero(u));
          auto const rest = u & (u - 1);
          subset_mask uv  = left[low * (count + 1) + v];
          if (rest != 0) {
            uv |= out[(rest - 1) * count + (v - 1)];
          }
          out[(u - 1) * count + (v - 1)] = uv;
        }
      }
      return out;
    }

  }  // namespace kernels

  PowerSemigroup power_semigroup(CayleyTable const& t) {
    auto const                masks = kernels::power_table_parallel(t);
    std::vector<element_type> op(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
      op[i] = PowerSemigroup::index_of(masks[i]);
    }
    auto const count = (std::size_t(1) << t.size()) - 1;
    return PowerSemigroup(t, CayleyTable(count, std::move(op)));
  }

}  // namespace cclosed
