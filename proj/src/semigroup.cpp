#include "cclosed/semigroup.hpp"

#include <numeric>
#include <string>

#include "cclosed/error.hpp"

namespace cclosed {

  ValidationReport validate(CayleyTable const& t) {
    ValidationReport report{true, true, std::nullopt, std::nullopt};
    auto const       n = static_cast<element_type>(t.size());
    for (element_type x = 0; x < n && report.associative; ++x) {
      for (element_type y = 0; y < n && report.associative; ++y) {
        auto const xy = t(x, y);
        for (element_type z = 0; z < n; ++z) {
          if (t(xy, z) != t(x, t(y, z))) {
            report.associative           = false;
            report.associativity_witness = {x, y, z};
            break;
          }
        }
      }
    }
    for (element_type x = 0; x < n && report.commutative; ++x) {
      for (element_type y = x + 1; y < n; ++y) {
        if (t(x, y) != t(y, x)) {
          report.commutative           = false;
          report.commutativity_witness = {x, y};
          break;
        }
      }
    }
    return report;
  }

  bool is_idempotent(CayleyTable const& t, element_type x) {
    return t(x, x) == x;
  }

  Subset idempotents(CayleyTable const& t) {
    Subset out(t.size());
    for (element_type x = 0; x < t.size(); ++x) {
      if (is_idempotent(t, x)) {
        out.insert(x);
      }
    }
    return out;
  }

  namespace {
    void require_idempotent(CayleyTable const& t, element_type e) {
      if (e >= t.size()) {
        throw ArgumentError("element " + std::to_string(e) + " out of range");
      }
      if (!is_idempotent(t, e)) {
        throw PreconditionError("element " + std::to_string(e)
                                + " is not idempotent");
      }
    }

    void require_element(CayleyTable const& t, element_type x) {
      if (x >= t.size()) {
        throw ArgumentError("element " + std::to_string(x) + " out of range");
      }
    }
  }  // namespace

  bool natural_le(CayleyTable const& t, element_type e, element_type f) {
    require_idempotent(t, e);
    require_idempotent(t, f);
    return t(e, f) == e;
  }

  ChainResult max_chain_length(CayleyTable const& t) {
    auto in_pair = [](element_type v, element_type x, element_type y) {
      return v == x || v == y;
    };
    auto chain = detail::max_clique(
        idempotents(t).members(), [&](element_type x, element_type y) {
          return in_pair(t(x, y), x, y) && in_pair(t(y, x), x, y);
        });
    return {chain.size(), Subset::of(t.size(), chain)};
  }

  Subset center(CayleyTable const& t) {
    Subset out(t.size());
    for (element_type z = 0; z < t.size(); ++z) {
      bool central = true;
      for (element_type x = 0; x < t.size() && central; ++x) {
        central = t(x, z) == t(z, x);
      }
      if (central) {
        out.insert(z);
      }
    }
    return out;
  }

  Subset principal_right_ideal(CayleyTable const& t, element_type a) {
    require_element(t, a);
    Subset out(t.size());
    out.insert(a);
    for (auto y : t.row(a)) {
      out.insert(y);
    }
    return out;
  }

  Subset principal_left_ideal(CayleyTable const& t, element_type a) {
    require_element(t, a);
    Subset out(t.size());
    out.insert(a);
    for (element_type x = 0; x < t.size(); ++x) {
      out.insert(t(x, a));
    }
    return out;
  }

  Subset h_class(CayleyTable const& t, element_type a) {
    auto const right = principal_right_ideal(t, a);
    auto const left  = principal_left_ideal(t, a);
    Subset     out(t.size());
    for (element_type x = 0; x < t.size(); ++x) {
      // x in aX^1 and a in xX^1 is equivalent to xX^1 = aX^1
      if (right.contains(x) && left.contains(x)
          && principal_right_ideal(t, x).contains(a)
          && principal_left_ideal(t, x).contains(a)) {
        out.insert(x);
      }
    }
    return out;
  }

  Subset clifford_part(CayleyTable const& t) {
    Subset out(t.size());
    for (auto e : idempotents(t).members()) {
      for (auto x : h_class(t, e).members()) {
        out.insert(x);
      }
    }
    return out;
  }

  MonogenicData monogenic_data(CayleyTable const& t, element_type x) {
    require_element(t, x);
    // first_seen[v] = k such that x^k = v, 0 if not seen yet
    std::vector<std::size_t> first_seen(t.size(), 0);
    element_type             current = x;
    std::size_t              k       = 1;
    while (first_seen[current] == 0) {
      first_seen[current] = k;
      current             = t(current, x);
      ++k;
    }
    std::size_t const index  = first_seen[current];
    std::size_t const period = k - index;
    // the idempotent is x^m for the least multiple m of the period with
    // m >= index
    std::size_t const m = ((index + period - 1) / period) * period;
    return {index, period, t.power(x, m)};
  }

  std::vector<element_type> pi_map(CayleyTable const& t) {
    auto const z = center(t);
    for (auto e : idempotents(t).members()) {
      if (!z.contains(e)) {
        throw PreconditionError("idempotent " + std::to_string(e)
                                + " is not central");
      }
    }
    std::vector<element_type> out(t.size());
    for (element_type x = 0; x < t.size(); ++x) {
      out[x] = monogenic_data(t, x).pi;
    }
    return out;
  }

  Subset root_inf(CayleyTable const& t, Subset const& a) {
    Subset out(t.size());
    for (element_type x = 0; x < t.size(); ++x) {
      auto const   data  = monogenic_data(t, x);
      element_type power = x;
      for (std::size_t k = 1; k < data.index + data.period; ++k) {
        if (a.contains(power)) {
          out.insert(x);
          break;
        }
        power = t(power, x);
      }
    }
    return out;
  }

  std::vector<Subset>
  z_sets(CayleyTable const& t, element_type e, std::size_t n_max) {
    require_idempotent(t, e);
    if (n_max < 1) {
      throw ArgumentError("n_max must be at least 1");
    }
    auto const          h = h_class(t, e);
    auto const          z = center(t).members();
    std::vector<Subset> out(n_max, Subset(t.size()));
    for (auto x : z) {
      element_type power = x;
      for (std::size_t k = 1; k <= n_max; ++k) {
        if (h.contains(power)) {
          out[k - 1].insert(x);
        }
        power = t(power, x);
      }
    }
    return out;
  }

  std::size_t group_exponent(CayleyTable const& t, element_type e) {
    require_idempotent(t, e);
    std::size_t exponent = 1;
    for (auto x : h_class(t, e).members()) {
      exponent = std::lcm(exponent, monogenic_data(t, x).period);
    }
    return exponent;
  }

  std::size_t subgroup_exponent(CayleyTable const& t) {
    std::size_t exponent = 1;
    for (auto e : idempotents(t).members()) {
      exponent = std::lcm(exponent, group_exponent(t, e));
    }
    return exponent;
  }

}  // namespace cclosed
