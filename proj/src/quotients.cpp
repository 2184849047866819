#include "cclosed/quotients.hpp"

#include <numeric>
#include <string>

#include "cclosed/error.hpp"
#include "cclosed/semigroup.hpp"

namespace cclosed {

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence::Congruence(std::size_t n) : _class_of(n), _count(n) {
    std::iota(_class_of.begin(), _class_of.end(), std::size_t(0));
  }

  Congruence Congruence::from_labels(std::vector<std::size_t> const& labels) {
    Congruence               c;
    std::vector<std::size_t> renumber;
    std::vector<bool>        seen;
    c._class_of.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto const l = labels[i];
      if (l >= seen.size()) {
        seen.resize(l + 1, false);
        renumber.resize(l + 1, 0);
      }
      if (!seen[l]) {
        seen[l]     = true;
        renumber[l] = c._count++;
      }
      c._class_of[i] = renumber[l];
    }
    return c;
  }

  Congruence Congruence::from_blocks(
      std::size_t                                   n,
      std::vector<std::vector<element_type>> const& blocks) {
    std::vector<std::size_t> labels(n, n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw ArgumentError("partition blocks must be nonempty");
      }
      for (auto x : blocks[b]) {
        if (x >= n) {
          throw ArgumentError("element " + std::to_string(x) + " out of range");
        }
        if (labels[x] != n) {
          throw ArgumentError("element " + std::to_string(x)
                              + " appears in two blocks");
        }
        labels[x] = b;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (labels[x] == n) {
        throw ArgumentError("element " + std::to_string(x)
                            + " is in no block");
      }
    }
    return from_labels(labels);
  }

  std::vector<std::vector<element_type>> Congruence::blocks() const {
    std::vector<std::vector<element_type>> out(_count);
    for (std::size_t x = 0; x < _class_of.size(); ++x) {
      out[_class_of[x]].push_back(static_cast<element_type>(x));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<element_type, element_type>>
  ideal_violation(CayleyTable const& t, Subset const& a) {
    for (auto x : a.members()) {
      for (element_type y = 0; y < t.size(); ++y) {
        if (!a.contains(t(x, y)) || !a.contains(t(y, x))) {
          return std::make_pair(x, y);
        }
      }
    }
    return std::nullopt;
  }

  bool is_ideal(CayleyTable const& t, Subset const& a) {
    return !ideal_violation(t, a).has_value();
  }

  Ideal generated_ideal(CayleyTable const& t, Subset const& a) {
    Subset                    ideal(t.size());
    std::vector<element_type> stack;
    auto                      add = [&](element_type x) {
      if (!ideal.contains(x)) {
        ideal.insert(x);
        stack.push_back(x);
      }
    };
    for (auto x : a.members()) {
      add(x);
    }
    while (!stack.empty()) {
      auto const x = stack.back();
      stack.pop_back();
      for (element_type y = 0; y < t.size(); ++y) {
        add(t(x, y));
        add(t(y, x));
      }
    }
    return {ideal};
  }

  Congruence rees_congruence(CayleyTable const& t, Subset const& ideal) {
    std::vector<std::size_t> labels(t.size());
    auto const               members = ideal.members();
    for (element_type x = 0; x < t.size(); ++x) {
      labels[x] = ideal.contains(x) ? members.front() : x;
    }
    return Congruence::from_labels(labels);
  }

  Quotient rees_quotient(CayleyTable const& t, Subset const& ideal) {
    if (ideal.universe() != t.size()) {
      throw ArgumentError("ideal has the wrong universe size");
    }
    if (auto v = ideal_violation(t, ideal)) {
      throw PreconditionError(
          "not an ideal: " + std::to_string(v->first) + "*"
          + std::to_string(v->second) + " or " + std::to_string(v->second)
          + "*" + std::to_string(v->first) + " leaves the set");
    }
    if (ideal.empty()) {
      std::vector<element_type> identity(t.size());
      std::iota(identity.begin(), identity.end(), element_type(0));
      return {t, identity};
    }
    std::vector<element_type> projection(t.size());
    element_type              next = 1;
    for (element_type x = 0; x < t.size(); ++x) {
      projection[x] = ideal.contains(x) ? 0 : next++;
    }
    std::vector<element_type> preimage(next, 0);
    for (element_type x = 0; x < t.size(); ++x) {
      if (projection[x] != 0) {
        preimage[projection[x]] = x;
      }
    }
    auto table = CayleyTable::from_function(
        next, [&](element_type x, element_type y) -> element_type {
          if (x == 0 || y == 0) {
            return 0;
          }
          return projection[t(preimage[x], preimage[y])];
        });
    return {std::move(table), std::move(projection)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return true;
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace

  Congruence congruence_closure(
      CayleyTable const&                                        t,
      std::vector<std::pair<element_type, element_type>> const& pairs) {
    auto const n = t.size();
    for (auto const& [x, y] : pairs) {
      if (x >= n || y >= n) {
        throw ArgumentError("pair (" + std::to_string(x) + ","
                            + std::to_string(y) + ") out of range");
      }
    }
    UnionFind uf(n);
    // Each merge pushes all one-sided translates of the merged pair; the
    // translates of every pair in the generated equivalence then follow by
    // transitivity.
    std::vector<std::pair<element_type, element_type>> work(pairs.rbegin(),
                                                            pairs.rend());
    while (!work.empty()) {
      auto const [x, y] = work.back();
      work.pop_back();
      if (!uf.unite(x, y)) {
        continue;
      }
      for (element_type a = 0; a < n; ++a) {
        work.emplace_back(t(a, x), t(a, y));
        work.emplace_back(t(x, a), t(y, a));
      }
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = uf.find(x);
    }
    return Congruence::from_labels(labels);
  }

  std::optional<CongruenceViolation>
  congruence_violation(CayleyTable const& t, Congruence const& c) {
    auto const n = static_cast<element_type>(t.size());
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = x + 1; y < n; ++y) {
        if (c.class_of(x) != c.class_of(y)) {
          continue;
        }
        for (element_type a = 0; a < n; ++a) {
          if (c.class_of(t(a, x)) != c.class_of(t(a, y))) {
            return CongruenceViolation{x, y, a, true};
          }
          if (c.class_of(t(x, a)) != c.class_of(t(y, a))) {
            return CongruenceViolation{x, y, a, false};
          }
        }
      }
    }
    return std::nullopt;
  }

  Quotient quotient_by_congruence(CayleyTable const& t, Congruence const& c) {
    if (c.universe() != t.size()) {
      throw ArgumentError("partition has the wrong universe size");
    }
    if (auto v = congruence_violation(t, c)) {
      auto const [x, y, a, left] = *v;
      auto const xs = std::to_string(x), ys = std::to_string(y),
                 as = std::to_string(a);
      throw PreconditionError(
          "not a congruence: " + xs + "~" + ys + " but "
          + (left ? as + "*" + xs + " !~ " + as + "*" + ys
                  : xs + "*" + as + " !~ " + ys + "*" + as));
    }
    auto const                blocks = c.blocks();
    std::vector<element_type> projection(t.size());
    for (element_type x = 0; x < t.size(); ++x) {
      projection[x] = static_cast<element_type>(c.class_of(x));
    }
    auto table = CayleyTable::from_function(
        blocks.size(), [&](element_type i, element_type j) {
          return projection[t(blocks[i].front(), blocks[j].front())];
        });

    // every class that is idempotent in the quotient contains an idempotent
    // of the (finite, hence periodic) source
    Subset image(blocks.size());
    for (auto e : idempotents(t).members()) {
      image.insert(projection[e]);
    }
    if (idempotents(table) != image) {
      throw InternalError("idempotents of the quotient are not the image of "
                          "the idempotents of the source");
    }
    return {std::move(table), std::move(projection)};
  }

  element_type lift_idempotent(CayleyTable const& t,
                               Congruence const&  c,
                               element_type       e_class) {
    if (!validate(t).commutative) {
      throw PreconditionError("lift_idempotent requires a commutative table");
    }
    if (c.universe() != t.size()) {
      throw ArgumentError("partition has the wrong universe size");
    }
    if (e_class >= c.class_count()) {
      throw ArgumentError("class " + std::to_string(e_class) + " out of range");
    }
    auto const quotient = quotient_by_congruence(t, c);
    if (!is_idempotent(quotient.table, e_class)) {
      throw PreconditionError("class " + std::to_string(e_class)
                              + " is not idempotent in the quotient");
    }
    std::vector<element_type> candidates;
    for (auto e : idempotents(t).members()) {
      if (c.class_of(e) == e_class) {
        candidates.push_back(e);
      }
    }
    for (auto s : candidates) {
      bool least = true;
      for (auto f : candidates) {
        least = least && t(s, f) == s;
      }
      if (least) {
        return s;
      }
    }
    throw InternalError("class " + std::to_string(e_class)
                        + " has no least idempotent in its preimage");
  }

  std::vector<Congruence> all_congruences(CayleyTable const& t) {
    auto const n = t.size();
    if (n > 6) {
      throw SizeLimitError("congruence enumeration is limited to order 6");
    }
    std::vector<Congruence>  out;
    std::vector<std::size_t> labels(n, 0);
    // restricted growth strings: labels[i] <= 1 + max(labels[0..i))
    auto visit = [&](auto&& self, std::size_t i, std::size_t max_label) -> void {
      if (i == n) {
        auto c = Congruence::from_labels(labels);
        if (!congruence_violation(t, c)) {
          out.push_back(std::move(c));
        }
        return;
      }
      for (std::size_t l = 0; l <= max_label + 1; ++l) {
        labels[i] = l;
        self(self, i + 1, std::max(max_label, l));
      }
    };
    if (n > 0) {
      labels[0] = 0;
      visit(visit, 1, 0);
    }
    return out;
  }

}  // namespace cclosed
