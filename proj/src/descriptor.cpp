#include "cclosed/descriptor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cclosed/error.hpp"
#include "cclosed/semigroup.hpp"

namespace cclosed {

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  Multiplicity::Multiplicity(std::uint64_t count) : _count(count) {
    if (count == 0) {
      throw ArgumentError("multiplicity must be positive");
    }
  }

  bool is_prime(std::uint64_t p) {
    if (p < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d <= p / d; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  GroupFactor GroupFactor::cyclic(std::uint64_t order, Multiplicity m) {
    return {Kind::cyclic, order, m};
  }
  GroupFactor GroupFactor::prufer(std::uint64_t prime, Multiplicity m) {
    return {Kind::prufer, prime, m};
  }
  GroupFactor GroupFactor::integers(Multiplicity m) {
    return {Kind::integers, 0, m};
  }
  GroupFactor GroupFactor::cyclic_tower(std::uint64_t prime, Multiplicity m) {
    return {Kind::cyclic_tower, prime, m};
  }

  Descriptor Descriptor::finite_table(CayleyTable table, std::string source) {
    auto const report = validate(table);
    if (!report.associative) {
      throw PreconditionError("table is not associative");
    }
    if (!report.commutative) {
      auto const& w = *report.commutativity_witness;
      throw PreconditionError("table is not commutative: "
                              + std::to_string(w[0]) + "*"
                              + std::to_string(w[1]) + " != "
                              + std::to_string(w[1]) + "*"
                              + std::to_string(w[0]));
    }
    return Descriptor(FiniteTableNode{std::move(table), std::move(source)});
  }

  Descriptor Descriptor::group(GroupSpec spec) {
    if (spec.factors.empty()) {
      throw ArgumentError("a group needs at least one factor");
    }
    for (auto const& f : spec.factors) {
      switch (f.kind) {
        case GroupFactor::Kind::cyclic:
          if (f.parameter == 0) {
            throw ArgumentError("cyclic order must be positive");
          }
          break;
        case GroupFactor::Kind::prufer:
        case GroupFactor::Kind::cyclic_tower:
          if (!is_prime(f.parameter)) {
            throw ArgumentError(std::to_string(f.parameter) + " is not prime");
          }
          break;
        case GroupFactor::Kind::integers:
          break;
      }
    }
    return Descriptor(std::move(spec));
  }

  Descriptor Descriptor::semilattice(SemilatticeSpec spec) {
    if (auto const* poset = std::get_if<FinitePoset>(&spec)) {
      auto const report = validate(poset->table);
      if (!report.associative || !report.commutative
          || idempotents(poset->table).count() != poset->table.size()) {
        throw PreconditionError(
            "poset table is not a semilattice (associative, commutative, "
            "idempotent)");
      }
    }
    return Descriptor(std::move(spec));
  }

  Descriptor Descriptor::product(Descriptor left, Descriptor right) {
    return Descriptor(
        ProductNode{std::make_shared<Descriptor const>(std::move(left)),
                    std::make_shared<Descriptor const>(std::move(right))});
  }

  Descriptor Descriptor::adjoin_zero(Descriptor inner) {
    return Descriptor(
        AdjoinZeroNode{std::make_shared<Descriptor const>(std::move(inner))});
  }

  Descriptor Descriptor::adjoin_identity(Descriptor inner) {
    return Descriptor(
        AdjoinIdentityNode{std::make_shared<Descriptor const>(std::move(inner))});
  }

  Descriptor Descriptor::taimanov() {
    return Descriptor(TaimanovNode{});
  }

  Descriptor Descriptor::null() {
    return Descriptor(NullNode{});
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string render_path(std::string const& path) {
      bool plain = !path.empty();
      for (char c : path) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '(' || c == ')'
            || c == '"' || c == '\\') {
          plain = false;
        }
      }
      if (plain) {
        return path;
      }
      std::string out = "\"";
      for (char c : path) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace

  std::string render(GroupFactor const& f) {
    std::ostringstream os;
    os << '(';
    switch (f.kind) {
      case GroupFactor::Kind::cyclic:
        os << "cyclic " << f.parameter;
        break;
      case GroupFactor::Kind::prufer:
        os << "prufer " << f.parameter;
        break;
      case GroupFactor::Kind::integers:
        os << "integers";
        break;
      case GroupFactor::Kind::cyclic_tower:
        os << "cyclic-tower " << f.parameter;
        break;
    }
    if (f.multiplicity.is_omega()) {
      os << " x omega";
    } else if (f.multiplicity.count() != 1) {
      os << " x " << f.multiplicity.count();
    }
    os << ')';
    return os.str();
  }

  std::string render(Descriptor const& d) {
    return std::visit(
        overloaded{
            [](FiniteTableNode const& n) {
              return "(table " + render_path(n.source) + ")";
            },
            [](GroupSpec const& g) {
              std::string out = "(group";
              for (auto const& f : g.factors) {
                out += " " + render(f);
              }
              return out + ")";
            },
            [](SemilatticeSpec const& s) {
              return std::visit(
                  overloaded{[](FinitePoset const& p) {
                               return "(semilattice (poset "
                                      + render_path(p.source) + "))";
                             },
                             [](OmegaChain const&) {
                               return std::string("(semilattice chain-omega)");
                             },
                             [](OmegaAntichainZero const&) {
                               return std::string(
                                   "(semilattice antichain-omega-zero)");
                             }},
                  s);
            },
            [](ProductNode const& p) {
              return "(product " + render(*p.left) + " " + render(*p.right)
                     + ")";
            },
            [](AdjoinZeroNode const& a) {
              return "(adjoin-zero " + render(*a.inner) + ")";
            },
            [](AdjoinIdentityNode const& a) {
              return "(adjoin-identity " + render(*a.inner) + ")";
            },
            [](TaimanovNode const&) { return std::string("(taimanov)"); },
            [](NullNode const&) { return std::string("(null)"); }},
        d.node());
  }

  ////////////////////////////////////////////////////////////////////////
  // Cardinality
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
      std::uint64_t out;
      if (__builtin_mul_overflow(a, b, &out)) {
        throw SizeLimitError("finite cardinality exceeds 2^64");
      }
      return out;
    }

    std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
      std::uint64_t out;
      if (__builtin_add_overflow(a, b, &out)) {
        throw SizeLimitError("finite cardinality exceeds 2^64");
      }
      return out;
    }

    Cardinality const infinite{std::nullopt};

    Cardinality group_cardinality(GroupSpec const& g) {
      std::uint64_t size = 1;
      for (auto const& f : g.factors) {
        if (f.kind != GroupFactor::Kind::cyclic) {
          return infinite;
        }
        if (f.parameter == 1) {
          continue;  // any sum of trivial groups is trivial
        }
        if (f.multiplicity.is_omega()) {
          return infinite;
        }
        for (std::uint64_t i = 0; i < f.multiplicity.count(); ++i) {
          size = checked_mul(size, f.parameter);
        }
      }
      return {size};
    }
  }  // namespace

  Cardinality cardinality(Descriptor const& d) {
    return std::visit(
        overloaded{
            [](FiniteTableNode const& n) -> Cardinality {
              return {n.table.size()};
            },
            [](GroupSpec const& g) { return group_cardinality(g); },
            [](SemilatticeSpec const& s) -> Cardinality {
              if (auto const* p = std::get_if<FinitePoset>(&s)) {
                return {p->table.size()};
              }
              return infinite;
            },
            [](ProductNode const& p) -> Cardinality {
              auto const l = cardinality(*p.left);
              auto const r = cardinality(*p.right);
              if (!l.is_finite() || !r.is_finite()) {
                return infinite;
              }
              return {checked_mul(*l.finite, *r.finite)};
            },
            [](AdjoinZeroNode const& a) -> Cardinality {
              auto const c = cardinality(*a.inner);
              return c.is_finite() ? Cardinality{checked_add(*c.finite, 1)}
                                   : infinite;
            },
            [](AdjoinIdentityNode const& a) -> Cardinality {
              auto const c = cardinality(*a.inner);
              return c.is_finite() ? Cardinality{checked_add(*c.finite, 1)}
                                   : infinite;
            },
            [](TaimanovNode const&) { return infinite; },
            [](NullNode const&) { return infinite; }},
        d.node());
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicate evaluation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Predicate yes(std::string why) {
      return {true, std::move(why)};
    }
    Predicate no(std::string why) {
      return {false, std::move(why)};
    }

    // Both sides must hold; the witness of the first failing side wins.
    Predicate both(Predicate const& l, Predicate const& r, std::string const& why) {
      if (!l.value) {
        return l;
      }
      if (!r.value) {
        return r;
      }
      return yes(why);
    }

    PredicateProfile evaluate_finite(CayleyTable const& t) {
      PredicateProfile p;
      p.cardinality = {t.size()};
      auto const chain = max_chain_length(t);
      p.periodic       = yes("finite");
      p.chain_finite   = yes("finite; longest chain has "
                           + std::to_string(chain.length)
                           + (chain.length == 1 ? " element" : " elements"));
      p.exponent          = subgroup_exponent(t);
      p.subgroups_bounded = yes("finite; subgroup exponent "
                                + std::to_string(*p.exponent));
      p.clifford          = clifford_part(t).count() == t.size();
      p.almost_clifford   = yes("finite");
      p.has_singleton_square = no("finite");
      return p;
    }

    PredicateProfile evaluate_group(GroupSpec const& g) {
      PredicateProfile p;
      p.cardinality = group_cardinality(g);
      p.periodic    = yes("every factor is torsion");
      for (auto const& f : g.factors) {
        if (f.kind == GroupFactor::Kind::integers) {
          p.periodic = no("factor " + render(f)
                          + " has an element of infinite order");
          break;
        }
      }
      p.chain_finite = yes("a group has a single idempotent");

      std::uint64_t exponent = 1;
      p.subgroups_bounded    = yes("");
      for (auto const& f : g.factors) {
        if (f.kind != GroupFactor::Kind::cyclic) {
          p.subgroups_bounded
              = no("factor " + render(f) + " has elements of unbounded order");
          break;
        }
        exponent = std::lcm(exponent, f.parameter);
      }
      if (p.subgroups_bounded.value) {
        p.exponent                  = exponent;
        p.subgroups_bounded.witness = "exponent " + std::to_string(exponent);
      }
      p.clifford             = true;
      p.almost_clifford      = yes("groups are Clifford");
      p.has_singleton_square = no("groups are cancellative");
      return p;
    }

    PredicateProfile evaluate_semilattice(SemilatticeSpec const& s) {
      PredicateProfile p;
      p.periodic             = yes("every element is idempotent");
      p.subgroups_bounded    = yes("all subgroups are trivial");
      p.exponent             = 1;
      p.clifford             = true;
      p.almost_clifford      = yes("semilattices are Clifford");
      p.has_singleton_square = no("aa = a puts every a in A into AA");
      std::visit(overloaded{[&](FinitePoset const& poset) {
                              p.cardinality  = {poset.table.size()};
                              p.chain_finite = yes("finite");
                            },
                            [&](OmegaChain const&) {
                              p.cardinality = infinite;
                              p.chain_finite
                                  = no("(semilattice chain-omega) is itself an "
                                       "infinite chain");
                            },
                            [&](OmegaAntichainZero const&) {
                              p.cardinality = infinite;
                              p.chain_finite
                                  = yes("chains have at most 2 elements");
                            }},
                 s);
      return p;
    }

    PredicateProfile evaluate_taimanov() {
      PredicateProfile p;
      p.cardinality       = infinite;
      p.periodic          = yes("xx = 0 for every x");
      p.chain_finite      = yes("0 is the only idempotent");
      p.subgroups_bounded = yes("all subgroups are trivial");
      p.exponent          = 1;
      p.clifford          = false;
      p.almost_clifford   = no("(taimanov): X\\H(X) = X\\{0} is infinite");
      p.has_singleton_square
          = no("(taimanov): for infinite A, AA contains xx = 0 and xy = 1 "
               "for distinct x, y outside {0, 1}");
      return p;
    }

    PredicateProfile evaluate_null() {
      PredicateProfile p;
      p.cardinality       = infinite;
      p.periodic          = yes("xx = 0 for every x");
      p.chain_finite      = yes("0 is the only idempotent");
      p.subgroups_bounded = yes("all subgroups are trivial");
      p.exponent          = 1;
      p.clifford          = false;
      p.almost_clifford   = no("(null): X\\H(X) = X\\{0} is infinite");
      p.has_singleton_square
          = yes("(null): A = the whole carrier has AA = {0}");
      return p;
    }

    PredicateProfile evaluate_product(PredicateProfile const& l,
                                      PredicateProfile const& r) {
      PredicateProfile p;
      if (l.cardinality.is_finite() && r.cardinality.is_finite()) {
        p.cardinality = {checked_mul(*l.cardinality.finite, *r.cardinality.finite)};
      } else {
        p.cardinality = infinite;
      }
      p.periodic = both(l.periodic, r.periodic, "both factors are periodic");
      p.chain_finite
          = both(l.chain_finite, r.chain_finite, "both factors are chain-finite");
      p.subgroups_bounded = both(l.subgroups_bounded,
                                 r.subgroups_bounded,
                                 "subgroups of both factors are bounded");
      if (p.subgroups_bounded.value) {
        p.exponent = std::lcm(*l.exponent, *r.exponent);
        p.subgroups_bounded.witness += "; exponent " + std::to_string(*p.exponent);
      }
      p.clifford = l.clifford && r.clifford;

      // (X x Y) \ H = (X \ H(X)) x Y  union  X x (Y \ H(Y))
      auto side = [](PredicateProfile const& self,
                     PredicateProfile const& other,
                     char const*             name) -> Predicate {
        if (self.clifford) {
          return yes("");
        }
        if (!self.almost_clifford.value) {
          return self.almost_clifford;
        }
        if (!other.cardinality.is_finite()) {
          return no(std::string("the non-Clifford part of the ") + name
                    + " factor times the infinite other factor is infinite");
        }
        return yes("");
      };
      p.almost_clifford = both(side(l, r, "left"),
                               side(r, l, "right"),
                               p.clifford ? "both factors are Clifford"
                                          : "the non-Clifford part is finite");

      if (l.has_singleton_square.value) {
        p.has_singleton_square = l.has_singleton_square;
      } else if (r.has_singleton_square.value) {
        p.has_singleton_square = r.has_singleton_square;
      } else {
        p.has_singleton_square
            = no("an infinite A has an infinite projection, and neither "
                 "factor has an infinite set with singleton square");
      }
      return p;
    }

    PredicateProfile evaluate_adjoin(PredicateProfile p) {
      if (p.cardinality.is_finite()) {
        p.cardinality = {checked_add(*p.cardinality.finite, 1)};
      }
      return p;
    }
  }  // namespace

  PredicateProfile evaluate(Descriptor const& d) {
    return std::visit(
        overloaded{
            [](FiniteTableNode const& n) { return evaluate_finite(n.table); },
            [](GroupSpec const& g) { return evaluate_group(g); },
            [](SemilatticeSpec const& s) { return evaluate_semilattice(s); },
            [](ProductNode const& p) {
              return evaluate_product(evaluate(*p.left), evaluate(*p.right));
            },
            [](AdjoinZeroNode const& a) {
              return evaluate_adjoin(evaluate(*a.inner));
            },
            [](AdjoinIdentityNode const& a) {
              return evaluate_adjoin(evaluate(*a.inner));
            },
            [](TaimanovNode const&) { return evaluate_taimanov(); },
            [](NullNode const&) { return evaluate_null(); }},
        d.node());
  }

  ////////////////////////////////////////////////////////////////////////
  // Truncation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Largest subsemigroup reachable by adding generators in increasing order
    // while the closure stays within the budget.
    CayleyTable greedy_subsemigroup(CayleyTable const& t, std::size_t budget) {
      if (t.size() <= budget) {
        return t;
      }
      Subset chosen(t.size());
      for (element_type x = 0; x < t.size(); ++x) {
        if (chosen.contains(x)) {
          continue;
        }
        Subset                    closure = chosen;
        std::vector<element_type> stack{x};
        closure.insert(x);
        while (!stack.empty() && closure.count() <= budget) {
          auto const a = stack.back();
          stack.pop_back();
          for (auto b : closure.members()) {
            for (auto ab : {t(a, b), t(b, a)}) {
              if (!closure.contains(ab)) {
                closure.insert(ab);
                stack.push_back(ab);
              }
            }
          }
        }
        if (closure.count() <= budget) {
          chosen = std::move(closure);
        }
      }
      auto const members = chosen.members();
      return t.restrict_to(members);
    }

    std::uint64_t largest_divisor_at_most(std::uint64_t n, std::uint64_t cap) {
      for (std::uint64_t d = std::min(n, cap); d > 1; --d) {
        if (n % d == 0) {
          return d;
        }
      }
      return 1;
    }

    std::uint64_t largest_power_at_most(std::uint64_t p, std::uint64_t cap) {
      std::uint64_t q = 1;
      while (q <= cap / p) {
        q *= p;
      }
      return q;
    }

    CayleyTable truncate_group(GroupSpec const& g, std::size_t budget) {
      std::vector<std::uint64_t> orders;
      std::uint64_t              size = 1;
      auto room = [&] { return budget / size; };
      auto add  = [&](std::uint64_t order) {
        if (order > 1) {
          orders.push_back(order);
          size *= order;
        }
      };
      for (auto const& f : g.factors) {
        bool const          omega  = f.multiplicity.is_omega();
        std::uint64_t const copies = omega ? 0 : f.multiplicity.count();
        for (std::uint64_t copy = 0; omega || copy < copies; ++copy) {
          std::size_t const before = orders.size();
          switch (f.kind) {
            case GroupFactor::Kind::cyclic:
              add(largest_divisor_at_most(f.parameter, room()));
              break;
            case GroupFactor::Kind::prufer:
              add(largest_power_at_most(f.parameter, room()));
              break;
            case GroupFactor::Kind::cyclic_tower:
              // Z_p + Z_p^2 + ...: take whole summands while they fit
              for (std::uint64_t q = f.parameter; q <= room(); q *= f.parameter) {
                add(q);
              }
              break;
            case GroupFactor::Kind::integers:
              break;  // the only finite subgroup of Z is trivial
          }
          if (orders.size() == before) {
            break;  // further copies cannot fit either
          }
        }
      }
      CayleyTable table = tables::cyclic_group(1);
      for (auto order : orders) {
        table = direct_product(table, tables::cyclic_group(order));
      }
      return table;
    }

    std::size_t isqrt(std::size_t n) {
      std::size_t r = 0;
      while ((r + 1) * (r + 1) <= n) {
        ++r;
      }
      return r;
    }
  }  // namespace

  CayleyTable truncate(Descriptor const& d, std::size_t budget) {
    if (budget == 0) {
      throw ArgumentError("size budget must be at least 1");
    }
    return std::visit(
        overloaded{
            [&](FiniteTableNode const& n) {
              return greedy_subsemigroup(n.table, budget);
            },
            [&](GroupSpec const& g) { return truncate_group(g, budget); },
            [&](SemilatticeSpec const& s) {
              return std::visit(
                  overloaded{[&](FinitePoset const& p) {
                               return greedy_subsemigroup(p.table, budget);
                             },
                             [&](OmegaChain const&) {
                               return tables::chain(budget);
                             },
                             [&](OmegaAntichainZero const&) {
                               return tables::antichain_with_zero(budget);
                             }},
                  s);
            },
            [&](ProductNode const& p) {
              auto const right_share = std::max<std::size_t>(1, isqrt(budget));
              auto const left        = truncate(*p.left, budget / right_share);
              auto const right       = truncate(*p.right, budget / left.size());
              return direct_product(left, right);
            },
            [&](AdjoinZeroNode const& a) {
              if (budget == 1) {
                return tables::null(1);
              }
              return tables::adjoin_zero(truncate(*a.inner, budget - 1));
            },
            [&](AdjoinIdentityNode const& a) {
              if (budget == 1) {
                return tables::null(1);
              }
              return tables::adjoin_identity(truncate(*a.inner, budget - 1));
            },
            [&](TaimanovNode const&) { return tables::taimanov(budget); },
            [&](NullNode const&) { return tables::null(budget); }},
        d.node());
  }

}  // namespace cclosed
