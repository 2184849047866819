#include "cclosed/lemma_suite.hpp"

#include <exception>
#include <map>
#include <sstream>

#include "cclosed/error.hpp"
#include "cclosed/quotients.hpp"
#include "cclosed/semigroup.hpp"

namespace cclosed {

  bool SuiteReport::all_passed() const {
    for (auto const& p : properties) {
      if (!p.passed) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::string> SuiteReport::failures() const {
    std::vector<std::string> out;
    for (auto const& p : properties) {
      if (!p.passed) {
        out.push_back(p.name);
      }
    }
    return out;
  }

  namespace {
    // Records the first counterexample of one property.
    class Check {
     public:
      explicit Check(std::string name) : _result{std::move(name), true, {}} {}

      template <typename... Args>
      void require(bool condition, Args const&... context) {
        if (condition || !_result.passed) {
          return;
        }
        std::ostringstream os;
        ((os << context), ...);
        _result.passed         = false;
        _result.counterexample = os.str();
      }

      bool failed() const {
        return !_result.passed;
      }

      PropertyResult result() const {
        return _result;
      }

     private:
      PropertyResult _result;
    };

    Subset image(std::vector<element_type> const& f,
                 Subset const&                    s,
                 std::size_t                      universe) {
      Subset out(universe);
      for (auto x : s.members()) {
        out.insert(f[x]);
      }
      return out;
    }

    // Everything the properties share, computed once.
    struct Facts {
      explicit Facts(CayleyTable const& t)
          : table(t),
            n(t.size()),
            e(idempotents(t).members()),
            z(center(t)),
            h(t.size()),
            pi(pi_map(t)),
            clifford(clifford_part(t)) {
        for (auto f : e) {
          h[f] = h_class(t, f);
        }
      }

      CayleyTable const&        table;
      std::size_t               n;
      std::vector<element_type> e;
      Subset                    z;
      std::vector<Subset>       h;  // h[f] for idempotent f
      std::vector<element_type> pi;
      Subset                    clifford;
    };

    PropertyResult root_absorbs_h_class(Facts const& f) {
      Check c("root-absorbs-h-class");
      auto const& t = f.table;
      for (auto e : f.e) {
        auto const root = root_inf(t, f.h[e]);
        for (auto x : root.members()) {
          for (auto y : f.h[e].members()) {
            c.require(f.h[e].contains(t(x, y)) && f.h[e].contains(t(y, x)),
                      "e=", e, " x=", x, " y=", y);
          }
        }
      }
      return c.result();
    }

    PropertyResult h_class_is_group(Facts const& f) {
      Check c("h-class-is-group");
      auto const& t = f.table;
      for (auto e : f.e) {
        auto const& h = f.h[e];
        c.require(h.contains(e), "e=", e, " not in its H-class");
        for (auto x : h.members()) {
          c.require(t(e, x) == x && t(x, e) == x, "e=", e, " x=", x,
                    ": e is not an identity");
          bool has_inverse = false;
          for (auto y : h.members()) {
            c.require(h.contains(t(x, y)), "e=", e, " x=", x, " y=", y,
                      ": product leaves H_e");
            has_inverse = has_inverse || (t(x, y) == e && t(y, x) == e);
          }
          c.require(has_inverse, "e=", e, " x=", x, ": no inverse");
        }
      }
      return c.result();
    }

    PropertyResult pi_central_factor(Facts const& f) {
      Check c("pi-central-factor");
      auto const& t = f.table;
      for (element_type x = 0; x < f.n; ++x) {
        for (auto y : f.z.members()) {
          c.require(f.pi[t(x, y)] == t(f.pi[x], f.pi[y]), "x=", x, " y=", y);
        }
      }
      return c.result();
    }

    PropertyResult h_class_product(Facts const& f) {
      Check c("h-class-product");
      auto const& t = f.table;
      for (auto x : f.e) {
        for (auto y : f.e) {
          auto const& target = f.h[t(x, y)];
          for (auto a : f.h[x].members()) {
            for (auto b : f.h[y].members()) {
              c.require(target.contains(t(a, b)), "e=", x, " f=", y, " a=", a,
                        " b=", b);
            }
          }
        }
      }
      return c.result();
    }

    PropertyResult pi_order(Facts const& f) {
      Check c("pi-order");
      auto const& t = f.table;
      for (element_type x = 0; x < f.n; ++x) {
        for (element_type y = 0; y < f.n; ++y) {
          auto const lhs = t(f.pi[x], f.pi[y]);
          c.require(natural_le(t, lhs, f.pi[t(x, y)]), "x=", x, " y=", y);
        }
      }
      return c.result();
    }

    PropertyResult pi_clifford_factor(Facts const& f) {
      Check c("pi-clifford-factor");
      auto const& t = f.table;
      for (element_type x = 0; x < f.n; ++x) {
        for (auto y : f.clifford.members()) {
          c.require(f.pi[t(x, y)] == t(f.pi[x], f.pi[y]), "x=", x, " y=", y);
        }
      }
      return c.result();
    }

    PropertyResult pi_symmetric(Facts const& f) {
      Check c("pi-symmetric");
      auto const& t = f.table;
      for (element_type x = 0; x < f.n; ++x) {
        for (element_type y = 0; y < f.n; ++y) {
          c.require(f.pi[t(x, y)] == f.pi[t(y, x)], "x=", x, " y=", y);
        }
      }
      return c.result();
    }

    PropertyResult pi_homomorphism(Facts const& f) {
      Check c("pi-homomorphism");
      auto const& t = f.table;
      for (element_type x = 0; x < f.n; ++x) {
        c.require(is_idempotent(t, f.pi[x]), "pi(", x, ") not idempotent");
        for (element_type y = 0; y < f.n; ++y) {
          c.require(f.pi[t(x, y)] == t(f.pi[x], f.pi[y]), "x=", x, " y=", y);
        }
      }
      return c.result();
    }

    PropertyResult clifford_part_closed(Facts const& f) {
      Check c("clifford-part-closed");
      for (auto x : f.clifford.members()) {
        for (auto y : f.clifford.members()) {
          c.require(f.clifford.contains(f.table(x, y)), "x=", x, " y=", y);
        }
      }
      return c.result();
    }

    PropertyResult z_sets_ascending(Facts const& f) {
      Check c("z-sets-ascending");
      for (auto e : f.e) {
        auto const sets = z_sets(f.table, e, 2 * f.n + 1);
        for (std::size_t k = 0; k + 1 < sets.size(); ++k) {
          c.require(sets[k].is_subset_of(sets[k + 1]), "e=", e, " k=", k + 1);
        }
      }
      return c.result();
    }

    PropertyResult subgroup_translation(Facts const& f) {
      Check c("subgroup-translation");
      auto const& t = f.table;
      for (auto e : f.e) {
        auto const members = f.h[e].members();
        if (members.size() > 12) {
          auto const s = f.h[e];
          c.require(product(t, s, s).count() >= s.count(), "e=", e, " A=H_e");
          continue;
        }
        std::uint32_t const limit = std::uint32_t(1) << members.size();
        for (std::uint32_t mask = 1; mask < limit; ++mask) {
          Subset a(f.n);
          for (std::size_t i = 0; i < members.size(); ++i) {
            if (mask & (std::uint32_t(1) << i)) {
              a.insert(members[i]);
            }
          }
          if (a.count() < 2) {
            continue;
          }
          c.require(product(t, a, a).count() >= a.count(), "e=", e,
                    " A=", a.to_string());
        }
      }
      return c.result();
    }

    void check_congruences(Facts const&                 f,
                           std::vector<PropertyResult>& out) {
      Check       idempotents_lift("quotient-idempotents");
      Check       h_class_lift("lift-h-class");
      auto const& t = f.table;
      if (f.n <= 6) {
        for (auto const& c : all_congruences(t)) {
          std::ostringstream label;
          label << "congruence " << c.class_count() << " classes";
          try {
            auto const q = quotient_by_congruence(t, c);
            Subset     e_image(q.table.size());
            for (auto e : f.e) {
              e_image.insert(q.projection[e]);
            }
            idempotents_lift.require(idempotents(q.table) == e_image, label.str());

            for (auto e : idempotents(q.table).members()) {
              auto const s = lift_idempotent(t, c, e);
              h_class_lift.require(
                  image(q.projection, h_class(t, s), q.table.size())
                      == h_class(q.table, e),
                  label.str(), " e=", e, " s=", s);
            }
          } catch (InternalError const& err) {
            idempotents_lift.require(false, label.str(), ": ", err.what());
          }
        }
      }
      out.push_back(idempotents_lift.result());
      out.push_back(h_class_lift.result());
    }
  }  // namespace

  SuiteReport lemma_suite(CayleyTable const& table) {
    if (!validate(table).commutative) {
      throw PreconditionError("lemma_suite requires a commutative table");
    }
    Facts const f(table);
    SuiteReport report;
    auto&       p = report.properties;
    p.push_back(root_absorbs_h_class(f));
    p.push_back(h_class_is_group(f));
    p.push_back(pi_central_factor(f));
    p.push_back(h_class_product(f));
    p.push_back(pi_order(f));
    p.push_back(pi_clifford_factor(f));
    p.push_back(pi_symmetric(f));
    p.push_back(pi_homomorphism(f));
    p.push_back(clifford_part_closed(f));
    p.push_back(z_sets_ascending(f));
    p.push_back(subgroup_translation(f));
    check_congruences(f, p);
    return report;
  }

  std::optional<Subset> singleton_square_scan(CayleyTable const& t,
                                              std::size_t        max_subset) {
    if (max_subset < 2) {
      return std::nullopt;
    }
    std::vector<element_type> best;
    for (element_type p = 0; p < t.size(); ++p) {
      std::vector<element_type> squares_to_p;
      for (element_type a = 0; a < t.size(); ++a) {
        if (t(a, a) == p) {
          squares_to_p.push_back(a);
        }
      }
      auto clique = detail::max_clique(
          squares_to_p,
          [&](element_type a, element_type b) {
            return t(a, b) == p && t(b, a) == p;
          },
          max_subset);
      if (clique.size() > best.size()
          || (clique.size() == best.size() && clique < best)) {
        best = std::move(clique);
      }
    }
    if (best.size() < 2) {
      return std::nullopt;
    }
    return Subset::of(t.size(), best);
  }

  namespace kernels {
    std::vector<SuiteReport>
    run_suite_serial(std::vector<CayleyTable> const& tables) {
      std::vector<SuiteReport> out;
      out.reserve(tables.size());
      for (auto const& t : tables) {
        out.push_back(lemma_suite(t));
      }
      return out;
    }

    std::vector<SuiteReport>
    run_suite_parallel(std::vector<CayleyTable> const& tables) {
      std::vector<SuiteReport>        out(tables.size());
      std::vector<std::exception_ptr> errors(tables.size());
      auto const count = static_cast<std::int64_t>(tables.size());
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < count; ++i) {
        try {
          out[i] = lemma_suite(tables[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      return out;
    }
  }  // namespace kernels

}  // namespace cclosed
