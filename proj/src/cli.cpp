#include "cofinite/cli.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "cofinite/algebra.hpp"
#include "cofinite/congruence.hpp"
#include "cofinite/expr.hpp"
#include "cofinite/serialize.hpp"
#include "cofinite/topology.hpp"
#include "cofinite/witnesses.hpp"

namespace cofinite {

  namespace {

    struct Globals {
      std::string   flavor_name = "almon";
      bool          json_output = false;
      std::uint64_t seed        = 0;
      Int           samples     = 200;

      Flavor flavor() const {
        auto fl = parse_flavor(flavor_name);
        if (!fl) {
          throw Error(ErrorKind::BadArguments, "unknown flavor '" + flavor_name + "'");
        }
        return *fl;
      }
    };

    Element arg_element(std::string const& text) {
      return parse_element(text);
    }

    std::set<Int> arg_set(std::string const& text) {
      std::set<Int>     out;
      std::stringstream in(text);
      std::string       item;
      while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" ") == std::string::npos) {
          continue;
        }
        try {
          std::size_t used = 0;
          Int const   v    = std::stoll(item, &used);
          if (item.find_first_not_of(" ", used) != std::string::npos || v < 1) {
            throw std::invalid_argument(item);
          }
          out.insert(v);
        } catch (std::logic_error const&) {
          throw Error(ErrorKind::BadArguments,
                      "expected a comma-separated list of positive integers, got '"
                          + text + "'");
        }
      }
      return out;
    }

    CongruenceClass arg_congruence(std::string const& text) {
      if (text == "identity") {
        return CongruenceClass::identity();
      }
      if (text.rfind("group:", 0) == 0) {
        try {
          return CongruenceClass::group(std::stoll(text.substr(6)));
        } catch (std::logic_error const&) {
        }
      }
      if (!text.empty() && text.front() == '{') {
        return congruence_from_json(json::parse(text, nullptr, false));
      }
      throw Error(ErrorKind::BadArguments,
                  "congruence must be 'identity', 'group:<d>' or JSON");
    }

    std::string show(CongruenceClass const& c) {
      if (c.kind() == CongruenceClass::Kind::Identity) {
        return "identity";
      }
      return "group(" + std::to_string(*c.modulus()) + ")";
    }

    std::string show(bool b) {
      return b ? "true" : "false";
    }

    // Prints either the JSON document or the plain-text lines.
    struct Output {
      Globals const& globals;
      std::ostream&  out;

      void emit(json const& doc, std::string const& text) const {
        if (globals.json_output) {
          out << doc.dump() << '\n';
        } else if (!text.empty()) {
          out << text << '\n';
        }
      }
    };

    std::string lines(std::vector<Element> const& elements) {
      std::string text;
      for (auto const& e : elements) {
        if (!text.empty()) {
          text += '\n';
        }
        text += render(e);
      }
      return text;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Exact arithmetic in the monoid of cofinite almost monotone "
                 "partial bijections of the positive integers"};
    app.name(args.empty() ? "cofinite" : args[0]);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--flavor", g.flavor_name,
                   "Submonoid: cn, iso, iso1, mon or almon")
        ->capture_default_str();
    app.add_flag("--json", g.json_output, "Print one JSON document on stdout");
    app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--samples", g.samples, "Sample count for randomized checks")
        ->capture_default_str();

    Output const         o{g, out};
    std::function<int()> action;
    std::vector<std::string> pos;

    auto leaf = [&](CLI::App* parent, std::string const& name,
                    std::string const& help, std::size_t arity,
                    std::string const& arg_names) {
      CLI::App* sub = parent->add_subcommand(name, help);
      sub->fallthrough();
      sub->add_option("args", pos, arg_names)->expected(static_cast<int>(arity))->allow_extra_args(false)->required();
      return sub;
    };

    leaf(&app, "eval", "Evaluate an expression", 1, "expr")->callback([&] {
      action = [&] {
        Element e = arg_element(pos[0]);
        o.emit(json(e), render(e));
        return kSuccess;
      };
    });

    leaf(&app, "member", "Membership in --flavor", 1, "expr")->callback([&] {
      action = [&] {
        Element const e = arg_element(pos[0]);
        bool const    m = member(g.flavor(), e);
        o.emit({{"flavor", g.flavor_name}, {"member", m}}, show(m));
        return kSuccess;
      };
    });

    leaf(&app, "green", "Green's relations inside --flavor", 2, "x y")->callback([&] {
      action = [&] {
        auto const r = green(g.flavor(), arg_element(pos[0]), arg_element(pos[1]));
        std::string d = r.d_related ? show(*r.d_related) : "unknown";
        o.emit(json(r),
               "R=" + show(r.r_related) + " L=" + show(r.l_related)
                   + " H=" + show(r.h_related) + " D=" + d);
        return kSuccess;
      };
    });

    leaf(&app, "shift", "Shift index", 1, "expr")->callback([&] {
      action = [&] {
        Int const k = shift_index(arg_element(pos[0]));
        o.emit({{"shift_index", k}}, std::to_string(k));
        return kSuccess;
      };
    });

    CLI::App* cmg = app.add_subcommand("cmg", "Least group congruence");
    cmg->fallthrough();
    cmg->require_subcommand(1);
    leaf(cmg, "related", "Test relatedness", 2, "x y")->callback([&] {
      action = [&] {
        bool const r = cmg_related(arg_element(pos[0]), arg_element(pos[1]));
        o.emit({{"related", r}}, show(r));
        return kSuccess;
      };
    });
    leaf(cmg, "witness", "Equalizing ray idempotent", 2, "x y")->callback([&] {
      action = [&] {
        Element const e = cmg_witness(arg_element(pos[0]), arg_element(pos[1]));
        o.emit({{"witness", e}}, render(e));
        return kSuccess;
      };
    });

    CLI::App* cong = app.add_subcommand("congruence", "Finitely generated congruences");
    cong->fallthrough();
    cong->require_subcommand(1);
    {
      CLI::App* classify = cong->add_subcommand(
          "classify", "Classify the congruence generated by pairs x1 y1 x2 y2 ...");
      classify->fallthrough();
      classify->add_option("pairs", pos, "Generating pairs, flattened")->expected(-1);
      classify->callback([&] {
        action = [&] {
          if (pos.size() % 2 != 0) {
            throw Error(ErrorKind::BadArguments, "expected an even number of elements");
          }
          std::vector<ElementPair> pairs;
          for (std::size_t i = 0; i < pos.size(); i += 2) {
            pairs.emplace_back(arg_element(pos[i]), arg_element(pos[i + 1]));
          }
          auto const c = classify_congruence(g.flavor(), pairs);
          o.emit(json(c), show(c));
          return kSuccess;
        };
      });
    }
    leaf(cong, "related", "Relatedness under identity | group:<d>", 3, "class x y")
        ->callback([&] {
          action = [&] {
            bool const r = related_under(
                arg_congruence(pos[0]), arg_element(pos[1]), arg_element(pos[2]));
            o.emit({{"related", r}}, show(r));
            return kSuccess;
          };
        });

    leaf(&app, "reduce", "Conjugate two distinct idempotents onto rays", 2, "e i")
        ->callback([&] {
          action = [&] {
            auto const c = reduce_idempotent_pair(
                g.flavor(), arg_element(pos[0]), arg_element(pos[1]));
            o.emit(json(c),
                   "conjugator: " + render(c.conjugator)
                       + "\nfirst: " + render(c.output_first)
                       + "\nsecond: " + render(c.output_second));
            return kSuccess;
          };
        });

    leaf(&app, "simple-witness", "g, d in CN with g*x*d = id", 1, "expr")->callback([&] {
      action = [&] {
        auto const w = simplicity_witness(g.flavor(), arg_element(pos[0]));
        o.emit({{"left", w.left}, {"right", w.right}},
               "left: " + render(w.left) + "\nright: " + render(w.right));
        return kSuccess;
      };
    });

    CLI::App* solve = app.add_subcommand("solve", "One-sided equations");
    solve->fallthrough();
    solve->require_subcommand(1);
    leaf(solve, "left", "All x with a*x = b", 2, "a b")->callback([&] {
      action = [&] {
        auto const s = solve_left(g.flavor(), arg_element(pos[0]), arg_element(pos[1]));
        o.emit(json(s), lines(s.solutions));
        return kSuccess;
      };
    });
    leaf(solve, "right", "All x with x*a = b", 2, "a b")->callback([&] {
      action = [&] {
        auto const s = solve_right(g.flavor(), arg_element(pos[0]), arg_element(pos[1]));
        o.emit(json(s), lines(s.solutions));
        return kSuccess;
      };
    });

    std::string dom_text, ran_text;
    Int         bound = 0;
    {
      CLI::App* hclass = app.add_subcommand("hclass", "Bounded H-class enumeration");
      hclass->fallthrough();
      hclass->add_option("--dom", dom_text, "Missing domain points, comma-separated");
      hclass->add_option("--ran", ran_text, "Missing range points, comma-separated");
      hclass->add_option("--bound", bound, "Largest tail_start")->required();
      hclass->callback([&] {
        action = [&] {
          auto const members
              = h_class_members(g.flavor(), arg_set(dom_text), arg_set(ran_text), bound);
          o.emit({{"members", members}}, lines(members));
          return kSuccess;
        };
      });
    }

    CLI::App* nbhd = app.add_subcommand("nbhd", "Basic neighbourhoods U_a(F)");
    nbhd->fallthrough();
    nbhd->require_subcommand(1);
    leaf(nbhd, "contains", "Is x in U_center(anchors)?", 3, "center anchors x")
        ->callback([&] {
          action = [&] {
            BasicNbhd const u(arg_element(pos[0]), arg_set(pos[1]));
            bool const      c = nbhd_contains(u, arg_element(pos[2]));
            o.emit({{"contains", c}}, show(c));
            return kSuccess;
          };
        });
    leaf(nbhd, "check", "Sampled product/inversion containment", 3, "a b anchors")
        ->callback([&] {
          action = [&] {
            auto const r = check_product_containment(arg_element(pos[0]),
                                                     arg_element(pos[1]),
                                                     arg_set(pos[2]),
                                                     g.samples,
                                                     g.seed);
            std::string text = "samples: " + std::to_string(r.samples)
                               + "\nviolations: " + std::to_string(r.violations.size());
            for (auto const& v : r.violations) {
              text += "\n" + v.kind + ": " + render(v.first) + " " + render(v.second)
                      + " -> " + render(v.result);
            }
            o.emit(json(r), text);
            return r.violations.empty() ? kSuccess : kViolationFound;
          };
        });

    leaf(&app, "factorize-check", "Is x*y = g?", 3, "x y g")->callback([&] {
      action = [&] {
        bool const f = is_factorization(
            arg_element(pos[0]), arg_element(pos[1]), arg_element(pos[2]));
        o.emit({{"factorization", f}}, show(f));
        return kSuccess;
      };
    });

    // CLI11 splits vector arguments of the form "[...]", which would break
    // literals; a leading blank hides them and the expression parser skips it.
    std::vector<std::string> shielded(args);
    for (auto& a : shielded) {
      if (!a.empty() && a.front() == '[') {
        a.insert(a.begin(), ' ');
      }
    }
    std::vector<char const*> argv;
    for (auto const& a : shielded) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kSuccess : kInvalidArgument;
    }

    try {
      return action();
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return kParseFailure;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return e.kind() == ErrorKind::UnsupportedFlavor ? kUnsupportedFlavor
                                                      : kInvalidArgument;
    }
  }

}  // namespace cofinite
