#include "cofinite/witnesses.hpp"

#include <algorithm>
#include <string>

#include "cofinite/algebra.hpp"

namespace cofinite {

  SimplicityWitness simplicity_witness(Flavor fl, Element const& b) {
    if (!member(fl, b)) {
      throw Error(ErrorKind::NotMember, "element outside " + to_string(fl));
    }
    Element left  = cn_element(0, thresholds(b).n_d - 1);
    Element right = compose(invert(arrow(b)), invert(left));
    if (compose(compose(left, b), right) != identity()) {
      throw std::logic_error("simplicity_witness: product is not the identity");
    }
    return {std::move(left), std::move(right)};
  }

  namespace {

    // Subsets of `points` as sorted vectors, in lexicographic order.
    void subsets_lex(std::vector<Int> const&        points,
                     std::size_t                    start,
                     std::vector<Int>&              current,
                     std::vector<std::vector<Int>>& out) {
      out.push_back(current);
      for (std::size_t i = start; i < points.size(); ++i) {
        current.push_back(points[i]);
        subsets_lex(points, i + 1, current, out);
        current.pop_back();
      }
    }

    // Injective assignments of `count` values, in lexicographic order.
    void assignments_lex(std::vector<Int> const&        values,
                         std::size_t                    count,
                         std::vector<bool>&             used,
                         std::vector<Int>&              current,
                         std::vector<std::vector<Int>>& out) {
      if (current.size() == count) {
        out.push_back(current);
        return;
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (used[i]) {
          continue;
        }
        used[i] = true;
        current.push_back(values[i]);
        assignments_lex(values, count, used, current, out);
        current.pop_back();
        used[i] = false;
      }
    }

    bool is_subset(std::vector<Int> const& small, std::vector<Int> const& big) {
      return std::includes(big.begin(), big.end(), small.begin(), small.end());
    }

    // Shared enumeration: base extended by injective maps from subsets of
    // free_points into free_values.
    SolutionSet extend(Flavor                  fl,
                       Element const&          base,
                       std::vector<Int> const& free_points,
                       std::vector<Int> const& free_values,
                       auto&&                  satisfies) {
      SolutionSet result;
      result.base = base;

      std::vector<std::vector<Int>> subsets;
      std::vector<Int>              scratch;
      subsets_lex(free_points, 0, scratch, subsets);

      for (auto const& subset : subsets) {
        if (subset.size() > free_values.size()) {
          continue;
        }
        std::vector<std::vector<Int>> assignments;
        std::vector<bool>             used(free_values.size(), false);
        assignments_lex(free_values, subset.size(), used, scratch, assignments);
        for (auto const& values : assignments) {
          ++result.extension_count;
          std::vector<FrontPair> front(base.front().begin(), base.front().end());
          for (std::size_t i = 0; i < subset.size(); ++i) {
            front.push_back({subset[i], values[i]});
          }
          Element x = make_element(std::move(front), base.tail_start(), base.shift());
          if (!member(fl, x)) {
            continue;
          }
          if (!satisfies(x)) {
            throw std::logic_error("solver produced a non-solution");
          }
          result.solutions.push_back(std::move(x));
        }
      }
      return result;
    }

    void require_members(Flavor fl, Element const& a, Element const& b) {
      if (!member(fl, a) || !member(fl, b)) {
        throw Error(ErrorKind::NotMember,
                    "equation coefficients must belong to " + to_string(fl));
      }
    }

  }  // namespace

  SolutionSet solve_left(Flavor fl, Element const& a, Element const& b) {
    require_members(fl, a, b);
    if (!is_subset(dom_missing(a), dom_missing(b))) {
      return {};
    }
    return extend(fl,
                  compose(invert(a), b),
                  ran_missing(a),
                  ran_missing(b),
                  [&](Element const& x) { return compose(a, x) == b; });
  }

  SolutionSet solve_right(Flavor fl, Element const& a, Element const& b) {
    require_members(fl, a, b);
    if (!is_subset(ran_missing(a), ran_missing(b))) {
      return {};
    }
    return extend(fl,
                  compose(b, invert(a)),
                  dom_missing(b),
                  dom_missing(a),
                  [&](Element const& x) { return compose(x, a) == b; });
  }

  Int extension_bound(Int free_points, Int free_values) {
    Int total = 0;
    Int choose = 1;  // C(m, k)
    Int falling = 1;  // n! / (n - k)!
    for (Int k = 0; k <= std::min(free_points, free_values); ++k) {
      total = checked_add(total, choose * falling);
      choose = choose * (free_points - k) / (k + 1);
      falling *= (free_values - k);
    }
    return total;
  }

  namespace {

    struct HClassSearch {
      Flavor                  fl;
      Int                     shift;
      Int                     bound;
      std::vector<Int> const& points;
      std::vector<Int> const& values;
      std::vector<bool>       used;
      std::vector<FrontPair>  front;
      std::set<Element>       found;

      bool admissible(std::size_t index, Int value) const {
        Int const offset = value - points[index];
        switch (fl) {
          case Flavor::ALMON: return true;
          case Flavor::CN:
          case Flavor::ISO: return offset == shift;
          case Flavor::MON:
            return front.empty() || front.back().to < value;
          case Flavor::ISO1:
            return front.empty()
                   || (front.back().to < value && offset == shift);
        }
        return false;
      }

      void run(std::size_t index) {
        if (index == points.size()) {
          Element e = make_element(front, bound, shift);
          if (member(fl, e)) {
            found.insert(std::move(e));
          }
          return;
        }
        for (std::size_t i = 0; i < values.size(); ++i) {
          if (used[i] || !admissible(index, values[i])) {
            continue;
          }
          used[i] = true;
          front.push_back({points[index], values[i]});
          run(index + 1);
          front.pop_back();
          used[i] = false;
        }
      }
    };

  }  // namespace

  std::vector<Element> h_class_members(Flavor               fl,
                                       std::set<Int> const& dom_missing,
                                       std::set<Int> const& ran_missing,
                                       Int                  tail_bound) {
    Int top = 0;
    for (auto const* s : {&dom_missing, &ran_missing}) {
      if (!s->empty()) {
        if (*s->begin() < 1) {
          throw Error(ErrorKind::BadArguments, "missing points must be positive");
        }
        top = std::max(top, *s->rbegin());
      }
    }
    if (tail_bound < top + 1) {
      throw Error(ErrorKind::BadBound,
                  "tail_bound must be at least " + std::to_string(top + 1));
    }
    Int const shift = static_cast<Int>(ran_missing.size())
                      - static_cast<Int>(dom_missing.size());
    Int const ray_image = checked_add(tail_bound, shift);
    // Every element with tail_start <= bound covers [bound + shift, inf).
    if (ray_image < 1 || (!ran_missing.empty() && *ran_missing.rbegin() >= ray_image)) {
      return {};
    }
    std::vector<Int> points, values;
    for (Int n = 1; n < tail_bound; ++n) {
      if (!dom_missing.contains(n)) {
        points.push_back(n);
      }
    }
    for (Int n = 1; n < ray_image; ++n) {
      if (!ran_missing.contains(n)) {
        values.push_back(n);
      }
    }
    HClassSearch search{fl, shift, tail_bound, points, values,
                        std::vector<bool>(values.size(), false), {}, {}};
    search.run(0);
    return {search.found.begin(), search.found.end()};
  }

  std::pair<Element, Element> power_factorization(Int i) {
    return {cn_element(0, i), cn_element(i, 0)};
  }

  bool is_factorization(Element const& x, Element const& y, Element const& g) {
    return compose(x, y) == g;
  }

}  // namespace cofinite
