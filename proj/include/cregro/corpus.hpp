#ifndef CREGRO_CORPUS_HPP
#define CREGRO_CORPUS_HPP

#include <string>
#include <vector>

#include "cregro/checks.hpp"

namespace cregro::checks {

struct CorpusEntry {
  std::string label;
  Instance instance;
};

namespace detail {

inline Instance hand(std::size_t n, std::vector<std::int64_t> omega, std::vector<std::string> gens,
                     std::vector<std::int64_t> shifts = {0}, std::vector<std::int64_t> eps = {0}, std::uint32_t p = 0) {
  Instance i;
  i.rational = p == 0;
  i.p = p;
  i.n = n;
  i.omega = std::move(omega);
  i.gens = std::move(gens);
  i.shifts = std::move(shifts);
  i.epsilon = std::move(eps);
  return i;
}

}  // namespace detail

/// Hand-picked instances with known behaviour. Several are chosen so that
/// the theorem hypotheses (componentwise linear in(M), equal Betti numbers)
/// actually hold; random instances rarely give i >= 2 coincidences.
inline const std::vector<CorpusEntry>& corpus() {
  using detail::hand;
  static const std::vector<CorpusEntry> c{
      {"conic-pencil", hand(2, {1, 0}, {"x^2+y^2", "x*y"})},
      {"conic-pencil-gf101", hand(2, {1, 0}, {"x^2+y^2", "x*y"}, {0}, {0}, 101)},
      {"x-times-max", hand(2, {1, 0}, {"x^2", "x*y"})},
      {"max-squared", hand(2, {0, 0}, {"x^2", "x*y", "y^2"})},
      {"max3-squared", hand(3, {1, 2, 3}, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"})},
      {"linear-max3", hand(3, {3, 1, 0}, {"x+y", "y+z", "x+z"})},
      {"linear-pair", hand(3, {1, 2, 3}, {"x+y", "y+z"})},
      {"monomial-ci", hand(2, {1, 1}, {"x^2", "y^3"})},
      {"cubic-lex", hand(2, {2, 1}, {"x^3", "x^2*y", "y^3"})},
      {"twisted", hand(3, {1, 1, 0}, {"x^2-y*z", "y^2-x*z"})},
      {"quadric-net", hand(3, {2, 1, 0}, {"x^2+y*z", "x*y", "y^2"})},
      {"generic-linear-forms", hand(3, {0, 1, 2}, {"x+2*y+3*z", "2*x-y+z"})},
      {"stable-cubic", hand(3, {1, 0, 0}, {"x^2", "x*y", "x*z", "y^3+x*z^2"})},
      {"linear-times-max", hand(3, {0, 0, 1}, {"x^2+x*y+x*z", "x*y+y^2+y*z", "x*z+y*z+z^2"})},
      {"linear-ci-4", hand(4, {0, 0, 0, 1}, {"x+w", "y+w", "z+w"})},
      {"moved-square", hand(3, {0, 0, 1}, {"x^2+2*x*z+z^2", "x*y+y*z", "y^2"})},
      {"module-shifted", hand(2, {1, 1}, {"x^2*e1+y*e2"}, {0, 1}, {0, 2})},
      {"module-rotation", hand(2, {1, 0}, {"x*e1+y*e2", "y*e1-x*e2"}, {0, 0}, {0, 1})},
      {"module-free-summand", hand(2, {0, 1}, {"e1", "x*e2", "y*e2"}, {0, 0}, {1, 0})},
  };
  return c;
}

}  // namespace cregro::checks

#endif  // CREGRO_CORPUS_HPP
