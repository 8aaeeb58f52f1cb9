#ifndef CREGRO_SUBMODULE_HPP
#define CREGRO_SUBMODULE_HPP

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "cregro/groebner.hpp"

namespace cregro {

/// A graded submodule M = <f_1..f_r> of a free module, with its reduced
/// Groebner basis (in the ambient order) computed on first use. Copies share
/// the cache; computing it is thread-safe.
template <class Field>
class Submodule {
 public:
  using Element = ModuleElement<Field>;

  Submodule(ModuleSpace<Field> ambient, std::vector<Element> gens)
      : ambient_(std::move(ambient)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens_) {
      if (g.rank() != ambient_.rank()) throw std::invalid_argument("generator lives in a different free module");
      if (g.is_zero()) throw std::invalid_argument("zero generator");
      if (!ambient_.is_homogeneous(g)) throw std::invalid_argument("generator not homogeneous");
    }
  }

  /// Like the constructor but silently drops zero elements.
  static Submodule spanned_by(ModuleSpace<Field> ambient, const std::vector<Element>& elems) {
    std::vector<Element> nz;
    for (const auto& e : elems)
      if (!e.is_zero()) nz.push_back(e);
    return Submodule(std::move(ambient), std::move(nz));
  }

  static Submodule zero(ModuleSpace<Field> ambient) { return Submodule(std::move(ambient), {}); }

  /// The whole free module, generated by its basis.
  static Submodule free(ModuleSpace<Field> ambient) {
    std::vector<Element> b;
    for (std::uint32_t j = 0; j < ambient.rank(); ++j) b.push_back(ambient.basis_vector(j));
    return Submodule(std::move(ambient), std::move(b));
  }

  const ModuleSpace<Field>& ambient() const { return ambient_; }
  const std::vector<Element>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const std::vector<Element>& groebner_basis() const {
    std::call_once(cache_->once, [this] { cache_->basis = buchberger(ambient_, gens_); });
    return cache_->basis;
  }

  bool contains(const Element& f) const { return normal_form(ambient_, f, groebner_basis()).is_zero(); }

  bool contains(const Submodule& other) const {
    for (const auto& g : other.generators())
      if (!contains(ambient_.import(g))) return false;
    return true;
  }

  /// Equality as submodules (reduced bases are unique).
  bool same_module(const Submodule& other) const {
    if (other.ambient_.rank() != ambient_.rank()) return false;
    if (other.ambient_.descriptor().shifts != ambient_.descriptor().shifts) return false;
    return groebner_basis() == other.groebner_basis();
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Element> basis;
  };

  ModuleSpace<Field> ambient_;
  std::vector<Element> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace cregro

#endif  // CREGRO_SUBMODULE_HPP
