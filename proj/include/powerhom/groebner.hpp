#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powerhom/limits.hpp"
#include "powerhom/module.hpp"

namespace powerhom {

/// A list of generators of a submodule of a free module, together with what
/// is known about it.
struct BasisSet {
  FreeModulePtr space;
  std::vector<ModuleElement> elements;
  bool groebner = false;
  bool reduced = false;
  bool standard = false;

  std::size_t size() const { return elements.size(); }
  /// Coordinates of a rank-one basis as polynomials.
  std::vector<Polynomial> polynomials() const;
};

/// Rank-one free module R with the term-over-position order.
FreeModulePtr rank_one(const RingPtr& ring);
/// Unprocessed basis of the ideal generated by gens (zero generators dropped).
BasisSet ideal_basis(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Incremental Buchberger engine for submodules of a free module.
///
/// Pairs are selected by sugar and pruned with the Gebauer-Möller criteria;
/// the product criterion is used for ideals only. The engine can be completed
/// up to a degree cap and extended with new generators afterwards, which is
/// how the graded Nakayama minimalization and truncated computations work.
/// With tracking enabled each basis element carries its expression in terms
/// of the generators that were added (as a vector of the tracking space).
class GbEngine {
 public:
  struct Options {
    const Limits* limits = nullptr;
    /// Tracking space; generator k added without explicit representation
    /// gets the basis vector e_k.
    FreeModulePtr track_space;
  };

  explicit GbEngine(FreeModulePtr space, Options options);
  explicit GbEngine(FreeModulePtr space) : GbEngine(std::move(space), Options{}) {}

  /// Wraps an existing Gröbner basis for reduction only.
  static GbEngine from_basis(const BasisSet& gb);

  const FreeModulePtr& space() const { return space_; }

  void add(const ModuleElement& g);
  void add(const ModuleElement& g, const ModuleElement& rep);
  /// Processes every pending pair and generator whose sugar is at most cap.
  void complete(std::optional<int> cap = std::nullopt);
  bool has_pending(std::optional<int> cap = std::nullopt) const;

  /// Full normal form.
  ModuleElement reduce(const ModuleElement& v) const;

  struct Quotient {
    int index;
    Scalar coef;
    Monomial mono;
  };
  /// Normal form together with the reduction steps v = Σ coef*mono*g_index + remainder.
  ModuleElement reduce(const ModuleElement& v, std::vector<Quotient>& steps) const;

  /// Indices of the current minimal basis.
  std::vector<int> active() const;
  const ModuleElement& element(int index) const { return entries_[index].f; }
  const ModuleElement& representation(int index) const { return entries_[index].rep; }

  /// Current minimal basis, monic.
  std::vector<ModuleElement> basis() const;
  /// Interreduced monic basis sorted ascending by leading term. Under the
  /// filtration order this relies on homogeneity: within one internal degree
  /// the order behaves like a global one.
  BasisSet reduced_basis() const;

  /// Schreyer syzygies among the active basis elements, as vectors of the
  /// free module with one basis vector per active element (in active() order).
  std::vector<ModuleElement> basis_syzygies(const FreeModulePtr& syz_space) const;

 private:
  struct Entry {
    ModuleElement f;
    ModuleElement rep;
    int sugar = 0;
    bool active = true;
  };
  struct Pair {
    int i, j;
    Monomial lcm;
    bool alive = true;
  };
  struct Work {
    int pair = -1;  // index into pairs_, or -1 for a generator
    ModuleElement gen;
    ModuleElement rep;
  };

  int find_reducer(const Monomial& m, std::uint32_t comp) const;
  ModuleElement reduce_impl(ModuleElement p, ModuleElement* rep, std::vector<Quotient>* steps) const;
  void insert(ModuleElement h, ModuleElement rep, int sugar);
  void require_reducible(const ModuleElement& v) const;

  FreeModulePtr space_;
  Options options_;
  bool ideal_case_ = false;
  int generators_added_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::pair<Monomial, int>>> leads_by_comp_;
  std::vector<Pair> pairs_;
  std::multimap<int, Work> queue_;
};

/// Normal form of v with respect to a Gröbner basis.
ModuleElement reduce(const ModuleElement& v, const BasisSet& gb);
Polynomial reduce(const Polynomial& f, const BasisSet& gb);

struct Division {
  ModuleElement remainder;
  /// One quotient per element of the basis: v = Σ quotients[i]*elements[i] + remainder.
  std::vector<Polynomial> quotients;
};
Division reduce_with_quotients(const ModuleElement& v, const BasisSet& gb);

/// Reduced Gröbner basis of the submodule generated by gens (in gens.space).
BasisSet buchberger(const BasisSet& gens, const Limits* limits = nullptr);
/// Same, stopping after every pair of sugar above cap (a truncated basis).
BasisSet buchberger_truncated(const BasisSet& gens, int cap, const Limits* limits = nullptr);

/// Standard basis under the filtration order (lowest coefficient degree
/// leads). Requires homogeneous generators.
BasisSet standard_basis(const BasisSet& gens, const Limits* limits = nullptr);

/// Membership test against a Gröbner basis.
bool contains(const BasisSet& gb, const ModuleElement& v);
/// Equality of the generated submodules.
bool same_submodule(const BasisSet& a, const BasisSet& b, const Limits* limits = nullptr);

/// Generators of the syzygy module of the columns, as elements of
/// ⊕ R(-deg column_k) (TOP order). Homogeneous columns give homogeneous
/// syzygies; for non-homogeneous columns the basis degrees are the sugars.
std::vector<ModuleElement> syzygy_basis(const std::vector<ModuleElement>& columns,
                                        const FreeModulePtr& column_space,
                                        const Limits* limits = nullptr);

/// Reduced Gröbner basis of the intersection of two submodules of one free module.
BasisSet module_intersection(const BasisSet& a, const BasisSet& b, const Limits* limits = nullptr);

/// Intersection of the ideal with the subring on the remaining variables;
/// the result lives in a ring on those variables (original relative order).
BasisSet eliminate(const BasisSet& ideal, const std::vector<int>& drop_vars,
                   const Limits* limits = nullptr);

enum class RingMapMode {
  /// Kernel of R[y_1..y_m] -> R[t], y_i -> f_i t: the Rees algebra ideal.
  Rees,
  /// Kernel of K[y_1..y_m] -> R, y_i -> f_i: the fiber relations.
  Fiber,
};

/// Reduced Gröbner basis of the kernel. New variable names default to
/// u, v, w, ... when they do not clash with the ring, y1.. otherwise.
BasisSet kernel_of_ring_map(const std::vector<Polynomial>& targets, RingMapMode mode,
                            std::vector<std::string> new_names = {},
                            const Limits* limits = nullptr);

enum class Grading {
  /// Internal degree; the generators must be homogeneous.
  Internal,
  /// Filtration (coefficient) degree; generators must be homogeneous and
  /// every term must have the same coefficient degree.
  Filtration,
};

/// A minimal generating subset, found by graded Nakayama: candidates are
/// processed in ascending degree and kept when not in the span of the
/// previously kept ones (plus the optional base submodule, which is not part
/// of the output).
std::vector<ModuleElement> minimal_generators(const std::vector<ModuleElement>& gens,
                                              const FreeModulePtr& space,
                                              Grading grading = Grading::Internal,
                                              const std::vector<ModuleElement>& base = {},
                                              const Limits* limits = nullptr);

/// Krull dimension of R/I from the leading ideal; the unit ideal gives -1.
int krull_dimension(const BasisSet& ideal, const Limits* limits = nullptr);

/// Polynomial ring with extra variables in front (names must be new).
RingPtr extend_ring_front(const RingPtr& ring, const std::vector<std::string>& extra,
                          MonomialOrder order);
/// Image of f in a ring whose variables are a superset, matched by name.
Polynomial embed_by_name(const Polynomial& f, const RingPtr& target);
/// Image of f in a ring whose variables are a subset; f must not involve the rest.
Polynomial restrict_by_name(const Polynomial& f, const RingPtr& target);
/// Variable-wise image of a module element into a free module over another ring.
ModuleElement embed_by_name(const ModuleElement& v, const FreeModulePtr& target);
ModuleElement restrict_by_name(const ModuleElement& v, const FreeModulePtr& target);

}  // namespace powerhom
