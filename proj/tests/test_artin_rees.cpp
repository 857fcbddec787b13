#include <algorithm>

#include "doctest.h"
#include "powerhom/artin_rees.hpp"
#include "support.hpp"

using namespace testing;

namespace {

int order_of(const ModuleElement& v) { return homogeneity(v).filtration_order; }

ModuleElement random_element(Gen& gen, const FreeModulePtr& F, int degree) {
  ModuleElement v(F);
  for (int j = 0; j < F->rank(); ++j) {
    int d = degree - F->degree(j);
    if (d < 0) continue;
    auto c = gen.form(F->ring(), d, gen.uniform(0, 2));
    std::vector<Polynomial> coords(F->rank(), Polynomial(F->ring()));
    coords[j] = c;
    v += ModuleElement::from_coordinates(F, coords);
  }
  return v;
}

std::vector<ModuleElement> syzygies_of(const FreeModulePtr& F, const std::vector<ModuleElement>& cols) {
  return syzygy_basis(cols, F);
}

}  // namespace

TEST_CASE("leading forms") {
  auto R = qring({"x", "y"});
  auto F = make_free_module(R, {0, 1});
  auto lf = leading_form(V(F, {"x^2", "y"}));
  CHECK(lf == V(F, {"0", "y"}));
  CHECK(order_of(lf) == 1);

  auto R1 = rank_one(R);
  CHECK(leading_form(V(R1, {"x"})) == V(R1, {"x"}));

  auto F2 = make_free_module(R, {0, 0});
  CHECK(leading_form(V(F2, {"x^3", "x*y^2"})) == V(F2, {"x^3", "x*y^2"}));

  CHECK_THROWS_AS(leading_form(ModuleElement(F2)), Error);
}

TEST_CASE("leading form modules") {
  auto R1 = qring({"x"});
  auto lf = leading_form_module({V(rank_one(R1), {"x"})}, rank_one(R1));
  REQUIRE(lf.generators.size() == 1);
  CHECK(lf.filtration_degrees == std::vector<int>{1});

  // The syzygies of (x^2, xy, y^2) are linear.
  auto R = qring({"x", "y"});
  auto F = rank_one(R);
  auto syz = syzygies_of(F, {V(F, {"x^2"}), V(F, {"x*y"}), V(F, {"y^2"})});
  REQUIRE(!syz.empty());
  auto G = syz.front().space();
  auto ls = leading_form_module(syz, G);
  CHECK(ls.generators.size() == 2);
  for (int d : ls.filtration_degrees) CHECK(d == 1);

  auto Fs = make_free_module(R, {0, 1});
  auto lm = leading_form_module({V(Fs, {"x^2", "y"})}, Fs);
  bool has_ye2 = false;
  for (const auto& g : lm.generators) has_ye2 = has_ye2 || g == V(Fs, {"0", "y"});
  CHECK(has_ye2);
}

TEST_CASE("Artin-Rees number examples") {
  auto R1 = qring({"x"});
  auto F1 = rank_one(R1);
  auto a = artin_rees_number({V(F1, {"x"})}, F1);
  CHECK(a.rho == 1);
  CHECK(a.preimages_generate);
  REQUIRE(a.witness.has_value());

  auto R = qring({"x", "y"});
  auto F = rank_one(R);
  for (int c = 1; c <= 4; ++c) {
    auto gens = maximal_ideal_power_times(F, c);
    auto r = artin_rees_number(gens, F);
    CHECK(r.rho == c);
    CHECK(r.degrees == std::vector<int>(c + 1, c));
    CHECK(artin_rees_oracle(gens, F).rho == c);
  }

  auto syz = syzygies_of(F, {V(F, {"x"}), V(F, {"y"})});
  REQUIRE(syz.size() == 1);
  CHECK(artin_rees_number(syz, syz.front().space()).rho == 1);

  CHECK(artin_rees_number({}, F).rho == 0);
  CHECK(artin_rees_oracle({}, F).rho == 0);
  CHECK(artin_rees_number({ModuleElement(F)}, F).rho == 0);
}

TEST_CASE("Artin-Rees oracle examples") {
  auto R1 = qring({"x"});
  auto F1 = rank_one(R1);
  auto o = artin_rees_oracle({V(F1, {"x"})}, F1, 3);
  CHECK(o.rho == 1);
  REQUIRE(o.failure_witness.has_value());
  CHECK(*o.failure_witness == V(F1, {"x"}));

  auto R = qring({"x", "y"});
  auto F = rank_one(R);
  auto m2 = artin_rees_oracle({V(F, {"x^2"}), V(F, {"x*y"}), V(F, {"y^2"})}, F);
  CHECK(m2.rho == 2);
  REQUIRE(m2.failure_witness.has_value());
  CHECK(order_of(*m2.failure_witness) == 2);

  // N = F.
  auto F2 = make_free_module(R, {0, 0});
  auto full = artin_rees_oracle({V(F2, {"1", "0"}), V(F2, {"0", "1"})}, F2);
  CHECK(full.rho == 0);
  CHECK_FALSE(full.failure_witness.has_value());
  CHECK(artin_rees_number({V(F2, {"1", "0"}), V(F2, {"0", "1"})}, F2).rho == 0);

  // Shifted principal module: agrees with the structural computation.
  auto Fs = make_free_module(R, {0, 1});
  std::vector<ModuleElement> N{V(Fs, {"x^2", "y"})};
  CHECK(artin_rees_oracle(N, Fs).rho == artin_rees_number(N, Fs).rho);
  CHECK(artin_rees_number(N, Fs).rho == 1);
}

TEST_CASE("rho profiles and the regularity comparison") {
  auto R = qring({"x", "y"});
  CHECK(rho_profile(ideal(R, {"x", "y"})) == std::vector<int>{1, 1});
  CHECK(rho_profile(ideal(R, {"x^2", "x*y", "y^2"})) == std::vector<int>{2, 1});
  CHECK(rho_profile(ideal(R, {"1"})) == std::vector<int>{0});

  auto rows = comparison_check(minimal_free_resolution(ideal(R, {"x^2", "x*y", "y^2"})));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].reg_j == 2);
  CHECK(rows[1].bound == 2);
  CHECK(rows[1].satisfied);

  auto koszul = comparison_check(minimal_free_resolution(ideal(R, {"x", "y"})));
  REQUIRE(koszul.size() == 2);
  CHECK(koszul[1].reg_j == 1);
  CHECK(koszul[1].bound == 1);

  auto free = comparison_check(minimal_free_resolution(ideal(R, {"1"})));
  REQUIRE(free.size() == 1);
  CHECK(free[0].reg_j == 0);
  CHECK(free[0].bound == 0);
  CHECK(free[0].satisfied);
}

TEST_CASE("property: structural and definitional Artin-Rees numbers agree") {
  Gen gen(7);
  auto R = qring({"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> shifts;
    int rank = gen.uniform(1, 2);
    for (int j = 0; j < rank; ++j) shifts.push_back(gen.uniform(0, 1));
    auto F = make_free_module(R, shifts);
    std::vector<ModuleElement> N;
    int n = gen.uniform(1, 3);
    for (int i = 0; i < n; ++i) {
      auto v = random_element(gen, F, gen.uniform(1, 3));
      if (!v.is_zero()) N.push_back(v);
    }
    if (N.empty()) continue;
    auto structural = artin_rees_number(N, F);
    CHECK(structural.preimages_generate);
    CHECK(artin_rees_oracle(N, F).rho == structural.rho);

    // Generator order does not change the degree multiset.
    auto shuffled = N;
    std::shuffle(shuffled.begin(), shuffled.end(), gen.rng);
    CHECK(artin_rees_number(shuffled, F).degrees == structural.degrees);

    // Lower bounds from the generating matrix.
    auto lf = leading_form_module(N, F);
    int max_order = 0;
    for (const auto& x : lf.preimages) max_order = std::max(max_order, order_of(x));
    CHECK(structural.rho >= max_order);

    auto mins = minimal_generators(N, F);
    std::vector<ModuleElement> changed;
    for (std::size_t i = 0; i < mins.size(); ++i) {
      ModuleElement y = mins[i].scaled(Scalar(R->field(), static_cast<long>(gen.uniform(1, 4))));
      for (std::size_t k = 0; k < mins.size(); ++k) {
        if (k == i) continue;
        int d = mins[i].max_degree() - mins[k].max_degree();
        if (d < 0 || (d == 0 && k > i)) continue;
        y += mins[k].times(gen.form(R, d, 2));
      }
      changed.push_back(y);
    }
    int min_order = 1 << 20;
    for (const auto& y : changed)
      if (!y.is_zero()) min_order = std::min(min_order, order_of(y));
    if (!changed.empty()) CHECK(structural.rho >= min_order);
  }
}

TEST_CASE("property: the regularity comparison holds on random ideals") {
  Gen gen(19);
  auto R = qring({"x", "y", "z"});
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polynomial> gens;
    int n = gen.uniform(2, 4);
    for (int i = 0; i < n; ++i) {
      auto f = gen.form(R, gen.uniform(1, 3), gen.uniform(1, 3));
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    for (auto target : {ResolutionTarget::Submodule, ResolutionTarget::Cokernel}) {
      auto res = minimal_free_resolution(ideal_basis(R, gens), target);
      for (const auto& row : comparison_check(res)) CHECK(row.satisfied);
    }
  }
}
