#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::string> strings(const BasisSet& b) {
  std::vector<std::string> out;
  for (const auto& e : b.elements)
    out.push_back(b.space->rank() == 1 ? as_polynomial(e).to_string() : e.to_string());
  return out;
}

// S-polynomial computed directly from polynomial arithmetic.
Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.lead().mono, g.lead().mono);
  return f.times_term(f.lead().coef.inverse(), l / f.lead().mono) -
         g.times_term(g.lead().coef.inverse(), l / g.lead().mono);
}

// Leading form: the terms of minimal coefficient degree.
ModuleElement leading_form_of(const ModuleElement& v) {
  int k = homogeneity(v).filtration_order;
  std::vector<ModuleTerm> terms;
  for (const auto& t : v.terms())
    if (t.mono.degree() == k) terms.push_back(t);
  return ModuleElement::from_terms(v.space(), terms);
}

// dim (N ∩ m^k F)_e for the submodule spanned by gens, via the rank of the
// projection onto coordinates of coefficient degree below k.
std::size_t dim_deep_part(const std::vector<ModuleElement>& gens, int e, int k) {
  std::vector<std::map<TermKey, Scalar>> rows, shallow;
  for (const auto& g : gens) {
    int d = g.max_degree();
    if (d > e) continue;
    const Field K = g.space()->ring()->field();
    for (const auto& m : monomials_of_degree(g.space()->ring()->nvars(), e - d)) {
      auto w = g.times_term(Scalar::one(K), m);
      rows.push_back(row_of(w));
      std::map<TermKey, Scalar> s;
      for (const auto& t : w.terms())
        if (t.mono.degree() < k) s.emplace(key_of(t.mono, t.comp), t.coef);
      shallow.push_back(std::move(s));
    }
  }
  return rank_of(rows) - rank_of(shallow);
}

}  // namespace

TEST_CASE("reduce examples") {
  auto R = qring({"x", "y"});
  auto B = ideal(R, {"x^2 - y^2"});
  auto f = as_vector(P(R, "x^2*y"), B.space);
  auto d = reduce_with_quotients(f, B);
  CHECK(as_polynomial(d.remainder) == P(R, "y^3"));
  REQUIRE(d.quotients.size() == 1);
  CHECK(d.quotients[0] * P(R, "x^2 - y^2") + as_polynomial(d.remainder) == P(R, "x^2*y"));

  auto XY = ideal(R, {"x", "y"});
  CHECK(reduce(P(R, "1"), XY) == P(R, "1"));
  CHECK(reduce(P(R, "x*y + 3*y^2"), XY).is_zero());
}

TEST_CASE("quotients re-expand with non-monic basis elements") {
  auto R = qring({"x", "y", "z"});
  auto B = buchberger(ideal(R, {"x*y - z^2", "y^2 - x*z"}));
  for (auto& e : B.elements) e = e.scaled(Scalar(R->field(), 3L));
  auto f = as_vector(P(R, "x^3*y^2 + z^5 - 2*x*y*z"), B.space);
  auto d = reduce_with_quotients(f, B);
  ModuleElement sum = d.remainder;
  for (std::size_t i = 0; i < B.size(); ++i) sum += B.elements[i].times(d.quotients[i]);
  CHECK(sum == f);
}

TEST_CASE("buchberger examples") {
  auto R = qring({"x", "y"});
  auto G = buchberger(ideal(R, {"x^2 - y^2", "x*y"}));
  auto s = strings(G);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<std::string>{"x*y", "x^2 - y^2", "y^3"});
  CHECK(G.groebner);
  CHECK(G.reduced);

  CHECK(strings(buchberger(ideal(R, {"y", "x"}))) == std::vector<std::string>{"y", "x"});
  CHECK(strings(buchberger(ideal(R, {"3*x^2 + 6*y"}))) == std::vector<std::string>{"x^2 + 2*y"});
  CHECK(strings(buchberger(ideal(R, {"x + 1", "x"}))) == std::vector<std::string>{"1"});
}

TEST_CASE("property: Buchberger certificate and membership on random ideals") {
  Gen gen(5);
  for (Field K : {Field::rationals(), Field::prime(32003)}) {
    auto R = make_ring(K, {"x", "y", "z"});
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> gens;
      int n = gen.uniform(1, 3);
      for (int i = 0; i < n; ++i) gens.push_back(gen.polynomial(R, gen.uniform(1, 3), 3));
      auto G = buchberger(ideal_basis(R, gens));
      auto polys = G.polynomials();
      for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j) CHECK(reduce(spoly(polys[i], polys[j]), G).is_zero());
      for (const auto& g : gens) CHECK(reduce(g, G).is_zero());
      // Reduced: no term divisible by another leading term; monic.
      for (std::size_t i = 0; i < polys.size(); ++i) {
        CHECK(polys[i].lead().coef.is_one());
        for (std::size_t j = 0; j < polys.size(); ++j)
          if (i != j)
            for (const auto& t : polys[i].terms()) CHECK_FALSE(polys[j].lead().mono.divides(t.mono));
      }
      Polynomial combo(R);
      for (const auto& g : gens) combo += g * gen.polynomial(R, 2, 2);
      CHECK(reduce(combo, G).is_zero());
      auto off = combo + Polynomial::constant(R, 1L);
      bool unit = polys.size() == 1 && polys[0].lead().mono.is_one();
      CHECK(reduce(off, G).is_zero() == unit);
    }
  }
}

TEST_CASE("property: reduced basis is independent of generator order") {
  Gen gen(17);
  auto R = qring({"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(gen.polynomial(R, 3, 3));
    auto ref = strings(buchberger(ideal_basis(R, gens)));
    for (int p = 0; p < 10; ++p) {
      std::shuffle(gens.begin(), gens.end(), gen.rng);
      CHECK(strings(buchberger(ideal_basis(R, gens))) == ref);
    }
  }
}

TEST_CASE("module Gröbner bases") {
  auto R = qring({"x", "y"});
  auto F = make_free_module(R, {0, 0});
  BasisSet N{F, {V(F, {"x", "y"}), V(F, {"y", "x"})}};
  auto G = buchberger(N);
  for (const auto& g : N.elements) CHECK(contains(G, g));
  CHECK(contains(G, V(F, {"x^2 - y^2", "0"})));
  CHECK_FALSE(contains(G, V(F, {"x", "0"})));
}

TEST_CASE("standard basis examples") {
  auto R = qring({"x", "y"});
  auto F = make_free_module(R, {1, 1});
  auto S = standard_basis({F, {V(F, {"y", "-x"})}});
  REQUIRE(S.size() == 1);
  CHECK(S.standard);
  CHECK(S.elements[0] == V(F, {"y", "-x"}).monic());

  auto F2 = make_free_module(R, {0, 1});
  std::vector<ModuleElement> gens{V(F2, {"x^2", "y"})};
  auto S2 = standard_basis({F2, gens});
  REQUIRE_FALSE(S2.elements.empty());
  CHECK(S2.elements.front().lead().comp == 1);
  CHECK(leading_form_of(S2.elements.front()) == V(F2, {"0", "y"}));
  // Oracle: bigraded dimensions of the leading-form module match linear algebra.
  std::vector<ModuleElement> forms;
  for (const auto& s : S2.elements) forms.push_back(leading_form_of(s).in_space(F2));
  for (int e = 1; e <= 6; ++e)
    for (int k = 0; k <= e; ++k) {
      std::size_t expected = dim_deep_part(gens, e, k) - dim_deep_part(gens, e, k + 1);
      std::vector<std::map<TermKey, Scalar>> rows;
      for (const auto& f : forms) {
        int d = f.max_degree();
        if (d > e) continue;
        for (const auto& m : monomials_of_degree(2, e - d))
          if (f.lead().mono.degree() + m.degree() == k)
            rows.push_back(row_of(f.times_term(Scalar::one(R->field()), m)));
      }
      CHECK(rank_of(rows) == expected);
    }

  CHECK_THROWS_AS(standard_basis({F2, {V(F2, {"x^2 + x", "0"})}}), Error);
}

TEST_CASE("property: standard basis captures every leading form") {
  Gen gen(23);
  auto R = qring({"x", "y"});
  auto F = make_free_module(R, {0, 1, 2});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ModuleElement> gens;
    for (int g = 0; g < 2; ++g) {
      int e = gen.uniform(2, 4);
      std::vector<Polynomial> coords;
      for (int j = 0; j < 3; ++j) coords.push_back(gen.form(R, e - j, 2));
      auto v = ModuleElement::from_coordinates(F, coords);
      if (!v.is_zero()) gens.push_back(v);
    }
    if (gens.empty()) continue;
    auto S = standard_basis({F, gens});
    BasisSet forms{F, {}};
    for (const auto& s : S.elements) forms.elements.push_back(leading_form_of(s).in_space(F));
    auto FG = buchberger(forms);
    for (int c = 0; c < 5; ++c) {
      ModuleElement v(F);
      for (const auto& g : gens) v += g.times(gen.form(R, gen.uniform(0, 2), 2));
      if (v.is_zero() || !v.is_homogeneous()) continue;
      CHECK(contains(FG, leading_form_of(v)));
    }
  }
}

TEST_CASE("syzygy examples") {
  auto R = qring({"x", "y"});
  auto F = rank_one(R);
  std::vector<ModuleElement> cols{V(F, {"x^2"}), V(F, {"x*y"}), V(F, {"y^2"})};
  auto syz = syzygy_basis(cols, F);
  auto T = syz.front().space();
  auto mins = minimal_generators(syz, T);
  CHECK(mins.size() == 2);
  for (const auto& s : mins) CHECK(s.max_degree() == 3);
  BasisSet expect{T, {V(T, {"y", "-x", "0"}), V(T, {"0", "y", "-x"})}};
  CHECK(same_submodule({T, syz}, expect));

  auto one = syzygy_basis({V(F, {"x^2 + y^2"})}, F);
  CHECK(one.empty());
}

TEST_CASE("property: syzygies are sound and complete by graded dimension") {
  Gen gen(29);
  auto R = qring({"x", "y", "z"});
  for (int trial = 0; trial < 8; ++trial) {
    int rank = gen.uniform(1, 2);
    std::vector<int> shifts(rank);
    for (auto& s : shifts) s = gen.uniform(0, 1);
    auto F = make_free_module(R, shifts);
    std::vector<ModuleElement> cols;
    for (int c = 0; c < 3; ++c) {
      int e = gen.uniform(1, 3);
      std::vector<Polynomial> coords;
      for (int j = 0; j < rank; ++j) coords.push_back(gen.form(R, e - shifts[j], 2));
      auto v = ModuleElement::from_coordinates(F, coords);
      if (!v.is_zero()) cols.push_back(v);
    }
    if (cols.empty()) continue;
    auto syz = syzygy_basis(cols, F);
    for (const auto& s : syz) {
      CHECK(s.is_homogeneous());
      ModuleElement image(F);
      for (int k = 0; k < static_cast<int>(cols.size()); ++k) image += cols[k].times(s.coordinate(k));
      CHECK(image.is_zero());
    }
    for (int e = 0; e <= 5; ++e) CHECK(graded_dimension(syz, e) == kernel_dimension(cols, e));
  }
}

TEST_CASE("module intersection") {
  auto R = qring({"x", "y"});
  auto I = module_intersection(ideal(R, {"x"}), ideal(R, {"y"}));
  CHECK(strings(I) == std::vector<std::string>{"x*y"});

  auto J = module_intersection(ideal(R, {"x^2", "y"}), ideal(R, {"x", "y^2"}));
  CHECK(same_submodule(J, ideal(R, {"x^2", "x*y", "y^2"})));

  auto F = make_free_module(R, {0, 0});
  BasisSet A{F, {V(F, {"x", "0"}), V(F, {"0", "x"})}};
  BasisSet B{F, {V(F, {"y", "y"})}};
  auto C = module_intersection(A, B);
  CHECK(same_submodule(C, {F, {V(F, {"x*y", "x*y"})}}));
  for (const auto& c : C.elements) {
    CHECK(contains(buchberger(A), c));
    CHECK(contains(buchberger(B), c));
  }
}

TEST_CASE("elimination") {
  auto R = qring({"x", "y", "z"});
  auto E = eliminate(ideal(R, {"y - x^2", "z - x^3"}), {0});
  REQUIRE(E.size() == 1);
  auto f = as_polynomial(E.elements[0]);
  CHECK((f == P(E.space->ring(), "y^3 - z^2") || f == P(E.space->ring(), "z^2 - y^3")));
  // Substitution y = t^2, z = t^3 kills the result.
  auto T = qring({"t"});
  CHECK(substitute(f, {P(T, "t^2"), P(T, "t^3")}).is_zero());

  auto same = eliminate(ideal(R, {"x*y - z", "y^2"}), {});
  CHECK(same_submodule(same, buchberger(ideal(same.space->ring(), {"x*y - z", "y^2"}))));

  auto R2 = qring({"x", "y"});
  auto Z = eliminate(ideal(R2, {"x - 1"}), {0});
  CHECK(Z.elements.empty());
  CHECK(Z.space->ring()->names() == std::vector<std::string>{"y"});
}

TEST_CASE("ring map kernels") {
  auto R = qring({"x", "y"});
  auto K = kernel_of_ring_map(Ps(R, {"x", "y"}), RingMapMode::Rees);
  auto S = K.space->ring();
  CHECK(S->names() == std::vector<std::string>{"x", "y", "u", "v"});
  REQUIRE(K.size() == 1);
  auto g = as_polynomial(K.elements[0]);
  CHECK((g == P(S, "x*v - y*u") || g == P(S, "y*u - x*v")));
  // Hilbert function of the Rees algebra in y-degree k: dim (x,y)^k_e, checked
  // through the quotient's standard monomials of bidegree (e, k).
  for (int k = 0; k <= 3; ++k)
    for (int e = k; e <= k + 2; ++e) {
      std::size_t standard = 0;
      for (int a = 0; a <= e - k; ++a)
        for (int b = 0; b <= k; ++b) {
          Monomial m{a, e - k - a, b, k - b};
          bool divisible = false;
          for (const auto& el : K.elements) divisible |= el.lead().mono.divides(m);
          standard += !divisible;
        }
      CHECK(standard == static_cast<std::size_t>(e + 1));
    }

  auto Fib = kernel_of_ring_map(Ps(R, {"x", "y"}), RingMapMode::Fiber);
  CHECK(Fib.elements.empty());

  auto V3 = kernel_of_ring_map(Ps(R, {"x^2", "x*y", "y^2"}), RingMapMode::Fiber);
  REQUIRE(V3.size() == 1);
  auto h = as_polynomial(V3.elements[0]);
  auto Sy = V3.space->ring();
  CHECK((h == P(Sy, "u*w - v^2") || h == P(Sy, "v^2 - u*w")));
  CHECK(substitute(h, Ps(R, {"x^2", "x*y", "y^2"})).is_zero());

  auto named = kernel_of_ring_map(Ps(R, {"x", "y"}), RingMapMode::Fiber, {"a", "b"});
  CHECK(named.space->ring()->names() == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(kernel_of_ring_map(Ps(R, {"x"}), RingMapMode::Fiber, {"x"}), Error);
}

TEST_CASE("minimal generators") {
  auto R = qring({"x", "y"});
  auto F = rank_one(R);
  auto kept = minimal_generators({V(F, {"x^2*y"}), V(F, {"x^2"})}, F);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0] == V(F, {"x^2"}));

  auto m2 = minimal_generators(
      {V(F, {"x^2"}), V(F, {"x^2 + x*y"}), V(F, {"x*y"}), V(F, {"y^2"}), V(F, {"x^3 + y^3"})}, F);
  CHECK(m2.size() == 3);

  auto with_base = minimal_generators({V(F, {"x*y"}), V(F, {"y^2"})}, F, Grading::Internal, {V(F, {"x"})});
  CHECK(with_base.size() == 1);
  CHECK(with_base[0] == V(F, {"y^2"}));

  CHECK_THROWS_AS(minimal_generators({V(F, {"x + y^2"})}, F), Error);
}

TEST_CASE("Krull dimension") {
  auto R = qring({"x", "y"});
  CHECK(krull_dimension(ideal(R, {"x"})) == 1);
  CHECK(krull_dimension(ideal(R, {"x", "y"})) == 0);
  CHECK(krull_dimension(ideal(R, {"x + 1", "x"})) == -1);
  auto S = qring({"u", "v"});
  CHECK(krull_dimension(ideal_basis(S, {})) == 2);
  auto T = qring({"u", "v", "w"});
  CHECK(krull_dimension(ideal(T, {"u*w - v^2"})) == 2);
}

TEST_CASE("resource limits are enforced") {
  auto R = qring({"x", "y", "z"});
  Limits lim;
  lim.max_degree = 3;
  CHECK_THROWS_AS(buchberger(ideal(R, {"x^2 - y*z", "y^2 - x*z", "z^5 - x^3*y"}), &lim), ResourceLimit);
  Limits past;
  past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(buchberger(ideal(R, {"x^2 - y*z", "y^2 - x*z"}), &past), ResourceLimit);
}
