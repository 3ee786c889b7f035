#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "kcrystal/error.hpp"
#include "kcrystal/realizations.hpp"
#include "kcrystal_oracle/naive.hpp"

using namespace kcrystal;

namespace {

Multipartition M(const std::vector<std::vector<int>>& rows) { return Multipartition::from_rows(rows); }
SignString S(const char* w) { return SignString::parse(w); }

const Params kHalf = Params::rational(1, 2, {0});

std::vector<Params> sweep() {
  return {Params::rational(1, 2, {0}),       Params::rational(1, 3, {0, 1}),
          Params::rational(1, 4, {0, 0}),    Params::rational(2, 3, {0, 1, 2}),
          Params::irrational({0, 1}),        Params::irrational({0, 0, 0})};
}

int max_boxes_for(const Params& p) { return p.ell() == 3 ? 6 : 8; }

}  // namespace

TEST_CASE("boundary examples") {
  auto b = boundary(kHalf, M({{2}}), ZClass::residue(1));
  REQUIRE(b.size() == 2);
  CHECK(b.entries[0].box == BoxRef{0, 2, 1});
  CHECK(b.entries[0].kind == BoxKind::Addable);
  CHECK(*b.entries[0].d.evaluate(kHalf) == Rational(-1, 2));
  CHECK(b.entries[1].box == BoxRef{0, 1, 2});
  CHECK(b.entries[1].kind == BoxKind::Removable);
  CHECK(*b.entries[1].d.evaluate(kHalf) == Rational(1, 2));
  CHECK(b.sign() == S("+-"));

  b = boundary(kHalf, M({{2}}), ZClass::residue(0));
  REQUIRE(b.size() == 1);
  CHECK(b.entries[0].box == BoxRef{0, 1, 3});
  CHECK(b.sign() == S("+"));

  b = boundary(kHalf, Multipartition::empty(1), ZClass::residue(0));
  REQUIRE(b.size() == 1);
  CHECK(b.entries[0].box == BoxRef{0, 1, 1});
  CHECK(b.sign() == S("+"));
}

TEST_CASE("boundary rejects malformed classes") {
  CHECK_THROWS_AS(boundary(kHalf, M({{2}}), ZClass::residue(2)), ValidationError);
  CHECK_THROWS_AS(boundary(kHalf, M({{2}}), ZClass::content(0)), ValidationError);
  CHECK_THROWS_AS(boundary(kHalf, M({{2}, {}}), ZClass::residue(0)), ValidationError);
}

TEST_CASE("irrational mode: equal contents sort by descending component") {
  const auto p = Params::irrational({0, 0, 0});
  const auto b = boundary(p, Multipartition::empty(3), ZClass::content(0));
  REQUIRE(b.size() == 3);
  CHECK(b.entries[0].box.component == 2);
  CHECK(b.entries[1].box.component == 1);
  CHECK(b.entries[2].box.component == 0);
}

TEST_CASE("boundary structure over the sweep") {
  for (const auto& p : sweep()) {
    for (const auto& m : multipartitions_up_to(p.ell(), max_boxes_for(p))) {
      const auto add = addable_boxes(m);
      const auto rem = removable_boxes(m);
      for (const auto& z : classes_meeting(p, m)) {
        const auto b = boundary(p, m, z);
        REQUIRE(b.size() > 0);
        for (std::size_t k = 0; k < b.size(); ++k) {
          const auto& x = b.entries[k];
          REQUIRE(z_class(p, x.box) == z);
          const auto& pool = x.kind == BoxKind::Addable ? add : rem;
          REQUIRE(std::find(pool.begin(), pool.end(), x.box) != pool.end());
          if (k > 0) REQUIRE(d_diff(p, x.box, b.entries[k - 1].box) > 0);
        }
        std::size_t n_add = 0, n_rem = 0;
        for (const auto& x : add) n_add += z_class(p, x) == z;
        for (const auto& x : rem) n_rem += z_class(p, x) == z;
        REQUIRE(b.size() == n_add + n_rem);
        REQUIRE(weight(b.sign()) == static_cast<long>(n_rem) - static_cast<long>(n_add));
        REQUIRE(kgroup_induction(p, m, z).size() + kgroup_restriction(p, m, z).size() == b.size());
      }
    }
  }
}

TEST_CASE("class_representative examples and idempotence") {
  CHECK(class_representative(kHalf, M({{2}}), ZClass::residue(1)) == M({{1}}));
  CHECK(class_representative(kHalf, M({{2}}), ZClass::residue(0)) == M({{2}}));
  for (const auto& p : sweep()) {
    for (const auto& m : multipartitions_up_to(p.ell(), max_boxes_for(p))) {
      for (const auto& z : classes_meeting(p, m)) {
        const auto r = class_representative(p, m, z);
        REQUIRE(class_representative(p, r, z) == r);
        REQUIRE(boundary(p, r, z).sign().str() == std::string(boundary(p, m, z).size(), '+'));
      }
    }
  }
}

TEST_CASE("class_member examples") {
  const auto m = M({{2}});
  const auto z = ZClass::residue(1);
  CHECK(class_member(kHalf, m, z, S("+-")) == m);
  CHECK(class_member(kHalf, m, z, S("--")) == M({{2, 1}}));
  CHECK(class_member(kHalf, m, z, S("++")) == M({{1}}));
  CHECK_THROWS_AS(class_member(kHalf, m, z, S("+")), ValidationError);
}

TEST_CASE("class_member is a bijection onto the class") {
  for (const auto& p : sweep()) {
    for (const auto& m : multipartitions_up_to(p.ell(), 5)) {
      for (const auto& z : classes_meeting(p, m)) {
        const auto b = boundary(p, m, z);
        const auto rep = class_representative(p, m, z);
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& t : all_sign_strings(b.size())) {
          const auto member = class_member(p, m, z, t);
          REQUIRE(boundary(p, member, z).sign() == t);
          REQUIRE(class_representative(p, member, z) == rep);
          REQUIRE(seen.insert(member.rows()).second);
        }
      }
    }
  }
}

TEST_CASE("crystal_add / crystal_remove examples") {
  const auto m = M({{2}});
  auto a = crystal_add(kHalf, m, ZClass::residue(1));
  REQUIRE(a);
  CHECK(a->result == M({{2, 1}}));
  CHECK(a->box == BoxRef{0, 2, 1});

  a = crystal_add(kHalf, m, ZClass::residue(0));
  REQUIRE(a);
  CHECK(a->result == M({{3}}));

  CHECK_FALSE(crystal_add(kHalf, M({{1, 1}}), ZClass::residue(1)));
  CHECK(boundary(kHalf, M({{1, 1}}), ZClass::residue(1)).sign() == S("-+"));

  auto r = crystal_remove(kHalf, m, ZClass::residue(1));
  REQUIRE(r);
  CHECK(r->result == M({{1}}));
  CHECK(r->box == BoxRef{0, 1, 2});

  for (long z = 0; z < 2; ++z) CHECK_FALSE(crystal_remove(kHalf, Multipartition::empty(1), ZClass::residue(z)));
}

TEST_CASE("kgroup examples") {
  const auto m = M({{2}});
  CHECK(kgroup_induction(kHalf, m, ZClass::residue(1)) == std::vector<Multipartition>{M({{2, 1}})});
  CHECK(kgroup_induction(kHalf, m, ZClass::residue(0)) == std::vector<Multipartition>{M({{3}})});
  CHECK(kgroup_restriction(kHalf, m, ZClass::residue(0)).empty());
  CHECK(kgroup_restriction(kHalf, m, ZClass::residue(1)) == std::vector<Multipartition>{M({{1}})});
}

TEST_CASE("operators follow the sign crystal and invert each other") {
  for (const auto& p : sweep()) {
    for (const auto& m : multipartitions_up_to(p.ell(), max_boxes_for(p))) {
      for (const auto& z : classes_meeting(p, m)) {
        const auto t = boundary(p, m, z).sign();
        const auto a = crystal_add(p, m, z);
        const auto e = e_tilde(t);
        REQUIRE(a.has_value() == e.has_value());
        if (a) {
          REQUIRE(a->result == class_member(p, m, z, e->result));
          REQUIRE(a->result == add_box(m, a->box));
          REQUIRE(weight(boundary(p, a->result, z).sign()) == weight(t) + 2);
          const auto back = crystal_remove(p, a->result, z);
          REQUIRE(back);
          REQUIRE(back->result == m);
          REQUIRE(back->box == a->box);
        }
        const auto r = crystal_remove(p, m, z);
        const auto f = f_tilde(t);
        REQUIRE(r.has_value() == f.has_value());
        if (r) {
          REQUIRE(r->result == class_member(p, m, z, f->result));
          const auto back = crystal_add(p, r->result, z);
          REQUIRE(back);
          REQUIRE(back->result == m);
        }
      }
    }
  }
}

TEST_CASE("operators agree with the naive transcription") {
  for (const auto& p : sweep()) {
    kcrystal_oracle::Params q;
    q.irrational = p.is_irrational();
    if (!q.irrational) {
      q.num = p.kappa()->numerator();
      q.den = p.kappa()->denominator();
    }
    q.charges = p.charges();
    for (const auto& m : multipartitions_up_to(p.ell(), max_boxes_for(p))) {
      for (const auto& z : classes_meeting(p, m)) {
        const auto a = crystal_add(p, m, z);
        const auto na = kcrystal_oracle::naive_add(q, m.rows(), z.value);
        REQUIRE(a.has_value() == na.has_value());
        if (a) REQUIRE(a->result.rows() == na->result);
        const auto r = crystal_remove(p, m, z);
        const auto nr = kcrystal_oracle::naive_remove(q, m.rows(), z.value);
        REQUIRE(r.has_value() == nr.has_value());
        if (r) REQUIRE(r->result.rows() == nr->result);
      }
    }
  }
}

TEST_CASE("level one, irrational kappa: every removable box can be removed in its class") {
  const auto p = Params::irrational({0});
  for (const auto& m : multipartitions_up_to(1, 8)) {
    for (const auto& x : removable_boxes(m)) {
      const auto r = crystal_remove(p, m, z_class(p, x));
      REQUIRE(r);
      REQUIRE(r->box == x);
    }
  }
}

TEST_CASE("GL examples") {
  const Characteristic three(3);
  const DominantWeight lam({5, 4, 2});
  CHECK(gl_positions(lam, 1, three) == std::vector<std::size_t>{1, 2, 3});
  CHECK(gl_sign_string(lam, 1, three) == S("-+-"));
  auto r = gl_crystal_remove(lam, 1, three);
  REQUIRE(r);
  CHECK(r->result == DominantWeight({5, 4, 1}));
  CHECK(r->position == 3);
  CHECK_FALSE(gl_crystal_add(lam, 1, three));

  const Characteristic zero(0);
  CHECK(gl_positions(DominantWeight({9, 7, 3}), 7, zero) == std::vector<std::size_t>{2});
  CHECK(gl_sign_string(DominantWeight({9, 7, 3}), 7, zero) == S("+"));
  CHECK(gl_sign_string(DominantWeight({9, 3}), 5, zero).empty());

  const DominantWeight small({1, 0});
  CHECK(gl_sign_string(small, 0, three) == S("-+"));
  CHECK_FALSE(gl_crystal_add(small, 0, three));
  CHECK_FALSE(gl_crystal_remove(small, 0, three));
}

TEST_CASE("GL validation and degenerate classes") {
  CHECK_THROWS_AS(Characteristic(1), ValidationError);
  CHECK_THROWS_AS(Characteristic(4), ValidationError);
  CHECK_THROWS_AS(Characteristic(-3), ValidationError);
  CHECK_NOTHROW(Characteristic(7));
  CHECK_THROWS_AS(DominantWeight({2, 2}), ValidationError);
  CHECK_THROWS_AS(DominantWeight({1, 3}), ValidationError);

  const Characteristic three(3);
  CHECK_THROWS_AS(gl_class_member(DominantWeight({1, 0}), 0, three, S("++")), DegenerateClass);
  CHECK(gl_class_member(DominantWeight({1, 0}), 0, three, S("-+")) == DominantWeight({1, 0}));
  CHECK_THROWS_AS(gl_class_member(DominantWeight({1, 0}), 0, three, S("+-")), DegenerateClass);
  const DominantWeight lam({5, 4, 2});
  CHECK(gl_class_member(lam, 1, three, S("-++")) == DominantWeight({5, 4, 1}));
  CHECK(gl_class_member(lam, 1, three, S("-+-")) == lam);
  CHECK_THROWS_AS(gl_class_member(lam, 1, three, S("---")), DegenerateClass);
  CHECK_THROWS_AS(gl_class_member(DominantWeight({1, 0}), 0, three, S("-")), ValidationError);
}

TEST_CASE("GL operators agree with the naive rules and invert each other") {
  for (int p : {0, 2, 3, 5}) {
    const Characteristic ch(p);
    for (long a = 4; a >= -4; --a)
      for (long b = a - 1; b >= -4; --b)
        for (long c = b - 1; c >= -4; --c) {
          const DominantWeight lam({a, b, c});
          for (long i = -5; i <= 5; ++i) {
            const auto add = gl_crystal_add(lam, i, ch);
            const auto nadd = kcrystal_oracle::naive_gl_add(lam.entries(), i, p);
            REQUIRE(add.has_value() == nadd.has_value());
            if (add) {
              REQUIRE(add->result.entries() == *nadd);
              const auto back = gl_crystal_remove(add->result, i, ch);
              REQUIRE(back);
              REQUIRE(back->result == lam);
            }
            const auto rem = gl_crystal_remove(lam, i, ch);
            const auto nrem = kcrystal_oracle::naive_gl_remove(lam.entries(), i, p);
            REQUIRE(rem.has_value() == nrem.has_value());
            if (rem) REQUIRE(rem->result.entries() == *nrem);
          }
        }
  }
}
