#include "pick3d/plane_lattice.hpp"

#include <array>

#include "pick3d/errors.hpp"

namespace pick3d {

namespace {

// Returns t with w == t*n, or nullopt.
std::optional<Int> multiple_of(const IntVec3& w, const Normal& n) {
  const IntVec3& nv = n.vec();
  const Int& lead = nv.x != 0 ? nv.x : (nv.y != 0 ? nv.y : nv.z);
  const Int& wlead = nv.x != 0 ? w.x : (nv.y != 0 ? w.y : w.z);
  if (!mpz_divisible_p(wlead.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
  Int t = wlead / lead;
  if (!(t * nv == w)) return std::nullopt;
  return t;
}

}  // namespace

PlaneLattice PlaneLattice::from_basis(const Normal& n, IntVec3 b1, IntVec3 b2) {
  IntVec3 w = cross(b1, b2);
  int sign;
  if (w == n.vec()) {
    sign = 1;
  } else if (w == -n.vec()) {
    sign = -1;
  } else {
    fail(Errc::NotInLattice, "pair does not generate the plane lattice of " + n.str());
  }
  SurdValue covol = parallelogram_area(n, b1, b2);
  return PlaneLattice{n, std::move(b1), std::move(b2), std::move(covol), sign};
}

BasisPair solution_basis(const Normal& n) {
  if (n.a() == 0)
    fail(Errc::DegenerateBasis,
         "solution basis (-b,a,0),(-c,0,a) is degenerate for a = 0, normal " + n.str());
  return {IntVec3{-n.b(), n.a(), Int(0)}, IntVec3{-n.c(), Int(0), n.a()}};
}

BasisPair orthogonal_basis(const Normal& n) {
  auto [alpha, beta] = solution_basis(n);  // throws DegenerateBasis when a == 0
  Int s = n.a() * n.a() + n.b() * n.b();
  // Gram-Schmidt step with rational components: gamma2 = beta - (bc/s) * alpha.
  Rat ratio = make_rat(n.b() * n.c(), s);
  std::array<Rat, 3> gamma2 = {Rat(beta.x) - ratio * Rat(alpha.x),
                               Rat(beta.y) - ratio * Rat(alpha.y),
                               Rat(beta.z) - ratio * Rat(alpha.z)};
  IntVec3 eta2;
  std::array<Int*, 3> out = {&eta2.x, &eta2.y, &eta2.z};
  for (int i = 0; i < 3; ++i) {
    Rat scaled = gamma2[static_cast<std::size_t>(i)] * Rat(s);
    if (!is_integer(scaled))
      fail(Errc::InternalInconsistency, "orthogonal basis: non-integer component");
    *out[static_cast<std::size_t>(i)] = scaled.get_num();
  }
  IntVec3 closed{-n.a() * n.a() * n.c(), -n.a() * n.b() * n.c(),
                 n.a() * n.a() * n.a() + n.a() * n.b() * n.b()};
  if (!(eta2 == closed))
    fail(Errc::InternalInconsistency, "orthogonal basis: closed form mismatch");
  if (dot(alpha, eta2) != 0)
    fail(Errc::InternalInconsistency, "orthogonal basis: pair not orthogonal");
  return {alpha, eta2};
}

PlaneLattice kernel_basis(const Normal& n) {
  // Column elimination (a b c)·U -> (g 0 0) with U unimodular; the last two
  // columns of U then span the integer kernel of the linear form.
  std::array<Int, 3> r = {n.a(), n.b(), n.c()};
  std::array<IntVec3, 3> col = {IntVec3{Int(1), Int(0), Int(0)},
                                IntVec3{Int(0), Int(1), Int(0)},
                                IntVec3{Int(0), Int(0), Int(1)}};
  auto eliminate = [&](int i, int j) {
    if (r[static_cast<std::size_t>(j)] == 0) return;
    if (r[static_cast<std::size_t>(i)] == 0) {
      std::swap(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]);
      std::swap(col[static_cast<std::size_t>(i)], col[static_cast<std::size_t>(j)]);
      return;
    }
    Int& ri = r[static_cast<std::size_t>(i)];
    Int& rj = r[static_cast<std::size_t>(j)];
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), ri.get_mpz_t(),
               rj.get_mpz_t());
    Int pi = ri / g, pj = rj / g;
    IntVec3 ci = col[static_cast<std::size_t>(i)];
    IntVec3 cj = col[static_cast<std::size_t>(j)];
    col[static_cast<std::size_t>(i)] = s * ci + t * cj;
    col[static_cast<std::size_t>(j)] = pi * cj - pj * ci;
    ri = g;
    rj = 0;
  };
  eliminate(1, 2);
  eliminate(0, 1);

  IntVec3 b1 = col[1], b2 = col[2];
  IntVec3 w = cross(b1, b2);
  if (w == -n.vec()) {
    std::swap(b1, b2);
  } else if (!(w == n.vec())) {
    fail(Errc::InternalInconsistency, "kernel basis certification failed for " + n.str());
  }
  SurdValue covol = parallelogram_area(n, b1, b2);
  return PlaneLattice{n, std::move(b1), std::move(b2), std::move(covol), 1};
}

SurdValue parallelogram_area(const IntVec3& u, const IntVec3& v) {
  IntVec3 w = cross(u, v);
  if (w.is_zero()) return SurdValue::zero();
  return parallelogram_area(primitive_normal(w), u, v);
}

SurdValue parallelogram_area(const Normal& n, const IntVec3& u, const IntVec3& v) {
  IntVec3 w = cross(u, v);
  std::optional<Int> t = multiple_of(w, n);
  if (!t)
    fail(Errc::NotInPlane, "cross(u,v) is not an integer multiple of " + n.str());
  // Determinant route: det(n|u|v) = n · (u×v) must equal t·|n|^2.
  if (dot(n.vec(), w) != *t * n.norm_sq())
    fail(Errc::InternalInconsistency, "area determinant cross-check failed");
  Int abs_t = abs(*t);
  return SurdValue(Rat(abs_t), n.norm_sq());
}

std::optional<std::pair<Int, Int>> decompose_in_basis(const PlaneLattice& L,
                                                      const IntVec3& v) {
  // v = k1*b1 + k2*b2  =>  cross(v,b2) = k1*cross(b1,b2) = k1*sign*n.
  Int nsq = L.normal.norm_sq();
  Int num1 = dot(cross(v, L.b2), L.normal.vec()) * L.cross_sign;
  Int num2 = dot(cross(L.b1, v), L.normal.vec()) * L.cross_sign;
  if (!mpz_divisible_p(num1.get_mpz_t(), nsq.get_mpz_t())) return std::nullopt;
  if (!mpz_divisible_p(num2.get_mpz_t(), nsq.get_mpz_t())) return std::nullopt;
  Int k1 = num1 / nsq, k2 = num2 / nsq;
  if (!(k1 * L.b1 + k2 * L.b2 == v)) return std::nullopt;
  return std::make_pair(std::move(k1), std::move(k2));
}

Int sublattice_index(const PlaneLattice& L, const IntVec3& u, const IntVec3& v) {
  auto cu = decompose_in_basis(L, u);
  auto cv = decompose_in_basis(L, v);
  if (!cu || !cv)
    fail(Errc::NotInLattice, "vector is not a lattice point of the plane of " +
                                 L.normal.str());
  Int det = cu->first * cv->second - cu->second * cv->first;
  return abs(det);
}

bool is_lattice_basis(const Normal& n, const IntVec3& u, const IntVec3& v) {
  IntVec3 w = cross(u, v);
  return w == n.vec() || w == -n.vec();
}

}  // namespace pick3d
