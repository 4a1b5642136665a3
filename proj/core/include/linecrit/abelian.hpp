#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linecrit/exactint.hpp"

namespace linecrit {

// Canonical coordinates of a group element: one entry per invariant factor
// (reduced into [0, d_i)) followed by the free coordinates.
struct GroupElement {
  IntVec coords;

  bool is_zero() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Finitely generated abelian group presented as Z^n modulo the column
// lattice of a relations matrix, canonicalized through its Smith normal
// form.  Value type; copies are independent.
class AbelianGroup {
 public:
  explicit AbelianGroup(IntMatrix relations);

  std::size_t ambient_rank() const { return relations_.rows(); }
  const IntMatrix& relations() const { return relations_; }
  const SnfDecomposition& snf() const { return snf_; }

  // Diagonal entries of the Smith form that exceed 1, in divisibility order.
  const std::vector<Int>& invariant_factors() const {
    return invariant_factors_;
  }
  std::size_t free_rank() const { return free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  std::optional<Int> order() const;

  GroupElement zero() const;
  GroupElement reduce(const IntVec& ambient) const;
  IntVec representative(const GroupElement& x) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const Int& s, const GroupElement& x) const;

  // Witness that b lies in the column lattice of the relations.
  std::optional<IntVec> express_in_relations(const IntVec& b) const;

  // "Z/d1 x ... x Z/dr x Z^f"; "0" for the trivial group.
  std::string structure_string() const;

  bool same_presentation(const AbelianGroup& other) const;

 private:
  IntMatrix relations_;
  SnfDecomposition snf_;
  IntMatrix u_inverse_;
  LatticeSolver relation_solver_;
  std::vector<Int> invariant_factors_;
  std::vector<std::size_t> factor_rows_;  // Smith row per invariant factor
  std::size_t positive_diag_ = 0;
  std::size_t free_rank_ = 0;
};

AbelianGroup cokernel(IntMatrix relations);

class GroupHom;

// The map x + im(src relations) -> a*x + im(dst relations).  Throws
// induction_error when some column of a * src.relations() falls outside
// the target lattice, naming the offending column.
GroupHom induced_hom(AbelianGroup src, AbelianGroup dst, IntMatrix a);

class GroupHom {
 public:
  const AbelianGroup& src() const { return src_; }
  const AbelianGroup& dst() const { return dst_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement apply(const GroupElement& x) const;

 private:
  friend GroupHom induced_hom(AbelianGroup, AbelianGroup, IntMatrix);
  GroupHom(AbelianGroup src, AbelianGroup dst, IntMatrix matrix);

  AbelianGroup src_;
  AbelianGroup dst_;
  IntMatrix matrix_;
};

// outer after inner; the middle presentations must match.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

GroupHom multiplication_hom(const AbelianGroup& g, const Int& s);

// Equality as maps of the quotients, which is weaker than matrix equality.
bool homs_equal(const GroupHom& a, const GroupHom& b);

bool is_surjective(const GroupHom& h);

// Subgroup of a fixed parent, spanned by ambient generators.  Identified by
// the canonical Hermite form of the lattice generated together with the
// parent relations.
class Subgroup {
 public:
  Subgroup(AbelianGroup parent, std::vector<IntVec> ambient_generators);

  const AbelianGroup& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return generators_; }

  // The subgroup as an abstract group.
  const AbelianGroup& structure() const { return structure_; }

  // Canonical Hermite basis of the lattice, zero columns stripped.
  const IntMatrix& lattice() const { return lattice_; }

 private:
  AbelianGroup parent_;
  IntMatrix lattice_;
  AbelianGroup structure_;
  std::vector<GroupElement> generators_;
};

Subgroup kernel(const GroupHom& h);

// Elements killed by s, generated by (d_i / gcd(d_i, s)) times each
// torsion generator.
Subgroup k_torsion(const AbelianGroup& g, const Int& s);

// Both subgroups must live in the same parent presentation.
bool subgroups_equal(const Subgroup& a, const Subgroup& b);

}  // namespace linecrit
