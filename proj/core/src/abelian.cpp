#include "linecrit/abelian.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "linecrit/errors.hpp"

namespace linecrit {

namespace {

Int positive_mod(const Int& a, const Int& d) {
  Int r = a % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace

bool GroupElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Int& c) { return c == 0; });
}

AbelianGroup::AbelianGroup(IntMatrix relations)
    : relations_(std::move(relations)),
      snf_(smith_normal_form(relations_)),
      u_inverse_(unimodular_inverse(snf_.u)),
      relation_solver_(relations_) {
  const std::size_t nmin = std::min(relations_.rows(), relations_.cols());
  while (positive_diag_ < nmin && snf_.s(positive_diag_, positive_diag_) != 0)
    ++positive_diag_;
  free_rank_ = relations_.rows() - positive_diag_;
  for (std::size_t i = 0; i < positive_diag_; ++i)
    if (snf_.s(i, i) > 1) {
      invariant_factors_.push_back(snf_.s(i, i));
      factor_rows_.push_back(i);
    }
}

std::optional<Int> AbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Int n = 1;
  for (const Int& d : invariant_factors_) n *= d;
  return n;
}

GroupElement AbelianGroup::zero() const {
  GroupElement x;
  x.coords.assign(invariant_factors_.size() + free_rank_, Int(0));
  return x;
}

GroupElement AbelianGroup::reduce(const IntVec& ambient) const {
  if (ambient.size() != ambient_rank())
    throw std::invalid_argument("reduce: ambient vector length mismatch");
  const IntVec y = snf_.u * ambient;
  GroupElement x;
  x.coords.reserve(invariant_factors_.size() + free_rank_);
  for (std::size_t i = 0; i < factor_rows_.size(); ++i)
    x.coords.push_back(positive_mod(y[factor_rows_[i]], invariant_factors_[i]));
  for (std::size_t i = positive_diag_; i < ambient_rank(); ++i)
    x.coords.push_back(y[i]);
  return x;
}

IntVec AbelianGroup::representative(const GroupElement& x) const {
  if (x.coords.size() != invariant_factors_.size() + free_rank_)
    throw std::invalid_argument("representative: coordinate length mismatch");
  IntVec y(ambient_rank(), Int(0));
  for (std::size_t i = 0; i < factor_rows_.size(); ++i)
    y[factor_rows_[i]] = x.coords[i];
  for (std::size_t i = 0; i < free_rank_; ++i)
    y[positive_diag_ + i] = x.coords[factor_rows_.size() + i];
  return u_inverse_ * y;
}

GroupElement AbelianGroup::add(const GroupElement& a,
                               const GroupElement& b) const {
  const std::size_t len = invariant_factors_.size() + free_rank_;
  if (a.coords.size() != len || b.coords.size() != len)
    throw std::invalid_argument("add: coordinate length mismatch");
  GroupElement c;
  c.coords.reserve(len);
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i)
    c.coords.push_back(
        positive_mod(a.coords[i] + b.coords[i], invariant_factors_[i]));
  for (std::size_t i = invariant_factors_.size(); i < len; ++i)
    c.coords.push_back(a.coords[i] + b.coords[i]);
  return c;
}

GroupElement AbelianGroup::scale(const Int& s, const GroupElement& x) const {
  const std::size_t len = invariant_factors_.size() + free_rank_;
  if (x.coords.size() != len)
    throw std::invalid_argument("scale: coordinate length mismatch");
  GroupElement c;
  c.coords.reserve(len);
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i)
    c.coords.push_back(positive_mod(s * x.coords[i], invariant_factors_[i]));
  for (std::size_t i = invariant_factors_.size(); i < len; ++i)
    c.coords.push_back(s * x.coords[i]);
  return c;
}

std::optional<IntVec> AbelianGroup::express_in_relations(
    const IntVec& b) const {
  return relation_solver_.solve(b);
}

std::string AbelianGroup::structure_string() const {
  std::string out;
  for (const Int& d : invariant_factors_) {
    if (!out.empty()) out += " x ";
    out += "Z/" + d.str();
  }
  if (free_rank_ > 0) {
    if (!out.empty()) out += " x ";
    out += free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  }
  return out.empty() ? "0" : out;
}

bool AbelianGroup::same_presentation(const AbelianGroup& other) const {
  return relations_ == other.relations_;
}

AbelianGroup cokernel(IntMatrix relations) {
  return AbelianGroup(std::move(relations));
}

GroupHom::GroupHom(AbelianGroup src, AbelianGroup dst, IntMatrix matrix)
    : src_(std::move(src)), dst_(std::move(dst)), matrix_(std::move(matrix)) {}

GroupElement GroupHom::apply(const GroupElement& x) const {
  return dst_.reduce(matrix_ * src_.representative(x));
}

GroupHom induced_hom(AbelianGroup src, AbelianGroup dst, IntMatrix a) {
  if (a.rows() != dst.ambient_rank() || a.cols() != src.ambient_rank())
    throw std::invalid_argument("induced_hom: matrix shape mismatch");
  const IntMatrix mapped = a * src.relations();
  for (std::size_t j = 0; j < mapped.cols(); ++j)
    if (!dst.express_in_relations(mapped.column(j)))
      throw induction_error(
          "induced_hom: image of relation column " + std::to_string(j) +
          " is not in the target relation lattice");
  return GroupHom(std::move(src), std::move(dst), std::move(a));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!inner.dst().same_presentation(outer.src()))
    throw std::invalid_argument("compose: middle presentations differ");
  return induced_hom(inner.src(), outer.dst(),
                     outer.matrix() * inner.matrix());
}

GroupHom multiplication_hom(const AbelianGroup& g, const Int& s) {
  return induced_hom(g, g, s * IntMatrix::identity(g.ambient_rank()));
}

bool homs_equal(const GroupHom& a, const GroupHom& b) {
  if (!a.src().same_presentation(b.src()) ||
      !a.dst().same_presentation(b.dst()))
    throw std::invalid_argument("homs_equal: presentations differ");
  const IntMatrix diff = a.matrix() - b.matrix();
  for (std::size_t j = 0; j < diff.cols(); ++j)
    if (!a.dst().express_in_relations(diff.column(j))) return false;
  return true;
}

bool is_surjective(const GroupHom& h) {
  const IntMatrix span = hstack(h.matrix(), h.dst().relations());
  return strip_zero_columns(hermite_normal_form(span).h).is_identity();
}

namespace {

IntMatrix canonical_lattice(const AbelianGroup& parent,
                            const std::vector<IntVec>& gens) {
  const std::size_t n = parent.ambient_rank();
  for (const IntVec& g : gens)
    if (g.size() != n)
      throw std::invalid_argument("Subgroup: generator length mismatch");
  const IntMatrix& rel = parent.relations();
  IntMatrix span(n, gens.size() + rel.cols());
  for (std::size_t j = 0; j < gens.size(); ++j) span.set_column(j, gens[j]);
  for (std::size_t j = 0; j < rel.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) span(i, gens.size() + j) = rel(i, j);
  return strip_zero_columns(hermite_normal_form(span).h);
}

// Rewrites the parent relations in the lattice basis; the subgroup is the
// cokernel of that coordinate matrix.
AbelianGroup structure_from_lattice(const AbelianGroup& parent,
                                    const IntMatrix& lattice) {
  const LatticeSolver basis(lattice);
  const IntMatrix& rel = parent.relations();
  IntMatrix c(lattice.cols(), rel.cols());
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    const auto x = basis.solve(rel.column(j));
    if (!x)
      throw std::logic_error("Subgroup: lattice lost a parent relation");
    c.set_column(j, *x);
  }
  return AbelianGroup(std::move(c));
}

std::vector<GroupElement> reduce_all(const AbelianGroup& parent,
                                     const std::vector<IntVec>& gens) {
  std::vector<GroupElement> out;
  out.reserve(gens.size());
  for (const IntVec& g : gens) out.push_back(parent.reduce(g));
  return out;
}

}  // namespace

Subgroup::Subgroup(AbelianGroup parent, std::vector<IntVec> ambient_generators)
    : parent_(std::move(parent)),
      lattice_(canonical_lattice(parent_, ambient_generators)),
      structure_(structure_from_lattice(parent_, lattice_)),
      generators_(reduce_all(parent_, ambient_generators)) {}

Subgroup kernel(const GroupHom& h) {
  const IntMatrix block = hstack(h.matrix(), -h.dst().relations());
  const IntMatrix ker = kernel_basis(block);
  const std::size_t n = h.src().ambient_rank();
  std::vector<IntVec> gens;
  gens.reserve(ker.cols());
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    IntVec g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = ker(i, j);
    gens.push_back(std::move(g));
  }
  return Subgroup(h.src(), std::move(gens));
}

Subgroup k_torsion(const AbelianGroup& g, const Int& s) {
  if (s < 1) throw std::invalid_argument("k_torsion: multiplier must be >= 1");
  const auto& factors = g.invariant_factors();
  std::vector<IntVec> gens;
  gens.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    GroupElement e = g.zero();
    e.coords[i] = positive_mod(factors[i] / gcd(factors[i], s), factors[i]);
    gens.push_back(g.representative(e));
  }
  return Subgroup(g, std::move(gens));
}

bool subgroups_equal(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_presentation(b.parent()))
    throw std::invalid_argument("subgroups_equal: parents differ");
  return a.lattice() == b.lattice();
}

}  // namespace linecrit
