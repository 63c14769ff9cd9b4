#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "zeta/errors.hpp"

namespace zeta {

using RelationMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

// The axiom a relation set failed, in the order the checks run.
enum class SchemeViolation {
  Malformed,          // non-square, unequal sizes, entries outside {0,1}
  NoIdentity,         // condition 1: identity matrix missing
  NotPartition,       // condition 2: relations do not sum to J (or one is empty)
  NotTransposeClosed, // condition 3: some transpose is not a relation
  NotClosedProduct,   // condition 4: a product is not a combination of relations
};

const char* describe(SchemeViolation v);

class SchemeError : public Error {
 public:
  SchemeError(SchemeViolation violation, std::vector<std::size_t> relations, const std::string& what);

  SchemeViolation violation() const { return violation_; }
  // Indices (in input order) of the relations involved.
  const std::vector<std::size_t>& relations() const { return relations_; }

 private:
  SchemeViolation violation_;
  std::vector<std::size_t> relations_;
};

// Association scheme in adjacency-matrix form. Relation 0 is the identity;
// the remaining relations keep their input order.
class AssociationScheme {
 public:
  std::size_t size() const { return static_cast<std::size_t>(relations_.front().rows()); }
  std::size_t rank() const { return relations_.size(); }
  const std::vector<RelationMatrix>& relations() const { return relations_; }
  const RelationMatrix& relation(std::size_t s) const { return relations_[s]; }
  std::size_t identity_index() const { return 0; }
  // s -> s*
  std::size_t involution(std::size_t s) const { return involution_[s]; }
  // p^u_{st}: sigma_s sigma_t = sum_u p^u_{st} sigma_u
  int structure_constant(std::size_t s, std::size_t t, std::size_t u) const {
    return constants_[(s * rank() + t) * rank() + u];
  }
  int valency(std::size_t s) const { return structure_constant(s, involution(s), 0); }
  bool is_commutative() const;

 private:
  friend AssociationScheme validate(const std::vector<RelationMatrix>& matrices);

  std::vector<RelationMatrix> relations_;
  std::vector<std::size_t> involution_;
  std::vector<int> constants_;
};

// Checks the four matrix axioms and extracts the structure constants.
// Throws SchemeError naming the first failed condition.
AssociationScheme validate(const std::vector<RelationMatrix>& matrices);

// K_n: relations {I, J - I}. n >= 2.
AssociationScheme complete_graph_scheme(int n);

// Thin scheme of C_n: relation k is the k-th power of the n-cycle.
AssociationScheme cyclic_group_scheme(int n);

// Relations sigma_s (x) sigma_t, ordered with t varying fastest.
AssociationScheme direct_product(const AssociationScheme& S, const AssociationScheme& T);

RelationMatrix kronecker(const RelationMatrix& a, const RelationMatrix& b);

// JSON document {"size": n, "relations": [[[row], ...], ...]}.
AssociationScheme read_scheme_json(std::istream& in);
AssociationScheme load_scheme(const std::string& path);
void write_scheme_json(std::ostream& out, const AssociationScheme& scheme);

}  // namespace zeta
