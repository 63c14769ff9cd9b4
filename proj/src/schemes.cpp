#include "zeta/schemes.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zeta {

const char* describe(SchemeViolation v) {
  switch (v) {
    case SchemeViolation::Malformed:
      return "malformed relation matrices";
    case SchemeViolation::NoIdentity:
      return "condition 1 (identity relation)";
    case SchemeViolation::NotPartition:
      return "condition 2 (relations partition X x X)";
    case SchemeViolation::NotTransposeClosed:
      return "condition 3 (closed under transpose)";
    case SchemeViolation::NotClosedProduct:
      return "condition 4 (products are nonnegative integer combinations)";
  }
  return "unknown";
}

SchemeError::SchemeError(SchemeViolation violation, std::vector<std::size_t> relations, const std::string& what)
    : Error(std::string(describe(violation)) + " violated: " + what),
      violation_(violation),
      relations_(std::move(relations)) {}

namespace {

std::string index_list(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << "relations [";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? ", " : "") << idx[i];
  os << "]";
  return os.str();
}

[[noreturn]] void fail(SchemeViolation v, std::vector<std::size_t> idx, const std::string& detail) {
  const std::string what = idx.empty() ? detail : index_list(idx) + ": " + detail;
  throw SchemeError(v, std::move(idx), what);
}

}  // namespace

bool AssociationScheme::is_commutative() const {
  for (std::size_t s = 0; s < rank(); ++s)
    for (std::size_t t = s + 1; t < rank(); ++t)
      for (std::size_t u = 0; u < rank(); ++u)
        if (structure_constant(s, t, u) != structure_constant(t, s, u)) return false;
  return true;
}

AssociationScheme validate(const std::vector<RelationMatrix>& matrices) {
  if (matrices.empty()) fail(SchemeViolation::Malformed, {}, "no relations given");
  const Eigen::Index n = matrices.front().rows();
  if (n == 0) fail(SchemeViolation::Malformed, {}, "empty point set");
  for (std::size_t s = 0; s < matrices.size(); ++s) {
    const auto& m = matrices[s];
    if (m.rows() != n || m.cols() != n) fail(SchemeViolation::Malformed, {s}, "not square of the common size");
    if ((m.array() != 0 && m.array() != 1).any()) fail(SchemeViolation::Malformed, {s}, "entries outside {0,1}");
  }

  const RelationMatrix identity = RelationMatrix::Identity(n, n);
  std::size_t id = matrices.size();
  for (std::size_t s = 0; s < matrices.size(); ++s)
    if (matrices[s] == identity) {
      id = s;
      break;
    }
  if (id == matrices.size()) fail(SchemeViolation::NoIdentity, {}, "no relation equals the identity matrix");

  for (std::size_t s = 0; s < matrices.size(); ++s)
    if (matrices[s].sum() == 0) fail(SchemeViolation::NotPartition, {s}, "empty relation");
  RelationMatrix total = RelationMatrix::Zero(n, n);
  for (const auto& m : matrices) total += m;
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      if (total(x, y) != 1) {
        std::vector<std::size_t> hit;
        for (std::size_t s = 0; s < matrices.size(); ++s)
          if (matrices[s](x, y) == 1) hit.push_back(s);
        fail(SchemeViolation::NotPartition, hit,
             "cell (" + std::to_string(x) + "," + std::to_string(y) + ") covered " + std::to_string(total(x, y)) +
                 " times");
      }

  // Canonical order: identity first, then input order.
  std::vector<std::size_t> order{id};
  for (std::size_t s = 0; s < matrices.size(); ++s)
    if (s != id) order.push_back(s);

  AssociationScheme S;
  for (const std::size_t s : order) S.relations_.push_back(matrices[s]);
  const std::size_t r = S.relations_.size();

  S.involution_.assign(r, r);
  for (std::size_t s = 0; s < r; ++s) {
    const RelationMatrix t = S.relations_[s].transpose();
    for (std::size_t u = 0; u < r; ++u)
      if (S.relations_[u] == t) S.involution_[s] = u;
    if (S.involution_[s] == r) fail(SchemeViolation::NotTransposeClosed, {order[s]}, "transpose is not a relation");
  }

  // The relations partition X x X, so the coefficient of sigma_u in a product
  // is read off at any cell of u's support and then checked everywhere.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> witness(r);
  for (std::size_t u = 0; u < r; ++u) {
    const auto& m = S.relations_[u];
    for (Eigen::Index x = 0; x < n; ++x)
      for (Eigen::Index y = 0; y < n; ++y)
        if (m(x, y) == 1) witness[u] = {x, y};
  }
  S.constants_.assign(r * r * r, 0);
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t) {
      const RelationMatrix prod = S.relations_[s] * S.relations_[t];
      RelationMatrix rebuilt = RelationMatrix::Zero(n, n);
      for (std::size_t u = 0; u < r; ++u) {
        const int c = prod(witness[u].first, witness[u].second);
        S.constants_[(s * r + t) * r + u] = c;
        rebuilt += c * S.relations_[u];
      }
      if (rebuilt != prod)
        fail(SchemeViolation::NotClosedProduct, {order[s], order[t]}, "product is not constant on a relation");
    }
  return S;
}

AssociationScheme complete_graph_scheme(int n) {
  if (n < 2) throw PreconditionError("complete graph scheme needs n >= 2");
  const RelationMatrix I = RelationMatrix::Identity(n, n);
  const RelationMatrix J = RelationMatrix::Ones(n, n);
  return validate({I, J - I});
}

AssociationScheme cyclic_group_scheme(int n) {
  if (n < 1) throw PreconditionError("cyclic group scheme needs n >= 1");
  std::vector<RelationMatrix> rel;
  for (int k = 0; k < n; ++k) {
    RelationMatrix m = RelationMatrix::Zero(n, n);
    for (int x = 0; x < n; ++x) m(x, (x + k) % n) = 1;
    rel.push_back(std::move(m));
  }
  return validate(rel);
}

RelationMatrix kronecker(const RelationMatrix& a, const RelationMatrix& b) {
  RelationMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

AssociationScheme direct_product(const AssociationScheme& S, const AssociationScheme& T) {
  std::vector<RelationMatrix> rel;
  rel.reserve(S.rank() * T.rank());
  for (const auto& s : S.relations())
    for (const auto& t : T.relations()) rel.push_back(kronecker(s, t));
  return validate(rel);
}

namespace {

std::vector<RelationMatrix> parse_relations(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("size") || !doc.contains("relations"))
    throw SchemeError(SchemeViolation::Malformed, {}, "expected fields 'size' and 'relations'");
  const auto size = doc.at("size").get<int>();
  const auto& relations = doc.at("relations");
  if (size < 1 || !relations.is_array())
    throw SchemeError(SchemeViolation::Malformed, {}, "'size' must be positive and 'relations' a list");
  std::vector<RelationMatrix> rel;
  for (const auto& jm : relations) {
    if (!jm.is_array() || static_cast<int>(jm.size()) != size)
      throw SchemeError(SchemeViolation::Malformed, {rel.size()}, "relation does not have 'size' rows");
    RelationMatrix m(size, size);
    for (int x = 0; x < size; ++x) {
      const auto& row = jm[static_cast<std::size_t>(x)];
      if (!row.is_array() || static_cast<int>(row.size()) != size)
        throw SchemeError(SchemeViolation::Malformed, {rel.size()}, "row does not have 'size' entries");
      for (int y = 0; y < size; ++y) m(x, y) = row[static_cast<std::size_t>(y)].get<int>();
    }
    rel.push_back(std::move(m));
  }
  return rel;
}

}  // namespace

AssociationScheme read_scheme_json(std::istream& in) {
  std::vector<RelationMatrix> rel;
  try {
    rel = parse_relations(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw SchemeError(SchemeViolation::Malformed, {}, std::string("unreadable scheme document: ") + e.what());
  }
  return validate(rel);
}

AssociationScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scheme file " + path);
  return read_scheme_json(in);
}

void write_scheme_json(std::ostream& out, const AssociationScheme& scheme) {
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& m : scheme.relations()) {
    nlohmann::json jm = nlohmann::json::array();
    for (Eigen::Index x = 0; x < m.rows(); ++x) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index y = 0; y < m.cols(); ++y) row.push_back(m(x, y));
      jm.push_back(std::move(row));
    }
    rel.push_back(std::move(jm));
  }
  const nlohmann::json doc{{"size", scheme.size()}, {"relations", rel}};
  out << doc.dump() << '\n';
}

}  // namespace zeta
