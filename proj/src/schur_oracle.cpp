#include "weil/schur_oracle.hpp"

#include <algorithm>
#include <map>

#include "weil/error.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

struct FunctorExpr::Node {
  enum class Kind { dual_w, v, tensor, power } kind;
  FunctorKind power_kind = FunctorKind::tensor;
  int degree = 0;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

FunctorExpr FunctorExpr::dual_w() { return FunctorExpr(std::make_shared<Node>(Node{Node::Kind::dual_w, FunctorKind::tensor, 0, nullptr, nullptr})); }

FunctorExpr FunctorExpr::v() { return FunctorExpr(std::make_shared<Node>(Node{Node::Kind::v, FunctorKind::tensor, 0, nullptr, nullptr})); }

FunctorExpr FunctorExpr::tensor(const FunctorExpr& a, const FunctorExpr& b) {
  return FunctorExpr(
      std::make_shared<Node>(Node{Node::Kind::tensor, FunctorKind::tensor, 0, a.node_, b.node_}));
}

FunctorExpr FunctorExpr::power(FunctorKind kind, int degree, const FunctorExpr& a) {
  if (degree < 0) throw DomainError("functor power must be nonnegative");
  return FunctorExpr(std::make_shared<Node>(Node{Node::Kind::power, kind, degree, a.node_, nullptr}));
}

namespace {

using NodePtr = std::shared_ptr<const FunctorExpr::Node>;
using Kind = FunctorExpr::Node::Kind;

int w_degree_of(const FunctorExpr::Node& n) {
  switch (n.kind) {
    case Kind::dual_w: return 1;
    case Kind::v: return 0;
    case Kind::tensor: return w_degree_of(*n.left) + w_degree_of(*n.right);
    case Kind::power: return n.degree * w_degree_of(*n.left);
  }
  return 0;
}

std::string describe(const FunctorExpr::Node& n) {
  switch (n.kind) {
    case Kind::dual_w: return "W*";
    case Kind::v: return "V";
    case Kind::tensor: return "(" + describe(*n.left) + " (x) " + describe(*n.right) + ")";
    case Kind::power:
      return FunctorSpec{n.power_kind, n.degree}.to_string() + "(" + describe(*n.left) + ")";
  }
  return {};
}

// A functor realized at fixed dimensions: basis weights and the operators
// needed for the equivariance equations.
struct Realized {
  std::size_t dim = 0;
  std::vector<std::vector<int>> weights;  // torus weight of each basis vector
  std::vector<LinearMap> lie;             // E_ab for a, b in [0, dim_w), index a * dim_w + b
  LinearMap reflection;
};

LinearMap unit_map(int n, int a, int b, const Rational& c) {
  LinearMap m{static_cast<std::size_t>(n), std::vector<SparseRow>(static_cast<std::size_t>(n))};
  m.columns[static_cast<std::size_t>(b)] = {{static_cast<std::size_t>(a), c}};
  return m;
}

Realized realize(const FunctorExpr::Node& node, int dim_w, int dim_v) {
  const auto nw = static_cast<std::size_t>(dim_w);
  Realized r;
  switch (node.kind) {
    case Kind::dual_w: {
      // E_ab acts on W* by minus the transpose: e^c -> -delta_{ca} e^b
      r.dim = nw;
      for (int c = 0; c < dim_w; ++c) {
        std::vector<int> w(nw);
        w[static_cast<std::size_t>(c)] = -1;
        r.weights.push_back(std::move(w));
      }
      for (int a = 0; a < dim_w; ++a)
        for (int b = 0; b < dim_w; ++b) r.lie.push_back(unit_map(dim_w, b, a, Rational(-1)));
      r.reflection = LinearMap::identity(nw);
      if (dim_w > 0) r.reflection.columns[0] = {{0, Rational(-1)}};
      break;
    }
    case Kind::v: {
      r.dim = static_cast<std::size_t>(dim_v);
      r.weights.assign(r.dim, std::vector<int>(nw));
      for (std::size_t k = 0; k < nw * nw; ++k)
        r.lie.push_back(LinearMap{r.dim, std::vector<SparseRow>(r.dim)});
      r.reflection = LinearMap::identity(r.dim);
      break;
    }
    case Kind::tensor: {
      const Realized a = realize(*node.left, dim_w, dim_v);
      const Realized b = realize(*node.right, dim_w, dim_v);
      r.dim = a.dim * b.dim;
      for (const auto& wa : a.weights)
        for (const auto& wb : b.weights) {
          std::vector<int> w(nw);
          for (std::size_t i = 0; i < nw; ++i) w[i] = wa[i] + wb[i];
          r.weights.push_back(std::move(w));
        }
      for (std::size_t k = 0; k < a.lie.size(); ++k) r.lie.push_back(tensor_derivation(a.lie[k], b.lie[k]));
      r.reflection = tensor_apply(a.reflection, b.reflection);
      break;
    }
    case Kind::power: {
      const Realized a = realize(*node.left, dim_w, dim_v);
      const auto basis = power_basis(node.power_kind, node.degree, static_cast<int>(a.dim));
      r.dim = basis.size();
      for (const auto& t : basis) {
        std::vector<int> w(nw);
        for (int i : t)
          for (std::size_t c = 0; c < nw; ++c) w[c] += a.weights[static_cast<std::size_t>(i)][c];
        r.weights.push_back(std::move(w));
      }
      for (const auto& x : a.lie) r.lie.push_back(power_derivation(node.power_kind, node.degree, x));
      r.reflection = power_apply(node.power_kind, node.degree, a.reflection);
      break;
    }
  }
  return r;
}

void check_cap(const EquivHomProblem& p) {
  if (p.dim_w < 0 || p.dim_v < 0) throw DomainError("dimensions must be nonnegative");
  const std::size_t a = p.domain.dim(p.dim_w, p.dim_v);
  const std::size_t b = p.codomain.dim(p.dim_w, p.dim_v);
  if (a != 0 && b > kHomSpaceCap / a)
    throw ResourceCapExceeded("Hom space of dimension " + std::to_string(a) + " x " + std::to_string(b) +
                              " exceeds the cap of " + std::to_string(kHomSpaceCap));
}

// Equations X_C T - T X_D = 0 for the given unknown entries (c, d) of T.
// Row key (c', d') of the product; unknown u = (c, d):
//   (X_C T)[c'][d'] = sum_c X_C[c'][c] T[c][d']
//   (T X_D)[c'][d'] = sum_d T[c'][d] X_D[d][d']
void append_equations(const LinearMap& xc, const LinearMap& xd,
                      const std::vector<std::pair<std::size_t, std::size_t>>& unknowns,
                      std::map<std::pair<std::size_t, std::size_t>, SparseRow>& rows) {
  // row transpose of xd: for each d, the pairs (d', X_D[d][d'])
  std::vector<std::vector<std::pair<std::size_t, Rational>>> xd_rows(xd.rows);
  for (std::size_t dp = 0; dp < xd.columns.size(); ++dp)
    for (const auto& [d, v] : xd.columns[dp]) xd_rows[d].emplace_back(dp, v);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto [c, d] = unknowns[u];
    for (const auto& [cp, v] : xc.columns[c]) rows[{cp, d}].emplace_back(u, v);
    for (const auto& [dp, v] : xd_rows[d]) rows[{c, dp}].emplace_back(u, -v);
  }
}

SparseRow normalize(SparseRow r) {
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [j, v] : r) {
    if (!out.empty() && out.back().first == j)
      out.back().second += v;
    else
      out.emplace_back(j, v);
  }
  std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
  return out;
}

std::size_t solve_dimension(const EquivHomProblem& p, bool restrict_weights, bool all_generators, Exec exec) {
  check_cap(p);
  const Realized dom = realize(p.domain.node(), p.dim_w, p.dim_v);
  const Realized cod = realize(p.codomain.node(), p.dim_w, p.dim_v);

  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t c = 0; c < cod.dim; ++c)
    for (std::size_t d = 0; d < dom.dim; ++d)
      if (!restrict_weights || cod.weights[c] == dom.weights[d]) unknowns.emplace_back(c, d);
  if (unknowns.empty()) return 0;

  std::map<std::pair<std::size_t, std::size_t>, SparseRow> rows;
  SparseMatrix system(0, unknowns.size());
  auto flush = [&] {
    for (auto& [key, r] : rows) {
      SparseRow n = normalize(std::move(r));
      if (!n.empty()) system.append_row(std::move(n));
    }
    rows.clear();
  };
  for (int a = 0; a < p.dim_w; ++a)
    for (int b = 0; b < p.dim_w; ++b) {
      if (a == b && !all_generators) continue;
      const auto k = static_cast<std::size_t>(a * p.dim_w + b);
      append_equations(cod.lie[k], dom.lie[k], unknowns, rows);
      flush();
    }
  // reflection: R_C T - T R_D = 0
  append_equations(cod.reflection, dom.reflection, unknowns, rows);
  flush();
  return unknowns.size() - rank(system, exec);
}

}  // namespace

int FunctorExpr::w_degree() const { return w_degree_of(*node_); }

std::size_t FunctorExpr::dim(int dim_w, int dim_v) const {
  struct Dim {
    int w, v;
    std::size_t operator()(const Node& n) const {
      switch (n.kind) {
        case Kind::dual_w: return static_cast<std::size_t>(w);
        case Kind::v: return static_cast<std::size_t>(v);
        case Kind::tensor: return (*this)(*n.left) * (*this)(*n.right);
        case Kind::power: {
          const std::size_t base = (*this)(*n.left);
          const auto d = static_cast<std::size_t>(n.degree);
          if (n.power_kind == FunctorKind::ext) return binomial(base, d);
          if (n.power_kind == FunctorKind::sym) return base == 0 ? (d == 0 ? 1 : 0) : binomial(base + d - 1, d);
          std::size_t r = 1;
          for (std::size_t i = 0; i < d; ++i) r *= base;
          return r;
        }
      }
      return 0;
    }
  };
  return Dim{dim_w, dim_v}(*node_);
}

std::string FunctorExpr::to_string() const { return describe(*node_); }

std::string EquivHomProblem::to_string() const {
  return "Hom_GL(W)(" + domain.to_string() + ", " + codomain.to_string() + "), dim W = " + std::to_string(dim_w) +
         ", dim V = " + std::to_string(dim_v);
}

std::size_t equivariant_hom_dim(const EquivHomProblem& p, Exec exec) { return solve_dimension(p, true, false, exec); }

namespace reference {

std::size_t equivariant_hom_dim(const EquivHomProblem& p) { return solve_dimension(p, false, true, Exec::serial); }

}  // namespace reference

EquivHomProblem bidegree_problem(int p, int q, int dim_v) {
  if (p < 0 || q < 0) throw DomainError("bidegree must be nonnegative");
  const FunctorExpr w = FunctorExpr::dual_w();
  const FunctorExpr v = FunctorExpr::v();
  const FunctorExpr one_forms = FunctorExpr::power(FunctorKind::sym, p, FunctorExpr::tensor(w, v));
  const FunctorExpr two_forms =
      FunctorExpr::power(FunctorKind::sym, q, FunctorExpr::tensor(FunctorExpr::power(FunctorKind::ext, 2, w), v));
  return EquivHomProblem{p + 2 * q, dim_v, FunctorExpr::tensor(one_forms, two_forms),
                         FunctorExpr::power(FunctorKind::ext, p + 2 * q, w)};
}

EquivHomProblem antisymmetrization_problem(int n, int q, int dim_w) {
  const FunctorExpr w = FunctorExpr::dual_w();
  return EquivHomProblem{dim_w, 0, FunctorExpr::power(FunctorKind::tensor, n, w),
                         FunctorExpr::power(FunctorKind::ext, q, w)};
}

BidegreeReport verify_bidegree(int p, int q, int dim_v, Exec exec) {
  if (dim_v < 0) throw DomainError("dim V must be nonnegative");
  BidegreeReport r;
  r.p = p;
  r.q = q;
  r.dim_v = dim_v;
  r.dim_w = p + 2 * q;
  const auto v = static_cast<std::size_t>(dim_v);
  r.expected = binomial(v, static_cast<std::size_t>(p)) *
               (q == 0 ? 1 : (v == 0 ? 0 : binomial(v + static_cast<std::size_t>(q) - 1, static_cast<std::size_t>(q))));
  r.computed = equivariant_hom_dim(bidegree_problem(p, q, dim_v), exec);
  return r;
}

}  // namespace weil
