#include "wba/bimre.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_map>

#include "wba/errors.hpp"

namespace wba {

namespace json = nlohmann;

Vector ReBase::re_product(std::size_t x, std::size_t y) const {
  return kron(r.algebra.product(x / d, y / d), r.algebra.product(y % d, x % d));
}

std::shared_ptr<const ReBase> make_re_base(const FrobeniusAlgebra& r) {
  Report rep = check_separable_frobenius(r.algebra, r.frob);
  if (!rep.all_pass()) {
    std::string bad;
    for (const auto& n : rep.failures()) bad += (bad.empty() ? "" : ", ") + n;
    throw Error(ErrorCode::NotFrobenius, bad);
  }
  auto b = std::make_shared<ReBase>();
  b->r = r;
  b->nakayama = nakayama(r.algebra, r.frob);
  b->d = r.algebra.dim;
  b->one = r.algebra.unit;
  for (std::size_t p = 0; p < b->d; ++p)
    for (std::size_t q = 0; q < b->d; ++q)
      if (!r.frob.frob(p, q).is_zero()) {
        b->e.push_back(scale(r.frob.frob(p, q), r.algebra.basis_vector(p)));
        b->f.push_back(r.algebra.basis_vector(q));
      }
  return b;
}

namespace {

// Column-wise nonzeros of a matrix.
struct Sparse {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> col;
};

Sparse sparse(const Matrix& m) {
  Sparse s{m.rows(), m.cols(), std::vector<std::vector<std::pair<std::size_t, Scalar>>>(m.cols())};
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) s.col[j].emplace_back(i, m(i, j));
  return s;
}

Vector sparse_apply(const Sparse& a, const Vector& x) {
  Vector y(a.rows);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& [i, v] : a.col[j]) y[i] += v * x[j];
  }
  return y;
}

// y += (a (x) b) x, x indexed i*b.cols + j.
void kron_accumulate(Vector& y, const Sparse& a, const Sparse& b, const Vector& x) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero()) continue;
    const std::size_t i = k / b.cols, j = k % b.cols;
    for (const auto& [ia, va] : a.col[i]) {
      const Scalar c = va * x[k];
      for (const auto& [jb, vb] : b.col[j]) y[ia * b.rows + jb] += c * vb;
    }
  }
}

Matrix lin(const std::vector<Matrix>& gens, const Vector& coeff, std::size_t dim, const Field& f) {
  Matrix m(dim, dim);
  for (std::size_t p = 0; p < coeff.size(); ++p)
    if (!coeff[p].is_zero()) m = m + scale(coeff[p], gens[p]);
  (void)f;
  return m;
}

// Actions of b_p (x) 1 and 1 (x) b_q, from the left (ls, lr) and the right (rs, rr).
struct Gens {
  std::vector<Matrix> ls, lr, rs, rr;
};

Gens gens_of(const ReBimodule& m) {
  const ReBase& b = *m.base;
  const std::size_t d = b.d;
  Gens g;
  for (std::size_t p = 0; p < d; ++p) {
    Matrix ls(m.dim, m.dim), lr(m.dim, m.dim), rs(m.dim, m.dim), rr(m.dim, m.dim);
    for (std::size_t q = 0; q < d; ++q) {
      if (b.one[q].is_zero()) continue;
      ls = ls + scale(b.one[q], m.left[p * d + q]);
      lr = lr + scale(b.one[q], m.left[q * d + p]);
      rs = rs + scale(b.one[q], m.right[p * d + q]);
      rr = rr + scale(b.one[q], m.right[q * d + p]);
    }
    g.ls.push_back(std::move(ls));
    g.lr.push_back(std::move(lr));
    g.rs.push_back(std::move(rs));
    g.rr.push_back(std::move(rr));
  }
  return g;
}

void fill_from_gens(ReBimodule& m, const Gens& g) {
  const std::size_t d = m.base->d;
  m.left.assign(d * d, Matrix());
  m.right.assign(d * d, Matrix());
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      m.left[p * d + q] = g.ls[p] * g.lr[q];
      m.right[p * d + q] = g.rs[p] * g.rr[q];
    }
}

void require_shape(const ReBimodule& m) {
  if (!m.base) throw Error(ErrorCode::DimensionMismatch, "bimodule without base algebra");
  const std::size_t dd = m.base->d * m.base->d;
  bool ok = m.left.size() == dd && m.right.size() == dd;
  for (std::size_t x = 0; ok && x < dd; ++x)
    ok = m.left[x].rows() == m.dim && m.left[x].cols() == m.dim && m.right[x].rows() == m.dim &&
         m.right[x].cols() == m.dim;
  if (!ok) throw Error(ErrorCode::DimensionMismatch, "bimodule " + m.name + ": action tensor shape");
}

void require_same_base(const ReBimodule& m, const ReBimodule& n) {
  require_shape(m);
  require_shape(n);
  if (m.base != n.base) throw Error(ErrorCode::RMismatch, m.name + " and " + n.name + " are over different R");
}

struct ProductData {
  DuoidalProductObject obj;
  Gens gens;
  Sparse inject, project;
  std::vector<std::pair<Sparse, Sparse>> e1, e2;  // E = E1 E2, Ek = sum kron(a, b)
};

Vector apply_terms(const std::vector<std::pair<Sparse, Sparse>>& terms, const Vector& x, std::size_t n) {
  Vector y(n);
  for (const auto& [a, b] : terms) kron_accumulate(y, a, b, x);
  return y;
}

ProductData build_product(const ReBimodule& m, const Gens& gm, const ReBimodule& n, const Gens& gn, Flavor fl) {
  require_same_base(m, n);
  const ReBase& b = *m.base;
  const Field& f = b.field();
  const std::size_t dm = m.dim, dn = n.dim, mn = dm * dn;
  ProductData pd;
  pd.obj.flavor = fl;
  pd.obj.left_dim = dm;
  pd.obj.right_dim = dn;
  for (std::size_t i = 0; i < b.e.size(); ++i) {
    if (fl == Flavor::Circ) {
      pd.e1.emplace_back(sparse(lin(gm.rs, b.e[i], dm, f)), sparse(lin(gn.ls, b.f[i], dn, f)));
      pd.e2.emplace_back(sparse(lin(gm.rr, b.f[i], dm, f)), sparse(lin(gn.lr, b.e[i], dn, f)));
    } else {
      pd.e1.emplace_back(sparse(lin(gm.ls, b.e[i], dm, f)), sparse(lin(gn.lr, b.f[i], dn, f)));
      pd.e2.emplace_back(sparse(lin(gm.rs, b.e[i], dm, f)), sparse(lin(gn.rr, b.f[i], dn, f)));
    }
  }
  auto apply_e = [&](const Vector& x) { return apply_terms(pd.e1, apply_terms(pd.e2, x, mn), mn); };

  Matrix e(mn, mn);
  for (std::size_t k = 0; k < mn; ++k) e.set_column(k, apply_e(unit_vector(mn, k, f)));
  pd.obj.idempotent = e;
  const char* what = fl == Flavor::Circ ? "o" : ".";
  SplitIdempotent sp;
  try {
    sp = split_idempotent(e);
  } catch (const Error& err) {
    throw Error(ErrorCode::IdempotentFailure,
                std::string("E") + what + " on " + m.name + " (x) " + n.name + ": " + err.what());
  }
  pd.obj.inject = sp.inject;
  pd.obj.project = sp.project;
  pd.inject = sparse(sp.inject);
  pd.project = sparse(sp.project);
  const std::size_t r = sp.inject.cols();

  Matrix idm = Matrix::identity(dm, f), idn = Matrix::identity(dn, f);
  const Sparse sidm = sparse(idm), sidn = sparse(idn);
  // Operator a (x) b on M (x) N, restricted to the image after checking invariance.
  auto induced = [&](const Sparse& a, const Sparse& bb) {
    Matrix out(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      Vector y(mn);
      kron_accumulate(y, a, bb, sp.inject.column(k));
      if (apply_e(y) != y)
        throw Error(ErrorCode::IdempotentFailure,
                    std::string("image of E") + what + " on " + m.name + " (x) " + n.name + " is not a subbimodule");
      out.set_column(k, sparse_apply(pd.project, y));
    }
    return out;
  };
  const std::size_t d = b.d;
  for (std::size_t p = 0; p < d; ++p) {
    if (fl == Flavor::Circ) {
      pd.gens.ls.push_back(induced(sparse(gm.ls[p]), sidn));
      pd.gens.lr.push_back(induced(sparse(gm.lr[p]), sidn));
      pd.gens.rs.push_back(induced(sidm, sparse(gn.rs[p])));
      pd.gens.rr.push_back(induced(sidm, sparse(gn.rr[p])));
    } else {
      pd.gens.ls.push_back(induced(sidm, sparse(gn.ls[p])));
      pd.gens.lr.push_back(induced(sparse(gm.lr[p]), sidn));
      pd.gens.rs.push_back(induced(sidm, sparse(gn.rs[p])));
      pd.gens.rr.push_back(induced(sparse(gm.rr[p]), sidn));
    }
  }
  pd.obj.object.base = m.base;
  pd.obj.object.dim = r;
  pd.obj.object.name = "(" + m.name + " " + what + " " + n.name + ")";
  fill_from_gens(pd.obj.object, pd.gens);
  return pd;
}

ReBimodule unit_module(const std::shared_ptr<const ReBase>& base, bool is_j) {
  const ReBase& b = *base;
  const std::size_t d = b.d, dd = d * d;
  const FinAlgebra& a = b.r.algebra;
  ReBimodule m{base, dd, std::vector<Matrix>(dd, Matrix(dd, dd)), std::vector<Matrix>(dd, Matrix(dd, dd)), is_j ? "J" : "I"};
  const Matrix& thi = b.nakayama.theta_inv;
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
          Vector left, right;
          if (!is_j) {
            left = kron(a.product(s, x), a.product(y, r));
            right = kron(a.product(x, s), a.product(r, y));
          } else {
            // x (x) s y theta^-1(r) and r x s (x) y
            left = kron(a.basis_vector(x), a.multiply(a.product(s, y), thi.column(r)));
            right = kron(a.multiply(a.product(r, x), a.basis_vector(s)), a.basis_vector(y));
          }
          m.left[s * d + r].set_column(x * d + y, left);
          m.right[s * d + r].set_column(x * d + y, right);
        }
  return m;
}

}  // namespace

Report check_re_bimodule(const ReBimodule& m) {
  Report rep;
  try {
    require_shape(m);
  } catch (const Error& e) {
    rep.fail("bimodule.shape", e.what());
    return rep;
  }
  rep.pass("bimodule.shape");
  const ReBase& b = *m.base;
  const std::size_t dd = b.d * b.d;
  const Vector one = kron(b.one, b.one);
  auto act = [&](const std::vector<Matrix>& t, const Vector& c) { return lin(t, c, m.dim, b.field()); };
  const Matrix id = Matrix::identity(m.dim, b.field());
  rep.add("bimodule.left_unital", act(m.left, one) == id, "(1 (x) 1) acts nontrivially from the left");
  rep.add("bimodule.right_unital", act(m.right, one) == id, "(1 (x) 1) acts nontrivially from the right");
  json::ordered_json wl, wr, wc;
  for (std::size_t x = 0; x < dd; ++x)
    for (std::size_t y = 0; y < dd; ++y) {
      const Vector xy = b.re_product(x, y);
      if (wl.is_null() && m.left[x] * m.left[y] != act(m.left, xy)) wl = {{"x", x}, {"y", y}};
      if (wr.is_null() && m.right[y] * m.right[x] != act(m.right, xy)) wr = {{"x", x}, {"y", y}};
      if (wc.is_null() && m.left[x] * m.right[y] != m.right[y] * m.left[x]) wc = {{"x", x}, {"y", y}};
    }
  rep.add("bimodule.left_associative", wl.is_null(), wl);
  rep.add("bimodule.right_associative", wr.is_null(), wr);
  rep.add("bimodule.actions_commute", wc.is_null(), wc);
  return rep;
}

ReBimodule bimre_unit_I(const std::shared_ptr<const ReBase>& base) { return unit_module(base, false); }
ReBimodule bimre_unit_J(const std::shared_ptr<const ReBase>& base) { return unit_module(base, true); }

ReBimodule rebase_bimodule(const ReBimodule& m, const Matrix& p, const std::string& name) {
  require_shape(m);
  const Matrix pinv = inverse(p);
  ReBimodule out{m.base, m.dim, {}, {}, name};
  for (const auto& l : m.left) out.left.push_back(pinv * l * p);
  for (const auto& r : m.right) out.right.push_back(pinv * r * p);
  return out;
}

ReBimodule random_re_bimodule(const std::shared_ptr<const ReBase>& base, std::mt19937& rng, std::size_t max_dim,
                              const std::string& name) {
  const ReBase& b = *base;
  const FinAlgebra& a = b.r.algebra;
  const Field& f = b.field();
  std::uniform_int_distribution<int> small(-2, 2);
  bool commutative = true;
  for (std::size_t i = 0; i < a.dim && commutative; ++i)
    for (std::size_t j = 0; j < a.dim && commutative; ++j) commutative = a.product(i, j) == a.product(j, i);
  CharacterSearch chars;
  if (commutative) chars = find_characters(a);

  ReBimodule m;
  if (commutative && chars.characters.size() == a.dim && max_dim > 0) {
    // One-dimensional bimodules: (s (x) r) acts by chi1(s) chi2(r) from the left, chi3(s) chi4(r) from the right.
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, max_dim)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, chars.characters.size() - 1);
    const std::size_t d = b.d;
    m = ReBimodule{base, dim, std::vector<Matrix>(d * d, Matrix(dim, dim)), std::vector<Matrix>(d * d, Matrix(dim, dim)), name};
    for (std::size_t k = 0; k < dim; ++k) {
      const Vector &c1 = chars.characters[pick(rng)], &c2 = chars.characters[pick(rng)];
      const Vector &c3 = chars.characters[pick(rng)], &c4 = chars.characters[pick(rng)];
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          m.left[p * d + q](k, k) = c1[p] * c2[q];
          m.right[p * d + q](k, k) = c3[p] * c4[q];
        }
    }
  } else {
    m = bimre_unit_I(base);
    m.name = name;
  }
  // Random unitriangular change of basis times a permutation.
  const std::size_t n = m.dim;
  Matrix p = Matrix::identity(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (n <= 4 || std::uniform_int_distribution<int>(0, 7)(rng) == 0) p(i, j) = Scalar(f, small(rng));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix pm(n, n);
  for (std::size_t i = 0; i < n; ++i) pm(perm[i], i) = Scalar(f, 1);
  return rebase_bimodule(m, pm * p, name);
}

DuoidalProductObject bimre_circ(const ReBimodule& m, const ReBimodule& n) {
  require_same_base(m, n);
  return build_product(m, gens_of(m), n, gens_of(n), Flavor::Circ).obj;
}

DuoidalProductObject bimre_bullet(const ReBimodule& m, const ReBimodule& n) {
  require_same_base(m, n);
  return build_product(m, gens_of(m), n, gens_of(n), Flavor::Bullet).obj;
}

namespace {

struct Node {
  ReBimodule mod;
  Gens g;
  int kind = 0;  // 0 leaf, 1 circ, 2 bullet
  std::size_t l = 0, r = 0;
  Matrix inject_dense;
  Sparse inject, project;
  std::vector<Sparse> sleft, sright;  // sparse basis actions
};

struct BMap {
  std::size_t dom = 0, cod = 0;
  Matrix m;
  std::string name;
};

using SparseTensor = std::unordered_map<std::size_t, Scalar>;

// Objects and structure maps of bim(R^e), realised in split coordinates.
class Engine {
 public:
  explicit Engine(std::shared_ptr<const ReBase> b) : base_(std::move(b)) {
    i_ = leaf(bimre_unit_I(base_));
    j_ = leaf(bimre_unit_J(base_));
  }

  std::size_t I() const { return i_; }
  std::size_t J() const { return j_; }
  const Node& node(std::size_t k) const { return nodes_[k]; }
  const Field& field() const { return base_->field(); }
  std::size_t node_count() const { return nodes_.size(); }

  std::size_t leaf(const ReBimodule& m) {
    require_shape(m);
    if (m.base != base_) throw Error(ErrorCode::RMismatch, "sample " + m.name + " is over a different R");
    Node n;
    n.mod = m;
    n.g = gens_of(m);
    for (const auto& x : m.left) n.sleft.push_back(sparse(x));
    for (const auto& x : m.right) n.sright.push_back(sparse(x));
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
  }

  std::size_t product(Flavor fl, std::size_t a, std::size_t b) {
    const auto key = std::make_tuple(fl == Flavor::Circ ? 1 : 2, a, b);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    ProductData pd = build_product(nodes_[a].mod, nodes_[a].g, nodes_[b].mod, nodes_[b].g, fl);
    Node n;
    n.mod = pd.obj.object;
    n.g = pd.gens;
    n.kind = std::get<0>(key);
    n.l = a;
    n.r = b;
    n.inject_dense = pd.obj.inject;
    n.inject = std::move(pd.inject);
    n.project = std::move(pd.project);
    for (const auto& x : n.mod.left) n.sleft.push_back(sparse(x));
    for (const auto& x : n.mod.right) n.sright.push_back(sparse(x));
    nodes_.push_back(std::move(n));
    products_[key] = nodes_.size() - 1;
    return nodes_.size() - 1;
  }
  std::size_t circ(std::size_t a, std::size_t b) { return product(Flavor::Circ, a, b); }
  std::size_t bullet(std::size_t a, std::size_t b) { return product(Flavor::Bullet, a, b); }

  std::string name(std::size_t k) const { return nodes_[k].mod.name; }

  BMap id(std::size_t a) const { return {a, a, Matrix::identity(nodes_[a].mod.dim, field()), "1"}; }

  BMap then(const BMap& g, const BMap& f) const {
    if (f.cod != g.dom) throw Error(ErrorCode::LawFailure, "cannot compose " + g.name + " after " + f.name);
    return {f.dom, g.cod, g.m * f.m, g.name + " . " + f.name};
  }
  BMap then(const BMap& h, const BMap& g, const BMap& f) const { return then(h, then(g, f)); }

  BMap pair(Flavor fl, const BMap& f, const BMap& g) {
    const std::size_t dom = product(fl, f.dom, g.dom), cod = product(fl, f.cod, g.cod);
    const Node &nd = nodes_[dom], &nc = nodes_[cod];
    const Sparse sf = sparse(f.m), sg = sparse(g.m);
    Matrix out(nc.mod.dim, nd.mod.dim);
    for (std::size_t k = 0; k < nd.mod.dim; ++k) {
      Vector y(f.m.rows() * g.m.rows());
      kron_accumulate(y, sf, sg, nd.inject_dense.column(k));
      out.set_column(k, sparse_apply(nc.project, y));
    }
    return {dom, cod, out, "(" + f.name + (fl == Flavor::Circ ? " o " : " . ") + g.name + ")"};
  }
  BMap circ_map(const BMap& f, const BMap& g) { return pair(Flavor::Circ, f, g); }
  BMap bullet_map(const BMap& f, const BMap& g) { return pair(Flavor::Bullet, f, g); }

  // gamma((a . b) o (c . d)) = (a(e_i (x) 1) o c) . (b o (1 (x) f_i)d)
  BMap gamma(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const auto key = std::make_tuple(a, b, c, d);
    auto it = gammas_.find(key);
    if (it != gammas_.end()) return it->second;
    const std::size_t ab = bullet(a, b), cd = bullet(c, d), dom = circ(ab, cd);
    const std::size_t ac = circ(a, c), bd = circ(b, d), cod = bullet(ac, bd);
    const Node &nab = nodes_[ab], &ncd = nodes_[cd], &ndom = nodes_[dom];
    const std::size_t nb = nodes_[b].mod.dim, nc = nodes_[c].mod.dim, ndd = nodes_[d].mod.dim;
    const std::size_t dcd = ncd.mod.dim;
    Matrix out(nodes_[cod].mod.dim, ndom.mod.dim);
    for (std::size_t k = 0; k < ndom.mod.dim; ++k) {
      const Vector x = ndom.inject_dense.column(k);
      SparseTensor t;
      for (std::size_t uv = 0; uv < x.size(); ++uv) {
        if (x[uv].is_zero()) continue;
        const std::size_t u = uv / dcd, v = uv % dcd;
        for (const auto& [abi, al] : nab.inject.col[u]) {
          const Scalar xa = x[uv] * al;
          for (const auto& [cdi, be] : ncd.inject.col[v]) {
            const std::size_t ia = abi / nb, ib = abi % nb, ic = cdi / ndd, id = cdi % ndd;
            t[((ia * nb + ib) * nc + ic) * ndd + id] += xa * be;
          }
        }
      }
      out.set_column(k, gamma_tilde(a, b, c, d, t));
    }
    BMap g{dom, cod, out, "gamma"};
    record_map_check("gamma", g);
    gammas_.emplace(key, g);
    return g;
  }

  // gamma~ on a tensor in A (x) B (x) C (x) D, landing in (A o C) . (B o D).
  Vector gamma_tilde(std::size_t a, std::size_t b, std::size_t c, std::size_t d, const SparseTensor& t) {
    const std::size_t ac = circ(a, c), bd = circ(b, d), cod = bullet(ac, bd);
    const Node &na = nodes_[a], &nd = nodes_[d];
    const std::size_t nb = nodes_[b].mod.dim, nc = nodes_[c].mod.dim, ndd = nd.mod.dim;
    const ReBase& rb = *base_;
    SparseTensor s;
    for (std::size_t i = 0; i < rb.e.size(); ++i) {
      const Sparse ra = sparse(lin(na.g.rs, rb.e[i], na.mod.dim, field()));
      const Sparse ld = sparse(lin(nd.g.lr, rb.f[i], ndd, field()));
      for (const auto& [key, w] : t) {
        if (w.is_zero()) continue;
        std::size_t rest = key;
        const std::size_t id = rest % ndd;
        rest /= ndd;
        const std::size_t ic = rest % nc;
        rest /= nc;
        const std::size_t ib = rest % nb, ia = rest / nb;
        for (const auto& [ja, va] : ra.col[ia]) {
          const Scalar wa = w * va;
          for (const auto& [jd, vd] : ld.col[id]) s[(ja * nc + ic) * (nb * ndd) + (ib * ndd + jd)] += wa * vd;
        }
      }
    }
    const Node &nac = nodes_[ac], &nbd = nodes_[bd], &ncod = nodes_[cod];
    const std::size_t dbd = nbd.mod.dim, bdsz = nb * ndd;
    Vector wv(nac.mod.dim * dbd);
    for (const auto& [key, w] : s) {
      if (w.is_zero()) continue;
      const std::size_t aci = key / bdsz, bdi = key % bdsz;
      for (const auto& [k1, p1] : nac.project.col[aci]) {
        const Scalar wp = w * p1;
        for (const auto& [k2, p2] : nbd.project.col[bdi]) wv[k1 * dbd + k2] += wp * p2;
      }
    }
    return sparse_apply(ncod.project, wv);
  }

  // (A * B) * C -> A * (B * C), the identity on representatives.
  BMap alpha(Flavor fl, std::size_t a, std::size_t b, std::size_t c) {
    const std::size_t ab = product(fl, a, b), dom = product(fl, ab, c);
    const std::size_t bc = product(fl, b, c), cod = product(fl, a, bc);
    const Node &nab = nodes_[ab], &ndom = nodes_[dom], &nbc = nodes_[bc];
    const std::size_t nb = nodes_[b].mod.dim, nc = nodes_[c].mod.dim, dbc = nbc.mod.dim;
    Matrix out(nodes_[cod].mod.dim, ndom.mod.dim);
    for (std::size_t k = 0; k < ndom.mod.dim; ++k) {
      const Vector x = ndom.inject_dense.column(k);
      Vector y(nodes_[a].mod.dim * dbc);
      for (std::size_t uc = 0; uc < x.size(); ++uc) {
        if (x[uc].is_zero()) continue;
        const std::size_t u = uc / nc, ic = uc % nc;
        for (const auto& [abi, al] : nab.inject.col[u]) {
          const std::size_t ia = abi / nb, ib = abi % nb;
          const Scalar xa = x[uc] * al;
          for (const auto& [v, p] : nbc.project.col[ib * nc + ic]) y[ia * dbc + v] += xa * p;
        }
      }
      out.set_column(k, sparse_apply(nodes_[cod].project, y));
    }
    BMap m{dom, cod, out, fl == Flavor::Circ ? "alpha_o" : "alpha_."};
    record_map_check(m.name, m);
    return m;
  }

  // Maps U * A -> A (unit_first) or A * U -> A given by per-basis operators of U.
  BMap unitor(Flavor fl, std::size_t a, bool unit_first, const std::vector<Sparse>& ops, const std::string& name) {
    const std::size_t u = fl == Flavor::Circ ? i_ : j_;
    const std::size_t dom = unit_first ? product(fl, u, a) : product(fl, a, u);
    const Node& nd = nodes_[dom];
    const std::size_t na = nodes_[a].mod.dim, dd = base_->d * base_->d;
    Matrix out(na, nd.mod.dim);
    for (std::size_t k = 0; k < nd.mod.dim; ++k) {
      const Vector x = nd.inject_dense.column(k);
      Vector y(na);
      for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (x[idx].is_zero()) continue;
        const std::size_t xy = unit_first ? idx / na : idx % dd, j = unit_first ? idx % na : idx / dd;
        for (const auto& [i, v] : ops[xy].col[j]) y[i] += x[idx] * v;
      }
      out.set_column(k, y);
    }
    BMap m{dom, a, out, name};
    record_map_check(name, m);
    return m;
  }

  // The product is built first: it may grow nodes_ and move the operators.
  BMap lambda_circ(std::size_t a) {
    circ(i_, a);
    return unitor(Flavor::Circ, a, true, nodes_[a].sleft, "lambda_o");
  }
  BMap rho_circ(std::size_t a) {
    circ(a, i_);
    return unitor(Flavor::Circ, a, false, nodes_[a].sright, "rho_o");
  }
  // (x (x) y) . m -> (1 (x) theta(y)) m (1 (x) x)
  BMap lambda_bullet(std::size_t a) {
    const Node& n = nodes_[a];
    const std::size_t d = base_->d;
    std::vector<Sparse> ops;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        ops.push_back(sparse(lin(n.g.lr, base_->nakayama.theta.column(y), n.mod.dim, field()) * n.g.rr[x]));
    return unitor(Flavor::Bullet, a, true, ops, "lambda_.");
  }
  // m . (x (x) y) -> (y (x) 1) m (x (x) 1)
  BMap rho_bullet(std::size_t a) {
    const Node& n = nodes_[a];
    const std::size_t d = base_->d;
    std::vector<Sparse> ops;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) ops.push_back(sparse(n.g.ls[y] * n.g.rs[x]));
    return unitor(Flavor::Bullet, a, false, ops, "rho_.");
  }

  // (x (x) y) -> y f_i (x) x e_i
  BMap tau() {
    const ReBase& b = *base_;
    const FinAlgebra& r = b.r.algebra;
    const std::size_t d = b.d;
    Matrix out(d * d, d * d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        Vector v(d * d);
        for (std::size_t i = 0; i < b.e.size(); ++i)
          v = add(v, kron(r.multiply(r.basis_vector(y), b.f[i]), r.multiply(r.basis_vector(x), b.e[i])));
        out.set_column(x * d + y, v);
      }
    BMap m{i_, j_, out, "tau"};
    record_map_check("tau", m);
    return m;
  }

  // (x (x) y) o (p (x) q) -> psi(xq) p (x) y
  BMap mu_J() {
    const ReBase& b = *base_;
    const FinAlgebra& r = b.r.algebra;
    const std::size_t d = b.d, dd = d * d;
    const std::size_t dom = circ(j_, j_);
    const Node& nd = nodes_[dom];
    Matrix out(dd, nd.mod.dim);
    for (std::size_t k = 0; k < nd.mod.dim; ++k) {
      const Vector x = nd.inject_dense.column(k);
      Vector y(dd);
      for (std::size_t idx = 0; idx < x.size(); ++idx) {
        if (x[idx].is_zero()) continue;
        const std::size_t j1 = idx / dd, j2 = idx % dd;
        const std::size_t px = j1 / d, py = j1 % d, pp = j2 / d, pq = j2 % d;
        const Scalar c = dot(b.r.frob.psi, r.product(px, pq));
        if (!c.is_zero()) y[pp * d + py] += c * x[idx];
      }
      out.set_column(k, y);
    }
    BMap m{dom, j_, out, "mu_J"};
    record_map_check("mu_J", m);
    return m;
  }

  // (x (x) y) -> (1 (x) y) . (x (x) 1)
  BMap delta_I() {
    const ReBase& b = *base_;
    const FinAlgebra& r = b.r.algebra;
    const std::size_t d = b.d;
    const std::size_t cod = bullet(i_, i_);
    Matrix out(nodes_[cod].mod.dim, d * d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        out.set_column(x * d + y, sparse_apply(nodes_[cod].project, kron(kron(b.one, r.basis_vector(y)), kron(r.basis_vector(x), b.one))));
    BMap m{i_, cod, out, "Delta_I"};
    record_map_check("Delta_I", m);
    return m;
  }

  // f g_dom = g_cod f for every generator of R^e acting on either side.
  json::ordered_json bimodule_map_witness(const BMap& f) const {
    const Node &a = nodes_[f.dom], &b = nodes_[f.cod];
    const std::vector<Matrix>* da[4] = {&a.g.ls, &a.g.lr, &a.g.rs, &a.g.rr};
    const std::vector<Matrix>* db[4] = {&b.g.ls, &b.g.lr, &b.g.rs, &b.g.rr};
    const char* names[4] = {"left (b_p (x) 1)", "left (1 (x) b_p)", "right (b_p (x) 1)", "right (1 (x) b_p)"};
    for (int s = 0; s < 4; ++s)
      for (std::size_t p = 0; p < base_->d; ++p)
        if (f.m * (*da[s])[p] != (*db[s])[p] * f.m)
          return {{"map", f.name}, {"domain", a.mod.name}, {"action", names[s]}, {"p", p}};
    return nullptr;
  }

  void record_map_check(const std::string& name, const BMap& m) {
    auto& slot = map_checks_[name];
    ++slot.first;
    if (slot.second.is_null()) slot.second = bimodule_map_witness(m);
  }

  const std::map<std::string, std::pair<std::size_t, json::ordered_json>>& map_checks() const { return map_checks_; }

 private:
  std::shared_ptr<const ReBase> base_;
  std::deque<Node> nodes_;  // stable references while products are added
  std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> products_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, BMap> gammas_;
  std::map<std::string, std::pair<std::size_t, json::ordered_json>> map_checks_;
  std::size_t i_ = 0, j_ = 0;
};

struct Tally {
  std::size_t instances = 0;
  json::ordered_json witness;
};

void compare(Tally& t, const BMap& p, const BMap& q, const std::string& instance) {
  if (p.dom != q.dom || p.cod != q.cod)
    throw Error(ErrorCode::LawFailure, "diagram sides are not parallel: " + p.name + " vs " + q.name);
  ++t.instances;
  if (!t.witness.is_null() || p.m == q.m) return;
  for (std::size_t k = 0; k < p.m.cols(); ++k)
    if (p.m.column(k) != q.m.column(k)) {
      json::ordered_json lhs = json::ordered_json::array(), rhs = json::ordered_json::array();
      for (const auto& s : p.m.column(k)) lhs.push_back(s.str());
      for (const auto& s : q.m.column(k)) rhs.push_back(s.str());
      t.witness = {{"instance", instance}, {"basis_vector", k}, {"left", lhs}, {"right", rhs}};
      return;
    }
}

class DiagramRun {
 public:
  void run(const std::string& name, const BMap& p, const BMap& q, const std::string& inst) {
    if (!tallies_.count(name)) order_.push_back(name);
    compare(tallies_[name], p, q, inst);
  }
  void fail(const std::string& name, json::ordered_json w) {
    if (!tallies_.count(name)) order_.push_back(name);
    auto& t = tallies_[name];
    ++t.instances;
    if (t.witness.is_null()) t.witness = std::move(w);
  }
  void emit(Report& rep, json::ordered_json& coverage) const {
    for (const auto& n : order_) {
      const Tally& t = tallies_.at(n);
      rep.add(n, t.witness.is_null(), t.witness);
      coverage[n] = t.instances;
    }
  }

 private:
  std::map<std::string, Tally> tallies_;
  std::vector<std::string> order_;
};

void unit_diagrams(Engine& g, DiagramRun& run) {
  const std::size_t I = g.I(), J = g.J();
  const BMap dI = g.delta_I(), tau = g.tau(), mu = g.mu_J();
  run.run("unit.Delta_I_coassociative", g.then(g.alpha(Flavor::Bullet, I, I, I), g.bullet_map(dI, g.id(I)), dI),
          g.then(g.bullet_map(g.id(I), dI), dI), "I");
  run.run("unit.Delta_I_left_counit", g.then(g.lambda_bullet(I), g.bullet_map(tau, g.id(I)), dI), g.id(I), "I");
  run.run("unit.Delta_I_right_counit", g.then(g.rho_bullet(I), g.bullet_map(g.id(I), tau), dI), g.id(I), "I");
  run.run("unit.mu_J_associative", g.then(mu, g.circ_map(mu, g.id(J))),
          g.then(mu, g.circ_map(g.id(J), mu), g.alpha(Flavor::Circ, J, J, J)), "J");
  run.run("unit.mu_J_left_unit", g.then(mu, g.circ_map(tau, g.id(J))), g.lambda_circ(J), "J");
  run.run("unit.mu_J_right_unit", g.then(mu, g.circ_map(g.id(J), tau)), g.rho_circ(J), "J");
}

void associativity_diagrams(Engine& g, DiagramRun& run, const std::vector<std::size_t>& t, const std::string& inst) {
  const std::size_t a = t[0], b = t[1], c = t[2], d = t[3], e = t[4], f = t[5];
  const std::size_t ab = g.bullet(a, b), cd = g.bullet(c, d), ef = g.bullet(e, f);
  const std::size_t ac = g.circ(a, c), bd = g.circ(b, d), ce = g.circ(c, e), df = g.circ(d, f);
  run.run("associativity.gamma_with_alpha_o",
          g.then(g.bullet_map(g.alpha(Flavor::Circ, a, c, e), g.alpha(Flavor::Circ, b, d, f)), g.gamma(ac, bd, e, f),
                 g.circ_map(g.gamma(a, b, c, d), g.id(ef))),
          g.then(g.gamma(a, b, ce, df), g.circ_map(g.id(ab), g.gamma(c, d, e, f)), g.alpha(Flavor::Circ, ab, cd, ef)),
          inst);
  const std::size_t de = g.bullet(d, e), bc = g.bullet(b, c), ef2 = g.bullet(e, f);
  const std::size_t ad = g.circ(a, d), be = g.circ(b, e), cf = g.circ(c, f);
  run.run("associativity.gamma_with_alpha_.",
          g.then(g.alpha(Flavor::Bullet, ad, be, cf), g.bullet_map(g.gamma(a, b, d, e), g.id(cf)), g.gamma(ab, c, de, f)),
          g.then(g.bullet_map(g.id(ad), g.gamma(b, c, e, f)), g.gamma(a, bc, d, ef2),
                 g.circ_map(g.alpha(Flavor::Bullet, a, b, c), g.alpha(Flavor::Bullet, d, e, f))),
          inst);
}

void unitality_diagrams(Engine& g, DiagramRun& run, std::size_t a, std::size_t b, const std::string& inst) {
  const std::size_t I = g.I(), J = g.J();
  const std::size_t ab_b = g.bullet(a, b), ab_c = g.circ(a, b);
  const BMap dI = g.delta_I(), mu = g.mu_J();
  run.run("unitality.lambda_o", g.lambda_circ(ab_b),
          g.then(g.bullet_map(g.lambda_circ(a), g.lambda_circ(b)), g.gamma(I, I, a, b), g.circ_map(dI, g.id(ab_b))), inst);
  run.run("unitality.rho_o", g.rho_circ(ab_b),
          g.then(g.bullet_map(g.rho_circ(a), g.rho_circ(b)), g.gamma(a, b, I, I), g.circ_map(g.id(ab_b), dI)), inst);
  run.run("unitality.lambda_.", g.then(g.lambda_bullet(ab_c), g.bullet_map(mu, g.id(ab_c)), g.gamma(J, a, J, b)),
          g.circ_map(g.lambda_bullet(a), g.lambda_bullet(b)), inst);
  run.run("unitality.rho_.", g.then(g.rho_bullet(ab_c), g.bullet_map(g.id(ab_c), mu), g.gamma(a, J, b, J)),
          g.circ_map(g.rho_bullet(a), g.rho_bullet(b)), inst);
}

void naturality_diagram(Engine& g, DiagramRun& run, const std::vector<std::size_t>& t, unsigned mask,
                        const std::string& inst) {
  std::vector<BMap> fs;
  for (std::size_t i = 0; i < 4; ++i) fs.push_back((mask >> i) & 1 ? g.lambda_circ(t[i]) : g.id(t[i]));
  run.run("gamma.natural",
          g.then(g.gamma(fs[0].cod, fs[1].cod, fs[2].cod, fs[3].cod),
                 g.circ_map(g.bullet_map(fs[0], fs[1]), g.bullet_map(fs[2], fs[3]))),
          g.then(g.bullet_map(g.circ_map(fs[0], fs[2]), g.circ_map(fs[1], fs[3])),
                 g.gamma(fs[0].dom, fs[1].dom, fs[2].dom, fs[3].dom)),
          inst + " mask " + std::to_string(mask));
}

SparseTensor elementary(const std::vector<Vector>& vs, const std::vector<std::size_t>& dims) {
  SparseTensor t;
  std::vector<std::pair<std::size_t, Scalar>> acc{{0, Scalar()}};
  bool first = true;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    std::vector<std::pair<std::size_t, Scalar>> next;
    for (const auto& [idx, c] : acc)
      for (std::size_t i = 0; i < vs[k].size(); ++i)
        if (!vs[k][i].is_zero()) next.emplace_back(idx * dims[k] + i, first ? vs[k][i] : c * vs[k][i]);
    acc = std::move(next);
    first = false;
  }
  for (auto& [idx, c] : acc) t[idx] += c;
  return t;
}

// The six relations of the three tensor products gamma~ must respect.
void balancing(Engine& g, DiagramRun& run, const std::vector<std::size_t>& t, const std::shared_ptr<const ReBase>& base,
               std::mt19937& rng, std::size_t cap, const std::string& inst) {
  const std::size_t a = t[0], b = t[1], c = t[2], d = t[3];
  g.bullet(g.circ(a, c), g.circ(b, d));
  const Node &na = g.node(a), &nb = g.node(b), &nc = g.node(c), &nd = g.node(d);
  const std::vector<std::size_t> dims{na.mod.dim, nb.mod.dim, nc.mod.dim, nd.mod.dim};
  const std::size_t total = dims[0] * dims[1] * dims[2] * dims[3];
  std::vector<std::size_t> picks;
  if (total <= cap) {
    for (std::size_t k = 0; k < total; ++k) picks.push_back(k);
  } else {
    std::uniform_int_distribution<std::size_t> u(0, total - 1);
    for (std::size_t k = 0; k < cap; ++k) picks.push_back(u(rng));
  }
  const Field& f = g.field();
  const Matrix& theta = base->nakayama.theta;
  for (std::size_t k : picks) {
    std::size_t rest = k;
    const std::size_t id = rest % dims[3];
    rest /= dims[3];
    const std::size_t ic = rest % dims[2];
    rest /= dims[2];
    const std::size_t ib = rest % dims[1], ia = rest / dims[1];
    const Vector va = unit_vector(dims[0], ia, f), vb = unit_vector(dims[1], ib, f);
    const Vector vc = unit_vector(dims[2], ic, f), vd = unit_vector(dims[3], id, f);
    auto gt = [&](const Vector& x, const Vector& y, const Vector& z, const Vector& w) {
      return g.gamma_tilde(a, b, c, d, elementary({x, y, z, w}, dims));
    };
    for (std::size_t p = 0; p < base->d; ++p) {
      const Matrix th = lin(nb.g.lr, theta.column(p), dims[1], f);
      const Matrix thd = lin(nd.g.lr, theta.column(p), dims[3], f);
      const std::vector<std::pair<Vector, Vector>> rel{
          {gt(na.g.ls[p].apply(va), vb, vc, vd), gt(va, th.apply(vb), vc, vd)},
          {gt(na.g.rs[p].apply(va), vb, vc, vd), gt(va, nb.g.rr[p].apply(vb), vc, vd)},
          {gt(va, vb, nc.g.ls[p].apply(vc), vd), gt(va, vb, vc, thd.apply(vd))},
          {gt(va, vb, nc.g.rs[p].apply(vc), vd), gt(va, vb, vc, nd.g.rr[p].apply(vd))},
          {gt(va, nb.g.rs[p].apply(vb), vc, vd), gt(va, vb, vc, nd.g.ls[p].apply(vd))},
          {gt(na.g.rr[p].apply(va), vb, vc, vd), gt(va, vb, nc.g.lr[p].apply(vc), vd)},
      };
      for (std::size_t r = 0; r < rel.size(); ++r)
        if (rel[r].first != rel[r].second) {
          run.fail("gamma.balanced", {{"instance", inst}, {"relation", r + 1}, {"basis", {ia, ib, ic, id}}, {"p", p}});
          return;
        }
    }
  }
  run.fail("gamma.balanced", nullptr);
}

std::string tuple_name(const Engine& g, const std::vector<std::size_t>& t) {
  std::string s;
  for (std::size_t x : t) s += (s.empty() ? "" : ",") + g.name(x);
  return s;
}

}  // namespace

Report bimre_duoidal_suite(const std::shared_ptr<const ReBase>& base, const std::vector<ReBimodule>& samples,
                           const BimreSuiteOptions& opt) {
  Report rep;
  if (!base) throw Error(ErrorCode::DimensionMismatch, "bimre suite needs a base algebra");
  if (samples.empty()) throw Error(ErrorCode::DimensionMismatch, "bimre suite needs samples");
  for (std::size_t k = 0; k < samples.size(); ++k) rep.merge(check_re_bimodule(samples[k]), "sample" + std::to_string(k) + ".");

  DiagramRun run;
  json::ordered_json coverage = json::ordered_json::object();
  Engine g(base);
  try {
    std::vector<std::size_t> xs;
    for (const auto& s : samples) xs.push_back(g.leaf(s));
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
    auto tuples = [&](std::size_t k) {
      std::vector<std::vector<std::size_t>> out;
      for (std::size_t x : xs) out.emplace_back(k, x);
      for (std::size_t i = 0; i < opt.tuples; ++i) {
        std::vector<std::size_t> t;
        for (std::size_t j = 0; j < k; ++j) t.push_back(xs[pick(rng)]);
        out.push_back(std::move(t));
      }
      return out;
    };

    unit_diagrams(g, run);
    for (const auto& t : tuples(6)) associativity_diagrams(g, run, t, tuple_name(g, t));
    for (std::size_t a : xs)
      for (std::size_t b : xs) unitality_diagrams(g, run, a, b, tuple_name(g, {a, b}));

    std::vector<unsigned> masks;
    if (opt.naturality_masks >= 16) {
      for (unsigned m = 0; m < 16; ++m) masks.push_back(m);
    } else {
      masks.push_back(15);
      std::uniform_int_distribution<unsigned> mk(1, 14);
      while (masks.size() < std::max<std::size_t>(opt.naturality_masks, 1)) masks.push_back(mk(rng));
    }
    for (const auto& t : tuples(4)) {
      for (unsigned m : masks) naturality_diagram(g, run, t, m, tuple_name(g, t));
      balancing(g, run, t, base, rng, opt.balance_cap, tuple_name(g, t));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IdempotentFailure) throw;
    run.fail("products.idempotent", {{"error", e.what()}});
  }

  for (const auto& [name, slot] : g.map_checks()) {
    rep.add("bimodule_map." + name, slot.second.is_null(), slot.second);
    coverage["bimodule_map." + name] = slot.first;
  }
  run.emit(rep, coverage);
  rep.info()["R_dim"] = base->d;
  rep.info()["samples"] = samples.size();
  rep.info()["objects_built"] = g.node_count();
  rep.info()["coverage"] = coverage;
  return rep;
}

Report bimonoid_laws(const BimonoidInBimRe& b) {
  Report rep;
  rep.merge(check_re_bimodule(b.carrier), "carrier.");
  if (!rep.all_pass()) return rep;
  Engine g(b.carrier.base);
  const std::size_t h = g.leaf(b.carrier);
  const std::size_t hh_c = g.circ(h, h), hh_b = g.bullet(h, h);
  if (g.node(hh_c).inject_dense != b.circ.inject || g.node(hh_b).inject_dense != b.bullet.inject)
    throw Error(ErrorCode::LawFailure, "bimonoid product objects do not match the canonical splitting");
  const std::size_t I = g.I(), J = g.J();
  const std::size_t dh = b.carrier.dim, dd = b.carrier.base->d * b.carrier.base->d;
  auto shaped = [](const Matrix& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; };
  if (!shaped(b.mult, dh, g.node(hh_c).mod.dim) || !shaped(b.unit, dh, dd) || !shaped(b.comult, g.node(hh_b).mod.dim, dh) ||
      !shaped(b.counit, dd, dh))
    throw Error(ErrorCode::DimensionMismatch, "bimonoid structure map shapes");

  const BMap mu{hh_c, h, b.mult, "mult"}, eta{I, h, b.unit, "unit"};
  const BMap delta{h, hh_b, b.comult, "comult"}, eps{h, J, b.counit, "counit"};
  for (const BMap* m : {&mu, &eta, &delta, &eps}) {
    json::ordered_json w = g.bimodule_map_witness(*m);
    rep.add("bimodule_map." + m->name, w.is_null(), w);
  }
  DiagramRun run;
  run.run("monoid.associative", g.then(mu, g.circ_map(mu, g.id(h))),
          g.then(mu, g.circ_map(g.id(h), mu), g.alpha(Flavor::Circ, h, h, h)), "H");
  run.run("monoid.left_unit", g.then(mu, g.circ_map(eta, g.id(h))), g.lambda_circ(h), "H");
  run.run("monoid.right_unit", g.then(mu, g.circ_map(g.id(h), eta)), g.rho_circ(h), "H");
  run.run("comonoid.coassociative", g.then(g.alpha(Flavor::Bullet, h, h, h), g.bullet_map(delta, g.id(h)), delta),
          g.then(g.bullet_map(g.id(h), delta), delta), "H");
  run.run("comonoid.left_counit", g.then(g.lambda_bullet(h), g.bullet_map(eps, g.id(h)), delta), g.id(h), "H");
  run.run("comonoid.right_counit", g.then(g.rho_bullet(h), g.bullet_map(g.id(h), eps), delta), g.id(h), "H");
  run.run("bimonoid.Delta_mu", g.then(delta, mu),
          g.then(g.bullet_map(mu, mu), g.gamma(h, h, h, h), g.circ_map(delta, delta)), "H");
  run.run("bimonoid.eps_mu", g.then(eps, mu), g.then(g.mu_J(), g.circ_map(eps, eps)), "H");
  run.run("bimonoid.Delta_eta", g.then(delta, eta), g.then(g.bullet_map(eta, eta), g.delta_I()), "H");
  run.run("bimonoid.eps_eta", g.then(eps, eta), g.tau(), "H");
  json::ordered_json coverage;
  run.emit(rep, coverage);
  for (const auto& [name, slot] : g.map_checks())
    rep.add("structure_map." + name, slot.second.is_null(), slot.second);
  return rep;
}

BimonoidInBimRe wba_to_bimonoid(const WeakBialgebra& h) {
  require_validated(h);
  const std::size_t n = h.dim();
  const Field& f = h.field();
  const BaseAlgebra ba = base_algebra(h);
  if (!ba.report.all_pass()) throw Error(ErrorCode::LawFailure, "base algebra checks fail");
  const auto base = make_re_base(ba.r);
  const std::size_t d = base->d;
  const CounitalMaps cm = counital_matrices(h);

  BimonoidInBimRe b;
  b.labels = h.basis();
  b.unit = Matrix(n, d * d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      b.unit.set_column(p * d + q, h.alg.multiply(ba.inject.column(p), cm.piLbar.apply(ba.inject.column(q))));
  b.carrier = ReBimodule{base, n, {}, {}, "H"};
  for (std::size_t x = 0; x < d * d; ++x) {
    b.carrier.left.push_back(h.alg.left_matrix(b.unit.column(x)));
    b.carrier.right.push_back(h.alg.right_matrix(b.unit.column(x)));
  }
  b.circ = bimre_circ(b.carrier, b.carrier);
  b.bullet = bimre_bullet(b.carrier, b.carrier);

  b.mult = Matrix(n, b.circ.object.dim);
  for (std::size_t k = 0; k < b.circ.object.dim; ++k) {
    const Vector x = b.circ.inject.column(k);
    Vector y(n);
    for (std::size_t ij = 0; ij < x.size(); ++ij)
      if (!x[ij].is_zero()) axpy(y, x[ij], h.alg.product(ij / n, ij % n));
    b.mult.set_column(k, y);
  }

  b.comult = Matrix(b.bullet.object.dim, n);
  const Matrix pr = ba.project * cm.piR, prb = ba.project * cm.piRbar;
  if (ba.inject * prb != cm.piRbar) throw Error(ErrorCode::FactorizationFailure, "piRbar(H) is not inside piR(H)");
  b.counit = Matrix(d * d, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector dj = h.coalg.coproduct(h.alg.basis_vector(j));
    if (b.bullet.idempotent.apply(dj) != dj)
      throw Error(ErrorCode::FactorizationFailure, "Delta(" + h.basis()[j] + ") is not in the image of iota_.");
    b.comult.set_column(j, b.bullet.project.apply(dj));
    b.counit.set_column(j, tensor_apply(pr, prb, dj));
  }
  (void)f;
  return b;
}

WbaFromBimonoid bimonoid_to_wba(const BimonoidInBimRe& b) {
  Report laws = bimonoid_laws(b);
  if (!laws.all_pass()) {
    std::string bad;
    for (const auto& x : laws.failures()) bad += (bad.empty() ? "" : ", ") + x;
    throw Error(ErrorCode::LawFailure, "bimonoid laws fail: " + bad);
  }
  const ReBase& rb = *b.carrier.base;
  const Field& f = rb.field();
  const std::size_t n = b.carrier.dim, d = rb.d;

  WbaFromBimonoid out;
  WeakBialgebra& w = out.wba;
  w.alg.field = &f;
  w.alg.dim = n;
  w.alg.basis = b.labels.size() == n ? b.labels : std::vector<std::string>{};
  for (std::size_t i = 0; w.alg.basis.size() < n; ++i) w.alg.basis.push_back("h" + std::to_string(i));
  const Matrix mu = b.mult * b.circ.project;
  w.alg.mult.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) w.alg.mult[k] = mu.column(k);
  w.alg.unit = b.unit.apply(kron(rb.one, rb.one));

  const Matrix delta = b.bullet.inject * b.comult;
  w.coalg.dim = n;
  w.coalg.comult.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n * n; ++k)
      if (!delta(k, j).is_zero()) w.coalg.comult[j].push_back({k / n, k % n, delta(k, j)});
  const Vector psi2 = kron(rb.r.frob.psi, rb.r.frob.psi);
  w.coalg.counit.resize(n);
  for (std::size_t j = 0; j < n; ++j) w.coalg.counit[j] = dot(psi2, b.counit.column(j));

  Report axioms = check_weak_bialgebra(w);
  out.report.merge(axioms, "wba.");
  if (!axioms.all_pass()) {
    std::string bad;
    for (const auto& x : axioms.failures()) bad += (bad.empty() ? "" : ", ") + x;
    throw Error(ErrorCode::LawFailure, "resulting weak bialgebra fails: " + bad);
  }

  out.sigma = Matrix(n, d);
  for (std::size_t p = 0; p < d; ++p) out.sigma.set_column(p, b.unit.apply(kron(rb.r.algebra.basis_vector(p), rb.one)));
  const CounitalMaps cm = counital_matrices(w);
  const Matrix& s = out.sigma;
  out.report.add("sigma.lands_in_piR", cm.piR * s == s, "piR sigma != sigma");
  out.report.add("sigma.bijective_onto_piR", rank(s) == d && rank(cm.piR) == d, "rank mismatch");
  json::ordered_json wa;
  for (std::size_t p = 0; p < d && wa.is_null(); ++p)
    for (std::size_t q = 0; q < d && wa.is_null(); ++q)
      if (s.apply(rb.r.algebra.product(p, q)) != w.alg.multiply(s.column(p), s.column(q))) wa = {{"p", p}, {"q", q}};
  if (wa.is_null() && s.apply(rb.one) != w.alg.unit) wa = "sigma(1) != 1";
  out.report.add("sigma.algebra_map", wa.is_null(), wa);
  // Coalgebra of R: r -> r e_i (x) f_i, counit psi; of piR(H): x -> x 1_1 (x) piR(1_2), counit eps.
  const Vector d1 = unit_coproduct(w);
  const Vector e_h = tensor_apply(Matrix::identity(n, f), cm.piR, d1);
  json::ordered_json wc;
  for (std::size_t p = 0; p < d && wc.is_null(); ++p) {
    Vector lhs(n * n);
    for (std::size_t i = 0; i < rb.e.size(); ++i)
      lhs = add(lhs, kron(s.apply(rb.r.algebra.multiply(rb.r.algebra.basis_vector(p), rb.e[i])), s.apply(rb.f[i])));
    const Vector rhs = tensor_apply(w.alg.left_matrix(s.column(p)), Matrix::identity(n, f), e_h);
    if (lhs != rhs) wc = {{"p", p}};
    if (w.coalg.apply_counit(s.column(p)) != rb.r.frob.psi[p]) wc = {{"p", p}, {"counit", true}};
  }
  out.report.add("sigma.coalgebra_map", wc.is_null(), wc);
  return out;
}

Report duoidal_roundtrip(const WeakBialgebra& h) {
  Report rep;
  const BimonoidInBimRe b = wba_to_bimonoid(h);
  Report laws = bimonoid_laws(b);
  rep.merge(laws, "bimonoid.");
  if (!laws.all_pass()) return rep;
  WbaFromBimonoid back = bimonoid_to_wba(b);
  rep.merge(back.report, "to_wba.");
  const WeakBialgebra& w = back.wba;
  const std::size_t n = h.dim();
  rep.add("roundtrip.wba.mult", w.alg.mult == h.alg.mult, nullptr);
  rep.add("roundtrip.wba.unit", w.alg.unit == h.alg.unit, nullptr);
  bool co = true;
  for (std::size_t j = 0; j < n; ++j)
    co = co && w.coalg.coproduct(h.alg.basis_vector(j)) == h.coalg.coproduct(h.alg.basis_vector(j));
  rep.add("roundtrip.wba.comult", co, nullptr);
  rep.add("roundtrip.wba.counit", w.coalg.counit == h.coalg.counit, nullptr);

  // The other direction, compared after transporting R along sigma.
  const BimonoidInBimRe b2 = wba_to_bimonoid(w);
  const BaseAlgebra ba2 = base_algebra(w);
  const Matrix s = ba2.project * back.sigma;  // R -> R' coordinates
  const bool square = s.rows() == s.cols() && rank(s) == s.rows();
  rep.add("roundtrip.sigma_invertible", square, nullptr);
  if (!square) return rep;
  const Matrix ss = kron(s, s);
  rep.add("roundtrip.bimonoid.mult", b2.mult * b2.circ.project == b.mult * b.circ.project, nullptr);
  rep.add("roundtrip.bimonoid.comult", b2.bullet.inject * b2.comult == b.bullet.inject * b.comult, nullptr);
  rep.add("roundtrip.bimonoid.unit", b2.unit * ss == b.unit, nullptr);
  rep.add("roundtrip.bimonoid.counit", b2.counit == ss * b.counit, nullptr);
  const std::size_t dd = b.carrier.base->d * b.carrier.base->d;
  bool acts = true;
  for (std::size_t x = 0; x < dd && acts; ++x) {
    const Vector y = ss.column(x);
    Matrix l(n, n), r(n, n);
    for (std::size_t k = 0; k < y.size(); ++k)
      if (!y[k].is_zero()) {
        l = l + scale(y[k], b2.carrier.left[k]);
        r = r + scale(y[k], b2.carrier.right[k]);
      }
    acts = l == b.carrier.left[x] && r == b.carrier.right[x];
  }
  rep.add("roundtrip.bimonoid.actions", acts, nullptr);
  return rep;
}

}  // namespace wba
