#include "wba/hopf.hpp"

#include "wba/errors.hpp"
#include "wba/functors.hpp"

namespace wba {

namespace json = nlohmann;

std::string provenance_name(Antipode::Provenance p) {
  return p == Antipode::Provenance::Solved ? "Solved" : "Supplied";
}

namespace {

// Sum over Delta^2(b_c) of coeff * f(x1, x2, x3).
template <class F>
void for_each_double_coproduct(const WeakBialgebra& h, std::size_t c, F f) {
  for (const auto& t : h.coalg.comult[c])
    for (const auto& u : h.coalg.comult[t.left]) f(u.left, u.right, t.right, t.coeff * u.coeff);
}

json::ordered_json basis_witness(const WeakBialgebra& h, std::size_t i) { return {{"basis", h.basis()[i]}}; }

Vector cubic_term(const WeakBialgebra& h, const Matrix& s, std::size_t c) {
  Vector out(h.dim());
  for_each_double_coproduct(h, c, [&](std::size_t x, std::size_t y, std::size_t z, const Scalar& k) {
    Vector v = h.alg.multiply(h.alg.multiply(s.column(x), h.alg.basis_vector(y)), s.column(z));
    axpy(out, k, v);
  });
  return out;
}

}  // namespace

Report antipode_axioms(const WeakBialgebra& h, const CounitalMaps& m, const Matrix& s) {
  require_validated(h);
  const std::size_t n = h.dim();
  if (s.rows() != n || s.cols() != n) throw Error(ErrorCode::DimensionMismatch, "antipode matrix size");
  Report rep;
  json::ordered_json wl, wr, wc;
  for (std::size_t c = 0; c < n; ++c) {
    Vector left(n), right(n);
    for (const auto& t : h.coalg.comult[c]) {
      axpy(left, t.coeff, h.alg.multiply(h.alg.basis_vector(t.left), s.column(t.right)));
      axpy(right, t.coeff, h.alg.multiply(s.column(t.left), h.alg.basis_vector(t.right)));
    }
    if (wl.is_null() && left != m.piL.column(c)) wl = basis_witness(h, c);
    if (wr.is_null() && right != m.piR.column(c)) wr = basis_witness(h, c);
    if (wc.is_null() && cubic_term(h, s, c) != s.column(c)) wc = basis_witness(h, c);
  }
  rep.add("antipode.h1_S(h2)=piL(h)", wl.is_null(), wl);
  rep.add("antipode.S(h1)_h2=piR(h)", wr.is_null(), wr);
  rep.add("antipode.S(h1)_h2_S(h3)=S(h)", wc.is_null(), wc);
  return rep;
}

Report antipode_identities(const WeakBialgebra& h, const CounitalMaps& m, const Matrix& s) {
  Report rep = antipode_axioms(h, m, s);
  const std::size_t n = h.dim();
  json::ordered_json w;
  for (std::size_t i = 0; i < n && w.is_null(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.apply(h.alg.product(i, j)) != h.alg.multiply(s.column(j), s.column(i))) {
        w = {{"basis", {h.basis()[i], h.basis()[j]}}};
        break;
      }
  rep.add("antipode.anti_multiplicative", w.is_null(), w);

  w = nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    Vector lhs = h.coalg.coproduct(s.column(i));
    Vector rhs = tensor_apply(s, s, flip(h.coalg.coproduct(h.alg.basis_vector(i)), n));
    if (lhs != rhs) {
      w = basis_witness(h, i);
      break;
    }
  }
  rep.add("antipode.anti_comultiplicative", w.is_null(), w);

  const Matrix &R = m.piR, &L = m.piL, &Rb = m.piRbar, &Lb = m.piLbar;
  struct Row {
    const char* text;
    Matrix lhs, rhs;
  };
  const Row table[] = {
      {"piR S = piR piL", R * s, R * L},    {"piR piL = S piL", R * L, s * L},
      {"piRbar S = piR", Rb * s, R},        {"piR = S piLbar", R, s * Lb},
      {"piL S = piL piR", L * s, L * R},    {"piL piR = S piR", L * R, s * R},
      {"piLbar S = piL", Lb * s, L},        {"piL = S piRbar", L, s * Rb},
  };
  w = nullptr;
  for (const auto& row : table)
    if (row.lhs != row.rhs) {
      w = {{"identity", row.text}};
      break;
    }
  rep.add("antipode.counital_table", w.is_null(), w);
  return rep;
}

AntipodeSolution solve_antipode(const WeakBialgebra& h) {
  require_validated(h);
  const std::size_t n = h.dim();
  const CounitalMaps m = counital_matrices(h);
  // Unknown S(p, c) (coefficient of b_p in S(b_c)) sits at index p*n + c.
  // Block 0, rows c*n + k: h1 S(h2) = piL(h).
  // Block 1: S(h1) h2 = piR(h).
  // Block 2: S(h) = piR(h1) S(h2). Given block 1 this is the cubic axiom,
  // since S(h1) h2 S(h3) = piR(h1) S(h2).
  const std::size_t nn = n * n;
  Matrix a(3 * nn, nn);
  Vector b(3 * nn);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& t : h.coalg.comult[c]) {
      const Vector rl = m.piR.column(t.left);
      for (std::size_t p = 0; p < n; ++p) {
        const Vector& lp = h.alg.product(t.left, p);
        const Vector& pr = h.alg.product(p, t.right);
        const Vector rp = h.alg.multiply(rl, h.alg.basis_vector(p));
        for (std::size_t k = 0; k < n; ++k) {
          if (!lp[k].is_zero()) a(c * n + k, p * n + t.right) += t.coeff * lp[k];
          if (!pr[k].is_zero()) a(nn + c * n + k, p * n + t.left) += t.coeff * pr[k];
          if (!rp[k].is_zero()) a(2 * nn + c * n + k, p * n + t.right) -= t.coeff * rp[k];
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      a(2 * nn + c * n + k, k * n + c) += Scalar(h.field(), 1);
      b[c * n + k] = m.piL(k, c);
      b[nn + c * n + k] = m.piR(k, c);
    }
  }
  AntipodeSolution out;
  AffineSolution sol = solve_affine(a, b);
  if (!sol.consistent) {
    out.reason = "antipode equations inconsistent";
    for (const auto& y : kernel_basis(a.transpose())) {
      Scalar yb = dot(y, b);
      if (yb.is_zero()) continue;
      json::ordered_json rows = json::ordered_json::array();
      for (std::size_t r = 0; r < y.size(); ++r) {
        if (y[r].is_zero()) continue;
        static const char* names[] = {"h1S(h2)=piL(h)", "S(h1)h2=piR(h)", "S(h)=piR(h1)S(h2)"};
        const std::size_t c = (r % nn) / n, k = r % n;
        rows.push_back({{"equation", names[r / nn]},
                        {"h", h.basis()[c]},
                        {"component", h.basis()[k]},
                        {"weight", y[r].str()}});
      }
      out.certificate = {{"combination", rows}, {"rhs", yb.str()}};
      break;
    }
    return out;
  }
  if (!sol.homogeneous.empty())
    throw Error(ErrorCode::AmbiguousSolutionSet,
                "antipode equations leave a " + std::to_string(sol.homogeneous.size()) + "-dimensional solution set");
  Matrix s(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t c = 0; c < n; ++c) s(p, c) = sol.particular[p * n + c];
  Report ax = antipode_axioms(h, m, s);
  if (!ax.all_pass()) {
    out.reason = "unique solution of the linear system fails the antipode axioms";
    out.certificate = {{"candidate_failure", ax.failures()}};
    return out;
  }
  out.antipode = Antipode{s, Antipode::Provenance::Solved};
  return out;
}

GaloisMap galois_map(const WeakBialgebra& h) {
  require_validated(h);
  const std::size_t n = h.dim(), nn = n * n;
  const CounitalMaps m = counital_matrices(h);
  const Vector d1 = unit_coproduct(h);
  std::vector<CoTerm> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!d1[i * n + j].is_zero()) units.push_back({i, j, d1[i * n + j]});

  Matrix e1(nn, nn), e2(nn, nn), bt(nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t col = i * n + j;
      Vector bj = h.alg.basis_vector(j);
      Vector c1(nn), c2(nn), c3(nn);
      for (const auto& t : units) {
        axpy(c1, t.coeff, kron(h.alg.product(i, t.left), h.alg.multiply(m.piR.column(t.right), bj)));
        axpy(c2, t.coeff, kron(h.alg.product(t.left, i), h.alg.product(t.right, j)));
      }
      for (const auto& t : h.coalg.comult[i]) axpy(c3, t.coeff, kron(h.alg.basis_vector(t.left), h.alg.product(t.right, j)));
      e1.set_column(col, c1);
      e2.set_column(col, c2);
      bt.set_column(col, c3);
    }

  GaloisMap g;
  Report& rep = g.report;
  const bool id1 = e1 * e1 == e1, id2 = e2 * e2 == e2;
  rep.add("galois.domain_idempotent", id1, "h (x) h' -> h1_1 (x) piR(1_2)h' is not idempotent");
  rep.add("galois.codomain_idempotent", id2, "h (x) h' -> 1_1 h (x) 1_2 h' is not idempotent");
  if (!id1 || !id2) return g;
  // h1_1 (x) piR(1_2)h' |-> h_1 (x) h_2 h' must not depend on the representative.
  rep.add("galois.well_defined", bt * e1 == bt, "h_1 (x) h_2 h' changes under h (x) h' -> h1_1 (x) piR(1_2)h'");
  rep.add("galois.lands_in_codomain", e2 * bt == bt, "h_1 (x) h_2 h' is outside 1_1 H (x) 1_2 H");
  g.domain = split_idempotent(e1);
  g.codomain = split_idempotent(e2);
  g.beta = g.codomain.project * bt * g.domain.inject;
  const std::size_t rd = g.beta.cols(), rc = g.beta.rows();
  const std::size_t rk = rank(g.beta);
  g.bijective = rd == rc && rk == rd && rep.all_pass();
  rep.info()["domain_dim"] = rd;
  rep.info()["codomain_dim"] = rc;
  rep.info()["rank"] = rk;
  return g;
}

WeakHopfVerdict is_weak_hopf(const WeakBialgebra& h) {
  require_validated(h);
  WeakHopfVerdict v;
  Report& rep = v.report;
  GaloisMap g = galois_map(h);
  rep.merge(g.report);
  const CounitalMaps m = counital_matrices(h);

  std::optional<Antipode> solved;
  bool ambiguous = false;
  try {
    AntipodeSolution sol = solve_antipode(h);
    solved = sol.antipode;
    if (!solved) rep.info()["antipode_certificate"] = sol.certificate;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AmbiguousSolutionSet) throw;
    ambiguous = true;
    rep.info()["antipode_solver"] = e.what();
  }
  rep.info()["galois_bijective"] = g.bijective;
  rep.info()["antipode_solved"] = solved.has_value();
  if (ambiguous)
    rep.fail("weak_hopf.criteria_agree", "antipode solution set is not a single point");
  else
    rep.add("weak_hopf.criteria_agree", g.bijective == solved.has_value(),
            json::ordered_json{{"galois_bijective", g.bijective}, {"antipode_solved", solved.has_value()}});

  if (h.antipode) {
    Report ax = antipode_axioms(h, m, *h.antipode);
    rep.merge(ax, "supplied.");
    bool agrees = ax.all_pass() == g.bijective && (!solved || solved->matrix == *h.antipode);
    rep.add("weak_hopf.supplied_antipode_agrees", agrees, "supplied antipode disagrees with the solved one");
    if (ax.all_pass()) v.antipode = Antipode{*h.antipode, Antipode::Provenance::Supplied};
  }
  if (!v.antipode && solved) v.antipode = solved;
  v.weak_hopf = g.bijective;
  return v;
}

namespace {

bool is_grouplike_vec(const WeakBialgebra& h, const Vector& x) { return h.coalg.coproduct(x) == kron(x, x); }

}  // namespace

Report hopf_identity_suite(const WeakBialgebra& h, const Matrix& s, bool require_axioms) {
  require_validated(h);
  const CounitalMaps m = counital_matrices(h);
  Report ax = antipode_axioms(h, m, s);
  if (require_axioms && !ax.all_pass())
    throw Error(ErrorCode::AntipodeAxiomFailure, "antipode fails " + ax.failures()[0]);
  Report rep = antipode_identities(h, m, s);
  if (!ax.all_pass()) return rep;

  GroupLikeSet gl = discover_grouplikes(h);
  rep.info()["grouplikes"] = gl.elements.size();
  rep.info()["grouplike_completeness"] = completeness_name(gl.completeness);
  const Matrix &R = m.piR, &L = m.piL, &Rb = m.piRbar, &Lb = m.piLbar;
  const Matrix s2 = s * s;
  struct Item {
    const char* name;
    json::ordered_json w;
  };
  Item items[] = {{"grouplike.piL_piR_images_grouplike", nullptr}, {"grouplike.S2_fixes_piR_piL_images", nullptr},
                  {"grouplike.piLbar=piR_and_piL=piRbar", nullptr}, {"grouplike.S2(g)=g", nullptr},
                  {"grouplike.counital_maps_of_S(g)", nullptr},      {"grouplike.bar_images_grouplike", nullptr}};
  for (std::size_t k = 0; k < gl.elements.size(); ++k) {
    const Vector& g = gl.elements[k];
    const Vector rg = R.apply(g), lg = L.apply(g), rbg = Rb.apply(g), lbg = Lb.apply(g), sg = s.apply(g);
    const bool ok[] = {
        is_grouplike_vec(h, lg) && is_grouplike_vec(h, rg),
        s2.apply(rg) == rg && s2.apply(lg) == lg,
        lbg == rg && lg == rbg,
        s2.apply(g) == g,
        R.apply(sg) == rbg && Rb.apply(sg) == rg && L.apply(sg) == lbg && Lb.apply(sg) == lg,
        is_grouplike_vec(h, lbg) && is_grouplike_vec(h, rbg),
    };
    for (std::size_t i = 0; i < 6; ++i)
      if (!ok[i] && items[i].w.is_null()) items[i].w = {{"grouplike", gl.labels[k]}};
  }
  for (auto& it : items) rep.add(it.name, it.w.is_null(), it.w);
  return rep;
}

}  // namespace wba
