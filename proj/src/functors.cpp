#include "wba/functors.hpp"

#include "wba/errors.hpp"

namespace wba {

namespace json = nlohmann;

WeakBialgebra linearize(const FiniteCategory& a, const Field& f) {
  if (!validate_category(a).all_pass()) throw Error(ErrorCode::LawFailure, "linearize needs a valid category");
  const std::size_t n = a.size();
  WeakBialgebra h;
  h.alg.field = &f;
  h.alg.dim = n;
  for (const auto& m : a.morphisms) h.alg.basis.push_back(m.name);
  h.alg.mult.assign(n * n, Vector(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < n; ++k)
      if (auto gk = a.composite(g, k)) h.alg.mult[g * n + k][*gk] = Scalar(f, 1);
  h.alg.unit = Vector(n);
  for (std::size_t id : a.identities) h.alg.unit[id] = Scalar(f, 1);
  h.coalg.dim = n;
  h.coalg.comult.resize(n);
  for (std::size_t g = 0; g < n; ++g) h.coalg.comult[g].push_back({g, g, Scalar(f, 1)});
  h.coalg.counit.assign(n, Scalar(f, 1));

  Report rep = check_weak_bialgebra(h);
  if (!rep.all_pass()) throw Error(ErrorCode::LawFailure, "linearized category fails " + rep.failures()[0]);
  CounitalMaps m = counital_matrices(h);
  for (std::size_t g = 0; g < n; ++g) {
    const Morphism& mg = a.morphisms[g];
    if (m.piR.column(g) != h.alg.basis_vector(a.identities[mg.src]) ||
        m.piRbar.column(g) != h.alg.basis_vector(a.identities[mg.tgt]))
      throw Error(ErrorCode::LawFailure, "piR / piRbar differ from source / target at " + mg.name);
  }
  return h;
}

std::string completeness_name(Completeness c) {
  switch (c) {
    case Completeness::CompleteOverQ: return "CompleteOverQ";
    case Completeness::CertifiedByDimension: return "CertifiedByDimension";
    case Completeness::NotCertified: return "NotCertified";
  }
  return "";
}

namespace {

bool is_grouplike(const WeakBialgebra& h, const Vector& x) {
  return h.coalg.apply_counit(x).is_one() && h.coalg.coproduct(x) == kron(x, x);
}

std::optional<std::size_t> find_vector(const std::vector<Vector>& vs, const Vector& x) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == x) return i;
  return std::nullopt;
}

}  // namespace

GroupLikeSet discover_grouplikes(const WeakBialgebra& h) {
  require_validated(h);
  const std::size_t n = h.dim();
  // The convolution algebra H*: b*_p b*_q = sum_r c^r_pq b*_r, unit eps.
  FinAlgebra c;
  c.field = &h.field();
  c.dim = n;
  c.basis = h.basis();
  c.mult.assign(n * n, Vector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& t : h.coalg.comult[r]) c.mult[t.left * n + t.right][r] += t.coeff;
  c.unit = h.coalg.counit;

  CharacterSearch cs = find_characters(c);
  GroupLikeSet out;
  for (const auto& lambda : cs.characters) {
    // lambda(b*_i) is the b_i-coefficient of the group-like.
    if (!is_grouplike(h, lambda)) throw Error(ErrorCode::LawFailure, "character of H* is not group-like");
    if (find_vector(out.elements, lambda)) continue;
    out.elements.push_back(lambda);
  }
  if (!out.elements.empty() && rank(Matrix::from_columns(out.elements, n)) != out.elements.size())
    throw Error(ErrorCode::LawFailure, "group-likes are linearly dependent");
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    std::string label = "g" + std::to_string(k);
    for (std::size_t i = 0; i < n; ++i)
      if (out.elements[k] == h.alg.basis_vector(i)) label = h.basis()[i];
    out.labels.push_back(label);
  }
  if (h.field().kind() == Field::Kind::Rationals)
    out.completeness = Completeness::CompleteOverQ;
  else
    out.completeness = out.elements.size() == n ? Completeness::CertifiedByDimension : Completeness::NotCertified;
  return out;
}

namespace {

std::optional<Matrix> weak_hopf_antipode(const WeakBialgebra& h) {
  if (h.antipode && antipode_axioms(h, counital_matrices(h), *h.antipode).all_pass()) return *h.antipode;
  WeakHopfVerdict v = is_weak_hopf(h);
  if (v.weak_hopf && v.antipode) return v.antipode->matrix;
  return std::nullopt;
}

}  // namespace

GCategory g_category(const WeakBialgebra& h) {
  require_validated(h);
  GCategory out;
  out.grouplikes = discover_grouplikes(h);
  const GroupLikeSet& gl = out.grouplikes;
  const CounitalMaps m = counital_matrices(h);
  Report& rep = out.report;
  FiniteCategory& cat = out.cat;

  auto grouplike_coproduct = [&](const Vector& x) { return h.coalg.coproduct(x) == kron(x, x); };
  std::vector<std::size_t> admissible;
  for (std::size_t k = 0; k < gl.elements.size(); ++k) {
    const Vector& g = gl.elements[k];
    if (grouplike_coproduct(m.piR.apply(g)) && grouplike_coproduct(m.piRbar.apply(g))) admissible.push_back(k);
  }
  for (std::size_t k : admissible) {
    out.carrier.push_back(gl.elements[k]);
    cat.morphisms.push_back({gl.labels[k], 0, 0});
  }
  // Objects: the group-likes fixed by piR.
  for (std::size_t i = 0; i < out.carrier.size(); ++i)
    if (m.piR.apply(out.carrier[i]) == out.carrier[i]) {
      cat.objects.push_back(cat.morphisms[i].name);
      cat.identities.push_back(i);
    }
  auto object_of = [&](const Vector& x) -> std::size_t {
    for (std::size_t o = 0; o < cat.objects.size(); ++o)
      if (out.carrier[cat.identities[o]] == x) return o;
    throw Error(ErrorCode::ClosureFailure, "piR or piRbar of an element of g(H) is not an object");
  };
  for (std::size_t i = 0; i < out.carrier.size(); ++i) {
    cat.morphisms[i].src = object_of(m.piR.apply(out.carrier[i]));
    cat.morphisms[i].tgt = object_of(m.piRbar.apply(out.carrier[i]));
  }
  const std::size_t nm = cat.size();
  cat.compose.assign(nm * nm, std::nullopt);
  json::ordered_json st;
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t k = 0; k < nm; ++k) {
      if (cat.morphisms[g].src != cat.morphisms[k].tgt) continue;
      Vector p = h.alg.multiply(out.carrier[g], out.carrier[k]);
      auto idx = find_vector(out.carrier, p);
      if (!idx) throw Error(ErrorCode::ClosureFailure, "product " + cat.morphisms[g].name + "." + cat.morphisms[k].name +
                                                           " is not in g(H)");
      cat.compose[g * nm + k] = *idx;
      if (st.is_null() && (m.piR.apply(p) != m.piR.apply(out.carrier[k]) ||
                           m.piRbar.apply(p) != m.piRbar.apply(out.carrier[g])))
        st = {{"pair", {cat.morphisms[g].name, cat.morphisms[k].name}}};
    }
  rep.add("g.source_target_of_products", st.is_null(), st);

  if (auto s = weak_hopf_antipode(h)) {
    std::vector<std::size_t> inv;
    for (std::size_t g = 0; g < nm; ++g) {
      auto idx = find_vector(out.carrier, s->apply(out.carrier[g]));
      if (!idx) throw Error(ErrorCode::ClosureFailure, "S(" + cat.morphisms[g].name + ") is not in g(H)");
      inv.push_back(*idx);
    }
    cat.inverse = inv;
    rep.merge(validate_groupoid(cat), "g.");
  } else {
    rep.merge(validate_category(cat), "g.");
  }
  rep.info()["grouplikes"] = gl.elements.size();
  rep.info()["admissible"] = nm;
  rep.info()["filter_is_proper"] = nm != gl.elements.size();
  rep.info()["completeness"] = completeness_name(gl.completeness);
  if (gl.completeness == Completeness::NotCertified)
    rep.info()["warning"] = "group-like discovery is not certified complete";
  return out;
}

CatFunctor adjunction_phi(const Matrix& q, const FiniteCategory& a, const WeakBialgebra& ka, const WeakBialgebra& h,
                          const GCategory& g) {
  Report mr = is_wba_morphism(q, ka, h);
  if (!mr.all_pass()) throw Error(ErrorCode::MorphismCheckFailed, "not a wba morphism: " + mr.failures()[0]);
  CatFunctor f;
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto idx = find_vector(g.carrier, q.column(k));
    if (!idx) throw Error(ErrorCode::MorphismCheckFailed, "image of " + a.morphisms[k].name + " is not in g(H)");
    f.on_morphisms.push_back(*idx);
  }
  for (std::size_t x = 0; x < a.objects.size(); ++x) {
    std::size_t img = f.on_morphisms[a.identities[x]];
    std::optional<std::size_t> obj;
    for (std::size_t o = 0; o < g.cat.objects.size(); ++o)
      if (g.cat.identities[o] == img) obj = o;
    if (!obj) throw Error(ErrorCode::MorphismCheckFailed, "identity of " + a.objects[x] + " is not sent to an object");
    f.on_objects.push_back(*obj);
  }
  if (!is_functor(f, a, g.cat)) throw Error(ErrorCode::MorphismCheckFailed, "restriction is not a functor");
  return f;
}

Matrix adjunction_phi_inverse(const CatFunctor& f, const FiniteCategory& a, const WeakBialgebra& ka,
                              const WeakBialgebra& h, const GCategory& g) {
  if (!is_functor(f, a, g.cat)) throw Error(ErrorCode::NotAFunctor, "not a functor into g(H)");
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < a.size(); ++k) cols.push_back(g.carrier[f.on_morphisms[k]]);
  Matrix q = Matrix::from_columns(cols, h.dim());
  Report mr = is_wba_morphism(q, ka, h);
  if (!mr.all_pass()) throw Error(ErrorCode::MorphismCheckFailed, "linear extension fails " + mr.failures()[0]);
  return q;
}

AdjunctionCount adjunction_check(const FiniteCategory& a, const WeakBialgebra& h) {
  const WeakBialgebra ka = linearize(a, h.field());
  const GCategory g = g_category(h);
  AdjunctionCount out;

  // Right side: functors A -> g(H), pushed through phi^-1.
  const std::vector<CatFunctor> functors = enumerate_functors(a, g.cat);
  out.functors = functors.size();
  std::vector<Matrix> images;
  for (const auto& f : functors) {
    try {
      Matrix q = adjunction_phi_inverse(f, a, ka, h, g);
      if (adjunction_phi(q, a, ka, h, g) != f) out.round_trips = false;
      for (const auto& prev : images)
        if (prev == q) out.phi_injective = false;
      images.push_back(std::move(q));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MorphismCheckFailed) throw;
      out.phi_inverse_lands = false;
    }
  }

  // Left side, independently: a coalgebra map sends each morphism of A to a
  // group-like, so wba(kA, H) is searched over all assignments of group-likes.
  const auto& gls = g.grouplikes.elements;
  const std::size_t n = a.size();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n && space != 0; ++i) {
    space *= gls.size();
    if (space > kDefaultFunctorBound) throw Error(ErrorCode::SearchSpaceTooLarge, "wba morphism search too large");
  }
  if (gls.empty() && n > 0) return out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < n; ++k) cols.push_back(gls[pick[k]]);
    Matrix q = Matrix::from_columns(cols, h.dim());
    if (is_wba_morphism(q, ka, h).all_pass()) {
      ++out.wba_morphisms;
      try {
        CatFunctor f = adjunction_phi(q, a, ka, h, g);
        if (adjunction_phi_inverse(f, a, ka, h, g) != q) out.round_trips = false;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::MorphismCheckFailed) throw;
        out.round_trips = false;
      }
    }
    std::size_t k = 0;
    while (k < n && ++pick[k] == gls.size()) pick[k++] = 0;
    if (k == n) break;
  }
  return out;
}

Report counit_analysis(const WeakBialgebra& h) {
  require_validated(h);
  const GCategory g = g_category(h);
  Report rep;
  rep.merge(g.report);
  const std::size_t n = h.dim(), d = g.cat.size();
  rep.info()["dim_H"] = n;
  rep.info()["dim_kgH"] = d;
  Matrix counit(n, 0);
  if (d > 0) {
    const WeakBialgebra kg = linearize(g.cat, h.field());
    counit = adjunction_phi_inverse(identity_functor(g.cat), g.cat, kg, h, g);
    rep.pass("counit.is_wba_morphism");
  }
  const std::size_t rk = d == 0 ? 0 : rank(counit);
  rep.info()["counit_rank"] = rk;
  rep.add("counit.injective", rk == d, "elements of g(H) are linearly dependent");
  const bool iso = d == n && rk == n;
  // Pointed cosemisimple: H is spanned by g(H).
  const bool pointed_cosemisimple = rk == n;
  rep.add("counit.iso_iff_pointed_cosemisimple", iso == pointed_cosemisimple,
          json::ordered_json{{"iso", iso}, {"pointed_cosemisimple", pointed_cosemisimple}});
  std::string verdict;
  if (iso) {
    verdict = "iso";
  } else if (g.grouplikes.completeness != Completeness::NotCertified) {
    verdict = "not-iso";
  } else if (!is_cocommutative(h)) {
    // A coalgebra spanned by group-likes is cocommutative.
    verdict = "not-iso (certified)";
  } else {
    verdict = "unknown";
  }
  rep.info()["verdict"] = verdict;
  return rep;
}

Report cocommutative_grouplike_check(const WeakBialgebra& h) {
  require_validated(h);
  if (!is_cocommutative(h)) throw Error(ErrorCode::NotCocommutative, "weak bialgebra is not cocommutative");
  const GCategory g = g_category(h);
  Report rep;
  const std::size_t all = g.grouplikes.elements.size(), adm = g.cat.size();
  rep.add("grouplike.g(H)_is_all_grouplikes", all == adm,
          json::ordered_json{{"grouplikes", all}, {"admissible", adm}});
  rep.info()["grouplikes"] = all;
  return rep;
}

Report grouplike_identities(const WeakBialgebra& h, const GCategory& g) {
  require_validated(h);
  const CounitalMaps m = counital_matrices(h);
  const Matrix &R = m.piR, &L = m.piL, &Rb = m.piRbar, &Lb = m.piLbar;
  auto mul = [&](const Vector& x, const Vector& y) { return h.alg.multiply(x, y); };
  auto idem = [&](const Vector& x) { return mul(x, x) == x; };
  json::ordered_json w1, w2, w3;
  const auto& gl = g.grouplikes;
  for (std::size_t k = 0; k < gl.elements.size(); ++k) {
    const Vector& x = gl.elements[k];
    const Vector rx = R.apply(x), lx = L.apply(x), rbx = Rb.apply(x), lbx = Lb.apply(x);
    if (w1.is_null() && (mul(x, rx) != x || mul(rbx, x) != x || mul(lx, x) != x || mul(x, lbx) != x))
      w1 = {{"grouplike", gl.labels[k]}};
    if (w2.is_null() && !(idem(rx) && idem(rbx) && idem(lx) && idem(lbx))) w2 = {{"grouplike", gl.labels[k]}};
    if (w3.is_null() && find_vector(g.carrier, x) && (R.apply(lx) != rbx || L.apply(rx) != lbx))
      w3 = {{"grouplike", gl.labels[k]}};
  }
  Report rep;
  rep.add("grouplike.absorbs_counital_images", w1.is_null(), w1);
  rep.add("grouplike.counital_images_idempotent", w2.is_null(), w2);
  rep.add("grouplike.piR_piL=piRbar_on_g(H)", w3.is_null(), w3);
  return rep;
}

}  // namespace wba
