#include "wba/gallery.hpp"

#include "wba/errors.hpp"

namespace wba {

WeakBialgebra torus_b(int n) {
  if (n < 1 || n > 64) throw Error(ErrorCode::UnknownName, "torus order out of range");
  return torus_b(n, Field::Qzeta(n));
}

WeakBialgebra torus_b(int n, const Field& f) {
  if (n < 1 || n > 64) throw Error(ErrorCode::UnknownName, "torus order out of range");
  const std::size_t d = static_cast<std::size_t>(n);
  WeakBialgebra b;
  b.alg.field = &f;
  b.alg.dim = d;
  for (std::size_t i = 0; i < d; ++i) b.alg.basis.push_back(i == 0 ? "1" : i == 1 ? "U" : "U^" + std::to_string(i));
  b.alg.mult.assign(d * d, Vector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) b.alg.mult[i * d + j][(i + j) % d] = Scalar(f, 1);
  b.alg.unit = unit_vector(d, 0, f);
  b.coalg.dim = d;
  b.coalg.comult.resize(d);
  const Scalar inv_n(f, 1, n);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t j = 1; j <= d; ++j) b.coalg.comult[m].push_back({(j + m) % d, (d - j % d) % d, inv_n});
  b.coalg.counit = Vector(d);
  b.coalg.counit[0] = Scalar(f, n);
  b.antipode = Matrix::identity(d, f);
  return b;
}

Vector torus_grouplike(const WeakBialgebra& b, int n, int k) {
  const Field& f = b.field();
  Vector g(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) g[static_cast<std::size_t>(j % n)] += Scalar::zeta(f, static_cast<long>(k) * j) * Scalar(f, 1, n);
  return g;
}

namespace {

WeakBialgebra validated(WeakBialgebra h) {
  Report r = check_weak_bialgebra(h);
  if (!r.all_pass()) throw Error(ErrorCode::LawFailure, "gallery member fails " + r.failures()[0]);
  return h;
}

}  // namespace

WeakBialgebra builtin_wba(const std::string& name) {
  if (name == "k2") return linearize(builtin_category("interval"));
  if (name == "dual_k2") return dual_wba(linearize(builtin_category("interval")));
  if (name == "kiso2") return linearize(builtin_category("iso2"));
  if (name == "dual_iso2") return dual_wba(linearize(builtin_category("iso2")));
  if (name == "QZ2") {
    WeakBialgebra h = linearize(builtin_category("cyclicN:2"));
    h.alg.basis = {"1", "g"};
    h.antipode = Matrix::identity(2, h.field());
    return validated(h);
  }
  if (name.rfind("torusB:", 0) == 0) {
    std::string rest = name.substr(7);
    if (rest.empty() || rest.size() > 2 || rest.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::UnknownName, "bad torus order in '" + name + "'");
    return validated(torus_b(std::stoi(rest)));
  }
  throw Error(ErrorCode::UnknownName, "unknown builtin weak bialgebra '" + name + "'");
}

std::vector<std::string> builtin_wba_names() {
  return {"k2", "dual_k2", "kiso2", "dual_iso2", "QZ2", "torusB:2", "torusB:3", "torusB:4"};
}

}  // namespace wba
