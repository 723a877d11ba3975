#include "wba/span.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "wba/errors.hpp"

namespace wba {

namespace json = nlohmann;

Span span_unit_I(const std::vector<std::string>& base) {
  Span a{base, base, {}, {}, "I"};
  for (std::size_t x = 0; x < base.size(); ++x) {
    a.s.push_back(x);
    a.t.push_back(x);
  }
  return a;
}

Span span_unit_J(const std::vector<std::string>& base) {
  Span a{base, {}, {}, {}, "J"};
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y) {
      a.carrier.push_back("(" + base[x] + "," + base[y] + ")");
      a.s.push_back(x);
      a.t.push_back(y);
    }
  return a;
}

Span span_of_category(const FiniteCategory& c) {
  Span a{c.objects, {}, {}, {}, "mor"};
  for (const auto& m : c.morphisms) {
    a.carrier.push_back(m.name);
    a.s.push_back(m.src);
    a.t.push_back(m.tgt);
  }
  return a;
}

Span random_span(std::mt19937& rng, const std::vector<std::string>& base, std::size_t max_carrier,
                 const std::string& name) {
  if (base.empty() || max_carrier == 0) throw Error(ErrorCode::DimensionMismatch, "random_span: empty base or carrier");
  std::uniform_int_distribution<std::size_t> size_dist(1, max_carrier), pt(0, base.size() - 1);
  Span a{base, {}, {}, {}, name};
  const std::size_t n = size_dist(rng);
  for (std::size_t i = 0; i < n; ++i) {
    a.carrier.push_back(name + "." + std::to_string(i));
    a.s.push_back(pt(rng));
    a.t.push_back(pt(rng));
  }
  return a;
}

bool span_is_valid(const Span& a) {
  if (a.s.size() != a.carrier.size() || a.t.size() != a.carrier.size()) return false;
  for (std::size_t i = 0; i < a.carrier.size(); ++i)
    if (a.s[i] >= a.base.size() || a.t[i] >= a.base.size()) return false;
  return true;
}

namespace {

void require_same_base(const Span& a, const Span& b) {
  if (!span_is_valid(a) || !span_is_valid(b)) throw Error(ErrorCode::DimensionMismatch, "malformed span");
  if (a.base != b.base) throw Error(ErrorCode::BaseMismatch, "spans " + a.name + " and " + b.name + " over different sets");
}

SpanProduct product(const Span& a, const Span& b, bool circ) {
  require_same_base(a, b);
  SpanProduct p;
  p.span.base = a.base;
  p.span.name = "(" + a.name + (circ ? " o " : " . ") + b.name + ")";
  for (std::size_t i = 0; i < a.carrier.size(); ++i)
    for (std::size_t j = 0; j < b.carrier.size(); ++j) {
      const bool in = circ ? a.s[i] == b.t[j] : (a.s[i] == b.s[j] && a.t[i] == b.t[j]);
      if (!in) continue;
      p.pairs.emplace_back(i, j);
      p.span.carrier.push_back("(" + a.carrier[i] + "," + b.carrier[j] + ")");
      p.span.s.push_back(circ ? b.s[j] : a.s[i]);
      p.span.t.push_back(a.t[i]);
    }
  return p;
}

// Objects built from leaf spans by o and ., with elements stored as the flat
// tuple of their leaf components.
using Flat = std::vector<std::size_t>;
enum class Kind { Leaf, Circ, Bullet };
struct Expr;
using E = std::shared_ptr<const Expr>;
struct Expr {
  Kind kind = Kind::Leaf;
  const Span* leaf = nullptr;
  E l, r;
  std::size_t leaves = 1;
  std::string name;
};

E leaf(const Span& s) {
  auto e = std::make_shared<Expr>();
  e->leaf = &s;
  e->name = s.name;
  return e;
}

E node(Kind k, E a, E b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->leaves = a->leaves + b->leaves;
  e->name = "(" + a->name + (k == Kind::Circ ? " o " : " . ") + b->name + ")";
  e->l = std::move(a);
  e->r = std::move(b);
  return e;
}
E circ(E a, E b) { return node(Kind::Circ, std::move(a), std::move(b)); }
E bullet(E a, E b) { return node(Kind::Bullet, std::move(a), std::move(b)); }

bool same(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Kind::Leaf) return a.leaf == b.leaf;
  return same(*a.l, *b.l) && same(*a.r, *b.r);
}

std::size_t src(const Expr& e, const Flat& x, std::size_t off) {
  switch (e.kind) {
    case Kind::Leaf: return e.leaf->s[x[off]];
    case Kind::Circ: return src(*e.r, x, off + e.l->leaves);
    default: return src(*e.l, x, off);
  }
}

std::size_t tgt(const Expr& e, const Flat& x, std::size_t off) {
  return e.kind == Kind::Leaf ? e.leaf->t[x[off]] : tgt(*e.l, x, off);
}

bool member(const Expr& e, const Flat& x, std::size_t off) {
  if (e.kind == Kind::Leaf) return x[off] < e.leaf->carrier.size();
  const std::size_t roff = off + e.l->leaves;
  if (!member(*e.l, x, off) || !member(*e.r, x, roff)) return false;
  if (e.kind == Kind::Circ) return src(*e.l, x, off) == tgt(*e.r, x, roff);
  return src(*e.l, x, off) == src(*e.r, x, roff) && tgt(*e.l, x, off) == tgt(*e.r, x, roff);
}

bool member(const Expr& e, const Flat& x) { return x.size() == e.leaves && member(e, x, 0); }

std::vector<Flat> elements(const Expr& e) {
  std::vector<Flat> out;
  if (e.kind == Kind::Leaf) {
    for (std::size_t i = 0; i < e.leaf->carrier.size(); ++i) out.push_back({i});
    return out;
  }
  const auto left = elements(*e.l), right = elements(*e.r);
  for (const auto& a : left)
    for (const auto& b : right) {
      Flat x = a;
      x.insert(x.end(), b.begin(), b.end());
      if (member(e, x)) out.push_back(std::move(x));
    }
  return out;
}

void leaf_spans(const Expr& e, std::vector<const Span*>& out) {
  if (e.kind == Kind::Leaf) {
    out.push_back(e.leaf);
    return;
  }
  leaf_spans(*e.l, out);
  leaf_spans(*e.r, out);
}

json::ordered_json labels(const Expr& e, const Flat& x) {
  std::vector<const Span*> ls;
  leaf_spans(e, ls);
  json::ordered_json out = json::ordered_json::array();
  for (std::size_t i = 0; i < x.size(); ++i)
    out.push_back(i < ls.size() && x[i] < ls[i]->carrier.size() ? json::ordered_json(ls[i]->carrier[x[i]])
                                                                : json::ordered_json(x[i]));
  return out;
}

struct Map {
  E dom, cod;
  std::function<Flat(const Flat&)> f;
  std::string name;
};

struct MapFailure {
  std::string map, what;
  json::ordered_json input, output;
};

// Applies m and checks that the image is an element of the codomain with the
// same source and target, i.e. that m acts as a morphism of spans here.
Flat eval_map(const Map& m, const Flat& x) {
  Flat y = m.f(x);
  if (!member(*m.cod, y)) throw MapFailure{m.name, "image not in " + m.cod->name, labels(*m.dom, x), labels(*m.cod, y)};
  if (src(*m.dom, x, 0) != src(*m.cod, y, 0) || tgt(*m.dom, x, 0) != tgt(*m.cod, y, 0))
    throw MapFailure{m.name, "source or target not preserved", labels(*m.dom, x), labels(*m.cod, y)};
  return y;
}

Map then(const Map& g, const Map& f) {
  if (!same(*f.cod, *g.dom))
    throw Error(ErrorCode::LawFailure, "cannot compose " + g.name + " after " + f.name);
  return {f.dom, g.cod, [g, f](const Flat& x) { return eval_map(g, eval_map(f, x)); }, g.name + " . " + f.name};
}

Map then(const Map& h, const Map& g, const Map& f) { return then(h, then(g, f)); }

Map pair_map(Kind k, const Map& f, const Map& g) {
  const std::size_t cut = f.dom->leaves;
  return {node(k, f.dom, g.dom), node(k, f.cod, g.cod),
          [f, g, cut](const Flat& x) {
            Flat a(x.begin(), x.begin() + cut), b(x.begin() + cut, x.end());
            Flat y = eval_map(f, a);
            Flat z = eval_map(g, b);
            y.insert(y.end(), z.begin(), z.end());
            return y;
          },
          "(" + f.name + (k == Kind::Circ ? " o " : " . ") + g.name + ")"};
}
Map circ_map(const Map& f, const Map& g) { return pair_map(Kind::Circ, f, g); }
Map bullet_map(const Map& f, const Map& g) { return pair_map(Kind::Bullet, f, g); }

Map id(const E& a) {
  return {a, a, [](const Flat& x) { return x; }, "1_" + a->name};
}

// Reorders the flat tuple; `order` lists the argument blocks in output order.
Map shuffle(E dom, E cod, std::vector<std::size_t> block_sizes, std::vector<std::size_t> order, std::string name) {
  return {std::move(dom), std::move(cod),
          [block_sizes, order](const Flat& x) {
            std::vector<std::size_t> start(block_sizes.size(), 0);
            for (std::size_t i = 1; i < block_sizes.size(); ++i) start[i] = start[i - 1] + block_sizes[i - 1];
            Flat y;
            for (std::size_t b : order) y.insert(y.end(), x.begin() + start[b], x.begin() + start[b] + block_sizes[b]);
            return y;
          },
          std::move(name)};
}

Map gamma(const E& a, const E& b, const E& c, const E& d) {
  return shuffle(circ(bullet(a, b), bullet(c, d)), bullet(circ(a, c), circ(b, d)),
                 {a->leaves, b->leaves, c->leaves, d->leaves}, {0, 2, 1, 3}, "gamma");
}

Map alpha(Kind k, const E& a, const E& b, const E& c) {
  return {node(k, node(k, a, b), c), node(k, a, node(k, b, c)), [](const Flat& x) { return x; },
          k == Kind::Circ ? "alpha_o" : "alpha_."};
}

Map drop(E dom, E cod, std::size_t first, std::size_t last, std::string name) {
  return {std::move(dom), std::move(cod),
          [first, last](const Flat& x) { return Flat(x.begin() + first, x.end() - last); }, std::move(name)};
}

struct Units {
  E I, J;
  std::size_t n;

  Map lambda_circ(const E& a) const { return drop(circ(I, a), a, 1, 0, "lambda_o"); }
  Map rho_circ(const E& a) const { return drop(circ(a, I), a, 0, 1, "rho_o"); }
  Map lambda_bullet(const E& a) const { return drop(bullet(J, a), a, 1, 0, "lambda_."); }
  Map rho_bullet(const E& a) const { return drop(bullet(a, J), a, 0, 1, "rho_."); }
  Map delta_I() const {
    return {I, bullet(I, I), [](const Flat& x) { return Flat{x[0], x[0]}; }, "Delta_I"};
  }
  // The unique map to the terminal object J.
  Map to_J(const E& a, std::string name) const {
    const std::size_t m = n;
    return {a, J, [a, m](const Flat& x) { return Flat{src(*a, x, 0) * m + tgt(*a, x, 0)}; }, std::move(name)};
  }
  Map mu_J() const { return to_J(circ(J, J), "mu_J"); }
  Map tau() const { return to_J(I, "tau"); }
};

// Compares two parallel composites on every element of their domain.
struct DiagramTally {
  std::size_t instances = 0, elements = 0;
  json::ordered_json witness;
};

void compare(DiagramTally& tally, const Map& p, const Map& q, const std::string& instance) {
  if (!same(*p.dom, *q.dom) || !same(*p.cod, *q.cod))
    throw Error(ErrorCode::LawFailure, "diagram sides are not parallel: " + p.name + " vs " + q.name);
  ++tally.instances;
  for (const auto& x : elements(*p.dom)) {
    ++tally.elements;
    if (!tally.witness.is_null()) return;
    try {
      Flat y = eval_map(p, x), z = eval_map(q, x);
      if (y != z)
        tally.witness = {{"instance", instance},
                         {"element", labels(*p.dom, x)},
                         {"left", labels(*p.cod, y)},
                         {"right", labels(*q.cod, z)}};
    } catch (const MapFailure& f) {
      tally.witness = {{"instance", instance}, {"map", f.map}, {"problem", f.what}, {"element", f.input}, {"image", f.output}};
    }
  }
}

std::string tuple_name(const std::vector<E>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + x->name;
  return s;
}

}  // namespace

SpanProduct span_circ(const Span& a, const Span& b) { return product(a, b, true); }
SpanProduct span_bullet(const Span& a, const Span& b) { return product(a, b, false); }

Report span_duoidal_suite(const std::vector<std::string>& base, const std::vector<Span>& samples,
                          const SpanSuiteOptions& opt) {
  if (base.empty()) throw Error(ErrorCode::DimensionMismatch, "span suite needs a nonempty base");
  const Span si = span_unit_I(base), sj = span_unit_J(base);
  for (const auto& s : samples) require_same_base(s, si);
  const Units u{leaf(si), leaf(sj), base.size()};
  std::vector<E> xs;
  for (const auto& s : samples) xs.push_back(leaf(s));
  if (xs.empty()) throw Error(ErrorCode::DimensionMismatch, "span suite needs samples");

  std::map<std::string, DiagramTally> tallies;
  std::vector<std::string> order;
  auto run = [&](const std::string& name, const Map& p, const Map& q, const std::string& inst) {
    if (!tallies.count(name)) order.push_back(name);
    compare(tallies[name], p, q, inst);
  };

  // Unit compatibility: (I, Delta_I, tau) a comonoid, (J, mu_J, tau) a monoid.
  const E I = u.I, J = u.J;
  const Map dI = u.delta_I(), tau = u.tau(), mu = u.mu_J();
  run("unit.Delta_I_coassociative", then(alpha(Kind::Bullet, I, I, I), bullet_map(dI, id(I)), dI),
      then(bullet_map(id(I), dI), dI), "I");
  run("unit.Delta_I_left_counit", then(u.lambda_bullet(I), bullet_map(tau, id(I)), dI), id(I), "I");
  run("unit.Delta_I_right_counit", then(u.rho_bullet(I), bullet_map(id(I), tau), dI), id(I), "I");
  run("unit.mu_J_associative", then(mu, circ_map(mu, id(J))), then(mu, circ_map(id(J), mu), alpha(Kind::Circ, J, J, J)),
      "J");
  run("unit.mu_J_left_unit", then(mu, circ_map(tau, id(J))), u.lambda_circ(J), "J");
  run("unit.mu_J_right_unit", then(mu, circ_map(id(J), tau)), u.rho_circ(J), "J");

  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  auto tuples = [&](std::size_t k) {
    std::vector<std::vector<E>> out;
    for (const auto& x : xs) out.emplace_back(k, x);
    for (std::size_t i = 0; i < opt.tuples; ++i) {
      std::vector<E> t;
      for (std::size_t j = 0; j < k; ++j) t.push_back(xs[pick(rng)]);
      out.push_back(std::move(t));
    }
    return out;
  };

  for (const auto& t : tuples(6)) {
    const E &a = t[0], &b = t[1], &c = t[2], &d = t[3], &e = t[4], &f = t[5];
    const std::string inst = tuple_name(t);
    const Map ac = alpha(Kind::Circ, a, c, e), bd = alpha(Kind::Circ, b, d, f);
    run("associativity.gamma_with_alpha_o",
        then(bullet_map(ac, bd), gamma(circ(a, c), circ(b, d), e, f), circ_map(gamma(a, b, c, d), id(bullet(e, f)))),
        then(gamma(a, b, circ(c, e), circ(d, f)), circ_map(id(bullet(a, b)), gamma(c, d, e, f)),
             alpha(Kind::Circ, bullet(a, b), bullet(c, d), bullet(e, f))),
        inst);
    run("associativity.gamma_with_alpha_.",
        then(alpha(Kind::Bullet, circ(a, d), circ(b, e), circ(c, f)), bullet_map(gamma(a, b, d, e), id(circ(c, f))),
             gamma(bullet(a, b), c, bullet(d, e), f)),
        then(bullet_map(id(circ(a, d)), gamma(b, c, e, f)), gamma(a, bullet(b, c), d, bullet(e, f)),
             circ_map(alpha(Kind::Bullet, a, b, c), alpha(Kind::Bullet, d, e, f))),
        inst);
  }

  for (const auto& a : xs)
    for (const auto& b : xs) {
      const std::string inst = tuple_name({a, b});
      run("unitality.lambda_o", u.lambda_circ(bullet(a, b)),
          then(bullet_map(u.lambda_circ(a), u.lambda_circ(b)), gamma(I, I, a, b), circ_map(dI, id(bullet(a, b)))), inst);
      run("unitality.rho_o", u.rho_circ(bullet(a, b)),
          then(bullet_map(u.rho_circ(a), u.rho_circ(b)), gamma(a, b, I, I), circ_map(id(bullet(a, b)), dI)), inst);
      run("unitality.lambda_.", then(u.lambda_bullet(circ(a, b)), bullet_map(mu, id(circ(a, b))), gamma(J, a, J, b)),
          circ_map(u.lambda_bullet(a), u.lambda_bullet(b)), inst);
      run("unitality.rho_.", then(u.rho_bullet(circ(a, b)), bullet_map(id(circ(a, b)), mu), gamma(a, J, b, J)),
          circ_map(u.rho_bullet(a), u.rho_bullet(b)), inst);
    }

  // Naturality of gamma along identities and the maps to J.
  for (const auto& t : tuples(4)) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<Map> fs;
      std::vector<E> cods;
      for (std::size_t i = 0; i < 4; ++i) {
        fs.push_back((mask >> i) & 1 ? u.to_J(t[i], "!") : id(t[i]));
        cods.push_back(fs.back().cod);
      }
      run("gamma.natural", then(gamma(cods[0], cods[1], cods[2], cods[3]), circ_map(bullet_map(fs[0], fs[1]), bullet_map(fs[2], fs[3]))),
          then(bullet_map(circ_map(fs[0], fs[2]), circ_map(fs[1], fs[3])), gamma(t[0], t[1], t[2], t[3])),
          tuple_name(t) + " mask " + std::to_string(mask));
    }
  }

  Report rep;
  json::ordered_json counts = json::ordered_json::object();
  for (const auto& name : order) {
    const auto& tl = tallies[name];
    rep.add(name, tl.witness.is_null(), tl.witness);
    counts[name] = {{"instances", tl.instances}, {"elements", tl.elements}};
  }
  rep.info()["base_size"] = base.size();
  rep.info()["samples"] = samples.size();
  rep.info()["diagrams"] = order.size();
  rep.info()["coverage"] = counts;
  return rep;
}

SpanBimonoid span_bimonoid_of_category(const FiniteCategory& c) {
  return {span_of_category(c), c.compose, c.identities};
}

namespace {

struct BimonoidMaps {
  Span si, sj;
  E A, I, J;
  Units u;
  Map mult, unit, delta, eps;

  explicit BimonoidMaps(const SpanBimonoid& m)
      : si(span_unit_I(m.span.base)),
        sj(span_unit_J(m.span.base)),
        A(leaf(m.span)),
        I(leaf(si)),
        J(leaf(sj)),
        u{I, J, m.span.base.size()} {
    const std::size_t n = m.span.carrier.size();
    const auto* table = &m.mult;
    mult = {circ(A, A), A,
            [table, n](const Flat& x) {
              auto v = (*table)[x[0] * n + x[1]];
              return Flat{v ? *v : n};
            },
            "mu"};
    const auto* un = &m.unit;
    unit = {I, A, [un](const Flat& x) { return Flat{(*un)[x[0]]}; }, "eta"};
    delta = {A, bullet(A, A), [](const Flat& x) { return Flat{x[0], x[0]}; }, "Delta"};
    eps = u.to_J(A, "eps");
  }
};

void add_tally(Report& rep, const std::string& name, const Map& p, const Map& q) {
  DiagramTally t;
  compare(t, p, q, name);
  rep.add(name, t.witness.is_null(), t.witness);
}

}  // namespace

Report span_bimonoid_laws(const SpanBimonoid& m) {
  Report rep;
  const Span& a = m.span;
  const std::size_t n = a.carrier.size(), o = a.base.size();
  const bool shape = span_is_valid(a) && m.mult.size() == n * n && m.unit.size() == o &&
                     std::all_of(m.unit.begin(), m.unit.end(), [n](std::size_t x) { return x < n; }) &&
                     std::all_of(m.mult.begin(), m.mult.end(), [n](const auto& x) { return !x || *x < n; });
  rep.add("monoid.shape", shape, "table sizes or indices out of range");
  if (!shape) return rep;
  auto mul = [&](std::size_t g, std::size_t h) { return m.mult[g * n + h]; };

  json::ordered_json w;
  for (std::size_t g = 0; g < n && w.is_null(); ++g)
    for (std::size_t h = 0; h < n && w.is_null(); ++h) {
      if (a.s[g] != a.t[h]) continue;
      auto gh = mul(g, h);
      if (!gh || a.s[*gh] != a.s[h] || a.t[*gh] != a.t[g]) w = {{"g", a.carrier[g]}, {"h", a.carrier[h]}};
    }
  rep.add("monoid.mult_is_span_map", w.is_null(), w);
  const bool mult_ok = w.is_null();

  w = nullptr;
  for (std::size_t x = 0; x < o && w.is_null(); ++x)
    if (a.s[m.unit[x]] != x || a.t[m.unit[x]] != x) w = {{"object", a.base[x]}};
  rep.add("monoid.unit_is_span_map", w.is_null(), w);
  const bool unit_ok = w.is_null();
  if (!mult_ok || !unit_ok) return rep;

  w = nullptr;
  for (std::size_t f = 0; f < n && w.is_null(); ++f)
    for (std::size_t g = 0; g < n && w.is_null(); ++g)
      for (std::size_t h = 0; h < n && w.is_null(); ++h) {
        if (a.s[f] != a.t[g] || a.s[g] != a.t[h]) continue;
        if (mul(*mul(f, g), h) != mul(f, *mul(g, h)))
          w = {{"f", a.carrier[f]}, {"g", a.carrier[g]}, {"h", a.carrier[h]}};
      }
  rep.add("monoid.associative", w.is_null(), w);

  w = nullptr;
  for (std::size_t g = 0; g < n && w.is_null(); ++g)
    if (mul(m.unit[a.t[g]], g) != g) w = {{"g", a.carrier[g]}};
  rep.add("monoid.left_unit", w.is_null(), w);
  w = nullptr;
  for (std::size_t g = 0; g < n && w.is_null(); ++g)
    if (mul(g, m.unit[a.s[g]]) != g) w = {{"g", a.carrier[g]}};
  rep.add("monoid.right_unit", w.is_null(), w);

  const BimonoidMaps b(m);
  const Units& u = b.u;
  const E& A = b.A;
  add_tally(rep, "comonoid.coassociative", then(alpha(Kind::Bullet, A, A, A), bullet_map(b.delta, id(A)), b.delta),
            then(bullet_map(id(A), b.delta), b.delta));
  add_tally(rep, "comonoid.left_counit", then(u.lambda_bullet(A), bullet_map(b.eps, id(A)), b.delta), id(A));
  add_tally(rep, "comonoid.right_counit", then(u.rho_bullet(A), bullet_map(id(A), b.eps), b.delta), id(A));
  add_tally(rep, "bimonoid.Delta_mu", then(b.delta, b.mult),
            then(bullet_map(b.mult, b.mult), gamma(A, A, A, A), circ_map(b.delta, b.delta)));
  add_tally(rep, "bimonoid.eps_mu", then(b.eps, b.mult), then(u.mu_J(), circ_map(b.eps, b.eps)));
  add_tally(rep, "bimonoid.Delta_eta", then(b.delta, b.unit), then(bullet_map(b.unit, b.unit), u.delta_I()));
  add_tally(rep, "bimonoid.eps_eta", then(b.eps, b.unit), u.tau());
  return rep;
}

FiniteCategory span_bimonoid_to_category(const SpanBimonoid& m) {
  Report laws = span_bimonoid_laws(m);
  std::string bad;
  for (const auto& c : laws.checks())
    if (!c.pass && c.name.rfind("monoid.", 0) == 0) bad += (bad.empty() ? "" : ", ") + c.name;
  if (!bad.empty()) throw Error(ErrorCode::MonoidLawFailure, bad);

  FiniteCategory c;
  const Span& a = m.span;
  const std::size_t n = a.carrier.size();
  c.objects = a.base;
  for (std::size_t i = 0; i < n; ++i) c.morphisms.push_back({a.carrier[i], a.s[i], a.t[i]});
  c.identities = m.unit;
  c.compose.assign(n * n, std::nullopt);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (a.s[g] == a.t[h]) c.compose[g * n + h] = m.mult[g * n + h];

  std::vector<std::size_t> inv(n);
  bool groupoid = true;
  for (std::size_t g = 0; g < n && groupoid; ++g) {
    bool found = false;
    for (std::size_t h = 0; h < n && !found; ++h)
      found = a.s[g] == a.t[h] && a.s[h] == a.t[g] && c.composite(g, h) == m.unit[a.t[g]] &&
              c.composite(h, g) == m.unit[a.s[g]] && (inv[g] = h, true);
    groupoid = found;
  }
  if (groupoid) c.inverse = inv;
  return c;
}

namespace {

SpanBeta beta_impl(const SpanBimonoid& h, const Span& a, const Span& b, std::map<Flat, Flat>& preimage) {
  require_same_base(h.span, a);
  require_same_base(h.span, b);
  const BimonoidMaps bm(h);
  const E H = bm.A, A = leaf(a), B = leaf(b);
  const E dom = circ(bullet(A, H), bullet(B, H));
  const E cod = bullet(circ(bullet(A, H), B), H);
  const std::size_t n = h.span.carrier.size();
  const auto* table = &h.mult;
  const Map beta{dom, cod,
                 [table, n](const Flat& x) {
                   auto v = (*table)[x[1] * n + x[3]];
                   return Flat{x[0], x[1], x[2], v ? *v : n};
                 },
                 "beta"};

  SpanBeta out;
  const auto xs = elements(*dom);
  out.domain_size = xs.size();
  out.codomain_size = elements(*cod).size();
  bool injective = true;
  for (const auto& x : xs) {
    try {
      Flat y = eval_map(beta, x);
      injective = preimage.emplace(y, x).second && injective;
    } catch (const MapFailure&) {
      out.well_defined = false;
    }
  }
  out.bijective = out.well_defined && injective && out.domain_size == out.codomain_size;
  return out;
}

}  // namespace

SpanBeta span_hopf_beta(const SpanBimonoid& h, const Span& a, const Span& b) {
  std::map<Flat, Flat> preimage;
  return beta_impl(h, a, b, preimage);
}

SpanBeta span_hopf_beta_JJ(const SpanBimonoid& h) {
  const Span j = span_unit_J(h.span.base);
  std::map<Flat, Flat> preimage;
  SpanBeta out = beta_impl(h, j, j, preimage);
  if (!out.bijective) return out;
  // beta^-1((s h, t h), h, (t h, s h), 1_{t h}) = (.., h, .., r(h, t h)).
  const std::size_t o = j.base.size();
  for (std::size_t g = 0; g < h.span.carrier.size(); ++g) {
    const std::size_t sg = h.span.s[g], tg = h.span.t[g];
    out.extracted_inverse.push_back(preimage.at(Flat{sg * o + tg, g, tg * o + sg, h.unit[tg]})[3]);
  }
  return out;
}

Report span_bimonoid_morphism(const SpanBimonoid& src_m, const SpanBimonoid& tgt_m, const std::vector<std::size_t>& q,
                              const std::vector<std::size_t>& big_q) {
  const Span &a = src_m.span, &b = tgt_m.span;
  const std::size_t n = a.carrier.size(), nb = b.carrier.size();
  if (q.size() != a.base.size() || big_q.size() != n ||
      std::any_of(q.begin(), q.end(), [&](std::size_t x) { return x >= b.base.size(); }) ||
      std::any_of(big_q.begin(), big_q.end(), [&](std::size_t x) { return x >= nb; }))
    throw Error(ErrorCode::DimensionMismatch, "span_bimonoid_morphism: map sizes");
  Report rep;

  json::ordered_json w;
  for (std::size_t g = 0; g < n && w.is_null(); ++g)
    if (b.s[big_q[g]] != q[a.s[g]] || b.t[big_q[g]] != q[a.t[g]]) w = {{"h", a.carrier[g]}, {"Q(h)", b.carrier[big_q[g]]}};
  rep.add("morphism.span_map", w.is_null(), w);

  // Delta'(Q h) against (Q . Q)(Delta h).
  w = nullptr;
  for (std::size_t g = 0; g < n && w.is_null(); ++g) {
    const std::pair<std::size_t, std::size_t> left{big_q[g], big_q[g]}, right{big_q[g], big_q[g]};
    if (left != right) w = {{"h", a.carrier[g]}};
  }
  rep.add("morphism.comultiplicative", w.is_null(), w);

  // eps'(Q h) against q applied to eps(h).
  w = nullptr;
  for (std::size_t g = 0; g < n && w.is_null(); ++g)
    if (std::make_pair(b.s[big_q[g]], b.t[big_q[g]]) != std::make_pair(q[a.s[g]], q[a.t[g]])) w = {{"h", a.carrier[g]}};
  rep.add("morphism.counital", w.is_null(), w);

  w = nullptr;
  for (std::size_t g = 0; g < n && w.is_null(); ++g)
    for (std::size_t h = 0; h < n && w.is_null(); ++h) {
      if (a.s[g] != a.t[h]) continue;
      auto gh = src_m.mult[g * n + h];
      auto img = b.s[big_q[g]] == b.t[big_q[h]] ? tgt_m.mult[big_q[g] * nb + big_q[h]] : std::nullopt;
      if (!gh || !img || big_q[*gh] != *img) w = {{"h", a.carrier[g]}, {"h'", a.carrier[h]}};
    }
  rep.add("morphism.multiplicative", w.is_null(), w);

  w = nullptr;
  for (std::size_t x = 0; x < a.base.size() && w.is_null(); ++x)
    if (big_q[src_m.unit[x]] != tgt_m.unit[q[x]]) w = {{"object", a.base[x]}};
  rep.add("morphism.unital", w.is_null(), w);
  return rep;
}

}  // namespace wba
