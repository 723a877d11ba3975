#include "wba/category.hpp"

#include <algorithm>

#include "wba/errors.hpp"

namespace wba {

namespace json = nlohmann;

std::optional<std::size_t> FiniteCategory::find_morphism(const std::string& name) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> FiniteCategory::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  return std::nullopt;
}

Report validate_category(const FiniteCategory& c) {
  Report rep;
  const std::size_t m = c.size(), o = c.objects.size();
  bool shape = c.identities.size() == o && c.compose.size() == m * m;
  for (const auto& f : c.morphisms) shape = shape && f.src < o && f.tgt < o;
  for (std::size_t id : c.identities) shape = shape && id < m;
  for (const auto& x : c.compose) shape = shape && (!x || *x < m);
  rep.add("category.shape", shape, "table sizes or indices out of range");
  if (!shape) return rep;
  const auto& mor = c.morphisms;

  json::ordered_json w;
  for (std::size_t g = 0; g < m && w.is_null(); ++g)
    for (std::size_t h = 0; h < m; ++h) {
      const bool composable = mor[g].src == mor[h].tgt;
      auto gh = c.composite(g, h);
      if (composable != gh.has_value() ||
          (gh && (mor[*gh].src != mor[h].src || mor[*gh].tgt != mor[g].tgt))) {
        w = {{"g", mor[g].name}, {"h", mor[h].name}};
        break;
      }
    }
  rep.add("category.source_target", w.is_null(), w);
  const bool st_ok = w.is_null();

  w = nullptr;
  for (std::size_t x = 0; x < o; ++x) {
    std::size_t id = c.identities[x];
    bool ok = mor[id].src == x && mor[id].tgt == x;
    for (std::size_t g = 0; g < m && ok; ++g) {
      if (mor[g].tgt == x && c.composite(id, g) != g) ok = false;
      if (mor[g].src == x && c.composite(g, id) != g) ok = false;
    }
    if (!ok) {
      w = {{"object", c.objects[x]}};
      break;
    }
  }
  rep.add("category.identity_laws", w.is_null(), w);

  w = nullptr;
  if (st_ok) {
    for (std::size_t f = 0; f < m && w.is_null(); ++f)
      for (std::size_t g = 0; g < m && w.is_null(); ++g) {
        auto fg = c.composite(f, g);
        if (!fg) continue;
        for (std::size_t h = 0; h < m; ++h) {
          auto gh = c.composite(g, h);
          if (!gh) continue;
          if (c.composite(*fg, h) != c.composite(f, *gh)) {
            w = {{"triple", {mor[f].name, mor[g].name, mor[h].name}}};
            break;
          }
        }
      }
  } else {
    w = "skipped: source/target table inconsistent";
  }
  rep.add("category.associative", w.is_null(), w);
  return rep;
}

Report validate_groupoid(const FiniteCategory& c) {
  Report rep = validate_category(c);
  json::ordered_json w;
  if (!c.inverse || c.inverse->size() != c.size()) {
    w = "no inverse table";
  } else if (rep.all_pass()) {
    for (std::size_t g = 0; g < c.size(); ++g) {
      std::size_t gi = (*c.inverse)[g];
      const auto& mg = c.morphisms[g];
      if (gi >= c.size() || c.composite(g, gi) != c.identities[mg.tgt] || c.composite(gi, g) != c.identities[mg.src]) {
        w = {{"morphism", mg.name}};
        break;
      }
    }
  } else {
    w = "skipped: category laws fail";
  }
  rep.add("groupoid.inverse_laws", w.is_null(), w);
  return rep;
}

bool is_functor(const CatFunctor& f, const FiniteCategory& a, const FiniteCategory& b) {
  if (f.on_objects.size() != a.objects.size() || f.on_morphisms.size() != a.size()) return false;
  for (std::size_t x : f.on_objects)
    if (x >= b.objects.size()) return false;
  for (std::size_t g = 0; g < a.size(); ++g) {
    std::size_t fg = f.on_morphisms[g];
    if (fg >= b.size()) return false;
    if (b.morphisms[fg].src != f.on_objects[a.morphisms[g].src]) return false;
    if (b.morphisms[fg].tgt != f.on_objects[a.morphisms[g].tgt]) return false;
  }
  for (std::size_t x = 0; x < a.objects.size(); ++x)
    if (f.on_morphisms[a.identities[x]] != b.identities[f.on_objects[x]]) return false;
  for (std::size_t g = 0; g < a.size(); ++g)
    for (std::size_t h = 0; h < a.size(); ++h) {
      auto gh = a.composite(g, h);
      if (gh && b.composite(f.on_morphisms[g], f.on_morphisms[h]) != f.on_morphisms[*gh]) return false;
    }
  return true;
}

CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f) {
  CatFunctor out;
  for (std::size_t x : f.on_objects) out.on_objects.push_back(g.on_objects[x]);
  for (std::size_t m : f.on_morphisms) out.on_morphisms.push_back(g.on_morphisms[m]);
  return out;
}

CatFunctor identity_functor(const FiniteCategory& c) {
  CatFunctor f;
  for (std::size_t x = 0; x < c.objects.size(); ++x) f.on_objects.push_back(x);
  for (std::size_t m = 0; m < c.size(); ++m) f.on_morphisms.push_back(m);
  return f;
}

namespace {

struct FunctorSearch {
  const FiniteCategory& a;
  const FiniteCategory& b;
  std::vector<std::optional<std::size_t>> obj;
  std::vector<std::size_t> mor;
  std::vector<CatFunctor> out;

  bool consistent(std::size_t k) const {
    for (std::size_t g = 0; g <= k; ++g)
      for (std::size_t h = 0; h <= k; ++h) {
        auto gh = a.composite(g, h);
        if (!gh || *gh > k) continue;
        if (g != k && h != k && *gh != k) continue;
        if (b.composite(mor[g], mor[h]) != mor[*gh]) return false;
      }
    return true;
  }

  void run(std::size_t k) {
    if (k == a.size()) {
      CatFunctor f;
      for (const auto& x : obj) f.on_objects.push_back(*x);
      f.on_morphisms = mor;
      out.push_back(std::move(f));
      return;
    }
    const Morphism& m = a.morphisms[k];
    for (std::size_t c = 0; c < b.size(); ++c) {
      const Morphism& mc = b.morphisms[c];
      if (obj[m.src] && *obj[m.src] != mc.src) continue;
      if (obj[m.tgt] && *obj[m.tgt] != mc.tgt) continue;
      if (m.src == m.tgt && mc.src != mc.tgt) continue;
      auto saved_src = obj[m.src], saved_tgt = obj[m.tgt];
      obj[m.src] = mc.src;
      obj[m.tgt] = mc.tgt;
      bool ok = true;
      // Identities go to identities.
      if (a.identities[m.src] == k && b.identities[mc.src] != c) ok = false;
      mor[k] = c;
      if (ok && consistent(k)) run(k + 1);
      obj[m.src] = saved_src;
      obj[m.tgt] = saved_tgt;
    }
  }
};

}  // namespace

std::vector<CatFunctor> enumerate_functors(const FiniteCategory& a, const FiniteCategory& b, std::uint64_t bound) {
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < a.size() && space != 0; ++i) {
    space *= b.size();
    if (space > bound) throw Error(ErrorCode::SearchSpaceTooLarge, "functor search space exceeds the bound");
  }
  if (!validate_category(a).all_pass() || !validate_category(b).all_pass())
    throw Error(ErrorCode::LawFailure, "enumerate_functors needs valid categories");
  FunctorSearch s{a, b, std::vector<std::optional<std::size_t>>(a.objects.size()), std::vector<std::size_t>(a.size()), {}};
  if (a.objects.empty()) return {CatFunctor{}};
  s.run(0);
  return s.out;
}

namespace {

// Builds the composition table from a rule on morphism indices.
template <class Rule>
void fill_compose(FiniteCategory& c, Rule rule) {
  const std::size_t m = c.size();
  c.compose.assign(m * m, std::nullopt);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      if (c.morphisms[g].src == c.morphisms[h].tgt) c.compose[g * m + h] = rule(g, h);
}

std::size_t parse_count(const std::string& name, const std::string& prefix) {
  std::string rest = name.substr(prefix.size());
  if (rest.empty() || rest.size() > 3 || rest.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::UnknownName, "bad size in '" + name + "'");
  std::size_t k = std::stoul(rest);
  if (k == 0 || k > 64) throw Error(ErrorCode::UnknownName, "size out of range in '" + name + "'");
  return k;
}

FiniteCategory with_identities(std::vector<std::string> objects) {
  FiniteCategory c;
  c.objects = std::move(objects);
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    c.morphisms.push_back({c.objects[x], x, x});
    c.identities.push_back(x);
  }
  return c;
}

// g o h where one of them is an identity.
std::size_t unit_rule(const FiniteCategory& c, std::size_t g, std::size_t h) {
  const auto& ids = c.identities;
  if (std::find(ids.begin(), ids.end(), g) != ids.end()) return h;
  return g;
}

}  // namespace

FiniteCategory builtin_category(const std::string& name) {
  if (name == "interval" || name == "parallel2") {
    FiniteCategory c = with_identities({"S", "T"});
    c.morphisms.push_back({"a", 0, 1});
    if (name == "parallel2") c.morphisms.push_back({"b", 0, 1});
    fill_compose(c, [&](std::size_t g, std::size_t h) { return unit_rule(c, g, h); });
    return c;
  }
  if (name == "iso2") {
    FiniteCategory c = with_identities({"S", "T"});
    c.morphisms.push_back({"a", 0, 1});
    c.morphisms.push_back({"a^-1", 1, 0});
    fill_compose(c, [&](std::size_t g, std::size_t h) -> std::size_t {
      if (g >= 2 && h >= 2) return c.morphisms[h].src;  // a o a^-1 = T, a^-1 o a = S
      return unit_rule(c, g, h);
    });
    c.inverse = std::vector<std::size_t>{0, 1, 3, 2};
    return c;
  }
  if (name.rfind("discreteN:", 0) == 0) {
    std::size_t k = parse_count(name, "discreteN:");
    std::vector<std::string> objs;
    for (std::size_t i = 0; i < k; ++i) objs.push_back("x" + std::to_string(i));
    FiniteCategory c = with_identities(objs);
    fill_compose(c, [](std::size_t g, std::size_t) { return g; });
    std::vector<std::size_t> inv(k);
    for (std::size_t i = 0; i < k; ++i) inv[i] = i;
    c.inverse = inv;
    return c;
  }
  if (name.rfind("cyclicN:", 0) == 0) {
    std::size_t k = parse_count(name, "cyclicN:");
    FiniteCategory c = with_identities({"o"});
    for (std::size_t i = 1; i < k; ++i) c.morphisms.push_back({i == 1 ? "c" : "c^" + std::to_string(i), 0, 0});
    fill_compose(c, [k](std::size_t g, std::size_t h) { return (g + h) % k; });
    std::vector<std::size_t> inv(k);
    for (std::size_t i = 0; i < k; ++i) inv[i] = (k - i) % k;
    c.inverse = inv;
    return c;
  }
  throw Error(ErrorCode::UnknownName, "unknown builtin category '" + name + "'");
}

std::vector<std::string> builtin_category_samples() {
  return {"interval", "iso2", "discreteN:1", "discreteN:3", "cyclicN:2", "cyclicN:3", "parallel2"};
}

}  // namespace wba
