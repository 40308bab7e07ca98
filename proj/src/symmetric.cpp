#include "mslat/symmetric.hpp"

#include <algorithm>
#include <map>

#include "mslat/error.hpp"
#include "mslat/field.hpp"
#include "mslat/generic_matrix.hpp"
#include "mslat/lprime.hpp"
#include "mslat/properties.hpp"

namespace mslat {

std::optional<Elem> PPoset::find(const Monomial& m) const {
  auto it = std::find(labels_.begin(), labels_.end(), m);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

Elem PPoset::element_of(const Monomial& m) const {
  if (auto e = find(m)) return *e;
  throw Error("no element is labelled " + m.str());
}

std::optional<Elem> PPoset::pure_power(std::size_t var, unsigned power) const {
  if (power == 0) return poset_.bottom();
  std::vector<unsigned> e(var, 0);
  e[var - 1] = power;
  return find(Monomial(std::move(e)));
}

// Seeds labels from `origin` (assumed geometric) and applies the steps,
// checking the side conditions of each; the poset is built once at the end.
PPoset replay(const RankedPoset& origin, const std::vector<ExtensionStep>& steps) {
  auto atoms = origin.atoms();
  const std::size_t n = atoms.size();
  std::map<Monomial, std::string> id_of;
  std::map<std::string, Monomial> label_of;
  std::map<std::string, unsigned> rank_of;
  for (Elem l = 0; l < origin.size(); ++l) {
    std::vector<unsigned> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = origin.leq(atoms[i], l) ? 1 : 0;
    Monomial m(std::move(e));
    auto [it, fresh] = id_of.emplace(m, origin.id(l));
    if (!fresh) {
      throw PreconditionError("'" + it->second + "' and '" + origin.id(l) + "' have the same atoms below them");
    }
    label_of.emplace(origin.id(l), m);
    rank_of.emplace(origin.id(l), origin.rank(l));
  }

  auto elems = origin.element_decls();
  auto covers = origin.cover_decls();
  for (const auto& step : steps) {
    const Monomial& m = step.m;
    auto mid = id_of.find(m);
    if (mid == id_of.end()) throw PreconditionError(m.str() + " is not an element");
    if (step.var < 1 || step.var > n) {
      throw PreconditionError("x" + std::to_string(step.var) + " is not a variable of this poset");
    }
    if (m.exponent(step.var) == 0) {
      throw PreconditionError("x" + std::to_string(step.var) + " does not divide " + m.str());
    }
    Monomial grown = m.times(step.var);
    if (id_of.count(grown)) throw PreconditionError(grown.str() + " is already an element");
    std::vector<std::string> below;
    for (auto b : m.support()) {
      auto t = grown.divided(b);
      auto it = id_of.find(t);
      if (it == id_of.end()) {
        throw PreconditionError("(x" + std::to_string(step.var) + "/x" + std::to_string(b) + ")" + m.str() + " = " +
                                t.str() + " is not an element");
      }
      below.push_back(it->second);
    }
    const std::string id = grown.str();
    if (label_of.count(id)) throw PreconditionError("id '" + id + "' is already taken");
    const unsigned r = rank_of.at(mid->second) + 1;
    elems.push_back({id, r});
    for (const auto& b : below) covers.push_back({b, id});
    id_of.emplace(grown, id);
    label_of.emplace(id, grown);
    rank_of.emplace(id, r);
  }

  RankedPoset built = [&] {
    try {
      return RankedPoset::build(std::move(elems), std::move(covers));
    } catch (const PosetError& e) {
      throw InvariantError(std::string("extension does not give a ranked meet semi-lattice: ") + e.what());
    }
  }();
  if (!steps.empty()) {
    if (auto v = check_parallelogram(built); !v.pass()) {
      throw InvariantError("extension breaks the parallelogram property at base '" + built.id(v.witness->base) +
                           "', y = '" + built.id(v.witness->y) + "'");
    }
  }
  PPoset out(std::move(built), origin);
  out.vars_ = n;
  out.log_ = steps;
  for (Elem e = 0; e < out.poset_.size(); ++e) out.labels_.push_back(label_of.at(out.poset_.id(e)));
  return out;
}

PPoset seed_from_geometric(const RankedPoset& lattice) {
  if (auto v = check_geometric(lattice); !v.pass()) {
    throw PreconditionError("the seed must be geometric; '" + lattice.id(v.witness->x) + "' fails");
  }
  return replay(lattice, {});
}

PPoset extend(const PPoset& p, Elem m, std::size_t var) {
  auto steps = p.log();
  steps.push_back({p.label(m), var});
  return replay(p.origin(), steps);
}

PPoset pposet_from_multicomplex(const MonomialSet& monomials) {
  if (auto v = check_order_ideal(monomials); !v.pass()) {
    throw PreconditionError("not an order ideal: " + v.witness->m.str() + " lacks " + v.witness->divisor.str());
  }
  if (monomials.empty()) throw PreconditionError("an order ideal must contain 1");
  MonomialSet squarefree;
  std::size_t vars = 0;
  for (const auto& m : monomials) {
    vars = std::max(vars, m.variables());
    bool sf = std::all_of(m.raw().begin(), m.raw().end(), [](unsigned e) { return e <= 1; });
    if (sf) squarefree.insert(m);
  }
  for (std::size_t v = 1; v <= vars; ++v) {
    if (!monomials.count(Monomial().times(v))) {
      throw PreconditionError("variables must be x1..x" + std::to_string(vars) + " without gaps");
    }
  }
  auto seed = divisibility_poset(squarefree);
  std::vector<ExtensionStep> steps;
  for (const auto& m : monomials) {
    if (squarefree.count(m)) continue;
    std::size_t var = 1;
    while (m.exponent(var) < 2) ++var;
    steps.push_back({m.divided(var), var});
  }
  return replay(seed, steps);
}

std::vector<unsigned> variable_caps(const PPoset& p) {
  std::vector<unsigned> caps(p.variables(), 0);
  for (Elem e = 0; e < p.poset().size(); ++e) {
    for (std::size_t j = 1; j <= caps.size(); ++j) caps[j - 1] = std::max(caps[j - 1], p.label(e).exponent(j));
  }
  return caps;
}

namespace {

std::optional<Elem> project_with_caps(const PPoset& p, const std::vector<unsigned>& caps,
                                      const std::vector<unsigned>& a) {
  std::vector<Elem> parts;
  unsigned degree = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    if (j >= caps.size() || a[j] > caps[j]) return std::nullopt;
    auto e = p.pure_power(j + 1, a[j]);
    if (!e) throw InvariantError("x" + std::to_string(j + 1) + "^" + std::to_string(a[j]) + " is below the cap but absent");
    parts.push_back(*e);
    degree += a[j];
  }
  auto join = p.poset().join(parts);
  if (!join || p.poset().rank(*join) != degree) return std::nullopt;
  return join;
}

MonomialSet shift_once(const PPoset& p, std::uint64_t seed) {
  using F = Fp61;
  using Poly = std::map<std::vector<unsigned>, F::value_type>;
  const std::size_t n = p.variables();
  const auto caps = variable_caps(p);
  GenericMatrix<F> g(n, seed);
  MonomialSet out{Monomial()};
  const RankedPoset& q = p.poset();
  for (unsigned k = 1; k <= q.max_rank(); ++k) {
    auto level = q.rank_level(k);
    std::map<Elem, std::size_t> column;
    for (Elem e : level) column.emplace(e, column.size());
    IncrementalBasis<F> basis(level.size());
    for (const auto& row_mono : monomials_of_degree(n, k)) {
      if (basis.rank() == level.size()) break;
      // Expand the product of y_i^{a_i} with y_i = sum_j g_ij x_j.
      Poly poly{{std::vector<unsigned>(n, 0), F::one()}};
      for (std::size_t i = 0; i < n; ++i) {
        for (unsigned rep = 0; rep < row_mono.exponent(i + 1); ++rep) {
          Poly next;
          for (const auto& [e, c] : poly) {
            for (std::size_t j = 0; j < n; ++j) {
              auto t = e;
              ++t[j];
              auto& slot = next[t];
              slot = F::add(slot, F::mul(c, g.at(i, j)));
            }
          }
          poly = std::move(next);
        }
      }
      std::vector<F::value_type> row(level.size(), F::zero());
      for (const auto& [e, c] : poly) {
        if (auto el = project_with_caps(p, caps, e)) row[column.at(*el)] = F::add(row[column.at(*el)], c);
      }
      if (basis.add(std::move(row))) out.insert(row_mono);
    }
  }
  return out;
}

}  // namespace

std::optional<Elem> project_monomial(const PPoset& p, const std::vector<unsigned>& a) {
  return project_with_caps(p, variable_caps(p), a);
}

FVector monomial_f_vector(const MonomialSet& monomials) {
  std::vector<std::uint64_t> counts;
  for (const auto& m : monomials) {
    if (counts.size() <= m.degree()) counts.resize(m.degree() + 1, 0);
    ++counts[m.degree()];
  }
  if (counts.empty() || counts[0] != 1) throw InvariantError("an order ideal contains 1 exactly once");
  return FVector(std::move(counts));
}

MonomialSet shift_symmetric(const PPoset& p, const ShiftOptions& opt) {
  MonomialSet out = shift_once(p, opt.seed);
  if (monomial_f_vector(out) != f_vector(p.poset())) {
    throw InvariantError("shifted ideal has f-vector " + monomial_f_vector(out).str() + ", expected " +
                         f_vector(p.poset()).str());
  }
  if (auto v = check_order_ideal(out); !v.pass()) {
    throw InvariantError("shifted family is not an order ideal: " + v.witness->m.str() + " lacks " +
                         v.witness->divisor.str());
  }
  if (opt.seed2 && shift_once(p, *opt.seed2) != out) {
    throw GenericityError("seeds " + std::to_string(opt.seed) + " and " + std::to_string(*opt.seed2) +
                          " give different shifts");
  }
  return out;
}

PPoset truncate(const PPoset& p, unsigned r) {
  Bitset keep(p.origin().size());
  for (Elem e = 0; e < p.origin().size(); ++e) keep[e] = p.origin().rank(e) <= r;
  RankedPoset origin = p.origin().induced(keep);
  std::vector<ExtensionStep> steps;
  for (const auto& s : p.log()) {
    if (p.poset().rank(p.element_of(s.m)) + 1 <= r) steps.push_back(s);
  }
  return replay(origin, steps);
}

Json pposet_to_json(const PPoset& p) {
  Json doc = to_json(p.poset());
  Json labels = Json::object();
  for (Elem e = 0; e < p.poset().size(); ++e) labels[p.poset().id(e)] = p.label(e).exponents(p.variables());
  doc["labels"] = labels;
  Json log = Json::array();
  for (const auto& s : p.log()) log.push_back({{"m", s.m.str()}, {"var", s.var}});
  doc["log"] = log;
  return doc;
}

PPoset pposet_from_json(const Json& doc) {
  RankedPoset full = poset_from_json(doc);
  if (!doc.contains("labels") || !doc["labels"].is_object()) throw Error("PPoset document needs a \"labels\" object");
  std::vector<Monomial> labels(full.size());
  std::vector<bool> seen(full.size(), false);
  for (const auto& [id, exps] : doc["labels"].items()) {
    Elem e = full.at(id);
    if (!exps.is_array()) throw Error("label of '" + id + "' must be an exponent array");
    std::vector<unsigned> v;
    for (const auto& x : exps) {
      if (!x.is_number_unsigned()) throw Error("label of '" + id + "' must hold non-negative integers");
      v.push_back(x.get<unsigned>());
    }
    labels[e] = Monomial(std::move(v));
    seen[e] = true;
  }
  for (Elem e = 0; e < full.size(); ++e) {
    if (!seen[e]) throw Error("element '" + full.id(e) + "' has no label");
  }
  auto squarefree = [](const Monomial& m) {
    return std::all_of(m.raw().begin(), m.raw().end(), [](unsigned x) { return x <= 1; });
  };
  Bitset keep(full.size());
  for (Elem e = 0; e < full.size(); ++e) keep[e] = squarefree(labels[e]);
  RankedPoset origin = full.induced(keep);
  if (auto v = check_geometric(origin); !v.pass()) {
    throw PreconditionError("the squarefree part is not geometric at '" + origin.id(v.witness->x) + "'");
  }

  std::vector<ExtensionStep> steps;
  if (doc.contains("log")) {
    if (!doc["log"].is_array()) throw Error("\"log\" must be an array");
    for (const auto& s : doc["log"]) {
      if (!s.is_object() || !s.contains("m") || !s["m"].is_string() || !s.contains("var") ||
          !s["var"].is_number_unsigned()) {
        throw Error("each log entry must be {\"m\": monomial, \"var\": index}");
      }
      steps.push_back({parse_monomial(s["m"].get<std::string>()), s["var"].get<std::size_t>()});
    }
  } else {
    std::vector<Elem> rest;
    for (Elem e = 0; e < full.size(); ++e) {
      if (!keep[e]) rest.push_back(e);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](Elem a, Elem b) { return full.rank(a) < full.rank(b); });
    for (Elem e : rest) {
      std::size_t var = 1;
      while (labels[e].exponent(var) < 2) ++var;
      steps.push_back({labels[e].divided(var), var});
    }
  }
  PPoset out = replay(origin, steps);

  const RankedPoset& q = out.poset();
  bool same = q.size() == full.size();
  for (Elem e = 0; same && e < full.size(); ++e) {
    auto f = q.find(full.id(e));
    same = f && q.rank(*f) == full.rank(e) && out.label(*f) == labels[e];
    if (!same) break;
    for (Elem x : full.lower_covers(e)) same = same && q.covers(q.at(full.id(x)), *f);
    same = same && q.lower_covers(*f).size() == full.lower_covers(e).size();
  }
  if (!same) throw Error("the document does not match the poset its labels and log construct");
  return out;
}

}  // namespace mslat
