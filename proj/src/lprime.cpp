#include "mslat/lprime.hpp"

#include <algorithm>
#include <queue>

#include "mslat/error.hpp"

namespace mslat {

Multichain::Multichain(const RankedPoset& carrier, std::vector<Elem> largest_first)
    : carrier_(&carrier), items_(std::move(largest_first)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i] >= carrier.size()) throw PreconditionError("multichain item out of range");
    if (items_[i] == carrier.bottom()) throw PreconditionError("a multichain cannot contain the bottom");
    if (i > 0 && !carrier.leq(items_[i], items_[i - 1])) {
      throw PreconditionError("multichain items '" + carrier.id(items_[i]) + "' and '" + carrier.id(items_[i - 1]) +
                              "' are out of order");
    }
  }
}

unsigned Multichain::rank() const {
  unsigned r = 0;
  for (auto e : items_) r += carrier_->rank(e);
  return r;
}

std::string Multichain::str() const {
  std::string out = "(";
  for (auto it = items_.rbegin(); it != items_.rend(); ++it) {
    if (it != items_.rbegin()) out += ",";
    out += carrier_->id(*it);
  }
  return out + ")";
}

bool multichain_leq(const Multichain& a, const Multichain& b) {
  if (!a.empty() && !b.empty() && a.carrier() != b.carrier()) {
    throw PreconditionError("multichains over different carriers");
  }
  if (a.length() > b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (!a.carrier()->leq(a.items()[i], b.items()[i])) return false;
  }
  return true;
}

namespace {

Multichain rewrap(const RankedPoset& carrier, const Multichain& m) { return Multichain(carrier, m.items()); }

void strict_chains(const RankedPoset& c, Elem top, std::vector<Elem>& cur, std::vector<Multichain>& out) {
  for (auto e = c.below(top).find_first(); e != Bitset::npos; e = c.below(top).find_next(e)) {
    if (e == c.bottom() || (!cur.empty() && e == cur.back())) continue;
    cur.push_back(e);
    out.emplace_back(c, cur);
    strict_chains(c, e, cur, out);
    cur.pop_back();
  }
}

void bounded_chains(const RankedPoset& c, Elem top, unsigned budget, std::vector<Elem>& cur,
                    std::set<Multichain>& out) {
  for (auto e = c.below(top).find_first(); e != Bitset::npos; e = c.below(top).find_next(e)) {
    if (e == c.bottom() || c.rank(e) > budget) continue;
    cur.push_back(e);
    out.emplace(c, cur);
    bounded_chains(c, e, budget - c.rank(e), cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::set<Multichain> closure(const RankedPoset& carrier, const std::vector<Multichain>& generators) {
  std::set<Multichain> out{Multichain(carrier, {})};
  std::vector<Elem> cur;
  for (const auto& g : generators) {
    const auto& items = g.items();
    auto fill = [&](auto&& self, std::size_t i) -> void {
      if (i == items.size()) return;
      Bitset allowed = carrier.below(items[i]);
      if (i > 0) allowed &= carrier.below(cur.back());
      allowed.reset(carrier.bottom());
      for (auto e = allowed.find_first(); e != Bitset::npos; e = allowed.find_next(e)) {
        cur.push_back(e);
        out.emplace(carrier, cur);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    fill(fill, 0);
  }
  return out;
}

Family enumerate_family(const RankedPoset& carrier, const FamilySpec& spec) {
  Family out;
  for (Elem l = 0; l < carrier.size(); ++l) {
    if (l == carrier.bottom()) continue;
    std::vector<Elem> cur;
    if (std::holds_alternative<RankBounded>(spec)) {
      std::set<Multichain> f{Multichain(carrier, {})};
      bounded_chains(carrier, l, carrier.rank(l), cur, f);
      out[l] = std::move(f);
    } else if (std::holds_alternative<Chains>(spec)) {
      std::vector<Multichain> gens;
      strict_chains(carrier, l, cur, gens);
      out[l] = closure(carrier, gens);
    } else if (std::holds_alternative<Identity>(spec)) {
      std::set<Multichain> f{Multichain(carrier, {})};
      for (auto e = carrier.below(l).find_first(); e != Bitset::npos; e = carrier.below(l).find_next(e)) {
        if (e != carrier.bottom()) f.emplace(carrier, std::vector<Elem>{e});
      }
      out[l] = std::move(f);
    } else {
      const auto& gens = std::get<Explicit>(spec).generators;
      auto it = gens.find(l);
      std::vector<Multichain> mine;
      if (it != gens.end()) {
        for (const auto& g : it->second) {
          if (!g.empty() && !carrier.leq(g.items()[0], l)) {
            throw PreconditionError("generator " + g.str() + " does not lie below '" + carrier.id(l) + "'");
          }
          mine.push_back(rewrap(carrier, g));
        }
      }
      out[l] = closure(carrier, mine);
    }
  }
  return out;
}

Verdict<FamilyWitness> validate_family(const RankedPoset& carrier, const Family& family) {
  using K = FamilyWitness::Kind;
  for (const auto& [l, f] : family) {
    for (const auto& b : f) {
      if (!b.empty() && !carrier.leq(b.items()[0], l)) return {FamilyWitness{K::OutsideInterval, l, b, b}};
    }
    for (const auto& b : f) {
      for (const auto& a : closure(carrier, {b})) {
        if (!f.count(a)) return {FamilyWitness{K::NotClosed, l, a, b}};
      }
    }
  }
  return {};
}

Multichain componentwise_meet(const Multichain& a, const Multichain& b) {
  if (a.empty() || b.empty()) return a.empty() ? a : b;
  if (a.carrier() != b.carrier()) throw PreconditionError("multichains over different carriers");
  const RankedPoset& c = *a.carrier();
  std::vector<Elem> items;
  for (std::size_t i = 0; i < std::min(a.length(), b.length()); ++i) {
    Elem m = c.meet(a.items()[i], b.items()[i]);
    if (m == c.bottom()) break;
    items.push_back(m);
  }
  return Multichain(c, std::move(items));
}

LPrime build_lprime(const RankedPoset& carrier, const FamilySpec& spec) {
  auto shared = std::make_shared<const RankedPoset>(carrier);
  return build_lprime(shared, enumerate_family(*shared, spec));
}

LPrime build_lprime(std::shared_ptr<const RankedPoset> carrier, const Family& family) {
  const RankedPoset& c = *carrier;
  Family local;
  for (const auto& [l, f] : family) {
    for (const auto& m : f) local[l].insert(rewrap(c, m));
  }
  if (auto v = validate_family(c, local); !v.pass()) {
    const auto& w = *v.witness;
    if (w.kind == FamilyWitness::Kind::OutsideInterval) {
      throw PreconditionError("family of '" + c.id(w.l) + "' contains " + w.missing.str() + " outside its interval");
    }
    throw PreconditionError("family of '" + c.id(w.l) + "' contains " + w.present.str() + " but not " +
                            w.missing.str());
  }

  std::set<Multichain> all{Multichain(c, {})};
  for (const auto& [l, f] : local) all.insert(f.begin(), f.end());
  std::vector<Multichain> list(all.begin(), all.end());
  const std::size_t n = list.size();

  std::vector<Bitset> up(n, Bitset(n));
  std::vector<unsigned> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = list[i].rank();
  std::vector<ElementDecl> elems;
  std::vector<CoverDecl> covers;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back({list[i].str(), rank[i]});
    for (std::size_t j = 0; j < n; ++j) {
      if (!multichain_leq(list[i], list[j])) continue;
      up[i].set(j);
      if (rank[j] == rank[i] + 1) covers.push_back({elems[i].id, list[j].str()});
    }
  }

  LPrime out{carrier, [&] {
               try {
                 return RankedPoset::build(std::move(elems), std::move(covers));
               } catch (const PosetError& e) {
                 throw InvariantError(std::string("L' is not a ranked meet semi-lattice: ") + e.what());
               }
             }(),
             {}};
  const RankedPoset& p = out.poset;
  std::vector<Elem> where(n);
  out.chains.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    where[i] = p.at(list[i].str());
    out.chains[where[i]] = list[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(where[i], where[j]) != up[i].test(j)) {
        throw InvariantError("rank-one covers of L' do not generate " + list[i].str() + " <=' " + list[j].str());
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto m = componentwise_meet(list[i], list[j]);
      auto found = p.find(m.str());
      if (!found || *found != p.meet(where[i], where[j])) {
        throw InvariantError("componentwise meet of " + list[i].str() + " and " + list[j].str() +
                             " disagrees with the order");
      }
    }
  }
  return out;
}

Explicit parse_explicit_family(const RankedPoset& carrier, const Json& doc) {
  if (!doc.is_object()) throw Error("explicit family must be a JSON object");
  Explicit out;
  for (const auto& [key, list] : doc.items()) {
    Elem l = carrier.at(key);
    if (!list.is_array()) throw Error("family of '" + key + "' must be an array");
    for (const auto& mc : list) {
      if (!mc.is_array()) throw Error("each multichain must be an array of ids");
      std::vector<Elem> items;
      for (const auto& id : mc) {
        if (!id.is_string()) throw Error("multichain entries must be element ids");
        items.push_back(carrier.at(id.get<std::string>()));
      }
      std::reverse(items.begin(), items.end());
      out.generators[l].emplace_back(carrier, std::move(items));
    }
  }
  return out;
}

std::optional<Elem> lower_end_atom(const LPrime& lp, Elem lo, Elem hi) {
  auto iv = interval(lp.poset, lo, hi);
  if (!iv.is_chain) throw PreconditionError("lower_end_atom needs an interval that is a chain");
  auto steps = iv.elements;
  std::sort(steps.begin(), steps.end(), [&](Elem a, Elem b) { return lp.poset.rank(a) < lp.poset.rank(b); });
  std::optional<Elem> u;
  for (std::size_t s = 1; s < steps.size(); ++s) {
    const auto& a = lp.chains[steps[s - 1]].items();
    const auto& b = lp.chains[steps[s]].items();
    if (b.size() != a.size() + 1 || !std::equal(a.begin(), a.end(), b.begin())) return std::nullopt;
    Elem added = b.back();
    if (lp.carrier->rank(added) != 1 || (u && *u != added)) return std::nullopt;
    u = added;
  }
  return u;
}

Verdict<ChainIntervalWitness> check_chain_interval_types(const LPrime& lp) {
  const RankedPoset& p = lp.poset;
  for (Elem lo = 0; lo < p.size(); ++lo) {
    const Bitset& ups = p.above(lo);
    for (auto hi = ups.find_first(); hi != Bitset::npos; hi = ups.find_next(hi)) {
      if (p.rank(hi) < p.rank(lo) + 2) continue;
      if (!interval(p, lo, hi).is_chain) continue;
      if (!lower_end_atom(lp, lo, hi)) return {ChainIntervalWitness{lo, hi}};
    }
  }
  return {};
}

RankedPoset divisibility_poset(const MonomialSet& monomials) {
  std::vector<ElementDecl> elems;
  std::vector<CoverDecl> covers;
  std::size_t vars = 0;
  for (const auto& m : monomials) vars = std::max(vars, m.variables());
  for (const auto& m : monomials) {
    elems.push_back({m.str(), m.degree()});
    for (std::size_t v = 1; v <= vars; ++v) {
      auto up = m.times(v);
      if (monomials.count(up)) covers.push_back({m.str(), up.str()});
    }
  }
  return RankedPoset::build(std::move(elems), std::move(covers));
}

std::vector<std::vector<std::size_t>> support_chain(const Monomial& m) {
  std::vector<std::vector<std::size_t>> out;
  Monomial cur = m;
  while (cur.degree() > 0) {
    auto s = cur.support();
    out.push_back(s);
    for (auto v : s) cur = cur.divided(v);
  }
  return out;
}

namespace {

std::string face_id(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

MulticomplexEncoding encode_multicomplex(const MonomialSet& monomials) {
  if (auto v = check_order_ideal(monomials); !v.pass()) {
    throw PreconditionError("not an order ideal: " + v.witness->m.str() + " is present but " +
                            v.witness->divisor.str() + " is not");
  }
  if (monomials.empty()) throw PreconditionError("an order ideal must contain 1");

  std::set<std::vector<std::size_t>> supports;
  for (const auto& m : monomials) supports.insert(m.support());
  std::vector<ElementDecl> elems;
  std::vector<CoverDecl> covers;
  for (const auto& s : supports) {
    elems.push_back({face_id(s), static_cast<long long>(s.size())});
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto t = s;
      t.erase(t.begin() + static_cast<long>(i));
      covers.push_back({face_id(t), face_id(s)});
    }
  }
  auto faces = std::make_shared<const RankedPoset>(RankedPoset::build(std::move(elems), std::move(covers)));

  std::map<std::string, std::string> chain_of;  // monomial id -> multichain id
  std::map<Elem, std::vector<Multichain>> gens;
  for (const auto& m : monomials) {
    std::vector<Elem> items;
    for (const auto& s : support_chain(m)) items.push_back(faces->at(face_id(s)));
    Multichain f(*faces, std::move(items));
    chain_of[m.str()] = f.str();
    if (!f.empty()) gens[f.items()[0]].push_back(f);
  }
  Family family;
  for (Elem s = 0; s < faces->size(); ++s) {
    if (s != faces->bottom()) family[s] = closure(*faces, gens[s]);
  }

  MulticomplexEncoding out{family, build_lprime(faces, family), divisibility_poset(monomials), {}};
  const auto& mp = out.monomials;
  out.bijection.resize(mp.size());
  for (Elem e = 0; e < mp.size(); ++e) {
    auto target = out.lprime.poset.find(chain_of.at(mp.id(e)));
    if (!target) throw InvariantError("multichain of " + mp.id(e) + " is missing from L'");
    out.bijection[e] = *target;
  }
  if (!is_rank_isomorphism(mp, out.lprime.poset, out.bijection)) {
    throw InvariantError("L' is not rank-isomorphic to the multicomplex");
  }
  return out;
}

RankedPoset tree_lattice(const Json& tree) {
  if (!tree.is_object() || !tree.contains("root") || !tree["root"].is_string()) {
    throw Error("tree document needs a string \"root\"");
  }
  const std::string root = tree["root"].get<std::string>();
  std::map<std::string, std::vector<std::string>> children;
  std::map<std::string, std::string> parent;
  std::set<std::string> nodes{root};
  if (tree.contains("edges")) {
    if (!tree["edges"].is_array()) throw Error("\"edges\" must be an array");
    for (const auto& e : tree["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw Error("each edge must be [parent, child]");
      }
      auto p = e[0].get<std::string>(), ch = e[1].get<std::string>();
      if (ch == root) throw PreconditionError("the root '" + root + "' has a parent");
      if (!parent.emplace(ch, p).second) throw PreconditionError("node '" + ch + "' has two parents");
      children[p].push_back(ch);
      nodes.insert(p);
      nodes.insert(ch);
    }
  }
  std::map<std::string, unsigned> depth{{root, 0}};
  std::queue<std::string> q;
  q.push(root);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (const auto& ch : children[v]) {
      depth[ch] = depth[v] + 1;
      q.push(ch);
    }
  }
  if (depth.size() != nodes.size()) throw PreconditionError("the edges do not form a tree rooted at '" + root + "'");
  std::optional<unsigned> leaf_depth;
  for (const auto& [v, d] : depth) {
    if (!children[v].empty()) continue;
    if (leaf_depth && *leaf_depth != d) throw PreconditionError("leaves lie at different depths");
    leaf_depth = d;
  }
  std::string bottom = "0";
  if (nodes.count(bottom)) bottom = "_0";
  if (nodes.count(bottom)) throw PreconditionError("no free id for the bottom");

  std::vector<ElementDecl> elems{{bottom, 0}};
  std::vector<CoverDecl> covers;
  for (const auto& [v, d] : depth) {
    elems.push_back({v, static_cast<long long>(*leaf_depth - d + 1)});
    if (children[v].empty()) covers.push_back({bottom, v});
    for (const auto& ch : children[v]) covers.push_back({ch, v});
  }
  return RankedPoset::build(std::move(elems), std::move(covers));
}

}  // namespace mslat
