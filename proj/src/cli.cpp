#include "mslat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <sstream>

#include "mslat/bounds.hpp"
#include "mslat/corpus.hpp"
#include "mslat/error.hpp"
#include "mslat/exterior.hpp"
#include "mslat/fixtures.hpp"
#include "mslat/lprime.hpp"
#include "mslat/poset_json.hpp"
#include "mslat/properties.hpp"
#include "mslat/symmetric.hpp"

namespace mslat {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> seed2;
};

// Everything a command produces. `document` commands print raw JSON in both
// modes; the rest print `text`, or `json` under --json.
struct Report {
  std::ostringstream text;
  Json json = Json::object();
  std::optional<Json> document;
  int code = kOk;
};

std::string digits(int k, const char* const table[10]) {
  std::string s = std::to_string(k), out;
  for (char c : s) out += table[c - '0'];
  return out;
}

std::string sup(int k) {
  static const char* const t[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  return digits(k, t);
}

std::string sub(int k) {
  static const char* const t[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  return digits(k, t);
}

std::vector<std::uint64_t> parse_fvector(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789 ") != std::string::npos) {
      throw PreconditionError("bad f-vector entry '" + part + "'");
    }
    out.push_back(std::stoull(part));
  }
  return out;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(part);
  return out;
}

Json id_list(const RankedPoset& p, const std::vector<Elem>& elems) {
  Json a = Json::array();
  for (auto e : elems) a.push_back(p.id(e));
  return a;
}

Json fvector_json(const FVector& f) { return f.entries(); }

Json faces_json(const FaceSet& faces) {
  Json a = Json::array();
  for (const auto& f : faces) a.push_back(f);
  return a;
}

std::string faces_text(const FaceSet& faces) {
  std::string s;
  for (const auto& f : faces) s += (s.empty() ? "" : " ") + face_str(f);
  return s;
}

void shadow_rows(Report& r, const ShadowReport& rep) {
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    r.text << "  k=" << row.k << " f_k=" << row.f_k << " bound=" << row.bound << " shadow=" << row.actual
           << " margin=" << row.margin() << "\n";
    rows.push_back({{"k", row.k},
                    {"f_k", row.f_k},
                    {"bound", row.bound.str()},
                    {"shadow", row.actual},
                    {"margin", row.margin().str()}});
  }
  r.json["rows"] = rows;
  r.json["pass"] = rep.pass();
  if (!rep.pass()) r.code = kViolation;
}

// --- bounds -----------------------------------------------------------------

Report bounds_check(BoundKind kind, const std::string& fvec) {
  Report r;
  FVector f{parse_fvector(fvec)};
  const bool kk = kind == BoundKind::KruskalKatona;
  r.json["command"] = kk ? "bounds kk" : "bounds macaulay";
  r.json["fvector"] = fvector_json(f);
  auto v = check_bound(f, kind);
  r.json["pass"] = v.pass();
  if (v.pass()) {
    r.text << "pass: " << f << " satisfies the " << (kk ? "Kruskal-Katona" : "Macaulay") << " inequalities\n";
    return r;
  }
  const auto& w = *v.violation;
  const int k = w.k;
  r.text << "violation at k=" << k << ": ∂" << (kk ? sub(k) : sup(k)) << "(" << f.at(k) << ")=" << w.bound << " > "
         << w.available << "\n";
  r.json["violation"] = {{"k", k}, {"f_k", f.at(k)}, {"bound", w.bound.str()}, {"f_k_minus_1", w.available}};
  r.code = kViolation;
  return r;
}

Report bounds_expand(const std::string& n_text, unsigned k) {
  Report r;
  Natural n;
  try {
    n = Natural(n_text);
  } catch (const std::exception&) {
    throw PreconditionError("'" + n_text + "' is not a natural number");
  }
  auto e = cascade_expand(n, k);
  r.json["command"] = "bounds expand";
  r.json["n"] = n.str();
  r.json["k"] = k;
  Json terms = Json::array();
  for (const auto& t : e.terms) terms.push_back({{"top", t.top.str()}, {"bottom", t.bottom}});
  r.json["terms"] = terms;
  r.json["kk"] = kk_shadow_bound(n, k).str();
  r.json["macaulay"] = macaulay_shadow_bound(n, k).str();
  r.text << n << " = " << e.str() << "\n"
         << "kruskal-katona bound: " << kk_shadow_bound(n, k) << "\n"
         << "macaulay bound: " << macaulay_shadow_bound(n, k) << "\n";
  return r;
}

Report bounds_min_shadow(std::uint64_t n, unsigned k, const std::string& mode, unsigned universe) {
  Report r;
  const ShadowMode m = mode == "sets" ? ShadowMode::Sets : ShadowMode::Monomials;
  auto best = brute_min_shadow(n, k, m, universe);
  Natural bound = m == ShadowMode::Sets ? kk_shadow_bound(n, k) : macaulay_shadow_bound(n, k);
  r.json["command"] = "bounds min-shadow";
  r.json["mode"] = mode;
  r.json["n"] = n;
  r.json["k"] = k;
  r.json["universe"] = universe;
  r.json["minimum"] = best;
  r.json["bound"] = bound.str();
  r.text << "minimum shadow of " << n << " " << (m == ShadowMode::Sets ? "k-sets" : "monomials") << " (k=" << k
         << ", universe " << universe << "): " << best << "\nbound: " << bound << "\n";
  if (Natural(best) != bound) r.code = kViolation;
  return r;
}

// --- check ------------------------------------------------------------------

void hypothesis_failed(Report& r, const std::string& what, Json witness) {
  r.text << "hypothesis fails: not " << what << "\n";
  r.json["pass"] = false;
  r.json["hypothesis"] = what;
  r.json["witness"] = std::move(witness);
  r.code = kViolation;
}

Report check(const std::string& property, const std::string& file) {
  Report r;
  auto p = load_poset_file(file);
  r.json["command"] = "check " + property;
  r.json["file"] = file;

  if (property == "shadow-kk" || property == "shadow-macaulay") {
    const bool kk = property == "shadow-kk";
    if (kk) {
      if (auto v = check_diamond(p); !v.pass()) {
        hypothesis_failed(r, "diamond", {{"x", p.id(v.witness->x)}, {"y", p.id(v.witness->y)}});
        return r;
      }
    } else if (auto v = check_parallelogram(p); !v.pass()) {
      hypothesis_failed(r, "parallelogram", {{"base", p.id(v.witness->base)}, {"y", p.id(v.witness->y)}});
      return r;
    }
    auto rep = verify_shadow_theorem(p, kk ? BoundKind::KruskalKatona : BoundKind::Macaulay);
    r.text << (kk ? "Kruskal-Katona" : "Macaulay") << " shadows, f = " << f_vector(p) << "\n";
    shadow_rows(r, rep);
    r.text << (rep.pass() ? "pass\n" : "fail: a margin is negative\n");
    return r;
  }

  std::optional<Json> witness;
  std::string says;
  if (property == "diamond") {
    if (auto v = check_diamond(p); !v.pass()) {
      const auto& w = *v.witness;
      witness = Json{{"x", p.id(w.x)}, {"y", p.id(w.y)}};
      says = "fewer than two elements strictly between " + p.id(w.x) + " and " + p.id(w.y);
    }
  } else if (property == "star") {
    if (auto v = check_condition_star(p); !v.pass()) {
      const auto& w = *v.witness;
      witness = Json{{"base", p.id(w.base)}, {"cover", p.id(w.cover)}, {"y", p.id(w.y)}};
      says = "every lower cover of " + p.id(w.y) + " above " + p.id(w.base) + " lies above " + p.id(w.cover);
    }
  } else if (property == "parallelogram") {
    if (auto v = check_parallelogram(p); !v.pass()) {
      const auto& w = *v.witness;
      std::string chain;
      for (auto e : w.chain) chain += (chain.empty() ? "" : " < ") + p.id(e);
      witness = Json{{"base", p.id(w.base)}, {"chain", id_list(p, w.chain)}, {"y", p.id(w.y)}, {"i", w.i}};
      says = "chain " + chain + ", y=" + p.id(w.y) + ", i=" + std::to_string(w.i) +
             ": no lower cover of y slides down";
    }
  } else if (property == "geometric") {
    if (auto v = check_geometric(p); !v.pass()) {
      const auto& w = *v.witness;
      if (w.kind == GeometricWitness::Kind::NotAtomic) {
        witness = Json{{"kind", "not-atomic"}, {"x", p.id(w.x)}};
        says = p.id(w.x) + " is not a join of atoms";
      } else {
        witness = Json{{"kind", "rank-inequality"}, {"x", p.id(w.x)}, {"y", p.id(w.y)}};
        says = "rank inequality fails for " + p.id(w.x) + " and " + p.id(w.y);
      }
    }
  } else if (auto v = check_min_atom_rank(p); !v.pass()) {
    const auto& w = *v.witness;
    std::string atoms;
    for (auto a : w.atoms) atoms += (atoms.empty() ? "" : ",") + p.id(a);
    witness = Json{{"l", p.id(w.l)}, {"atoms", id_list(p, w.atoms)}};
    says = "{" + atoms + "} is a minimal atom set of " + p.id(w.l) + " of size " + std::to_string(w.atoms.size()) +
           " but its rank is " + std::to_string(p.rank(w.l));
  }

  r.json["pass"] = !witness;
  if (!witness) {
    r.text << "pass: " << property << "\n";
  } else {
    r.json["witness"] = *witness;
    r.text << "fail: " << property << ": " << says << "\n";
    r.code = kViolation;
  }
  return r;
}

// --- lprime -----------------------------------------------------------------

void describe_lprime(Report& r, const LPrime& lp) {
  const auto& q = lp.poset;
  r.text << "f = " << f_vector(q) << "\n";
  Json ranks = Json::array();
  for (unsigned k = 0; k <= q.max_rank(); ++k) {
    std::vector<Elem> level(q.rank_level(k).begin(), q.rank_level(k).end());
    r.text << "rank " << k << ":";
    for (auto e : level) r.text << " " << q.id(e);
    r.text << "\n";
    ranks.push_back(id_list(q, level));
  }
  r.json["fvector"] = fvector_json(f_vector(q));
  r.json["ranks"] = ranks;
  auto par = check_parallelogram(q);
  r.json["parallelogram"] = par.pass();
  r.text << "parallelogram: " << (par.pass() ? "pass" : "FAIL") << "\n";
  if (!par.pass()) {
    r.code = kViolation;
    return;
  }
  r.text << "Macaulay shadows:\n";
  shadow_rows(r, verify_shadow_theorem(q, BoundKind::Macaulay));
  r.json["poset"] = to_json(q);
}

Report lprime_build(const std::string& file, const std::string& family) {
  Report r;
  auto carrier = load_poset_file(file);
  FamilySpec spec;
  if (family == "rank-bounded") {
    spec = RankBounded{};
  } else if (family == "chains") {
    spec = Chains{};
  } else if (family == "identity") {
    spec = Identity{};
  } else if (family.rfind("explicit:", 0) == 0) {
    spec = parse_explicit_family(carrier, Json::parse(read_text_file(family.substr(9))));
  } else {
    throw PreconditionError("unknown family '" + family + "'");
  }
  r.json["command"] = "lprime build";
  r.json["family"] = family;
  describe_lprime(r, build_lprime(carrier, spec));
  return r;
}

Report lprime_encode(const std::string& file) {
  Report r;
  auto monomials = parse_monomial_lines(read_text_file(file));
  auto enc = encode_multicomplex(monomials);
  r.json["command"] = "lprime encode-multicomplex";
  Json map = Json::object();
  for (Elem e = 0; e < enc.monomials.size(); ++e) {
    const auto& chain = enc.lprime.chains[enc.bijection[e]];
    r.text << enc.monomials.id(e) << " -> " << chain.str() << "\n";
    map[enc.monomials.id(e)] = chain.str();
  }
  r.json["encoding"] = map;
  r.json["fvector"] = fvector_json(f_vector(enc.lprime.poset));
  r.json["carrier"] = to_json(*enc.lprime.carrier);
  r.text << "f = " << f_vector(enc.lprime.poset) << ", rank-isomorphic to the input\n";
  return r;
}

Report lprime_tree(const std::string& file) {
  Report r;
  auto t = tree_lattice(Json::parse(read_text_file(file)));
  r.json["command"] = "lprime tree";
  r.json["fvector"] = fvector_json(f_vector(t));
  r.text << "f = " << f_vector(t) << "\n";
  auto v = check_parallelogram(t);
  r.json["parallelogram"] = v.pass();
  if (v.pass()) {
    r.text << "parallelogram: pass\n";
  } else {
    r.text << "parallelogram: FAIL at base " << t.id(v.witness->base) << ", y=" << t.id(v.witness->y) << "\n";
    r.json["witness"] = {{"base", t.id(v.witness->base)}, {"chain", id_list(t, v.witness->chain)},
                         {"y", t.id(v.witness->y)}, {"i", v.witness->i}};
    r.code = kViolation;
  }
  r.json["poset"] = to_json(t);
  return r;
}

// --- shift ------------------------------------------------------------------

ShiftOptions shift_options(const Globals& g) { return ShiftOptions{g.seed, g.seed2}; }

Report shift_ext(const std::string& file, const Globals& g) {
  Report r;
  auto p = load_poset_file(file);
  auto s = shift_exterior(p, shift_options(g));
  r.json["command"] = "shift exterior";
  r.json["seed"] = g.seed;
  if (g.seed2) r.json["seed2"] = *g.seed2;
  r.json["faces"] = faces_json(s);
  r.json["fvector"] = fvector_json(face_f_vector(s));
  r.text << "shifted complex: " << faces_text(s) << "\nf = " << face_f_vector(s) << "\n";
  return r;
}

Report shift_bjorner(const std::string& file, const std::string& order) {
  Report r;
  auto p = load_poset_file(file);
  std::vector<Elem> seq;
  if (!order.empty()) {
    for (const auto& id : split_ids(order)) seq.push_back(p.at(id));
  }
  auto d = bjorner_delta(p, seq);
  r.json["command"] = "shift bjorner";
  r.json["faces"] = faces_json(d);
  r.text << "complex: " << faces_text(d) << "\nf = " << face_f_vector(d) << "\n";
  return r;
}

Report shift_sym(const std::string& file, const Globals& g) {
  Report r;
  auto p = pposet_from_json(Json::parse(read_text_file(file)));
  auto s = shift_symmetric(p, shift_options(g));
  r.json["command"] = "shift symmetric";
  r.json["seed"] = g.seed;
  if (g.seed2) r.json["seed2"] = *g.seed2;
  Json a = Json::array();
  std::string text;
  for (const auto& m : s) {
    a.push_back(m.str());
    text += (text.empty() ? "" : " ") + m.str();
  }
  r.json["monomials"] = a;
  r.json["fvector"] = fvector_json(monomial_f_vector(s));
  r.text << "order ideal: " << text << "\nf = " << monomial_f_vector(s) << "\n";
  return r;
}

// --- corpus fuzz --------------------------------------------------------------

Report fuzz(std::uint64_t seed, std::size_t count, std::size_t max_elements) {
  Report r;
  LayeredOptions opt;
  opt.max_elements = max_elements;
  std::size_t diamond = 0, star = 0, par = 0, lprimes = 0;
  Json violations = Json::array();
  auto flag = [&](std::size_t index, const RankedPoset& p, const std::string& what) {
    violations.push_back({{"index", index}, {"what", what}, {"poset", to_json(p)}});
  };
  auto corpus = random_corpus(seed, count, opt);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& p = corpus[i];
    try {
      const bool d = check_diamond(p).pass();
      const bool s = check_condition_star(p).pass();
      const bool q = check_parallelogram(p).pass();
      diamond += d;
      star += s;
      par += q;
      if (d != s) flag(i, p, "diamond and condition (*) disagree");
      if (s && !q) flag(i, p, "condition (*) holds but the parallelogram property fails");
      if (d && !verify_shadow_theorem(p, BoundKind::KruskalKatona).pass()) flag(i, p, "Kruskal-Katona shadow bound fails");
      if (q && !verify_shadow_theorem(p, BoundKind::Macaulay).pass()) flag(i, p, "Macaulay shadow bound fails");
      if (!d) continue;
      for (const auto& [name, spec] : {std::pair<const char*, FamilySpec>{"identity", Identity{}},
                                       std::pair<const char*, FamilySpec>{"chains", Chains{}},
                                       std::pair<const char*, FamilySpec>{"rank-bounded", RankBounded{}}}) {
        auto lp = build_lprime(p, spec);
        ++lprimes;
        if (!check_parallelogram(lp.poset).pass()) flag(i, p, std::string("L' (") + name + ") fails the parallelogram test");
      }
    } catch (const Error& e) {
      flag(i, p, std::string("exception: ") + e.what());
    }
  }
  r.json["command"] = "corpus fuzz";
  r.json["seed"] = seed;
  r.json["count"] = corpus.size();
  r.json["max_elements"] = max_elements;
  r.json["diamond"] = diamond;
  r.json["star"] = star;
  r.json["parallelogram"] = par;
  r.json["lprimes"] = lprimes;
  r.json["violations"] = violations;
  r.text << "posets: " << corpus.size() << "\ndiamond: " << diamond << "\ncondition (*): " << star
         << "\nparallelogram: " << par << "\nL' built: " << lprimes << "\nviolations: " << violations.size() << "\n";
  for (const auto& v : violations) r.text << "  #" << v["index"].get<std::size_t>() << ": " << v["what"].get<std::string>() << "\n";
  if (!violations.empty()) r.code = kViolation;
  return r;
}

// --- fixtures -----------------------------------------------------------------

Report fixtures_list() {
  Report r;
  Json a = Json::array();
  for (const auto& n : fixture_names()) {
    r.text << n << "\n";
    a.push_back(n);
  }
  r.json["fixtures"] = a;
  return r;
}

Report fixtures_verify() {
  Report r;
  Json a = Json::array();
  std::size_t bad = 0;
  for (const auto& c : verify_fixtures()) {
    r.text << (c.ok ? "ok   " : "FAIL ") << c.fixture << ": " << c.claim;
    if (!c.ok) r.text << " (got " << c.detail << ")";
    r.text << "\n";
    a.push_back({{"fixture", c.fixture}, {"claim", c.claim}, {"ok", c.ok}, {"detail", c.detail}});
    bad += c.ok ? 0 : 1;
  }
  r.json["claims"] = a;
  r.json["pass"] = bad == 0;
  if (bad) r.code = kViolation;
  return r;
}

Report document(Json doc) {
  Report r;
  r.document = std::move(doc);
  return r;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shadow bounds, shifting and multichain lattices for ranked meet semi-lattices", "mslat"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed2 = 0;
  app.add_flag("--json", g.json, "Print a machine-readable report");
  app.add_option("--seed", g.seed, "Seed for generic matrices and corpora");
  auto* seed2_opt = app.add_option("--seed2", seed2, "Second seed; outputs must agree");

  std::optional<Report> report;
  auto run = [&](auto fn) {
    return [&, fn] {
      if (seed2_opt->count()) g.seed2 = seed2;
      report = fn();
    };
  };

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Shadow bounds and inequalities")->require_subcommand(1);
  std::string fvec;
  for (const auto& [name, kind] : {std::pair{"kk", BoundKind::KruskalKatona}, std::pair{"macaulay", BoundKind::Macaulay}}) {
    auto* c = bounds->add_subcommand(name, std::string("Check an f-vector against the ") +
                                               (kind == BoundKind::KruskalKatona ? "Kruskal-Katona" : "Macaulay") +
                                               " inequalities");
    c->add_option("--fvector", fvec, "Comma-separated f-vector starting with 1")->required();
    c->callback(run([&fvec, kind = kind] { return bounds_check(kind, fvec); }));
  }
  std::string n_text;
  unsigned k = 0;
  auto* expand = bounds->add_subcommand("expand", "Cascade expansion of n and both shadow bounds");
  expand->add_option("n", n_text)->required();
  expand->add_option("k", k)->required()->check(CLI::PositiveNumber);
  expand->callback(run([&] { return bounds_expand(n_text, k); }));
  std::uint64_t n_min = 0;
  unsigned universe = 0;
  std::string mode = "sets";
  auto* mins = bounds->add_subcommand("min-shadow", "Exact minimum shadow by search");
  mins->add_option("n", n_min)->required();
  mins->add_option("k", k)->required()->check(CLI::PositiveNumber);
  mins->add_option("--mode", mode)->check(CLI::IsMember({"sets", "monomials"}));
  mins->add_option("--universe", universe)->required();
  mins->callback(run([&] { return bounds_min_shadow(n_min, k, mode, universe); }));

  // check
  std::string property, file;
  auto* chk = app.add_subcommand("check", "Check a property of a poset");
  chk->add_option("property", property)
      ->required()
      ->check(CLI::IsMember({"diamond", "star", "parallelogram", "geometric", "min-atom-rank", "shadow-kk",
                             "shadow-macaulay"}));
  chk->add_option("file", file)->required();
  chk->callback(run([&] { return check(property, file); }));

  // lprime
  auto* lp = app.add_subcommand("lprime", "Multichain lattices L'")->require_subcommand(1);
  std::string family = "rank-bounded";
  auto* build = lp->add_subcommand("build", "Build L' from a carrier poset");
  build->add_option("file", file)->required();
  build->add_option("--family", family, "rank-bounded | chains | identity | explicit:<file>");
  build->callback(run([&] { return lprime_build(file, family); }));
  auto* enc = lp->add_subcommand("encode-multicomplex", "Encode an order ideal of monomials as L'");
  enc->add_option("file", file)->required();
  enc->callback(run([&] { return lprime_encode(file); }));
  auto* tree = lp->add_subcommand("tree", "The lattice of a rooted tree");
  tree->add_option("file", file)->required();
  tree->callback(run([&] { return lprime_tree(file); }));

  // shift
  auto* shift = app.add_subcommand("shift", "Exterior and symmetric shifting")->require_subcommand(1);
  auto* ext = shift->add_subcommand("exterior", "Exterior shift of a geometric semi-lattice");
  ext->add_option("file", file)->required();
  ext->callback(run([&] { return shift_ext(file, g); }));
  std::string order;
  auto* bj = shift->add_subcommand("bjorner", "Bjorner's complex for an atom ordering");
  bj->add_option("file", file)->required();
  bj->add_option("--order", order, "Comma-separated atom ids");
  bj->callback(run([&] { return shift_bjorner(file, order); }));
  auto* sym = shift->add_subcommand("symmetric", "Symmetric shift of a generalized multicomplex");
  sym->add_option("file", file)->required();
  sym->callback(run([&] { return shift_sym(file, g); }));

  // pposet
  auto* pp = app.add_subcommand("pposet", "Generalized multicomplexes")->require_subcommand(1);
  auto* seed_cmd = pp->add_subcommand("seed", "Label a geometric semi-lattice with squarefree monomials");
  seed_cmd->add_option("file", file)->required();
  seed_cmd->callback(run([&] { return document(pposet_to_json(seed_from_geometric(load_poset_file(file)))); }));
  std::string mono;
  std::size_t var = 0;
  auto* ext_cmd = pp->add_subcommand("extend", "Add x_var * m");
  ext_cmd->add_option("file", file)->required();
  ext_cmd->add_option("m", mono)->required();
  ext_cmd->add_option("var", var)->required()->check(CLI::PositiveNumber);
  ext_cmd->callback(run([&] {
    auto p = pposet_from_json(Json::parse(read_text_file(file)));
    return document(pposet_to_json(extend(p, p.element_of(parse_monomial(mono)), var)));
  }));

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Random corpora")->require_subcommand(1);
  std::size_t count = 1000, max_elements = 12;
  auto* fz = corpus->add_subcommand("fuzz", "Check the implication chain on random posets");
  fz->add_option("--count", count);
  fz->add_option("--max-elements", max_elements)->check(CLI::PositiveNumber);
  fz->callback(run([&] { return fuzz(g.seed, count, max_elements); }));

  // fixtures
  auto* fx = app.add_subcommand("fixtures", "Embedded example structures")->require_subcommand(1);
  fx->add_subcommand("list", "Fixture names")->callback(run([] { return fixtures_list(); }));
  std::string fixture;
  auto* emit = fx->add_subcommand("emit", "Print a fixture document");
  emit->add_option("name", fixture)->required();
  emit->callback(run([&] { return document(fixture_json(fixture)); }));
  fx->add_subcommand("verify", "Recompute the documented fixture numbers")->callback(run([] { return fixtures_verify(); }));

  for (auto* s : {bounds, chk, lp, shift, pp, corpus, fx}) {
    s->fallthrough();
    for (auto* c : s->get_subcommands({})) c->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  } catch (const GenericityError& e) {
    err << "genericity failure: " << e.what() << "\n";
    return kViolation;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kViolation;
  } catch (const PosetError& e) {
    err << "invalid poset: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (!report) return kUsage;
  if (report->document) {
    out << report->document->dump(2) << "\n";
  } else if (g.json) {
    report->json["exit_code"] = report->code;
    out << report->json.dump(2) << "\n";
  } else {
    out << report->text.str();
  }
  return report->code;
}

}  // namespace mslat
