#include "holocount/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace holocount {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Ctx {
  Session& s;
  const VerifyOptions& opt;
  SuiteResult res;

  CountOptions countOpt(bool assert41) const {
    CountOptions o;
    o.prune = true;
    o.workers = opt.workers;
    o.budgetSec = 0;
    o.assertLemma41 = assert41;
    return o;
  }

  void check(const std::string& name, bool pass,
             const std::string& detail = "") {
    res.checks.push_back({name, pass, detail});
    if (opt.log) {
      *opt.log << (pass ? "[PASS] " : "[FAIL] ") << name
               << (detail.empty() ? "" : "  -- " + detail) << std::endl;
    }
  }
};

std::string eq_detail(const std::string& what, int64_t got, int64_t want) {
  std::ostringstream os;
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

// ---------------------------------------------------------------- abelian --

const std::vector<std::string> kAbelianOne = {
    "cyclic:1",  "cyclic:2",  "cyclic:3",  "cyclic:4",  "abelian:2,2",
    "cyclic:5",  "cyclic:6",  "cyclic:7",  "cyclic:10", "cyclic:12",
    "abelian:2,6", "abelian:2,10", "cyclic:15", "abelian:2,14", "cyclic:21"};
const std::vector<std::string> kAbelianTwo = {
    "cyclic:8", "abelian:2,4", "abelian:2,2,2", "cyclic:9", "abelian:3,3",
    "cyclic:16", "cyclic:18", "cyclic:25", "abelian:4,4"};

void suite_abelian(Ctx& c) {
  for (const auto& spec : kAbelianOne) {
    auto& r = c.s.report(spec, spec, c.countOpt(true));
    c.check("e(" + spec + ", " + spec + ") = 1", r.eValue == 1,
            eq_detail("e", r.eValue, 1));
  }
  for (const auto& spec : kAbelianTwo) {
    auto& r = c.s.report(spec, spec, c.countOpt(true));
    c.check("e(" + spec + ", " + spec + ") >= 2", r.eValue >= 2,
            "e = " + std::to_string(r.eValue));
  }
  // explicit order-16 witness: eta_i(x) = A_i x + b_i on (Z/4)^2 with
  // A1 = I, b1 = (1,1), A2 = [[3,2],[2,3]], b2 = (1,2); the generated
  // subgroup must be regular, isomorphic to C4 x C4 and different from rho
  auto n = c.s.group("abelian:4,4");
  auto hol = build_holomorph(n);
  auto& auts = hol->auts();
  auto vecIdx = [](int v0, int v1) { return v0 + 4 * v1; };
  std::vector<int32_t> a2perm(16);
  for (int v0 = 0; v0 < 4; ++v0)
    for (int v1 = 0; v1 < 4; ++v1)
      a2perm[vecIdx(v0, v1)] =
          vecIdx((3 * v0 + 2 * v1) % 4, (2 * v0 + 3 * v1) % 4);
  int32_t a2 = auts.indexOfPerm(a2perm);
  bool okAut = a2 >= 0;
  // action is phi(x) * a^-1, i.e. phi(x) - a additively: a = -b
  int32_t eta1 = hol->encode(vecIdx(3, 3), 0);
  int32_t eta2 = okAut ? hol->encode(vecIdx(3, 2), a2) : 0;
  std::vector<int32_t> gen;
  bool witnessOk = false;
  std::string detail;
  if (okAut) {
    gen = hol_closure(*hol, {eta1, eta2});
    bool regular = is_regular_subset(*hol, gen);
    bool size16 = int(gen.size()) == 16;
    bool notRho = gen != hol->rhoSet();
    bool isoOk = false;
    if (size16) {
      auto sub = hol_subgroup_group(*hol, gen, "eta-witness");
      isoOk = bool(find_isomorphism(*sub, *n));
    }
    witnessOk = regular && size16 && notRho && isoOk;
    std::ostringstream os;
    os << "size=" << gen.size() << " regular=" << regular
       << " iso=" << isoOk << " notRho=" << notRho;
    detail = os.str();
  } else {
    detail = "matrix automorphism not found in Aut(C4xC4)";
  }
  c.check("C4xC4 witness <eta1,eta2> regular, iso to C4xC4, != rho",
          witnessOk, detail);
}

// -------------------------------------------------------------- cyclic-pn --

void suite_cyclic_pn(Ctx& c) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"cyclic:9", "abelian:3,3"},    {"cyclic:27", "abelian:3,9"},
      {"cyclic:27", "abelian:3,3,3"}, {"cyclic:27", "heis:3"},
      {"cyclic:27", "c9xc3semi"},     {"cyclic:25", "abelian:5,5"}};
  for (const auto& [gs, ns] : pairs) {
    auto& r = c.s.report(gs, ns, c.countOpt(true));
    c.check("e(" + gs + ", " + ns + ") = 0", r.eValue == 0,
            eq_detail("e", r.eValue, 0));
  }
}

// ------------------------------------------------------------- quasisimple --

void suite_quasisimple(Ctx& c) {
  auto t0 = Clock::now();
  auto& r = c.s.report("alt:5", "alt:5", c.countOpt(true));
  double a5sec = seconds_since(t0);
  c.check("e(alt:5, alt:5) = 2", r.eValue == 2, eq_detail("e", r.eValue, 2));
  c.check("alt:5 classification {rho:1, lambda:1, other:0}",
          r.rhoCount == 1 && r.lambdaCount == 1 && r.otherCount == 0,
          "rho=" + std::to_string(r.rhoCount) +
              " lambda=" + std::to_string(r.lambdaCount) +
              " other=" + std::to_string(r.otherCount));
  c.check("|Reg(alt:5, Hol(alt:5))| = 240 (= 2 |Aut(A5)|)",
          r.regCount == 240 && r.autN == 120,
          eq_detail("|Reg|", r.regCount, 240));
  c.check("alt:5 runtime within 30 min", a5sec <= 1800.0,
          std::to_string(a5sec) + " s");
  if (c.opt.extended) {
    auto t1 = Clock::now();
    auto& r2 = c.s.report("sl2:5", "sl2:5", c.countOpt(true));
    double slsec = seconds_since(t1);
    c.check("e(sl2:5, sl2:5) = 2", r2.eValue == 2,
            eq_detail("e", r2.eValue, 2));
    c.check("sl2:5 classification {rho:1, lambda:1, other:0}",
            r2.rhoCount == 1 && r2.lambdaCount == 1 && r2.otherCount == 0);
    c.check("sl2:5 runtime within 4 h", slsec <= 14400.0,
            std::to_string(slsec) + " s");
  }
}

// -------------------------------------------------------------------- 2a5 --

void suite_2a5(Ctx& c) {
  const std::vector<std::string> targets = {
      "cyclic:120", "sym:5", "product:alt:5,cyclic:2", "dihedral:60"};
  for (const auto& ns : targets) {
    auto& r = c.s.report("sl2:5", ns, c.countOpt(true));
    c.check("e(sl2:5, " + ns + ") = 0", r.eValue == 0,
            eq_detail("e", r.eValue, 0));
  }
}

// --------------------------------------------------------------------- s5 --

void suite_s5(Ctx& c) {
  auto& r1 = c.s.report("sym:5", "sym:5", c.countOpt(true));
  c.check("e(sym:5, sym:5) >= 1", r1.eValue >= 1,
          "e = " + std::to_string(r1.eValue));
  auto& r2 = c.s.report("sym:5", "product:alt:5,cyclic:2", c.countOpt(true));
  c.check("e(sym:5, alt:5 x C2) >= 1", r2.eValue >= 1,
          "e = " + std::to_string(r2.eValue));
  auto& r3 = c.s.report("sym:5", "cyclic:120", c.countOpt(true));
  c.check("e(sym:5, cyclic:120) = 0", r3.eValue == 0,
          eq_detail("e", r3.eValue, 0));
}

// ------------------------------------------------------------------ oracle --

void suite_oracle_byott(Ctx& c) {
  // Byott consistency over the complete catalog, orders 1..16
  for (int order = 1; order <= 16; ++order) {
    auto specs = catalog_specs(order);
    bool ok = true;
    std::string detail;
    int pairs = 0;
    for (const auto& ne : specs) {
      auto n = c.s.group(ne.spec);
      for (const auto& ge : specs) {
        ++pairs;
        auto& r = c.s.report(ge.spec, ne.spec, c.countOpt(false));
        int64_t brute = brute_reg_subgroups_hol(n, *c.s.group(ge.spec));
        bool divG = r.regCount % r.autG == 0;
        bool divN = r.regCount % r.autN == 0;
        bool match = brute == r.subgroupCount;
        if (!(divG && divN && match) && ok) {
          ok = false;
          std::ostringstream os;
          os << "(" << ge.spec << ", " << ne.spec << "): |Reg|=" << r.regCount
             << " autG=" << r.autG << " autN=" << r.autN
             << " subgroups=" << r.subgroupCount << " brute=" << brute;
          detail = os.str();
        }
      }
    }
    c.check("byott order " + std::to_string(order) + " (" +
                std::to_string(pairs) + " pairs): divisibility + oracle",
            ok, detail);
  }
}

void suite_oracle_gp(Ctx& c) {
  // Greither-Pareigis end-to-end, |G| in 1..6
  for (int order = 1; order <= 6; ++order) {
    auto specs = catalog_specs(order);
    for (const auto& ge : specs) {
      int64_t sum = 0;
      for (const auto& ne : specs)
        sum += c.s.report(ge.spec, ne.spec, c.countOpt(false)).eValue;
      int64_t brute = brute_gp_count(*c.s.group(ge.spec));
      c.check("gp " + ge.spec + ": brute_gp_count = sum of e(G,N)",
              brute == sum, eq_detail("brute", brute, sum));
    }
  }
}

// ------------------------------------------------------------------- props --

// Direct enumeration of Hom(G, Hol(N)) with regular image, no crossed
// machinery: candidates must stay fixed point free with distinct
// translation parts. Only viable while the per-level candidate lists stay
// small; the caller falls back to the subgroup-level oracle otherwise.
int64_t count_regular_homs_direct(const Group& g, const Holomorph& hol,
                                  int64_t candCap) {
  const GenChain& c = default_chain(g);
  const Group& n = hol.base();
  const int32_t nAut = hol.auts().size();
  const int levels = c.levels();
  const int gn = g.order();

  // fpf table and per-level candidates (order must match exactly: a
  // regular image forces beta injective)
  std::vector<uint8_t> fpf(size_t(n.order()) * nAut, 1);
  for (int32_t p = 0; p < nAut; ++p)
    for (Elem x = 0; x < n.order(); ++x)
      fpf[size_t(n.mul(n.inv(x), hol.auts().apply(p, x))) * nAut + p] = 0;

  std::vector<std::vector<int32_t>> cands(levels);
  for (int i = 0; i < levels; ++i) {
    int og = g.elemOrder(c.gens[i]);
    for (int64_t code = 0; code < hol.size(); ++code) {
      auto cc = int32_t(code);
      if (!fpf[size_t(hol.transPart(cc)) * nAut + hol.autPart(cc)]) continue;
      if (hol.carrierOrder(cc) == og) cands[i].push_back(cc);
    }
    if (int64_t(cands[i].size()) > candCap) return -1;  // too wide
  }

  std::vector<int32_t> img(gn, -1);
  std::vector<uint8_t> transSeen(n.order(), 0);
  img[0] = 0;
  transSeen[0] = 1;
  int64_t count = 0;

  std::function<void(int)> rec = [&](int level) {
    if (level == levels) {
      ++count;
      return;
    }
    const int prevSize = level == 0 ? 1 : c.levelSize[level - 1];
    const int curSize = c.levelSize[level];
    const int gp = c.genPos[level];
    const bool forced = gp < prevSize;

    auto attempt = [&](int32_t cand) {
      if (!forced) {
        Elem a = hol.transPart(cand);
        if (transSeen[a]) return;
        img[gp] = cand;
        transSeen[a] = 1;
      }
      bool ok = true;
      int t = prevSize;
      for (; t < curSize; ++t) {
        if (t == gp) continue;
        int32_t val = hol.op(img[c.parent[t]], img[c.genPos[c.via[t]]]);
        Elem a = hol.transPart(val);
        if (transSeen[a] ||
            !fpf[size_t(a) * nAut + hol.autPart(val)]) {
          ok = false;
          break;
        }
        transSeen[a] = 1;
        img[t] = val;
      }
      if (ok) {
        for (const auto& e : c.edges[level])
          if (hol.op(img[e.xPos], img[c.genPos[e.gj]]) != img[e.xgPos]) {
            ok = false;
            break;
          }
      }
      if (ok) rec(level + 1);
      for (int u = prevSize; u < t; ++u)
        if (u != gp) transSeen[hol.transPart(img[u])] = 0;
      if (!forced) transSeen[hol.transPart(cand)] = 0;
    };

    if (forced)
      attempt(img[gp]);
    else
      for (int32_t cand : cands[level]) attempt(cand);
  };
  rec(0);
  return count;
}

struct Prop21Outcome {
  bool fullMode = false;
  bool pass = false;
  std::string detail;
};

Prop21Outcome prop21_pair(Ctx& c, const std::string& gs,
                          const std::string& ns) {
  Prop21Outcome out;
  auto gp = c.s.group(gs);
  auto np = c.s.group(ns);
  auto hol = build_holomorph(np);
  auto autN = automorphism_group(np);
  const Group& g = *gp;
  const Group& n = *np;
  const GenChain& chain = default_chain(g);

  constexpr int64_t kAutCap = 1024;       // full mode needs a small Aut(N)
  constexpr int64_t kActionCap = 20000;   // ... not too many actions
  constexpr int64_t kCocycleCap = 6000000;  // and a bounded beta stream
  out.fullMode = autN->size() <= kAutCap;
  if (out.fullMode) {
    // quick counting pre-pass over Hom(G, Aut(N))
    int64_t actions = 0;
    for_each_action_hom(g, *autN, chain, 1, 0, [&](const ActionHomView&) {
      return ++actions <= kActionCap;
    });
    if (actions > kActionCap) out.fullMode = false;
  }

  std::ostringstream os;
  if (out.fullMode) {
    // beta side: every (f, cocycle) pair, counted and multiset-hashed
    int64_t countBeta = 0;
    uint64_t hashBeta = 0;
    int64_t regBeta = 0;
    bool capped = false;
    bool sampleOk = true;
    int64_t sampleTick = 0;
    std::vector<int32_t> codes(g.order());
    CocycleSearchConfig cc;
    cc.g = &g;
    cc.n = &n;
    cc.chain = &chain;
    cc.mode = CocycleMode::All;
    for_each_action_hom(g, *autN, chain, 1, 0, [&](const ActionHomView& fv) {
      const std::vector<int32_t>& f = fv.indices();
      cc.actionPerms = fv.perms->data();
      enumerate_cocycles_chain(cc, [&](const std::vector<int32_t>& gg) {
        if (++countBeta > kCocycleCap) {
          capped = true;
          return false;
        }
        for (Elem x = 0; x < g.order(); ++x)
          codes[x] = hol->encode(gg[x], f[x]);
        hashBeta += hash_mix(fnv1a(codes.data(), codes.size() * 4));
        // bijective g <=> distinct translations <=> regular image
        bool bij = true;
        {
          std::vector<uint8_t> seen(n.order(), 0);
          for (auto v : gg) {
            if (seen[v]) {
              bij = false;
              break;
            }
            seen[v] = 1;
          }
        }
        if (bij) ++regBeta;
        if (sampleTick++ % 97 == 0) {
          // full-check the parametrized map really is a homomorphism
          if (!check_homomorphism(codes, g, *hol)) sampleOk = false;
          if (bij) {
            std::vector<int32_t> set = codes;
            std::sort(set.begin(), set.end());
            if (!is_regular_subset(*hol, set)) sampleOk = false;
          }
        }
        return true;
      });
      return !capped;
    });
    if (capped) {
      out.fullMode = false;  // fall through to the regular-part check
    } else {
      // direct side
      int64_t countDirect = 0;
      uint64_t hashDirect = 0;
      int64_t regDirect = 0;
      bool decompOk = true;
      int64_t tick = 0;
      HomSearchConfig<Holomorph> hc;
      hc.g = &g;
      hc.h = hol.get();
      hc.chain = &chain;
      hc.filter = HomFilter::All;
      enumerate_homs_chain<Holomorph>(hc, [&](const std::vector<int32_t>& im) {
        ++countDirect;
        hashDirect += hash_mix(fnv1a(im.data(), im.size() * 4));
        std::vector<uint8_t> seen(n.order(), 0);
        bool regular = true;
        for (auto code : im) {
          Elem a = hol->transPart(code);
          if (seen[a]) {
            regular = false;
            break;
          }
          seen[a] = 1;
        }
        if (regular) ++regDirect;
        if (tick++ % 97 == 0) {
          // decompose and verify the components
          std::vector<int32_t> f(g.order()), gg(g.order());
          for (Elem x = 0; x < g.order(); ++x) {
            f[x] = hol->autPart(im[x]);
            gg[x] = hol->transPart(im[x]);
          }
          if (!check_homomorphism(f, g, *autN)) decompOk = false;
          CrossedHom ch{&g, &n, autN.get(), f, gg};
          if (!check_cocycle(ch)) decompOk = false;
        }
        return true;
      });
      bool countsEq = countBeta == countDirect && hashBeta == hashDirect;
      bool regEq = regBeta == regDirect;
      out.pass = countsEq && regEq && sampleOk && decompOk;
      os << "full: |Hom|=" << countDirect << " beta=" << countBeta
         << " reg=" << regDirect << "/" << regBeta
         << (sampleOk && decompOk ? "" : " sample-check FAILED");
      out.detail = os.str();
      return out;
    }
  }

  // regular-part equality + trivial-action slice. The direct hom-level
  // search is used while its candidate lists stay narrow; for the wide
  // holomorphs the subgroup-level oracle supplies the independent route
  // (|Reg| = |Aut(G)| * #{regular subgroups isomorphic to G}).
  auto& rep = c.s.report(gs, ns, c.countOpt(false));
  int64_t regDirect = count_regular_homs_direct(g, *hol, /*candCap=*/3000);
  bool regEq;
  std::string regRoute;
  if (regDirect >= 0) {
    regEq = regDirect == rep.regCount;
    regRoute = "direct=" + std::to_string(regDirect);
  } else {
    auto autG = automorphism_group(gp);
    int64_t viaOracle =
        brute_reg_subgroups_hol(np, g) * int64_t(autG->size());
    regEq = viaOracle == rep.regCount;
    regRoute = "oracle=" + std::to_string(viaOracle);
  }

  // slice: Z^1 for the trivial action must be exactly Hom(G, N)
  Homomorphism f0{&g, std::vector<int32_t>(g.order(), 0)};
  auto f0p = action_perms(*autN, f0.image);
  int64_t slice = 0;
  CocycleSearchConfig cc;
  cc.g = &g;
  cc.n = &n;
  cc.actionPerms = f0p.data();
  cc.chain = &chain;
  cc.mode = CocycleMode::All;
  enumerate_cocycles_chain(cc, [&](const std::vector<int32_t>&) {
    ++slice;
    return true;
  });
  int64_t homCount = 0;
  GroupCarrier nc{&n};
  HomSearchConfig<GroupCarrier> hcg;
  hcg.g = &g;
  hcg.h = &nc;
  hcg.chain = &chain;
  hcg.filter = HomFilter::All;
  enumerate_homs_chain<GroupCarrier>(hcg, [&](const std::vector<int32_t>&) {
    ++homCount;
    return true;
  });
  bool sliceEq = slice == homCount;
  out.pass = regEq && sliceEq;
  os << "regular-part: " << regRoute << " |Reg|=" << rep.regCount
     << "; trivial-action slice " << slice << " vs |Hom(G,N)| " << homCount;
  out.detail = os.str();
  return out;
}

std::vector<std::pair<std::string, std::string>> suites15_pairs() {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& s : kAbelianOne) pairs.emplace_back(s, s);
  for (const auto& s : kAbelianTwo) pairs.emplace_back(s, s);
  pairs.insert(pairs.end(), {{"cyclic:9", "abelian:3,3"},
                             {"cyclic:27", "abelian:3,9"},
                             {"cyclic:27", "abelian:3,3,3"},
                             {"cyclic:27", "heis:3"},
                             {"cyclic:27", "c9xc3semi"},
                             {"cyclic:25", "abelian:5,5"},
                             {"alt:5", "alt:5"},
                             {"sl2:5", "sl2:5"},
                             {"sl2:5", "cyclic:120"},
                             {"sl2:5", "sym:5"},
                             {"sl2:5", "product:alt:5,cyclic:2"},
                             {"sl2:5", "dihedral:60"},
                             {"sym:5", "sym:5"},
                             {"sym:5", "product:alt:5,cyclic:2"},
                             {"sym:5", "cyclic:120"}});
  return pairs;
}

void suite_props(Ctx& c) {
  // (1) Prop 2.1 set equalities for all same-order catalog pairs <= 16
  {
    int fullPairs = 0, regPairs = 0;
    bool ok = true;
    std::string detail;
    for (int order = 1; order <= 16 && ok; ++order) {
      auto specs = catalog_specs(order);
      for (const auto& ge : specs) {
        for (const auto& ne : specs) {
          auto out = prop21_pair(c, ge.spec, ne.spec);
          (out.fullMode ? fullPairs : regPairs) += 1;
          if (!out.pass) {
            ok = false;
            detail = "(" + ge.spec + ", " + ne.spec + "): " + out.detail;
            break;
          }
        }
        if (!ok) break;
      }
    }
    c.check("prop 2.1 set equalities, all pairs <= 16 (" +
                std::to_string(fullPairs) + " full, " +
                std::to_string(regPairs) + " regular-part)",
            ok, detail);
  }

  // (2) power propagation identity on 10^4 sampled (f, sigma, k)
  {
    std::mt19937_64 rng(0x5eed5eedULL);
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"sym:3", "sym:3"},       {"cyclic:4", "cyclic:4"},
        {"dihedral:4", "quaternion:8"}, {"alt:4", "alt:4"},
        {"abelian:2,2,2", "abelian:2,2,2"}, {"cyclic:9", "abelian:3,3"}};
    int64_t samples = 0;
    bool ok = true;
    for (const auto& [gs, ns] : pairs) {
      auto gp = c.s.group(gs);
      auto np = c.s.group(ns);
      auto autN = automorphism_group(np);
      auto fs = enumerate_homs_into_aut(*gp, *autN, HomFilter::All);
      size_t fCap = std::min<size_t>(fs.size(), 24);
      for (size_t fi = 0; fi < fCap && ok; ++fi) {
        auto cocycles =
            enumerate_cocycles(*gp, *np, *autN, fs[fi], CocycleMode::All);
        size_t gCap = std::min<size_t>(cocycles.size(), 12);
        for (size_t gi = 0; gi < gCap && ok; ++gi) {
          const auto& ch = cocycles[gi];
          for (int rep = 0; rep < 12 && ok; ++rep) {
            Elem sigma = Elem(rng() % gp->order());
            int k = 1 + int(rng() % (2 * gp->order()));
            // g(sigma^k) = prod_{i<k} f(sigma)^i(g(sigma))
            Elem lhs = ch.images[gp->power(sigma, k)];
            Elem rhs = 0;
            int32_t fpow = 0;  // f(sigma)^i
            for (int i = 0; i < k; ++i) {
              rhs = np->mul(rhs, autN->apply(fpow, ch.images[sigma]));
              fpow = autN->compose(fpow, ch.action[sigma]);
            }
            if (lhs != rhs) ok = false;
            // and g(sigma^(e k)) = g(sigma^e)^k with e = |f(sigma)|
            int e = autN->orderOf(ch.action[sigma]);
            Elem base = ch.images[gp->power(sigma, e)];
            Elem lhs2 = ch.images[gp->power(sigma, int64_t(e) * k)];
            Elem rhs2 = 0;
            for (int i = 0; i < k; ++i) rhs2 = np->mul(rhs2, base);
            if (lhs2 != rhs2) ok = false;
            ++samples;
          }
        }
      }
      if (samples >= 10000) break;
    }
    c.check("power propagation identity on " + std::to_string(samples) +
                " samples",
            ok && samples >= 10000);
  }

  // (3) principal cocycles never bijective, catalog pairs |G| <= 24
  {
    bool ok = true;
    int64_t tried = 0;
    std::string detail;
    for (int order = 2; order <= 24 && ok; ++order) {
      auto specs = catalog_specs(order);
      for (const auto& ge : specs) {
        for (const auto& ne : specs) {
          auto gp = c.s.group(ge.spec);
          auto np = c.s.group(ne.spec);
          auto autN = automorphism_group(np);
          const GenChain& chain = default_chain(*gp);
          std::vector<uint8_t> seen(np->order());
          for_each_action_hom(
              *gp, *autN, chain, 1, 0, [&](const ActionHomView& fv) {
                const auto& fp = *fv.perms;
                for (Elem eta = 0; eta < np->order(); ++eta) {
                  ++tried;
                  // g_eta(s) = eta^-1 f(s)(eta); bijective would need all
                  // values distinct, and left translation is injective
                  std::fill(seen.begin(), seen.end(), 0);
                  bool bij = true;
                  for (Elem s = 0; s < gp->order(); ++s) {
                    Elem v = fp[s][eta];
                    if (seen[v]) {
                      bij = false;
                      break;
                    }
                    seen[v] = 1;
                  }
                  if (bij && gp->order() > 1) {
                    ok = false;
                    detail = "(" + ge.spec + ", " + ne.spec + ") eta=" +
                             std::to_string(eta);
                    return false;
                  }
                }
                return true;
              });
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    c.check("principal cocycles never bijective (" + std::to_string(tried) +
                " (f,eta) pairs, |G| <= 24)",
            ok, detail);
  }

  // (4) Prop 2.5 bijection counts for G = N <= 24 with liftable inner f
  {
    bool ok = true;
    std::string detail;
    int64_t classes = 0;
    for (int order = 1; order <= 24 && ok; ++order) {
      for (const auto& entry : catalog_specs(order)) {
        auto xp = c.s.group(entry.spec);
        auto autX = automorphism_group(xp);
        auto ends = enumerate_homs(*xp, *xp, HomFilter::All);
        // one representative f per induced action conj(f(.))
        std::map<std::vector<int32_t>, const Homomorphism*> reps;
        for (const auto& f : ends) {
          std::vector<int32_t> action(xp->order());
          for (Elem s = 0; s < xp->order(); ++s)
            action[s] = autX->conjIndex(f.image[s]);
          reps.emplace(std::move(action), &f);
        }
        for (auto& [action, f] : reps) {
          ++classes;
          int64_t z1 = 0, z1star = 0;
          auto ap = action_perms(*autX, action);
          CocycleSearchConfig cc;
          cc.g = xp.get();
          cc.n = xp.get();
          cc.actionPerms = ap.data();
          cc.chain = &default_chain(*xp);
          cc.mode = CocycleMode::All;
          enumerate_cocycles_chain(cc, [&](const std::vector<int32_t>& gg) {
            ++z1;
            std::vector<uint8_t> seen(xp->order(), 0);
            bool bij = true;
            for (auto v : gg) {
              if (seen[v]) {
                bij = false;
                break;
              }
              seen[v] = 1;
            }
            if (bij) ++z1star;
            return true;
          });
          int64_t fpfCount = 0;
          for (const auto& g2 : ends)
            if (is_fpf(*f, g2, *xp)) ++fpfCount;
          if (z1 != int64_t(ends.size()) || z1star != fpfCount) {
            ok = false;
            detail = entry.spec + ": |Z1|=" + std::to_string(z1) +
                     " |End|=" + std::to_string(ends.size()) +
                     " |Z1*|=" + std::to_string(z1star) +
                     " fpf=" + std::to_string(fpfCount);
            break;
          }
        }
        if (!ok) break;
      }
    }
    c.check("prop 2.5 bijection counts (" + std::to_string(classes) +
                " liftable inner action classes, G = N <= 24)",
            ok, detail);
  }

  // (5) Lemma-style reduction clauses in assertion mode over suites 1-5
  {
    int64_t checked = 0, failed = 0;
    for (const auto& [gs, ns] : suites15_pairs()) {
      auto& r = c.s.report(gs, ns, c.countOpt(true));
      checked += r.modCharChecked;
      failed += r.modCharFailed;
    }
    c.check("reduction clauses (a)-(d) on " + std::to_string(checked) +
                " (f,g,M) triples from suites 1-5",
            failed == 0 && checked > 0,
            "failed = " + std::to_string(failed));
  }

  // (6) pruning soundness: counts equal with pruning on and off, <= 27
  {
    bool ok = true;
    std::string detail;
    int pairs = 0;
    for (int order = 1; order <= 27 && ok; ++order) {
      auto specs = catalog_specs(order);
      for (const auto& ge : specs) {
        for (const auto& ne : specs) {
          ++pairs;
          auto on = c.s.report(ge.spec, ne.spec, c.countOpt(false));
          auto offOpt = c.countOpt(false);
          offOpt.prune = false;
          auto off = c.s.report(ge.spec, ne.spec, offOpt);
          if (on.regCount != off.regCount || on.eValue != off.eValue ||
              on.subgroupCount != off.subgroupCount) {
            ok = false;
            detail = "(" + ge.spec + ", " + ne.spec + ")";
            break;
          }
        }
        if (!ok) break;
      }
    }
    c.check("pruning on/off equality (" + std::to_string(pairs) +
                " pairs <= 27)",
            ok, detail);
  }

  // (7) determinism: byte-identical reports for worker counts 1 and 4
  {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"sym:3", "sym:3"},
        {"quaternion:8", "dihedral:4"},
        {"cyclic:9", "abelian:3,3"},
        {"alt:4", "alt:4"},
        {"abelian:4,4", "abelian:4,4"}};
    bool ok = true;
    std::string detail;
    for (const auto& [gs, ns] : pairs) {
      CountOptions o1;
      o1.workers = 1;
      CountOptions o4;
      o4.workers = 4;
      auto r1 = count_reg(c.s.group(gs), c.s.group(ns), o1);
      auto r4 = count_reg(c.s.group(gs), c.s.group(ns), o4);
      r1.elapsedMs = 0;
      r4.elapsedMs = 0;
      if (report_to_json(r1, true) != report_to_json(r4, true)) {
        ok = false;
        detail = "(" + gs + ", " + ns + ")";
        break;
      }
    }
    c.check("determinism under worker counts {1,4}", ok, detail);
  }

  // (8) rho/lambda recognition agrees with set classification
  {
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"sym:3", "sym:3"}, {"cyclic:4", "cyclic:4"}, {"alt:4", "alt:4"},
        {"dihedral:4", "dihedral:4"}, {"quaternion:8", "quaternion:8"}};
    for (const auto& [gs, ns] : pairs) {
      auto gp = c.s.group(gs);
      auto np = c.s.group(ns);
      auto hol = build_holomorph(np);
      auto autN = automorphism_group(np);
      auto rl = canonical_rho_lambda(*hol);
      auto z = structural_subgroup(*np, StructuralKind::Center);
      auto zq = quotient_group(*np, z);
      auto& r = c.s.report(gs, ns, c.countOpt(false));
      for (const auto& w : r.witnesses) {
        CrossedHom ch{gp.get(), np.get(), autN.get(), w.fImage, w.gImage};
        bool isRho = w.subgroupCodes == rl.first;
        bool isLambda = w.subgroupCodes == rl.second;
        if (beta_is_rho(ch) != isRho) ok = false;
        if (beta_is_lambda(ch, zq) != isLambda) ok = false;
        if (!ok) {
          detail = "(" + gs + ", " + ns + ")";
          break;
        }
      }
      if (!ok) break;
    }
    c.check("rho/lambda recognition matches set classification", ok, detail);
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"abelian", "cyclic-pn", "quasisimple", "2a5", "s5", "oracle",
          "props"};
}

SuiteResult run_suite(Session& session, const std::string& name,
                      const VerifyOptions& opt) {
  Ctx ctx{session, opt, {}};
  ctx.res.suite = name;
  auto t0 = Clock::now();
  if (name == "abelian") {
    ctx.res.budgetSec = 600;
    suite_abelian(ctx);
  } else if (name == "cyclic-pn") {
    ctx.res.budgetSec = 300;
    suite_cyclic_pn(ctx);
  } else if (name == "quasisimple") {
    ctx.res.budgetSec = opt.extended ? 16200 : 1800;
    suite_quasisimple(ctx);
  } else if (name == "2a5") {
    ctx.res.budgetSec = 14400;
    suite_2a5(ctx);
  } else if (name == "s5") {
    ctx.res.budgetSec = 14400;
    suite_s5(ctx);
  } else if (name == "oracle") {
    ctx.res.budgetSec = 900 + 600;
    suite_oracle_byott(ctx);
    suite_oracle_gp(ctx);
  } else if (name == "oracle-byott") {
    ctx.res.budgetSec = 900;
    suite_oracle_byott(ctx);
  } else if (name == "oracle-gp") {
    ctx.res.budgetSec = 600;
    suite_oracle_gp(ctx);
  } else if (name == "props") {
    suite_props(ctx);
  } else {
    fail("unknown suite: " + name + " (expected one of abelian, cyclic-pn, "
         "quasisimple, 2a5, s5, oracle, props)");
  }
  ctx.res.elapsedSec = seconds_since(t0);
  return ctx.res;
}

void print_suite(std::ostream& os, const SuiteResult& r) {
  for (const auto& ch : r.checks) {
    os << (ch.pass ? "[PASS] " : "[FAIL] ") << ch.name;
    if (!ch.detail.empty()) os << "  -- " << ch.detail;
    os << "\n";
  }
  os << "suite " << r.suite << ": "
     << (r.pass() ? "all checks passed" : "FAILURES") << " ("
     << r.elapsedSec << " s";
  if (r.budgetSec > 0) os << ", budget " << r.budgetSec << " s";
  os << ")\n";
}

}  // namespace holocount
