#include "magma/laws.hpp"

#include <cstdio>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "magma/bialgebra.hpp"
#include "magma/coalgebra.hpp"
#include "magma/parallel.hpp"
#include "magma/random.hpp"
#include "magma/series.hpp"
#include "magma/text.hpp"

namespace magma {
namespace {

// A case with its evaluation deferred, so the list can be fanned out.
struct Pending {
  std::string id;
  std::string input;
  std::function<void(CaseResult&)> run;
};

// Pass/fail bookkeeping for a case that sweeps many inputs.
struct Tally {
  long total = 0;
  long good = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++total;
    if (ok) {
      ++good;
      return;
    }
    if (first.empty()) first = describe();
  }

  void fill(CaseResult& r) const {
    r.expected = "agree on " + std::to_string(total) + "/" + std::to_string(total);
    r.got = "agree on " + std::to_string(good) + "/" + std::to_string(total);
    if (!first.empty()) r.got += "; first mismatch at " + first;
    r.pass = good == total;
  }
};

std::string pad3(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d", i);
  return buf;
}

std::vector<std::vector<BasisKey>> basis_by_degree(const MagAlgebra& H, int max_degree) {
  std::vector<std::vector<BasisKey>> out(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 1; d <= max_degree; ++d) out[static_cast<std::size_t>(d)] = H.basis(d);
  return out;
}

std::string tuple_text(const Alphabet& a, const std::vector<BasisKey>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_basis(a, xs[i]);
  }
  return out + ")";
}

// Visits every tuple of unit-free basis vectors with the given slot count
// and exact total degree, in canonical order.
void unit_free_tuples(const std::vector<std::vector<BasisKey>>& bydeg, int slots, int total,
                      std::vector<BasisKey>& acc,
                      const std::function<void(const std::vector<BasisKey>&)>& visit) {
  if (slots == 0) {
    if (total == 0) visit(acc);
    return;
  }
  for (int d = 1; d <= total - (slots - 1); ++d) {
    for (const BasisKey& b : bydeg[static_cast<std::size_t>(d)]) {
      acc.push_back(b);
      unit_free_tuples(bydeg, slots - 1, total - d, acc, visit);
      acc.pop_back();
    }
  }
}

// Applies the counit to every slot except `keep`.
Element counit_slice(const TensorElement& t, int keep) {
  Element out;
  for (const auto& [tuple, c] : t.terms()) {
    bool rest_unit = true;
    for (int j = 0; j < static_cast<int>(tuple.size()); ++j) {
      if (j != keep && !tuple[static_cast<std::size_t>(j)].is_unit()) {
        rest_unit = false;
        break;
      }
    }
    if (rest_unit) out.add_term(tuple[static_cast<std::size_t>(keep)], c);
  }
  return out;
}

std::vector<Pending> build_unitality(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;
  for (int n = 2; n <= 4; ++n) {
    if (!H.bound().allows(n)) continue;
    for (int i = 0; i < n; ++i) {
      Pending p;
      p.id = "unitality/arity-" + std::to_string(n) + "/slot-" + std::to_string(i);
      p.input = "mu_" + std::to_string(n) + " with b in slot " + std::to_string(i) +
                " and 1 elsewhere, for every basis tree b of degree <= " +
                std::to_string(cfg.degree);
      p.run = [&H, n, i, D = cfg.degree](CaseResult& r) {
        Tally t;
        for (int d = 1; d <= D; ++d) {
          for (const BasisKey& b : H.basis(d)) {
            std::vector<Element> args(static_cast<std::size_t>(n), Element::unit());
            args[static_cast<std::size_t>(i)] = Element::basis(b);
            Element got = mu(H, n, args);
            t.check(got == Element::basis(b), [&] {
              return format_basis(H.alphabet(), b) + ": got " +
                     format_element(H.alphabet(), got);
            });
          }
        }
        t.fill(r);
      };
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Pending> build_counitality(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;
  for (int n = 2; n <= 4; ++n) {
    if (!H.bound().allows(n)) continue;
    for (int i = 0; i < n; ++i) {
      Pending p;
      p.id = "counitality/arity-" + std::to_string(n) + "/slot-" + std::to_string(i);
      p.input = "counit on every slot but " + std::to_string(i) + " of delta_" +
                std::to_string(n) + "(b), for every basis tree b of degree <= " +
                std::to_string(cfg.degree);
      p.run = [&H, n, i, D = cfg.degree](CaseResult& r) {
        Tally t;
        for (int d = 1; d <= D; ++d) {
          for (const BasisKey& b : H.basis(d)) {
            Element got = counit_slice(delta(H, n, Element::basis(b)), i);
            t.check(got == Element::basis(b), [&] {
              return format_basis(H.alphabet(), b) + ": got " +
                     format_element(H.alphabet(), got);
            });
          }
        }
        t.fill(r);
      };
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Pending> build_compat(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;
  for (int dm = 2; dm <= 4; ++dm) {
    if (!H.bound().allows(dm)) continue;
    for (int dn = 2; dn <= 4; ++dn) {
      if (!H.bound().allows(dn)) continue;
      Pending p;
      p.id = "compat/delta-" + std::to_string(dm) + "/mu-" + std::to_string(dn);
      p.input = "delta_" + std::to_string(dm) + " of mu_" + std::to_string(dn) +
                " on every unit-free basis tuple of total degree <= " +
                std::to_string(cfg.degree);
      p.run = [&H, dm, dn, D = cfg.degree](CaseResult& r) {
        Tally t;
        auto bydeg = basis_by_degree(H, D);
        std::vector<BasisKey> acc;
        for (int total = dn; total <= D; ++total) {
          unit_free_tuples(bydeg, dn, total, acc, [&](const std::vector<BasisKey>& keys) {
            std::vector<Element> xs;
            xs.reserve(keys.size());
            for (const BasisKey& b : keys) xs.push_back(Element::basis(b));
            TensorElement lhs = delta(H, dm, mu(H, dn, xs));
            TensorElement rhs = compat_rhs(H, dm, dn, xs);
            t.check(lhs == rhs, [&] { return tuple_text(H.alphabet(), keys); });
          });
        }
        t.fill(r);
      };
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Pending> build_corolla_reduced(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;
  int top = std::max(2, cfg.degree);
  for (int n = 2; n <= top; ++n) {
    if (!H.bound().allows(n)) continue;
    for (int dm = 2; dm <= top; ++dm) {
      if (!H.bound().allows(dm)) continue;
      Pending p;
      p.id = "corolla-reduced/corolla-" + std::to_string(n) + "/delta-" + std::to_string(dm);
      p.input = "reduced delta_" + std::to_string(dm) + " of the " + std::to_string(n) +
                "-corolla, every label word";
      p.run = [&H, n, dm](CaseResult& r) {
        Tally t;
        PlanarTree shape = PlanarTree::corolla(n);
        int letters = H.alphabet().size();
        LabelWord word(static_cast<std::size_t>(n), '\0');
        std::function<void(int)> walk = [&](int pos) {
          if (pos == n) {
            BasisKey b(shape, word);
            TensorElement got = delta_reduced(H, dm, Element::basis(b));
            TensorElement want(dm);
            if (dm == n) {
              std::vector<BasisKey> leaves;
              for (int j = 0; j < n; ++j)
                leaves.push_back(BasisKey::leaf(static_cast<unsigned char>(word[static_cast<std::size_t>(j)])));
              want.add_term(leaves, 1);
            }
            t.check(got == want, [&] { return format_basis(H.alphabet(), b); });
            return;
          }
          for (int a = 0; a < letters; ++a) {
            word[static_cast<std::size_t>(pos)] = static_cast<char>(a);
            walk(pos + 1);
          }
        };
        walk(0);
        t.fill(r);
      };
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Pending> build_idempotent(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;

  SplitMix64 rng(cfg.seed);
  auto xs = std::make_shared<std::vector<Element>>();
  for (int i = 0; i < cfg.samples; ++i) xs->push_back(random_element(H, rng, cfg.degree));

  Pending twice;
  twice.id = "idempotent/e-after-e";
  twice.input = std::to_string(cfg.samples) + " seeded random elements of degree <= " +
                std::to_string(cfg.degree) + ", seed " + std::to_string(cfg.seed);
  twice.run = [&H, xs](CaseResult& r) {
    Tally t;
    for (const Element& x : *xs) {
      Element once = idempotent_e(H, x);
      t.check(idempotent_e(H, once) == once,
              [&] { return format_element(H.alphabet(), x); });
    }
    t.fill(r);
  };
  out.push_back(std::move(twice));

  Pending unit;
  unit.id = "idempotent/unit";
  unit.input = "e(1)";
  unit.run = [&H](CaseResult& r) {
    Element got = idempotent_e(H, Element::unit());
    r.expected = "0";
    r.got = format_element(H.alphabet(), got);
    r.pass = got.is_zero();
  };
  out.push_back(std::move(unit));

  Pending deg1;
  deg1.id = "idempotent/degree-one";
  deg1.input = "e on every degree-1 basis vector";
  deg1.run = [&H](CaseResult& r) {
    Tally t;
    for (const BasisKey& b : H.basis(1)) {
      t.check(idempotent_e(H, Element::basis(b)) == Element::basis(b),
              [&] { return format_basis(H.alphabet(), b); });
    }
    t.fill(r);
  };
  out.push_back(std::move(deg1));

  return out;
}

std::vector<Pending> build_image_prim(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;
  for (int d = 1; d <= cfg.degree; ++d) {
    Pending p;
    p.id = "image-prim/deg-" + std::to_string(d);
    p.input = "e-images, primitivity, and primitive_basis on all basis vectors of degree " +
              std::to_string(d);
    p.run = [&H, d](CaseResult& r) {
      Tally t;
      std::vector<Element> prims = primitive_basis(H, d);
      if (d == 1) {
        std::vector<BasisKey> leaves = H.basis(1);
        t.check(static_cast<int>(prims.size()) == H.alphabet().size(),
                [&] { return "primitive_basis size " + std::to_string(prims.size()); });
        for (std::size_t i = 0; i < leaves.size() && i < prims.size(); ++i) {
          t.check(prims[i] == Element::basis(leaves[i]),
                  [&] { return format_element(H.alphabet(), prims[i]); });
        }
        for (const BasisKey& b : leaves) {
          Element x = Element::basis(b);
          t.check(idempotent_e(H, x) == x && is_primitive(x),
                  [&] { return format_basis(H.alphabet(), b); });
        }
      } else {
        t.check(prims.empty(),
                [&] { return "primitive_basis size " + std::to_string(prims.size()); });
        for (const BasisKey& b : H.basis(d)) {
          Element x = Element::basis(b);
          t.check(idempotent_e(H, x).is_zero() && !is_primitive(x),
                  [&] { return format_basis(H.alphabet(), b); });
        }
      }
      t.fill(r);
    };
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pending> build_kills_products(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;
  for (int n = 2; n <= cfg.degree; ++n) {
    if (!H.bound().allows(n)) continue;
    Pending p;
    p.id = "kills-products/mu-" + std::to_string(n);
    p.input = "e of mu_" + std::to_string(n) +
              " on every unit-free basis tuple of total degree <= " +
              std::to_string(cfg.degree);
    p.run = [&H, n, D = cfg.degree](CaseResult& r) {
      Tally t;
      auto bydeg = basis_by_degree(H, D);
      std::vector<BasisKey> acc;
      for (int total = n; total <= D; ++total) {
        unit_free_tuples(bydeg, n, total, acc, [&](const std::vector<BasisKey>& keys) {
          std::vector<Element> xs;
          xs.reserve(keys.size());
          for (const BasisKey& b : keys) xs.push_back(Element::basis(b));
          t.check(idempotent_e(H, mu(H, n, xs)).is_zero(),
                  [&] { return tuple_text(H.alphabet(), keys); });
        });
      }
      t.fill(r);
    };
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pending> build_finv(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;
  int D = cfg.degree;
  ArityBound m = H.bound();

  auto series_case = [&](std::string id, std::string input,
                         std::function<std::pair<TreeSeries, TreeSeries>()> sides) {
    Pending p;
    p.id = std::move(id);
    p.input = std::move(input);
    p.run = [sides = std::move(sides)](CaseResult& r) {
      auto [got, want] = sides();
      r.expected = format_series(want);
      r.got = format_series(got);
      r.pass = got == want;
    };
    out.push_back(std::move(p));
  };

  series_case("finv/g-after-f", "compose(g, f, " + std::to_string(D) + ")", [m, D] {
    return std::pair(compose(g_series(D, m), f_series(D, m), D), TreeSeries::generator(m, D));
  });
  series_case("finv/f-after-g", "compose(f, g, " + std::to_string(D) + ")", [m, D] {
    return std::pair(compose(f_series(D, m), g_series(D, m), D), TreeSeries::generator(m, D));
  });
  series_case("finv/invert-g", "invert(g, " + std::to_string(D) + ")", [m, D] {
    return std::pair(invert(g_series(D, m), D), f_series(D, m));
  });
  series_case("finv/invert-f", "invert(f, " + std::to_string(D) + ")", [m, D] {
    return std::pair(invert(f_series(D, m), D), g_series(D, m));
  });
  return out;
}

std::vector<Pending> build_conv_hom(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;
  SplitMix64 rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    TreeSeries phi = random_series(H.bound(), rng, cfg.degree, false);
    TreeSeries psi = random_series(H.bound(), rng, cfg.degree, false);
    Pending p;
    p.id = "conv-hom/pair-" + pad3(i);
    p.input = format_series(phi) + "  ;  " + format_series(psi);
    p.run = [&H, phi, psi, D = cfg.degree](CaseResult& r) {
      Tally t;
      Endomorphism composed = to_endomorphism(compose(phi, psi, D), H);
      Endomorphism chained = to_endomorphism(phi, H, memoize_on_basis(to_endomorphism(psi, H)));
      for (int d = 1; d <= D; ++d) {
        for (const BasisKey& b : H.basis(d)) {
          Element x = Element::basis(b);
          t.check(composed(x) == chained(x),
                  [&] { return format_basis(H.alphabet(), b); });
        }
      }
      t.fill(r);
    };
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pending> build_rigidity(const VerifyConfig& cfg, const MagAlgebra& H) {
  std::vector<Pending> out;

  Pending unit;
  unit.id = "rigidity/unit";
  unit.input = "phi(psi(1)) and psi(phi(1))";
  unit.run = [&H](CaseResult& r) {
    Element one = Element::unit();
    Element a = iso_phi(H, iso_psi(H, one));
    Element b = iso_psi(H, iso_phi(H, one));
    r.expected = "1 and 1";
    r.got = format_element(H.alphabet(), a) + " and " + format_element(H.alphabet(), b);
    r.pass = a == one && b == one;
  };
  out.push_back(std::move(unit));

  for (int d = 1; d <= cfg.degree; ++d) {
    Pending p;
    p.id = "rigidity/deg-" + std::to_string(d);
    p.input = "phi(psi(b)) and psi(phi(b)) on all basis vectors b of degree " +
              std::to_string(d);
    p.run = [&H, d](CaseResult& r) {
      Tally t;
      for (const BasisKey& b : H.basis(d)) {
        Element x = Element::basis(b);
        t.check(iso_phi(H, iso_psi(H, x)) == x && iso_psi(H, iso_phi(H, x)) == x,
                [&] { return format_basis(H.alphabet(), b); });
      }
      t.fill(r);
    };
    out.push_back(std::move(p));
  }
  return out;
}

using Builder = std::vector<Pending> (*)(const VerifyConfig&, const MagAlgebra&);

struct LawDef {
  const char* name;
  const char* statement;
  Builder build;
};

const LawDef kLaws[] = {
    {"unitality", "mu_n(1, ..., x, ..., 1) = x for every slot", build_unitality},
    {"counitality", "collapsing all slots but one of delta_n(x) with the counit returns x",
     build_counitality},
    {"compat",
     "delta_m of mu_n equals the unit placements of the product plus all "
     "order-preserving distributions of the arguments",
     build_compat},
    {"corolla-reduced",
     "reduced delta_n of the n-corolla is the n-fold tensor of its leaves; "
     "every other arity gives zero",
     build_corolla_reduced},
    {"idempotent", "e(e(x)) = e(x); e kills the unit and fixes degree one", build_idempotent},
    {"image-prim",
     "the image of e spans exactly the primitive part, which is the degree-one component",
     build_image_prim},
    {"kills-products", "e vanishes on every n-ary product of unit-free elements",
     build_kills_products},
    {"finv", "the tree series f and g are mutually inverse under substitution", build_finv},
    {"conv-hom",
     "substitution of tree series matches composition of the induced endomorphisms",
     build_conv_hom},
    {"rigidity", "phi and psi are mutually inverse, so the bialgebra is free over its "
                 "primitives",
     build_rigidity},
};

CaseResult evaluate(const Pending& p) {
  CaseResult r;
  r.id = p.id;
  r.input = p.input;
  try {
    p.run(r);
  } catch (const std::exception& ex) {
    r.pass = false;
    if (r.expected.empty()) r.expected = "no exception";
    r.got = std::string("exception: ") + ex.what();
  }
  return r;
}

const LawDef* find_law(const std::string& name) {
  for (const LawDef& def : kLaws)
    if (name == def.name) return &def;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const LawDef& def : kLaws) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

LawReport run_law(const VerifyConfig& cfg) {
  const LawDef* def = find_law(cfg.law);
  if (!def) throw std::invalid_argument("unknown law '" + cfg.law + "'");
  if (cfg.degree < 1) throw std::invalid_argument("--degree must be at least 1");
  if (cfg.samples < 1) throw std::invalid_argument("--samples must be at least 1");

  MagAlgebra H(cfg.bound, Alphabet::parse("x,y"));
  std::vector<Pending> pending = def->build(cfg, H);

  LawReport report;
  report.law = def->name;
  report.arity_bound = cfg.bound.str();
  report.degree = cfg.degree;
  report.paper_ref = def->statement;
  report.cases.resize(pending.size());
  auto* slots = report.cases.data();
  for_each_index(static_cast<int>(pending.size()), cfg.workers,
                 [&pending, slots](int i) { slots[i] = evaluate(pending[static_cast<std::size_t>(i)]); });
  report.pass = true;
  for (const CaseResult& c : report.cases) report.pass = report.pass && c.pass;
  return report;
}

std::vector<LawReport> run_verify(const VerifyConfig& cfg) {
  std::vector<LawReport> out;
  if (cfg.law == "all") {
    for (const LawDef& def : kLaws) {
      VerifyConfig one = cfg;
      one.law = def.name;
      out.push_back(run_law(one));
    }
    return out;
  }
  out.push_back(run_law(cfg));
  return out;
}

bool all_pass(const std::vector<LawReport>& reports) {
  for (const LawReport& r : reports)
    if (!r.pass) return false;
  return true;
}

std::string reports_json(const std::vector<LawReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const LawReport& rep : reports) {
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const CaseResult& c : rep.cases) {
      cases.push_back({{"id", c.id},
                       {"input", c.input},
                       {"expected", c.expected},
                       {"got", c.got},
                       {"pass", c.pass}});
    }
    arr.push_back({{"law", rep.law},
                   {"arity_bound", rep.arity_bound},
                   {"degree", rep.degree},
                   {"cases", std::move(cases)},
                   {"pass", rep.pass},
                   {"paper_ref", rep.paper_ref}});
  }
  return arr.dump(2) + "\n";
}

std::string reports_text(const std::vector<LawReport>& reports) {
  std::string out;
  for (const LawReport& rep : reports) {
    out += "law " + rep.law + " (arity " + rep.arity_bound + ", degree " +
           std::to_string(rep.degree) + "): " + (rep.pass ? "PASS" : "FAIL") + ", " +
           std::to_string(rep.cases.size()) + " cases\n";
    for (const CaseResult& c : rep.cases) {
      if (c.pass) continue;
      out += "  FAIL " + c.id + "\n";
      out += "    input:    " + c.input + "\n";
      out += "    expected: " + c.expected + "\n";
      out += "    got:      " + c.got + "\n";
    }
  }
  out += all_pass(reports) ? "PASS\n" : "FAIL\n";
  return out;
}

}  // namespace magma
