#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "bsdilate/search.hpp"

namespace {

using namespace bsd;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

bool looks_like_monoid(const std::string& s) {
  return s.find('b') != std::string::npos || s.find('a') != std::string::npos;
}

MonoidSet parse_monoid_arg(const std::string& s, GroupParams params) {
  if (s.find("slices") != std::string::npos)
    return monoid_set_from_json(nlohmann::json::parse(s));
  return parse_monoid_set(s, params);
}

void parse_k_range(const std::string& text, SearchSpec& spec) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    spec.k_min = spec.k_max = std::stoull(text);
  } else {
    spec.k_min = std::stoull(text.substr(0, pos));
    spec.k_max = std::stoull(text.substr(pos + 2));
  }
}

void print_verdict(const BoundVerdict& v, const std::string& output) {
  if (output == "json") {
    std::cout << to_json(v).dump(2) << "\n";
    return;
  }
  std::cout << "theorem=" << theorem_name(v.id)
            << " hypotheses_met=" << (v.hypotheses_met ? "yes" : "no");
  if (!v.reason.empty()) std::cout << " reason=\"" << v.reason << "\"";
  if (v.hypotheses_met) {
    std::cout << " lhs=" << v.lhs << " bound=" << v.bound.str();
    if (v.slack_h) std::cout << " h=" << *v.slack_h;
    std::cout << " holds=" << (v.holds ? "yes" : "no")
              << " boundary=" << (v.boundary ? "yes" : "no");
  }
  std::cout << " input=\"" << v.input << "\"\n";
}

void print_report(const ScanReport& rep, const std::string& output) {
  if (output == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
    return;
  }
  if (output == "csv") {
    std::cout << to_csv(rep);
    return;
  }
  std::cout << "theorem=" << theorem_name(rep.theorem)
            << " scanned=" << rep.instances_scanned
            << " hypotheses_met=" << rep.hypotheses_met_count
            << " violations=" << rep.violations.size();
  if (rep.min_slack) std::cout << " min_slack=" << rep.min_slack->str();
  std::cout << " wall_time_s=" << rep.wall_time_s << "\n";
  for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
  for (const auto& v : rep.violations) {
    std::cout << "VIOLATION: ";
    print_verdict(v, "human");
  }
  for (const auto& b : rep.boundary_cases) std::cout << "boundary: " << b << "\n";
  for (const auto& e : rep.equality_cases) std::cout << "equality: " << e << "\n";
}

BoundVerdict run_verify(TheoremId id, const std::vector<std::string>& sets,
                        unsigned n, long long r) {
  GroupParams params(n);
  auto need = [&](std::size_t count) {
    if (sets.size() != count)
      throw std::domain_error("verify: theorem expects " +
                              std::to_string(count) + " --set argument(s)");
  };
  switch (id) {
    case TheoremId::Cor1_6:
      need(1);
      return verify_cor1(parse_intset(sets[0]), r);
    case TheoremId::BS12_Direct:
      need(1);
      return verify_bs12(parse_intset(sets[0]));
    case TheoremId::BS12_Inverse:
      need(1);
      return verify_bs12_inverse(parse_intset(sets[0]));
    case TheoremId::Thm1_3:
      need(1);
      return verify_thm1(parse_intset(sets[0]));
    case TheoremId::Thm1_5:
      need(1);
      return verify_thm15(parse_intset(sets[0]));
    case TheoremId::LSS_1:
    case TheoremId::LSS_2:
      need(2);
      return verify_lss(parse_intset(sets[0]), parse_intset(sets[1]));
    case TheoremId::Thm3_Direct:
      need(1);
      return verify_thm3_direct(parse_monoid_arg(sets[0], params));
    case TheoremId::Thm3_Inverse:
      need(1);
      return verify_thm3_inverse(parse_monoid_arg(sets[0], params));
    default:
      need(1);
      return verify_lemma(parse_monoid_arg(sets[0], params), id);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for BS+(1,n): products, sumsets, dilates, "
               "structure reports and cardinality-bound verification"};
  app.require_subcommand(1);

  unsigned n = 3;
  long long r = 3;
  std::string output = "human";
  std::string theorem;
  std::vector<std::string> sets;
  std::vector<long long> moduli;
  std::string k_range;
  std::string config_path;
  SearchSpec spec;
  std::uint64_t budget = 10000, seed = 0;
  bool have_window = false, have_k = false, have_max_b = false,
       have_max_slices = false, have_r = false, have_n = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n,--base", n, "group base n (default 3)")
        ->each([&](const std::string&) { have_n = true; });
    sub->add_option("-o,--output", output, "human|json|csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
  };
  auto add_spec_opts = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--theorem", theorem, "bound to check")->required();
    sub->add_option("--window", spec.window)->each([&](const std::string&) {
      have_window = true;
    });
    sub->add_option("--k", k_range, "size range, e.g. 3..5 or 4")
        ->each([&](const std::string&) { have_k = true; });
    sub->add_option("--max-b", spec.max_b_exponent)
        ->each([&](const std::string&) { have_max_b = true; });
    sub->add_option("--max-slices", spec.max_slices)
        ->each([&](const std::string&) { have_max_slices = true; });
    sub->add_option("--r", r)->each([&](const std::string&) { have_r = true; });
    sub->add_flag("--require-zero", spec.require_zero);
    sub->add_flag("--require-d1", spec.require_d1);
    sub->add_flag("--canonical", spec.canonical_dedup);
    sub->add_flag("--nonabelian", spec.require_nonabelian);
    sub->add_option("--config", config_path, "JSON file with the scan spec");
  };

  auto* mul = app.add_subcommand("mul", "multiply two monoid elements");
  std::vector<std::string> elems;
  mul->add_option("elements", elems, "two elements, e.g. \"b^1*a^2\"")
      ->expected(2);
  add_common(mul);

  auto* sq = app.add_subcommand("square", "S^2 of a monoid set (or A+A)");
  std::string sq_set;
  sq->add_option("set", sq_set)->required();
  add_common(sq);

  auto* ds = app.add_subcommand("dilate-sum", "r.A + s.B");
  std::string ds_r, ds_a, ds_s, ds_b;
  ds->add_option("r", ds_r)->required();
  ds->add_option("A", ds_a)->required();
  ds->add_option("s", ds_s)->required();
  ds->add_option("B", ds_b)->required();
  add_common(ds);

  auto* an = app.add_subcommand("analyze", "structure report for an IntSet");
  std::string an_set;
  an->add_option("set", an_set)->required();
  an->add_option("--mod", moduli, "moduli for residue-class counts");
  add_common(an);

  auto* cl = app.add_subcommand("classify", "extremal class of an IntSet");
  std::string cl_set;
  cl->add_option("set", cl_set)->required();
  add_common(cl);

  auto* vf = app.add_subcommand("verify", "check one bound on given input");
  vf->add_option("--theorem", theorem)->required();
  vf->add_option("--set", sets, "input set(s); repeatable")->required();
  vf->add_option("--r", r)->each([&](const std::string&) { have_r = true; });
  add_common(vf);

  auto* sc = app.add_subcommand("scan", "exhaustive window scan of a bound");
  add_spec_opts(sc);

  auto* hu = app.add_subcommand("hunt", "seeded randomized bound search");
  add_spec_opts(hu);
  hu->add_option("--budget", budget, "number of random instances");
  hu->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    GroupParams params(n);
    if (mul->parsed()) {
      MonoidElement e =
          multiply(parse_element(elems[0]), parse_element(elems[1]), params);
      if (output == "json")
        std::cout << nlohmann::json{{"result", format_element(e)}}.dump()
                  << "\n";
      else
        std::cout << format_element(e) << "\n";
      return kExitOk;
    }
    if (sq->parsed()) {
      if (looks_like_monoid(sq_set)) {
        MonoidSet S2 = square(parse_monoid_arg(sq_set, params));
        if (output == "json")
          std::cout << to_json(S2).dump() << "\n";
        else
          std::cout << format_monoid_set(S2) << " |.|=" << S2.size() << "\n";
      } else {
        IntSet A = parse_intset(sq_set);
        IntSet A2 = sumset(A, A);
        std::cout << format_intset(A2) << " |.|=" << A2.size() << "\n";
      }
      return kExitOk;
    }
    if (ds->parsed()) {
      IntSet out = dilate_sum(BigInt(ds_r), parse_intset(ds_a), BigInt(ds_s),
                              parse_intset(ds_b));
      if (output == "json") {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : out.values()) vals.push_back(v.str());
        std::cout << nlohmann::json{{"set", vals}, {"size", out.size()}}.dump()
                  << "\n";
      } else {
        std::cout << format_intset(out) << " |.|=" << out.size() << "\n";
      }
      return kExitOk;
    }
    if (an->parsed()) {
      StructureReport rep = analyze(parse_intset(an_set), moduli);
      if (output == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "length=" << rep.length << " d=" << rep.gcd_diffs
                  << " holes=" << rep.holes
                  << " normalized=" << format_intset(rep.normalized)
                  << " normalized_length=" << rep.normalized_length
                  << " min_ap_size=" << rep.min_ap_size << "\n";
        for (const auto& [m, c] : rep.classes)
          std::cout << "c_" << m << "=" << c << "\n";
      }
      return kExitOk;
    }
    if (cl->parsed()) {
      ExtremalClass cls = classify_extremal(parse_intset(cl_set));
      if (output == "json") {
        std::cout << nlohmann::json{{"tag", extremal_tag_name(cls.tag)},
                                    {"union_n", cls.union_n},
                                    {"u", cls.witness_u.str()},
                                    {"v", cls.witness_v.str()}}
                         .dump()
                  << "\n";
      } else if (cls.tag == ExtremalTag::None) {
        std::cout << "None\n";
      } else {
        std::cout << extremal_tag_name(cls.tag);
        if (cls.tag == ExtremalTag::UnionType)
          std::cout << "(n=" << cls.union_n << ")";
        std::cout << " witness: u=" << cls.witness_u
                  << " v=" << cls.witness_v << "\n";
      }
      return kExitOk;
    }

    auto id = theorem_from_name(theorem);
    if (!id) {
      std::cerr << "unknown theorem name: " << theorem << "\n";
      return kExitUsage;
    }
    if (vf->parsed()) {
      BoundVerdict v = run_verify(*id, sets, n, r);
      print_verdict(v, output);
      return v.hypotheses_met && !v.holds ? kExitViolation : kExitOk;
    }

    // scan / hunt
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::domain_error("cannot open config: " + config_path);
      SearchSpec file_spec = spec_from_json(nlohmann::json::parse(in));
      // explicit flags override the config file
      if (!have_window) spec.window = file_spec.window;
      if (!have_k) {
        spec.k_min = file_spec.k_min;
        spec.k_max = file_spec.k_max;
      }
      if (!have_max_b) spec.max_b_exponent = file_spec.max_b_exponent;
      if (!have_max_slices) spec.max_slices = file_spec.max_slices;
      if (!have_r) r = file_spec.r;
      spec.require_zero = spec.require_zero || file_spec.require_zero;
      spec.require_d1 = spec.require_d1 || file_spec.require_d1;
      spec.canonical_dedup = spec.canonical_dedup || file_spec.canonical_dedup;
      spec.require_nonabelian =
          spec.require_nonabelian || file_spec.require_nonabelian;
      if (!have_n) n = file_spec.n;
    }
    if (have_k) parse_k_range(k_range, spec);
    spec.n = n;
    spec.r = r;
    ScanReport rep = sc->parsed() ? scan_bound(*id, spec)
                                  : hunt(*id, spec, budget, seed);
    print_report(rep, output);
    return rep.clean() ? kExitOk : kExitViolation;
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.offset << ": " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::overflow_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
