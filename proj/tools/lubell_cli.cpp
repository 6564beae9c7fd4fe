// Command-line front end for the lubell library.
//
// Exit codes: 0 success/verified, 1 negative mathematical answer,
// 2 usage/format error, 3 capacity or budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lubell/constructions.hpp"
#include "lubell/error.hpp"
#include "lubell/extract.hpp"
#include "lubell/family.hpp"
#include "lubell/io.hpp"
#include "lubell/search.hpp"
#include "lubell/verify.hpp"

using json = nlohmann::json;
using namespace lubell;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case Errc::threshold_not_met: return kExitNegative;
    case Errc::capacity:
    case Errc::budget: return kExitCapacity;
    default: return kExitUsage;
  }
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::format, "cannot open family file: " + path);
  return parse_family(in);
}

Poset load_poset(const std::string& spec) {
  if (auto p = poset_from_token(spec)) return *p;
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    return parse_poset(in);
  }
  fail(Errc::format, "not a poset token (C<r> A<r> B<k> S<r> U<r> Ud<r> V2) or file: " + spec);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::format, "cannot open output file: " + path);
  out << text;
}

Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (...) {
    fail(Errc::format, "expected a rational like 1/2: " + s);
  }
}

void print_report_line(const ConstantReport& r) {
  std::cout << (r.match ? "[ok]   " : "[FAIL] ") << r.name << "\n"
            << "       claimed:  " << r.claimed << "\n"
            << "       computed: " << r.computed << " (tolerance " << r.tolerance << ")\n";
  if (!r.note.empty()) std::cout << "       note: " << r.note << "\n";
}

json report_json(const ConstantReport& r) {
  return json{{"name", r.name},         {"claimed", r.claimed}, {"computed", r.computed},
              {"tolerance", r.tolerance}, {"verdict", r.match ? "match" : "mismatch"},
              {"note", r.note}};
}

json embedding_json(const Poset& pattern, const std::vector<Mask>& image) {
  json out = json::array();
  for (int i = 0; i < pattern.size(); ++i)
    out.push_back({{"element", pattern.label_of(i)}, {"set", subset_to_string(image[i])}});
  return out;
}

void print_trace(const ExtractionReport& rep) {
  for (const auto& step : rep.trace) {
    std::cout << "  " << step.label;
    if (step.value) std::cout << " = " << rat_str(*step.value);
    if (step.set) std::cout << " " << subset_to_string(*step.set);
    std::cout << "\n";
  }
}

// Extraction strategy per target shape; gamma/delta feed the pivot-based
// extractors, chains and antichains use the direct base extractors.  Anything
// that is not a recognized token is loaded as a poset file and routed through
// the height-2 machinery.
ExtractionReport run_extract(const std::string& target, const SetFamily& f, const Rat& gamma,
                             const Rat& delta) {
  auto token_arg = [&](std::size_t from) -> int {
    if (from >= target.size()) return -1;
    for (std::size_t i = from; i < target.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(target[i]))) return -1;
    return std::stoi(target.substr(from));
  };
  if (target == "V2") {
    Extractor tops = antichain_extractor(2);
    return extract_series(f, empty_extractor(), Rat(0), tops, tops.alpha);
  }
  if (target.rfind("Ud", 0) == 0 && token_arg(2) >= 0)
    return extract_universal(f, token_arg(2), gamma);
  int arg = token_arg(1);
  if (arg >= 0) {
    switch (target[0]) {
      case 'C': return chain_extractor(arg).run(f);
      case 'A': return antichain_extractor(arg).run(f);
      case 'S': return extract_std_example(f, arg, gamma, delta);
      case 'U': return extract_universal(f, arg, gamma);
      default: break;
    }
  }
  Poset p = load_poset(target);
  return extract_height2(f, p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lubell-mass computations, P-free testing, witness extraction,\n"
               "extremal constructions, and small-n Turan optima on the Boolean lattice"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // construct
  auto* c_construct = app.add_subcommand("construct", "emit a named extremal family");
  std::string cname, c_out;
  std::vector<std::string> cargs;
  bool c_report = false;
  c_construct->add_option("name", cname,
                          "levels|chain|priv-sharp|vc|b2-lower")->required();
  c_construct->add_option("params", cargs, "numeric parameters");
  c_construct->add_flag("--report", c_report, "also print mass and member count");
  c_construct->add_option("-o,--out", c_out, "output file (default stdout)");

  // lubell
  auto* c_lubell = app.add_subcommand("lubell", "exact Lubell mass of a family");
  std::string l_file;
  c_lubell->add_option("family", l_file)->required();

  // free-check
  auto* c_free = app.add_subcommand("free-check", "is the family P-free?");
  std::string f_file, f_poset;
  c_free->add_option("family", f_file)->required();
  c_free->add_option("poset", f_poset)->required();

  // contains
  auto* c_contains = app.add_subcommand("contains", "find an induced copy of P");
  std::string g_file, g_poset;
  bool g_weak = false;
  c_contains->add_option("family", g_file)->required();
  c_contains->add_option("poset", g_poset)->required();
  c_contains->add_flag("--weak", g_weak, "weak containment (order-preserving only)");

  // extract
  auto* c_extract = app.add_subcommand("extract", "proof-driven witness extraction");
  std::string e_target, e_file, e_gamma = "1/2", e_delta = "1/2";
  c_extract->add_option("target", e_target, "C<r>|A<r>|S<r>|U<r>|Ud<r>|V2|poset-file")->required();
  c_extract->add_option("family", e_file)->required();
  c_extract->add_option("--gamma", e_gamma, "flexibility parameter (rational)");
  c_extract->add_option("--delta", e_delta, "size-cap parameter (rational)");

  // la-star
  auto* c_lastar = app.add_subcommand("la-star", "exact P-free optimum at small n");
  int s_n = 0;
  int s_threads = 1;
  if (const char* env = std::getenv("LUBELL_THREADS")) {
    try {
      s_threads = std::max(1, std::stoi(env));
    } catch (...) {
    }
  }
  std::string s_poset, s_witness_out;
  bool s_lubell = false, s_with_empty = false, s_canonical = false;
  std::uint64_t s_budget = 200'000'000;
  c_lastar->add_option("n", s_n)->required();
  c_lastar->add_option("poset", s_poset)->required();
  c_lastar->add_flag("--lubell", s_lubell, "maximize Lubell mass instead of cardinality");
  c_lastar->add_flag("--with-empty", s_with_empty, "pin the empty set into the family");
  c_lastar->add_option("--budget", s_budget, "node budget");
  c_lastar->add_flag("--canonical", s_canonical, "deterministic lex-least witness");
  c_lastar->add_option("--threads", s_threads, "worker threads");
  c_lastar->add_option("--witness-out", s_witness_out, "write the witness family here");

  // verify
  auto* c_verify = app.add_subcommand("verify", "reproduce the stated constants and bounds");
  std::string v_suite = "all";
  c_verify->add_option("--suite", v_suite, "all|constants|inequalities|thresholds");

  // vc
  auto* c_vc = app.add_subcommand("vc", "VC dimension of a family");
  std::string vc_file;
  c_vc->add_option("family", vc_file)->required();

  // private-system
  auto* c_priv = app.add_subcommand("private-system", "find an r-system of private elements");
  std::string p_file;
  int p_r = 0;
  c_priv->add_option("family", p_file)->required();
  c_priv->add_option("r", p_r)->required();

  // reduce-b3
  auto* c_reduce = app.add_subcommand("reduce-b3", "interval restriction minus extremes");
  std::string r_file, r_out;
  c_reduce->add_option("family", r_file)->required();
  c_reduce->add_option("-o,--out", r_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_construct) {
      auto need = [&](std::size_t k) {
        if (cargs.size() != k)
          fail(Errc::format, "construct " + cname + " expects " + std::to_string(k) + " params");
      };
      auto arg_int = [&](std::size_t i) { return std::stoi(cargs.at(i)); };
      SetFamily fam;
      if (cname == "levels") {
        if (cargs.size() != 2) fail(Errc::format, "construct levels <n> <k1,k2,...>");
        std::vector<int> ks;
        std::stringstream ss(cargs[1]);
        std::string item;
        while (std::getline(ss, item, ',')) ks.push_back(std::stoi(item));
        fam = levels(arg_int(0), ks);
      } else if (cname == "chain") {
        need(1);
        fam = full_chain_family(arg_int(0));
      } else if (cname == "priv-sharp") {
        need(2);
        fam = priv_sharp(arg_int(0), arg_int(1));
      } else if (cname == "vc") {
        need(3);
        fam = vc_extremal(arg_int(0), arg_int(1), arg_int(2)).family;
      } else if (cname == "b2-lower") {
        need(4);
        fam = b2_lower(arg_int(0), {arg_int(1), arg_int(2), arg_int(3)});
      } else {
        fail(Errc::format, "unknown construction: " + cname);
      }
      write_output(c_out, emit_family(fam));
      if (c_report) {
        Rat mass = lubell_mass(fam);
        if (as_json)
          std::cout << json{{"members", fam.size()},
                            {"mass", rat_str(mass)},
                            {"mass_decimal", rat_decimal(mass)}}
                    << "\n";
        else
          std::cout << "# members " << fam.size() << "\n# mass " << rat_str(mass) << " ~ "
                    << rat_decimal(mass) << "\n";
      }
      return kExitOk;
    }

    if (*c_lubell) {
      SetFamily fam = load_family(l_file);
      Rat mass = lubell_mass(fam);
      if (as_json)
        std::cout << json{{"mass", rat_str(mass)}, {"mass_decimal", rat_decimal(mass)}} << "\n";
      else
        std::cout << rat_str(mass) << " ~ " << rat_decimal(mass) << "\n";
      return kExitOk;
    }

    if (*c_free) {
      SetFamily fam = load_family(f_file);
      Poset p = load_poset(f_poset);
      auto copy = find_copy(fam, p);
      if (as_json) {
        json out{{"pattern", f_poset}, {"free", !copy.has_value()}};
        if (copy) {
          std::vector<Mask> image;
          for (int idx : copy->map) image.push_back(fam.member(idx));
          out["copy"] = embedding_json(p, image);
        }
        std::cout << out << "\n";
      } else if (copy) {
        std::cout << "contains " << f_poset << ":\n";
        for (int i = 0; i < p.size(); ++i)
          std::cout << "  " << p.label_of(i) << " -> " << subset_to_string(fam.member(copy->map[i]))
                    << "\n";
      } else {
        std::cout << f_poset << "-free\n";
      }
      return copy ? kExitNegative : kExitOk;
    }

    if (*c_contains) {
      SetFamily fam = load_family(g_file);
      Poset p = load_poset(g_poset);
      auto emb = g_weak ? find_induced_embedding(p, inclusion_order(fam), EmbedMode::weak)
                        : find_copy(fam, p);
      if (!emb) {
        if (as_json) std::cout << json{{"found", false}} << "\n";
        else std::cout << "no copy of " << g_poset << "\n";
        return kExitNegative;
      }
      std::vector<Mask> image;
      for (int idx : emb->map) image.push_back(fam.member(idx));
      if (as_json)
        std::cout << json{{"found", true}, {"copy", embedding_json(p, image)}} << "\n";
      else
        for (int i = 0; i < p.size(); ++i)
          std::cout << p.label_of(i) << " -> " << subset_to_string(image[i]) << "\n";
      return kExitOk;
    }

    if (*c_extract) {
      SetFamily fam = load_family(e_file);
      ExtractionReport rep = run_extract(e_target, fam, parse_rat(e_gamma), parse_rat(e_delta));
      if (as_json) {
        json steps = json::array();
        for (const auto& s : rep.trace) {
          json step{{"label", s.label}};
          if (s.value) step["value"] = rat_str(*s.value);
          if (s.set) step["set"] = subset_to_string(*s.set);
          steps.push_back(step);
        }
        std::cout << json{{"tag", rep.tag},
                          {"embedding", embedding_json(rep.pattern, rep.image)},
                          {"trace", steps}}
                  << "\n";
      } else {
        std::cout << "found " << rep.tag << ":\n";
        for (int i = 0; i < rep.pattern.size(); ++i)
          std::cout << "  " << rep.pattern.label_of(i) << " -> " << subset_to_string(rep.image[i])
                    << "\n";
        std::cout << "trace:\n";
        print_trace(rep);
      }
      return kExitOk;
    }

    if (*c_lastar) {
      Poset p = load_poset(s_poset);
      SearchOptions opt;
      opt.lubell_objective = s_lubell;
      opt.require_empty_set = s_with_empty;
      opt.node_budget = s_budget;
      opt.threads = s_threads;
      opt.canonical = s_canonical;
      SearchResult res = la_star_exact(s_n, p, opt);
      std::string family_text = emit_family(res.witness);
      if (as_json) {
        std::cout << json{{"optimum", rat_str(res.optimum)},
                          {"optimum_decimal", rat_decimal(res.optimum)},
                          {"nodes", res.nodes},
                          {"exhaustive", res.exhaustive},
                          {"witness", family_text}}
                  << "\n";
      } else {
        std::cout << "optimum " << rat_str(res.optimum);
        if (!is_integral(res.optimum)) std::cout << " ~ " << rat_decimal(res.optimum);
        std::cout << "\nnodes " << res.nodes << "\nexhaustive "
                  << (res.exhaustive ? "true" : "false") << "\n";
      }
      if (!s_witness_out.empty()) write_output(s_witness_out, family_text);
      else if (!as_json) std::cout << family_text;
      return res.exhaustive ? kExitOk : kExitCapacity;
    }

    if (*c_verify) {
      auto reports = verify_suite(v_suite);
      bool all_ok = true;
      if (as_json) {
        json out = json::array();
        for (const auto& r : reports) {
          out.push_back(report_json(r));
          all_ok = all_ok && r.match;
        }
        std::cout << out << "\n";
      } else {
        for (const auto& r : reports) {
          print_report_line(r);
          all_ok = all_ok && r.match;
        }
        std::cout << (all_ok ? "all reports match\n" : "MISMATCHES PRESENT\n");
      }
      return all_ok ? kExitOk : kExitNegative;
    }

    if (*c_vc) {
      SetFamily fam = load_family(vc_file);
      int d = vc_dimension(fam);
      auto witness = find_shattered(fam, d);
      if (as_json)
        std::cout << json{{"vc_dimension", d},
                          {"shattered", witness ? subset_to_string(*witness) : "-"}}
                  << "\n";
      else
        std::cout << "vc-dimension " << d << "\nshattered "
                  << (witness ? subset_to_string(*witness) : std::string("-")) << "\n";
      return kExitOk;
    }

    if (*c_priv) {
      SetFamily fam = load_family(p_file);
      auto sys = private_system(fam, p_r);
      if (!sys) {
        if (as_json) std::cout << json{{"found", false}} << "\n";
        else std::cout << "no " << p_r << "-system of private elements\n";
        return kExitNegative;
      }
      if (as_json) {
        json w = json::array();
        for (Mask b : sys->witnesses) w.push_back(subset_to_string(b));
        std::cout << json{{"found", true}, {"R", subset_to_string(sys->r_set)}, {"witnesses", w}}
                  << "\n";
      } else {
        std::cout << "R = " << subset_to_string(sys->r_set) << "\n";
        int idx = 0;
        for (Mask rest = sys->r_set; rest; rest ^= rest & -rest, ++idx) {
          int i = __builtin_ctzll(rest);
          std::cout << "B_" << (i + 1) << " = " << subset_to_string(sys->witnesses[idx]) << "\n";
        }
      }
      return kExitOk;
    }

    if (*c_reduce) {
      SetFamily fam = load_family(r_file);
      auto [cube, cube_mass] = max_interval_members_only(fam);
      SetFamily residual = b3_to_s3_reduce(fam);
      if (!as_json)
        std::cout << "# interval [" << subset_to_string(cube.bottom) << ", "
                  << subset_to_string(cube.top) << "] mass " << rat_str(cube_mass)
                  << "; residual mass " << rat_str(lubell_mass(residual)) << "\n";
      write_output(r_out, emit_family(residual));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
