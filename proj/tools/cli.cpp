#include "cli.hpp"

#include <CLI11.hpp>

#include "json.hpp"
#include "nt/bk.hpp"
#include "nt/classify.hpp"
#include "nt/dyck.hpp"
#include "nt/enumeration.hpp"
#include "nt/psi.hpp"

namespace nt::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

json perm_json(const Permutation& w) { return w.word(); }

void print_record(std::ostream& out, const std::string& fmt, const Permutation& w,
                  const ClassificationRecord& r) {
  if (fmt == "json") {
    auto j = json::parse(to_json(r));
    j["permutation"] = perm_json(w);
    out << j.dump() << '\n';
    return;
  }
  const std::pair<const char*, std::string> rows[] = {
      {"smooth", r.smooth ? "true" : "false"},
      {"complexity_one", complexity_name(r.complexity_one)},
      {"spherical_by_patterns", r.spherical_by_patterns ? "true" : "false"},
      {"spherical_by_coxeter", r.spherical_by_coxeter ? "true" : "false"},
      {"nearly_toric", r.nearly_toric ? "true" : "false"},
      {"in_A", r.in_A ? "true" : "false"},
      {"in_B", r.in_B ? "true" : "false"},
      {"in_M", r.in_M ? "true" : "false"},
      {"avoids_312", r.avoids_312 ? "true" : "false"},
      {"in_NT312", r.in_NT312 ? "true" : "false"},
  };
  if (fmt == "csv") {
    out << "permutation";
    for (auto& [k, v] : rows) out << ',' << k;
    out << '\n' << format(w, ' ');
    for (auto& [k, v] : rows) out << ',' << v;
    out << '\n';
    return;
  }
  out << "permutation: " << format(w) << '\n';
  for (auto& [k, v] : rows) out << k << ": " << v << '\n';
}

std::string m_failure(const Permutation& v) {
  auto c321 = count_321(v);
  auto c3412 = count_pattern(v, pattern_3412());
  if (c321 != 1) return "needs exactly one 321 occurrence, found " + std::to_string(c321);
  if (c3412 != 0) return "needs no 3412 occurrence, found " + std::to_string(c3412);
  return "needs an occurrence of 25314";
}

std::string b_failure(const Permutation& w) {
  auto c321 = count_321(w);
  auto c3412 = count_pattern(w, pattern_3412());
  if (c321 != 0) return "needs no 321 occurrence, found " + std::to_string(c321);
  return "needs exactly one 3412 occurrence, found " + std::to_string(c3412);
}

void print_psi(std::ostream& out, const std::string& fmt, const PsiPair& p, bool forward) {
  const auto& w = p.m_witness;
  if (fmt == "json") {
    json j;
    j["direction"] = forward ? "forward" : "inverse";
    j["input"] = perm_json(forward ? p.m_elem : p.b_elem);
    j["image"] = perm_json(forward ? p.b_elem : p.m_elem);
    j["case"] = case_name(w.case_tag);
    j["pivot_i"] = w.pivot_i;
    j["witness"] = w.word.letters;
    j["factor_position"] = w.factor_position;
    j["d"] = w.d ? json(*w.d) : json(nullptr);
    j["image_word"] = p.b_word.letters;
    j["image_factor_position"] = p.b_factor_position;
    out << j.dump() << '\n';
    return;
  }
  const Permutation& img = forward ? p.b_elem : p.m_elem;
  if (fmt == "csv") {
    out << "input,image,case,pivot_i,witness,b_word\n"
        << format(forward ? p.m_elem : p.b_elem) << ',' << format(img) << ','
        << case_name(w.case_tag) << ',' << w.pivot_i << ',' << format(w.word) << ','
        << format(p.b_word) << '\n';
    return;
  }
  out << format(img) << '\n';
  out << "case " << case_name(w.case_tag) << '\n';
  out << "pivot i = " << w.pivot_i << '\n';
  out << "witness " << format(w.word) << " (factor at " << w.factor_position << ")\n";
  out << "B word " << format(p.b_word) << " (factor at " << p.b_factor_position << ")\n";
}

int max_n_from(int override_n, std::ostream& err) {
  if (override_n <= 0) return kDefaultMaxN;
  if (override_n > kHardMaxN)
    throw ResourceError("--max-n-override is limited to " + std::to_string(kHardMaxN));
  if (override_n > kDefaultMaxN)
    err << "warning: n up to " << override_n << " means " << override_n
        << "! permutations; this can take a while\n";
  return override_n;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nearly toric Schubert varieties of type A: classification, Dyck paths, "
               "bijections and enumeration"};
  app.require_subcommand(1);
  std::string fmt = "text";
  app.add_option("--format", fmt, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: NT_THREADS or all cores)");
  int max_override = 0;
  app.add_option("--max-n-override", max_override, "raise the brute-force size cap (up to 11)");

  std::vector<std::string> perm_in, path_in;

  auto* classify_cmd = app.add_subcommand("classify", "classification record of a permutation");
  classify_cmd->add_option("perm", perm_in, "one-line permutation")->required();

  auto* dyck = app.add_subcommand("dyck", "Dyck path tools");
  dyck->require_subcommand(1);
  auto* to_perm = dyck->add_subcommand("to-perm", "Dyck path -> 312-avoiding permutation");
  to_perm->add_option("path", path_in)->required();
  auto* from_perm = dyck->add_subcommand("from-perm", "312-avoiding permutation -> Dyck path");
  from_perm->add_option("perm", perm_in)->required();
  auto* render_cmd = dyck->add_subcommand("render", "draw a Dyck path");
  render_cmd->add_option("path", path_in)->required();
  bool ascii = false;
  render_cmd->add_flag("--ascii", ascii, "plain ASCII glyphs");
  auto* spherical = dyck->add_subcommand("is-spherical", "spherical Dyck path test");
  spherical->add_option("path", path_in)->required();

  auto* psi_cmd = app.add_subcommand("psi", "bijection M_{n+1} -> B_n");
  psi_cmd->require_subcommand(1);
  auto* fwd = psi_cmd->add_subcommand("forward", "M_{n+1} -> B_n");
  fwd->add_option("perm", perm_in)->required();
  auto* inv = psi_cmd->add_subcommand("inverse", "B_n -> M_{n+1}");
  inv->add_option("perm", perm_in)->required();

  auto* enumerate = app.add_subcommand("enumerate", "brute-force class counts over S_n");
  int n_enum = 0;
  enumerate->add_option("--n", n_enum, "size")->required();
  std::string cls;
  enumerate->add_option("--class", cls, "a, b, d, r, t, nt312, complexity_one_total");

  auto* verify_cmd = app.add_subcommand("verify", "brute force vs closed forms vs series");
  int n_max = 5;
  verify_cmd->add_option("--n-max", n_max, "largest n");
  bool shifted = false;
  verify_cmd->add_flag("--debug-shifted-fibonacci", shifted,
                       "evaluate closed forms with F0 = F1 = 1 (negative control)");

  std::vector<const char*> argv{"nearly-toric"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*classify_cmd) {
      auto w = parse_permutation(join(perm_in));
      print_record(out, fmt, w, classify(w));
      return 0;
    }
    if (*to_perm) {
      auto p = parse_dyck(join(path_in));
      auto w = path_to_perm(p);
      if (fmt == "json")
        out << json{{"path", p.steps()}, {"permutation", perm_json(w)}, {"area", area(p)}}.dump()
            << '\n';
      else
        out << format(w) << '\n';
      return 0;
    }
    if (*from_perm) {
      auto w = parse_permutation(join(perm_in));
      auto p = perm_to_path(w);
      if (fmt == "json")
        out << json{{"permutation", perm_json(w)}, {"path", p.steps()}}.dump() << '\n';
      else
        out << p.steps() << '\n';
      return 0;
    }
    if (*render_cmd) {
      auto p = parse_dyck(join(path_in));
      if (fmt == "json")
        out << json{{"path", p.steps()}, {"render", render(p, ascii)}}.dump() << '\n';
      else
        out << render(p, ascii);
      return 0;
    }
    if (*spherical) {
      auto p = parse_dyck(join(path_in));
      bool s = is_spherical_dyck(p);
      if (fmt == "json") {
        json comps = json::array();
        for (int r = 0; r <= 1 && r <= p.size(); ++r)
          for (auto& c : subpath_system(p, r))
            comps.push_back({{"diagonal", r},
                             {"steps", c.steps},
                             {"start", {c.start.x, c.start.y}},
                             {"kind", kind_name(c.kind)}});
        out << json{{"path", p.steps()}, {"spherical", s}, {"components", comps}}.dump() << '\n';
      } else {
        out << (s ? "true" : "false") << '\n';
      }
      return 0;
    }
    if (*fwd) {
      auto v = parse_permutation(join(perm_in));
      if (!class_membership(v).in_M) {
        err << "error: input is not in M_" << v.size() << ": " << m_failure(v) << '\n';
        return 2;
      }
      print_psi(out, fmt, psi(v), true);
      return 0;
    }
    if (*inv) {
      auto w = parse_permutation(join(perm_in));
      if (!class_membership(w).in_B) {
        err << "error: input is not in B_" << w.size() << ": " << b_failure(w) << '\n';
        return 2;
      }
      print_psi(out, fmt, psi_inverse(w), false);
      return 0;
    }
    if (*enumerate) {
      int max_n = max_n_from(max_override, err);
      auto c = brute_census(n_enum, threads, max_n);
      std::vector<CountClass> which;
      if (cls.empty())
        which.assign(kAllClasses.begin(), kAllClasses.end());
      else
        which.push_back(parse_class(cls));
      if (fmt == "json") {
        json j{{"n", n_enum}};
        for (auto k : which) j[class_name(k)] = c.get(k);
        out << j.dump() << '\n';
      } else if (fmt == "csv") {
        out << "n,class,count\n";
        for (auto k : which) out << n_enum << ',' << class_name(k) << ',' << c.get(k) << '\n';
      } else {
        for (auto k : which) out << class_name(k) << ' ' << c.get(k) << '\n';
      }
      return 0;
    }
    if (*verify_cmd) {
      VerifyOptions opt;
      opt.n_max = n_max;
      opt.threads = threads;
      opt.max_n = max_n_from(max_override, err);
      opt.fib = shifted ? FibConvention::Shifted : FibConvention::Standard;
      auto r = verify(opt);
      if (fmt == "json")
        out << to_json(r) << '\n';
      else if (fmt == "csv")
        out << to_csv(r);
      else
        out << to_text(r);
      return r.all_agree() ? 0 : 1;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace nt::cli
