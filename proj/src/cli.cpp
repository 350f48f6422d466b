#include "dualhfk/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualhfk/invariants.hpp"

namespace hfk {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = DUALHFK_VERSION;

struct CliError {
  int code;
  std::string message;
};

KnotComplex load_knot(const std::string& source) {
  std::string name = source;
  if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
  for (auto& b : builtin_names())
    if (b == name) return builtin_knot(b);

  std::ifstream in(source);
  if (!in) {
    // Not a builtin and not a readable file.
    std::string known;
    for (auto& b : builtin_names()) known += " " + b;
    throw CliError{kExitPrecondition,
                   "unknown knot source '" + source + "'; builtins are:" + known};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = source;
  if (auto pos = stem.find_last_of('/'); pos != std::string::npos) stem = stem.substr(pos + 1);
  if (auto pos = stem.rfind(".cfk"); pos != std::string::npos) stem = stem.substr(0, pos);
  return parse_cfk(buf.str(), stem);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw CliError{kExitPrecondition, "cannot write to '" + out_path + "'"};
  f << text;
}

std::vector<long long> parse_class_list(const std::string& spec) {
  std::vector<long long> classes;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    classes.push_back(std::stoll(tok));
  }
  return classes;
}

json report_header(const std::string& command, const HomologyReport& rep) {
  json j;
  j["tool"] = "dualhfk";
  j["version"] = kVersion;
  j["command"] = command;
  j["knot"] = rep.knot;
  j["p"] = rep.p;
  j["q"] = rep.q;
  j["truncation_B"] = rep.truncation_bound;
  return j;
}

std::string format_hfk(const HomologyReport& rep, const std::string& format,
                       const std::vector<long long>& classes,
                       std::optional<std::pair<long long, long long>> predicted) {
  std::ostringstream os;
  if (format == "json") {
    json j = report_header("hfk", rep);
    json arr = json::array();
    for (long long c : classes)
      arr.push_back({{"sbar", c}, {"rank", rep.ranks.count(c) ? rep.ranks.at(c) : 0}});
    j["classes"] = arr;
    auto w = rep.support();
    j["window_predicted"] =
        predicted ? json::array({predicted->first, predicted->second}) : json();
    j["window_computed"] = w ? json::array({w->first, w->second}) : json::array();
    j["stable"] = rep.stable;
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "# dualhfk " << kVersion << " hfk knot=" << rep.knot << " p=" << rep.p
       << " q=" << rep.q << " B=" << rep.truncation_bound << "\n";
    os << "sbar,rank\n";
    for (long long c : classes) os << c << "," << (rep.ranks.count(c) ? rep.ranks.at(c) : 0) << "\n";
  } else {
    os << "# dualhfk " << kVersion << "  hfk  knot=" << rep.knot << "  p/q=" << rep.p << "/"
       << rep.q << "  B=" << rep.truncation_bound << "\n";
    os << "  sbar  rank\n";
    for (long long c : classes)
      os << std::setw(6) << c << std::setw(6) << (rep.ranks.count(c) ? rep.ranks.at(c) : 0)
         << "\n";
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"knot Floer homology of dual knots of rational surgeries"};
  app.set_version_flag("--version", std::string("dualhfk ") + kVersion);
  app.require_subcommand(1);

  // validate
  auto* c_validate = app.add_subcommand("validate", "check a .cfk file");
  std::string validate_path;
  c_validate->add_option("path", validate_path, "input .cfk file")->required();

  // common options
  std::string knot_src, format = "table", out_path, classes_spec = "all", qlist_spec = "1,2,3";
  std::string domain_name = "hat";
  int p = 1, q = 1, n = 1, s = 0, nmax = 6, trunc_override = -1;

  auto add_common = [&](CLI::App* c, bool with_pq) {
    c->add_option("--knot", knot_src, "builtin name or .cfk path")->required();
    if (with_pq) {
      c->add_option("--p", p, "surgery numerator")->required();
      c->add_option("--q", q, "surgery denominator")->required();
    }
    c->add_option("--format", format, "table|json|csv");
    c->add_option("--out", out_path, "output path (default stdout)");
    c->add_option("--trunc", trunc_override, "truncation bound override");
  };

  auto* c_hfk = app.add_subcommand("hfk", "knot Floer homology of the dual knot");
  add_common(c_hfk, true);
  c_hfk->add_option("--classes", classes_spec, "'all' or comma-separated spin-c classes");
  c_hfk->add_option("--domain", domain_name, "test domain: hat (default) or line");

  auto* c_hf = app.add_subcommand("hf", "ambient Heegaard Floer homology of the surgery");
  add_common(c_hf, true);

  auto* c_window = app.add_subcommand("window", "predicted vs computed support window");
  add_common(c_window, true);

  auto* c_cross = app.add_subcommand("crosscheck", "large-surgery model vs cone, q=1");
  c_cross->add_option("--knot", knot_src, "builtin name or .cfk path")->required();
  c_cross->add_option("--n", n, "surgery coefficient")->required();

  auto* c_zeta = app.add_subcommand("zeta", "plus-flavour cone rank profile");
  c_zeta->add_option("--knot", knot_src, "builtin name or .cfk path")->required();
  c_zeta->add_option("--n", n, "surgery coefficient")->required();
  c_zeta->add_option("--s", s, "spin-c class index");
  c_zeta->add_option("--nmax", nmax, "largest truncation level");
  c_zeta->add_option("--format", format, "table|json|csv");
  c_zeta->add_option("--out", out_path, "output path");

  auto* c_s3 = app.add_subcommand("s3check", "window growth check at p=1");
  c_s3->add_option("--knot", knot_src, "builtin name or .cfk path")->required();
  c_s3->add_option("--qlist", qlist_spec, "comma-separated q values");
  c_s3->add_option("--format", format, "table|json|csv");
  c_s3->add_option("--out", out_path, "output path");

  std::vector<std::string> argv(args);
  try {
    std::vector<const char*> cargv;
    cargv.push_back("dualhfk");
    for (auto& a : argv) cargv.push_back(a.c_str());
    app.parse(int(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitPrecondition;
  }

  try {
    if (c_validate->parsed()) {
      std::ifstream in(validate_path);
      if (!in) {
        err << "cannot read '" << validate_path << "'\n";
        return kExitSyntax;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        parse_cfk(buf.str());
      } catch (const CfkSyntaxError& e) {
        err << "syntax error: " << e.what() << "\n";
        return kExitSyntax;
      } catch (const CfkSemanticError& e) {
        err << "invalid complex:\n" << e.what();
        if (std::string(e.what()).back() != '\n') err << "\n";
        return kExitSemantic;
      }
      out << "valid\n";
      return kExitOk;
    }

    KnotComplex K;
    try {
      K = load_knot(knot_src);
    } catch (const CfkSyntaxError& e) {
      err << "syntax error: " << e.what() << "\n";
      return kExitSyntax;
    } catch (const CfkSemanticError& e) {
      err << "invalid complex:\n" << e.what();
      if (std::string(e.what()).back() != '\n') err << "\n";
      return kExitSemantic;
    }

    if (c_cross->parsed()) {
      auto mismatch = crosscheck_large_n(K, n);
      if (mismatch) {
        err << "mismatch at class " << *mismatch << "\n";
        return kExitMismatch;
      }
      out << "large-surgery model and cone agree on every class (n=" << n << ")\n";
      return kExitOk;
    }

    if (c_zeta->parsed()) {
      auto prof = zeta_cone_plus(K, n, s, nmax);
      if (format == "json") {
        json j;
        j["tool"] = "dualhfk";
        j["version"] = kVersion;
        j["command"] = "zeta";
        j["knot"] = K.name;
        j["n"] = n;
        j["s"] = s;
        j["ranks"] = prof.rank_by_trunc;
        emit(j.dump(2) + "\n", out_path, out);
      } else {
        std::ostringstream os;
        os << "# dualhfk " << kVersion << "  zeta  knot=" << K.name << "  n=" << n
           << "  s=" << s << "\n";
        os << "  N  rank  slope\n";
        for (std::size_t N = 0; N < prof.rank_by_trunc.size(); ++N) {
          os << std::setw(3) << N << std::setw(6) << prof.rank_by_trunc[N];
          if (N > 0)
            os << std::setw(7) << prof.rank_by_trunc[N] - prof.rank_by_trunc[N - 1];
          os << "\n";
        }
        emit(os.str(), out_path, out);
      }
      return kExitOk;
    }

    if (c_s3->parsed()) {
      std::vector<int> qs;
      for (long long v : parse_class_list(qlist_spec)) qs.push_back(int(v));
      auto rep = s3_pattern_check(K, qs);
      if (format == "json") {
        json j;
        j["tool"] = "dualhfk";
        j["version"] = kVersion;
        j["command"] = "s3check";
        j["knot"] = K.name;
        json ws = json::array();
        for (std::size_t i = 0; i < qs.size(); ++i)
          ws.push_back({{"q", qs[i]},
                        {"window", {rep.windows[i].first, rep.windows[i].second}},
                        {"truncation_B", default_truncation(K, 1, qs[i]).bound}});
        j["windows"] = ws;
        j["consistent_with_s3"] = rep.consistent_with_s3;
        emit(j.dump(2) + "\n", out_path, out);
      } else {
        std::string header = "# dualhfk " + std::string(kVersion) + "  s3check  knot=" +
                             K.name + "  B=";
        for (std::size_t i = 0; i < qs.size(); ++i)
          header += (i ? "," : "") + std::to_string(default_truncation(K, 1, qs[i]).bound);
        emit(header + "\n" + rep.to_string(), out_path, out);
      }
      return kExitOk;
    }

    // hfk / hf / window need p/q and a truncation.
    TruncationParams trunc = default_truncation(K, p, q);
    if (trunc_override >= 0) trunc.bound = trunc_override;

    if (c_hfk->parsed() || c_window->parsed()) {
      auto domain = TestDomain::by_name(domain_name);
      if (!domain) throw CliError{kExitPrecondition, "unknown domain '" + domain_name + "'"};
      bool hat = domain->kind() == TestDomain::Kind::Singleton;
      auto rep = dual_class_scan(K, p, q, *domain, trunc);
      auto predicted = predicted_window(K.genus(), p, q);
      auto computed = rep.support();

      if (c_window->parsed()) {
        if (format == "json") {
          json j = report_header("window", rep);
          j["window_predicted"] = {predicted.first, predicted.second};
          j["window_computed"] =
              computed ? json::array({computed->first, computed->second}) : json::array();
          j["stable"] = rep.stable;
          emit(j.dump(2) + "\n", out_path, out);
        } else {
          std::ostringstream os;
          os << "# dualhfk " << kVersion << "  window  knot=" << rep.knot << "  p/q=" << p << "/"
             << q << "  B=" << rep.truncation_bound << "\n";
          os << "predicted [" << predicted.first << ", " << predicted.second << "]\n";
          if (computed)
            os << "computed  [" << computed->first << ", " << computed->second << "]\n";
          else
            os << "computed  (empty)\n";
          emit(os.str(), out_path, out);
        }
        return rep.stable ? kExitOk : kExitMismatch;
      }

      std::vector<long long> classes;
      if (classes_spec == "all")
        for (auto& [c, r] : rep.ranks) classes.push_back(c);
      else
        classes = parse_class_list(classes_spec);
      std::string text = format_hfk(
          rep, format, classes,
          hat ? std::optional(predicted) : std::nullopt);
      if (format == "table") {
        std::ostringstream os;
        os << text;
        if (hat)
          os << "window predicted [" << predicted.first << ", " << predicted.second << "]  ";
        os << "computed ";
        if (computed)
          os << "[" << computed->first << ", " << computed->second << "]";
        else
          os << "(empty)";
        os << "  stable " << (rep.stable ? "yes" : "no") << "\n";
        text = os.str();
      }
      emit(text, out_path, out);
      return rep.stable ? kExitOk : kExitMismatch;
    }

    if (c_hf->parsed()) {
      HomologyReport rep;
      try {
        rep = hf_hat_ambient(K, p, q, trunc);
      } catch (const StabilizationError& e) {
        err << e.what() << "\n";
        return kExitMismatch;
      }
      if (format == "json") {
        json j = report_header("hf", rep);
        json arr = json::array();
        for (auto& [c, r] : rep.ranks) arr.push_back({{"class", c}, {"rank", r}});
        j["classes"] = arr;
        j["total"] = rep.total();
        j["stable"] = rep.stable;
        emit(j.dump(2) + "\n", out_path, out);
      } else if (format == "csv") {
        std::ostringstream os;
        os << "# dualhfk " << kVersion << " hf knot=" << rep.knot << " p=" << p << " q=" << q
           << " B=" << rep.truncation_bound << "\n";
        os << "class,rank\n";
        for (auto& [c, r] : rep.ranks) os << c << "," << r << "\n";
        emit(os.str(), out_path, out);
      } else {
        std::ostringstream os;
        os << "# dualhfk " << kVersion << "  hf  knot=" << rep.knot << "  p/q=" << p << "/" << q
           << "  B=" << rep.truncation_bound << "\n";
        os << "  class  rank\n";
        for (auto& [c, r] : rep.ranks) os << std::setw(7) << c << std::setw(6) << r << "\n";
        os << "total " << rep.total() << "\n";
        emit(os.str(), out_path, out);
      }
      return kExitOk;
    }
  } catch (const CliError& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const PreconditionError& e) {
    err << e.what() << "\n";
    return kExitPrecondition;
  } catch (const EnumerationError& e) {
    err << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitPrecondition;
}

}  // namespace hfk
