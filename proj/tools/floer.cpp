// floer: command-line front end.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "floer/altgen.hpp"
#include "floer/error.hpp"
#include "floer/field.hpp"
#include "floer/foxalex.hpp"
#include "floer/knotio.hpp"
#include "floer/maslov.hpp"
#include "floer/surgery.hpp"

using nlohmann::json;
using namespace floer;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string knot;
  std::string pd;
  std::string input;
  std::string domain;
  std::string field = "Q";
  std::string trace;
  std::optional<int> k;
  std::optional<int> m;
  std::optional<int> c1;
  bool json = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

KnotDiagram diagram(const Options& o) {
  if (!o.knot.empty() && !o.pd.empty()) throw UsageError("give either --knot or --pd, not both");
  if (!o.knot.empty()) return table_knot(o.knot);
  if (!o.pd.empty()) {
    auto d = parse_pd(slurp(o.pd));
    validate(d);
    d.name = o.pd == "-" ? "stdin" : o.pd;
    return d;
  }
  throw UsageError("a diagram is required: --knot <name> or --pd <file|->");
}

void trace(const Options& o, const std::string& name, const json& j) {
  if (o.trace.empty()) return;
  std::filesystem::create_directories(o.trace);
  std::ofstream out(std::filesystem::path(o.trace) / (name + ".json"));
  out << j.dump(2) << "\n";
}

KnotFloerInput floer_input(const Options& o, bool mirrored = false) {
  Field f = Field::parse(o.field);
  if (!o.input.empty()) {
    json j;
    try {
      j = json::parse(slurp(o.input));
    } catch (const json::exception& e) {
      throw SyntaxError(o.input + ": " + e.what());
    }
    auto in = KnotFloerInput::from_json(j);
    validate(in);
    return in;
  }
  auto d = diagram(o);
  if (mirrored) d = mirror(d);
  auto in = alternating_input(d, f);
  trace(o, "input", in.to_json());
  return in;
}

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

json envelope(const std::string& cmd) { return {{"schema", "floer/" + cmd + "/v1"}}; }

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string mpr_str(const MPR& m) {
  std::string out;
  for (size_t c = 0; c < m.choice.size(); ++c) {
    if (static_cast<int>(c) == m.c1) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(c) + ':' + choice_name(m.choice[c]);
    if (m.choice[c] == Choice::In || m.choice[c] == Choice::Out) out += "->" + std::to_string(m.target[c]);
  }
  return out;
}

void run(const std::string& cmd, const Options& o) {
  json j = envelope(cmd);
  if (cmd == "alexander") {
    auto d = diagram(o);
    auto p = wirtinger(d);
    trace(o, "presentation", p.to_json());
    auto a = alexander(p);
    j["knot"] = d.name;
    j["alexander"] = a.to_json();
    j["text"] = a.str();
    emit(o, j, a.str());
  } else if (cmd == "signature") {
    auto d = diagram(o);
    int s = signature(d);
    j["knot"] = d.name;
    j["signature"] = s;
    emit(o, j, std::to_string(s));
  } else if (cmd == "spectrum") {
    auto d = diagram(o);
    auto p = wirtinger(d);
    trace(o, "presentation", p.to_json());
    auto sp = generator_spectrum(p);
    trace(o, "spectrum", sp.to_json());
    j["knot"] = d.name;
    j["spectrum"] = sp.to_json();
    j["size"] = sp.size();
    j["signed_sum"] = sp.signed_sum().str();
    std::ostringstream os;
    os << "generators " << sp.size() << "\n";
    for (auto& [key, n] : sp.counts) os << "A=" << key.first << (key.second > 0 ? " + " : " - ") << n << "\n";
    os << "signed sum " << sp.signed_sum().str();
    emit(o, j, os.str());
  } else if (cmd == "mprs") {
    auto d = diagram(o);
    int c1 = o.c1 ? *o.c1 : certify_small(d).c1;
    AltDiagram ad(d, c1);
    j["knot"] = d.name;
    j["c1"] = c1;
    json list = json::array();
    std::ostringstream os;
    os << ad.mprs().size() << " MPRs, c1 = " << c1;
    for (auto& m : ad.mprs()) {
      auto [A, sgn] = ad.alexander(m);
      list.push_back({{"mpr", mpr_str(m)}, {"A", A}, {"sign", sgn}});
      os << "\nA=" << A << (sgn > 0 ? " + " : " - ") << mpr_str(m);
    }
    j["count"] = ad.mprs().size();
    j["mprs"] = list;
    emit(o, j, os.str());
  } else if (cmd == "small") {
    auto d = diagram(o);
    auto cert = certify_small(d);
    j["knot"] = d.name;
    j["certificate"] = cert.to_json();
    j["small"] = cert.verdict;
    emit(o, j, cert.verdict ? "true" : "false");
  } else if (cmd == "cfr") {
    auto in = floer_input(o);
    trace(o, "complex", in.cfr.to_json());
    j["s"] = in.s;
    j["delta"] = in.delta.to_json();
    j["cfr"] = in.cfr.to_json();
    std::ostringstream os;
    os << "s = " << in.s << ", delta = " << in.delta.str();
    for (auto& g : in.cfr.gens) os << "\n" << g.id << " A=" << g.A << " gr=" << g.gr;
    emit(o, j, os.str());
  } else if (cmd == "surgery") {
    int m = need(o.m, "--m"), k = need(o.k, "--k");
    auto in = floer_input(o, m < 0);
    if (m == 0) {
      auto z = zero_surgery_betti(in, k);
      json r = json::object();
      std::ostringstream os;
      for (auto [g, n] : z.ranks) {
        r[std::to_string(g)] = n;
        os << "gr " << g << ": " << n << "\n";
      }
      j["m"] = 0;
      j["k"] = k;
      j["ranks"] = r;
      j["convention_dependent"] = z.convention_dependent;
      if (z.convention_dependent) os << "(twisted module; grading convention dependent)\n";
      std::string text = os.str();
      if (!text.empty()) text.pop_back();
      emit(o, j, text);
    } else {
      auto a = integer_surgery(in, m, k);
      j["answer"] = a.to_json();
      std::ostringstream os;
      os << a.description.str() << "\nreduced rank " << a.reduced_rank << ", d shift " << a.d_shift << ", h "
         << a.h;
      emit(o, j, os.str());
    }
  } else if (cmd == "hk") {
    auto in = floer_input(o);
    int k = need(o.k, "--k");
    int h = h_invariant(in, k);
    j["k"] = k;
    j["h"] = h;
    emit(o, j, std::to_string(h));
  } else if (cmd == "maslov") {
    if (o.domain.empty()) throw UsageError("maslov needs --domain <file>");
    auto d = DomainChain::load(o.domain);
    auto verdict = classify_differential(d);
    int chi = euler_chain(d), diag = diagonal_term(d), mu = maslov_index(d);
    auto ct = corner_term(d);
    json corners = json::array();
    for (auto& c : classify_corners(d))
      corners.push_back({{"vertex", d.cellulation().vertices()[c.vertex].id},
                         {"role", std::string(1, c.role)},
                         {"type", std::string(1, c.type)}});
    j["domain"] = d.to_json();
    j["euler"] = chi;
    j["writhe"] = braid_writhe(d);
    j["diagonal"] = diag;
    j["corner_term"] = rational_str(ct);
    j["corners"] = corners;
    j["maslov"] = mu;
    j["verdict"] = verdict.to_json();
    std::ostringstream os;
    os << "mu = " << mu << " (2*" << chi << " + " << diag << " + " << ct << "), " << verdict.name();
    emit(o, j, os.str());
  } else if (cmd == "table") {
    if (!o.knot.empty()) {
      auto d = table_knot(o.knot);
      j["knot"] = o.knot;
      j["pd"] = to_pd(d);
      emit(o, j, to_pd(d));
    } else {
      auto names = table_names();
      j["path"] = table_path();
      j["knots"] = names;
      std::string text;
      for (auto& n : names) text += (text.empty() ? "" : "\n") + n;
      emit(o, j, text);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot Floer invariants from planar diagrams"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"alexander", "Alexander polynomial via Fox calculus"},
      {"signature", "knot signature"},
      {"spectrum", "generator spectrum of the Fox determinant"},
      {"mprs", "marked partial resolutions of an alternating diagram"},
      {"small", "smallness certificate of an alternating diagram"},
      {"cfr", "reduced stable complex"},
      {"surgery", "Floer homology of m-surgery in spin^c structure k"},
      {"hk", "local h-invariant h_k"},
      {"maslov", "Maslov index of a Heegaard diagram domain"},
      {"table", "list the knot table or print one entry"},
  };
  for (auto& [name, help] : cmds) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("--knot", o.knot, "knot table name");
    sc->add_option("--pd", o.pd, "PD code file, or - for stdin");
    sc->add_flag("--json", o.json, "emit one JSON document");
    sc->add_option("--trace", o.trace, "directory for intermediate artifacts");
    if (name == "cfr" || name == "surgery" || name == "hk") {
      sc->add_option("--input", o.input, "knot Floer input JSON instead of a diagram (the mirror's, for m < 0)");
      sc->add_option("--field", o.field, "coefficient field")->check(CLI::IsMember({"Q", "F2"}));
    }
    if (name == "surgery" || name == "hk") sc->add_option("--k", o.k, "spin^c index");
    if (name == "surgery") sc->add_option("--m", o.m, "surgery coefficient");
    if (name == "mprs") sc->add_option("--c1", o.c1, "distinguished crossing (0-based)");
    if (name == "maslov") sc->add_option("--domain", o.domain, "domain JSON file");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    run(app.get_subcommands().front()->get_name(), o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
