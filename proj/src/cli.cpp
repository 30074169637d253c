#include "quivloc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "quivloc/covering.hpp"
#include "quivloc/error.hpp"
#include "quivloc/localization.hpp"
#include "quivloc/toric.hpp"

#ifndef QUIVLOC_FIXTURE_DIR
#define QUIVLOC_FIXTURE_DIR "fixtures"
#endif

namespace quivloc {

namespace {

namespace fs = std::filesystem;

std::string dimText(const DimensionVector& d) {
  std::string s = "(";
  for (std::size_t v = 0; v < d.size(); ++v) s += (v ? "," : "") + std::to_string(d[v]);
  return s + ")";
}

std::string polyText(const Polynomial& p, const VariableNames& names, OutputFormat format) {
  return format == OutputFormat::Latex ? toLatex(p, names) : serialize(p, names);
}

std::string tupleText(const std::vector<Polynomial>& t, const VariableNames& names, OutputFormat format) {
  std::string s;
  if (format == OutputFormat::Latex) {
    s = "\\begin{pmatrix} ";
    for (std::size_t k = 0; k < t.size(); ++k) s += (k ? " \\\\ " : "") + toLatex(t[k], names);
    return s + " \\end{pmatrix}";
  }
  s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? ", " : "") + serialize(t[k], names);
  return s + ")";
}

struct Loaded {
  QuiverProblem problem;
  VariableNames names;
};

Loaded load(const JobSpec& spec) {
  if (spec.quiverPath.empty()) throw ParseError("no quiver file given");
  Loaded l{loadQuiverDocument(spec.quiverPath), {}};
  l.names = VariableNames::fromQuiver(l.problem.quiver);
  return l;
}

const StabilityCondition& needTheta(const QuiverProblem& p) {
  if (!p.theta) throw DomainError("the quiver file has no stability condition 'theta'");
  return *p.theta;
}

const DimensionVector& needDim(const QuiverProblem& p) {
  if (!p.d) throw DomainError("the quiver file has no dimension vector 'd'");
  return *p.d;
}

void runPresent(const JobSpec& spec, std::ostream& out) {
  auto [problem, names] = load(spec);
  if (!spec.maxDegree) throw DomainError("present needs --max-degree");
  const auto& q = problem.quiver;
  const auto& d = needDim(problem);
  auto kernel = kernelGenerators(q, d, needTheta(problem), spec.mode, *spec.maxDegree);
  auto dims = gradedQuotientDimensions(q, d, kernel);

  if (spec.format == OutputFormat::Machine) {
    for (const auto& g : kernel.generators)
      out << "generator dprime=" << dimText(g.decomposition.dPrime)
          << " ddoubleprime=" << dimText(g.decomposition.dDoublePrime) << " f=" << g.fLabel << " g=" << g.gLabel
          << " arrow=" << serialize(Polynomial::term(g.arrowFactor, 1), names) << " degree=" << g.degree
          << " zero=" << (g.zero ? "true" : "false") << " product=" << serialize(g.product, names) << "\n";
    out << "dimensions";
    for (auto x : dims) out << " " << x;
    out << "\n";
    return;
  }
  out << "mode: " << (spec.mode == StabilityMode::Stable ? "st" : "sst") << "\n";
  out << "max degree: " << *spec.maxDegree << "\n";
  out << "generators: " << kernel.generators.size() << "\n";
  std::size_t k = 0;
  for (const auto& g : kernel.generators) {
    out << ++k << ": " << dimText(g.decomposition.dPrime) << " + " << dimText(g.decomposition.dDoublePrime)
        << " f=" << g.fLabel << " g=" << g.gLabel;
    if (!g.arrowFactor.isOne()) out << " times " << serialize(Polynomial::term(g.arrowFactor, 1), names);
    out << " [degree " << g.degree << "]";
    if (g.zero)
      out << " zero\n";
    else
      out << "\n   " << polyText(g.product, names, spec.format) << "\n";
  }
  out << "graded quotient dimensions:";
  for (auto x : dims) out << " " << x;
  out << "\n";
}

void runFixedPoints(const JobSpec& spec, std::ostream& out) {
  auto [problem, names] = load(spec);
  auto components = fixedComponents(problem.quiver, needDim(problem), needTheta(problem));
  if (spec.format == OutputFormat::Machine) {
    for (std::size_t k = 0; k < components.size(); ++k)
      out << "component index=" << k + 1 << " beta=" << formatCovering(components[k].beta, names)
          << " dimension=" << components[k].dimension << " isolated=" << (components[k].isolated ? "true" : "false")
          << "\n";
    return;
  }
  std::size_t isolated = 0;
  for (const auto& c : components) isolated += c.isolated ? 1 : 0;
  out << "fixed components: " << components.size() << " (" << isolated << " isolated)\n";
  for (std::size_t k = 0; k < components.size(); ++k)
    out << k + 1 << ": " << formatCovering(components[k].beta, names) << " | dimension "
        << components[k].dimension << (components[k].isolated ? " | isolated" : "") << "\n";
}

void runLocalize(const JobSpec& spec, std::ostream& out) {
  auto [problem, names] = load(spec);
  auto image = localizationImageGenerators(problem.quiver, needDim(problem), needTheta(problem));
  if (spec.format != OutputFormat::Machine) {
    out << "components: " << image.components.size() << "\n";
    for (std::size_t k = 0; k < image.components.size(); ++k)
      out << k + 1 << ": " << formatCovering(image.components[k].beta, names) << "\n";
  }
  for (const auto& g : image.generators) {
    if (spec.format == OutputFormat::Machine)
      out << "generator " << g.label << " = " << tupleText(g.tuple, names, spec.format) << "\n";
    else
      out << g.label << " = " << tupleText(g.tuple, names, spec.format) << "\n";
  }
}

ToricTuple readTupleFile(const std::string& path, std::size_t size, const VariableNames& names) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tuple file '" + path + "'");
  std::vector<std::optional<Polynomial>> entries(size);
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineNo) + ": expected 'tree-id: polynomial'");
    std::size_t id = 0;
    try {
      std::size_t used = 0;
      std::string head = line.substr(0, colon);
      id = std::stoul(head, &used);
      if (head.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("id");
    } catch (const std::exception&) {
      throw ParseError(path + ":" + std::to_string(lineNo) + ": tree id must be a positive integer");
    }
    if (id < 1 || id > size)
      throw ParseError(path + ":" + std::to_string(lineNo) + ": tree id out of range 1.." + std::to_string(size));
    if (entries[id - 1]) throw ParseError(path + ":" + std::to_string(lineNo) + ": tree id repeated");
    try {
      entries[id - 1] = parsePolynomial(line.substr(colon + 1), names);
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineNo) + ": " + e.what());
    }
  }
  ToricTuple t;
  for (std::size_t k = 0; k < size; ++k) {
    if (!entries[k]) throw ParseError(path + ": no entry for tree " + std::to_string(k + 1));
    t.push_back(*entries[k]);
  }
  return t;
}

std::string complementText(const ArrowSubset& tree, const Quiver& q) {
  std::string s;
  for (std::size_t a = 0; a < q.arrowCount(); ++a)
    if (!tree.contains(a)) s += (s.empty() ? "" : ",") + std::string("x_") + q.arrow(a).id;
  return s;
}

int runToric(const JobSpec& spec, std::ostream& out) {
  auto [problem, names] = load(spec);
  const auto& q = problem.quiver;
  const auto& theta = needTheta(problem);
  if (problem.d && !problem.d->isThin()) throw DomainError("toric computations need the thin dimension vector");
  const bool machine = spec.format == OutputFormat::Machine;

  switch (spec.toricAction) {
    case ToricAction::Trees: {
      auto trees = stableSpanningTrees(q, theta);
      if (!machine) out << "stable spanning trees: " << trees.size() << "\n";
      for (std::size_t k = 0; k < trees.size(); ++k)
        out << (machine ? "tree " : "") << k + 1 << ": " << formatArrowSubset(trees[k], q)
            << (machine ? " complement=" : " | complement ") << complementText(trees[k], q) << "\n";
      return 0;
    }
    case ToricAction::Edges: {
      auto graph = gkmGraph(q, theta);
      if (spec.dot) {
        out << "graph gkm {\n";
        for (std::size_t k = 0; k < graph.trees.size(); ++k)
          out << "  t" << k + 1 << " [label=\"" << formatArrowSubset(graph.trees[k], q) << "\"];\n";
        for (const auto& e : graph.edges)
          out << "  t" << e.tree0 + 1 << " -- t" << e.treeInf + 1 << " [label=\"" << formatArrowSubset(e.omega, q)
              << "\"];\n";
        out << "}\n";
        return 0;
      }
      if (!machine) out << "stable almost trees: " << graph.edges.size() << "\n";
      for (std::size_t k = 0; k < graph.edges.size(); ++k) {
        const auto& e = graph.edges[k];
        out << (machine ? "edge " : "") << k + 1 << ": " << formatArrowSubset(e.omega, q) << " joins "
            << e.tree0 + 1 << " and " << e.treeInf + 1 << " alpha0=" << q.arrow(e.alpha0).id
            << " alphaInf=" << q.arrow(e.alphaInf).id << "\n";
      }
      return 0;
    }
    case ToricAction::Basis: {
      if (!spec.maxDegree) throw DomainError("basis needs --max-degree");
      auto basis = imageBasis(q, theta, *spec.maxDegree);
      if (!machine && spec.format != OutputFormat::Latex) out << "basis elements: " << basis.size() << "\n";
      for (const auto& el : basis)
        out << (machine ? "basis " : "") << polyText(Polynomial::term(el.monomial, 1), names, spec.format)
            << " -> " << tupleText(el.tuple, names, spec.format) << "\n";
      return 0;
    }
    case ToricAction::Check: {
      auto graph = gkmGraph(q, theta);
      auto tuple = readTupleFile(spec.tuplePath, graph.trees.size(), names);
      auto check = gkmMembership(tuple, graph, names);
      if (check.member) {
        out << (machine ? "member true" : "in image: yes") << "\n";
        return 0;
      }
      out << (machine ? "member false" : "in image: no") << "\n";
      for (const auto& v : check.violations)
        out << (machine ? "violation " : "violation: ") << v.description << " difference "
            << serialize(v.difference, names) << "\n";
      return 0;
    }
  }
  return 0;
}

std::vector<std::string> splitWords(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::string readFile(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open '" + p.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int runVerify(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  fs::path dir = spec.fixtureDir.empty() ? fs::path(QUIVLOC_FIXTURE_DIR) : fs::path(spec.fixtureDir);
  fs::path golden = dir / "golden";
  if (!fs::is_directory(golden)) throw ParseError("no golden directory at '" + golden.string() + "'");
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator(golden))
    if (entry.path().extension() == ".args") cases.push_back(entry.path());
  std::sort(cases.begin(), cases.end());
  if (cases.empty()) throw ParseError("no golden cases in '" + golden.string() + "'");

  std::size_t failures = 0;
  for (const auto& c : cases) {
    std::vector<std::string> args;
    for (auto& w : splitWords(readFile(c))) {
      // File arguments are relative to the fixture directory.
      if (w.front() != '-' && fs::exists(dir / w))
        args.push_back((dir / w).string());
      else
        args.push_back(w);
    }
    std::ostringstream got, diag;
    int code = runCommandLine(args, got, diag);
    fs::path expectedPath = c;
    expectedPath.replace_extension(".out");
    std::string expected = readFile(expectedPath);
    std::string name = c.stem().string();
    if (code == 0 && got.str() == expected) {
      out << "ok " << name << "\n";
      continue;
    }
    ++failures;
    out << "FAIL " << name;
    if (code != 0) {
      out << " (exit " << code << ": " << diag.str() << ")\n";
      continue;
    }
    std::istringstream a(got.str()), b(expected);
    std::string la, lb;
    std::size_t line = 0;
    for (;;) {
      ++line;
      bool ha = static_cast<bool>(std::getline(a, la)), hb = static_cast<bool>(std::getline(b, lb));
      if (!ha && !hb) break;
      if (ha != hb || la != lb) {
        out << " line " << line << ": expected '" << (hb ? lb : "<eof>") << "' got '" << (ha ? la : "<eof>")
            << "'";
        break;
      }
    }
    out << "\n";
  }
  out << cases.size() - failures << "/" << cases.size() << " golden cases match\n";
  if (failures) err << failures << " golden case(s) differ\n";
  return failures ? 1 : 0;
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case Command::Present:
        runPresent(spec, out);
        return 0;
      case Command::FixedPoints:
        runFixedPoints(spec, out);
        return 0;
      case Command::Localize:
        runLocalize(spec, out);
        return 0;
      case Command::ToricGkm:
        return runToric(spec, out);
      case Command::VerifyExamples:
        return runVerify(spec, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int runCommandLine(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Chow rings of quiver moduli"};
  app.require_subcommand(1);
  JobSpec spec;
  std::string format = "text";
  std::string mode = "st";
  unsigned maxDegree = 0;
  bool latex = false;

  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::Text}, {"machine", OutputFormat::Machine}, {"latex", OutputFormat::Latex}};
  auto addFormat = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine", "latex"}));
  };

  auto* present = app.add_subcommand("present", "Kernel generators of the tautological presentation");
  present->add_option("quiver", spec.quiverPath, "Quiver file")->required();
  present->add_option("--mode", mode, "sst or st")->check(CLI::IsMember({"sst", "st"}));
  auto* presentDeg = present->add_option("--max-degree", maxDegree, "Degree bound")->required();
  addFormat(present);

  auto* fixed = app.add_subcommand("fixed-points", "Torus-fixed components of the stable locus");
  fixed->add_option("quiver", spec.quiverPath, "Quiver file")->required();
  addFormat(fixed);

  auto* localize = app.add_subcommand("localize", "Generators of the image of the localization map");
  localize->add_option("quiver", spec.quiverPath, "Quiver file")->required();
  localize->add_flag("--latex", latex, "LaTeX column vectors");
  addFormat(localize);

  auto* toric = app.add_subcommand("toric-gkm", "GKM data of thin moduli");
  toric->require_subcommand(1);
  auto* trees = toric->add_subcommand("trees", "Stable spanning trees");
  trees->add_option("quiver", spec.quiverPath, "Quiver file")->required();
  addFormat(trees);
  auto* edges = toric->add_subcommand("edges", "Stable spanning almost trees");
  edges->add_option("quiver", spec.quiverPath, "Quiver file")->required();
  edges->add_flag("--dot", spec.dot, "Graphviz output");
  addFormat(edges);
  auto* basis = toric->add_subcommand("basis", "Basis of the image up to a degree");
  basis->add_option("quiver", spec.quiverPath, "Quiver file")->required();
  auto* basisDeg = basis->add_option("--max-degree", maxDegree, "Degree bound")->required();
  addFormat(basis);
  auto* check = toric->add_subcommand("check", "GKM membership of a tuple");
  check->add_option("quiver", spec.quiverPath, "Quiver file")->required();
  check->add_option("tuples", spec.tuplePath, "Tuple file")->required();
  addFormat(check);

  auto* verify = app.add_subcommand("verify-examples", "Replay the golden fixtures");
  verify->add_option("dir", spec.fixtureDir, "Fixture directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  spec.format = formats.at(format);
  if (latex) spec.format = OutputFormat::Latex;
  spec.mode = mode == "sst" ? StabilityMode::Semistable : StabilityMode::Stable;
  if (*presentDeg || *basisDeg) spec.maxDegree = maxDegree;
  if (present->parsed())
    spec.command = Command::Present;
  else if (fixed->parsed())
    spec.command = Command::FixedPoints;
  else if (localize->parsed())
    spec.command = Command::Localize;
  else if (verify->parsed())
    spec.command = Command::VerifyExamples;
  else {
    spec.command = Command::ToricGkm;
    spec.toricAction = trees->parsed()   ? ToricAction::Trees
                       : edges->parsed() ? ToricAction::Edges
                       : basis->parsed() ? ToricAction::Basis
                                         : ToricAction::Check;
  }
  return run(spec, out, err);
}

}  // namespace quivloc
