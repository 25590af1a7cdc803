// gridlink: generate, verify, sweep, search and render covering chains.
//
// Exit codes: 0 certified, 1 verification failure, 2 impossible or
// out-of-domain request, 3 I/O or parse error.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridlink/gridlink.hpp"

namespace {

using namespace gridlink;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kImpossible = 2;
constexpr int kIoError = 3;

struct OutputFlags {
  bool json = false;
  bool csv = false;
  bool md = false;
  bool svg = false;
  std::string out_dir;
};

void add_output_flags(CLI::App* cmd, OutputFlags& f, bool tables, bool svg) {
  cmd->add_flag("--json", f.json, "JSON output");
  if (tables) {
    cmd->add_flag("--csv", f.csv, "CSV output");
    cmd->add_flag("--md", f.md, "Markdown output");
  }
  if (svg) cmd->add_flag("--svg", f.svg, "also write an SVG figure");
  cmd->add_option("--out", f.out_dir, "write files into this directory instead of stdout");
}

/// Writes text to DIR/name, or to stdout when no directory is set.
void emit(const OutputFlags& f, const std::string& name, const std::string& text) {
  if (f.out_dir.empty()) {
    std::cout << text;
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(f.out_dir, ec);
  if (ec) throw IoError("cannot create " + f.out_dir + ": " + ec.message());
  const std::string path = (std::filesystem::path(f.out_dir) / name).string();
  write_file(path, text);
  std::cerr << "wrote " << path << "\n";
}

std::string file_stem(const std::string& kind, long n) {
  std::string s = kind;
  for (char& c : s) {
    if (c == ':') c = '-';
  }
  return kind.rfind("catalog:", 0) == 0 ? s : s + "-" + std::to_string(n);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string text_report(const PolygonalChain& c, const Classification& cl) {
  std::string s;
  s += "n: " + std::to_string(c.n) + "\n";
  s += "declared kind: " + std::string(to_string(c.kind)) + "\n";
  s += "classification: trail=" + std::string(cl.is_covering_trail ? "yes" : "no") +
       " path=" + (cl.is_covering_path ? "yes" : "no") + " circuit=" + (cl.is_covering_circuit ? "yes" : "no") +
       " cycle=" + (cl.is_covering_cycle ? "yes" : "no") + "\n";
  s += "strongest kind: " + std::string(to_string(cl.strongest())) + "\n";
  s += "h: " + std::to_string(cl.report.link_length) + " (minimum " + std::to_string(min_link_length(c.n)) + ")\n";
  s += "l: " + (cl.report.total_length ? cl.report.total_length->str() : std::string("not expressible as a radical sum")) +
       "\n";
  s += "uncovered: " + (cl.report.uncovered.empty() ? std::string("none") : nodes_text(cl.report.uncovered)) + "\n";
  std::string rev;
  for (const auto& [g, k] : cl.report.revisited()) rev += (rev.empty() ? "" : " ") + g.str() + ":" + std::to_string(k);
  s += "revisited: " + (rev.empty() ? std::string("none") : rev) + "\n";
  for (const auto& r : cl.failure_reasons) s += "note: " + r + "\n";
  return s;
}

int cmd_generate(const std::string& kind, long n, const std::string& eps, const OutputFlags& f) {
  GenerateParams params;
  if (!eps.empty()) params.eps = parse_rational(eps);
  if (kind == "epsilon-path" && n == 0) n = 5;
  const ChainDocument doc = generate(kind, n, params);
  const Classification cl = classify(doc.chain);
  const std::string stem = file_stem(kind, doc.chain.n);
  emit(f, stem + ".json", serialize(doc));
  if (f.svg) {
    OutputFlags svg_out = f;
    if (svg_out.out_dir.empty()) svg_out.out_dir = ".";
    emit(svg_out, stem + ".svg", render_svg(doc.chain));
  }
  const bool ok = cl.satisfies(doc.chain.kind) &&
                  (doc.chain.kind == ChainKind::unknown ||
                   static_cast<long>(doc.chain.edge_count()) == min_link_length(doc.chain.n));
  if (!ok) std::cerr << "verification failed:\n" << text_report(doc.chain, cl);
  return ok ? kOk : kVerifyFail;
}

int cmd_verify(const std::string& file, long n, const std::string& expect, const std::string& length,
               const OutputFlags& f) {
  ChainDocument doc = parse_document(read_file(file));
  if (n > 0 && n != doc.chain.n) {
    std::cerr << "document is for n=" << doc.chain.n << ", expected n=" << n << "\n";
    return kVerifyFail;
  }
  const ChainKind want = expect.empty() ? doc.chain.kind : parse_chain_kind(expect);
  Classification cl;
  try {
    cl = classify(doc.chain);
  } catch (const InvalidChainError& e) {
    std::cerr << "invalid chain (edges " << e.first_edge() << " and " << e.second_edge() << "): " << e.what() << "\n";
    return kVerifyFail;
  }
  bool ok = cl.satisfies(want);
  std::string length_note;
  if (!length.empty()) {
    const RadicalSum target = RadicalSum::parse(length);
    const bool eq = cl.report.total_length && *cl.report.total_length == target;
    length_note = std::string("length ") + (eq ? "equals " : "differs from ") + target.str();
    ok = ok && eq;
  }
  if (f.json) {
    Json j = report_to_json(doc.chain, cl);
    j["expected_kind"] = std::string(to_string(want));
    if (!length.empty()) j["expected_length"] = length;
    j["pass"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_report(doc.chain, cl);
    if (!length_note.empty()) std::cout << length_note << "\n";
    std::cout << "expected " << to_string(want) << ": " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kVerifyFail;
}

int cmd_sweep(long lo, long hi, const std::string& kinds, bool collisions, const OutputFlags& f) {
  if (collisions) {
    const auto rows = collision_table(std::max(lo, 4L), hi);
    bool all = true;
    for (const auto& r : rows) all = all && r.match;
    if (f.json) {
      emit(f, "collisions.json", to_json(rows).dump(2) + "\n");
    } else if (f.md) {
      emit(f, "collisions.md", to_markdown(rows));
    } else {
      emit(f, "collisions.csv", to_csv(rows));
    }
    if (!all) return kVerifyFail;
    if (kinds.empty()) return kOk;
  }
  const SweepReport rep = run_sweep(lo, hi, split(kinds.empty() ? "path" : kinds, ','));
  if (f.json) {
    emit(f, "sweep.json", to_json(rep).dump(2) + "\n");
  } else if (f.md) {
    emit(f, "sweep.md", to_markdown(rep));
  } else {
    emit(f, "sweep.csv", to_csv(rep));
  }
  return rep.all_pass() ? kOk : kVerifyFail;
}

int cmd_search(long n, long max_edges, const SearchOptions& opt, bool witness, const OutputFlags& f) {
  if (witness) {
    const PolygonalChain c = find_trail_not_path(n, opt);
    emit(f, "trail-not-path-" + std::to_string(n) + ".json",
         serialize(make_document(c, Json{{"generator", "trail-not-path"}, {"n", n}})));
    return kOk;
  }
  if (max_edges <= 0) max_edges = min_link_length(n);
  const SearchResult r = search_min_trail(n, max_edges, opt);
  if (f.json) {
    emit(f, "search-" + std::to_string(n) + ".json", to_json(r).dump(2) + "\n");
  } else {
    std::string s = "model: " + r.model + "\nexplored: " + std::to_string(r.explored) +
                    "\ncomplete: " + (r.complete ? "yes" : "no (time budget exhausted)") + "\n";
    s += r.chain ? "found h=" + std::to_string(r.chain->edge_count()) + ": " + describe(*r.chain) + "\n"
                 : "none with at most " + std::to_string(max_edges) + " edges in this model\n";
    emit(f, "search-" + std::to_string(n) + ".txt", s);
  }
  return kOk;
}

int cmd_render(const std::string& file, const SvgOptions& opt, const OutputFlags& f) {
  const ChainDocument doc = parse_document(read_file(file));
  emit(f, std::filesystem::path(file).stem().string() + ".svg", render_svg(doc.chain, opt));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-link covering chains of the n x n grid: construction and exact verification"};
  app.require_subcommand(1);

  OutputFlags out;
  std::string kind, eps, file, expect, length, kinds;
  long n = 0, lo = 1, hi = 1, max_edges = 0;
  bool collisions = false, witness = false;
  SearchOptions sopt;
  std::uint64_t seed = 0;
  SvgOptions svg;

  auto* gen = app.add_subcommand("generate", "build and certify a chain");
  gen->add_option("kind", kind, "path | circuit | cycle | distance-trail | epsilon-path | catalog:<id>")->required();
  gen->add_option("n", n, "grid size (ignored for catalog ids; epsilon-path uses 5)");
  gen->add_option("--eps", eps, "epsilon for epsilon-path, as p/q (default 1/10)");
  add_output_flags(gen, out, false, true);

  auto* ver = app.add_subcommand("verify", "classify a chain document");
  ver->add_option("file", file, "chain document (JSON)")->required();
  ver->add_option("--n", n, "expected grid size");
  ver->add_option("--expect", expect, "expected kind (default: the declared kind)");
  ver->add_option("--length", length, "expected exact length, e.g. 20+6*sqrt(2)");
  add_output_flags(ver, out, false, false);

  auto* sw = app.add_subcommand("sweep", "generate and certify a range of n");
  sw->add_option("n_min", lo, "smallest n")->required();
  sw->add_option("n_max", hi, "largest n")->required();
  sw->add_option("--kinds", kinds, "comma-separated kinds (default path)");
  sw->add_flag("--collisions", collisions, "include the bridge-line collision table");
  add_output_flags(sw, out, true, false);

  auto* col = app.add_subcommand("collisions", "bridge-line hits against residue predictions");
  col->add_option("n_min", lo, "smallest n (>= 4)")->required();
  col->add_option("n_max", hi, "largest n")->required();
  add_output_flags(col, out, true, false);

  auto* se = app.add_subcommand("search", "exhaustive search in the restricted candidate model");
  se->add_option("n", n, "grid size (<= 4)")->required();
  se->add_option("--max-edges", max_edges, "largest edge count to try (default: the minimum)");
  se->add_option("--padding", sopt.padding, "lattice padding of the candidate model")->capture_default_str();
  auto* seed_opt = se->add_option("--seed", seed, "shuffle the candidate line order");
  se->add_option("--time-budget", sopt.time_budget_seconds, "seconds, 0 for unlimited");
  se->add_flag("--trail-not-path", witness, "find a covering trail that revisits (0,0)");
  add_output_flags(se, out, false, false);

  auto* ren = app.add_subcommand("render", "draw a chain document as SVG");
  ren->add_option("file", file, "chain document (JSON)")->required();
  ren->add_option("--scale", svg.scale, "pixels per unit")->capture_default_str();
  ren->add_option("--margin", svg.margin, "margin in units")->capture_default_str();
  add_output_flags(ren, out, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kIoError;
  }

  try {
    if (*gen) return cmd_generate(kind, n, eps, out);
    if (*ver) return cmd_verify(file, n, expect, length, out);
    if (*sw) return cmd_sweep(lo, hi, kinds, collisions, out);
    if (*col) return cmd_sweep(lo, hi, "", true, out);
    if (*se) {
      if (*seed_opt) sopt.seed = seed;
      return cmd_search(n, max_edges, sopt, witness, out);
    }
    if (*ren) return cmd_render(file, svg, out);
  } catch (const ImpossibleRequest& e) {
    std::cerr << "impossible: " << e.what() << "\n";
    return kImpossible;
  } catch (const UnimplementedPattern& e) {
    std::cerr << "unimplemented pattern: " << e.what() << "\n";
    return kImpossible;
  } catch (const DomainError& e) {
    std::cerr << "out of domain: " << e.what() << "\n";
    return kImpossible;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIoError;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const InvalidChainError& e) {
    std::cerr << "invalid chain (edges " << e.first_edge() << " and " << e.second_edge() << "): " << e.what() << "\n";
    return kVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFail;
  }
  return kOk;
}
