#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "planar/generators.hpp"
#include "planar/graph_io.hpp"
#include "planar/report.hpp"

namespace {

// Exit codes: 0 ok, 1 internal invariant violation, 2 parse error,
// 3 embedding error, 4 engine cap exceeded.
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitEmbedding = 3;
constexpr int kExitTooLarge = 4;

void emit(const nlohmann::ordered_json& report, const std::string& format,
          const std::string& out_path) {
  std::string text =
      format == "text" ? planar::render_text(report) : report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
}

planar::PlaneGraph generate_family(const std::string& family, int n) {
  if (family == "cycle") return planar::make_cycle(n);
  if (family == "wheel") return planar::make_wheel(n);
  if (family == "prism") return planar::make_prism(n);
  if (family == "stacked_triangulation")
    return planar::make_stacked_triangulation(n);
  if (family == "octahedron") return planar::make_octahedron();
  throw CLI::ValidationError("unknown family: " + family);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane-graph structure, discharging and list-coloring analyzer"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  unsigned seed = 12345;
  int jobs = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--seed", seed, "seed for randomized smoke checks");
  app.add_option("--jobs", jobs, "parallel workers for independent checks")
      ->check(CLI::Range(1, 64));

  auto* analyze = app.add_subcommand("analyze", "full structural analysis of a graph file");
  std::string analyze_file;
  planar::AnalyzeOptions opts;
  analyze->add_option("file", analyze_file, "graph document")->required();
  analyze->add_option("--hypothesis", opts.hypothesis_i,
                      "restrict the adjacency hypothesis check to one cycle length")
      ->check(CLI::IsMember({3, 4, 5, 6}));
  analyze->add_option("--max-cycle-len", opts.max_cycle_len,
                      "cycle enumeration cap (3..8)")
      ->check(CLI::Range(3, 8));
  analyze->add_flag("--gadgets", opts.include_gadgets,
                    "include the gadget lemma verification report");

  auto* generate = app.add_subcommand("generate", "emit a graph document for a family");
  std::string family;
  int gen_n = 5;
  generate->add_option("family", family, "cycle|wheel|prism|stacked_triangulation|octahedron")
      ->required()
      ->check(CLI::IsMember(
          {"cycle", "wheel", "prism", "stacked_triangulation", "octahedron"}));
  generate->add_option("--n", gen_n, "size parameter");

  auto* gadgets = app.add_subcommand("gadgets", "verify the list-coloring gadget lemmas");

  auto* choosable = app.add_subcommand("choosable", "decide k-choosability of a graph file");
  std::string choosable_file;
  int k = 4;
  int smoke = 0;
  choosable->add_option("file", choosable_file, "graph document")->required();
  choosable->add_option("-k,--k", k, "list size")->required();
  choosable->add_option("--smoke", smoke,
                        "after a positive answer, spot-check this many random assignments");

  auto* discharge = app.add_subcommand("discharge", "full discharging ledger for a graph file");
  std::string discharge_file;
  discharge->add_option("file", discharge_file, "graph document")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      planar::GraphDocument doc = planar::read_graph_file(analyze_file);
      planar::PlaneGraph g = doc.build();
      opts.jobs = jobs;
      emit(planar::analysis_report(doc, g, opts), format, out_path);
    } else if (*generate) {
      planar::PlaneGraph g = generate_family(family, gen_n);
      planar::GraphDocument doc = planar::document_from_graph(
          g, family == "octahedron" ? family : family + "-" + std::to_string(gen_n));
      emit(planar::document_to_json(doc), format.empty() ? "json" : "json", out_path);
    } else if (*gadgets) {
      emit(planar::gadget_report(), format, out_path);
    } else if (*choosable) {
      planar::GraphDocument doc = planar::read_graph_file(choosable_file);
      planar::PlaneGraph g = doc.build();
      emit(planar::choosable_report(doc, g, k, smoke, seed), format, out_path);
    } else if (*discharge) {
      planar::GraphDocument doc = planar::read_graph_file(discharge_file);
      planar::PlaneGraph g = doc.build();
      emit(planar::discharge_report(doc, g), format, out_path);
    }
  } catch (const planar::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const planar::GraphError& e) {
    std::cerr << "embedding error: " << e.what() << "\n";
    return kExitEmbedding;
  } catch (const planar::TooLargeError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
