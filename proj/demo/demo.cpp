// Builds a few chains, verifies them and writes JSON and SVG files into the
// directory given as the first argument (default: current directory).

#include <filesystem>
#include <iostream>

#include "gridlink/gridlink.hpp"

int main(int argc, char** argv) {
  using namespace gridlink;
  const std::filesystem::path dir = argc > 1 ? argv[1] : ".";
  std::filesystem::create_directories(dir);
  const std::vector<std::pair<std::string, long>> jobs = {
      {"path", 7}, {"circuit", 8}, {"cycle", 8}, {"distance-trail", 6}, {"catalog:fig3-c4", 0}, {"epsilon-path", 5}};
  for (const auto& [kind, n] : jobs) {
    const ChainDocument doc = generate(kind, n);
    const Classification cl = classify(doc.chain);
    std::string stem = kind + (n ? "-" + std::to_string(n) : "");
    for (char& c : stem) {
      if (c == ':') c = '-';
    }
    write_file((dir / (stem + ".json")).string(), serialize(doc));
    write_file((dir / (stem + ".svg")).string(), render_svg(doc.chain));
    std::cout << stem << ": " << to_string(cl.strongest()) << ", h=" << doc.chain.edge_count() << ", l="
              << (cl.report.total_length ? cl.report.total_length->str() : std::string("(not a radical sum)")) << "\n";
  }
  return 0;
}
