#include "antiram/witness.hpp"

#include <fstream>

#include <json.hpp>

namespace antiram {

using nlohmann::json;

std::string witness_to_json(const Witness& w) {
  json j;
  j["n"] = w.coloring.n;
  j["edge_order"] = "lex-pairs";
  j["colors"] = w.coloring.color;
  j["kind"] = std::string(to_string(w.kind));
  j["pattern"] = w.pattern;
  j["m"] = w.m;
  j["verified"] = w.verified;
  return j.dump(2) + "\n";
}

Witness witness_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("edge_order", "") != std::string("lex-pairs"))
    throw error("witness edge_order must be lex-pairs");
  Witness w;
  int n = j.at("n").get<int>();
  std::vector<int> colors = j.at("colors").get<std::vector<int>>();
  w.coloring = make_coloring(n, std::move(colors));
  auto kind = phi_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw error("witness has unknown kind");
  w.kind = *kind;
  w.pattern = j.at("pattern").get<std::string>();
  w.m = j.at("m").get<int>();
  w.verified = j.value("verified", false);
  return w;
}

void write_witness_file(const Witness& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write witness file: " + path);
  out << witness_to_json(w);
  if (!out) throw error("witness write failed: " + path);
}

Witness read_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot read witness file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return witness_from_json(text);
}

}  // namespace antiram
