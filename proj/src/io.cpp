#include "nccr/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nccr/errors.hpp"

namespace nccr {

GroupElement InputDocument::from_raw(const std::vector<Int>& coords) const {
  if (coords.size() != to_group.size()) {
    throw UsageError("ParseError", "vector has " + std::to_string(coords.size()) + " entries, expected " +
                                       std::to_string(to_group.size()));
  }
  std::vector<Int> y(group.coord_count(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += coords[i] * to_group[i][j];
  }
  return group.from_coords(y);
}

InputDocument parse_input(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("ParseError", e.what());
  }
  try {
    const auto& grp = doc.at("group");
    const int free_rank = grp.at("free_rank").get<int>();
    const auto torsion = grp.value("torsion", std::vector<Int>{});
    if (free_rank != 0 && free_rank != 1) throw UsageError("ParseError", "free_rank must be 0 or 1");

    const std::size_t n = static_cast<std::size_t>(free_rank) + torsion.size();
    IntMatrix rels;
    for (std::size_t j = 0; j < torsion.size(); ++j) {
      if (torsion[j] < 1) throw UsageError("ParseError", "torsion entries must be >= 1");
      std::vector<Int> row(n, 0);
      row[static_cast<std::size_t>(free_rank) + j] = torsion[j];
      rels.push_back(std::move(row));
    }
    bool chain = true;
    for (std::size_t j = 0; j < torsion.size(); ++j) {
      chain = chain && torsion[j] >= 2 && (j + 1 == torsion.size() || torsion[j + 1] % torsion[j] == 0);
    }
    InputDocument out;
    if (chain) {
      out.group = FGGroup(free_rank, torsion);
      out.to_group.assign(n, std::vector<Int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) out.to_group[i][i] = 1;
    } else {
      auto pres = present(n, rels);
      out.group = pres.group;
      out.to_group = std::move(pres.to_group);
    }
    for (const auto& w : doc.at("weights")) out.weights.push_back(out.from_raw(w.get<std::vector<Int>>()));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("ParseError", e.what());
  }
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("ParseError", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

}  // namespace nccr
