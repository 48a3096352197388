#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ttspec/burnside.hpp"
#include "ttspec/tt_ideals.hpp"
#include "ttspec/tt_spectrum.hpp"

namespace ttspec {

using nlohmann::json;

// Marks table as CSV: header row of class names, then one row per class.
std::string marks_to_csv(const MarksTable &marks);
json marks_to_json(const MarksTable &marks, const std::string &group);

json burnside_spectrum_to_json(const BurnsideSpectrum &spec, const std::string &group);

// Plain-data form of a spectrum poset, as written to and read from JSON.
struct PosetDocument
{
  struct Point
  {
    std::size_t id = 0;
    std::string cls;
    int characteristic = 0;
    ExtNat level = 1;
    bool operator==(const Point &) const = default;
  };
  struct Edge
  {
    std::size_t from = 0;
    std::size_t to = 0;
    std::string status;
    bool operator==(const Edge &) const = default;
  };

  std::string group;
  std::string mode;
  int height = 1;
  bool infinity = false;
  std::vector<int> primes;
  std::vector<Point> points;
  std::vector<Edge> edges;

  bool operator==(const PosetDocument &) const = default;
};

PosetDocument to_document(const SpectrumPoset &poset, const std::string &group);
json to_json(const PosetDocument &doc);
// Throws DomainError on schema violations.
PosetDocument document_from_json(const json &j);

// One column (subgraph) per class, levels increasing upward, unknown edges
// dashed. Edges run from the smaller prime to the larger one.
std::string poset_to_dot(const SpectrumPoset &poset, const std::string &group);

json level_to_json(ExtNat level);
ExtNat level_from_json(const json &j);

// {"C_2#0:2": 3, "C_1#0:2": "inf", ...}
json function_to_json(const AdmissibleFunction &f);
// Every (class, prime) of the domain must be present. Primes are taken
// from the keys.
AdmissibleFunction function_from_json(const json &j, std::shared_ptr<const SubgroupLattice> lattice);

} // namespace ttspec
