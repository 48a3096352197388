#include "ttspec/serialize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ttspec/error.hpp"

namespace ttspec {

std::string marks_to_csv(const MarksTable &marks)
{
  const SubgroupLattice &lat = marks.lattice();
  std::ostringstream os;
  os << "H\\K";
  for (const auto &c : lat.classes())
    os << ',' << c.name;
  os << '\n';
  for (ClassId h = 0; h < marks.size(); ++h) {
    os << lat.cls(h).name;
    for (ClassId k = 0; k < marks.size(); ++k)
      os << ',' << marks.entry(h, k);
    os << '\n';
  }
  return os.str();
}

json marks_to_json(const MarksTable &marks, const std::string &group)
{
  const SubgroupLattice &lat = marks.lattice();
  json classes = json::array();
  for (const auto &c : lat.classes())
    classes.push_back({{"name", c.name}, {"order", c.order}, {"class_size", c.class_size}});
  json rows = json::array();
  for (ClassId h = 0; h < marks.size(); ++h) {
    json row = json::array();
    for (ClassId k = 0; k < marks.size(); ++k)
      row.push_back(marks.entry(h, k));
    rows.push_back(std::move(row));
  }
  return {{"group", group}, {"classes", classes}, {"marks", rows}};
}

json burnside_spectrum_to_json(const BurnsideSpectrum &spec, const std::string &group)
{
  const SubgroupLattice &lat = *spec.lattice;
  json points = json::array();
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const BurnsidePrime &bp = spec.points[i];
    json collided = json::array();
    for (ClassId c : spec.collided[i])
      collided.push_back(lat.cls(c).name);
    points.push_back({{"id", i},
                      {"class", lat.cls(bp.cls).name},
                      {"char", bp.kind == BurnsidePrime::Kind::zero ? 0 : bp.prime},
                      {"collided", collided}});
  }
  json edges = json::array();
  for (const auto &[a, b] : spec.inclusions)
    edges.push_back({{"from", a}, {"to", b}, {"status", "yes"}});
  return {{"group", group}, {"primes", spec.primes}, {"points", points}, {"edges", edges}};
}

// ---------------------------------------------------------------------------

json level_to_json(ExtNat level)
{
  if (level.is_infinite())
    return "inf";
  return level.value();
}

ExtNat level_from_json(const json &j)
{
  if (j.is_string())
    return parse_ext_nat(j.get<std::string>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return ExtNat(j.get<std::int64_t>());
  throw DomainError("expected a non-negative integer or \"inf\", got " + j.dump());
}

PosetDocument to_document(const SpectrumPoset &poset, const std::string &group)
{
  const SubgroupLattice &lat = poset.lattice();
  PosetDocument doc;
  doc.group = group;
  doc.mode = to_string(poset.mode());
  doc.height = poset.height();
  doc.infinity = poset.include_infinity();
  doc.primes = poset.primes();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const TTPrime &p = poset.points()[i];
    doc.points.push_back({i, lat.cls(p.cls).name, p.characteristic, p.level});
  }
  for (const PosetEdge &e : poset.edges())
    doc.edges.push_back({e.from, e.to, to_string(e.status)});
  return doc;
}

json to_json(const PosetDocument &doc)
{
  json points = json::array();
  for (const auto &p : doc.points)
    points.push_back({{"id", p.id}, {"class", p.cls}, {"char", p.characteristic},
                      {"level", level_to_json(p.level)}});
  json edges = json::array();
  for (const auto &e : doc.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"status", e.status}});
  return {{"group", doc.group}, {"mode", doc.mode},     {"height", doc.height},
          {"infinity", doc.infinity}, {"primes", doc.primes}, {"points", points},
          {"edges", edges}};
}

PosetDocument document_from_json(const json &j)
{
  try {
    PosetDocument doc;
    doc.group = j.at("group").get<std::string>();
    doc.mode = j.at("mode").get<std::string>();
    parse_mode(doc.mode);
    doc.height = j.at("height").get<int>();
    doc.infinity = j.at("infinity").get<bool>();
    if (j.contains("primes"))
      doc.primes = j.at("primes").get<std::vector<int>>();
    for (const auto &p : j.at("points"))
      doc.points.push_back({p.at("id").get<std::size_t>(), p.at("class").get<std::string>(),
                            p.at("char").get<int>(), level_from_json(p.at("level"))});
    for (const auto &e : j.at("edges")) {
      PosetDocument::Edge edge{e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(),
                               e.at("status").get<std::string>()};
      if (edge.status != "yes" && edge.status != "unknown")
        throw DomainError("edge status must be yes or unknown");
      if (edge.from >= doc.points.size() || edge.to >= doc.points.size())
        throw DomainError("edge endpoint out of range");
      doc.edges.push_back(std::move(edge));
    }
    return doc;
  } catch (const json::exception &e) {
    throw DomainError(std::string("malformed poset JSON: ") + e.what());
  }
}

std::string poset_to_dot(const SpectrumPoset &poset, const std::string &group)
{
  const SubgroupLattice &lat = poset.lattice();
  std::ostringstream os;
  os << "digraph spectrum {\n";
  os << "  label=\"" << group << " (" << to_string(poset.mode()) << ")\";\n";
  os << "  rankdir=BT;\n  node [shape=point];\n";
  for (ClassId c = 0; c < lat.class_count(); ++c) {
    os << "  subgraph cluster_" << c << " {\n";
    os << "    label=\"" << lat.cls(c).name << "\";\n";
    for (std::size_t i = 0; i < poset.size(); ++i) {
      const TTPrime &p = poset.points()[i];
      if (p.cls != c)
        continue;
      os << "    n" << i << " [xlabel=\"" << p.characteristic << "," << p.level.to_string()
         << "\"];\n";
    }
    os << "  }\n";
  }
  // Level grows upward: draw from the containing prime to the contained one.
  for (const PosetEdge &e : poset.edges()) {
    os << "  n" << e.to << " -> n" << e.from;
    if (e.status == Verdict::unknown)
      os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------

json function_to_json(const AdmissibleFunction &f)
{
  json j = json::object();
  const SubgroupLattice &lat = f.lattice();
  for (ClassId c = 0; c < lat.class_count(); ++c)
    for (int p : f.primes())
      j[lat.cls(c).name + ":" + std::to_string(p)] = level_to_json(f.get(c, p));
  return j;
}

AdmissibleFunction function_from_json(const json &j, std::shared_ptr<const SubgroupLattice> lattice)
{
  if (!j.is_object())
    throw DomainError("admissible function must be a JSON object");
  std::set<int> primes;
  std::map<std::pair<ClassId, int>, ExtNat> values;
  for (const auto &[key, value] : j.items()) {
    const auto colon = key.rfind(':');
    if (colon == std::string::npos)
      throw DomainError("key '" + key + "' is not of the form class:prime");
    const auto cls = lattice->find_class(key.substr(0, colon));
    if (!cls)
      throw DomainError("unknown class '" + key.substr(0, colon) + "'");
    int p = 0;
    try {
      p = std::stoi(key.substr(colon + 1));
    } catch (const std::exception &) {
      throw DomainError("bad prime in key '" + key + "'");
    }
    if (!is_prime(p))
      throw DomainError("bad prime in key '" + key + "'");
    primes.insert(p);
    values[{*cls, p}] = level_from_json(value);
  }
  if (primes.empty())
    throw DomainError("admissible function is empty");
  AdmissibleFunction f(lattice, std::vector<int>(primes.begin(), primes.end()));
  for (ClassId c = 0; c < lattice->class_count(); ++c)
    for (int p : primes) {
      auto it = values.find({c, p});
      if (it == values.end())
        throw DomainError("function is partial: missing " + lattice->cls(c).name + ":" +
                          std::to_string(p));
      f.set(c, p, it->second);
    }
  return f;
}

} // namespace ttspec
