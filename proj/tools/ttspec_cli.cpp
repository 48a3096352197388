// ttspec: command-line front end.
//
//   ttspec subgroups     -g SPEC [--json]
//   ttspec marks         -g SPEC [--format csv|json]
//   ttspec burnside-spec -g SPEC [--primes 2,3]
//   ttspec tt-spec       -g SPEC [--primes ..] --height N --mode M [--infinity] [--dot PATH] [--json PATH]
//   ttspec include       -g SPEC "K,q,n" "H,p,m" --mode M
//   ttspec ideals count|list|check -g SPEC [--primes ..] --height N [--mode M] [--function JSON]
//
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ttspec/burnside.hpp"
#include "ttspec/group_spec.hpp"
#include "ttspec/serialize.hpp"
#include "ttspec/tt_ideals.hpp"
#include "ttspec/tt_spectrum.hpp"

using namespace ttspec;

namespace {

struct Options
{
  std::string group;
  std::size_t cap = kDefaultOrderCap;
  std::vector<int> primes;
  int height = 3;
  std::string mode = "conjectural";
  bool infinity = false;
  std::string dot_path;
  std::string json_path;
  bool as_json = false;
  std::string format = "csv";
  std::string sub_prime;
  std::string super_prime;
  std::string ideals_action;
  std::string function;
  bool count_only = false;
};

std::shared_ptr<const SubgroupLattice> load_group(const Options &o)
{
  GroupSpec spec = parse_group_spec(o.group);
  return SubgroupLattice::make(PermGroup::construct(spec.description, o.cap));
}

std::string canonical(const Options &o)
{
  return format_group_spec(parse_group_spec(o.group).description);
}

std::vector<int> primes_or_default(const Options &o, const SubgroupLattice &lat)
{
  if (!o.primes.empty())
    return o.primes;
  std::vector<int> ps = lat.order_primes();
  if (ps.empty())
    throw DomainError("the trivial group has no prime divisors; pass --primes");
  return ps;
}

TTPrime parse_prime_triple(const std::string &text, const SubgroupLattice &lat)
{
  const auto last = text.rfind(',');
  const auto mid = last == std::string::npos ? std::string::npos : text.rfind(',', last - 1);
  if (last == std::string::npos || mid == std::string::npos)
    throw DomainError("expected \"class,char,level\", got '" + text + "'");
  const std::string name = text.substr(0, mid);
  const auto cls = lat.find_class(name);
  if (!cls)
    throw DomainError("unknown class '" + name + "'");
  int p = 0;
  try {
    p = std::stoi(text.substr(mid + 1, last - mid - 1));
  } catch (const std::exception &) {
    throw DomainError("bad characteristic in '" + text + "'");
  }
  return make_prime(lat, *cls, p, parse_ext_nat(text.substr(last + 1)));
}

void write_file(const std::string &path, const std::string &content)
{
  std::ofstream out(path);
  if (!out)
    throw DomainError("cannot write " + path);
  out << content;
}

json read_json_arg(const std::string &arg)
{
  try {
    if (!arg.empty() && arg.front() == '@') {
      std::ifstream in(arg.substr(1));
      if (!in)
        throw DomainError("cannot read " + arg.substr(1));
      return json::parse(in);
    }
    return json::parse(arg);
  } catch (const json::exception &e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

int cmd_subgroups(const Options &o)
{
  auto lat = load_group(o);
  if (o.as_json) {
    json classes = json::array();
    for (const auto &c : lat->classes())
      classes.push_back({{"name", c.name}, {"order", c.order}, {"class_size", c.class_size},
                         {"normalizer_order", c.normalizer_order}});
    std::cout << json{{"group", canonical(o)}, {"order", lat->group().order()}, {"classes", classes}}
                     .dump(2)
              << '\n';
    return 0;
  }
  std::cout << "group " << canonical(o) << " of order " << lat->group().order() << ", "
            << lat->subgroups().size() << " subgroups in " << lat->class_count() << " classes\n";
  for (const auto &c : lat->classes())
    std::cout << c.name << "\torder " << c.order << "\tconjugates " << c.class_size
              << "\tnormalizer " << c.normalizer_order << '\n';
  return 0;
}

int cmd_marks(const Options &o)
{
  auto lat = load_group(o);
  MarksTable marks = table_of_marks(lat);
  if (o.format == "json")
    std::cout << marks_to_json(marks, canonical(o)).dump(2) << '\n';
  else
    std::cout << marks_to_csv(marks);
  return 0;
}

int cmd_burnside(const Options &o)
{
  auto lat = load_group(o);
  BurnsideSpectrum spec = burnside_spectrum(lat, primes_or_default(o, *lat));
  std::cout << burnside_spectrum_to_json(spec, canonical(o)).dump(2) << '\n';
  return 0;
}

int cmd_tt_spec(const Options &o)
{
  auto lat = load_group(o);
  SpectrumPoset poset =
      build_spectrum(lat, primes_or_default(o, *lat), o.height, o.infinity, parse_mode(o.mode));
  const std::string group = canonical(o);
  const std::string doc = to_json(to_document(poset, group)).dump(2) + "\n";
  if (!o.dot_path.empty())
    write_file(o.dot_path, poset_to_dot(poset, group));
  if (!o.json_path.empty())
    write_file(o.json_path, doc);
  else
    std::cout << doc;
  return 0;
}

int cmd_include(const Options &o)
{
  auto lat = load_group(o);
  InclusionOracle oracle(lat);
  TTPrime q = parse_prime_triple(o.sub_prime, *lat);
  TTPrime p = parse_prime_triple(o.super_prime, *lat);
  std::cout << oracle.inclusion(q, p, parse_mode(o.mode)).to_string() << '\n';
  return 0;
}

int cmd_ideals(const Options &o)
{
  auto lat = load_group(o);
  const Mode mode = parse_mode(o.mode);
  const std::vector<int> primes = primes_or_default(o, *lat);

  if (o.ideals_action == "check") {
    if (o.function.empty())
      throw CLI::RequiredError("--function");
    AdmissibleFunction f = function_from_json(read_json_arg(o.function), lat);
    InclusionOracle oracle(lat);
    std::cout << is_admissible(f, mode, oracle).to_string() << '\n';
    return 0;
  }

  SpectrumPoset poset = build_spectrum(lat, primes, o.height, o.infinity, mode);
  if (o.ideals_action == "count" || o.count_only) {
    std::cout << count_admissible(poset) << '\n';
    return 0;
  }
  for_each_admissible(poset, [](const AdmissibleFunction &f) {
    std::cout << function_to_json(f).dump() << '\n';
    return true;
  });
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Spectra of compact equivariant spectra for small finite groups"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App *sub) {
    sub->add_option("-g,--group", o.group, "group spec, e.g. sym:3 or 'cyclic:2 x cyclic:2'")
        ->required();
    sub->add_option("--cap", o.cap, "maximum group order")->capture_default_str();
  };
  auto add_primes = [&](CLI::App *sub) {
    sub->add_option("--primes,--prime", o.primes, "primes (default: divisors of |G|)")
        ->delimiter(',');
  };

  auto *subgroups = app.add_subcommand("subgroups", "list conjugacy classes of subgroups");
  add_group(subgroups);
  subgroups->add_flag("--json", o.as_json, "JSON output");

  auto *marks = app.add_subcommand("marks", "table of marks");
  add_group(marks);
  marks->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto *burnside = app.add_subcommand("burnside-spec", "prime spectrum of the Burnside ring");
  add_group(burnside);
  add_primes(burnside);

  auto *ttspec = app.add_subcommand("tt-spec", "truncated tt-spectrum as a poset");
  add_group(ttspec);
  add_primes(ttspec);
  ttspec->add_option("--height", o.height, "largest finite chromatic level")->required();
  ttspec->add_option("--mode", o.mode, "conjectural or unconditional")
      ->check(CLI::IsMember({"conjectural", "unconditional"}))
      ->capture_default_str();
  ttspec->add_flag("--infinity", o.infinity, "include the infinite level");
  ttspec->add_option("--dot", o.dot_path, "write Graphviz DOT here");
  ttspec->add_option("--json", o.json_path, "write JSON here instead of stdout");

  auto *include = app.add_subcommand("include", "decide P(K,q,n) contained in P(H,p,m)");
  add_group(include);
  include->add_option("sub", o.sub_prime, "\"K,q,n\"")->required();
  include->add_option("super", o.super_prime, "\"H,p,m\"")->required();
  include->add_option("--mode", o.mode, "conjectural or unconditional")
      ->check(CLI::IsMember({"conjectural", "unconditional"}))
      ->capture_default_str();

  auto *ideals = app.add_subcommand("ideals", "tt-ideals via admissible functions");
  ideals->add_option("action", o.ideals_action, "count, list or check")
      ->required()
      ->check(CLI::IsMember({"count", "list", "check"}));
  add_group(ideals);
  add_primes(ideals);
  ideals->add_option("--height", o.height, "largest finite chromatic level")->capture_default_str();
  ideals->add_option("--mode", o.mode, "conjectural or unconditional")
      ->check(CLI::IsMember({"conjectural", "unconditional"}))
      ->capture_default_str();
  ideals->add_flag("--infinity", o.infinity, "include the infinite level");
  ideals->add_option("--function", o.function, "JSON object, or @file");
  ideals->add_flag("--count-only", o.count_only, "with list: print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*subgroups)
      return cmd_subgroups(o);
    if (*marks)
      return cmd_marks(o);
    if (*burnside)
      return cmd_burnside(o);
    if (*ttspec)
      return cmd_tt_spec(o);
    if (*include)
      return cmd_include(o);
    if (*ideals)
      return cmd_ideals(o);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
