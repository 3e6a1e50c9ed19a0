// perscert: command-line front end. Every subcommand reads and writes the
// JSON documents defined in perscert/io.hpp.
//
// Exit codes: 0 ok, 1 property violated (a report is still printed),
// 2 schema error, 3 search budget exceeded, 4 precondition error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "perscert/io.hpp"
#include "perscert/random.hpp"

using namespace perscert;
using io::json;

namespace {

enum Exit { kOk = 0, kViolated = 1, kSchema = 2, kBudget = 3, kPrecondition = 4 };

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

struct Output {
  std::string path = "-";
  void write(const json& j) const {
    const std::string text = j.dump(2) + "\n";
    if (path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
  }
};

// Accepts a filtered complex (converted by sublevel sets) or a persistent
// Complex object.
PersistentObject<Complex> complex_input(const json& j) {
  const std::string format = j.value("format", "");
  if (format == io::kFilteredFormat) return to_persistent(io::filtered_from_json(j));
  return io::object_from_json<Complex>(j);
}

// Calls body<C>() for the category named in the document.
template <class Body>
int by_category(const json& j, Body&& body, bool enumerable_only = false) {
  const std::string c = io::category_of(j);
  if (c == FinSet::kName) return body.template operator()<FinSet>();
  if (c == F2Vec::kName) return body.template operator()<F2Vec>();
  if (c == Complex::kName && !enumerable_only) return body.template operator()<Complex>();
  throw UnsupportedError("category " + c + " is not supported by this command");
}

Grade parse_grade(const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) coords.push_back(Rational::parse(part));
  if (coords.empty()) throw SchemaError("empty grade");
  return Grade(std::move(coords));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified interleavings, filtrations and persistence invariants"};
  app.require_subcommand(1);
  Output out;
  app.add_option("-o,--output", out.path, "Output file (default: standard output)");

  std::string in1, in2;
  int max_dim = 2;  // rips builders
  int degree = 0;   // homology degree
  std::size_t line_axis = 0;
  std::string line_base;  // multiparameter input: restrict to the line through this grade
  std::string delta_text = "1";
  SearchBudget budget;
  std::uint64_t seed = 0;
  std::int64_t block = 1;
  std::string category = "FinSet";
  std::string window = "-4:4";
  std::size_t max_size = 3;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-enum", budget.max_enum, "Largest hom-set enumerated per component")->capture_default_str();
    sub->add_option("--max-nodes", budget.max_nodes, "Backtracking node budget per search")->capture_default_str();
  };

  std::function<int()> run;
  auto cmd = [&](const char* name, const char* help, std::function<int()> body) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&run, body] { run = body; });
    return sub;
  };

  auto* rips = cmd("rips", "distance matrix -> Vietoris-Rips filtered complex", [&] {
    out.write(io::to_json(vietoris_rips(io::metric_from_json(read_json(in1)), max_dim)));
    return kOk;
  });
  rips->add_option("metric", in1)->required();
  rips->add_option("--dim", max_dim, "Largest simplex dimension")->capture_default_str();

  auto* frips = cmd("frips", "matrix + function -> function-Rips bifiltration", [&] {
    out.write(io::to_json(function_rips(io::metric_from_json(read_json(in1)), max_dim)));
    return kOk;
  });
  frips->add_option("metric", in1)->required();
  frips->add_option("--dim", max_dim, "Largest simplex dimension")->capture_default_str();

  auto* drips = cmd("degree-rips", "matrix -> degree-Rips persistent complex", [&] {
    out.write(io::to_json(degree_rips(io::metric_from_json(read_json(in1)), max_dim)));
    return kOk;
  });
  drips->add_option("metric", in1)->required();
  drips->add_option("--dim", max_dim, "Largest simplex dimension")->capture_default_str();

  auto* val = cmd("validate", "check face closure and monotone grades", [&] {
    const auto r = validate(io::filtered_from_json(read_json(in1)));
    out.write(io::to_json(r));
    return r.valid ? kOk : kViolated;
  });
  val->add_option("filtered", in1)->required();

  auto* isf = cmd("is-filtered", "decide whether a persistent complex is filtered", [&] {
    const auto r = is_filtered(complex_input(read_json(in1)));
    out.write(io::to_json(r));
    return r.filtered ? kOk : kViolated;
  });
  isf->add_option("input", in1)->required();

  auto* skel = cmd("skeleton", "n-skeleton of a filtered complex", [&] {
    out.write(io::to_json(skeleton(io::filtered_from_json(read_json(in1)), max_dim)));
    return kOk;
  });
  skel->add_option("filtered", in1)->required();
  skel->add_option("--n,--dim", max_dim)->required();

  auto* p0 = cmd("pi0", "persistent set of connected components", [&] {
    out.write(io::to_json(pi0(complex_input(read_json(in1)))));
    return kOk;
  });
  p0->add_option("input", in1)->required();

  // One-parameter complexes pass through; others are restricted to the
  // axis-parallel line given by --axis/--base.
  auto sliced = [&](PersistentObject<Complex> x) {
    if (line_base.empty()) return x;
    return restrict_to_line(x, line_axis, parse_grade(line_base));
  };
  auto line_options = [&](CLI::App* c) {
    c->add_option("--axis", line_axis, "Axis of the line for multiparameter input")->capture_default_str();
    c->add_option("--base", line_base, "Grade on the line, comma-separated");
  };

  auto* hom = cmd("homology", "H_n over F2 of a one-parameter complex", [&] {
    out.write(io::to_json(homology(sliced(complex_input(read_json(in1))), degree)));
    return kOk;
  });
  hom->add_option("input", in1)->required();
  hom->add_option("--dim", degree, "Homology degree")->capture_default_str();
  line_options(hom);

  auto* bar = cmd("barcode", "barcode of a module, or of H_n of a complex", [&] {
    const json j = read_json(in1);
    const bool is_module = j.value("format", "") == io::kObjectFormat && io::category_of(j) == F2Vec::kName;
    const auto module = is_module ? io::object_from_json<F2Vec>(j) : homology(sliced(complex_input(j)), degree);
    out.write(io::to_json(barcode(module)));
    return kOk;
  });
  bar->add_option("input", in1)->required();
  bar->add_option("--dim", degree, "Homology degree")->capture_default_str();
  line_options(bar);

  auto* bn = cmd("bottleneck", "bottleneck distance with an optimal matching", [&] {
    const auto a = io::barcode_from_json(read_json(in1));
    const auto b = io::barcode_from_json(read_json(in2));
    const auto r = bottleneck(a, b);
    out.write(io::to_json(r.matching, a, b, r.value));
    return kOk;
  });
  bn->add_option("a", in1)->required();
  bn->add_option("b", in2)->required();

  auto* ic = cmd("interleave-check", "verify an interleaving certificate", [&] {
    const json j = read_json(in1);
    return by_category(j, [&]<class C>() {
      const auto r = check_interleaving(io::cert_from_json<C>(j));
      out.write(io::to_json(r));
      return r.valid ? kOk : kViolated;
    });
  });
  ic->add_option("certificate", in1)->required();

  auto* id = cmd("interleave-dist", "least certified interleaving shift (one parameter)", [&] {
    const json jx = read_json(in1);
    const json jy = read_json(in2);
    return by_category(
        jx,
        [&]<class C>() {
          if constexpr (Enumerable<C>) {
            const auto r = interleaving_distance_search(io::object_from_json<C>(jx), io::object_from_json<C>(jy), budget);
            json j = {{"format", io::kReportFormat},
                      {"distance", io::to_json(r.value)},
                      {"attained", r.attained},
                      {"reason", r.reason}};
            j["certified_shift"] = r.certified_shift ? io::to_json(*r.certified_shift) : json(nullptr);
            j["certificate"] = r.certificate ? io::to_json(*r.certificate) : json(nullptr);
            out.write(j);
            return kOk;
          } else {
            throw UnsupportedError("interleaving distance needs FinSet or F2Vec");
            return kPrecondition;
          }
        },
        true);
  });
  id->add_option("x", in1)->required();
  id->add_option("y", in2)->required();
  add_budget(id);

  auto* rect = cmd("rectify", "zig-zag rectification of an (m,m)-interleaving of Z-indexed objects", [&] {
    const json j = read_json(in1);
    return by_category(j, [&]<class C>() {
      const auto z = zigzag(io::cert_from_json<C>(j));
      json doc = io::to_json(z);
      doc["composite_check"] = io::to_json(check_interleaving(z.composite));
      out.write(doc);
      return z.even_witness && z.odd_witness && check_interleaving(z.composite).valid ? kOk : kViolated;
    });
  });
  rect->add_option("certificate", in1)->required();

  auto* rt = cmd("roundtrip-floor", "1-interleaving of X with the floor extension of its integer restriction", [&] {
    const json j = read_json(in1);
    return by_category(j, [&]<class C>() {
      out.write(io::to_json(floor_roundtrip_certificate(io::object_from_json<C>(j))));
      return kOk;
    });
  });
  rt->add_option("object", in1)->required();

  auto* sa = cmd("stability-audit", "d_B of H_n barcodes against the shift of a complex interleaving", [&] {
    const auto r = stability_audit(io::cert_from_json<Complex>(read_json(in1)), degree);
    out.write({{"format", io::kReportFormat},
               {"degree", r.degree},
               {"module_certificate", io::to_json(r.module_check)},
               {"barcode_X", io::to_json(r.bx)},
               {"barcode_Y", io::to_json(r.by)},
               {"bottleneck", io::to_json(r.bottleneck_distance)},
               {"delta", io::to_json(r.delta)},
               {"holds", r.holds}});
    return r.holds ? kOk : kViolated;
  });
  sa->add_option("certificate", in1)->required();
  sa->add_option("--dim", degree, "Homology degree")->capture_default_str();

  auto* sq = cmd("sq-gadget", "two-parameter gadget from a commuting square", [&] {
    out.write(io::to_json(sq_gadget(io::square_from_json(read_json(in1)))));
    return kOk;
  });
  sq->add_option("square", in1)->required();

  auto* si = cmd("self-interleave", "the (delta, delta) self-interleaving by structure maps", [&]() -> int {
    const json j = read_json(in1);
    const Grade delta = parse_grade(delta_text);
    if (j.value("format", "") == io::kFilteredFormat) {
      out.write(io::to_json(self_interleaving(complex_input(j), delta)));
      return kOk;
    }
    return by_category(j, [&]<class C>() {
      out.write(io::to_json(self_interleaving(io::object_from_json<C>(j), delta)));
      return kOk;
    });
  });
  si->add_option("object", in1)->required();
  si->add_option("--delta", delta_text, "Shift, comma-separated for m > 1")->capture_default_str();

  auto* rp = cmd("random-pair", "seeded random (m,m)-interleaved pair of Z-indexed objects", [&] {
    Rng rng(seed);
    RandomShape shape;
    const auto colon = window.find(':');
    if (colon == std::string::npos) throw SchemaError("--window expects lo:hi");
    shape.lo = std::stoll(window.substr(0, colon));
    shape.hi = std::stoll(window.substr(colon + 1));
    shape.max_size = max_size;
    if (shape.hi - shape.lo < 2 * block) throw PreconditionError("--window too small for the block size");
    if (category == "FinSet")
      out.write(io::to_json(random_interleaved_finset(rng, block, shape)));
    else if (category == "F2Vec")
      out.write(io::to_json(random_interleaved_f2vec(rng, block, shape)));
    else
      throw UnsupportedError("random-pair supports FinSet and F2Vec");
    return kOk;
  });
  rp->add_option("--seed", seed)->capture_default_str();
  rp->add_option("--m", block, "Interleaving shift / block size")->capture_default_str();
  rp->add_option("--category", category)->capture_default_str();
  rp->add_option("--window", window, "Integer window lo:hi")->capture_default_str();
  rp->add_option("--max-size", max_size, "Largest set size or dimension")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return run();
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what();
    if (e.best_upper_bound()) std::cerr << " (best certified upper bound " << e.best_upper_bound()->str() << ")";
    std::cerr << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const json::exception& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchema;
  }
}
