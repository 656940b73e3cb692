// Command-line front end. Talks to the library only through lnz.h.
#include <lnz/lnz.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kUsage = 64;
constexpr int kBadDocument = 65;

struct Owned {
  char* p = nullptr;
  ~Owned() { lnz_string_free(p); }
};

using Algebra = std::unique_ptr<lnz_algebra, decltype(&lnz_algebra_free)>;

Algebra hold(lnz_algebra* a) { return Algebra(a, &lnz_algebra_free); }

struct Failure {
  int exit_code;
};

void diagnose(lnz_status s) {
  int line = 0, col = 0;
  lnz_last_error_position(&line, &col);
  std::cerr << "lnz: " << lnz_status_name(s) << ": " << lnz_last_error();
  if (line > 0) std::cerr << " (line " << line << ", column " << col << ")";
  std::cerr << "\n";
}

// Document errors are 65; anything else the caller did not anticipate is 1.
int document_exit(lnz_status s) {
  switch (s) {
    case LNZ_E_SYNTAX:
    case LNZ_E_INDEX:
    case LNZ_E_DUPLICATE_ENTRY:
    case LNZ_E_DIVISION_BY_ZERO:
    case LNZ_E_DIMENSION_MISMATCH:
      return kBadDocument;
    default:
      return 1;
  }
}

void expect(lnz_status s, int (*exit_of)(lnz_status) = document_exit) {
  if (s == LNZ_OK) return;
  diagnose(s);
  throw Failure{exit_of(s)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "lnz: cannot read " << path << "\n";
    throw Failure{66};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!(out << text)) {
    std::cerr << "lnz: cannot write " << path << "\n";
    throw Failure{73};
  }
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  if (csv.empty()) return out;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (csv.back() == ',') out.emplace_back();
  return out;
}

std::vector<const char*> c_strs(const std::vector<std::string>& xs) {
  std::vector<const char*> out;
  for (const auto& x : xs) out.push_back(x.c_str());
  return out;
}

Algebra load(const std::string& path) {
  const std::string text = slurp(path);
  lnz_algebra* a = nullptr;
  expect(lnz_algebra_parse(text.c_str(), &a));
  return hold(a);
}

std::uint64_t seed_or_env(std::uint64_t seed) {
  if (const char* env = std::getenv("LNZ_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "lnz: LNZ_SEED is not an unsigned integer\n";
    throw Failure{kUsage};
  }
  return seed;
}

int run_check(const std::string& file) {
  Algebra a = load(file);
  std::size_t count = 0;
  Owned listing;
  expect(lnz_check(a.get(), &count, &listing.p));
  if (count == 0) {
    std::cout << "Leibniz identity holds\n";
    return 0;
  }
  std::cout << count << " violating triple(s)\n" << listing.p;
  return 1;
}

int run_analyze(const std::string& file, std::size_t budget, std::uint64_t seed) {
  Algebra a = load(file);
  Owned json;
  expect(lnz_analyze(a.get(), budget, seed_or_env(seed), &json.p));
  std::cout << json.p;
  return 0;
}

int catalog_exit(lnz_status s) {
  switch (s) {
    case LNZ_E_INADMISSIBLE_PARAMS:
    case LNZ_E_PARITY:
    case LNZ_E_DIMENSION_TOO_SMALL:
      return 2;
    case LNZ_E_UNKNOWN_FAMILY:
    case LNZ_E_SYNTAX:
    case LNZ_E_DIVISION_BY_ZERO:
    case LNZ_E_INVALID_ARGUMENT:
      return kUsage;
    default:
      return 1;
  }
}

struct CatalogArgs {
  int type = 0;
  std::string family;
  std::size_t dim = 0;
  std::string params;
  int epsilon = 0;
  std::string beta;
  std::string out;
  bool index = false;
};

int run_catalog(const CatalogArgs& c) {
  if (c.index) {
    Owned idx;
    expect(lnz_catalog_index(&idx.p));
    emit(std::string(idx.p) + "\n", c.out);
    return 0;
  }
  if (c.type == 0 || c.family.empty() || c.dim == 0) {
    std::cerr << "lnz: catalog needs --type, --family and --dim (or --index)\n";
    return kUsage;
  }
  const auto params = split_csv(c.params);
  const auto ptrs = c_strs(params);
  lnz_algebra* a = nullptr;
  expect(lnz_catalog_build(c.type, c.family.c_str(), c.dim, ptrs.data(), ptrs.size(), c.epsilon,
                           c.beta.empty() ? nullptr : c.beta.c_str(), &a),
         catalog_exit);
  Algebra held = hold(a);
  Owned text;
  expect(lnz_algebra_serialize(held.get(), &text.p));
  emit(text.p, c.out);
  return 0;
}

int run_transform(const std::string& file, const std::string& change_file, const std::string& out) {
  Algebra a = load(file);
  const std::string text = slurp(change_file);
  lnz_change* raw = nullptr;
  expect(lnz_change_parse(text.c_str(), &raw));
  std::unique_ptr<lnz_change, decltype(&lnz_change_free)> change(raw, &lnz_change_free);
  lnz_algebra* moved = nullptr;
  expect(lnz_transform(a.get(), change.get(), &moved), [](lnz_status s) {
    return s == LNZ_E_SINGULAR_CHANGE || s == LNZ_E_DIMENSION_MISMATCH ? kBadDocument : 1;
  });
  Algebra held = hold(moved);
  Owned serialized;
  expect(lnz_algebra_serialize(held.get(), &serialized.p));
  emit(serialized.p, out);
  return 0;
}

int run_equiv(int epsilon, std::size_t dim, const std::string& p, const std::string& q, unsigned budget) {
  const auto ps = split_csv(p), qs = split_csv(q);
  const auto pp = c_strs(ps), qp = c_strs(qs);
  lnz_verdict verdict = LNZ_UNKNOWN;
  Owned detail;
  expect(lnz_equiv(epsilon, dim, pp.data(), pp.size(), qp.data(), qp.size(), budget, &verdict, &detail.p),
         [](lnz_status s) { return s == LNZ_E_INTERNAL ? 1 : kUsage; });
  std::cout << detail.p;
  return static_cast<int>(verdict);
}

int run_verify(const std::string& dims_csv, const std::string& samples_csv, std::size_t budget,
               std::uint64_t seed, const std::string& report) {
  std::vector<std::size_t> dims;
  for (const auto& d : split_csv(dims_csv)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(d, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != d.size()) {
      std::cerr << "lnz: bad dimension '" << d << "'\n";
      return kUsage;
    }
    dims.push_back(v);
  }
  const auto samples = split_csv(samples_csv);
  const auto sp = c_strs(samples);
  int all = 0;
  Owned text, json;
  expect(lnz_verify_all(dims.data(), dims.size(), sp.data(), sp.size(), budget, seed_or_env(seed), &all, &text.p,
                        &json.p),
         [](lnz_status s) { return s == LNZ_E_INTERNAL ? 1 : kUsage; });
  std::cout << text.p;
  if (!report.empty()) emit(std::string(json.p) + "\n", report);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leibniz algebra toolkit for the (n-3,3) classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lnz 0.1.0");

  std::string file, change_file, out;
  std::size_t budget = 200;
  std::uint64_t seed = 20240601;

  auto* check = app.add_subcommand("check", "Leibniz residual of an algebra document");
  check->add_option("FILE", file)->required();

  auto* analyze = app.add_subcommand("analyze", "structural invariants as JSON");
  analyze->add_option("FILE", file)->required();
  analyze->add_option("--budget", budget, "char-sequence search budget");
  analyze->add_option("--seed", seed);

  CatalogArgs cat;
  auto* catalog = app.add_subcommand("catalog", "build a catalog algebra");
  catalog->add_option("--type", cat.type)->check(CLI::IsMember({1, 2}));
  catalog->add_option("--family", cat.family, "row label, e.g. 0.4 or 36");
  catalog->add_option("--dim", cat.dim);
  catalog->add_option("--params", cat.params, "comma-separated fractions");
  catalog->add_option("--epsilon", cat.epsilon)->check(CLI::IsMember({0, 1}));
  catalog->add_option("--beta", cat.beta)->check(CLI::IsMember({"0", "-1"}));
  catalog->add_option("-o", cat.out);
  catalog->add_flag("--index", cat.index, "print the catalog index instead");

  auto* transform = app.add_subcommand("transform", "apply a basis change");
  transform->add_option("FILE", file)->required();
  transform->add_option("--change", change_file)->required();
  transform->add_option("-o", out);

  int epsilon = 0;
  std::size_t dim = 0;
  std::string p, q;
  unsigned equiv_budget = 6;
  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two second-type parameter points");
  equiv->add_option("--epsilon", epsilon)->required()->check(CLI::IsMember({0, 1}));
  equiv->add_option("--dim", dim)->required();
  equiv->add_option("--p", p)->required();
  equiv->add_option("--q", q)->required();
  equiv->add_option("--budget", equiv_budget, "rational height bound for the witness search");

  std::string dims_csv = "9,10", samples_csv, report;
  auto* verify = app.add_subcommand("verify-all", "run every acceptance criterion");
  verify->add_option("--dims", dims_csv);
  verify->add_option("--samples", samples_csv);
  verify->add_option("--budget", budget);
  verify->add_option("--seed", seed);
  verify->add_option("--report", report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return run_check(file);
    if (*analyze) return run_analyze(file, budget, seed);
    if (*catalog) return run_catalog(cat);
    if (*transform) return run_transform(file, change_file, out);
    if (*equiv) return run_equiv(epsilon, dim, p, q, equiv_budget);
    if (*verify) return run_verify(dims_csv, samples_csv, budget, seed, report);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kUsage;
}
