#include "lnz/lnz.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lnz/analysis.hpp"
#include "lnz/catalog.hpp"
#include "lnz/document.hpp"
#include "lnz/error.hpp"
#include "lnz/transform.hpp"
#include "lnz/verify.hpp"

struct lnz_algebra {
  lnz::StructureTensor tensor;
};

struct lnz_change {
  lnz::BasisChange change;
};

namespace {

thread_local std::string last_error;
thread_local int last_line = 0;
thread_local int last_column = 0;

lnz_status status_of(lnz::ErrorCode c) {
  using lnz::ErrorCode;
  switch (c) {
    case ErrorCode::DimensionMismatch: return LNZ_E_DIMENSION_MISMATCH;
    case ErrorCode::NotNilpotent: return LNZ_E_NOT_NILPOTENT;
    case ErrorCode::NonNilpotent: return LNZ_E_NON_NILPOTENT;
    case ErrorCode::SyntaxError: return LNZ_E_SYNTAX;
    case ErrorCode::IndexError: return LNZ_E_INDEX;
    case ErrorCode::DuplicateEntry: return LNZ_E_DUPLICATE_ENTRY;
    case ErrorCode::IndexOutOfRange: return LNZ_E_INDEX_OUT_OF_RANGE;
    case ErrorCode::ElementInDerivedSubalgebra: return LNZ_E_ELEMENT_IN_DERIVED;
    case ErrorCode::DimensionTooSmall: return LNZ_E_DIMENSION_TOO_SMALL;
    case ErrorCode::ParityViolation: return LNZ_E_PARITY;
    case ErrorCode::InadmissibleParams: return LNZ_E_INADMISSIBLE_PARAMS;
    case ErrorCode::UnknownFamily: return LNZ_E_UNKNOWN_FAMILY;
    case ErrorCode::SingularChange: return LNZ_E_SINGULAR_CHANGE;
    case ErrorCode::RestrictionViolated: return LNZ_E_RESTRICTION_VIOLATED;
    case ErrorCode::EpsilonMismatch: return LNZ_E_EPSILON_MISMATCH;
    case ErrorCode::DivisionByZero: return LNZ_E_DIVISION_BY_ZERO;
    case ErrorCode::InvalidArgument: return LNZ_E_INVALID_ARGUMENT;
    case ErrorCode::NotInCatalogForm: return LNZ_E_NOT_IN_CATALOG_FORM;
  }
  return LNZ_E_INTERNAL;
}

lnz_status fail(lnz_status s, std::string message, int line = 0, int column = 0) {
  last_error = std::move(message);
  last_line = line;
  last_column = column;
  return s;
}

template <class F>
lnz_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    last_line = last_column = 0;
    return LNZ_OK;
  } catch (const lnz::Error& e) {
    return fail(status_of(e.code()), e.what(), e.line(), e.column());
  } catch (const std::bad_alloc&) {
    return fail(LNZ_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LNZ_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw lnz::Error(lnz::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

std::vector<lnz::Rational> fractions(const char* const* xs, std::size_t count) {
  std::vector<lnz::Rational> out;
  for (std::size_t i = 0; i < count; ++i) {
    need(xs[i], "parameter");
    out.push_back(lnz::Rational::parse(xs[i]));
  }
  return out;
}

nlohmann::json vec_json(const lnz::Vec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : v.coords()) out.push_back(c.str());
  return out;
}

lnz::SecondTypeParams second_params(int epsilon, const std::vector<lnz::Rational>& v, const char* which) {
  if (v.size() != 4 && v.size() != 5)
    throw lnz::Error(lnz::ErrorCode::InvalidArgument, std::string(which) + " needs 4 or 5 values");
  return {epsilon, v[0], v[1], v[2], v[3], v.size() == 5 ? v[4] : lnz::Rational(-1), ""};
}

}  // namespace

extern "C" {

const char* lnz_last_error(void) { return last_error.c_str(); }

void lnz_last_error_position(int* line, int* column) {
  if (line) *line = last_line;
  if (column) *column = last_column;
}

const char* lnz_status_name(lnz_status status) {
  static const char* const names[] = {"ok",
                                      "DimensionMismatch",
                                      "NotNilpotent",
                                      "NonNilpotent",
                                      "SyntaxError",
                                      "IndexError",
                                      "DuplicateEntry",
                                      "IndexOutOfRange",
                                      "ElementInDerivedSubalgebra",
                                      "DimensionTooSmall",
                                      "ParityViolation",
                                      "InadmissibleParams",
                                      "UnknownFamily",
                                      "SingularChange",
                                      "RestrictionViolated",
                                      "EpsilonMismatch",
                                      "DivisionByZero",
                                      "InvalidArgument",
                                      "NotInCatalogForm",
                                      "Internal"};
  const auto i = static_cast<std::size_t>(status);
  return i < sizeof(names) / sizeof(names[0]) ? names[i] : "Unknown";
}

void lnz_string_free(char* s) { std::free(s); }

lnz_status lnz_algebra_parse(const char* text, lnz_algebra** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new lnz_algebra{lnz::parse_algebra(text)};
  });
}

void lnz_algebra_free(lnz_algebra* a) { delete a; }

lnz_status lnz_algebra_serialize(const lnz_algebra* a, char** out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    *out = dup(lnz::serialize_algebra(a->tensor));
  });
}

lnz_status lnz_algebra_dim(const lnz_algebra* a, size_t* out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    *out = a->tensor.dim();
  });
}

lnz_status lnz_check(const lnz_algebra* a, size_t* violations, char** listing) {
  return guarded([&] {
    need(a, "algebra");
    const lnz::Residual r = lnz::leibniz_residual(a->tensor);
    if (violations) *violations = r.size();
    if (listing) {
      std::string text;
      for (const auto& t : r) {
        text += "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + ") [";
        for (std::size_t k = 0; k < t.value.dim(); ++k) text += (k ? " " : "") + t.value[k].str();
        text += "]\n";
      }
      *listing = dup(text);
    }
  });
}

lnz_status lnz_analyze(const lnz_algebra* a, size_t budget, uint64_t seed, char** json) {
  return guarded([&] {
    need(a, "algebra");
    need(json, "out");
    const auto& t = a->tensor;
    nlohmann::json doc;
    const lnz::CentralSeries s = lnz::lower_central_series(t);
    doc["dim"] = t.dim();
    doc["nilpotent"] = s.nilpotent;
    doc["central_series_dims"] = s.dims();
    if (s.nilpotent) {
      doc["nilindex"] = s.terms.size();
      doc["gradation_dims"] = lnz::natural_gradation(t).dims;
      const lnz::CharSequenceEstimate est = lnz::char_sequence_estimate(t, budget, seed);
      doc["char_sequence_estimate"] = {{"value", est.value.parts},
                                       {"lower_bound", true},
                                       {"witness", vec_json(est.witness)},
                                       {"budget", budget},
                                       {"seed", seed},
                                       {"evaluated", est.evaluated}};
    } else {
      doc["nilindex"] = nullptr;
      doc["gradation_dims"] = nullptr;
      doc["char_sequence_estimate"] = nullptr;
    }
    nlohmann::json ann = nlohmann::json::array();
    for (const auto& v : lnz::right_annihilator(t)) ann.push_back(vec_json(v));
    doc["right_annihilator"] = ann;
    *json = dup(doc.dump(2) + "\n");
  });
}

lnz_status lnz_catalog_build(int type, const char* family, size_t n, const char* const* params, size_t count,
                             int epsilon, const char* beta, lnz_algebra** out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    if (count) need(params, "params");
    const std::vector<lnz::Rational> v = fractions(params, count);
    if (type == 2) {
      if (v.size() != 4) throw lnz::Error(lnz::ErrorCode::InvalidArgument, "second type takes alpha1..alpha4");
      lnz::SecondTypeParams p{epsilon, v[0], v[1], v[2], v[3], -1, family};
      if (beta) {
        p.beta = lnz::Rational::parse(beta);
      } else {
        for (const auto& row : lnz::catalog_rows())
          if (row.type == 2 && row.label == family) p.beta = row.beta;
      }
      *out = new lnz_algebra{lnz::build_second_type(n, p, true)};
    } else if (type == 1) {
      if (v.size() != 3) throw lnz::Error(lnz::ErrorCode::InvalidArgument, "first type takes three slots");
      int id = 0;
      try {
        id = std::stoi(family);
      } catch (const std::exception&) {
        throw lnz::Error(lnz::ErrorCode::UnknownFamily, std::string("unknown first-type family ") + family);
      }
      if (std::to_string(id) != family)
        throw lnz::Error(lnz::ErrorCode::UnknownFamily, std::string("unknown first-type family ") + family);
      *out = new lnz_algebra{lnz::build_first_type(n, lnz::FirstTypeParams{id, v[0], v[1], v[2]})};
    } else {
      throw lnz::Error(lnz::ErrorCode::InvalidArgument, "type must be 1 or 2");
    }
  });
}

lnz_status lnz_catalog_index(char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(lnz::serialize_catalog_index());
  });
}

lnz_status lnz_change_parse(const char* text, lnz_change** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new lnz_change{lnz::BasisChange{lnz::parse_change(text)}};
  });
}

void lnz_change_free(lnz_change* c) { delete c; }

lnz_status lnz_transform(const lnz_algebra* a, const lnz_change* c, lnz_algebra** out) {
  return guarded([&] {
    need(a, "algebra");
    need(c, "change");
    need(out, "out");
    *out = new lnz_algebra{lnz::apply_change(a->tensor, c->change)};
  });
}

lnz_status lnz_equiv(int epsilon, size_t n, const char* const* p, size_t p_count, const char* const* q,
                     size_t q_count, unsigned budget, lnz_verdict* verdict, char** detail) {
  return guarded([&] {
    need(p, "p");
    need(q, "q");
    need(verdict, "verdict");
    const lnz::SecondTypeParams pp = second_params(epsilon, fractions(p, p_count), "p");
    const lnz::SecondTypeParams qq = second_params(epsilon, fractions(q, q_count), "q");
    const lnz::EquivalenceResult r = lnz::decide_equivalence(pp, qq, budget);
    std::string text = lnz::to_string(r.verdict);
    if (r.verdict == lnz::EquivalenceResult::Verdict::Equivalent) {
      const auto& g = *r.witness;
      lnz::StructureTensor a = lnz::build_second_type(n, pp, false);
      lnz::StructureTensor moved = lnz::apply_change(a, lnz::completed_basis(a, g, epsilon));
      if (!(lnz::extract_second_type(moved, epsilon) == qq))
        throw std::logic_error("witness failed verification");
      text += "\nwitness (A1,A4,B4) = (" + g.a1.str() + "," + g.a4.str() + "," + g.b4.str() + ")";
      text += "\nstage " + r.stage + "; verified by transporting the n = " + std::to_string(n) + " algebra";
    } else if (r.verdict == lnz::EquivalenceResult::Verdict::Distinct) {
      text += "\ninvariant " + r.invariant;
    } else {
      text += "\nno rational witness of height <= " + std::to_string(budget) + " and none from elimination";
    }
    *verdict = static_cast<lnz_verdict>(r.verdict == lnz::EquivalenceResult::Verdict::Equivalent ? LNZ_EQUIVALENT
                                        : r.verdict == lnz::EquivalenceResult::Verdict::Distinct ? LNZ_DISTINCT
                                                                                                   : LNZ_UNKNOWN);
    if (detail) *detail = dup(text + "\n");
  });
}

lnz_status lnz_verify_all(const size_t* dims, size_t dim_count, const char* const* samples, size_t sample_count,
                          size_t budget, uint64_t seed, int* all_pass, char** text, char** json) {
  return guarded([&] {
    lnz::VerifyConfig cfg;
    if (dim_count) {
      need(dims, "dims");
      cfg.dims.assign(dims, dims + dim_count);
    }
    if (sample_count) cfg.samples = fractions(samples, sample_count);
    cfg.char_budget = budget;
    cfg.seed = seed;
    const lnz::Report report = lnz::verify_all(cfg);
    if (all_pass) *all_pass = report.passed() ? 1 : 0;
    if (text) *text = dup(report.text());
    if (json) *json = dup(report.json());
  });
}

}  // extern "C"
