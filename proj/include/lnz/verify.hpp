#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lnz/catalog.hpp"
#include "lnz/rational.hpp"

namespace lnz {

struct VerifyConfig {
  std::vector<std::size_t> dims{9, 10};
  std::vector<Rational> samples{0, 1, -1, 2, Rational(1, 2)};
  std::size_t char_budget = 200;
  std::uint64_t seed = 20240601;
  std::size_t transform_trials = 100;
  unsigned equiv_budget = 6;
};

enum class Status { Pass, Fail, Flagged };
const char* to_string(Status s) noexcept;

struct ReportRecord {
  int criterion = 0;  // 0: open-question records
  std::string check;
  std::string subject;
  Status status = Status::Pass;
  std::string detail;
};

struct Report {
  std::vector<ReportRecord> records;

  void add(int criterion, std::string check, std::string subject, Status status, std::string detail);
  std::size_t count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }
  bool criterion_passed(int criterion) const;
  std::string text() const;
  std::string json() const;
};

/// The instance set the criteria run over: the whole catalog at cfg.dims.
std::vector<CatalogInstance> verification_instances(const VerifyConfig& cfg);

/// Appends the records of one criterion (1..10, or 0 for the open-question
/// records).
void run_criterion(int criterion, const VerifyConfig& cfg, const std::vector<CatalogInstance>& instances,
                   Report& report);

/// Every criterion in order. Throws InvalidArgument when some dim is < 9.
Report verify_all(const VerifyConfig& cfg);

}  // namespace lnz
