#pragma once

#include "dk/integer.hpp"

#include <string>
#include <vector>

namespace dk {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

/// One disagreeing entry: at `level`, the basis element `label` has value
/// `left` on one side of the identity and `right` on the other.
struct Witness {
  int level = 0;
  std::string label;
  std::string left;
  std::string right;
};

/// Auxiliary output of a check, e.g. a serialized homotopy.
struct Artifact {
  std::string name;
  std::string text;
};

/// Structured outcome of a check. Failures always carry at least one witness;
/// passes carry none.
struct VerificationReport {
  std::string check_name;
  std::vector<std::string> objects;
  int max_level = 0;
  Status status = Status::Pass;
  std::string skip_reason;
  std::vector<Witness> witnesses;
  std::size_t mismatch_count = 0;  // may exceed witnesses.size(); witnesses are capped
  std::vector<Artifact> artifacts;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }

  static constexpr std::size_t kMaxWitnesses = 16;

  /// Records a mismatch; the status becomes Fail.
  void add_witness(Witness w);
  /// A failure whose evidence is a single descriptive witness (e.g. a missing
  /// homotopy or a non-invertible comparison).
  void fail(int level, std::string label, std::string left, std::string right);
  /// Folds another report into this one, keeping its witnesses.
  void absorb(const VerificationReport& other);
  void skip(std::string reason);
};

VerificationReport make_report(std::string check_name, std::vector<std::string> objects = {}, int max_level = 0);

/// Compares two equally-shaped matrices entrywise and records every
/// disagreement (capped) with labels "column -> row".
void compare_matrices(VerificationReport& report, int level, const SparseMatrix& left, const SparseMatrix& right,
                      const std::vector<std::string>* column_labels = nullptr,
                      const std::vector<std::string>* row_labels = nullptr);

std::string to_text(const VerificationReport& r, bool with_timing = false);
std::string to_json(const std::vector<VerificationReport>& reports, bool with_timing = false);

}  // namespace dk
