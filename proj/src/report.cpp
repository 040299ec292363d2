#include "dk/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <map>
#include <sstream>

namespace dk {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

void VerificationReport::add_witness(Witness w) {
  status = Status::Fail;
  ++mismatch_count;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

void VerificationReport::fail(int level, std::string label, std::string left, std::string right) {
  add_witness({level, std::move(label), std::move(left), std::move(right)});
}

void VerificationReport::absorb(const VerificationReport& other) {
  for (const auto& w : other.witnesses) add_witness(w);
  if (other.mismatch_count > other.witnesses.size()) mismatch_count += other.mismatch_count - other.witnesses.size();
  for (const auto& a : other.artifacts) artifacts.push_back(a);
  if (other.status == Status::Skipped && status == Status::Pass) skip(other.skip_reason);
}

void VerificationReport::skip(std::string reason) {
  status = Status::Skipped;
  skip_reason = std::move(reason);
}

VerificationReport make_report(std::string check_name, std::vector<std::string> objects, int max_level) {
  VerificationReport r;
  r.check_name = std::move(check_name);
  r.objects = std::move(objects);
  r.max_level = max_level;
  return r;
}

void compare_matrices(VerificationReport& report, int level, const SparseMatrix& left, const SparseMatrix& right,
                      const std::vector<std::string>* column_labels, const std::vector<std::string>* row_labels) {
  if (left.rows() != right.rows() || left.cols() != right.cols()) {
    std::ostringstream l, r;
    l << left.rows() << "x" << left.cols();
    r << right.rows() << "x" << right.cols();
    report.fail(level, "shape", l.str(), r.str());
    return;
  }
  SparseMatrix diff = pruned(SparseMatrix(left - right));
  if (diff.nonZeros() == 0) return;
  // Column-major traversal keeps witness order deterministic.
  for (Index k = 0; k < diff.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) {
      std::string col = column_labels && static_cast<std::size_t>(it.col()) < column_labels->size()
                            ? (*column_labels)[static_cast<std::size_t>(it.col())]
                            : "#" + std::to_string(it.col());
      std::string row = row_labels && static_cast<std::size_t>(it.row()) < row_labels->size()
                            ? (*row_labels)[static_cast<std::size_t>(it.row())]
                            : "#" + std::to_string(it.row());
      report.add_witness({level, col + " -> " + row, to_string(Integer(left.coeff(it.row(), it.col()))),
                          to_string(Integer(right.coeff(it.row(), it.col())))});
    }
  }
}

std::string to_text(const VerificationReport& r, bool with_timing) {
  std::ostringstream os;
  os << "[" << to_string(r.status) << "] " << r.check_name;
  if (!r.objects.empty()) {
    os << " (";
    for (std::size_t k = 0; k < r.objects.size(); ++k) os << (k ? ", " : "") << r.objects[k];
    os << ")";
  }
  os << " max-level " << r.max_level;
  if (with_timing) os << " " << std::fixed << std::setprecision(3) << r.seconds << "s";
  os << "\n";
  if (r.status == Status::Skipped) os << "  skipped: " << r.skip_reason << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  if (r.mismatch_count > 0) os << "  mismatches: " << r.mismatch_count << "\n";
  for (const auto& w : r.witnesses)
    os << "  witness level " << w.level << " at " << w.label << ": " << w.left << " vs " << w.right << "\n";
  for (const auto& a : r.artifacts) {
    os << "  artifact " << a.name << ":\n";
    std::istringstream lines(a.text);
    std::string line;
    while (std::getline(lines, line)) os << "    " << line << "\n";
  }
  return os.str();
}

std::string to_json(const std::vector<VerificationReport>& reports, bool with_timing) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check_name"] = r.check_name;
    j["objects"] = r.objects;
    j["max_level"] = r.max_level;
    j["status"] = to_string(r.status);
    if (r.status == Status::Skipped) j["skip_reason"] = r.skip_reason;
    j["mismatch_count"] = r.mismatch_count;
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
      nlohmann::ordered_json wj;
      wj["level"] = w.level;
      wj["label"] = w.label;
      wj["left"] = w.left;
      wj["right"] = w.right;
      ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    nlohmann::ordered_json as = nlohmann::ordered_json::array();
    for (const auto& a : r.artifacts) {
      nlohmann::ordered_json aj;
      aj["name"] = a.name;
      aj["text"] = a.text;
      as.push_back(std::move(aj));
    }
    j["artifacts"] = std::move(as);
    j["notes"] = r.notes;
    if (with_timing) j["seconds"] = r.seconds;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace dk
