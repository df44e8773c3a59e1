#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goodstein/claims.hpp"
#include "goodstein/sequences.hpp"

namespace goodstein {

enum class ExportFormat { kText, kJson, kCsv };

std::optional<ExportFormat> parse_export_format(std::string_view text);

// One exported term. Column order is fixed:
//   index, base, value, rep, step_class, digits
// value is a decimal string or null (elided over the digit budget); digits
// is present exactly when value is.
struct SequenceRecord {
  std::uint64_t index = 0;
  std::uint64_t base = 0;
  std::optional<std::string> value;
  std::string rep;
  std::optional<std::string> step_class;
  std::optional<std::uint64_t> digits;

  friend bool operator==(const SequenceRecord&,
                         const SequenceRecord&) = default;
};

SequenceRecord to_record(const SeqTerm& term);

// Streams records so that arbitrarily long sequences never sit in memory.
class SequenceWriter {
 public:
  SequenceWriter(std::ostream& out, ExportFormat format);
  SequenceWriter(const SequenceWriter&) = delete;
  SequenceWriter& operator=(const SequenceWriter&) = delete;
  ~SequenceWriter();

  void write(const SeqTerm& term);
  // Closes the JSON array. Called by the destructor if needed.
  void finish();

 private:
  std::ostream& out_;
  ExportFormat format_;
  bool first_ = true;
  bool finished_ = false;
};

// Two columns, index and decimal digit count, for plotting growth. Uses the
// exact count when the value is materialized and the estimate otherwise.
class PlotWriter {
 public:
  explicit PlotWriter(std::ostream& out);
  void write(const SeqTerm& term);

 private:
  std::ostream& out_;
};

// Accepts either export format (a leading '[' selects JSON). Throws Error on
// malformed input.
std::vector<SequenceRecord> read_records(std::istream& in);

// Rebuilds a Sequence from records: reps are parsed back, values restored
// when present. A first term in base 2 is read as G(value); otherwise as
// L(base). The outcome is Terminated when the last rep is zero, StepLimit
// otherwise.
Sequence sequence_from_records(std::span<const SequenceRecord> records,
                               const Budget& budget);

// JSON array of {claim, seed, kind, start_base, verdict, detail, witness?,
// steps_examined, budget}. Deterministic: no timings.
std::string reports_to_json(std::span<const ClaimReport> reports);
std::string reports_to_table(std::span<const ClaimReport> reports);

}  // namespace goodstein
