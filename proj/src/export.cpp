#include "goodstein/export.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "goodstein/errors.hpp"
#include "goodstein/notation.hpp"

namespace goodstein {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kCsvHeader = "index,base,value,rep,step_class,digits";

ordered_json record_json(const SequenceRecord& r) {
  ordered_json j;
  j["index"] = r.index;
  j["base"] = r.base;
  j["value"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
  j["rep"] = r.rep;
  j["step_class"] = r.step_class ? ordered_json(*r.step_class) : ordered_json(nullptr);
  j["digits"] = r.digits ? ordered_json(*r.digits) : ordered_json(nullptr);
  return j;
}

std::string_view kind_text(ExportFormat f) {
  switch (f) {
    case ExportFormat::kText:
      return "text";
    case ExportFormat::kJson:
      return "json";
    case ExportFormat::kCsv:
      return "csv";
  }
  return "?";
}

std::uint64_t parse_u64(const std::string& text, std::string_view field) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size() && !text.empty() && text[0] != '-') return v;
  } catch (const std::exception&) {
  }
  throw Error("bad " + std::string(field) + " '" + text + "'");
}

std::vector<SequenceRecord> read_json(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed JSON export: ") + e.what());
  }
  if (!doc.is_array()) throw Error("a JSON export is an array of records");
  std::vector<SequenceRecord> out;
  try {
    for (const auto& j : doc) {
      SequenceRecord r;
      r.index = j.at("index").get<std::uint64_t>();
      r.base = j.at("base").get<std::uint64_t>();
      if (!j.at("value").is_null()) r.value = j.at("value").get<std::string>();
      r.rep = j.at("rep").get<std::string>();
      if (!j.at("step_class").is_null()) {
        r.step_class = j.at("step_class").get<std::string>();
      }
      if (!j.at("digits").is_null()) r.digits = j.at("digits").get<std::uint64_t>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed record: ") + e.what());
  }
  return out;
}

std::vector<SequenceRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error("a CSV export starts with the header " + std::string(kCsvHeader));
  }
  std::vector<SequenceRecord> out;
  std::uint64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 6) {
      throw Error("line " + std::to_string(line_no) + ": expected 6 fields");
    }
    SequenceRecord r;
    r.index = parse_u64(fields[0], "index");
    r.base = parse_u64(fields[1], "base");
    if (!fields[2].empty()) r.value = fields[2];
    r.rep = fields[3];
    if (!fields[4].empty()) r.step_class = fields[4];
    if (!fields[5].empty()) r.digits = parse_u64(fields[5], "digits");
    out.push_back(std::move(r));
  }
  return out;
}

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["index"] = w.index;
  auto values = ordered_json::array();
  for (const Natural& v : w.values) values.push_back(to_decimal(v));
  j["values"] = std::move(values);
  if (w.base) j["base"] = *w.base;
  j["note"] = w.note;
  return j;
}

ordered_json seed_json(const Natural& seed) {
  if (seed.fits_ulong_p()) return seed.get_ui();
  return to_decimal(seed);
}

}  // namespace

std::optional<ExportFormat> parse_export_format(std::string_view text) {
  for (auto f : {ExportFormat::kText, ExportFormat::kJson, ExportFormat::kCsv}) {
    if (text == kind_text(f)) return f;
  }
  return std::nullopt;
}

SequenceRecord to_record(const SeqTerm& term) {
  SequenceRecord r;
  r.index = term.index;
  r.base = term.rep.base().value();
  if (term.value) {
    r.value = to_decimal(*term.value);
    r.digits = decimal_digits(*term.value);
  }
  r.rep = format(term.rep);
  if (term.step_class) r.step_class = std::string(to_string(*term.step_class));
  return r;
}

SequenceWriter::SequenceWriter(std::ostream& out, ExportFormat format)
    : out_(out), format_(format) {
  if (format_ == ExportFormat::kCsv) out_ << kCsvHeader << '\n';
  if (format_ == ExportFormat::kJson) out_ << '[';
}

SequenceWriter::~SequenceWriter() {
  try {
    finish();
  } catch (...) {
  }
}

void SequenceWriter::write(const SeqTerm& term) {
  if (finished_) throw Error("writer already finished");
  const SequenceRecord r = to_record(term);
  switch (format_) {
    case ExportFormat::kJson:
      out_ << (first_ ? "\n" : ",\n") << record_json(r).dump();
      break;
    case ExportFormat::kCsv:
      out_ << r.index << ',' << r.base << ',' << r.value.value_or("") << ','
           << r.rep << ',' << r.step_class.value_or("") << ',';
      if (r.digits) out_ << *r.digits;
      out_ << '\n';
      break;
    case ExportFormat::kText:
      out_ << std::setw(6) << r.index << "  base " << r.base << "  "
           << r.value.value_or("(over digit budget)") << "  " << r.rep;
      if (r.step_class) out_ << "  " << *r.step_class;
      out_ << '\n';
      break;
  }
  first_ = false;
}

void SequenceWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == ExportFormat::kJson) out_ << (first_ ? "]\n" : "\n]\n");
  out_.flush();
}

PlotWriter::PlotWriter(std::ostream& out) : out_(out) { out_ << "index,digits\n"; }

void PlotWriter::write(const SeqTerm& term) {
  std::uint64_t digits = 0;
  if (term.value) {
    digits = decimal_digits(*term.value);
  } else {
    digits = static_cast<std::uint64_t>(std::floor(approx_log10(term.rep))) + 1;
  }
  out_ << term.index << ',' << digits << '\n';
}

std::vector<SequenceRecord> read_records(std::istream& in) {
  in >> std::ws;
  if (in.peek() == '[') return read_json(in);
  return read_csv(in);
}

Sequence sequence_from_records(std::span<const SequenceRecord> records,
                               const Budget& budget) {
  budget.validate();
  if (records.empty()) throw Error("no records");
  Sequence seq;
  seq.budget = budget;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SequenceRecord& r = records[i];
    const std::string where = "record " + std::to_string(i + 1);
    if (r.index != i + 1) throw Error(where + ": index should be " + std::to_string(i + 1));
    SeqTerm t{r.index, parse(r.rep, Base(r.base)), std::nullopt, std::nullopt};
    if (i > 0 && r.base != records[i - 1].base + 1) {
      throw Error(where + ": base should be " + std::to_string(records[i - 1].base + 1));
    }
    if (r.value) t.value = parse_natural(*r.value);
    if (!t.rep.is_zero()) t.step_class = classify_step(t.rep);
    const std::optional<std::string> cls =
        t.step_class ? std::optional<std::string>(to_string(*t.step_class))
                     : std::nullopt;
    if (cls != r.step_class) throw Error(where + ": step_class does not match rep");
    seq.terms.push_back(std::move(t));
  }
  const SeqTerm& first = seq.terms.front();
  if (first.rep.base().value() == 2) {
    seq.spec = SeqSpec::goodstein(first.value ? *first.value : evaluate(first.rep));
  } else {
    seq.spec = SeqSpec::l_sequence(first.rep.base().value());
  }
  if (seq.terms.back().rep.is_zero()) {
    seq.outcome = Outcome::terminated(seq.terms.back().index);
  }
  return seq;
}

std::string reports_to_json(std::span<const ClaimReport> reports) {
  auto doc = ordered_json::array();
  for (const ClaimReport& r : reports) {
    ordered_json j;
    j["claim"] = to_string(r.claim);
    j["seed"] = seed_json(r.spec.seed);
    j["kind"] = to_string(r.spec.kind);
    j["start_base"] = r.spec.start_base().value();
    j["verdict"] = to_string(r.verdict.kind);
    j["detail"] = r.verdict.detail;
    if (r.verdict.witness) j["witness"] = witness_json(*r.verdict.witness);
    j["steps_examined"] = r.verdict.steps_examined;
    j["budget"] = {{"max_steps", r.budget.max_steps},
                   {"max_digits", r.budget.max_digits},
                   {"max_borrow_terms", r.budget.max_borrow_terms}};
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string reports_to_table(std::span<const ClaimReport> reports) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "instance" << std::setw(8) << "claim"
      << std::setw(15) << "verdict" << std::setw(10) << "steps"
      << "detail\n";
  for (const ClaimReport& r : reports) {
    const std::string instance = std::string(to_string(r.spec.kind)) + "(" +
                                 to_decimal(r.spec.seed) + ")";
    out << std::setw(10) << instance << std::setw(8) << to_string(r.claim)
        << std::setw(15) << to_string(r.verdict.kind) << std::setw(10)
        << r.verdict.steps_examined << r.verdict.detail << '\n';
  }
  return out.str();
}

}  // namespace goodstein
