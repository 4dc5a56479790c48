#include "popstack/emit.hpp"

#include <json.hpp>

namespace popstack {

using Json = nlohmann::ordered_json;

namespace {

Json to_json(const Permutation& pi) {
  return Json(std::vector<Entry>(pi.begin(), pi.end()));
}

Json to_json(const BinaryWord& w) { return w.to_string(); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void unsupported(std::string_view payload, Format format) {
  static constexpr std::string_view names[] = {"text", "json", "csv"};
  throw UnsupportedFormat(std::string(payload) + " cannot be emitted as " +
                          std::string(names[static_cast<int>(format)]));
}

std::string text_of(const Permutation& pi, TextStyle style) {
  return format_permutation(pi, style);
}
std::string text_of(const BinaryWord& w, TextStyle) { return w.to_string(); }

template <class T>
std::string emit_trace(const PassTrace<T>& trace, Format format, TextStyle style) {
  std::string out;
  switch (format) {
    case Format::text:
      for (std::size_t i = 0; i < trace.states.size(); ++i) {
        out += std::to_string(i) + ": " + text_of(trace.states[i], style) + "\n";
      }
      return out;
    case Format::csv:
      out = "pass,state\n";
      for (std::size_t i = 0; i < trace.states.size(); ++i) {
        out += std::to_string(i) + "," + text_of(trace.states[i], style) + "\n";
      }
      return out;
    case Format::json: {
      Json states = Json::array();
      for (const auto& s : trace.states) states.push_back(to_json(s));
      Json j;
      j["machine"] = to_string(trace.machine);
      j["passes"] = trace.passes();
      j["sorted"] = trace.sorted;
      j["states"] = std::move(states);
      return dump(j);
    }
  }
  unsupported("trace", format);
}

template <class T>
std::string emit_set(const ReachSet<T>& set, Format format, TextStyle style) {
  std::string out;
  switch (format) {
    case Format::text:
      for (const auto& x : set) out += text_of(x, style) + "\n";
      return out;
    case Format::csv:
      out = "element\n";
      for (const auto& x : set) out += text_of(x, style) + "\n";
      return out;
    case Format::json: {
      Json elements = Json::array();
      for (const auto& x : set) elements.push_back(to_json(x));
      Json j;
      j["count"] = set.size();
      j["elements"] = std::move(elements);
      return dump(j);
    }
  }
  unsupported("reach set", format);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string emit(const VerificationReport& report, Format format) {
  switch (format) {
    case Format::text: {
      std::string out = "claim: " + report.claim + "\n";
      out += "scope: " + report.scope + "\n";
      out += "checked: " + std::to_string(report.checked) + "\n";
      out += "failures: " + std::to_string(report.failure_count) + "\n";
      for (const auto& f : report.failures) out += "  counterexample: " + f + "\n";
      out += std::string("status: ") + (report.passed() ? "pass" : "fail") + "\n";
      return out;
    }
    case Format::json: {
      Json j;
      j["claim"] = report.claim;
      j["scope"] = report.scope;
      j["checked"] = report.checked;
      j["failure_count"] = report.failure_count;
      j["failures"] = report.failures;
      j["status"] = report.passed() ? "pass" : "fail";
      return dump(j);
    }
    case Format::csv: break;
  }
  unsupported("verification report", format);
}

std::string emit(const CountTable& table, Format format) {
  switch (format) {
    case Format::csv:
    case Format::text: {
      std::string out = "n,t,machine,count\n";
      for (const auto& r : table.rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.t) + "," +
               std::string(to_string(r.machine)) + "," + std::to_string(r.count) + "\n";
      }
      return out;
    }
    case Format::json: {
      Json rows = Json::array();
      for (const auto& r : table.rows) {
        Json row;
        row["n"] = r.n;
        row["t"] = r.t;
        row["machine"] = to_string(r.machine);
        row["count"] = r.count;
        rows.push_back(std::move(row));
      }
      return dump(rows);
    }
  }
  unsupported("count table", format);
}

std::string emit(const std::vector<PassHistogram>& histograms, Format format) {
  switch (format) {
    case Format::csv:
    case Format::text: {
      std::string out = "n,passes,count\n";
      for (const auto& h : histograms) {
        for (const auto& [k, c] : h.counts) {
          out += std::to_string(h.n) + "," + std::to_string(k) + "," + std::to_string(c) + "\n";
        }
      }
      return out;
    }
    case Format::json: {
      Json rows = Json::array();
      for (const auto& h : histograms) {
        for (const auto& [k, c] : h.counts) {
          Json row;
          row["n"] = h.n;
          row["machine"] = to_string(h.machine);
          row["passes"] = k;
          row["count"] = c;
          rows.push_back(std::move(row));
        }
      }
      return dump(rows);
    }
  }
  unsupported("histogram", format);
}

std::string emit(const PassHistogram& histogram, Format format) {
  return emit(std::vector<PassHistogram>{histogram}, format);
}

std::string emit(const PassTrace<Permutation>& trace, Format format, TextStyle style) {
  return emit_trace(trace, format, style);
}

std::string emit(const PassTrace<BinaryWord>& trace, Format format) {
  return emit_trace(trace, format, TextStyle::compact);
}

std::string emit(const ReachSet<Permutation>& set, Format format, TextStyle style) {
  return emit_set(set, format, style);
}

std::string emit(const ReachSet<BinaryWord>& set, Format format) {
  return emit_set(set, format, TextStyle::compact);
}

}  // namespace popstack
