#include "mmrr/workload.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace mmrr {
namespace {

void validate_process(const Process& p, const std::string& where) {
    if (p.pid.empty()) throw ValidationError(where + ": pid must be nonempty");
    for (char c : p.pid) {
        if (c == ',' || c == '"' || std::isspace(static_cast<unsigned char>(c)) ||
            std::iscntrl(static_cast<unsigned char>(c))) {
            throw ValidationError(where + ": pid '" + p.pid + "' contains unsupported characters");
        }
    }
    if (p.arrival < 0) throw ValidationError(where + ": arrival must be >= 0 (pid " + p.pid + ")");
    if (p.burst < 1) throw ValidationError(where + ": burst must be >= 1 (pid " + p.pid + ")");
}

Tick parse_tick(const std::string& field, const std::string& where) {
    Tick value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(where + ": expected an integer, got '" + field + "'");
    }
    return value;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

ProcessSet parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Process> rows;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (!saw_header) {
            if (body != "pid,arrival,burst") {
                throw ParseError("line 1: expected header 'pid,arrival,burst'");
            }
            saw_header = true;
            continue;
        }
        const std::string where = "line " + std::to_string(lineno);
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const auto comma = body.find(',', pos);
            fields.push_back(trim(body.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != 3) {
            throw ParseError(where + ": expected 3 fields, got " + std::to_string(fields.size()));
        }
        Process p{fields[0], parse_tick(fields[1], where), parse_tick(fields[2], where)};
        validate_process(p, where);
        rows.push_back(std::move(p));
    }
    if (!saw_header) throw ParseError("line 1: expected header 'pid,arrival,burst'");
    return ProcessSet(std::move(rows));
}

ProcessSet parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("workload JSON must be an array of objects");
    std::vector<Process> rows;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        const std::string where = "entry " + std::to_string(i);
        if (!item.is_object() || !item.contains("pid") || !item.contains("arrival") ||
            !item.contains("burst")) {
            throw ParseError(where + ": expected {\"pid\", \"arrival\", \"burst\"}");
        }
        if (!item["pid"].is_string() || !item["arrival"].is_number_integer() ||
            !item["burst"].is_number_integer()) {
            throw ParseError(where + ": pid must be a string, arrival/burst integers");
        }
        Process p{item["pid"].get<std::string>(), item["arrival"].get<Tick>(),
                  item["burst"].get<Tick>()};
        validate_process(p, where);
        rows.push_back(std::move(p));
    }
    return ProcessSet(std::move(rows));
}

// SplitMix64 (Steele, Lea, Flood). Fully specified so workloads reproduce
// across implementations and languages.
std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

ProcessSet::ProcessSet(std::vector<Process> processes) : processes_(std::move(processes)) {
    std::unordered_set<std::string> seen;
    for (const auto& p : processes_) {
        validate_process(p, "process set");
        if (!seen.insert(p.pid).second) {
            throw ValidationError("duplicate pid '" + p.pid + "'");
        }
    }
}

ProcessSet parse_workload(const std::string& text, WorkloadFormat format) {
    return format == WorkloadFormat::Csv ? parse_csv(text) : parse_json(text);
}

std::string serialize_workload(const ProcessSet& set, WorkloadFormat format) {
    if (format == WorkloadFormat::Csv) {
        std::string out = "pid,arrival,burst\n";
        for (const auto& p : set) {
            out += p.pid + "," + std::to_string(p.arrival) + "," + std::to_string(p.burst) + "\n";
        }
        return out;
    }
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& p : set) {
        doc.push_back({{"pid", p.pid}, {"arrival", p.arrival}, {"burst", p.burst}});
    }
    return doc.dump(2) + "\n";
}

ProcessSet generate_random_workload(std::size_t n, std::uint64_t seed, ValueRange burst_range,
                                    ValueRange arrival_range) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (burst_range.lo < 1 || burst_range.hi < burst_range.lo) {
        throw std::invalid_argument("burst range must satisfy 1 <= lo <= hi");
    }
    if (arrival_range.lo < 0 || arrival_range.hi < arrival_range.lo) {
        throw std::invalid_argument("arrival range must satisfy 0 <= lo <= hi");
    }
    std::uint64_t state = seed;
    const auto draw = [&state](ValueRange r) {
        const std::uint64_t span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
        return r.lo + static_cast<Tick>(splitmix64_next(state) % span);
    };
    std::vector<Process> rows;
    rows.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const Tick arrival = draw(arrival_range);
        const Tick burst = draw(burst_range);
        rows.push_back({"P" + std::to_string(i), arrival, burst});
    }
    return ProcessSet(std::move(rows));
}

}  // namespace mmrr
