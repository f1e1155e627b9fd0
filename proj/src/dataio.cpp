#include "tsecon/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tsecon/error.hpp"
#include "text.hpp"

namespace tsecon {
namespace {

namespace chr = std::chrono;
using namespace detail;

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int to_int(std::string_view s) {
    int v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

void validate_index(const std::vector<Period>& index, Frequency frequency, const std::string& what) {
    for (std::size_t i = 1; i < index.size(); ++i) {
        if (!(index[i - 1] < index[i])) {
            throw GapError(what + ": index not strictly increasing at " + index[i].label());
        }
        const Period expected = next_period(index[i - 1], frequency);
        if (index[i] != expected) {
            throw GapError(what + ": gap in index at " + expected.label());
        }
    }
}

}  // namespace

std::string_view to_string(Frequency f) noexcept { return f == Frequency::Monthly ? "monthly" : "daily"; }

Frequency parse_frequency(std::string_view text) {
    if (text == "monthly" || text == "m") return Frequency::Monthly;
    if (text == "daily" || text == "d") return Frequency::Daily;
    throw UsageError("unknown frequency '" + std::string(text) + "' (expected monthly|daily)");
}

std::string Period::label() const {
    char buf[40];
    if (day == 0) {
        std::snprintf(buf, sizeof buf, "%04d-%02u", year, month);
    } else {
        std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, month, day);
    }
    return buf;
}

std::optional<Period> Period::parse(std::string_view text, Frequency frequency) {
    text = trim(text);
    if (frequency == Frequency::Monthly) {
        if (text.size() != 7 || text[4] != '-') return std::nullopt;
        if (!all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2))) return std::nullopt;
        Period p{to_int(text.substr(0, 4)), static_cast<unsigned>(to_int(text.substr(5, 2))), 0};
        if (p.month < 1 || p.month > 12) return std::nullopt;
        return p;
    }
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    if (!all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
        !all_digits(text.substr(8, 2)))
        return std::nullopt;
    Period p{to_int(text.substr(0, 4)), static_cast<unsigned>(to_int(text.substr(5, 2))),
             static_cast<unsigned>(to_int(text.substr(8, 2)))};
    const chr::year_month_day ymd{chr::year{p.year}, chr::month{p.month}, chr::day{p.day}};
    if (!ymd.ok()) return std::nullopt;
    return p;
}

Period next_period(const Period& p, Frequency frequency) {
    if (frequency == Frequency::Monthly) {
        return p.month == 12 ? Period{p.year + 1, 1, 0} : Period{p.year, p.month + 1, 0};
    }
    chr::sys_days d{chr::year_month_day{chr::year{p.year}, chr::month{p.month}, chr::day{p.day}}};
    do {
        d += chr::days{1};
    } while (chr::weekday{d} == chr::Saturday || chr::weekday{d} == chr::Sunday);
    const chr::year_month_day ymd{d};
    return {static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
            static_cast<unsigned>(ymd.day())};
}

TimeSeries::TimeSeries(std::string name, Frequency frequency, std::vector<Period> index,
                       std::vector<double> values)
    : name_(std::move(name)), frequency_(frequency), index_(std::move(index)), values_(std::move(values)) {
    if (values_.empty()) throw EmptyError("series '" + name_ + "' has no observations");
    if (index_.size() != values_.size()) {
        throw UsageError("series '" + name_ + "': index and value lengths differ");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw UsageError("series '" + name_ + "': non-finite value at " + index_[i].label());
        }
    }
    validate_index(index_, frequency_, "series '" + name_ + "'");
}

TimeSeries TimeSeries::renamed(std::string name) const {
    TimeSeries copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

Dataset::Dataset(Frequency frequency, std::vector<Period> index, std::string index_name)
    : frequency_(frequency), index_(std::move(index)), index_name_(std::move(index_name)) {
    if (index_.empty()) throw EmptyError("dataset has no observations");
    validate_index(index_, frequency_, "dataset");
}

void Dataset::add(TimeSeries series) {
    if (series.frequency() != frequency_ || series.index() != index_) {
        throw UsageError("series '" + series.name() + "' is not aligned with the dataset index");
    }
    if (find(series.name())) throw UsageError("duplicate series name '" + series.name() + "'");
    series_.push_back(std::move(series));
}

std::vector<std::string> Dataset::names() const {
    std::vector<std::string> out;
    for (const auto& s : series_) out.push_back(s.name());
    return out;
}

std::optional<std::size_t> Dataset::find(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < series_.size(); ++i)
        if (series_[i].name() == name) return i;
    return std::nullopt;
}

const TimeSeries& Dataset::at(std::string_view name) const {
    if (auto i = find(name)) return series_[*i];
    throw UsageError("no series named '" + std::string(name) + "'");
}

Dataset Dataset::select(std::span<const std::string> names) const {
    Dataset out(frequency_, index_, index_name_);
    for (const auto& n : names) out.add(at(n));
    return out;
}

Dataset parse_csv(std::string_view text, Frequency frequency) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw EmptyError("CSV has no header row");
    const auto header = split_fields(lines[0]);
    if (header.size() < 2) throw ParseError("header needs an index column and at least one series", 1, 1);
    std::vector<std::string> names;
    for (std::size_t c = 1; c < header.size(); ++c) {
        std::string name(unquote(header[c]));
        if (name.empty()) throw ParseError("empty series name in header", 1, c + 1);
        names.push_back(std::move(name));
    }
    if (lines.size() < 2) throw EmptyError("CSV has no data rows");

    std::vector<Period> index;
    std::vector<std::vector<double>> columns(names.size());
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto fields = split_fields(lines[r]);
        if (fields.size() != header.size()) {
            throw ParseError("expected " + std::to_string(header.size()) + " fields, found " +
                                 std::to_string(fields.size()),
                             r + 1, std::min(fields.size(), header.size()) + 1);
        }
        auto period = Period::parse(fields[0], frequency);
        if (!period) {
            throw ParseError("bad " + std::string(to_string(frequency)) + " period label '" +
                                 std::string(trim(fields[0])) + "'",
                             r + 1, 1);
        }
        if (!index.empty()) {
            if (!(index.back() < *period)) {
                throw ParseError("period " + period->label() + " is not after " + index.back().label(),
                                 r + 1, 1);
            }
            const Period expected = next_period(index.back(), frequency);
            if (*period != expected) throw GapError("gap in index at " + expected.label());
        }
        index.push_back(*period);
        for (std::size_t c = 1; c < fields.size(); ++c) {
            const std::string_view cell = trim(fields[c]);
            auto v = parse_decimal(cell);
            if (!v) {
                throw ParseError(cell.empty() ? "missing value"
                                              : "malformed number '" + std::string(cell) + "'",
                                 r + 1, c + 1);
            }
            columns[c - 1].push_back(*v);
        }
    }
    Dataset d(frequency, index, std::string(unquote(header[0])));
    for (std::size_t c = 0; c < names.size(); ++c) {
        d.add(TimeSeries(names[c], frequency, index, std::move(columns[c])));
    }
    return d;
}

Dataset load_csv(const std::filesystem::path& path, Frequency frequency) {
    return parse_csv(read_file(path), frequency);
}

std::string format_csv(const Dataset& data) {
    std::string out = data.index_name();
    for (const auto& s : data.series()) out += "," + s.name();
    out += "\n";
    char buf[64];
    for (std::size_t i = 0; i < data.observations(); ++i) {
        out += data.index()[i].label();
        for (const auto& s : data.series()) {
            const auto res = std::to_chars(buf, buf + sizeof buf, s[i]);
            out += ',';
            out.append(buf, res.ptr);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << format_csv(data);
    if (!out) throw IoError("write failed for " + path.string());
}

TimeSeries diff(const TimeSeries& s, std::size_t order) {
    if (order == 0) return s;
    if (s.size() <= order) {
        throw TooShort("cannot difference '" + s.name() + "' of length " + std::to_string(s.size()) +
                       " " + std::to_string(order) + " times");
    }
    std::vector<double> v(s.values().begin(), s.values().end());
    for (std::size_t k = 0; k < order; ++k) {
        for (std::size_t i = v.size() - 1; i > k; --i) v[i] -= v[i - 1];
    }
    std::vector<double> values(v.begin() + static_cast<std::ptrdiff_t>(order), v.end());
    std::vector<Period> index(s.index().begin() + static_cast<std::ptrdiff_t>(order), s.index().end());
    return TimeSeries(s.name(), s.frequency(), std::move(index), std::move(values));
}

Dataset diff(const Dataset& d, std::size_t order) {
    if (d.observations() <= order) throw TooShort("dataset too short to difference");
    std::vector<Period> index(d.index().begin() + static_cast<std::ptrdiff_t>(order), d.index().end());
    Dataset out(d.frequency(), std::move(index), d.index_name());
    for (const auto& s : d.series()) out.add(diff(s, order));
    return out;
}

EventCalendar::EventCalendar(Frequency frequency, std::vector<Event> events) : frequency_(frequency) {
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.period < b.period; });
    for (auto& e : events) {
        if (!events_.empty() && events_.back().period == e.period) continue;
        events_.push_back(std::move(e));
    }
}

bool EventCalendar::contains(const Period& p) const noexcept {
    return std::binary_search(events_.begin(), events_.end(), Event{p, {}},
                              [](const Event& a, const Event& b) { return a.period < b.period; });
}

EventCalendar parse_events(std::string_view text, Frequency frequency) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw EmptyError("event file has no header row");
    std::vector<Event> events;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) continue;
        const std::size_t comma = lines[r].find(',');
        const std::string_view label = lines[r].substr(0, comma);
        auto period = Period::parse(label, frequency);
        if (!period) {
            throw ParseError("bad event period '" + std::string(trim(label)) + "'", r + 1, 1);
        }
        std::string description;
        if (comma != std::string_view::npos) description = std::string(unquote(lines[r].substr(comma + 1)));
        events.push_back({*period, std::move(description)});
    }
    return EventCalendar(frequency, std::move(events));
}

EventCalendar load_events(const std::filesystem::path& path, Frequency frequency) {
    return parse_events(read_file(path), frequency);
}

DummySeries dummy_from_events(const EventCalendar& calendar, const std::vector<Period>& index,
                              Frequency frequency, std::string name) {
    std::vector<double> values(index.size(), 0.0);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (calendar.contains(index[i])) {
            values[i] = 1.0;
            ++hits;
        }
    }
    return {TimeSeries(std::move(name), frequency, index, std::move(values)), calendar.size() - hits};
}

}  // namespace tsecon
