#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsecon {

enum class Frequency { Monthly, Daily };

std::string_view to_string(Frequency f) noexcept;
Frequency parse_frequency(std::string_view text);

/// A period label: "YYYY-MM" (monthly, day == 0) or "YYYY-MM-DD" (daily).
struct Period {
    int year = 0;
    unsigned month = 0;
    unsigned day = 0;

    auto operator<=>(const Period&) const = default;

    [[nodiscard]] std::string label() const;
    static std::optional<Period> parse(std::string_view text, Frequency frequency);
};

/// Next period at the given frequency. Daily frequency steps over weekends:
/// daily indexes are business-day calendars.
Period next_period(const Period& p, Frequency frequency);

/// Named, evenly indexed, finite observations.
///
/// Construction validates the invariants: length >= 1, one value per period,
/// no non-finite values, index strictly increasing without gaps.
class TimeSeries {
public:
    TimeSeries(std::string name, Frequency frequency, std::vector<Period> index,
               std::vector<double> values);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] Frequency frequency() const noexcept { return frequency_; }
    [[nodiscard]] const std::vector<Period>& index() const noexcept { return index_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    [[nodiscard]] TimeSeries renamed(std::string name) const;

private:
    std::string name_;
    Frequency frequency_;
    std::vector<Period> index_;
    std::vector<double> values_;
};

/// A set of series sharing one index. Series names are unique and the
/// column order is the order of insertion.
class Dataset {
public:
    Dataset(Frequency frequency, std::vector<Period> index, std::string index_name = "period");

    void add(TimeSeries series);

    [[nodiscard]] Frequency frequency() const noexcept { return frequency_; }
    [[nodiscard]] const std::vector<Period>& index() const noexcept { return index_; }
    [[nodiscard]] const std::string& index_name() const noexcept { return index_name_; }
    [[nodiscard]] std::size_t observations() const noexcept { return index_.size(); }
    [[nodiscard]] std::size_t series_count() const noexcept { return series_.size(); }
    [[nodiscard]] const std::vector<TimeSeries>& series() const noexcept { return series_; }
    [[nodiscard]] std::vector<std::string> names() const;

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const noexcept;
    /// Throws UsageError when the name is absent.
    [[nodiscard]] const TimeSeries& at(std::string_view name) const;
    [[nodiscard]] std::span<const double> column(std::string_view name) const {
        return at(name).values();
    }

    /// Subset of columns, in the requested order.
    [[nodiscard]] Dataset select(std::span<const std::string> names) const;

private:
    Frequency frequency_;
    std::vector<Period> index_;
    std::string index_name_;
    std::vector<TimeSeries> series_;
};

Dataset parse_csv(std::string_view text, Frequency frequency);
Dataset load_csv(const std::filesystem::path& path, Frequency frequency);
/// Writes shortest round-trip decimal representations, LF line endings.
std::string format_csv(const Dataset& data);
void write_csv(const Dataset& data, const std::filesystem::path& path);

/// d-th difference; the index is trimmed from the front.
TimeSeries diff(const TimeSeries& s, std::size_t order = 1);
/// Differences every series of a dataset.
Dataset diff(const Dataset& d, std::size_t order = 1);

struct Event {
    Period period;
    std::string description;
};

/// Event list keyed by period; duplicate periods collapse to the first entry.
class EventCalendar {
public:
    EventCalendar() = default;
    EventCalendar(Frequency frequency, std::vector<Event> events);

    [[nodiscard]] const std::vector<Event>& events() const noexcept { return events_; }
    [[nodiscard]] std::size_t size() const noexcept { return events_.size(); }
    [[nodiscard]] bool contains(const Period& p) const noexcept;

private:
    Frequency frequency_ = Frequency::Monthly;
    std::vector<Event> events_;
};

/// Two-column CSV with header (period,description). The description is the
/// remainder of the line and may be double-quoted.
EventCalendar parse_events(std::string_view text, Frequency frequency);
EventCalendar load_events(const std::filesystem::path& path, Frequency frequency);

struct DummySeries {
    TimeSeries series;
    /// Calendar entries that fell outside the index.
    std::size_t ignored = 0;
};

/// 0/1 series equal to 1 exactly at the calendar's periods.
DummySeries dummy_from_events(const EventCalendar& calendar, const std::vector<Period>& index,
                              Frequency frequency, std::string name = "DPOL");

}  // namespace tsecon
