#pragma once

#include <cstdint>
#include <string>

namespace hfvol {

/// Intraday timestamps are integer microseconds since midnight. Integer
/// storage keeps ordering exact for sub-0.1s gaps where doubles would tie.
using TimeUs = std::int64_t;

constexpr TimeUs kUsPerSecond = 1'000'000;

/// Calendar date, stored as yyyymmdd. Cheap to compare and to print.
struct Date {
    std::int32_t ymd = 0;

    friend auto operator<=>(const Date&, const Date&) = default;
};

/// Trading session bounds, inclusive on both ends.
struct Session {
    TimeUs open = 0;
    TimeUs close = 0;

    TimeUs length_us() const { return close - open; }
    double length_seconds() const { return static_cast<double>(close - open) / kUsPerSecond; }
    bool contains(TimeUs t) const { return t >= open && t <= close; }

    friend bool operator==(const Session&, const Session&) = default;
};

/// 09:30:00 - 16:00:00, the default equity session.
Session default_session();

// --- parsing / formatting ------------------------------------------------

/// "HH:MM:SS" or "HH:MM:SS.ffffff" (1-6 fractional digits) to microseconds.
/// Throws Error("timeutil", ...) on malformed input.
TimeUs parse_time_of_day(const std::string& text);

/// Canonical "HH:MM:SS.ffffff" (fraction always printed, 6 digits).
std::string format_time_of_day(TimeUs t);

/// "HH:MM" or "HH:MM:SS"; used for --session style bounds.
TimeUs parse_time_coarse(const std::string& text);

/// "YYYY-MM-DD" (also accepts "YYYYMMDD").
Date parse_date(const std::string& text);

std::string format_date(Date d);

/// Days since 1970-01-01 for a civil date; inverse below. Valid for the
/// proleptic Gregorian calendar.
std::int64_t days_from_date(Date d);
Date date_from_days(std::int64_t days);

/// 0 = Monday ... 6 = Sunday.
int weekday(Date d);

/// Next calendar day that is not a Saturday or Sunday.
Date next_weekday(Date d);

/// "HH:MM-HH:MM" session bound pair.
Session parse_session(const std::string& text);

}  // namespace hfvol
