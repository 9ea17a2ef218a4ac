#include "hfvol/timeutil.hpp"

#include "hfvol/errors.hpp"

#include <cctype>
#include <cstdio>

namespace hfvol {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to || to > s.size()) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

int to_int(const std::string& s, std::size_t from, std::size_t to) {
    int v = 0;
    for (std::size_t i = from; i < to; ++i) v = v * 10 + (s[i] - '0');
    return v;
}

}  // namespace

Session default_session() {
    return Session{(9 * 3600 + 30 * 60) * kUsPerSecond, 16 * 3600 * kUsPerSecond};
}

TimeUs parse_time_of_day(const std::string& text) {
    // HH:MM:SS[.ffffff]
    if (text.size() < 8 || text[2] != ':' || text[5] != ':' ||
        !all_digits(text, 0, 2) || !all_digits(text, 3, 5) || !all_digits(text, 6, 8)) {
        raise("timeutil", "malformed time of day '" + text + "'");
    }
    int hh = to_int(text, 0, 2);
    int mm = to_int(text, 3, 5);
    int ss = to_int(text, 6, 8);
    if (hh > 23 || mm > 59 || ss > 60) {
        raise("timeutil", "time of day out of range '" + text + "'");
    }
    std::int64_t us = 0;
    if (text.size() > 8) {
        if (text[8] != '.' || text.size() == 9 || text.size() > 15 ||
            !all_digits(text, 9, text.size())) {
            raise("timeutil", "malformed fractional seconds '" + text + "'");
        }
        std::int64_t frac = to_int(text, 9, text.size());
        for (std::size_t d = text.size() - 9; d < 6; ++d) frac *= 10;
        us = frac;
    }
    return (static_cast<TimeUs>(hh) * 3600 + mm * 60 + ss) * kUsPerSecond + us;
}

std::string format_time_of_day(TimeUs t) {
    std::int64_t us = t % kUsPerSecond;
    std::int64_t sec = t / kUsPerSecond;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%02lld:%02lld:%02lld.%06lld",
                  static_cast<long long>(sec / 3600), static_cast<long long>((sec / 60) % 60),
                  static_cast<long long>(sec % 60), static_cast<long long>(us));
    return buf;
}

TimeUs parse_time_coarse(const std::string& text) {
    if (text.size() == 5 && text[2] == ':' && all_digits(text, 0, 2) && all_digits(text, 3, 5)) {
        int hh = to_int(text, 0, 2);
        int mm = to_int(text, 3, 5);
        if (hh > 23 || mm > 59) raise("timeutil", "time out of range '" + text + "'");
        return (static_cast<TimeUs>(hh) * 3600 + mm * 60) * kUsPerSecond;
    }
    return parse_time_of_day(text);
}

Date parse_date(const std::string& text) {
    int y, m, d;
    if (text.size() == 10 && text[4] == '-' && text[7] == '-' &&
        all_digits(text, 0, 4) && all_digits(text, 5, 7) && all_digits(text, 8, 10)) {
        y = to_int(text, 0, 4);
        m = to_int(text, 5, 7);
        d = to_int(text, 8, 10);
    } else if (text.size() == 8 && all_digits(text, 0, 8)) {
        y = to_int(text, 0, 4);
        m = to_int(text, 4, 6);
        d = to_int(text, 6, 8);
    } else {
        raise("timeutil", "malformed date '" + text + "'");
    }
    if (m < 1 || m > 12 || d < 1 || d > 31) {
        raise("timeutil", "date out of range '" + text + "'");
    }
    return Date{y * 10000 + m * 100 + d};
}

std::string format_date(Date d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.ymd / 10000, (d.ymd / 100) % 100,
                  d.ymd % 100);
    return buf;
}

std::int64_t days_from_date(Date date) {
    std::int64_t y = date.ymd / 10000;
    unsigned m = (date.ymd / 100) % 100;
    unsigned d = date.ymd % 100;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date date_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    const std::int64_t yy = y + (m <= 2);
    return Date{static_cast<std::int32_t>(yy * 10000 + m * 100 + d)};
}

int weekday(Date d) {
    // days_from_date(1970-01-01) == 0 was a Thursday.
    std::int64_t days = days_from_date(d);
    return static_cast<int>(((days % 7) + 7 + 3) % 7);
}

Date next_weekday(Date d) {
    std::int64_t days = days_from_date(d) + 1;
    while (true) {
        Date cand = date_from_days(days);
        int wd = weekday(cand);
        if (wd < 5) return cand;
        ++days;
    }
}

Session parse_session(const std::string& text) {
    auto dash = text.find('-');
    if (dash == std::string::npos) {
        raise("timeutil", "session bounds must look like HH:MM-HH:MM, got '" + text + "'");
    }
    Session s;
    s.open = parse_time_coarse(text.substr(0, dash));
    s.close = parse_time_coarse(text.substr(dash + 1));
    if (s.open >= s.close) raise("timeutil", "session open must precede close");
    return s;
}

}  // namespace hfvol
