#pragma once
/**
 * @file media.hpp
 * @brief Built-in power-law media, clinical <-> SI attenuation units, and
 *        construction of lossy-wave media from a measured power law.
 *
 * Clinical units: dB / cm / MHz^y. SI units: Np / m / (rad/s)^y.
 * The dB -> Np factor uses the amplitude convention ln(10)/20.
 */

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracwave/core.hpp"
#include "fracwave/dispersion.hpp"
#include "fracwave/errors.hpp"

namespace fracwave {

/// Power-law attenuation in clinical units. The prefactor may be absent
/// for media that are characterised by their exponent only.
class ClinicalAttenuation {
  public:
    ClinicalAttenuation(std::optional<double> alpha0_db, double y)
        : alpha0_db_(alpha0_db), y_(y) {
        if (alpha0_db && !(*alpha0_db > 0.0 && std::isfinite(*alpha0_db))) {
            throw DomainError("alpha0_db must be positive");
        }
        if (!(y >= 0.0 && y <= 2.0)) {
            throw DomainError("y must lie in [0, 2]");
        }
    }

    const std::optional<double>& alpha0_db() const noexcept { return alpha0_db_; }
    double y() const noexcept { return y_; }
    bool has_prefactor() const noexcept { return alpha0_db_.has_value(); }

  private:
    std::optional<double> alpha0_db_;
    double y_;
};

struct MediaEntry {
    std::string name;
    ClinicalAttenuation attenuation;
};

struct SiAttenuation {
    double alpha0; ///< Np / m / (rad/s)^y
    double y;
};

namespace units {
inline const double db_to_np = std::log(10.0) / 20.0;
inline constexpr double per_cm_to_per_m = 100.0;
inline constexpr double mhz_to_rad_per_s = 2.0 * pi * 1.0e6;
} // namespace units

inline std::vector<MediaEntry> builtin_media() {
    return {
        {"Water", ClinicalAttenuation(0.0022, 2.0)},
        {"Fat", ClinicalAttenuation(0.158, 1.7)},
        {"DuctCancer", ClinicalAttenuation(0.57, 1.3)},
        {"BodyTissue", ClinicalAttenuation(0.87, 1.5)},
        {"RigidTubeBoundaryLayer", ClinicalAttenuation(std::nullopt, 0.5)},
        {"SedimentsRock", ClinicalAttenuation(std::nullopt, 1.0)},
    };
}

inline std::optional<MediaEntry> find_medium(const std::vector<MediaEntry>& media,
                                             std::string_view name) {
    for (const auto& m : media) {
        if (m.name == name) {
            return m;
        }
    }
    return std::nullopt;
}

inline SiAttenuation to_si(const ClinicalAttenuation& clinical) {
    if (!clinical.has_prefactor()) {
        throw IncompleteMediumError("medium has no attenuation prefactor (exponent-only entry)");
    }
    const double a = *clinical.alpha0_db() * units::db_to_np * units::per_cm_to_per_m /
                     std::pow(units::mhz_to_rad_per_s, clinical.y());
    return {a, clinical.y()};
}

inline ClinicalAttenuation from_si(double alpha0_si, double y) {
    if (!(alpha0_si > 0.0) || !std::isfinite(alpha0_si)) {
        throw DomainError("alpha0_si must be positive");
    }
    const double db = alpha0_si * std::pow(units::mhz_to_rad_per_s, y) /
                      (units::db_to_np * units::per_cm_to_per_m);
    return ClinicalAttenuation(db, y);
}

/**
 * Lossy-wave medium whose small-loss attenuation is alpha0_si * w^y for a
 * chosen temporal order eta: s = y + 1 - eta and
 * gamma = 2 alpha0 / (c0^{1-s} sin(pi eta / 2)).
 */
inline Medium medium_from_power_law(double alpha0_si, double y, double c0, double eta,
                                    std::string name = "") {
    if (!(alpha0_si > 0.0)) {
        throw DomainError("alpha0_si must be positive");
    }
    if (!(c0 > 0.0)) {
        throw DomainError("c0 must be positive");
    }
    if (!(eta > 0.0 && eta < 2.0)) {
        throw DomainError("eta must lie in (0, 2)");
    }
    const double s = y + 1.0 - eta;
    if (!(s >= 0.0 && s <= 2.0)) {
        const double lo = std::max(y - 1.0, 0.0);
        const double hi = std::min(y + 1.0, 2.0);
        std::ostringstream os;
        os << "no admissible medium: s = y + 1 - eta = " << s
           << " lies outside [0, 2]; valid eta for y = " << y << " is [" << lo << ", " << hi
           << "] intersected with (0, 2)";
        throw NoAdmissibleMediumError(os.str());
    }
    const double gamma = 2.0 * alpha0_si / (std::pow(c0, 1.0 - s) * std::sin(pi * eta / 2.0));
    return Medium(std::move(name), c0, gamma, eta, s);
}

inline constexpr std::string_view media_csv_header = "name,alpha0_db_per_cm_per_MHz_y,y";

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

inline double parse_number(const std::string& s, const char* field, std::size_t line) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last) {
        throw ParseError(std::string("field '") + field + "' is not a number: '" + s + "'", line);
    }
    return v;
}

} // namespace detail

/**
 * Parse a media table. Blank lines and lines starting with '#' are
 * skipped; the first remaining line must be the header. An empty
 * prefactor column marks an exponent-only entry.
 */
inline std::vector<MediaEntry> parse_media(std::istream& in) {
    std::vector<MediaEntry> out;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (t != media_csv_header) {
                throw ParseError("expected header '" + std::string(media_csv_header) + "'",
                                 lineno);
            }
            header_seen = true;
            continue;
        }
        const auto cols = detail::split_csv_line(t);
        if (cols.size() != 3) {
            throw ParseError("expected 3 columns, found " + std::to_string(cols.size()), lineno);
        }
        const std::string& name = cols[0];
        if (name.empty()) {
            throw ParseError("empty medium name", lineno);
        }
        std::optional<double> a0;
        if (!cols[1].empty()) {
            a0 = detail::parse_number(cols[1], "alpha0_db_per_cm_per_MHz_y", lineno);
        }
        const double y = detail::parse_number(cols[2], "y", lineno);
        try {
            ClinicalAttenuation att(a0, y);
            if (!seen.insert(name).second) {
                throw ParseError("duplicate medium '" + name + "'", lineno);
            }
            out.push_back({name, att});
        } catch (const DomainError& e) {
            throw ParseError("medium '" + name + "': " + e.what(), lineno);
        }
    }
    return out;
}

inline std::vector<MediaEntry> load_media(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open media file '" + path + "'", 0);
    }
    return parse_media(in);
}

} // namespace fracwave
