#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

namespace zerogamma {

/// A non-trivial zero 1/2 + i t on the critical line, numbered from 1.
struct ZetaZero
{
    std::uint64_t q = 0;
    double        t = 0.0;

    friend bool operator==(ZetaZero const&, ZetaZero const&) = default;
};

enum class CatalogSource
{
    embedded,
    file,
};

class catalog_error : public std::runtime_error
{
public:
    enum class kind
    {
        parse,
        order,
        empty,
        not_found,
        io,
    };

    catalog_error(kind what, std::string const& message, std::size_t line = 0)
        : std::runtime_error(message), kind_(what), line_(line)
    {
    }

    [[nodiscard]] kind error_kind() const noexcept { return kind_; }

    /// 1-based line of the offending input, 0 when not tied to a line.
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    kind        kind_;
    std::size_t line_;
};

/// Immutable, validated list of zeros sorted by q with strictly increasing t.
class ZeroCatalog
{
public:
    ZeroCatalog(CatalogSource source, std::vector<ZetaZero> zeros) : source_(source), zeros_(std::move(zeros))
    {
        if (zeros_.empty()) {
            throw catalog_error(catalog_error::kind::empty, "zero catalog is empty");
        }
        for (std::size_t i = 0; i < zeros_.size(); ++i) {
            if (zeros_[i].q == 0 || !(zeros_[i].t > 0.0)) {
                throw catalog_error(catalog_error::kind::parse, "zero index must be >= 1 and t must be positive");
            }
            if (i > 0 && !(zeros_[i].q > zeros_[i - 1].q && zeros_[i].t > zeros_[i - 1].t)) {
                throw catalog_error(catalog_error::kind::order,
                                    "zeros must have strictly increasing q and t (at q = " +
                                        std::to_string(zeros_[i].q) + ")");
            }
        }
    }

    [[nodiscard]] CatalogSource                source() const noexcept { return source_; }
    [[nodiscard]] std::vector<ZetaZero> const& zeros() const noexcept { return zeros_; }
    [[nodiscard]] std::size_t                  size() const noexcept { return zeros_.size(); }

    [[nodiscard]] std::optional<ZetaZero> find(std::uint64_t q) const
    {
        auto const it = std::lower_bound(zeros_.begin(), zeros_.end(), q,
                                         [](ZetaZero const& z, std::uint64_t value) { return z.q < value; });
        if (it == zeros_.end() || it->q != q) {
            return std::nullopt;
        }
        return *it;
    }

    friend bool operator==(ZeroCatalog const&, ZeroCatalog const&) = default;

private:
    CatalogSource         source_;
    std::vector<ZetaZero> zeros_;
};

/// The first ten zeros and the zeros numbered 10^2 .. 10^5, at 13-15
/// significant digits as published in the LMFDB listing.
inline ZeroCatalog const& builtin_catalog()
{
    static ZeroCatalog const catalog{CatalogSource::embedded,
                                     {
                                         {1, 14.1347251417347},
                                         {2, 21.0220396387716},
                                         {3, 25.0108575801457},
                                         {4, 30.4248761258595},
                                         {5, 32.9350615877392},
                                         {6, 37.5861781588257},
                                         {7, 40.9187190121475},
                                         {8, 43.3270732809150},
                                         {9, 48.0051508811672},
                                         {10, 49.7738324776723},
                                         {100, 236.52422966581},
                                         {1000, 1419.42248094599},
                                         {10000, 9877.78265400550},
                                         {100000, 74920.827498994},
                                     }};
    return catalog;
}

namespace detail {

inline std::vector<std::string_view> split_whitespace(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t                   pos = 0;
    while (pos < line.size()) {
        pos = line.find_first_not_of(" \t\r\f\v", pos);
        if (pos == std::string_view::npos) {
            break;
        }
        auto const end = std::min(line.find_first_of(" \t\r\f\v", pos), line.size());
        fields.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return fields;
}

template <class T>
bool parse_full(std::string_view text, T& out)
{
    auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

} // namespace detail

/*!
    Reads a plain-text zero list.

    One zero per line, either "t" or "q t" separated by whitespace. A bare "t"
    takes the next index after the previous zero (so a file of bare ordinates
    is numbered 1, 2, ... in order). Blank lines and lines whose first
    non-blank character is '#' are skipped.
*/
inline ZeroCatalog parse_catalog(std::istream& in, CatalogSource source = CatalogSource::file)
{
    std::vector<ZetaZero> zeros;
    std::string           raw;
    std::size_t           line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto const fields = detail::split_whitespace(raw);
        if (fields.empty() || fields.front().front() == '#') {
            continue;
        }

        auto const fail = [&](std::string const& why) {
            return catalog_error(catalog_error::kind::parse,
                                 "line " + std::to_string(line_no) + ": " + why + ": '" + raw + "'", line_no);
        };

        ZetaZero zero;
        if (fields.size() == 1) {
            zero.q = zeros.empty() ? 1 : zeros.back().q + 1;
            if (!detail::parse_full(fields[0], zero.t)) {
                throw fail("expected a decimal ordinate");
            }
        } else if (fields.size() == 2) {
            if (!detail::parse_full(fields[0], zero.q) || zero.q == 0) {
                throw fail("expected a positive integer index");
            }
            if (!detail::parse_full(fields[1], zero.t)) {
                throw fail("expected a decimal ordinate");
            }
        } else {
            throw fail("expected 't' or 'q t'");
        }
        if (!(zero.t > 0.0) || !std::isfinite(zero.t)) {
            throw fail("ordinate must be positive and finite");
        }
        if (!zeros.empty() && !(zero.q > zeros.back().q && zero.t > zeros.back().t)) {
            throw catalog_error(catalog_error::kind::order,
                                "line " + std::to_string(line_no) + ": q and t must be strictly increasing",
                                line_no);
        }
        zeros.push_back(zero);
    }
    if (zeros.empty()) {
        throw catalog_error(catalog_error::kind::empty, "no zeros found in input");
    }
    return ZeroCatalog{source, std::move(zeros)};
}

inline ZeroCatalog load_catalog(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in) {
        throw catalog_error(catalog_error::kind::io, "cannot open zeros file '" + path.string() + "'");
    }
    try {
        return parse_catalog(in, CatalogSource::file);
    } catch (catalog_error const& e) {
        throw catalog_error(e.error_kind(), path.string() + ": " + e.what(), e.line());
    }
}

/// Writes "q t" lines with shortest round-trip ordinates.
inline void write_catalog(std::ostream& out, ZeroCatalog const& catalog)
{
    char buffer[64];
    for (auto const& zero : catalog.zeros()) {
        auto const [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, zero.t);
        out << zero.q << ' ' << std::string_view(buffer, static_cast<std::size_t>(end - buffer)) << '\n';
    }
}

inline ZetaZero get_zero(ZeroCatalog const& catalog, std::uint64_t q)
{
    if (auto zero = catalog.find(q)) {
        return *zero;
    }
    auto const& zeros   = catalog.zeros();
    auto const  nearest = std::min_element(zeros.begin(), zeros.end(), [q](ZetaZero const& a, ZetaZero const& b) {
        auto const dist = [q](std::uint64_t x) { return x > q ? x - q : q - x; };
        return dist(a.q) < dist(b.q);
    });
    throw catalog_error(catalog_error::kind::not_found, "zero q = " + std::to_string(q) +
                                                            " not in catalog; nearest available q = " +
                                                            std::to_string(nearest->q));
}

} // namespace zerogamma
