#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "hetho/error.hpp"
#include "hetho/sweep.hpp"

namespace hetho
{
namespace
{
namespace pt = boost::property_tree;

std::string_view trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true)
    {
        auto const pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

double parse_number(std::string_view text, std::string const& key)
{
    text = trim(text);
    double value = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ConfigError(key, "expected a number, got '" + std::string(text) + "'");
    return value;
}

template<class Set>
std::vector<Set> parse_pairs(std::string_view text, std::string const& key)
{
    std::vector<Set> sets;
    for (auto item : split(text, ','))
    {
        auto fields = split(item, '/');
        if (fields.size() != 2)
            throw ConfigError(key, "expected 'a/b' pairs, got '" + std::string(item) + "'");
        sets.push_back({parse_number(fields[0], key), parse_number(fields[1], key)});
    }
    return sets;
}

// Known keys per section, mapped onto the double they set
using FieldMap = std::map<std::string, double*>;

void apply_section(pt::ptree const& section, std::string const& name, FieldMap const& fields)
{
    for (auto const& [key, node] : section)
    {
        std::string const full = name + "." + key;
        auto it = fields.find(key);
        if (it == fields.end())
            throw ConfigError(full, "unknown key");
        *it->second = parse_number(node.data(), full);
    }
}

FieldMap link_fields(RadioLink& link)
{
    return {{"tx_power_dbm", &link.tx_power_dbm},
            {"antenna_gain_dbi", &link.antenna_gain_dbi},
            {"pathloss_intercept_db", &link.pathloss.intercept_db},
            {"pathloss_slope_db", &link.pathloss.slope_db}};
}
}  // namespace

//---------------------------------------------------------------------------//
std::vector<double> parse_velocity_grid(std::string_view text)
{
    std::string const key = "sweep.velocities_kmh";
    text = trim(text);
    if (text.empty())
        return {};
    if (text.find(':') != std::string_view::npos)
    {
        auto parts = split(text, ':');
        if (parts.size() != 3)
            throw ConfigError(key, "range must be start:stop:step");
        double const start = parse_number(parts[0], key);
        double const stop = parse_number(parts[1], key);
        double const step = parse_number(parts[2], key);
        if (!(step > 0))
            throw ConfigError(key, "range step must be positive");
        std::vector<double> grid;
        for (long i = 0;; ++i)
        {
            double const v = start + static_cast<double>(i) * step;
            if (v > stop + 1e-9 * step)
                break;
            grid.push_back(v);
        }
        return grid;
    }
    std::vector<double> grid;
    for (auto item : split(text, ','))
        grid.push_back(parse_number(item, key));
    return grid;
}

ScenarioConfig parse_config(std::istream& in)
{
    pt::ptree tree;
    try
    {
        pt::read_ini(in, tree);
    }
    catch (pt::ini_parser_error const& e)
    {
        throw ConfigError("", std::string("malformed scenario file: ") + e.message());
    }

    ScenarioConfig cfg;
    auto& s = cfg.scenario;
    auto& o = cfg.offsets;
    std::set<std::string> seen;
    for (auto const& [name, section] : tree)
    {
        if (!seen.insert(name).second)
            throw ConfigError(name, "duplicate section");
        if (name == "macro")
        {
            apply_section(section, name, link_fields(s.macro));
        }
        else if (name == "pico")
        {
            apply_section(section, name, link_fields(s.pico));
        }
        else if (name == "geometry")
        {
            apply_section(section,
                          name,
                          {{"macro_pico_distance_m", &s.macro_pico_distance_m},
                           {"min_pathloss_db", &s.min_pathloss_db}});
        }
        else if (name == "offsets")
        {
            apply_section(section,
                          name,
                          {{"hom_in_db", &o.hom_in_db},
                           {"hom_out_db", &o.hom_out_db},
                           {"hoe_in_db", &o.hoe_in_db},
                           {"hoe_out_db", &o.hoe_out_db},
                           {"qin_in_db", &o.qin_in_db},
                           {"qin_out_db", &o.qin_out_db}});
        }
        else if (name == "sweep")
        {
            for (auto const& [key, node] : section)
            {
                std::string const full = "sweep." + key;
                std::string const& value = node.data();
                if (key == "velocities_kmh")
                    cfg.velocities_kmh = parse_velocity_grid(value);
                else if (key == "lte_sets")
                    cfg.lte_sets = parse_pairs<LteParamSet>(value, full);
                else if (key == "zeus_sets")
                    cfg.zeus_sets = parse_pairs<ZeusParamSet>(value, full);
                else if (key == "t_pp_s")
                    cfg.t_pp_s = parse_number(value, full);
                else if (key == "ext_threshold")
                {
                    auto const v = trim(value);
                    if (v == "R")
                        cfg.ext_threshold = ExtThreshold::coverage;
                    else if (v == "r_mp")
                        cfg.ext_threshold = ExtThreshold::r_mp;
                    else
                        throw ConfigError(full, "expected R or r_mp");
                }
                else
                    throw ConfigError(full, "unknown key");
            }
        }
        else if (section.data().empty())
        {
            throw ConfigError(name, "unknown section");
        }
        else
        {
            throw ConfigError(name, "key outside of a section");
        }
    }

    try
    {
        s.validate();
    }
    catch (DomainError const& e)
    {
        throw ConfigError("geometry", e.what());
    }
    try
    {
        o.validate();
    }
    catch (InconsistentOffsetsError const& e)
    {
        throw ConfigError("offsets", e.what());
    }
    return cfg;
}

ScenarioConfig load_config(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open '" + path + "'");
    return parse_config(in);
}

void write_config(std::ostream& out, ScenarioConfig const& config)
{
    auto const& s = config.scenario;
    auto const& o = config.offsets;
    auto link = [&](char const* name, RadioLink const& l) {
        out << "[" << name << "]\n"
            << "tx_power_dbm = " << l.tx_power_dbm << "\n"
            << "antenna_gain_dbi = " << l.antenna_gain_dbi << "\n"
            << "pathloss_intercept_db = " << l.pathloss.intercept_db << "\n"
            << "pathloss_slope_db = " << l.pathloss.slope_db << "\n\n";
    };
    link("macro", s.macro);
    link("pico", s.pico);
    out << "[geometry]\n"
        << "macro_pico_distance_m = " << s.macro_pico_distance_m << "\n"
        << "min_pathloss_db = " << s.min_pathloss_db << "\n\n"
        << "[offsets]\n"
        << "hom_in_db = " << o.hom_in_db << "\n"
        << "hom_out_db = " << o.hom_out_db << "\n"
        << "hoe_in_db = " << o.hoe_in_db << "\n"
        << "hoe_out_db = " << o.hoe_out_db << "\n"
        << "qin_in_db = " << o.qin_in_db << "\n"
        << "qin_out_db = " << o.qin_out_db << "\n";
}

}  // namespace hetho
