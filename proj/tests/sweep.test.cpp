#include "hetho/sweep.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "hetho/error.hpp"

namespace hetho
{
namespace test
{
namespace
{
ScenarioConfig parse(std::string const& text)
{
    std::istringstream in(text);
    return parse_config(in);
}

std::string config_key_of(std::string const& text)
{
    try
    {
        parse(text);
    }
    catch (ConfigError const& e)
    {
        return e.key();
    }
    return "<none>";
}

std::string csv_of(SweepSpec const& spec)
{
    std::ostringstream out;
    write_sweep_csv(out, run_sweep(spec));
    return out.str();
}

int run_cli(std::string const& args)
{
    std::string const cmd = std::string(HETHO_CLI) + " " + args + " > /dev/null 2>&1";
    int const status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(ConfigTest, bundled_preset)
{
    auto const cfg = load_config(HETHO_PRESET_DIR "/lte_hetnet_250m.ini");
    EXPECT_EQ(250, cfg.scenario.macro_pico_distance_m);
    EXPECT_EQ(46, cfg.scenario.macro.tx_power_dbm);
    EXPECT_EQ(-4, cfg.offsets.qin_out_db);
    ASSERT_TRUE(cfg.velocities_kmh);
    EXPECT_EQ(default_velocity_grid(), *cfg.velocities_kmh);
    ASSERT_TRUE(cfg.lte_sets);
    EXPECT_EQ(4u, cfg.lte_sets->size());
    EXPECT_EQ(80, (*cfg.lte_sets)[3].ttt_ms);
    ASSERT_TRUE(cfg.zeus_sets);
    EXPECT_EQ(2, (*cfg.zeus_sets)[1].hoe_db);
}

TEST(ConfigTest, round_trip)
{
    ScenarioConfig cfg;
    cfg.scenario = RadioScenario::lte_hetnet(125);
    cfg.offsets.hom_in_db = 1;
    cfg.offsets.hom_out_db = -1;
    std::ostringstream out;
    write_config(out, cfg);
    auto const back = parse(out.str());
    EXPECT_EQ(125, back.scenario.macro_pico_distance_m);
    EXPECT_EQ(1, back.offsets.hom_in_db);
    EXPECT_EQ(128.1, back.scenario.macro.pathloss.intercept_db);
}

TEST(ConfigTest, defaults_when_empty)
{
    auto const cfg = parse("; nothing\n");
    EXPECT_EQ(250, cfg.scenario.macro_pico_distance_m);
    EXPECT_FALSE(cfg.velocities_kmh);
}

TEST(ConfigTest, errors_name_key)
{
    EXPECT_EQ("macro.tx_power", config_key_of("[macro]\ntx_power = 3\n"));
    EXPECT_EQ("pico.tx_power_dbm", config_key_of("[pico]\ntx_power_dbm = abc\n"));
    EXPECT_EQ("radio", config_key_of("[radio]\nx = 1\n"));
    EXPECT_EQ("geometry", config_key_of("[geometry]\nmacro_pico_distance_m = -5\n"));
    EXPECT_EQ("offsets", config_key_of("[offsets]\nhom_in_db = 4\n"));
    EXPECT_EQ("sweep.velocities_kmh", config_key_of("[sweep]\nvelocities_kmh = 5:120\n"));
    EXPECT_EQ("sweep.lte_sets", config_key_of("[sweep]\nlte_sets = 2-480\n"));
    EXPECT_EQ("sweep.ext_threshold", config_key_of("[sweep]\next_threshold = r_pp\n"));
    EXPECT_EQ("", config_key_of("[macro\n"));
    EXPECT_THROW(load_config("/nonexistent/scenario.ini"), ConfigError);
}

TEST(ConfigTest, velocity_grid)
{
    EXPECT_EQ((std::vector<double>{3, 30, 60, 120}), parse_velocity_grid("3, 30,60 ,120"));
    EXPECT_EQ((std::vector<double>{10, 20, 30}), parse_velocity_grid("10:30:10"));
    EXPECT_TRUE(parse_velocity_grid("").empty());
    EXPECT_THROW(parse_velocity_grid("1:5:0"), ConfigError);
}

//---------------------------------------------------------------------------//
TEST(SweepSpecTest, grid_invariants)
{
    auto spec = make_preset("fig7", ScenarioConfig{});
    EXPECT_NO_THROW(spec.check());

    auto bad = spec;
    bad.velocities_kmh.clear();
    try
    {
        bad.check();
        FAIL() << "empty grid accepted";
    }
    catch (ConfigError const& e)
    {
        EXPECT_EQ("velocities_kmh", e.key());
    }
    bad.velocities_kmh = {5, 5, 10};
    EXPECT_THROW(bad.check(), ConfigError);
    bad.velocities_kmh = {0, 5};
    EXPECT_THROW(bad.check(), ConfigError);
    bad = spec;
    bad.lte_sets = {{7, 480}};  // HOM beyond Q_in
    EXPECT_THROW(bad.check(), ConfigError);
    EXPECT_THROW(make_preset("fig10", ScenarioConfig{}), ConfigError);
    EXPECT_THROW(parse_sweep_policy("umts"), ConfigError);
    EXPECT_EQ(SweepPolicy::zeus_ext, parse_sweep_policy("zeus-ext"));
}

TEST(SweepSpecTest, presets)
{
    auto const f7 = make_preset("fig7", ScenarioConfig{});
    EXPECT_EQ(250, f7.scenarios.at(0).macro_pico_distance_m);
    EXPECT_EQ(4u, f7.lte_sets.size());
    EXPECT_EQ(24u, f7.velocities_kmh.size());
    EXPECT_EQ(75, make_preset("fig8", ScenarioConfig{}).scenarios.at(0).macro_pico_distance_m);
    auto const f9 = make_preset("fig9", ScenarioConfig{});
    EXPECT_EQ(125, f9.scenarios.at(0).macro_pico_distance_m);
    EXPECT_EQ(6u, f9.lte_sets.size());
}

TEST(SweepSpecTest, lte_offsets_unused_pair)
{
    auto const o = lte_offsets(HoOffsets{}, {1, 80});
    EXPECT_EQ(1, o.hom_in_db);
    EXPECT_EQ(-1, o.hom_out_db);
    EXPECT_NO_THROW(o.validate());
}

//---------------------------------------------------------------------------//
TEST(SweepTest, fig7_quoted_rows)
{
    auto spec = make_preset("fig7", ScenarioConfig{});
    auto const result = run_sweep(spec);
    EXPECT_EQ(24u * (4 + 2 + 2), result.rows.size());
    EXPECT_FALSE(result.validation);

    auto find = [&](SweepPolicy p, double hom, double v) -> SweepRow const& {
        for (auto const& r : result.rows)
        {
            bool const lte_480 = !r.ttt_ms || *r.ttt_ms == 480;
            if (r.policy == p && r.hom_db == hom && r.v_kmh == v && lte_480)
                return r;
        }
        throw std::runtime_error("row not found");
    };
    EXPECT_NEAR(0.17, find(SweepPolicy::lte, 2, 35).analytic.p_hof_mue_norm, 0.01);
    EXPECT_NEAR(0.80, find(SweepPolicy::lte, 2, 120).analytic.p_hof_mue_norm, 0.01);
    EXPECT_NEAR(0.52, find(SweepPolicy::lte, 2, 30).analytic.p_hof_pue_norm, 0.01);
    EXPECT_NEAR(0.03, find(SweepPolicy::lte, 2, 85).analytic.p_pp_norm, 0.01);
    EXPECT_NEAR(0.94, find(SweepPolicy::lte, 2, 120).analytic.p_pp_norm, 0.01);
    EXPECT_NEAR(0.21, find(SweepPolicy::zeus, 2, 120).analytic.p_pp_norm, 0.01);
    EXPECT_EQ(0.0, find(SweepPolicy::zeus_ext, 2, 120).analytic.p_pp);
}

TEST(SweepTest, csv_layout_and_stability)
{
    auto spec = make_preset("fig8", ScenarioConfig{});
    spec.policies = {SweepPolicy::lte, SweepPolicy::zeus};
    spec.velocities_kmh = {30, 60};
    spec.validate = true;
    spec.samples = 20'000;
    spec.workers = 2;
    auto const a = csv_of(spec);
    spec.workers = 1;
    EXPECT_EQ(a, csv_of(spec));

    std::istringstream lines(a);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(0u, header.find("policy,distance_m,hom_hop_db,hoe_db,ttt_ms,v_kmh,p_nho,"));
    EXPECT_NE(std::string::npos, header.find(",mc_agree"));
    std::string first;
    std::getline(lines, first);
    EXPECT_EQ(0u, first.find("lte,75,2,,480,30,")) << first;
    EXPECT_NE(std::string::npos, a.find("\n# validation points=12 checks=60 failures=0"));
}

TEST(SweepTest, config_driven_sweep)
{
    auto cfg = parse("[sweep]\nvelocities_kmh = 30, 60\nlte_sets = 2/480\nzeus_sets = 2/3\n");
    auto const spec = make_config_sweep(cfg);
    EXPECT_EQ(2u * 3, run_sweep(spec).rows.size());
}

//---------------------------------------------------------------------------//
TEST(Table4Test, cells)
{
    auto const scenarios = table4_scenarios(ScenarioConfig{});
    auto const rows = compute_table4(scenarios);
    ASSERT_EQ(13u, rows.size());
    EXPECT_NEAR(217.32, rows.front().cells[0].m2p, 0.05);
    EXPECT_NEAR(294.64, rows.front().cells[0].p2m, 0.05);
    EXPECT_NEAR(38.66, rows.front().cells[0].radius, 0.05);
    EXPECT_NEAR(71.18, rows.back().cells[2].m2p, 0.05);
    EXPECT_NEAR(79.26, rows.back().cells[2].p2m, 0.05);
    EXPECT_NEAR(4.04, rows.back().cells[2].radius, 0.05);
    // The 0 dB radius is the coverage circle used by the models
    auto const c = build_circle_set(scenarios[0], HoOffsets{});
    EXPECT_DOUBLE_EQ(c.big_r, rows[6].cells[0].radius);

    auto const csv = emit_table4(scenarios);
    EXPECT_EQ(0u, csv.find("rss_diff_db,m2p_250m,p2m_250m,radius_250m,m2p_125m"));
    EXPECT_NE(std::string::npos, csv.find("\n-8,217.32,294.64,38.66,108.90,146.88,18.99,"));
}

//---------------------------------------------------------------------------//
TEST(CliTest, exit_codes)
{
    EXPECT_EQ(0, run_cli("sweep --preset table4"));
    EXPECT_EQ(0, run_cli("sweep --preset fig7 --policies lte,zeus-ext"));
    EXPECT_EQ(0, run_cli("sweep --config " HETHO_PRESET_DIR "/lte_hetnet_250m.ini"));
    EXPECT_EQ(2, run_cli("sweep --preset fig99"));
    EXPECT_EQ(2, run_cli("sweep --preset fig7 --policies gsm"));
    EXPECT_EQ(2, run_cli("sweep --config /nonexistent.ini"));
    EXPECT_EQ(2, run_cli("sweep --preset fig7 --samples 0"));
    EXPECT_EQ(2, run_cli("nosuchcommand"));
}

TEST(CliTest, validation_and_output_file)
{
    std::string const path = testing::TempDir() + "hetho_fig7.csv";
    std::remove(path.c_str());
    EXPECT_EQ(0,
              run_cli("sweep --preset fig7 --policies zeus --validate --samples 50000 --out "
                      + path));
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_NE(std::string::npos, text.str().find("# validation points=48 checks=240 failures=0"));
}

TEST(ValidationSummaryTest, passed)
{
    ValidationSummary v;
    v.points = 1;
    v.checks = 5;
    EXPECT_TRUE(v.passed());
    v.failures = 1;
    EXPECT_FALSE(v.passed());
    v.failures = 0;
    v.zeus_hof_events = 1;
    EXPECT_FALSE(v.passed());
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace hetho
