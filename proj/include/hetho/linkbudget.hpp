#pragma once

#include <string>

namespace hetho
{
//---------------------------------------------------------------------------//
// RADIO SCENARIO
//---------------------------------------------------------------------------//
/*!
 * Affine log-distance path loss, \c intercept + slope * log10(d[km]) in dB.
 */
struct PathLossLaw
{
    double intercept_db{0};
    double slope_db{0};

    double at_km(double distance_km) const;
};

struct RadioLink
{
    double tx_power_dbm{0};
    double antenna_gain_dbi{0};
    PathLossLaw pathloss;
};

/*!
 * Physical-layer inputs of a single macro/pico pair.
 *
 * Distances exposed by this module are meters measured from the macro site
 * along the macro-pico axis. Path-loss laws consume kilometers internally.
 */
struct RadioScenario
{
    RadioLink macro;
    RadioLink pico;
    double min_pathloss_db{0};
    double macro_pico_distance_m{0};

    //! 3GPP HetNet calibration parameters (46/14 dBm/dBi macro, 30/5 pico)
    static RadioScenario lte_hetnet(double macro_pico_distance_m);

    //! Throws DomainError on a violated invariant
    void validate() const;
};

enum class Cell
{
    macro,
    pico
};

//! Received power: P_tx + G - max(PL(d), min path loss)
double rss_at(RadioScenario const& scenario, Cell cell, double distance_m);

//! Pico-minus-macro RSS at a point on the axis, x measured from the macro
double rss_diff_at(RadioScenario const& scenario, double x_m);

//---------------------------------------------------------------------------//
// BOUNDARIES AND CIRCLES
//---------------------------------------------------------------------------//
//! Boundary crossings on the macro-pico axis, as distances from the macro.
struct BoundaryPair
{
    double m2p{0};  //!< Crossing between macro and pico
    double p2m{0};  //!< Crossing beyond the pico
};

BoundaryPair boundary_distances(RadioScenario const& scenario, double rss_diff_db);

//! Concentric-circle approximation: half the distance between boundaries
double circle_radius(RadioScenario const& scenario, double rss_diff_db);

//! Inbound distance from HO trigger to PDCCH outage boundary
double ho_region_size(RadioScenario const& scenario,
                      double trigger_diff_db,
                      double outage_diff_db);

/*!
 * RSS_diff thresholds that define the model circles.
 *
 * Inbound thresholds are positive (pico stronger), outbound negative.
 */
struct HoOffsets
{
    double hom_in_db{2};
    double hom_out_db{-2};
    double hoe_in_db{3};
    double hoe_out_db{-3};
    double qin_in_db{6};
    double qin_out_db{-4};

    //! Strict ordering qin_in > hoe_in > hom_in > 0 > hom_out > hoe_out > qin_out
    void validate() const;
};

/*!
 * Radii of the concentric model circles around the pico site, in meters.
 *
 * Ordering r_m < r_me < r_mp < big_r < r_pp < r_pe < r_p holds for every
 * instance produced by build_circle_set.
 */
struct CircleSet
{
    double r_m{0};       //!< MUE HOF circle
    double r_me{0};      //!< MUE HOE circle (ZEUS)
    double r_mp{0};      //!< MUE HOM / HOP circle
    double big_r{0};     //!< Pico coverage (equal-RSS) circle
    double r_pp{0};      //!< PUE HOM / HOP circle
    double r_pe{0};      //!< PUE HOE circle (ZEUS)
    double r_p{0};       //!< PUE HOF circle
    double r_thresh{0};  //!< High-speed extension threshold radius

    //! Throws InconsistentOffsetsError unless strictly ordered and positive
    void validate() const;
};

CircleSet build_circle_set(RadioScenario const& scenario, HoOffsets const& offsets);

}  // namespace hetho
