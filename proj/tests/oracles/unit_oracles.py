#!/usr/bin/env python3
"""Reference values frozen into the unit and acceptance tests.

Each value is computed here independently of the C++ code path. Distances use
the chord-length identity d = 2R asin(|p - q| / 2) on unit vectors, not the
haversine formula, so they cross-check the production distance routine.
"""
import math

R = 6371.0


def chord_distance(a, b):
    def vec(p):
        la, lo = math.radians(p[0]), math.radians(p[1])
        return (math.cos(la) * math.cos(lo), math.cos(la) * math.sin(lo), math.sin(la))
    u, v = vec(a), vec(b)
    c = math.sqrt(sum((x - y) ** 2 for x, y in zip(u, v)))
    return 2.0 * R * math.asin(min(1.0, c / 2.0))


def segment(km, detour=95.0, edges=(1500.0, 4000.0), factors=(0.251, 0.195, 0.151)):
    if km == 0:
        return 0.0
    d = km + detour
    return d * factors[sum(1 for e in edges if d >= e)]


JFK = (40.6413, -73.7781)
LHR = (51.4700, -0.4543)

jfk_lhr = chord_distance(JFK, LHR)
print(f"antipodal          {math.pi * R!r}")
print(f"JFK-LHR km         {jfk_lhr!r}")
print(f"JFK-LHR round trip {2 * segment(jfk_lhr)!r}")
print(f"segment 1000       {segment(1000.0)!r}")
print(f"segment 5000       {segment(5000.0)!r}")
print(f"segment 2000       {segment(2000.0)!r}")

# BPS tie fixture: two US and two CN papers, travelers clustered near Beijing.
beijing, washington = (39.9042, 116.4074), (38.9072, -77.0369)
points = [(39.9042, 116.4074), (31.2304, 121.4737), (37.5665, 126.9780), (35.6762, 139.6503)]
print(f"tie S(CN)          {sum(chord_distance(beijing, p) for p in points)!r}")
print(f"tie S(US)          {sum(chord_distance(washington, p) for p in points)!r}")

# Two-submission micro case: affiliations in Berlin and Warsaw, candidate capitals.
capitals = {"DE": (52.5200, 13.4050), "PL": (52.2297, 21.0122), "FR": (48.8566, 2.3522), "CN": (39.9042, 116.4074)}
pair = [(52.5200, 13.4050), (52.2297, 21.0122)]
for code, loc in sorted(capitals.items()):
    print(f"pair S({code})           {sum(chord_distance(loc, p) for p in pair)!r}")
