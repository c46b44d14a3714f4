#!/usr/bin/env python3
"""Regenerate the planar Heegaard cellulation fixtures in this directory.

Each fixture is a sphere with 2g feet p_i^+, p_i^- (tube ends). Curves are
polylines; alpha/beta crossings and feet become vertices. Run from any
directory: python3 gen_fixtures.py
"""
import json
import math
import os

from shapely.geometry import LineString, Point
from shapely.ops import polygonize, unary_union

HERE = os.path.dirname(os.path.abspath(__file__))


def circle(cx, cy, r, n=96, phase=0.0137):
    return [(cx + r * math.cos(phase + 2 * math.pi * k / n),
             cy + r * math.sin(phase + 2 * math.pi * k / n)) for k in range(n)]


def key(p):
    return (round(p[0], 6), round(p[1], 6))


def build(name, genus, curves, feet, named, domains):
    geoms = {}
    for c in curves:
        pts = c["pts"] = [key(p) for p in c["pts"]]
        geoms[c["name"]] = LineString(pts + [pts[0]] if c["closed"] else pts)
    alphas = [c for c in curves if c["kind"] == "alpha"]
    betas = [c for c in curves if c["kind"] == "beta"]
    for group in (alphas, betas):
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                assert not geoms[group[i]["name"]].intersects(geoms[group[j]["name"]]), \
                    (name, group[i]["name"], group[j]["name"])

    crossings = []
    for a in alphas:
        for b in betas:
            inter = geoms[a["name"]].intersection(geoms[b["name"]])
            if inter.is_empty:
                continue
            pts = [inter] if isinstance(inter, Point) else list(getattr(inter, "geoms", []))
            for p in pts:
                assert isinstance(p, Point), (name, a["name"], b["name"], inter)
                crossings.append((key((p.x, p.y)), a["name"], b["name"]))
    crossings.sort()
    vid = {}
    vertices = []
    feet = [(key(a), key(b)) for a, b in feet]
    for i, (plus, minus) in enumerate(feet):
        for sgn, p in (("+", plus), ("-", minus)):
            vid[key(p)] = f"p{i + 1}{sgn}"
            vertices.append({"id": f"p{i + 1}{sgn}", "x": key(p)[0], "y": key(p)[1]})
    for k, (p, _a, _b) in enumerate(crossings):
        assert p not in vid, (name, p)
        vid[p] = f"v{k}"
        vertices.append({"id": f"v{k}", "x": p[0], "y": p[1]})

    edges = []
    for c in curves:
        g = geoms[c["name"]]
        coords = list(g.coords)
        cum = [0.0]
        for u, v in zip(coords, coords[1:]):
            cum.append(cum[-1] + math.dist(u, v))
        stops = []
        for p, ident in vid.items():
            d = g.distance(Point(p))
            if d < 1e-6:
                stops.append((g.project(Point(p)), ident, p))
        stops.sort()
        if not c["closed"]:
            assert stops[0][0] < 1e-9 and abs(stops[-1][0] - g.length) < 1e-9, (name, c["name"])
        total = g.length
        pieces = list(zip(stops, stops[1:]))
        if c["closed"]:
            pieces.append((stops[-1], (stops[0][0] + total, stops[0][1], stops[0][2])))
        for s, t in pieces:
            via = []
            for lap in (0.0, total) if c["closed"] else (0.0,):
                for q, cp in zip(cum[:-1] if c["closed"] else cum, coords):
                    if s[0] + 1e-9 < q + lap < t[0] - 1e-9:
                        via.append(list(key(cp)))
            edges.append({"id": f"e{len(edges)}", "curve": c["name"],
                          "from": s[1], "to": t[1], "via": via})

    faces = list(polygonize(unary_union(list(geoms.values()))))
    labels = {}
    for label, p in named.items():
        hits = [i for i, f in enumerate(faces) if f.contains(Point(p))]
        assert len(hits) == 1, (name, label, hits)
        labels[hits[0]] = (label, p)
    order = sorted(range(len(faces)),
                   key=lambda i: key(tuple(faces[i].representative_point().coords[0])))
    regions = []
    auto = 0
    for i in order:
        if i in labels:
            label, p = labels[i]
        else:
            label, p = f"r{auto}", faces[i].representative_point().coords[0]
            auto += 1
        regions.append({"id": label, "x": key(p)[0], "y": key(p)[1]})
    regions.sort(key=lambda r: r["id"])

    cell = {
        "name": name,
        "genus": genus,
        "vertices": vertices,
        "feet": [[f"p{i + 1}+", f"p{i + 1}-"] for i in range(len(feet))],
        "curves": [{"name": c["name"], "kind": c["kind"]} for c in curves],
        "edges": edges,
        "regions": regions,
    }
    with open(os.path.join(HERE, f"{name}.json"), "w") as fh:
        json.dump(cell, fh, indent=1)
        fh.write("\n")

    def nearest(p):
        return min(vid.items(), key=lambda kv: math.dist(kv[0], p))[1]

    all_regions = [r["id"] for r in regions] + ["inf"]
    for dname, dom in domains.items():
        mult = dict(dom.get("mult", {}))
        if dom.get("sigma"):
            mult = {r: dom["sigma"] for r in all_regions}
        out = {
            "cellulation": f"{name}.json",
            "name": dname,
            "multiplicity": mult,
            "y": sorted(nearest(p) for p in dom["y"]),
            "z": sorted(nearest(p) for p in dom["z"]),
        }
        if "corners" in dom:
            out["corners"] = [{"vertex": nearest(p), "role": role, "type": t}
                              for p, role, t in dom["corners"]]
        if "expect" in dom:
            out["expect"] = dom["expect"]
        with open(os.path.join(HERE, f"{name}.{dname}.json"), "w") as fh:
            json.dump(out, fh, indent=1)
            fh.write("\n")


def genus1():
    s3 = math.sqrt(3)
    curves = [
        {"name": "a1", "kind": "alpha", "closed": True, "pts": circle(0, 0, 2)},
        {"name": "b1", "kind": "beta", "closed": False,
         "pts": [(0, 0), (3, 0), (3, 1), (1, 1), (1, 2.5), (5, 2.5)]},
    ]
    feet = [((0, 0), (5, 2.5))]
    named = {"B": (1.2, 1.2), "R": (2.5, 0.5), "I": (-0.5, -0.5)}
    y0, y1 = (s3, 1), (1, s3)
    domains = {
        "bigon": {"mult": {"B": 1}, "y": [y0], "z": [y1],
                  "corners": [(y0, "y", "a"), (y1, "z", "a")],
                  "expect": {"maslov": 1, "euler": 1, "verdict": "disk_diff"}},
        "trivial": {"mult": {}, "y": [(2, 0)], "z": [(2, 0)],
                    "corners": [((2, 0), "y", "d"), ((2, 0), "z", "d")],
                    "expect": {"maslov": 0, "euler": 0, "diagonal": 0}},
        "sigma": {"sigma": 1, "y": [(2, 0)], "z": [(2, 0)],
                  "expect": {"maslov": 2, "diagonal": 2}},
    }
    build("genus1", 1, curves, feet, named, domains)


def genus2():
    h = math.sqrt(4 - 0.25)
    curves = [
        {"name": "a1", "kind": "alpha", "closed": True, "pts": circle(0, 0, 2)},
        {"name": "a2", "kind": "alpha", "closed": True, "pts": circle(6, 0, 2)},
        {"name": "b1", "kind": "beta", "closed": False,
         "pts": [(0, 0), (0, 0.5), (9, 0.5), (9, -1.2), (7, -1.2), (7, -3), (10, -3)]},
        {"name": "b2", "kind": "beta", "closed": False,
         "pts": [(6, 0), (6, -0.5), (-3, -0.5), (-3, 1.2), (-1, 1.2), (-1, 3), (-4, 3)]},
    ]
    feet = [((0, 0), (10, -3)), ((6, 0), (-4, 3))]
    named = {"S": (3, 0), "B1": (8.6, -0.3), "B2": (-2.5, 0.5)}
    b1 = [(6 + h, 0.5), (7.6, -1.2)]
    b2 = [(-h, -0.5), (-1.6, 1.2)]
    sy = [(h, 0.5), (6 - h, -0.5)]
    sz = [(6 - h, 0.5), (h, -0.5)]
    domains = {
        "square": {"mult": {"S": 1}, "y": sy, "z": sz,
                   "corners": [(p, "y", "a") for p in sy] + [(p, "z", "a") for p in sz],
                   "expect": {"maslov": 1, "euler": 1, "writhe": 1, "verdict": "disk_diff"}},
        "twobigons": {"mult": {"B1": 1, "B2": 1}, "y": [b1[0], b2[0]], "z": [b1[1], b2[1]],
                      "expect": {"maslov": 2, "euler": 2, "verdict": "decomposable"}},
        "sigma": {"sigma": 1, "y": sy, "z": sy, "expect": {"maslov": 2, "diagonal": 6}},
    }
    build("genus2", 2, curves, feet, named, domains)


def genus3():
    d = 1.2

    def frame(j, u, s):
        phi = math.radians(90 + 120 * j + 60)
        uu = (math.cos(phi), math.sin(phi))
        ww = (-uu[1], uu[0])
        return (u * uu[0] + s * ww[0], u * uu[1] + s * ww[1])

    curves = []
    feet = []
    for j in range(3):
        th = math.radians(90 + 120 * j)
        curves.append({"name": f"a{j + 1}", "kind": "alpha", "closed": True,
                       "pts": circle(3 * math.cos(th), 3 * math.sin(th), 2)})
    for j in range(3):
        pts = [frame(j, d, -1.5), frame(j, d, 1.3), frame(j, 4.0, 1.3)]
        curves.append({"name": f"b{j + 1}", "kind": "beta", "closed": False, "pts": pts})
        feet.append((pts[0], pts[-1]))
    exits = [frame(j, d, -0.621) for j in range(3)]
    entries = [frame(j, d, 0.621) for j in range(3)]
    named = {"H": (0, 0)}
    domains = {
        "hexagon": {"mult": {"H": 1}, "y": entries, "z": exits,
                    "corners": [(p, "y", "a") for p in entries] + [(p, "z", "a") for p in exits],
                    "expect": {"maslov": 1, "euler": 1, "writhe": 2, "verdict": "disk_diff"}},
        "sigma": {"sigma": 1, "y": entries, "z": entries, "expect": {"maslov": 2, "diagonal": 10}},
    }
    build("genus3", 3, curves, feet, named, domains)


def thin():
    curves = [
        {"name": "a1", "kind": "alpha", "closed": True, "pts": circle(0, 0, 1.5)},
        {"name": "a2", "kind": "alpha", "closed": True, "pts": circle(6, 0, 2)},
        {"name": "b1", "kind": "beta", "closed": False,
         "pts": [(0, 0), (2.5, 0), (2.5, 3), (6.8, 3), (6.8, -1), (3.6, -1)]},
        {"name": "b2", "kind": "beta", "closed": False,
         "pts": [(6, 0), (3, 0), (3, -1.5), (5, -1.5), (5, -4)]},
    ]
    feet = [((0, 0), (3.6, -1)), ((6, 0), (5, -4))]
    named = {"A1": (-0.5, 0.5), "B": (3.4, -0.4)}
    x1 = (1.5, 0)
    ya, yb = (4, 0), (6 - math.sqrt(4 - 2.25), -1.5)
    domains = {
        "annulus": {"mult": {"A1": 1, "B": 1}, "y": [x1, yb], "z": [x1, ya],
                    "corners": [(x1, "y", "c"), (x1, "z", "c"), (yb, "y", "a"), (ya, "z", "a")],
                    "expect": {"maslov": 1, "euler": 0, "writhe": 0, "verdict": "annular_diff"}},
        "sigma": {"sigma": 1, "y": [x1, yb], "z": [x1, yb], "expect": {"maslov": 2, "diagonal": 6}},
    }
    build("thin", 2, curves, feet, named, domains)


if __name__ == "__main__":
    genus1()
    genus2()
    genus3()
    thin()
