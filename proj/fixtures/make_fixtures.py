#!/usr/bin/env python3
"""Regenerates the fixture graphs from straight-line sketches.

Each fixture is drawn once with coordinates; the rotation system is read off
by sorting neighbors by angle. The coordinates are not stored in the files.
"""
import math
import pathlib

HERE = pathlib.Path(__file__).resolve().parent


def rotation(points, edges):
    nbrs = {v: [] for v in range(len(points))}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rot = []
    for v, (x, y) in enumerate(points):
        rot.append(sorted(nbrs[v], key=lambda u: math.atan2(points[u][1] - y, points[u][0] - x)))
    return rot


def write_graph(name, points, edges, suspensions, outer, faa=(), comment=""):
    write_rotation(name, rotation(points, edges), suspensions, outer, faa, comment)


def write_rotation(name, rot, suspensions, outer, faa=(), comment=""):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append("sltr-graph 1")
    lines.append(f"vertices {len(rot)}")
    for v, r in enumerate(rot):
        lines.append(f"rotation {v} : " + " ".join(map(str, r)))
    lines.append("suspensions " + " ".join(map(str, suspensions)))
    lines.append(f"outer {outer[0]} {outer[1]}")
    for v, walk in faa:
        lines.append(f"assign {v} : " + " ".join(map(str, walk)))
    lines.append("end")
    (HERE / f"{name}.graph").write_text("\n".join(lines) + "\n")


def write_arrangement(name, points, segments, comment=""):
    edges = sorted({(min(a, b), max(a, b)) for path in segments for a, b in zip(path, path[1:])})
    rot = rotation(points, edges)
    # The lowest vertex lies on the outer face; leave it along the neighbor
    # that keeps the outside on the left.
    v = min(range(len(points)), key=lambda i: (points[i][1], points[i][0]))
    u = max(rot[v], key=lambda w: math.atan2(points[w][1] - points[v][1], points[w][0] - points[v][0]) % (2 * math.pi))
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append("sltr-arrangement 1")
    lines.append(f"vertices {len(rot)}")
    for w, r in enumerate(rot):
        lines.append(f"rotation {w} : " + " ".join(map(str, r)))
    lines.append(f"outer {v} {u}")
    for i, path in enumerate(segments):
        ids = [edges.index((min(a, b), max(a, b))) for a, b in zip(path, path[1:])]
        lines.append(f"segment {i} : " + " ".join(map(str, ids)))
    lines.append("end")
    (HERE / f"{name}.arr").write_text("\n".join(lines) + "\n")


def cycle(ids):
    return [(ids[i], ids[(i + 1) % len(ids)]) for i in range(len(ids))]


def polygon(k, r, phase=math.pi / 2):
    return [(r * math.cos(phase + 2 * math.pi * i / k), r * math.sin(phase + 2 * math.pi * i / k)) for i in range(k)]


def main():
    write_graph("k4", [(0, 0), (4, 0), (2, 4), (2, 1.5)],
                [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)], (0, 1, 2), (1, 0), comment="tetrahedron")

    write_graph("octahedron", [(0, 0), (6, 0), (3, 6), (3, 1), (4, 3), (2, 3)],
                cycle([0, 1, 2]) + cycle([3, 4, 5]) + [(0, 3), (0, 5), (1, 3), (1, 4), (2, 4), (2, 5)],
                (0, 1, 2), (1, 0))

    write_graph("prism", [(0, 0), (6, 0), (3, 6), (3, 1.5), (4.2, 3.5), (1.8, 3.5)],
                cycle([0, 1, 2]) + cycle([3, 4, 5]) + [(0, 3), (1, 4), (2, 5)], (0, 1, 2), (1, 0),
                comment="triangular prism, outer face a triangle")

    write_graph("cube", [(0, 0), (6, 0), (6, 6), (0, 6), (2, 2), (4, 2), (4, 4), (2, 4)],
                cycle([0, 1, 2, 3]) + cycle([4, 5, 6, 7]) + [(i, i + 4) for i in range(4)], (0, 1, 2), (1, 0))

    outer5 = polygon(5, 6)
    inner5 = polygon(5, 2)
    write_graph("pentagonal_prism", outer5 + inner5,
                cycle(list(range(5))) + cycle(list(range(5, 10))) + [(i, i + 5) for i in range(5)], (0, 2, 3), (1, 0))

    write_graph("wheel5", polygon(5, 5) + [(0.0, 0.0)], cycle(list(range(5))) + [(i, 5) for i in range(5)],
                (0, 1, 3), (1, 0), comment="wheel W5: hub 5, rim 0..4")

    # Triangular prism drawn with a quadrilateral outer face. Of its two
    # assignments one has an outline cycle with only two convex corners.
    write_graph("prism_quad", [(0, 0), (6, 0), (6, 6), (0, 6), (3, 2), (3, 4)],
                [(0, 1), (1, 4), (4, 0), (3, 2), (2, 5), (5, 3), (0, 3), (1, 2), (4, 5)], (0, 1, 2), (1, 0),
                comment="prism with quadrilateral outer face; admits a bad assignment")

    # Seven vertices, found by random search; one of its four assignments is bad.
    write_rotation("bad7", [[2, 4, 6, 5], [2, 5, 6], [4, 0, 1, 3], [4, 2, 6], [0, 2, 3], [0, 6, 1], [3, 1, 5, 0]],
                   (0, 6, 3), (0, 4), comment="admits a bad assignment")


    # Three segments around a triangle, each passing one corner and ending
    # on the next, free ends outside; a chord and a dangling segment inside.
    pinwheel = [(0, 0), (10, 0), (5, 8), (-3, 0), (12.5, -4), (7.5, 12), (5, 0), (7.5, 4), (2.5, 4), (4, 3)]
    write_arrangement("stretchable", pinwheel, [[3, 0, 6, 1], [4, 1, 7, 2], [5, 2, 8, 0], [6, 7], [8, 9]],
                      comment="pinwheel with a chord and a dangling segment")
    # Same pinwheel with the free end of the first segment bent into the
    # triangle: the three segments have only two extremal points.
    twisted = [(0, 0), (10, 0), (5, 8), (3, 2), (12.5, -4), (7.5, 12)]
    write_arrangement("not_stretchable", twisted, [[3, 0, 1], [4, 1, 2], [5, 2, 0]],
                      comment="pinwheel with one free end turned inside")


if __name__ == "__main__":
    main()
