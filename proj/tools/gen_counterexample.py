#!/usr/bin/env python3
"""Generates the piecewise-affine stage data (b, l, r) for the `bad_inv_nofd`
gallery map and verifies its degree/topology properties numerically.

The map is a composition f = r . l . b . k on [-2,2]^2:
  k  cube cavitation in three squares (analytic, implemented in C++)
  b  bi-Lipschitz rearrangement taking the squares onto strips of a staging
     triangle; one boundary segment of the unit-scale cube rides an arch
     through the squeeze corridor (piecewise affine, orientation preserving)
  l  horizontal squeeze taking the staging triangle onto a rotated square;
     the corridor west of the triangle collapses onto the left boundary arc
     (piecewise affine, Lipschitz only)
  r  three-fold horizontal stretch of the rotated square onto itself,
     orientation-reversing on the middle strip (piecewise affine)

Running this script rewrites data/bad_inv_{b,l,r}.pwa2 and
src/bad_inv_data.inl, then re-verifies the construction.
"""

import sys
import numpy as np
from shapely.geometry import Polygon, LineString, Point

OUT_DATA = sys.argv[1] if len(sys.argv) > 1 else "data"
OUT_SRC = sys.argv[2] if len(sys.argv) > 2 else "src"

# ---------------------------------------------------------------- geometry

def tri_area2(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

def affine_from_tri(src, img):
    s = np.array(src, float)
    i = np.array(img, float)
    Ms = np.column_stack([s[1] - s[0], s[2] - s[0]])
    Mi = np.column_stack([i[1] - i[0], i[2] - i[0]])
    A = Mi @ np.linalg.inv(Ms)
    b = i[0] - A @ s[0]
    return A, b


class Piece:
    def __init__(self, poly, A, b, tag=""):
        pts = [tuple(map(float, p)) for p in poly]
        if Polygon(pts).exterior.is_ccw is False:
            pts = pts[::-1]
        self.poly = pts
        self.A = np.array(A, float)
        self.b = np.array(b, float)
        self.tag = tag
        self.shp = Polygon(self.poly)

    def apply(self, p):
        return self.A @ np.asarray(p, float) + self.b


def tri_piece(src, img, tag=""):
    if abs(tri_area2(*src)) < 1e-15:
        raise RuntimeError(f"degenerate source triangle {src}")
    if tri_area2(*src) < 0:
        src = (src[0], src[2], src[1])
        img = (img[0], img[2], img[1])
    A, b = affine_from_tri(src, img)
    return Piece(src, A, b, tag)


def id_piece(poly, tag="id"):
    return Piece(poly, np.eye(2), np.zeros(2), tag)


# ------------------------------------------- compatible triangulation

def _diag_ok(shp, pts, i, j):
    d = LineString([pts[i], pts[j]])
    if d.length < 1e-12:
        return False
    if not shp.covers(d):
        return False
    inter = d.intersection(shp.exterior)
    if inter.geom_type != "MultiPoint" or len(inter.geoms) != 2:
        return False
    return True


def _steiner_candidates(shp, a, b):
    """interior points p with segments a-p and p-b strictly inside shp"""
    minx, miny, maxx, maxy = shp.bounds
    out = []
    for gx in np.linspace(minx, maxx, 24):
        for gy in np.linspace(miny, maxy, 24):
            p = (gx, gy)
            pt = Point(p)
            if not shp.contains(pt):
                continue
            clear = shp.exterior.distance(pt)
            if clear < 1e-4:
                continue
            ok = True
            for e in (a, b):
                seg = LineString([e, p])
                if not shp.covers(seg):
                    ok = False
                    break
                inter = seg.intersection(shp.exterior)
                if not (inter.geom_type == "Point"
                        and inter.distance(Point(e)) < 1e-12):
                    ok = False
                    break
            if ok:
                out.append((clear, p))
    out.sort(key=lambda t: -t[0])
    return [p for _, p in out]


def compat_triangulate(src, img, depth=0, budget=None):
    n = len(src)
    assert n == len(img)
    if budget is None:
        budget = [3 * n + 40]
    if n == 3:
        if tri_area2(*src) <= 1e-14 or tri_area2(*img) <= 1e-14:
            raise RuntimeError("degenerate/negative triangle")
        return [(list(src), list(img))]
    ps, pi = Polygon(src), Polygon(img)
    shared, img_only, src_only = [], [], []
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            so = _diag_ok(ps, src, i, j)
            io = _diag_ok(pi, img, i, j)
            q = min(j - i, n - (j - i))
            if so and io:
                shared.append((q, LineString([img[i], img[j]]).length, i, j))
            elif io:
                img_only.append((q, i, j))
            elif so:
                src_only.append((q, i, j))
    shared.sort(key=lambda t: (-t[0], t[1]))
    for _, _, i, j in shared[:10]:
        try:
            left = compat_triangulate(src[i:j + 1], img[i:j + 1],
                                      depth + 1, budget)
            right = compat_triangulate(src[j:] + src[:i + 1],
                                       img[j:] + img[:i + 1],
                                       depth + 1, budget)
            return left + right
        except RuntimeError:
            continue
    # no shared diagonal: cut one polygon along a diagonal and route the
    # other through a matched interior Steiner point
    img_only.sort(key=lambda t: -t[0])
    src_only.sort(key=lambda t: -t[0])
    options = [(i, j, True) for _, i, j in img_only[:8]] + \
              [(i, j, False) for _, i, j in src_only[:8]]
    for i, j, img_diag in options:
        if budget[0] <= 0:
            break
        whole, other = (pi, ps) if img_diag else (ps, pi)
        wpts, opts_ = (img, src) if img_diag else (src, img)
        mid = ((wpts[i][0] + wpts[j][0]) / 2, (wpts[i][1] + wpts[j][1]) / 2)
        for p in _steiner_candidates(other, opts_[i], opts_[j])[:6]:
            budget[0] -= 1
            if img_diag:
                s1 = src[i:j + 1] + [p]; i1 = img[i:j + 1] + [mid]
                s2 = src[j:] + src[:i + 1] + [p]
                i2 = img[j:] + img[:i + 1] + [mid]
            else:
                s1 = src[i:j + 1] + [mid]; i1 = img[i:j + 1] + [p]
                s2 = src[j:] + src[:i + 1] + [mid]
                i2 = img[j:] + img[:i + 1] + [p]
            try:
                left = compat_triangulate(s1, i1, depth + 1, budget)
                right = compat_triangulate(s2, i2, depth + 1, budget)
                return left + right
            except RuntimeError:
                continue
    raise RuntimeError(f"no compatible diagonal for n={n} at depth {depth}")


# ---------------------------------------------------------------- stage b

A_ = (-0.5, 0.5); H_ = (0.0, 0.5); B_ = (0.5, 0.5); C_ = (0.5, 1.0)
D_ = (0.0, 1.0); E3_ = (0.0, 1.5); F_ = (-0.5, 1.5); G_ = (-0.5, 1.0)
RM1 = (-0.85, 0.4); RM2 = (0.85, 0.4); RM3 = (0.85, 1.9); RM4 = (-0.85, 1.9)
gE = (-0.85, 1.0); cE = (0.85, 1.0)

A2 = (0.0, 1.2); P3 = (1.0 / 6.0, 1.2); E0 = (0.5, 1.2); VR2 = (0.25, 1.5)
N_ = (0.0, 1.8); VL2 = (-0.25, 1.5); W0 = (-0.5, 1.2); P2 = (-1.0 / 6.0, 1.2)

# the arch ridden by the boundary segment [G,gE]; its upper part lies in the
# squeeze corridor of stage l and lands exactly on the left boundary arc
ARCH = [
    (-0.52, 1.15), (-0.56, 1.30), (-0.45, 1.60), (-0.38, 1.795),
    (-0.52, 1.795), (-0.62, 1.60), (-0.72, 1.30), (-0.775, 1.21),
]
NA = len(ARCH)
SRC_ARCH = [(-0.5 - 0.35 * (i + 1) / (NA + 1), 1.0) for i in range(NA)]


def build_b():
    pieces = []
    inner = [
        ((A_, H_, D_), (A2, P3, N_)),
        ((A_, D_, G_), (A2, N_, P2)),
        ((H_, B_, C_), (P3, E0, VR2)),
        ((H_, C_, D_), (P3, VR2, N_)),
        ((D_, E3_, G_), (N_, VL2, P2)),
        ((E3_, F_, G_), (VL2, W0, P2)),
    ]
    for s, i in inner:
        pieces.append(tri_piece(s, i, "inner"))

    regions = []
    # south belt
    regions.append((
        [A_, RM1, RM2, B_, H_],
        [A2, RM1, RM2, E0, P3]))
    # east-low corner
    regions.append((
        [B_, RM2, cE, C_],
        [E0, RM2, cE, VR2]))
    # under-arch region
    regions.append((
        [G_] + SRC_ARCH + [gE, RM1, A_],
        [P2] + ARCH + [gE, RM1, A2]))
    # north-west belt
    wall_top = [(0.4, 1.9), (-0.2, 1.9), (-0.6, 1.9)]
    wall_west = [(-0.85, 1.55)]
    regions.append((
        [C_, cE, RM3] + wall_top + [RM4] + wall_west + [gE]
        + SRC_ARCH[::-1] + [G_, F_, E3_, D_],
        [VR2, cE, RM3] + wall_top + [RM4] + wall_west + [gE]
        + ARCH[::-1] + [P2, W0, VL2, N_]))

    for src, img in regions:
        for s, i in compat_triangulate(src, img):
            pieces.append(tri_piece(s, i, "ring"))

    # identity outside [-0.85,0.85]x[0.4,1.9]
    pieces.append(id_piece([(-2, -2), (2, -2), (2, 0.4), (-2, 0.4)]))
    pieces.append(id_piece([(-2, 1.9), (2, 1.9), (2, 2), (-2, 2)]))
    pieces.append(id_piece([(-2, 0.4), (-0.85, 0.4), (-0.85, 1.9), (-2, 1.9)]))
    pieces.append(id_piece([(0.85, 0.4), (2, 0.4), (2, 1.9), (0.85, 1.9)]))
    return pieces


# ---------------------------------------------------------------- stage l

S_ = (0.0, 1.2); W_ = (-0.3, 1.5); E_ = (0.3, 1.5)
ML = (-0.1, 1.5); MR = (0.1, 1.5)
VL1 = (-1.0 / 12.0, 1.5); VR1 = (1.0 / 12.0, 1.5)
K1 = (-0.8, 1.1); K2 = (0.8, 1.1); K3 = (0.8, 1.9); K4 = (-0.8, 1.9)
CW = -0.79      # west edge of the squeeze corridor


def build_l():
    cw12, cw15, cw18 = (CW, 1.2), (CW, 1.5), (CW, 1.8)
    kw12, kw15, kw18 = (-0.8, 1.2), (-0.8, 1.5), (-0.8, 1.8)
    tris = [
        # left strip of the staging triangle onto the left quarter
        ((W0, P2, VL1), (S_, S_, ML)),
        ((W0, VL1, VL2), (S_, ML, W_)),
        ((VL2, VL1, N_), (W_, ML, N_)),
        # middle strip onto the thin middle quad
        ((P2, A2, VL1), (S_, S_, ML)),
        ((A2, P3, VR1), (S_, S_, MR)),
        ((A2, VR1, VL1), (S_, MR, ML)),
        ((VL1, VR1, N_), (ML, MR, N_)),
        # right strip
        ((P3, E0, VR1), (S_, S_, MR)),
        ((E0, VR2, VR1), (S_, E_, MR)),
        ((VR1, VR2, N_), (MR, E_, N_)),
        # squeeze corridor collapsing onto the left boundary arc
        ((cw12, W0, VL2), (S_, S_, W_)),
        ((cw12, VL2, cw15), (S_, W_, W_)),
        ((cw15, VL2, N_), (W_, W_, N_)),
        ((cw15, N_, cw18), (W_, N_, N_)),
        # thin transition strip to the west wall of the support box
        ((kw12, cw12, cw15), (kw12, S_, W_)),
        ((kw12, cw15, kw15), (kw12, W_, kw15)),
        ((kw15, cw15, cw18), (kw15, W_, N_)),
        ((kw15, cw18, kw18), (kw15, N_, kw18)),
        # north band
        ((kw18, cw18, K4), (kw18, N_, K4)),
        ((cw18, N_, K4), (N_, N_, K4)),
        ((N_, K3, K4), (N_, K3, K4)),
        # east ring
        ((E0, K2, VR2), (S_, K2, E_)),
        ((VR2, K2, K3), (E_, K2, K3)),
        ((VR2, K3, N_), (E_, K3, N_)),
        # bottom ladder interpolating the collapse of the base edge
        ((kw12, K1, (CW, 1.1)), (kw12, K1, (CW, 1.1))),
        ((kw12, (CW, 1.1), cw12), (kw12, (CW, 1.1), S_)),
        ((cw12, (CW, 1.1), (-0.5, 1.1)), (S_, (CW, 1.1), (-0.5, 1.1))),
        ((cw12, (-0.5, 1.1), W0), (S_, (-0.5, 1.1), S_)),
        ((W0, (-0.5, 1.1), (-1 / 6, 1.1)), (S_, (-0.5, 1.1), (-1 / 6, 1.1))),
        ((W0, (-1 / 6, 1.1), P2), (S_, (-1 / 6, 1.1), S_)),
        ((P2, (-1 / 6, 1.1), (0, 1.1)), (S_, (-1 / 6, 1.1), (0, 1.1))),
        ((P2, (0, 1.1), A2), (S_, (0, 1.1), S_)),
        ((A2, (0, 1.1), (1 / 6, 1.1)), (S_, (0, 1.1), (1 / 6, 1.1))),
        ((A2, (1 / 6, 1.1), P3), (S_, (1 / 6, 1.1), S_)),
        ((P3, (1 / 6, 1.1), (0.5, 1.1)), (S_, (1 / 6, 1.1), (0.5, 1.1))),
        ((P3, (0.5, 1.1), E0), (S_, (0.5, 1.1), S_)),
        ((E0, (0.5, 1.1), K2), (S_, (0.5, 1.1), K2)),
    ]
    pieces = []
    for s, i in tris:
        if abs(tri_area2(*s)) < 1e-15:
            raise RuntimeError(f"degenerate l source {s}")
        if tri_area2(*s) < 0:
            s = (s[0], s[2], s[1]); i = (i[0], i[2], i[1])
        A, b = affine_from_tri(s, i)
        pieces.append(Piece(s, A, b, "l"))
    pieces.append(id_piece([(-2, -2), (2, -2), (2, 1.1), (-2, 1.1)]))
    pieces.append(id_piece([(-2, 1.9), (2, 1.9), (2, 2), (-2, 2)]))
    pieces.append(id_piece([(-2, 1.1), (-0.8, 1.1), (-0.8, 1.9), (-2, 1.9)]))
    pieces.append(id_piece([(0.8, 1.1), (2, 1.1), (2, 1.9), (0.8, 1.9)]))
    return pieces


# ---------------------------------------------------------------- stage r

def build_r():
    tris = [
        ((S_, W_, ML), (S_, W_, E_)),
        ((W_, N_, ML), (W_, N_, E_)),
        ((S_, ML, MR), (S_, E_, W_)),   # orientation reversing
        ((ML, N_, MR), (E_, N_, W_)),   # orientation reversing
        ((S_, MR, E_), (S_, W_, E_)),
        ((MR, N_, E_), (W_, N_, E_)),
    ]
    pieces = []
    for s, i in tris:
        A, b = affine_from_tri(s, i)
        pieces.append(Piece(s, A, b, "r"))
    pieces.append(id_piece([(0, -2), (2, -2), (2, 1.5), (0.3, 1.5), (0, 1.2)]))
    pieces.append(id_piece([(0, 1.8), (0.3, 1.5), (2, 1.5), (2, 2), (0, 2)]))
    pieces.append(id_piece([(0, 1.8), (0, 2), (-2, 2), (-2, 1.5), (-0.3, 1.5)]))
    pieces.append(id_piece([(0, 1.2), (-0.3, 1.5), (-2, 1.5), (-2, -2), (0, -2)]))
    return pieces


# ---------------------------------------------------------------- stage k

SQUARES = [((-0.25, 0.75), 0.25), ((0.25, 0.75), 0.25), ((-0.25, 1.25), 0.25)]

def k_eval(p):
    p = np.asarray(p, float)
    for c, r in SQUARES:
        d = p - c
        s = max(abs(d[0]), abs(d[1]))
        if s < r:
            if s == 0.0:
                return np.array(c) + (r, 0.0)
            return np.array(c) + r * d / s
    return p


# ---------------------------------------------------------------- pwa eval

class PWA:
    def __init__(self, pieces):
        self.pieces = pieces
        from shapely.strtree import STRtree
        self.tree = STRtree([pc.shp for pc in pieces])

    def locate(self, p, tol=1e-9):
        pt = Point(p)
        idx = self.tree.query(pt.buffer(tol))
        return [i for i in idx if self.pieces[i].shp.distance(pt) <= tol]

    def apply(self, p):
        hits = self.locate(p)
        if not hits:
            raise RuntimeError(f"point {p} not covered")
        return self.pieces[hits[0]].apply(p)


def verify_stage(name, pw, allow_rank1=False):
    area = sum(pc.shp.area for pc in pw.pieces)
    assert abs(area - 16.0) < 1e-7, f"{name}: tiling area {area}"
    rng = np.random.default_rng(7)
    pts = rng.uniform(-2, 2, size=(3000, 2))
    for p in pts:
        hits = pw.locate(p, tol=1e-12)
        assert len(hits) >= 1, f"{name}: uncovered {p}"
        vals = [pw.pieces[i].apply(p) for i in hits]
        for v in vals[1:]:
            assert np.allclose(v, vals[0], atol=1e-9), \
                f"{name}: discontinuity at {p}: {vals}"
    for i, pc in enumerate(pw.pieces):
        ring = pc.poly
        for a, b in zip(ring, ring[1:] + ring[:1]):
            for t in (0.21, 0.5, 0.83):
                q = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
                hits = pw.locate(q, tol=1e-9)
                vals = [pw.pieces[h].apply(q) for h in hits]
                for v in vals[1:]:
                    assert np.allclose(v, vals[0], atol=1e-8), \
                        f"{name}: edge mismatch at {q} pieces {hits}"
    n_rank1 = 0
    for pc in pw.pieces:
        det = np.linalg.det(pc.A)
        if pc.tag == "r" and det < 0:
            continue
        if abs(det) < 1e-12:
            n_rank1 += 1
            assert allow_rank1, f"{name}: unexpected rank-1 piece {pc.poly}"
        else:
            assert det > 0, f"{name}: negative det {det} poly={pc.poly}"
    print(f"  {name}: {len(pw.pieces)} pieces ok ({n_rank1} rank-deficient)")


# ------------------------------------------------------------- winding / inv

def loop_of(fmap, poly_pts, samples_per_edge=220):
    pts = []
    m = len(poly_pts)
    for i in range(m):
        a = np.array(poly_pts[i]); b = np.array(poly_pts[(i + 1) % m])
        for t in np.linspace(0, 1, samples_per_edge, endpoint=False):
            pts.append(fmap(a + t * (b - a)))
    pts.append(pts[0])
    return np.array(pts)


def winding(loop, y):
    v = loop - np.asarray(y)
    ang = np.arctan2(v[:, 1], v[:, 0])
    d = np.diff(ang)
    d = (d + np.pi) % (2 * np.pi) - np.pi
    return d.sum() / (2 * np.pi)


def seg_dist(loop, ys):
    a = loop[:-1]; b = loop[1:]
    ab = b - a
    den = (ab ** 2).sum(1)
    den[den == 0] = 1.0
    out = np.empty(len(ys))
    for k, y in enumerate(ys):
        ap = y - a
        t = np.clip((ap * ab).sum(1) / den, 0, 1)
        proj = a + t[:, None] * ab
        out[k] = np.sqrt(((proj - y) ** 2).sum(1).min())
    return out


def cube_poly(c, r):
    return [(c[0] - r, c[1] - r), (c[0] + r, c[1] - r),
            (c[0] + r, c[1] + r), (c[0] - r, c[1] + r)]


def check_inv_cube(fmap, c, r, tol=0.02, n=52):
    loop = loop_of(fmap, cube_poly(c, r), 420)
    ins, outs = [], []
    for x in np.linspace(c[0] - r, c[0] + r, n):
        for y in np.linspace(c[1] - r, c[1] + r, n):
            ins.append((x, y))
    for x in np.linspace(-1.98, 1.98, 64):
        for y in np.linspace(-1.98, 1.98, 64):
            if max(abs(x - c[0]), abs(y - c[1])) > r * 1.001:
                outs.append((x, y))
    fi = np.array([fmap(p) for p in ins])
    fo = np.array([fmap(p) for p in outs])
    di = seg_dist(loop, fi)
    do = seg_dist(loop, fo)
    vin = sum(1 for y, d in zip(fi, di)
              if d > tol and round(winding(loop, y)) == 0)
    vout = sum(1 for y, d in zip(fo, do)
               if d > tol and round(winding(loop, y)) != 0)
    tot = len(ins) + len(outs)
    return vin, vout, len(ins), len(outs), (vin + vout) / tot


def diamond_lattice(margin, k=8):
    pts = []
    for x in np.linspace(-0.3, 0.3, 3 * k):
        for y in np.linspace(1.2, 1.8, 3 * k):
            if abs(x) / 0.3 + abs(y - 1.5) / 0.3 < 1.0 - margin:
                pts.append((x, y))
    return pts


# ---------------------------------------------------------------- emission

def emit_pwa2(path, pieces):
    with open(path, "w") as f:
        f.write("PWA2 v1\n")
        f.write(f"pieces {len(pieces)}\n")
        for pc in pieces:
            f.write(f"piece {len(pc.poly)}\n")
            for x, y in pc.poly:
                f.write(f"{x:.17g} {y:.17g}\n")
            f.write("matrix {:.17g} {:.17g} {:.17g} {:.17g}\n".format(
                pc.A[0, 0], pc.A[0, 1], pc.A[1, 0], pc.A[1, 1]))
            f.write("offset {:.17g} {:.17g}\n".format(pc.b[0], pc.b[1]))


def emit_inl(path, stages):
    with open(path, "w") as f:
        f.write("// Piecewise-affine stage data for the bad_inv_nofd gallery"
                " map.\n")
        f.write("// Generated by tools/gen_counterexample.py;"
                " mirrors data/*.pwa2.\n")
        for name, pieces in stages:
            f.write(f"\nstatic const PwaPieceData kBadInv_{name}[] = {{\n")
            for pc in pieces:
                xs = ", ".join(f"{x:.17g}" for p in pc.poly for x in p)
                f.write("  {{{{ {} }}, {}, ".format(xs, len(pc.poly)))
                f.write("{{ {:.17g}, {:.17g}, {:.17g}, {:.17g} }}, "
                        .format(pc.A[0, 0], pc.A[0, 1], pc.A[1, 0], pc.A[1, 1]))
                f.write("{{ {:.17g}, {:.17g} }}}},\n".format(pc.b[0], pc.b[1]))
            f.write("};\n")


def main():
    print("building stages...")
    bp = build_b(); lp = build_l(); rp = build_r()
    b = PWA(bp); l = PWA(lp); r = PWA(rp)
    print("verifying tiling/continuity...")
    verify_stage("b", b)
    verify_stage("l", l, allow_rank1=True)
    verify_stage("r", r)

    def fmap(p):
        return r.apply(l.apply(b.apply(k_eval(p))))

    print("verifying degree conclusions...")
    pts = diamond_lattice(0.18)
    assert len(pts) >= 20, len(pts)
    for sq, c, rr, want in [("Q1", (-0.25, 0.75), 0.25, -1),
                            ("Q2", (0.25, 0.75), 0.25, 1),
                            ("Q3", (-0.25, 1.25), 0.25, 1),
                            ("Q", (0.0, 0.0), 1.0, 0)]:
        loop = loop_of(fmap, cube_poly(c, rr), 420)
        ds = seg_dist(loop, np.array(pts))
        ws = [winding(loop, y) for y in pts]
        bad = [(p, w, d) for p, w, d in zip(pts, ws, ds)
               if d < 0.02 or abs(w - want) > 0.08]
        print(f"  deg(f,{sq},*) == {want}: {len(pts)-len(bad)}/{len(pts)}")
        if bad:
            for p, w, d in bad[:8]:
                print(f"    BAD at {p}: w={w:.3f} dist={d:.4f}")
            raise SystemExit(f"degree check failed for {sq}")

    for t in np.linspace(0, 1, 97):
        for p in [(-2 + 4 * t, -2), (2, -2 + 4 * t), (-2 + 4 * t, 2),
                  (-2, -2 + 4 * t)]:
            assert np.allclose(fmap(p), p, atol=1e-12)
    print("  identity on the boundary of [-2,2]^2 ok")

    print("checking (INV) by sampling...")
    fails = 0
    for name, c, rr in [("Q", (0, 0), 1.0), ("Q1", (-0.25, 0.75), 0.25),
                        ("Q2", (0.25, 0.75), 0.25), ("Q3", (-0.25, 1.25), 0.25),
                        ("small1", (-0.6, 1.0), 0.15), ("small2", (0.3, 1.3), 0.2),
                        ("small3", (-0.25, 0.75), 0.1)]:
        vin, vout, ni, no, frac = check_inv_cube(fmap, c, rr)
        print(f"  INV {name}: viol_in={vin}/{ni} viol_out={vout}/{no}"
              f" frac={frac*100:.3f}%")
        if frac > 0.005:
            fails += 1
    if fails:
        raise SystemExit("INV sampling failed")

    import os
    os.makedirs(OUT_DATA, exist_ok=True)
    emit_pwa2(f"{OUT_DATA}/bad_inv_b.pwa2", bp)
    emit_pwa2(f"{OUT_DATA}/bad_inv_l.pwa2", lp)
    emit_pwa2(f"{OUT_DATA}/bad_inv_r.pwa2", rp)
    emit_inl(f"{OUT_SRC}/bad_inv_data.inl", [("b", bp), ("l", lp), ("r", rp)])
    print("emitted data files")


if __name__ == "__main__":
    main()
