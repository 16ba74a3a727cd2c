"""Figure renderer: plain P6 pixmaps of the domain pictures, plus an SVG
overlay of the ledger curves.

Everything here is float-grade (numpy), independent of the rigorous engine;
palettes are flat and documented in the README."""

import math

import numpy as np

from .constants import assemble_constants
from .explorer import FloatMaps


class UnknownFigure(ValueError):
    pass


FIGURES = ("ellipse", "dom-q", "u-eta-p", "chessboard")

# viewport per figure: (re_min, re_max, im_min, im_max)
VIEWPORTS = {
    "ellipse": (-1.75, 1.75, -1.75, 1.75),
    "dom-q": (-4.0, 6.0, -5.0, 5.0),
    "u-eta-p": (-35.0, 35.0, -35.0, 35.0),
    "chessboard": (-10.0, 30.0, -20.0, 20.0),
}


def _grid(figure: str, resolution: int):
    re0, re1, im0, im1 = VIEWPORTS[figure]
    xs = np.linspace(re0, re1, resolution)
    ys = np.linspace(im1, im0, resolution)        # top row = largest Im
    return xs[None, :] + 1j * ys[:, None]


def _q_np(fm: FloatMaps, z):
    with np.errstate(all="ignore"):
        w1 = 1j * fm.kappa * (z - 1.0) / (z + 1.0)
        zs = np.exp(-fm.sigma * np.log(w1))
        w2 = fm.mu * zs * (w1 * w1 / (2.0 - fm.sigma) + 1.0 / fm.sigma) + fm.nu
        c1 = 2.0 * math.sqrt(5.0) / 3.0
        p = w2 * (1.0 + c1 * w2 + w2 * w2) ** 2
        return -fm.tau / p


def _p_np(z):
    c1 = 2.0 * math.sqrt(5.0) / 3.0
    return z * (1.0 + c1 * z + z * z) ** 2


def to_ppm(rgb: np.ndarray) -> bytes:
    h, w, _ = rgb.shape
    header = f"P6\n{w} {h}\n255\n".encode()
    return header + rgb.astype(np.uint8).tobytes()


def render_figure(figure: str, eta: float = 3.1, resolution: int = 512) -> bytes:
    if figure not in FIGURES:
        raise UnknownFigure(figure)
    if resolution < 16:
        raise UnknownFigure("resolution must be >= 16")
    table = assemble_constants()
    fm = FloatMaps.from_table(table)
    if figure == "ellipse":
        rgb = _render_ellipse(table, resolution)
    elif figure == "dom-q":
        rgb = _render_dom_q(table, fm, resolution)
    elif figure == "u-eta-p":
        rgb = _render_u_eta_p(table, fm, eta, resolution)
    else:
        rgb = _render_chessboard(table, fm, eta, resolution)
    return to_ppm(rgb)


def _render_ellipse(table, resolution) -> np.ndarray:
    z = _grid("ellipse", resolution)
    x, y = z.real, z.imag
    xe, ae, be = table.x_e.mid, table.a_e.mid, table.b_e.mid
    e1, em1 = table.e1.mid, table.em1.mid
    r1 = table.r1.mid
    a_r1 = e1 * r1 + em1 / r1
    b_r1 = e1 * r1 - em1 / r1

    rgb = np.full(z.shape + (3,), 255, dtype=np.uint8)
    in_er1 = ((x - xe) / a_r1) ** 2 + (y / b_r1) ** 2 <= 1.0
    in_e = ((x - xe) / ae) ** 2 + (y / be) ** 2 <= 1.0
    rgb[in_er1] = (225, 235, 245)
    rgb[in_e] = (180, 205, 235)
    disks = [(complex(table.a4.re.mid, table.a4.im.mid), table.eps4.mid),
             (complex(table.a4.re.mid, -table.a4.im.mid), table.eps4.mid),
             (complex(table.a5.re.mid, table.a5.im.mid), table.eps5.mid),
             (complex(table.a5.re.mid, -table.a5.im.mid), table.eps5.mid),
             (complex(table.a6.re.mid, table.a6.im.mid), table.eps6.mid),
             (complex(table.a6.re.mid, -table.a6.im.mid), table.eps6.mid),
             (complex(table.a7.re.mid, 0.0), table.eps7.mid)]
    cover = np.zeros(z.shape, dtype=bool)
    for c, r in disks:
        cover |= np.abs(z - c) <= r
    rgb[cover & in_er1] = (250, 225, 170)
    rgb[cover & ~in_er1] = (252, 240, 210)
    in_unit = np.abs(z) <= 1.0
    rgb[in_unit] = (120, 130, 150)
    # thin boundary bands
    for (aa, bb, col) in [(ae, be, (40, 70, 160)), (a_r1, b_r1, (90, 120, 190))]:
        v = ((x - xe) / aa) ** 2 + (y / bb) ** 2
        rgb[np.abs(v - 1.0) < 0.012] = col
    return rgb


def _render_dom_q(table, fm, resolution) -> np.ndarray:
    z = _grid("dom-q", resolution)
    q = _q_np(fm, z)
    cv = fm.cv
    with np.errstate(all="ignore"):
        band = np.floor(np.log(np.abs(q) / cv) / math.log(4.0)).astype(float)
    upper = q.imag >= 0
    parity = np.mod(band, 2.0) == 0
    rgb = np.zeros(z.shape + (3,), dtype=np.uint8)
    rgb[upper & parity] = (235, 170, 120)
    rgb[upper & ~parity] = (200, 120, 70)
    rgb[~upper & parity] = (130, 170, 230)
    rgb[~upper & ~parity] = (80, 120, 190)
    bad = ~np.isfinite(q.real) | ~np.isfinite(q.imag)
    rgb[bad] = (0, 0, 0)
    return rgb


def _in_u_pm(z):
    """Membership in the closed slit neighborhoods bounded by the tangent
    line and the preimage curve above/below the axis."""
    s5 = math.sqrt(5.0)
    x = z.real
    y = np.abs(z.imag)
    corner = -s5 / 3.0
    left = x <= corner
    with np.errstate(all="ignore"):
        line = 2.0 / 3.0 - (3.0 + s5) / 2.0 * (x - corner)
        q1 = 45.0 * x * x + 24.0 * s5 * x + 19.0
        inner = 45.0 * x * x + 18.0 * s5 * x + 14.0
        cross = 2.0 * np.abs(3.0 * x + s5) * np.sqrt(np.maximum(inner, 0.0))
        h_plus = np.sqrt(np.maximum(q1 + cross, 0.0)) / 3.0
    return left & (y > line) & (y < h_plus)


def _render_u_eta_p(table, fm, eta, resolution) -> np.ndarray:
    z = _grid("u-eta-p", resolution)
    absp = np.abs(_p_np(z))
    cvp = abs(fm.cv_p)
    hi = cvp * math.exp(2.0 * math.pi * eta)
    lo = cvp * math.exp(-2.0 * math.pi * eta)
    inside = absp < hi
    in_u = _in_u_pm(z)
    small = absp <= lo
    # flood fill the small-|P| components containing the ring critical points
    excluded = np.zeros(z.shape, dtype=bool)
    res = z.shape[0]
    re0, re1, im0, im1 = VIEWPORTS["u-eta-p"]
    def pixel_of(pt):
        col = int(round((pt.real - re0) / (re1 - re0) * (res - 1)))
        row = int(round((im1 - pt.imag) / (im1 - im0) * (res - 1)))
        return row, col
    stack = []
    s5 = math.sqrt(5.0)
    for cpt in (complex(-s5 / 3.0, 2.0 / 3.0), complex(-s5 / 3.0, -2.0 / 3.0)):
        r, c = pixel_of(cpt)
        if 0 <= r < res and 0 <= c < res:
            excluded[r, c] = True
            stack.append((r, c))
    while stack:
        r, c = stack.pop()
        for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if 0 <= rr < res and 0 <= cc < res and small[rr, cc] and not excluded[rr, cc]:
                excluded[rr, cc] = True
                stack.append((rr, cc))
    member = inside & ~in_u & ~excluded
    rgb = np.full(z.shape + (3,), 255, dtype=np.uint8)
    rgb[member] = (245, 170, 90)
    rgb[inside & in_u] = (150, 150, 160)
    rgb[excluded] = (90, 40, 110)
    return rgb


def _render_chessboard(table, fm, eta, resolution) -> np.ndarray:
    z = _grid("chessboard", resolution)
    w = z.copy()
    n = np.zeros(z.shape, dtype=np.int32)
    dead = np.abs(z) <= 1.0
    u0 = fm.u0
    sector_limit = 0.7 * math.pi

    def in_sector(v):
        with np.errstate(all="ignore"):
            return np.abs(np.angle(v - u0)) < sector_limit

    live = ~dead
    for _ in range(80):
        todo = live & ~in_sector(w)
        if not todo.any():
            break
        w2 = _q_np(fm, w[todo])
        w[todo] = w2
        n[todo] += 1
        bad = ~np.isfinite(w.real) | ~np.isfinite(w.imag)
        dead |= bad & live
        live &= ~bad
    dead |= live & ~in_sector(w)
    live &= in_sector(w)

    for _ in range(400):
        todo = live & (np.abs(w) < 2.0e3)
        if not todo.any():
            break
        w[todo] = _q_np(fm, w[todo])
        n[todo] += 1
        bad = ~np.isfinite(w.real) | ~np.isfinite(w.imag)
        dead |= bad & live
        live &= ~bad

    a = -fm.b1 / fm.b0 ** 2
    bb = fm.b2 / fm.b0 ** 2 - fm.b1 ** 2 / fm.b0 ** 3 + fm.b1 / (2.0 * fm.b0)
    with np.errstate(all="ignore"):
        phi = w / fm.b0 + a * np.log(w) + bb / w - n
    # normalize by pulling the critical value through the same pipeline
    wc = complex(fm.cv)
    nc = 0
    while abs(wc) < 2.0e3:
        wc = fm.q(wc)
        nc += 1
    phi = phi + (1.0 - (wc / fm.b0 + a * np.log(wc) + bb / wc - nc))

    rgb = np.zeros(z.shape + (3,), dtype=np.uint8)
    re_par = np.mod(np.floor(phi.real), 2.0) == 0
    im_pos = phi.imag >= 0
    high = np.abs(phi.imag) > eta
    rgb[re_par & im_pos] = (240, 200, 110)
    rgb[~re_par & im_pos] = (170, 110, 60)
    rgb[re_par & ~im_pos] = (150, 200, 240)
    rgb[~re_par & ~im_pos] = (80, 120, 180)
    dim = high & ~dead
    rgb[dim] = (rgb[dim] * 0.55).astype(np.uint8)
    rgb[dead] = (30, 30, 30)
    rgb[np.abs(z) <= 1.0] = (0, 0, 0)
    return rgb


# ---------------------------------------------------------------------------
# SVG overlay of the ledger curves
# ---------------------------------------------------------------------------

def overlay_svg(figure: str, resolution: int = 512, samples: int = 120) -> str:
    from .ledger import build_ledger
    from .curves import point_of
    from .verifier import MIN, MAX

    if figure not in FIGURES:
        raise UnknownFigure(figure)
    re0, re1, im0, im1 = VIEWPORTS[figure]
    led = build_ledger()
    seen = set()
    paths = []
    for spec in led.specs:
        if spec.objective not in (MIN, MAX) or spec.curve is None:
            continue
        key = id(spec.curve)
        if key in seen:
            continue
        seen.add(key)
        c = spec.curve
        if c.t1 == c.t0:
            continue
        pts = []
        for i in range(samples + 1):
            t = c.t0 + (c.t1 - c.t0) * i / samples
            try:
                z = point_of(c, t)
            except Exception:
                continue
            px = (z.real - re0) / (re1 - re0) * resolution
            py = (im1 - z.imag) / (im1 - im0) * resolution
            pts.append(f"{px:.2f},{py:.2f}")
        if len(pts) > 1:
            paths.append(
                f'<polyline fill="none" stroke="black" stroke-width="1" '
                f'points="{" ".join(pts)}"><title>{spec.id}</title></polyline>')
    body = "\n".join(paths)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{resolution}" height="{resolution}" '
            f'viewBox="0 0 {resolution} {resolution}">\n{body}\n</svg>\n')
