"""The declarative catalog of every computer-checked inequality.

Each printed numeric claim becomes one CheckSpec: optimization checks carry
a functional and a curve, value checks carry a quantity expression (possibly
referencing quantities registered here).  Printed approximations become
digit-truncation windows (value, decimals, scale) that the computed
enclosure must land in.
"""

import math
from dataclasses import dataclass

from .interval import RealInterval, ComplexBox, point, box, PI
from .constants import ConstantsTable, lit, TABLE_WINDOWS, _component
from .roots import refine_root
from . import curves, functionals as F, maps
from .verifier import CheckSpec, MIN, MAX
from .quantities import QuantityCache

TWO_PI_HI = PI.mul_scalar(2.0).hi


def _win(value, decimals, scale=1.0):
    return (value, decimals, scale)


@dataclass
class Ledger:
    table: ConstantsTable
    cache: QuantityCache
    specs: list

    def by_id(self, check_id: str) -> CheckSpec:
        for s in self.specs:
            if s.id == check_id:
                return s
        raise KeyError(check_id)

    def group(self, name: str):
        return [s for s in self.specs if s.group == name]

    @property
    def groups(self):
        seen = []
        for s in self.specs:
            if s.group not in seen:
                seen.append(s.group)
        return seen


# Expected number of checks per group; tests assert the transcription count.
GROUP_COUNTS = {
    "constants-consistency": 17,
    "relation-f2": 3,
    "D-E": 8,
    "a4": 17,
    "Upsilon": 8,
    "E-r1": 15,
    "Q-subset-cv": 1,
    "injective": 1,
    "esti-varphi-apps": 5,
    "esti-F-precondition": 1,
    "F-cv": 2,
    "rep-Fatou": 1,
    "attr": 4,
    "est-Phi": 5,
    "prop-Phi": 2,
    "W0": 41,
    "D0": 1,
    "arg-arg": 3,
}


def build_ledger(table: ConstantsTable | None = None) -> Ledger:
    from .constants import assemble_constants

    tab = table or assemble_constants()
    cache = QuantityCache(tab)
    specs = []
    add = specs.append

    two_pi = TWO_PI_HI

    def circle(center, radius):
        return curves.CircleArc(center, radius, 0.0, two_pi)

    # ------------------------------------------------------------------
    # constants-consistency: Table-1 windows and defining residuals
    # ------------------------------------------------------------------
    for name, attr, win in TABLE_WINDOWS:
        enc = _component(tab, name, attr)
        cache.register(f"table_{name.replace('.', '_')}", _const_fn(enc))
        add(CheckSpec(
            id=f"constants.{name}", group="constants-consistency",
            paper_location="Table 1",
            objective="VALUE", quantity=f"table_{name.replace('.', '_')}",
            window=_win(win, 4)))

    cache.register("resid_kappa_eq", lambda c: _kappa_residual(tab))
    add(CheckSpec(id="constants.kappa-residual", group="constants-consistency",
                  paper_location="Lemma solve-kappa, eq. (kappa)",
                  objective="VALUE", quantity="resid_kappa_eq",
                  relation="<", threshold="1e-9"))
    cache.register("resid_psi1_cp", lambda c: _cp_residual(tab))
    add(CheckSpec(id="constants.cp-residual", group="constants-consistency",
                  paper_location="Lemma cp-cv, eq. (cp)",
                  objective="VALUE", quantity="resid_psi1_cp",
                  relation="<", threshold="1e-9"))
    cache.register("resid_qhat_prime", lambda c: _qhat_prime_residual(tab))
    add(CheckSpec(id="constants.qhat-prime-one", group="constants-consistency",
                  paper_location="Lemma solve-tau proof",
                  objective="VALUE", quantity="resid_qhat_prime",
                  relation="<", threshold="1e-9"))

    # ------------------------------------------------------------------
    # relation-f2: the second-derivative window at the origin
    # ------------------------------------------------------------------
    add(CheckSpec(id="relation-f2.radius", group="relation-f2",
                  paper_location="Sec. 3.1 starred display (f'' radius)",
                  objective="VALUE", quantity="2*c01max/tau",
                  window=_win(1.9272, 4)))
    add(CheckSpec(id="relation-f2.center", group="relation-f2",
                  paper_location="Sec. 3.1 starred display (f'' center)",
                  objective="VALUE", quantity="2*(b0-0.053)/tau",
                  window=_win(6.7393, 4)))
    add(CheckSpec(id="relation-f2.main-window", group="relation-f2",
                  paper_location="Main Theorem (a)",
                  objective="VALUE",
                  quantity="2*c01max/tau + abs(2*(b0-0.053)/tau - 6.74)",
                  relation="<", threshold="1.93"))

    # ------------------------------------------------------------------
    # D-E: covering of the ring remainder by four disks, disks inside E
    # ------------------------------------------------------------------
    add(CheckSpec(id="D-E.min-abs-q-at-1", group="D-E",
                  paper_location="Lemma D-E proof, display 1",
                  objective=MIN, functional=F.f_abs_q(),
                  curve=circle(1.0, tab.eps1),
                  relation=">", threshold="cv*exp(-2*pi*eta)",
                  window=_win(7.9800, 4, 1e-8),
                  threshold_window=_win(5.9124, 4, 1e-8)))
    add(CheckSpec(id="D-E.min-abs-q-at-m1", group="D-E",
                  paper_location="Lemma D-E proof, display 2",
                  objective=MIN, functional=F.f_abs_q(),
                  curve=circle(-1.0, tab.eps2),
                  relation=">", threshold="cv*exp(-2*pi*eta)",
                  window=_win(7.3676, 4, 1e-8),
                  threshold_window=_win(5.9124, 4, 1e-8)))
    # The printed value on the (equ-max-Q-3) line corresponds to the circle
    # minimum (verified independently); the maximum is ~3.489e9 and the
    # covering claim needs only max < cv e^{2 pi eta}.
    add(CheckSpec(id="D-E.max-abs-q-at-cqm", group="D-E",
                  paper_location="Lemma D-E proof, eq. (equ-max-Q-3)",
                  objective=MAX, functional=F.f_abs_q(),
                  curve=circle(tab.c_q_minus, tab.eps3),
                  relation="<", threshold="cv*exp(2*pi*eta)",
                  threshold_window=_win(4.8982, 4, 1e9)))
    add(CheckSpec(id="D-E.printed-min-at-cqm", group="D-E",
                  paper_location="Lemma D-E proof, eq. (equ-max-Q-3) "
                                 "printed value (= the circle minimum)",
                  objective=MIN, functional=F.f_abs_q(),
                  curve=circle(tab.c_q_minus, tab.eps3),
                  window=_win(3.3960, 4, 1e9)))

    a2b2 = tab.a_e.sqr().sub(tab.b_e.sqr())
    t1_val = tab.a_e.mul(tab.x_e).neg().div(a2b2)
    t2_val = tab.a_e.mul(tab.x_e.add_scalar(1.0)).neg().div(a2b2)
    cache.register("de_t1", _const_fn(t1_val))
    cache.register("de_t2", _const_fn(t2_val))
    add(CheckSpec(id="D-E.t1", group="D-E",
                  paper_location="Lemma D-E proof (b), vertex of h1",
                  objective="VALUE", quantity="de_t1", window=_win(0.9591, 4)))
    add(CheckSpec(id="D-E.t2", group="D-E",
                  paper_location="Lemma D-E proof (b), vertex of h2",
                  objective="VALUE", quantity="de_t2", relation="<",
                  threshold="-1", window=_win(-17.1377, 4)))

    def h_poly(shift, rhs):
        def fn(t: RealInterval) -> RealInterval:
            return (a2b2.mul(t.sqr())
                    .add(tab.a_e.mul(tab.x_e.add_scalar(shift)).mul(t).mul_scalar(2.0))
                    .add(tab.b_e.sqr()).add(tab.x_e.sqr()).add(rhs))
        return fn

    add(CheckSpec(id="D-E.h1-min", group="D-E",
                  paper_location="Lemma D-E proof (b), h1(t1) > 0",
                  objective=MIN,
                  functional=ScalarFunctional(h_poly(0.0, point(-1.006))),
                  curve=ParamInterval(-1.0, 1.0),
                  relation=">", threshold="0", window=_win(0.0019, 4)))
    add(CheckSpec(id="D-E.h2-min", group="D-E",
                  paper_location="Lemma D-E proof (b), h2(-1) > 0",
                  objective=MIN,
                  functional=ScalarFunctional(
                      h_poly(1.0, tab.eps2.sqr().neg().add(tab.x_e.mul_scalar(2.0)).add_scalar(1.0))),
                  curve=ParamInterval(-1.0, 1.0),
                  relation=">", threshold="0"))

    # ------------------------------------------------------------------
    # a4: the two guide disks sit inside the right sheets
    # ------------------------------------------------------------------
    from .geometry import circle_circle_unit_intersection

    a4c = tab.a4.conj()
    th1, th2 = circle_circle_unit_intersection(a4c, tab.eps4)
    # th1 is the upper-left intersection (cos < 0), th2 the lower-right one
    if th1.mid < th2.mid:
        th1, th2 = th2, th1
    z1 = a4c.add(ComplexBox(tab.eps4.mul(th1.cos()), tab.eps4.mul(th1.sin())))
    z2 = a4c.add(ComplexBox(tab.eps4.mul(th2.cos()), tab.eps4.mul(th2.sin())))
    for name, val, win in [
            ("a4_cos_th1", th1.cos(), _win(-0.8331, 4)),
            ("a4_sin_th1", th1.sin(), _win(0.5530, 4)),
            ("a4_cos_th2", th2.cos(), _win(0.9913, 4)),
            ("a4_sin_th2", th2.sin(), _win(-0.1311, 4))]:
        cache.register(name, _const_fn(val))
        add(CheckSpec(id=f"a4.{name[3:].replace('_', '-')}", group="a4",
                      paper_location="Lemma a4 proof (a), intersection angles",
                      objective="VALUE", quantity=name, window=win))
    cache.register("a4_re_zeta1", _const_fn(z1.re))
    cache.register("a4_re_zeta2", _const_fn(z2.re))
    add(CheckSpec(id="a4.re-zeta1", group="a4",
                  paper_location="Lemma a4 proof (a)",
                  objective="VALUE", quantity="a4_re_zeta1",
                  relation=">", threshold="-1", window=_win(-0.9898, 4)))
    add(CheckSpec(id="a4.re-zeta2", group="a4",
                  paper_location="Lemma a4 proof (a)",
                  objective="VALUE", quantity="a4_re_zeta2",
                  relation="<", threshold="cQre",
                  window=_win(0.6522, 4), threshold_window=_win(0.6611, 4)))
    th1_rad = th1
    th2_rad = th2.add(PI.mul_scalar(2.0))
    add(CheckSpec(id="a4.min-re-sqrt-q", group="a4",
                  paper_location="Lemma a4 proof (a), sqrt display",
                  objective=MIN, functional=F.f_re_sqrt_q(),
                  curve=curves.CircleArc(a4c, tab.eps4, th1_rad.lo, th2_rad.hi),
                  relation=">", threshold="0",
                  window=_win(9.5087, 4, 1e-4)))

    a5c = tab.a5.conj()
    th_a, th_b = circle_circle_unit_intersection(a5c, tab.eps5)
    theta3 = (th_a if th_a.mid < th_b.mid else th_b).div(PI)
    theta4 = tab.a5.im.div(tab.eps5).asin().div(PI)
    cache.register("a4_theta3", _const_fn(theta3))
    cache.register("a4_theta4", _const_fn(theta4))
    add(CheckSpec(id="a4.theta3", group="a4",
                  paper_location="Lemma a4 proof (b), eq. (theta-3-4)",
                  objective="VALUE", quantity="a4_theta3", window=_win(-0.6134, 4)))
    add(CheckSpec(id="a4.theta4", group="a4",
                  paper_location="Lemma a4 proof (b), eq. (theta-3-4)",
                  objective="VALUE", quantity="a4_theta4", window=_win(0.1593, 4)))
    zeta3 = _on_circle(a5c, tab.eps5, theta3.mul(PI))
    zeta4 = _on_circle(a5c, tab.eps5, theta4.mul(PI))
    cache.register("a4_re_zeta3", _const_fn(zeta3.re))
    cache.register("a4_re_zeta4", _const_fn(zeta4.re))
    add(CheckSpec(id="a4.re-zeta3", group="a4",
                  paper_location="Lemma a4 proof (b)",
                  objective="VALUE", quantity="a4_re_zeta3",
                  relation=">", threshold="cQre",
                  window=_win(0.7056, 4), threshold_window=_win(0.6611, 4)))
    add(CheckSpec(id="a4.re-zeta4", group="a4",
                  paper_location="Lemma a4 proof (b)",
                  objective="VALUE", quantity="a4_re_zeta4",
                  relation="<", threshold="cp",
                  window=_win(1.3186, 4)))
    arc = lambda lo, hi: curves.CircleArc(a5c, tab.eps5, lo, hi)
    add(CheckSpec(id="a4.min-im-q-ellp", group="a4",
                  paper_location="Lemma a4 proof (b), eq. (theta-3-055)",
                  objective=MIN, functional=F.f_im_q(),
                  curve=arc(theta3.mul(PI).lo, PI.mul_scalar(-0.55).hi),
                  relation=">", threshold="0", window=_win(40.0808, 4)))
    add(CheckSpec(id="a4.min-re-sqrt-neg-q", group="a4",
                  paper_location="Lemma a4 proof (b), eq. (equ-sqrt-Q)",
                  objective=MIN, functional=F.f_re_sqrt_neg_q(),
                  curve=arc(PI.mul_scalar(-0.55).lo, PI.mul_scalar(0.15).hi),
                  relation=">", threshold="0", window=_win(0.0665, 4)))
    q_z4 = tab.qk.q(zeta4, True)
    cache.register("a4_Qzeta4", _const_fn(q_z4.re))
    cache.register("a4_rprime", _opt_fn(F.f_abs_q_minus(q_z4),
                                        arc(PI.mul_scalar(0.15).lo, theta4.mul(PI).hi), MAX))
    add(CheckSpec(id="a4.q-zeta4", group="a4",
                  paper_location="Lemma a4 proof (b), last display",
                  objective="VALUE", quantity="a4_Qzeta4", window=_win(1.2884, 4)))
    add(CheckSpec(id="a4.rprime", group="a4",
                  paper_location="Lemma a4 proof (b), last display",
                  objective="VALUE", quantity="a4_rprime", window=_win(0.1735, 4)))
    add(CheckSpec(id="a4.zeta4-plus-rprime", group="a4",
                  paper_location="Lemma a4 proof (b), conclusion",
                  objective="VALUE", quantity="a4_Qzeta4 + a4_rprime",
                  relation="<", threshold="cv"))
    add(CheckSpec(id="a4.zeta4-minus-rprime", group="a4",
                  paper_location="Lemma a4 proof (b), conclusion",
                  objective="VALUE", quantity="a4_Qzeta4 - a4_rprime",
                  relation=">", threshold="0"))

    # ------------------------------------------------------------------
    # Upsilon: the lower half of the ellipse boundary stays in good sheets
    # ------------------------------------------------------------------
    xs = [-1.11, -1.109, -1.105, 0.664, 0.666, 0.8]
    thetas = [_ellipse_angle(tab, x) for x in xs]
    gamma = lambda i, j: curves.ZetaImageArc(tab, point(1.0), thetas[i].lo, thetas[j].hi)
    ups = [
        ("Upsilon.g1-min-re-sqrt-neg-q", MIN, F.f_re_sqrt_neg_q(), gamma(0, 1),
         ">", "0", _win(1.8855, 4, 1e-4)),
        ("Upsilon.g2-min-re-q", MIN, F.f_re_q(), gamma(1, 2),
         ">", "0", _win(1.2551, 4, 1e-7)),
        ("Upsilon.g2-max-re-q", MAX, F.f_re_q(), gamma(1, 2),
         "<", "cv", _win(3.5679, 4, 1e-7)),
        ("Upsilon.g3-min-re-sqrt-neg-q", MIN, F.f_re_sqrt_neg_q(), gamma(2, 3),
         ">", "0", _win(4.8927, 4, 1e-4)),
        ("Upsilon.g4-min-re-q", MIN, F.f_re_q(), gamma(3, 4),
         ">", "cv", _win(9.0269, 4, 1e8)),
        ("Upsilon.g5-min-re-sqrt-neg-q", MIN, F.f_re_sqrt_neg_q(), gamma(4, 5),
         ">", "0", _win(2.0538, 4)),
    ]
    for cid, sense, func, crv, rel, thr, win in ups:
        add(CheckSpec(id=cid, group="Upsilon",
                      paper_location="Lemma Upsilon proof, claims (i)-(v)",
                      objective=sense, functional=func, curve=crv,
                      relation=rel, threshold=thr, window=win))
    z6 = ComplexBox(lit(0.8), _ellipse_y(tab, lit(0.8), point(1.0)).neg())
    cache.register("ups_z6_dist", _const_fn(z6.sub(a5c).abs()))
    add(CheckSpec(id="Upsilon.z6-in-disk", group="Upsilon",
                  paper_location="Lemma Upsilon proof, claim (vi)",
                  objective="VALUE", quantity="ups_z6_dist",
                  relation="<", threshold="eps5", window=_win(0.3762, 4)))
    resid6 = (z6.re.sub(tab.x_e).div(tab.a_e)).sqr().add(z6.im.div(tab.b_e).sqr()).add_scalar(-1.0)
    cache.register("ups_z6_resid", _const_fn(resid6.abs()))
    add(CheckSpec(id="Upsilon.z6-on-ellipse", group="Upsilon",
                  paper_location="Lemma Upsilon proof, parameterization",
                  objective="VALUE", quantity="ups_z6_resid",
                  relation="<", threshold="1e-9"))

    # ------------------------------------------------------------------
    # E-r1: modulus bounds and the eight-disk covering of E_{r1}
    # ------------------------------------------------------------------
    a6c = tab.a6.conj()
    add(CheckSpec(id="E-r1.min-abs-q-at-a6", group="E-r1",
                  paper_location="Lemma E-r1 proof (a)",
                  objective=MIN, functional=F.f_abs_q(),
                  curve=circle(a6c, tab.eps6),
                  relation=">", threshold="R", window=_win(115.0061, 4)))
    add(CheckSpec(id="E-r1.max-abs-q-at-a7", group="E-r1",
                  paper_location="Lemma E-r1 proof (b)",
                  objective=MAX, functional=F.f_abs_q(),
                  curve=circle(tab.a7, tab.eps7),
                  relation="<", threshold="rho", window=_win(0.0469, 4)))

    r1 = tab.r1
    aR = maps.aE_r(tab, r1)
    bR = maps.bE_r(tab, r1)

    def on_er1(x):
        xi = lit(x)
        return ComplexBox(xi, _ellipse_y_ab(tab, xi, aR, bR))

    zz1, zz2, zz3 = on_er1(-1.05), on_er1(0.47), on_er1(1.05)
    left_end = tab.x_e.sub(aR)
    right_end = tab.x_e.add(aR)
    mem = [
        ("E-r1.left-end-in-a7", left_end.sub(tab.a7.re).abs().sub(tab.eps7),
         None, "Lemma E-r1 proof (c), end point of G1"),
        ("E-r1.z1-in-a7", _disk_resid(zz1, tab.a7, tab.eps7),
         _win(-0.1297, 4), "Lemma E-r1 proof (c)"),
        ("E-r1.z1-in-a4", _disk_resid(zz1, tab.a4, tab.eps4),
         _win(-0.1127, 4), "Lemma E-r1 proof (c)"),
        ("E-r1.z2-in-a4", _disk_resid(zz2, tab.a4, tab.eps4),
         _win(-0.0078, 4), "Lemma E-r1 proof (c)"),
        ("E-r1.z2-in-a6", _disk_resid(zz2, tab.a6, tab.eps6),
         _win(-0.0229, 4), "Lemma E-r1 proof (c)"),
        ("E-r1.z3-in-a6", _disk_resid(zz3, tab.a6, tab.eps6),
         _win(-0.0177, 4), "Lemma E-r1 proof (c)"),
        ("E-r1.z3-in-a5", _disk_resid(zz3, tab.a5, tab.eps5),
         _win(-0.0060, 4), "Lemma E-r1 proof (c)"),
        ("E-r1.right-end-in-a5", right_end.sub(tab.a5.re).sqr().add(tab.a5.im.sqr()).sqrt(),
         _win(0.4510, 4), "Lemma E-r1 proof (c)"),
    ]
    for cid, val, win, loc in mem:
        name = "er1_" + cid.split(".")[1].replace("-", "_")
        cache.register(name, _const_fn(val))
        if cid == "E-r1.right-end-in-a5":
            add(CheckSpec(id=cid, group="E-r1", paper_location=loc,
                          objective="VALUE", quantity=name,
                          relation="<", threshold="eps5", window=win))
        else:
            add(CheckSpec(id=cid, group="E-r1", paper_location=loc,
                          objective="VALUE", quantity=name,
                          relation="<", threshold="0", window=win))

    witnesses = [
        ("E-r1.wit-a5-real", _witness_margin(
            [(_real_crossing(tab.a5, tab.eps5), point(1.0), "abs")])),
        ("E-r1.wit-a7-real", _witness_margin(
            [(_real_crossing(tab.a7, tab.eps7, side=1), point(1.0), "abs")])),
        ("E-r1.wit-a7-a4", _witness_point_margin(tab, tab.a7, tab.eps7, 0.2 * math.pi,
                                                 tab.a4, tab.eps4)),
        ("E-r1.wit-a4-a6", _witness_point_margin(tab, tab.a4, tab.eps4, -0.1,
                                                 tab.a6, tab.eps6)),
        ("E-r1.wit-a6-a5", _witness_point_margin(tab, tab.a6, tab.eps6, -1.3,
                                                 tab.a5, tab.eps5)),
    ]
    for cid, margin in witnesses:
        name = "er1_" + cid.split(".")[1].replace("-", "_")
        cache.register(name, _const_fn(margin))
        add(CheckSpec(id=cid, group="E-r1",
                      paper_location="Lemma E-r1 proof (c), disk intersections",
                      objective="VALUE", quantity=name,
                      relation="<", threshold="0"))

    # ------------------------------------------------------------------
    # remaining single-line groups
    # ------------------------------------------------------------------
    add(CheckSpec(id="Q-subset-cv.arcsin-q2max13", group="Q-subset-cv",
                  paper_location="Lemma Q-subset-cv proof",
                  objective="VALUE", quantity="arcsin(Q2max(13))",
                  relation="<", threshold="pi/5", window=_win(0.1499, 4)))
    add(CheckSpec(id="injective.min-re-qprime-4.8", group="injective",
                  paper_location="Lemma injective proof, eq. (equ-min-Q-d)",
                  objective=MIN, functional=F.f_re_qd1(),
                  curve=circle(0.0, point(4.8)),
                  relation=">", threshold="0", window=_win(0.0292, 4)))

    add(CheckSpec(id="esti-varphi.phi-rho-abs", group="esti-varphi-apps",
                  paper_location="Lemma phi-rho proof, modulus bound",
                  objective="VALUE", quantity="e1*1.25*(1-1/1.25)^2",
                  relation=">", threshold="rho"))
    add(CheckSpec(id="esti-varphi.phi-rho-arg", group="esti-varphi-apps",
                  paper_location="Lemma phi-rho proof, argument bound",
                  objective="VALUE", quantity="2*log(3) + arcsin(0.067)",
                  relation="<", threshold="pi", window=_win(2.2642, 4)))
    add(CheckSpec(id="esti-varphi.lift-13", group="esti-varphi-apps",
                  paper_location="Prop. lift proof, eq. (equ-varphi-est)",
                  objective="VALUE", quantity="c00 + c01max + phi1max(13)",
                  relation="<", threshold="(cv-13)*sin(pi/5)",
                  window=_win(2.2254, 4), threshold_window=_win(2.3616, 4)))
    add(CheckSpec(id="esti-varphi.lift-50", group="esti-varphi-apps",
                  paper_location="Prop. lift proof, eq. (equ-varphi-est-2)",
                  objective="VALUE", quantity="50 + c00 + c01max + phi1max(50)",
                  relation="<", threshold="53"))
    add(CheckSpec(id="esti-varphi.prop-F-2.7", group="esti-varphi-apps",
                  paper_location="Prop. F proof",
                  objective="VALUE", quantity="c00 + c01max + phi1max(2.7)",
                  relation="<", threshold="2.7", window=_win(2.5795, 4)))

    add(CheckSpec(id="esti-F.beta-precondition", group="esti-F-precondition",
                  paper_location="Lemma esti-F proof",
                  objective="VALUE", quantity="b0 - c00 - b1/10.8",
                  relation=">", threshold="betamax(5.4)",
                  window=_win(5.3106, 4), threshold_window=_win(5.2667, 4)))

    add(CheckSpec(id="F-cv.re-q-of-cv", group="F-cv",
                  paper_location="Lemma F-cv (via the W1 connectivity remark)",
                  objective=MIN, functional=F.f_re_q(),
                  curve=curves.PointCurve(ComplexBox(tab.cv, point(0.0))),
                  relation=">", threshold="19"))
    add(CheckSpec(id="F-cv.nineteen-above-cv", group="F-cv",
                  paper_location="Lemma F-cv (via the W1 connectivity remark)",
                  objective="VALUE", quantity="cv",
                  relation="<", threshold="19"))

    add(CheckSpec(id="rep-Fatou.arg-b0-c0", group="rep-Fatou",
                  paper_location="Prop. rep-Fatou proof",
                  objective="VALUE", quantity="arcsin(c01max/(b0-c00))",
                  relation="<", threshold="pi/10", window=_win(0.2900, 4)))

    # attr
    add(CheckSpec(id="attr.pr-h2-h1", group="attr",
                  paper_location="Lemma attr proof (a), first display",
                  objective="VALUE",
                  quantity="5.4 + c00*cos(pi/5) + c01max + phi1max(5.4)",
                  relation="<", threshold="u1", window=_win(7.7399, 4)))
    add(CheckSpec(id="attr.pr-h4-h3", group="attr",
                  paper_location="Lemma attr proof (a), second display",
                  objective="VALUE",
                  quantity="11.5 + c00*cos(pi/5) + c01max + phi1max(11.5)",
                  relation="<", threshold="u3",
                  window=_win(13.7266, 4), threshold_window=_win(13.7677, 4)))
    add(CheckSpec(id="attr.arg-df-plus", group="attr",
                  paper_location="Lemma attr proof (c)",
                  objective="VALUE", quantity="ArgDFmax(5.4, pi/5)",
                  relation="<", threshold="3*pi/10",
                  window=_win(0.4967, 4), threshold_window=_win(0.9424, 4)))
    add(CheckSpec(id="attr.arg-df-minus", group="attr",
                  paper_location="Lemma attr proof (c)",
                  objective="VALUE", quantity="-ArgDFmin(5.4, pi/5)",
                  relation="<", threshold="3*pi/10",
                  window=_win(0.7573, 4), threshold_window=_win(0.9424, 4)))

    # est-Phi
    cache.register("estphi_dom2", lambda c: _estphi_dom2(tab, c))
    add(CheckSpec(id="est-Phi.dom-2", group="est-Phi",
                  paper_location="Lemma est-Phi proof, eq. (dom-2) check",
                  objective="VALUE", quantity="estphi_dom2",
                  relation="<", threshold="0", window=_win(-0.0947, 4)))
    add(CheckSpec(id="est-Phi.arg-upper", group="est-Phi",
                  paper_location="Lemma est-Phi proof, arg upper bound",
                  objective="VALUE",
                  quantity="-ArgDFmin(11.5,pi/5) + LogDFmax(11.5)/2 - log(1-r4^2)/2",
                  relation="<", threshold="pi/4",
                  window=_win(0.7619, 4), threshold_window=_win(0.7853, 4)))
    add(CheckSpec(id="est-Phi.arg-lower", group="est-Phi",
                  paper_location="Lemma est-Phi proof, arg lower bound",
                  objective="VALUE",
                  quantity="-ArgDFmax(11.5,pi/5) - LogDFmax(11.5)/2 + log(1-r4^2)/2",
                  relation=">", threshold="-pi/5",
                  window=_win(-0.6260, 4), threshold_window=_win(-0.6283, 4)))
    add(CheckSpec(id="est-Phi.abs-upper", group="est-Phi",
                  paper_location="Lemma est-Phi proof, modulus upper bound",
                  objective="VALUE",
                  quantity="exp(LogDFmax(11.5)/2)/(AbsDFmin(11.5,pi/5)*sqrt(1-r4^2))",
                  relation="<", threshold="0.276", window=_win(0.2756, 4)))
    add(CheckSpec(id="est-Phi.abs-lower", group="est-Phi",
                  paper_location="Lemma est-Phi proof, modulus lower bound",
                  objective="VALUE",
                  quantity="sqrt(1-r4^2)/(AbsDFmax(11.5,pi/5)*exp(LogDFmax(11.5)/2))",
                  relation=">", threshold="0.067", window=_win(0.0670, 4)))

    add(CheckSpec(id="prop-Phi.eta-geq", group="prop-Phi",
                  paper_location="Prop. Phi proof, eq. (eta-geq)",
                  objective="VALUE", quantity="tan(2*pi/5)",
                  relation="<", threshold="eta", window=_win(3.0776, 4)))
    add(CheckSpec(id="prop-Phi.eta-leq", group="prop-Phi",
                  paper_location="Prop. Phi proof, eq. (eta-leq)",
                  objective="VALUE", quantity="sqrt(1+5.4^2)/0.067",
                  relation="<", threshold="R1", window=_win(81.9673, 4)))

    # ------------------------------------------------------------------
    # W0
    # ------------------------------------------------------------------
    _build_w0(tab, cache, add)

    add(CheckSpec(id="D0.q-near-identity-50", group="D0",
                  paper_location="Lemma D0 proof (a)",
                  objective="VALUE", quantity="b1/50 + Q2max(50)",
                  relation="<", threshold="1", window=_win(0.4382, 4)))

    for i, (rmin, thmax) in enumerate([(1.25, 0.3), (1.4, 0.4), (1.54, 0.5)], start=1):
        add(CheckSpec(id=f"arg-arg.omega{i}", group="arg-arg",
                      paper_location="Lemma arg-arg (sector criterion)",
                      objective="VALUE",
                      quantity=f"{thmax}*pi + log(({rmin}+1)/({rmin}-1))",
                      relation="<", threshold="pi"))

    return Ledger(table=tab, cache=cache, specs=specs)


# ---------------------------------------------------------------------------
# scalar objectives over a bare parameter interval
# ---------------------------------------------------------------------------

class ParamInterval(curves.Curve):
    def __init__(self, t0: float, t1: float):
        self.t0 = t0
        self.t1 = t1

    def box(self, lo, hi):
        return ComplexBox(RealInterval(lo, hi), point(0.0))


class ScalarFunctional:
    """Real interval function of the parameter; duck-types Functional."""

    def __init__(self, fn):
        self.fn = fn

    def bound_on(self, curve, tlo, thi, tab):
        tm = 0.5 * (tlo + thi)
        sample = self.fn(RealInterval(tm, tm))
        if thi == tlo:
            return sample, sample
        return self.fn(RealInterval(tlo, thi)), sample

    def value(self, z, tab):
        return self.fn(z.re)


class W0SectorEntry:
    """min of e1 |w|(1 - 1/|w|)^2 cos(|arg w| + log((|w|+1)/(|w|-1))) along
    the segment from the critical point into the sector corner, with w the
    ellipse-map preimage."""

    def __init__(self, table):
        self.table = table

    def _value(self, zbox):
        tab = self.table
        w = maps.zeta_inverse(tab, zbox)
        m = w.abs()
        a = w.absarg()
        gain = tab.e1.mul(m).mul(point(1.0).sub(point(1.0).div(m)).sqr())
        phase = a.add(m.add_scalar(1.0).div(m.add_scalar(-1.0)).log())
        return gain.mul(phase.cos())

    def bound_on(self, curve, tlo, thi, tab):
        tm = 0.5 * (tlo + thi)
        sample = self._value(curve.box(tm, tm))
        if thi == tlo:
            return sample, sample
        return self._value(curve.box(tlo, thi)), sample


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _const_fn(value: RealInterval):
    return lambda cache: value


def _opt_fn(functional, curve, sense):
    from .verifier import global_bound
    from .quantities import QUANTITY_BUDGET

    def fn(cache):
        res = global_bound(functional, curve, sense, cache.table, QUANTITY_BUDGET)
        return res.enclosure

    return fn


def _kappa_residual(tab) -> RealInterval:
    ki = ComplexBox(point(0.0), tab.kappa)
    two_ms = point(2.0).sub(tab.sigma)
    r = (ki.sqrc()
         .add(ki.cpow_ri(tab.sigma, 0).mul(ComplexBox(tab.nu.mul(two_ms), point(0.0))).div(tab.mu))
         .add_ri(two_ms.div(tab.sigma)))
    return r.abs()


def _cp_residual(tab) -> RealInterval:
    v = tab.qk.psi12(tab.qk.psi11(ComplexBox(tab.cp, point(0.0))))
    return v.add_ri(point(1.0).div(tab.sqrt5)).abs()


def _qhat_prime_residual(tab) -> RealInterval:
    ki = ComplexBox(point(0.0), tab.kappa)
    d = tab.qk.psi12_d1(ki, 0).mul(tab.qk.two_kio).div(ComplexBox(tab.tau, point(0.0)))
    return d.add_scalar(-1.0).abs()


def _on_circle(center: ComplexBox, radius: RealInterval, angle: RealInterval) -> ComplexBox:
    return center.add(ComplexBox(radius.mul(angle.cos()), radius.mul(angle.sin())))


def _ellipse_y(tab, x: RealInterval, r: RealInterval) -> RealInterval:
    return _ellipse_y_ab(tab, x, maps.aE_r(tab, r), maps.bE_r(tab, r))


def _ellipse_y_ab(tab, x: RealInterval, a: RealInterval, b: RealInterval) -> RealInterval:
    t = x.sub(tab.x_e).div(a)
    return b.mul(point(1.0).sub(t.sqr()).sqrt_clamped())


def _ellipse_angle(tab, x: float) -> RealInterval:
    """Angle (units of pi, in [-1, 0]) of the lower E-boundary point above x."""
    if x <= tab.x_e.mid - tab.a_e.mid:
        return point(-1.0)
    c = lit(x).sub(tab.x_e).div(tab.a_e)
    return c.acos().div(PI).neg()


def _disk_resid(z: ComplexBox, center: ComplexBox, radius: RealInterval) -> RealInterval:
    d = z.sub(center)
    return d.re.sqr().add(d.im.sqr()).sub(radius.sqr())


def _real_crossing(center: ComplexBox, radius: RealInterval, side: int = -1) -> RealInterval:
    """Real-axis crossing Re c -+ sqrt(r^2 - Im(c)^2) of a circle."""
    s = radius.sqr().sub(center.im.sqr()).sqrt()
    return center.re.sub(s) if side < 0 else center.re.add(s)


def _witness_margin(entries) -> RealInterval:
    """max over entries of (|value| - bound); negative certifies membership."""
    out = None
    for value, bound, kind in entries:
        margin = value.abs().sub(bound) if kind == "abs" else value.sub(bound)
        out = margin if out is None else RealInterval(max(out.lo, margin.lo),
                                                      max(out.hi, margin.hi))
    return out


def _witness_point_margin(tab, center_a, eps_a, angle, center_b, eps_b) -> RealInterval:
    th = lit(angle)
    p = _on_circle(center_a, eps_a, th)
    in_disk = p.abs().sub(point(1.0))
    in_b = p.sub(center_b).abs().sub(eps_b)
    return RealInterval(max(in_disk.lo, in_b.lo), max(in_disk.hi, in_b.hi))


def _estphi_dom2(tab, cache) -> RealInterval:
    u4 = tab.u4
    u5 = tab.u3.sub(tab.u1)
    r4 = tab.r4
    e_m = ComplexBox(tab.cos_pi5, tab.sin_pi5.neg())      # e^{-i pi/5}
    e_p = ComplexBox(tab.cos_pi5, tab.sin_pi5)
    alpha = ComplexBox(tab.b0.sub(tab.c00), point(0.0)).add(
        e_m.scale(tab.b1.div(u4.mul_scalar(2.0))))
    den = point(1.0).sub(r4.sqr())
    c = e_p.scale(u5.mul(r4.sqr()).mul_scalar(2.0).div(den))
    beta = cache.named("betamax", (u4,), "betamax(11.5)")
    return alpha.sub(c).abs().add(beta).sub(u5.mul(r4).mul_scalar(2.0).div(den))


def _build_w0(tab, cache, add):
    a6c = tab.a6.conj()
    e6sq = tab.eps6.sqr()

    def dist_sq_er(r, th):
        z = maps.eval_zeta_w(tab, ComplexBox(r.mul(th.mul(PI).cos()),
                                             r.mul(th.mul(PI).sin())))
        d = z.sub(a6c)
        return d.re.sqr().add(d.im.sqr()).sub(e6sq)

    def unit_resid(th):
        p = _on_circle(a6c, tab.eps6, th.mul(PI))
        return p.re.sqr().add(p.im.sqr()).add_scalar(-1.0)

    r1, r2, r3 = tab.r1, lit(1.4), lit(1.54)
    theta6 = refine_root(lambda t: dist_sq_er(r2, t), -0.4, -0.3, 1e-13)
    theta7 = refine_root(unit_resid, -0.99, -0.9, 1e-13)
    theta8 = maps.eval_zeta_w(tab, ComplexBox(r2.mul(theta6.mul(PI).cos()),
                                              r2.mul(theta6.mul(PI).sin()))).sub(a6c).arg(0).div(PI)
    theta10 = refine_root(unit_resid, 0.3, 0.45, 1e-13)
    theta11 = refine_root(lambda t: dist_sq_er(r1, t), -0.25, -0.1, 1e-13)
    theta9 = maps.eval_zeta_w(tab, ComplexBox(r1.mul(theta11.mul(PI).cos()),
                                              r1.mul(theta11.mul(PI).sin()))).sub(a6c).arg(0).div(PI)
    t5 = maps.eval_zeta_w(tab, ComplexBox(point(0.0), r3.neg())).im

    for nm, val, win in [("theta6", theta6, _win(-0.3488, 4)),
                         ("theta7", theta7, _win(-0.9513, 4)),
                         ("theta8", theta8, _win(-0.5711, 4)),
                         ("theta9", theta9, _win(0.1688, 4)),
                         ("theta10", theta10, _win(0.3800, 4)),
                         ("theta11", theta11, _win(-0.1770, 4)),
                         ("t5", t5, _win(-1.5971, 4))]:
        cache.register(f"w0_{nm}", _const_fn(val))
        add(CheckSpec(id=f"W0.{nm}", group="W0",
                      paper_location="Lemma W0 proof (c), boundary angles",
                      objective="VALUE", quantity=f"w0_{nm}", window=win))

    # (a) the image of the sector boundary stays in the back sector at cv
    cp_box = ComplexBox(tab.cp, point(0.0))
    alpha3 = maps.q_jet(tab, cp_box).derivative(3).scale(point(1.0 / 6.0))
    add(CheckSpec(id="W0.alpha3-remainder", group="W0",
                  paper_location="Lemma W0 proof (a), cubic remainder",
                  objective=MAX,
                  functional=F.f_w0_remainder(tab, alpha3, cp_box),
                  curve=curves.CircleArc(cp_box, point(0.4), 0.0, TWO_PI_HI),
                  relation="<", threshold="0.29", window=_win(0.2885, 4)))

    t0_hi = point(0.5).div(PI.mul_scalar(0.2).sin()).hi
    ell0 = curves.RayTruncated(cp_box, PI.mul_scalar(0.3), 0.4, t0_hi)
    t1_lo = point(0.5).mul(PI.mul_scalar(0.2).cos()).div(PI.mul_scalar(0.2).sin()).lo
    tan3 = PI.mul_scalar(0.3).sin().div(PI.mul_scalar(0.3).cos())
    t2v = tan3.mul(lit(7.5).div(tab.cos_pi5).sub(tab.cp).add_scalar(-0.5))
    base1 = ComplexBox(tab.cp.add_scalar(0.5), point(0.0))
    ell1 = curves.RayTruncated(base1, PI.mul_scalar(0.5), t1_lo, t2v.hi)
    base2 = ComplexBox(tab.cp.add_scalar(0.5), t2v)
    ell2 = curves.RayTruncated(base2, PI.mul_scalar(0.7), 0.0, 100.0)
    cv_anchor = ComplexBox(tab.cv, point(0.0))
    for cid, crv, win_max, win_min in [
            ("ell0", ell0, _win(2.6443, 4), _win(2.4641, 4)),
            ("ell1", ell1, _win(2.9909, 4), _win(2.3140, 4)),
            ("ell2", ell2, _win(2.3504, 4), _win(2.2038, 4))]:
        add(CheckSpec(id=f"W0.{cid}-max-arg", group="W0",
                      paper_location=f"Lemma W0 proof (a), {cid}",
                      objective=MAX, functional=F.f_arg_q_minus(cv_anchor),
                      curve=crv, relation="<", threshold="pi", window=win_max))
        add(CheckSpec(id=f"W0.{cid}-min-arg", group="W0",
                      paper_location=f"Lemma W0 proof (a), {cid}",
                      objective=MIN, functional=F.f_arg_q_minus(cv_anchor),
                      curve=crv, relation=">", threshold="7*pi/10",
                      window=win_min, threshold_window=_win(2.1991, 4)))
    add(CheckSpec(id="W0.ell2-far", group="W0",
                  paper_location="Lemma W0 proof (a), eq. (equ-geq-100)",
                  objective="VALUE", quantity="b1/100 + Q2max(100)",
                  relation="<", threshold="(cv - 7.5/cos(pi/5) - b0)*cos(pi/5)",
                  window=_win(0.2166, 4), threshold_window=_win(0.3233, 4)))

    # (b) the sector entry estimates
    add(CheckSpec(id="W0.case-i", group="W0",
                  paper_location="Lemma W0 proof (b), case (i)",
                  objective="VALUE",
                  quantity="7.5 + c00*cos(pi/5) - c01max - phi1max(7.5)",
                  relation=">", threshold="5.3", window=_win(5.3060, 4)))
    add(CheckSpec(id="W0.case-ii", group="W0",
                  paper_location="Lemma W0 proof (b), case (ii)",
                  objective="VALUE",
                  quantity="cp + 0.5 + c00 - c01max - phi1max(cp + 0.5)",
                  relation=">", threshold="2", window=_win(2.3013, 4)))
    add(CheckSpec(id="W0.case-iii", group="W0",
                  paper_location="Lemma W0 proof (b), case (iii)",
                  objective=MIN, functional=W0SectorEntry(tab),
                  curve=curves.SegmentToCorner(tab),
                  relation=">", threshold="2", window=_win(2.0104, 4)))

    # (c) the boundary arcs stay outside the target sector
    t3_lo = point(2.7).div(PI.mul_scalar(0.28).sin()).lo
    ell3 = curves.RayTruncated(box(0.0), PI.mul_scalar(-0.72), t3_lo, 100.0)
    t4_lo = point(2.7).mul(PI.mul_scalar(0.28).cos()).div(PI.mul_scalar(0.28).sin()).neg().lo
    ell4 = curves.RayTruncated(ComplexBox(point(0.0), lit(-2.7)), point(0.0),
                               t4_lo, tab.x_e.hi)
    ell5 = curves.RayTruncated(ComplexBox(tab.x_e, point(0.0)), PI.mul_scalar(0.5),
                               -2.7, t5.hi)
    ell6 = curves.ZetaImageArc(tab, r3, -0.5, -0.4)
    ell7 = curves.ZetaImageRadial(tab, -0.4, r2.lo, r3.hi)
    ell8 = curves.ZetaImageArc(tab, r2, -0.4, theta6.hi)
    ell11 = curves.ZetaImageArc(tab, r1, theta11.lo, 0.0)
    ell9p = curves.CircleArc(a6c, tab.eps6, PI.mul_scalar(-0.65).lo,
                             theta8.mul(PI).hi)
    ell9pp = curves.CircleArc(a6c, tab.eps6, theta7.mul(PI).lo,
                              PI.mul_scalar(-0.65).hi)
    ell10p = curves.CircleArc(a6c, tab.eps6, theta9.mul(PI).lo,
                              PI.mul_scalar(0.23).hi)
    ell10pp = curves.CircleArc(a6c, tab.eps6, PI.mul_scalar(0.23).lo,
                               theta10.mul(PI).hi)

    uprime = ComplexBox(lit(5.3).div(tab.cos_pi5), point(0.0))
    re_im_arcs = [
        ("ell4", ell4, _win(1.7079, 4), _win(4.7446, 4), "(uprime - 2)*tan(3*pi/10)", _win(6.2641, 4)),
        ("ell5", ell5, _win(1.7079, 4), _win(5.1552, 4), "(uprime - 2)*tan(3*pi/10)", _win(6.2641, 4)),
        ("ell6", ell6, (-6.28317, 5, 1.0, "nearest"), _win(11.6393, 4), "(uprime + 6)*tan(3*pi/10)", (17.2752, 4, 1.0, "nearest")),
        ("ell7", ell7, _win(-32.1938, 4), _win(11.6393, 4), "(uprime + 32)*tan(3*pi/10)", _win(53.0611, 4)),
        ("ell8", ell8, (-45.4566, 4, 1.0, "nearest"), _win(60.8537, 4), "(uprime + 45)*tan(3*pi/10)", (70.9541, 4, 1.0, "nearest")),
        ("ell9p", ell9p, (-107.636, 3, 1.0, "nearest"), _win(60.8537, 4), "(uprime + 107)*tan(3*pi/10)", (156.29, 2, 1.0, "nearest")),
        ("ell10p", ell10p, _win(-121.72, 2), (55.462, 3, 1.0, "nearest"), "(uprime + 121)*tan(3*pi/10)", _win(175.5591, 4)),
    ]
    for cid, crv, win_re, win_im, thr_im, thr_win in re_im_arcs:
        add(CheckSpec(id=f"W0.{cid}-max-re", group="W0",
                      paper_location=f"Lemma W0 proof (c), {cid}",
                      objective=MAX, functional=F.f_re_q(), curve=crv,
                      relation="<", threshold="2", window=win_re))
        add(CheckSpec(id=f"W0.{cid}-max-absim", group="W0",
                      paper_location=f"Lemma W0 proof (c), {cid}",
                      objective=MAX, functional=F.f_absim_q(), curve=crv,
                      relation="<", threshold=thr_im,
                      window=win_im, threshold_window=thr_win))
    add(CheckSpec(id="W0.ell3-max-re", group="W0",
                  paper_location="Lemma W0 proof (c), ell3",
                  objective=MAX, functional=F.f_re_q(), curve=ell3,
                  relation="<", threshold="2", window=_win(1.2378, 4)))
    add(CheckSpec(id="W0.ell3-max-arg", group="W0",
                  paper_location="Lemma W0 proof (c), ell3",
                  objective=MAX, functional=F.f_arg_q_minus(uprime),
                  curve=ell3, relation="<", threshold="-7*pi/10",
                  window=_win(-2.2573, 4), threshold_window=_win(-2.1991, 4)))
    add(CheckSpec(id="W0.ell11-max-re", group="W0",
                  paper_location="Lemma W0 proof (c), ell11",
                  objective=MAX, functional=F.f_re_q(), curve=ell11,
                  relation="<", threshold="2", window=_win(0.7179, 4)))
    # ell11 ends on the real axis where Q - uprime is negative real; the
    # continuous-branch max of arg equals -(min |arg|), so the claim
    # arg < -7 pi/10 is certified through the cut-tolerant |arg|.
    add(CheckSpec(id="W0.ell11-max-arg", group="W0",
                  paper_location="Lemma W0 proof (c), ell11 "
                                 "(|arg| form of the printed -2.7447)",
                  objective=MIN, functional=F.f_absarg_q_minus(uprime),
                  curve=ell11, relation=">", threshold="7*pi/10",
                  window=_win(2.7447, 4), threshold_window=_win(2.1991, 4)))
    add(CheckSpec(id="W0.ell3-far", group="W0",
                  paper_location="Lemma W0 proof (c), ell3 far part",
                  objective="VALUE", quantity="b1/100 + Q2max(100)",
                  relation="<",
                  threshold="(100*sin(0.02*pi) + uprime - b0)*cos(pi/5)",
                  window=_win(0.2166, 4), threshold_window=_win(4.4355, 4)))
    add(CheckSpec(id="W0.ell9pp-min-re-sqrt-q", group="W0",
                  paper_location="Lemma W0 proof (c), ell9 second part",
                  objective=MIN, functional=F.f_re_sqrt_q(), curve=ell9pp,
                  relation=">", threshold="0", window=_win(0.4320, 4)))
    add(CheckSpec(id="W0.ell10pp-min-re-sqrt-q", group="W0",
                  paper_location="Lemma W0 proof (c), ell10 second part",
                  objective=MIN, functional=F.f_re_sqrt_q(), curve=ell10pp,
                  relation=">", threshold="0", window=_win(2.3197, 4)))

    # (d) the a5 disk stays left of the pulled-back sector boundary
    a5c = tab.a5.conj()
    theta4 = tab.a5.im.div(tab.eps5).asin().div(PI)
    arc_d = curves.CircleArc(a5c, tab.eps5, PI.mul_scalar(-0.55).lo,
                             theta4.mul(PI).hi)
    add(CheckSpec(id="W0.d-max-re", group="W0",
                  paper_location="Lemma W0 proof (d)",
                  objective=MAX, functional=F.f_re_q(), curve=arc_d,
                  relation="<", threshold="2", window=_win(1.5813, 4)))
    add(CheckSpec(id="W0.d-min-absarg", group="W0",
                  paper_location="Lemma W0 proof (d)",
                  objective=MIN, functional=F.f_absarg_q_minus(uprime),
                  curve=arc_d, relation=">", threshold="7*pi/10",
                  window=_win(2.3615, 4), threshold_window=_win(2.1991, 4)))
