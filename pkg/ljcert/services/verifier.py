"""
命題ごとの検証

各 verify_* は Certificate を返す。判定はサブチェックの組み合わせで、
数値はすべて厳密な有理数・ℚ(s) の元か、その包含区間で扱う。
主張値（切り捨て小数を含む）は ClaimedConstants から読むので、
変異テストでは VerificationContext の claims を差し替える。
"""

import logging
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ljcert.analysis.certify import Target, certify_sign, check_exact, check_lower_bound, check_upper_bound
from ljcert.analysis.geometry import equal_ball_lens_ratio
from ljcert.analysis.integrals import ball_average_lower_bound, quadrature_ball_average, shell_quadratic, theta_moment
from ljcert.analysis.interval import Interval, enclose_A, enclose_s
from ljcert.analysis.number_field import A, S, NFPolynomial, NumberFieldElem, nf_eval
from ljcert.analysis.polynomial import Polynomial, descartes_bound, isolate_roots, refine_root, sturm_count
from ljcert.analysis.potential import (
    H,
    H_PIECE,
    H_TILDE,
    ONE_PIECE,
    T_PIECE,
    THETA,
    LaurentPiece,
    eval_profile,
    eval_profile_float,
    h_is_negative,
    radial_laplacian_h,
    t_piece,
)
from ljcert.constants.bounds import DEFAULT_CLAIMS, ClaimedConstants
from ljcert.constants.numerics import (
    DEFAULT_ENCLOSURE_WIDTH,
    DEFAULT_MAX_DEPTH,
    ROOT_CERTIFY_WIDTH,
    ROOT_DISPLAY_WIDTH,
)
from ljcert.utils.certificate_types import Certificate, Enclosure, SubCheck, Verdict
from ljcert.utils.output_serializer import format_rational

logger = logging.getLogger(__name__)

_d = format_rational

PROPOSITIONS: tuple[str, ...] = ("2.4", "2.5", "3.1-I", "3.1-II", "3.3", "4.1", "appendix", "5.1")

DEPENDENCIES: dict[str, tuple[str, ...]] = {
    "3.3": ("3.1-II",),
    "4.1": ("2.5",),
    "5.1": ("2.4", "2.5", "3.1-I", "3.1-II", "3.3", "4.1", "appendix"),
}


@dataclass(frozen=True)
class VerificationContext:
    claims: ClaimedConstants = DEFAULT_CLAIMS
    max_depth: int = DEFAULT_MAX_DEPTH
    width: Fraction = DEFAULT_ENCLOSURE_WIDTH


DEFAULT_CONTEXT = VerificationContext()


def _poly(terms: Mapping[int, Fraction | int]) -> Polynomial:
    return Polynomial.from_terms(dict(terms))


def _interval_fn(p: Polynomial | NFPolynomial, ctx: VerificationContext) -> Callable[[Interval], Interval]:
    if isinstance(p, NFPolynomial):
        return lambda r: p.evaluate_interval(r, ctx.width)
    return p.evaluate_interval


def _certify(
    label: str,
    p: Polynomial | NFPolynomial,
    lo: Fraction | str,
    hi: Fraction | str,
    target: Target,
    ctx: VerificationContext,
) -> SubCheck:
    return certify_sign(_interval_fn(p, ctx), Interval(Fraction(lo), Fraction(hi)), target, label=label, max_depth=ctx.max_depth)


def _dominates(
    label: str,
    exact: Sequence[NumberFieldElem],
    claimed: Sequence[Fraction],
    lo: Fraction,
    hi: Fraction,
    ctx: VerificationContext,
) -> SubCheck:
    """厳密係数の r 多項式が切り捨て係数の多項式を [lo, hi] 上で上回ること（昇順係数）"""
    diff = NFPolynomial(e - k for e, k in zip(exact, claimed))
    return _certify(label, diff, lo, hi, Target.POSITIVE, ctx)


def _dependency_checks(
    proposition: str, dependencies: Mapping[str, Certificate] | None
) -> list[SubCheck]:
    if dependencies is None:
        return []
    checks = []
    for dep in DEPENDENCIES.get(proposition, ()):
        cert = dependencies.get(dep)
        if cert is None:
            checks.append(SubCheck(f"依存 {dep}", Verdict.INCONCLUSIVE, detail="未実行"))
        else:
            checks.append(SubCheck(f"依存 {dep}", cert.verdict, detail=f"{dep}: {cert.verdict.value}"))
    return checks


def _finish(proposition: str, checks: Sequence[SubCheck], enclosures: Sequence[Enclosure] = ()) -> Certificate:
    cert = Certificate.build(proposition, checks, enclosures)
    if cert.verdict is Verdict.PASS:
        logger.info(f"命題 {proposition}: PASS")
    else:
        logger.warning(f"命題 {proposition}: {cert.verdict.value}")
    return cert


# ----------------------------------------------------------------------
# t と h の接触、q の符号


def q_polynomial(offset: Fraction = DEFAULT_CLAIMS.t_offset) -> NFPolynomial:
    """q(r) = r¹²(t(r) − h(r)) = −offset·r¹² + A r¹¹ − 2r⁶ + 1"""
    return NFPolynomial.from_terms({12: -offset, 11: A, 6: -2, 0: 1})


def _t_above_h_checks(ctx: VerificationContext) -> list[SubCheck]:
    """Descartes の符号法則と s での3重根から、q の符号は s の左右で一定"""
    q = q_polynomial(ctx.claims.t_offset)
    derivatives = [q, q.derivative(), q.derivative().derivative()]
    multiplicity = all(nf_eval(p).is_zero() for p in derivatives)
    return [
        check_exact("Descartes: q の符号変化数 = 3", descartes_bound(q) == 3, detail=f"{descartes_bound(q)}"),
        check_exact("q(s) = q'(s) = q''(s) = 0（重複度 3 以上）", multiplicity),
        _certify("q > 0 on [0.01, 1.1]", q, "0.01", "1.1", Target.POSITIVE, ctx),
    ]


def verify_prop_2_4(ctx: VerificationContext = DEFAULT_CONTEXT) -> Certificate:
    offset = ctx.claims.t_offset
    diff = t_piece(offset) - H_PIECE
    tangency = SubCheck.group(
        "s で t と h が2階まで接する",
        [check_exact(f"(t − h)^({k})(s) = 0", diff.derivative(k).evaluate_exact(S).is_zero()) for k in range(3)],
    )
    q = q_polynomial(offset)
    a_enc = enclose_A(ctx.width)
    q_at_one = q.evaluate_interval(Interval.point(1), ctx.width)
    checks = [
        tangency,
        *_t_above_h_checks(ctx),
        _certify("q < 0 on [1.2, 4]", q, "1.2", "4", Target.NEGATIVE, ctx),
        check_upper_bound("r ≥ 4: A − 4·offset < 0 かつ 1 − 2r⁶ < 0", a_enc - 4 * offset, 0),
        check_lower_bound("q(1) > 0", q_at_one, 0),
    ]
    return _finish(
        "2.4",
        checks,
        [
            Enclosure("s", enclose_s(ctx.width), "(11/5)^(1/6)"),
            Enclosure("A", a_enc, "(360/121)·s"),
            Enclosure("q(1)", q_at_one, "> 0"),
        ],
    )


# ----------------------------------------------------------------------
# 劣調和性と θ ≥ h̃


_MEAN_SPOT_CHECKS: tuple[tuple[float, float], ...] = ((1.5, 0.3), (0.8, 0.3), (1.2, 0.5), (2.0, 0.9), (3.0, 1.5))


def _spherical_mean_checks() -> list[SubCheck]:
    checks = []
    for norm, radius in _MEAN_SPOT_CHECKS:
        mean, err = quadrature_ball_average(norm, radius)
        centre = float(eval_profile_float(THETA, norm))
        ok = mean >= centre - err - 1e-12
        checks.append(
            SubCheck(
                f"球平均 (‖x‖={norm}, 半径 {radius}) ≥ θ(‖x‖)",
                Verdict.PASS if ok else Verdict.FAIL,
                detail=f"平均 {mean:.12g}, θ {centre:.12g}, 誤差推定 {err:.1e}",
            )
        )
    return checks


def verify_prop_2_5(ctx: VerificationContext = DEFAULT_CONTEXT) -> Certificate:
    g = _poly({6: 5, 0: -11})
    laplacian = SubCheck.group(
        "Δh ≥ 0 on [s, ∞)",
        [
            check_exact("Δh = 12 r⁻¹⁴ (5r⁶ − 11)", H_PIECE.laplacian() == LaurentPiece.of({-14: -132, -8: 60})),
            check_exact("5s⁶ − 11 = 0", nf_eval(g).is_zero()),
            check_exact(
                "(5r⁶ − 11)' = 30r⁵ > 0 (r > 0)",
                not g.derivative().is_zero() and all(c >= 0 for c in g.derivative().coeffs),
            ),
            certify_sign(
                lambda r: radial_laplacian_h(r, ctx.width),
                Interval(Fraction(6, 5), Fraction(8)),
                Target.POSITIVE,
                label="Δh > 0 on [1.2, 8]",
                max_depth=ctx.max_depth,
            ),
            check_exact("r ≥ 8: 5r⁶ − 11 > 0", g(8) > 0),
        ],
    )
    harmonic = check_exact("Δt = 0（A/r と定数は調和）", T_PIECE.laplacian().is_zero())

    t_at_one = eval_profile(THETA, Interval.point(1), ctx.width)
    grid = SubCheck.group(
        "格子点で θ − h̃ > 0 (r = 0.05, …, 1.1)",
        [
            check_lower_bound(
                f"r = {_d(Fraction(k, 20))}",
                eval_profile(THETA, Interval.point(Fraction(k, 20)), ctx.width)
                - eval_profile(H_TILDE, Interval.point(Fraction(k, 20)), ctx.width),
                0,
            )
            for k in range(1, 23)
        ],
    )
    majorant = SubCheck.group(
        "h̃ ≤ θ on (0, ∞)",
        [
            check_exact("t' = −A r⁻² < 0", A.sign() > 0),
            check_lower_bound("(0, 1]: θ = t ≥ t(1) > 1 = h̃", t_at_one, 1),
            SubCheck.group("(1, s]: θ = t > h = h̃", _t_above_h_checks(ctx)),
            check_exact(
                "(s, ∞): θ = h̃ = h",
                THETA.pieces[1] == H_PIECE and H_TILDE.pieces[1] == H_PIECE and (S - 1).sign() > 0,
            ),
            grid,
        ],
    )
    means = SubCheck.group("数値積分による球平均の確認（0 ∉ B）", _spherical_mean_checks())
    return _finish(
        "2.5",
        [laplacian, harmonic, majorant, means],
        [Enclosure("t(1)", t_at_one, "> 1"), Enclosure("Δh(1)", radial_laplacian_h(Interval.point(1), ctx.width), "= −72")],
    )


# ----------------------------------------------------------------------
# μ(a) の上界


def _verify_prop_3_1_wide(ctx: VerificationContext) -> Certificate:
    cl = ctx.claims
    value = 24 * theta_moment(cl.truncation_wide, ctx.width)
    checks = [
        check_upper_bound(f"24·∫_{{{_d(cl.truncation_wide)}}}^∞ θ w² dw < {_d(cl.moment_bound_wide)}", value, cl.moment_bound_wide),
        check_exact(
            f"{_d(cl.truncation_wide)} = {_d(cl.near_origin_radius)} − {_d(cl.max_spacing)}/2",
            cl.truncation_wide == cl.near_origin_radius - cl.max_spacing / 2,
        ),
        check_exact(f"{_d(cl.near_origin_radius)} < 2^(−1/6)（h < 0）", h_is_negative(cl.near_origin_radius)),
    ]
    return _finish("3.1-I", checks, [Enclosure(f"24·I({_d(cl.truncation_wide)})", value, f"< {_d(cl.moment_bound_wide)}")])


def _verify_prop_3_1_narrow(ctx: VerificationContext) -> Certificate:
    cl = ctx.claims
    c_lo, c_hi = cl.min_spacing / 2, cl.max_spacing / 2
    r_lo, r_hi = cl.near_origin_radius, cl.truncation_narrow + c_hi
    w1, w2 = cl.truncation_narrow, cl.narrow_outer_limit
    value = 24 * theta_moment(w1, ctx.width)

    bookkeeping = SubCheck.group(
        "積分範囲",
        [
            check_exact(f"{_d(w2)} = {_d(cl.near_origin_radius)} + {_d(cl.min_spacing)}/2", w2 == cl.near_origin_radius + cl.min_spacing / 2),
            check_exact(f"r + c ≥ {_d(r_lo)} + {_d(c_lo)} ≥ {_d(w2)}", r_lo + c_lo >= w2),
            check_exact(f"r ≤ {_d(w1)} + c なので r − c ≤ {_d(w1)}", True, detail="領域の定義"),
            check_exact(f"{_d(r_hi)} < 1", r_hi < 1),
            check_exact("t は単調減少", A.sign() > 0),
            check_lower_bound(f"t({_d(cl.t_positive_limit)}) > 0", T_PIECE.evaluate_interval(Interval.point(cl.t_positive_limit), ctx.width), 0),
            check_exact(f"{_d(w2)} < {_d(cl.t_positive_limit)}", w2 < cl.t_positive_limit),
        ],
    )

    sq = shell_quadratic(w1, w2)
    k_c2, k_r2, k_r1, k_0 = cl.narrow_quadratic
    domination = SubCheck.group(
        "厳密な α, β の式 ≥ 切り捨て2次式",
        [
            check_exact("c² の係数", (sq.c2 - k_c2).sign() >= 0),
            _dominates(f"r の2次式 on [{_d(r_lo)}, {_d(r_hi)}]", (sq.const, sq.r1, sq.r2), (k_0, k_r1, k_r2), r_lo, r_hi, ctx),
        ],
    )

    # c で単調減少: −k_c2·c² < 3Q(r)、3Q は r* < 0.89 で最大なので r = 0.64 + c で評価する
    q2, q1, q0 = cl.decreasing_quadratic
    claimed_dec = _poly({2: q2, 1: q1, 0: q0})
    shifted = Polynomial([w1, 1])
    actual_dec = 3 * (k_r2 * shifted**2 + k_r1 * shifted + k_0) + _poly({2: k_c2})
    vertex = -k_r1 / (2 * k_r2)
    gap = actual_dec - claimed_dec
    decreasing = SubCheck.group(
        "左辺は c について単調減少",
        [
            check_exact(f"頂点 r* = {float(vertex):.6f} < {_d(r_lo)} かつ上に凸", k_r2 < 0 and vertex < r_lo),
            check_exact("3Q(0.64 + c) + k·c² は主張の2次式と一致", True)
            if gap.is_zero()
            else _certify("3Q(0.64 + c) + k·c² ≥ 主張の2次式", gap, c_lo, c_hi, Target.POSITIVE, ctx),
            _certify(f"{_d(q2)}c² + {_d(q1)}c + {_d(q0)} > 0 on [{_d(c_lo)}, {_d(c_hi)}]", claimed_dec, c_lo, c_hi, Target.POSITIVE, ctx),
        ],
    )

    k0, k1, k2 = cl.club_bound
    scale = Fraction(3, 4) / c_hi**3
    # (3/(4c³r))(k_c2 c² + Q(r)) − (k0 − k1 r − k2/r) に r を掛けたもの
    club_gap = _poly({2: scale * k_r2 + k1, 1: scale * k_r1 - k0, 0: scale * (k_c2 * c_hi**2 + k_0) + k2})
    club_minus_one = _poly({2: -k1, 1: k0 - 1, 0: -k2})
    club = SubCheck.group(
        f"(♣) c = {_d(c_hi)}",
        [
            _certify(f"左辺 ≥ {_d(k0)} − {_d(k1)}r − {_d(k2)}/r", club_gap, r_lo, r_hi, Target.POSITIVE, ctx),
            _certify(f"{_d(k0)} − {_d(k1)}r − {_d(k2)}/r > 1", club_minus_one, r_lo, r_hi, Target.POSITIVE, ctx),
            certify_sign(
                lambda r: 1 - eval_profile(H, r, ctx.width),
                Interval(r_lo, r_hi),
                Target.POSITIVE,
                label="1 > h(r)",
                max_depth=ctx.max_depth,
            ),
            check_exact("r = 1 で右辺 > 1", k0 - k1 - k2 > 1),
        ],
    )
    checks = [
        check_upper_bound(f"24·∫_{{{_d(w1)}}}^∞ θ w² dw < {_d(cl.moment_bound_narrow)}", value, cl.moment_bound_narrow),
        bookkeeping,
        domination,
        decreasing,
        club,
    ]
    return _finish("3.1-II", checks, [Enclosure(f"24·I({_d(w1)})", value, f"< {_d(cl.moment_bound_narrow)}")])


def verify_prop_3_1(variant: str, ctx: VerificationContext = DEFAULT_CONTEXT) -> Certificate:
    key = variant.upper().removeprefix("3.1-").removeprefix("3.1")
    if key == "I":
        return _verify_prop_3_1_wide(ctx)
    if key == "II":
        return _verify_prop_3_1_narrow(ctx)
    raise ValueError(f"variant は I か II: {variant!r}")


# ----------------------------------------------------------------------
# 最小距離


def crossing_polynomial(moment_bound: Fraction) -> Polynomial:
    """K a⁹ + 2a⁶ − 1（= a¹²(−a⁻¹² + 2a⁻⁶ + K a⁻³)）"""
    return _poly({9: moment_bound, 6: 2, 0: -1})


def verify_cor_3_3(
    ctx: VerificationContext = DEFAULT_CONTEXT, dependencies: Mapping[str, Certificate] | None = None
) -> Certificate:
    cl = ctx.claims
    a0, ac = cl.min_distance, cl.compact_distance
    f = crossing_polynomial(cl.moment_bound_narrow)
    g = crossing_polynomial(cl.moment_bound_wide)
    laurent = LaurentPiece.of({-12: -1, -6: 2, -3: cl.moment_bound_narrow}).shift(12)
    upper = a0 + Fraction(1, 1000)
    roots = isolate_roots(f, Interval(a0, upper), Fraction(1, 10**6)) if f(upper) > 0 else []

    checks = [
        *_dependency_checks("3.3", dependencies),
        check_exact("a¹²(−a⁻¹² + 2a⁻⁶ + K a⁻³) = K a⁹ + 2a⁶ − 1", laurent == LaurentPiece.of({9: cl.moment_bound_narrow, 6: 2, 0: -1})),
        SubCheck.group(
            f"{_d(cl.moment_bound_narrow)}a⁹ + 2a⁶ < 1 on [{_d(ac)}, {_d(a0)}]",
            [
                check_exact("係数が非負なので a > 0 で単調増加", all(c >= 0 for c in f.derivative().coeffs)),
                check_exact(f"a = {_d(a0)} で < 1", f(a0) < 0, detail=f"{float(f(a0) + 1):.6f}"),
                _certify("区間全体", f, ac, a0, Target.NEGATIVE, ctx),
            ],
        ),
        SubCheck.group(
            f"a ≤ {_d(ac)}: 2a⁶ + {_d(cl.moment_bound_wide)}a⁹ < 1",
            [
                check_exact("単調増加", all(c >= 0 for c in g.derivative().coeffs)),
                check_exact(f"a = {_d(ac)} で < 1", g(ac) < 0, detail=f"{float(g(ac) + 1):.6f}"),
            ],
        ),
        check_exact(f"({_d(a0)}, {_d(upper)}] に交点がちょうど1つ", sturm_count(f, a0, upper) == 1),
    ]
    enclosures = [Enclosure(f"{_d(cl.moment_bound_narrow)}a⁹ + 2a⁶ at {_d(a0)}", Interval.point(f(a0) + 1), "< 1")]
    if roots:
        enclosures.append(Enclosure("交点", roots[0].interval, f"∈ ({_d(a0)}, {_d(upper)})"))
    return _finish("3.3", checks, enclosures)


# ----------------------------------------------------------------------
# 半径 0.49 の球による h̃ の上からの評価


def _region_checks(
    label: str,
    ctx: VerificationContext,
    r_lo: Fraction,
    r_hi: Fraction,
    w2: Fraction,
    claimed: tuple[Fraction, Fraction, Fraction],
) -> SubCheck:
    cl = ctx.claims
    c, w1 = cl.ball_radius, cl.truncation_wide
    k2, k1, k0 = claimed
    e0, e1, e2 = shell_quadratic(w1, w2).at_radius(c)
    volume_factor = Fraction(4, 3) * c**3
    return SubCheck.group(
        label,
        [
            check_exact(f"r ≤ {_d(r_hi)} なので r − c ≤ {_d(w1)}", r_hi - c <= w1),
            check_exact(f"r ≥ {_d(r_lo)} なので r + c ≥ {_d(w2)}", r_lo + c >= w2),
            check_lower_bound(f"t({_d(w2)}) > 0", T_PIECE.evaluate_interval(Interval.point(w2), ctx.width), 0),
            _dominates(f"α, β の式 ≥ {_d(k2)}r² + {_d(k1)}r + {_d(k0)}", (e0, e1, e2), (k0, k1, k2), r_lo, r_hi, ctx),
            _certify(
                f"(3/(4c³r))({_d(k2)}r² + {_d(k1)}r + {_d(k0)}) > 1 on [{_d(r_lo)}, {_d(r_hi)}]",
                _poly({2: k2, 1: k1 - volume_factor, 0: k0}),
                r_lo,
                r_hi,
                Target.POSITIVE,
                ctx,
            ),
        ],
    )


def verify_prop_4_1(
    ctx: VerificationContext = DEFAULT_CONTEXT, dependencies: Mapping[str, Certificate] | None = None
) -> Certificate:
    cl = ctx.claims
    c, trunc = cl.ball_radius, cl.truncation_wide
    region1 = SubCheck.group(
        f"領域1: r ≥ {_d(cl.region_outer)}",
        [
            check_exact(f"{_d(cl.region_outer)} − {_d(c)} ≥ {_d(trunc)}（切り捨ては効かない）", cl.region_outer - c >= trunc),
            check_exact("0 ∉ B_x", cl.region_outer > c),
            *_dependency_checks("4.1", dependencies),
        ],
    )
    region2 = _region_checks(f"領域2: {_d(cl.region_inner)} ≤ r ≤ {_d(cl.region_split)}", ctx, cl.region_inner, cl.region_split, cl.region2_limit, cl.region2_quadratic)
    region3 = _region_checks(f"領域3: {_d(cl.region_split)} ≤ r ≤ {_d(cl.region_outer)}", ctx, cl.region_split, cl.region_outer, cl.region3_limit, cl.region3_quadratic)
    h_tilde_le_one = check_exact("1 − h = (1 − r⁻⁶)² なので h̃ ≤ 1", ONE_PIECE - H_PIECE == LaurentPiece.of({0: 1, -6: -2, -12: 1}))

    steps = int((cl.region_outer - cl.region_inner) * 100)
    grid_points = [cl.region_inner + Fraction(k, 100) for k in range(steps + 1)]
    grid = SubCheck.group(
        f"格子点での球平均の下界 > 1（r = {_d(cl.region_inner)}, …, {_d(cl.region_outer)}）",
        [
            check_lower_bound(f"r = {_d(r)}", ball_average_lower_bound(Interval.point(r), c, trunc, ctx.width), 1)
            for r in grid_points
        ],
    )
    edge = ball_average_lower_bound(Interval.point(cl.region_outer), c, trunc, ctx.width)
    return _finish(
        "4.1",
        [region1, region2, region3, h_tilde_le_one, grid],
        [Enclosure(f"球平均の下界 (r = {_d(cl.region_outer)})", edge, "> 1")],
    )


# ----------------------------------------------------------------------
# 付録: P, R, R'


@dataclass(frozen=True)
class CancellationPolynomials:
    c1: Fraction
    c2: Fraction
    P: Polynomial
    R: Polynomial
    cubic: Polynomial


def cancellation_polynomials(density_bound: Fraction, diameter: Fraction) -> CancellationPolynomials:
    """(K/(2ρ³))(ρ − d)²(d + 2ρ) + 2(h(d) − 1) < 0 に d¹² を掛けた多項式 P と、P' = d⁵R、R' = d⁵·cubic"""
    K, rho = density_bound, diameter
    c1 = K / (2 * rho**3)
    c2 = -3 * K / (2 * rho)
    P = _poly({15: c1, 13: c2, 12: K - 2, 6: 4, 0: -2})
    R = _poly({9: 15 * c1, 7: 13 * c2, 6: 12 * (K - 2), 0: 24})
    cubic = _poly({3: 135 * c1, 1: 91 * c2, 0: 72 * (K - 2)})
    return CancellationPolynomials(c1, c2, P, R, cubic)


def verify_appendix(ctx: VerificationContext = DEFAULT_CONTEXT) -> Certificate:
    cl = ctx.claims
    rho = 2 * cl.ball_radius
    polys = cancellation_polynomials(cl.density_bound, rho)
    P, R, cubic = polys.P, polys.R, polys.cubic
    x = Polynomial.x()
    reconstructed = polys.c1 * (rho - x) ** 2 * (x + 2 * rho) * x**12 + _poly({0: -2, 6: 4, 12: -2})

    roots = isolate_roots(cubic, Interval(-2, 2), ROOT_DISPLAY_WIDTH)
    root_checks: list[SubCheck] = [check_exact("R' の3次因子の実根は3つ", len(roots) == 3)]
    enclosures: list[Enclosure] = []
    if len(roots) == 3:
        rho2, rho3 = roots[1].interval, roots[2].interval
        refined = refine_root(cubic, roots[2], ROOT_CERTIFY_WIDTH).interval
        r_min = R.evaluate_interval(refined)
        root_checks += [
            check_exact(f"0 < ρ₂ < ρ₃ < {_d(rho)}", 0 < rho2.lo and rho2.hi < rho3.lo and rho3.hi < rho),
            check_exact("3次因子の最高次係数 > 0（ρ₃ で R は極小）", cubic.leading > 0),
            check_lower_bound("R(ρ₃) > 0", r_min, 0),
            check_exact(f"R(0) > 0, R({_d(rho)}) > 0", R(0) > 0 and R(rho) > 0),
        ]
        for name, enc, claim in zip(("ρ₁", "ρ₂", "ρ₃"), roots, ("< 0", "∈ (0, ρ₃)", f"< {_d(rho)}")):
            enclosures.append(Enclosure(name, enc.interval, claim))
        enclosures.append(Enclosure("R(ρ₃)", r_min, "> 0"))

    checks = [
        SubCheck.group(
            "P の係数",
            [
                check_exact("展開が P と一致", reconstructed == P),
                check_exact("c₂ = −8475/49", polys.c2 == Fraction(-8475, 49)),
                check_exact("d¹² の係数 111", P.coeffs[12] == 111),
            ],
        ),
        check_exact("P' = d⁵·R", P.derivative() == x**5 * R),
        SubCheck.group(
            f"R > 0 on (0, {_d(rho)}]（Sturm）",
            [
                check_exact(f"sturm_count(R, 0, {_d(rho)}) = 0", sturm_count(R, 0, rho) == 0),
                check_exact(f"R({_d(rho / 2)}) > 0", R(rho / 2) > 0),
            ],
        ),
        SubCheck.group(
            "R > 0 on (0, 0.98]（R' の根）",
            [check_exact("R' = d⁵·(3次式)", R.derivative() == x**5 * cubic), *root_checks],
        ),
        check_exact(f"P({_d(rho)}) < 0", P(rho) < 0),
        check_exact("P(0) = −2", P(0) == -2),
    ]
    return _finish("appendix", checks, enclosures)


# ----------------------------------------------------------------------
# 最終上界


def _run_dependencies(ctx: VerificationContext) -> dict[str, Certificate]:
    results: dict[str, Certificate] = {}
    for prop in DEPENDENCIES["5.1"]:
        results[prop] = run_proposition(prop, ctx, results)
    return results


def verify_theorem_5_1(
    ctx: VerificationContext = DEFAULT_CONTEXT, dependencies: Mapping[str, Certificate] | None = None
) -> Certificate:
    cl = ctx.claims
    deps = dependencies if dependencies is not None else _run_dependencies(ctx)
    rho = 2 * cl.ball_radius

    density_value = 24 * theta_moment(0, ctx.width)
    density = SubCheck.group(
        "一様な密度の上界",
        [
            check_upper_bound(f"24·∫_0^∞ θ w² dw < {_d(cl.density_moment_bound)}", density_value, cl.density_moment_bound),
            check_exact(
                f"{_d(cl.density_moment_bound)}/{_d(cl.min_distance)}³ < {_d(cl.density_bound)}",
                cl.density_moment_bound / cl.min_distance**3 < cl.density_bound,
            ),
        ],
    )
    x = Polynomial.x()
    lens = SubCheck.group(
        "レンズ体積比 = (0.98 − d)²(d + 1.96)/(2·0.98³)",
        [
            check_exact(
                f"d = {_d(d)}",
                equal_ball_lens_ratio(cl.ball_radius, d) == (rho - d) ** 2 * (d + 2 * rho) / (2 * rho**3),
            )
            for d in (Fraction(1, 10), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(9, 10))
        ],
    )
    multiplicity = SubCheck.group(
        "1 + k(k−1)/2 ≥ k",
        [
            check_exact("1 + k(k−1)/2 − k = (k−1)(k−2)/2", 1 + x * (x - 1) * Fraction(1, 2) - x == (x - 1) * (x - 2) * Fraction(1, 2)),
            check_exact("k = 0, …, 10", all(1 + k * (k - 1) // 2 >= k for k in range(11))),
        ],
    )
    b_value = 12 * theta_moment(cl.truncation_wide, ctx.width) / rho**3
    checks = [
        *_dependency_checks("5.1", deps),
        density,
        SubCheck(
            "対ごとの相殺不等式（付録）",
            deps["appendix"].verdict if "appendix" in deps else Verdict.INCONCLUSIVE,
        ),
        check_exact(f"球の直径 {_d(rho)} = 2·{_d(cl.ball_radius)}", rho == 2 * cl.ball_radius),
        lens,
        multiplicity,
        check_upper_bound(f"B ≤ 12·∫_{{{_d(cl.truncation_wide)}}}^∞ θ w² dw / {_d(rho)}³ < {_d(cl.stability_bound)}", b_value, cl.stability_bound),
    ]
    return _finish(
        "5.1",
        checks,
        [
            Enclosure("B の上界", b_value, f"< {_d(cl.stability_bound)}"),
            Enclosure(f"24·I(0)/{_d(cl.min_distance)}³", density_value / cl.min_distance**3, f"< {_d(cl.density_bound)}"),
        ],
    )


# ----------------------------------------------------------------------


def run_proposition(
    proposition: str, ctx: VerificationContext = DEFAULT_CONTEXT, dependencies: Mapping[str, Certificate] | None = None
) -> Certificate:
    """命題 ID から検証を1つ実行する。"""
    logger.info(f"命題 {proposition} を検証します")
    if proposition == "2.4":
        return verify_prop_2_4(ctx)
    if proposition == "2.5":
        return verify_prop_2_5(ctx)
    if proposition == "3.1-I":
        return verify_prop_3_1("I", ctx)
    if proposition == "3.1-II":
        return verify_prop_3_1("II", ctx)
    if proposition == "3.3":
        return verify_cor_3_3(ctx, dependencies)
    if proposition == "4.1":
        return verify_prop_4_1(ctx, dependencies)
    if proposition == "appendix":
        return verify_appendix(ctx)
    if proposition == "5.1":
        return verify_theorem_5_1(ctx, dependencies)
    raise ValueError(f"未知の命題です: {proposition!r}")
