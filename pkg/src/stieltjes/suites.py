"""Named validation suites: every identity check, with stable ids.

Suite ids are opaque stable strings (documented in the README); a suite maps
to a callable returning one or more IdentityReports.  Reports whose meta
carries the "paper-discrepancy" marker are recorded but do not count toward
the suite exit status (they document a known defect in the source material).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List

from mpmath import mp, mpf

from .core import IdentityReport, PrecisionConfig
from . import constants, fourier, gammafuncs, hurwitz
from .kernels import sum_alternating_accelerated, sum_trig_averaged

EXPECTED_FAILURE_MARK = "paper-discrepancy"


def _as_list(res) -> List[IdentityReport]:
    return res if isinstance(res, list) else [res]


def _report(identity, lhs, rhs, tol, x=None, meta="") -> IdentityReport:
    return IdentityReport.build(identity, lhs, rhs, tol, x=x, meta=meta)


def _recurrence_checks(cfg) -> List[IdentityReport]:
    out = []
    for x in (mpf(3) / 10, mpf(1), mpf(5) / 2):
        lhs = gammafuncs.digamma(1 + x, cfg) - gammafuncs.digamma(x, cfg)
        out.append(_report("eq-2.8-recurrence", lhs, 1 / x, mpf(10) ** -12, x=x))
    return out


def _shift_checks(cfg) -> List[IdentityReport]:
    out = []
    for m, x in ((0, mpf(2)), (0, mpf(1) / 2), (1, mpf(1)), (1, mpf(1) / 2)):
        rep = constants.stieltjes_shift(m, x, cfg)
        rep.identity = "eq-2.9-shift" if m == 0 else "shift-general"
        out.append(rep)
    return out


def _gamma0_digamma(cfg) -> List[IdentityReport]:
    out = []
    for x in (mpf(3) / 10, mpf(1), mpf(7) / 4):
        lhs = constants.hasse_gamma(0, x, cfg).value
        rhs = -gammafuncs.digamma(x, cfg)
        out.append(_report("eq-2.10-gamma0-digamma", lhs, rhs, mpf(10) ** -12, x=x))
    return out


def _digamma_integral(cfg) -> List[IdentityReport]:
    return [gammafuncs.digamma_integral_check(x, cfg)
            for x in (mpf(1), mpf(2), mp.e)]


def _coffey_integral(cfg) -> List[IdentityReport]:
    return [constants.coffey_difference_integral(1, 1, cfg),
            constants.coffey_difference_integral(2, 1, cfg),
            constants.coffey_difference_integral(1, 2, cfg)]


def _sondow_digamma_series(cfg) -> List[IdentityReport]:
    out = []
    for x, label in ((mpf(1), "x=1"), (mpf(2), "x=2"), (mpf(1) / 2, "x=1/2")):
        lhs = constants.digamma_hasse_series(x, cfg).value
        rhs = gammafuncs.digamma(x, cfg)
        out.append(_report("eq-2.11-digamma-series", lhs, rhs,
                           mpf(10) ** -12, x=x, meta=label))
    return out


def _gamma1_prime_checks(cfg) -> List[IdentityReport]:
    # sign contract: gamma_1'(x) < 0 for x >= e
    out = []
    for x in (mp.e, mpf(4), mpf(10)):
        v = constants.gamma1_prime(x, cfg)
        rep = IdentityReport(identity="gamma1-derivative-negative",
                             lhs=v, rhs=mpf(0),
                             residual=mpf(0) if v < 0 else abs(v),
                             tolerance=mpf(0), passed=bool(v < 0),
                             x=x, meta="pass iff value < 0")
        out.append(rep)
    return out


def _elementary_fourier(cfg) -> List[IdentityReport]:
    out = []
    for x in (mpf(1) / 4, mpf(3) / 10):
        s = sum_trig_averaged(lambda n: mpf(1) / n, "sin", x, cfg.eased(12))
        out.append(_report("eq-3.8-sawtooth", s.value,
                           mp.pi * (mpf(1) / 2 - x), mpf(10) ** -8, x=x))
        c = sum_trig_averaged(lambda n: mpf(1) / n, "cos", x, cfg.eased(12))
        out.append(_report("eq-3.9-log-sine", c.value,
                           -mp.log(2 * mp.sin(mp.pi * x)), mpf(10) ** -8, x=x))
    return out


def _hurwitz_fourier(cfg) -> List[IdentityReport]:
    pts = ((mpf(-1) / 2, mpf(3) / 10), (mpf(-1), mpf(7) / 10),
           (mpf(1) / 2, mpf(1) / 4))
    out = []
    for s, x in pts:
        lhs = hurwitz.zeta_fourier(s, x, cfg).value
        rhs = hurwitz.zeta_hasse(s, x, 0, cfg).value
        out.append(_report("eq-3.10-hurwitz-fourier", lhs, rhs,
                           mpf(10) ** -6, x=x, meta=f"s={mp.nstr(s, 6)}"))
    return out


def _lerch_identity(cfg) -> List[IdentityReport]:
    out = []
    for k in range(1, 10):
        x = mpf(k) / 10
        lhs = hurwitz.zeta_prime0(x, "hasse", cfg) + mp.log(2 * mp.pi) / 2
        rhs = gammafuncs.log_gamma(x, cfg)
        out.append(_report("eq-3.14-lerch-identity", lhs, rhs,
                           mpf(10) ** -10, x=x))
    return out


def _kummer(cfg) -> List[IdentityReport]:
    return [fourier.kummer_log_gamma(x, cfg)
            for x in (mpf(1) / 4, mpf(1) / 3, mpf(2) / 3)]


def _series_316(cfg) -> List[IdentityReport]:
    return [fourier.series_316(x, cfg)
            for x in (mpf(1) / 4, mpf(1) / 2, mpf(3) / 4)]


def _wallis(cfg) -> List[IdentityReport]:
    res = fourier.wallis_alternating(cfg)
    return [_report("eq-3.17-wallis", res.value, mp.log(mp.pi / 2),
                    mpf(10) ** -10)]


def _deninger(cfg) -> List[IdentityReport]:
    return [fourier.deninger_f(x, cfg)
            for x in (mpf(1) / 2, mpf(1) / 4, mpf(1) / 3)]


def _landau_f(cfg) -> List[IdentityReport]:
    return [fourier.landau_f_functional(x, cfg)
            for x in (mpf(1) / 4, mpf(1) / 6, mpf(1) / 8)]


def _gamma1_fourier(cfg) -> List[IdentityReport]:
    out = []
    for x in (mpf(1) / 4, mpf(1) / 3, mpf(1) / 2):
        lhs = fourier.gamma1_fourier(x, cfg).value
        rhs = constants.hasse_gamma(1, x, cfg).value
        out.append(_report("eq-3.23-gamma1-fourier", lhs, rhs,
                           mpf(10) ** -4, x=x))
    return out


def _family_325(cfg) -> List[IdentityReport]:
    return [fourier.series_325_family(mpf(1) / 3, "3.25", cfg),
            fourier.series_325_family(Fraction(1, 4), "3.27", cfg),
            fourier.series_325_family(mpf(1) / 3, "3.28", cfg),
            fourier.series_325_family(mpf(1) / 3, "3.29", cfg)]


def _kolbig(cfg) -> List[IdentityReport]:
    reps = fourier.kolbig_check(cfg)
    reps[0].identity = "eq-3.30-kolbig-equivalence"
    reps[1].identity = "eq-3.30-kolbig-quadrature"
    reps[2].identity = "eq-3.30-kolbig-integrated"
    return reps


def _gamma1_rational(cfg) -> List[IdentityReport]:
    out = []
    for p, q in ((1, 2), (1, 4), (1, 5)):
        lhs = constants.gamma1_rational(Fraction(p, q), cfg)
        rhs = constants.hasse_gamma(1, mpf(p) / q, cfg).value
        out.append(_report("gamma1-rational-closed-form", lhs, rhs,
                           mpf(10) ** -8, x=mpf(p) / q, meta=f"{p}/{q}"))
    return out


def _adamchik(cfg) -> List[IdentityReport]:
    out = []
    for p, q in ((1, 3), (1, 4), (2, 5)):
        rep = constants.adamchik_reflection(Fraction(p, q), cfg)
        rep.identity = "eq-3.36-adamchik"
        rep.meta = f"{p}/{q}"
        out.append(rep)
    return out


def _landau_gamma1(cfg) -> List[IdentityReport]:
    out = [constants.landau_gamma1_functional(x, cfg)
           for x in (mpf(1) / 6, mpf(1) / 5)]
    for rep in out:
        rep.identity = "landau-gamma1-functional"
    return out


def _ramanujan(cfg) -> List[IdentityReport]:
    return constants.coffey_ramanujan_sum(cfg)


def _sondow(cfg) -> List[IdentityReport]:
    out = []
    re1, im1 = fourier.sondow_gamma(mpf(1), cfg, route="series")
    out.append(_report("eq-3.31-sondow-z1", re1, mp.euler, mpf(10) ** -10))
    re2, _ = fourier.sondow_gamma(mpf(-1), cfg, route="series")
    out.append(_report("eq-3.31-sondow-zm1", re2, mp.log(4 / mp.pi),
                       mpf(10) ** -10))
    re3, _ = fourier.sondow_gamma(mpf(1) / 2, cfg, route="series")
    re4, _ = fourier.sondow_gamma(mpf(1) / 2, cfg, route="integral")
    out.append(_report("eq-3.31-sondow-routes", re3, re4, mpf(10) ** -8,
                       meta="series vs integral at z=1/2"))
    rs, is_ = fourier.sondow_gamma(Fraction(1, 2), cfg, route="series")
    r2, i2 = fourier.sondow_gamma(Fraction(1, 2), cfg, route="2q")
    out.append(_report("sondow-2q-re", rs, r2, mpf(10) ** -6,
                       meta="omega=e^(i pi/2)"))
    out.append(_report("sondow-2q-im", is_, i2, mpf(10) ** -6,
                       meta="omega=e^(i pi/2)"))
    return out


def _poisson(cfg) -> List[IdentityReport]:
    out = []
    for s, x in ((mpf(2), mpf(1)), (mpf(3), mpf(1) / 2)):
        lhs = hurwitz.poisson_zeta(s, x, 12, cfg).value
        rhs = hurwitz.zeta_hasse(s, x, 0, cfg).value
        out.append(_report("eq-4.1-poisson", lhs, rhs, mpf(10) ** -5,
                           x=x, meta=f"s={mp.nstr(s, 6)}"))
    return out


def _briggs(cfg) -> List[IdentityReport]:
    out = []
    for m, x in ((0, mpf(1)), (0, mpf(2)), (1, mpf(1))):
        lhs = constants.briggs_gamma(m, x, cfg=cfg).value
        rhs = constants.laurent_oracle(m, x, cfg).value
        out.append(_report("eq-4.2-briggs", lhs, rhs, mpf(10) ** -4,
                           x=x, meta=f"m={m}"))
    return out


def _bourguet(cfg) -> List[IdentityReport]:
    out = []
    for x, n in ((mpf(1), 12), (mpf(5) / 2, 12), (mpf(10), 8)):
        lhs = gammafuncs.bourguet_log_gamma(x, n, cfg).value
        rhs = gammafuncs.log_gamma(x, cfg)
        out.append(_report("eq-4.4-bourguet", lhs, rhs, mpf(10) ** -4, x=x))
    return out


def _srivastava_choi(cfg) -> List[IdentityReport]:
    out = []
    for s, x in ((mpf(2), mpf(1)), (mpf(1) / 2, mpf(2)), (mpf(3), mpf(3) / 2)):
        lhs = hurwitz.zeta_srivastava_choi(s, x, cfg).value
        rhs = hurwitz.zeta_hasse(s, x, 0, cfg).value
        out.append(_report("eq-5.1-srivastava-choi", lhs, rhs,
                           mpf(10) ** -10, x=x, meta=f"s={mp.nstr(s, 6)}"))
    return out


def _bell(cfg) -> List[IdentityReport]:
    out = []
    for m, x in ((0, mpf(1)), (1, mpf(1)), (2, mpf(1)), (2, mpf(3) / 2)):
        lhs = constants.bell_series_gamma(m, x, cfg).value
        rhs = constants.laurent_oracle(m, x, cfg).value
        out.append(_report("eq-5.2-bell-series", lhs, rhs, mpf(10) ** -8,
                           x=x, meta=f"m={m}"))
    return out


def _cross_route(cfg) -> List[IdentityReport]:
    out = []
    for m, x in ((0, mpf(1)), (1, mpf(1) / 2), (2, mpf(3) / 2)):
        lhs = constants.hasse_gamma(m, x, cfg).value
        rhs = constants.laurent_oracle(m, x, cfg).value
        out.append(_report("stieltjes-route-agreement", lhs, rhs,
                           mpf(10) ** -12, x=x, meta=f"m={m} hasse vs oracle"))
    return out


SUITES: Dict[str, Callable[[PrecisionConfig], List[IdentityReport]]] = {
    "recurrence": _recurrence_checks,
    "shift": _shift_checks,
    "gamma0-digamma": _gamma0_digamma,
    "digamma-integral": _digamma_integral,
    "coffey-integral": _coffey_integral,
    "digamma-series": _sondow_digamma_series,
    "gamma1-prime": _gamma1_prime_checks,
    "elementary-fourier": _elementary_fourier,
    "hurwitz-fourier": _hurwitz_fourier,
    "lerch-identity": _lerch_identity,
    "kummer": _kummer,
    "series-316": _series_316,
    "wallis": _wallis,
    "deninger": _deninger,
    "landau-f": _landau_f,
    "gamma1-fourier": _gamma1_fourier,
    "series-325-family": _family_325,
    "kolbig": _kolbig,
    "gamma1-rational": _gamma1_rational,
    "adamchik": _adamchik,
    "landau-gamma1": _landau_gamma1,
    "ramanujan": _ramanujan,
    "sondow": _sondow,
    "poisson": _poisson,
    "briggs": _briggs,
    "bourguet": _bourguet,
    "srivastava-choi": _srivastava_choi,
    "bell-series": _bell,
    "route-agreement": _cross_route,
}


def run_suites(names, cfg: PrecisionConfig):
    """Run the named suites; returns (reports, all_passed).

    Expected-failure reports (meta contains the paper-discrepancy marker) do
    not affect the pass verdict.
    """
    reports: List[IdentityReport] = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        with cfg.workprec(40):  # suite-level arithmetic at working precision
            reports.extend(_as_list(SUITES[name](cfg)))
    ok = all(r.passed or EXPECTED_FAILURE_MARK in r.meta for r in reports)
    return reports, ok
