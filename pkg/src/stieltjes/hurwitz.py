"""Hurwitz zeta and its s-derivatives by independent representations.

Routes:

* ``zeta_hasse`` -- the globally convergent binomial double series, summed as
  an exact head (n <= N, big-integer binomial weights, guard bits growing
  with n) plus an analytic tail: under the Laplace representation of the
  inner differences the outer weights collapse into elementary generating
  functions, leaving a smooth one-dimensional integral.  Accurate to the
  configured digits for any real s != 1.
* ``zeta_fourier`` -- the trigonometric expansion valid for s < 1 on (0,1],
  evaluated with iterated-averaging of the conditionally convergent sums.
* ``hurwitz_zeta_em`` (re-exported) -- direct summation with Euler-Maclaurin
  tail, the reference for s > 1.
* ``zeta_srivastava_choi`` and ``poisson_zeta`` -- verification-grade
  cross-checks from alternative expansions.
"""

from __future__ import annotations

import math

from mpmath import mp, mpf

from .core import (DEFAULT_CFG, DomainError, PoleError, PrecisionConfig,
                   SeriesResult, as_real)
from .kernels import (hurwitz_zeta_em, integrate_oscillatory,
                      sum_alternating_accelerated, sum_trig_averaged)
from . import gammafuncs
from .combinatorics import binomial

_HEAD_TERMS = 32
_POLE_GUARD = mpf(10) ** -8


def _recip_gamma_derivs(alpha, jmax: int, cfg: PrecisionConfig):
    """d^p/dalpha^p [1/Gamma(-alpha)] for p = 0..jmax.

    1/Gamma(-alpha) = -alpha * exp(u), u = -log Gamma(1-alpha); exponential
    derivatives via complete Bell polynomials in psi^(i)(1-alpha).
    """
    one_minus = 1 - alpha
    u = [None]
    for i in range(1, jmax + 1):
        if i == 1:
            d = gammafuncs.digamma(one_minus, cfg)
        else:
            d = gammafuncs.polygamma(i - 1, one_minus, cfg)
        u.append((-1) ** (i + 1) * d)
    Y = [mpf(1)]
    for r in range(jmax):
        acc = mpf(0)
        for j in range(r + 1):
            acc += binomial(r, j) * Y[r - j] * u[j + 1]
        Y.append(acc)
    expu = mp.exp(-gammafuncs.log_gamma(one_minus, cfg))
    B = []
    for p in range(jmax + 1):
        val = -alpha * expu * Y[p]
        if p >= 1:
            val -= p * expu * Y[p - 1]
        B.append(val)
    return B


def _poly_delta(i: int, r: int, x) -> mpf:
    """sum_v (-1)^v C(i,v) (x+v)^r -- alternating difference of y^r."""
    acc = mpf(0)
    for v in range(i + 1):
        c = binomial(i, v)
        acc += (c if v % 2 == 0 else -c) * (x + v) ** r
    return acc


def _weighted_tail(i: int, R: int, t, w, memo) -> mpf:
    """V_{i,R}(w) = sum_{q>R} C(q+i,i) w^q / (q+i+1) at w = 1-e^(-t).

    Direct series for small w; for w >= 1/2 the closed form
    w^-(i+1) [sum_{p=1}^i (-1)^(i-p) z^p/p + (-1)^i t] minus the partial sum,
    with z = e^t - 1 (so log(1+z) = t exactly).
    """
    key = (i, t)
    if key in memo:
        return memo[key]
    if w < mpf("0.5"):
        eps = mpf(2) ** (-mp.prec + 4)
        acc = mpf(0)
        q = R + 1
        comb = mpf(binomial(q + i, i))
        wq = w ** q
        while True:
            term = comb * wq / (q + i + 1)
            acc += term
            if term < eps * (acc + eps):
                break
            q += 1
            comb = comb * (q + i) / q
            wq *= w
        V = acc
    else:
        z = mp.expm1(t)
        closed = mpf(-1) ** i * t
        for p in range(1, i + 1):
            closed += mpf(-1) ** (i - p) * z ** p / p
        closed /= w ** (i + 1)
        partial = mpf(0)
        wq = mpf(1)
        for q in range(R + 1):
            partial += binomial(q + i, i) * wq / (q + i + 1)
            wq *= w
        V = closed - partial
    memo[key] = V
    return V


def _hasse_parts(js, c, x, cfg: PrecisionConfig, head_terms: int = _HEAD_TERMS):
    """A_j = sum_{n>=0} 1/(n+1) * d^j/dc^j Delta_n[y^c](x) for each j in js.

    Delta_n[f](x) := sum_k (-1)^k C(n,k) f(k+x).  Returns ({j: value}, err).
    """
    c = mpf(c)
    x = as_real(x)
    if not x > 0:
        raise DomainError("x must be positive")
    r = max(0, int(mp.ceil(c))) if c > 0 else 0
    alpha = c - r
    N = max(head_terms, r + 8)
    jmax = max(js)
    extra = N + 64
    with cfg.workprec(extra):
        logs = [mp.log(k + x) for k in range(N + 1)]
        powc = [mp.exp(c * L) for L in logs]
        values = {}
        # exact binomial head, one pass per derivative order
        for j in js:
            fvals = [powc[k] * logs[k] ** j for k in range(N + 1)]
            tot = mpf(0)
            for n in range(N + 1):
                s = mpf(0)
                for k in range(n + 1):
                    cb = binomial(n, k)
                    s += (cb if k % 2 == 0 else -cb) * fvals[k]
                tot += s / (n + 1)
            values[j] = tot
        # analytic tail; quadrature only needs the target tolerance, so it
        # runs at a reduced precision (the head carries the guard bits)
        B = _recip_gamma_derivs(alpha, jmax, cfg)
        phis = [_poly_delta(i, r, x) for i in range(r + 1)]
        memo = {}
        tcache = {}
        err_total = mpf(0)
        quad_bits = min(mp.prec, cfg.working_bits + 16)
        for j in js:
            if j == 0 and alpha == 0:
                continue  # series terminates: differences of y^r vanish past r
            tail = mpf(0)
            for i in range(r + 1):
                if phis[i] == 0:
                    continue
                R = N - i

                def integrand(t, i=i, R=R, j=j):
                    if t <= 0:
                        return mpf(0)
                    cached = tcache.get(t)
                    if cached is None:
                        cached = (-mp.expm1(-t), -mp.log(t))
                        tcache[t] = cached
                    w, lt = cached
                    V = _weighted_tail(i, R, t, w, memo)
                    K = mpf(0)
                    for p in range(j + 1):
                        if B[p] == 0:
                            continue
                        K += binomial(j, p) * lt ** (j - p) * B[p]
                    K *= t ** (-alpha - 1)
                    return mp.exp(-(x + i) * t) * V * K

                with mp.workprec(quad_bits):
                    val, qerr = mp.quad(integrand, [0, 1, mp.inf], error=True)
                tail += phis[i] * val
                err_total += abs(phis[i]) * qerr
            values[j] = values[j] + tail
        values = {j: +v for j, v in values.items()}
        return values, +(err_total + mpf(2) ** (-cfg.working_bits + 8))


def zeta_hasse(s, x=1, deriv: int = 0,
               cfg: PrecisionConfig = DEFAULT_CFG) -> SeriesResult:
    """d^j/ds^j zeta(s, x) from the globally convergent binomial series.

    The pole factor 1/(s-1) is differentiated analytically and combined with
    the series derivatives by the Leibniz rule, so s = 0 evaluations are
    exact in the pole part.
    """
    with cfg.workprec(40):
        s = as_real(s)
        x = as_real(x)
        if abs(s - 1) < _POLE_GUARD:
            raise PoleError("zeta(s,x) has a simple pole at s = 1")
        if deriv < 0:
            raise DomainError("derivative order must be >= 0")
        c = 1 - s
        parts, err = _hasse_parts(list(range(deriv + 1)), c, x, cfg)
        total = mpf(0)
        for i in range(deriv + 1):
            total += (binomial(deriv, i) * mp.factorial(i)
                      * parts[deriv - i] / (s - 1) ** (i + 1))
        total *= (-1) ** deriv
        scale = max(mpf(1), abs(total))
        tol = cfg.tol()
        return SeriesResult(+total, +err, _HEAD_TERMS,
                            bool(err <= tol * scale * 100))


def zeta_fourier(s, x, cfg: PrecisionConfig = DEFAULT_CFG) -> SeriesResult:
    """zeta(s, x) from the trigonometric expansion, s < 1 and 0 < x <= 1."""
    with cfg.workprec(40):
        s = as_real(s)
        x = as_real(x)
        if s >= 1:
            raise DomainError("trigonometric route requires s < 1")
        if not 0 < x <= 1:
            raise DomainError("x must lie in (0, 1]")
        gam = mp.exp(gammafuncs.log_gamma(1 - s, cfg))
        sin_half = mp.sinpi(s / 2)
        cos_half = mp.cospi(s / 2)
        if x == 1:
            # sums telescope to the plain zeta function; needs s < 0
            if s >= 0:
                raise DomainError("x = 1 requires s < 0 for convergence")
            cos_sum = (2 * mp.pi) ** (s - 1) * hurwitz_zeta_em(1 - s, 1, 0, cfg)
            value = 2 * gam * sin_half * cos_sum
            return SeriesResult(+value, mpf(10) ** (-cfg.digits), 0, True)
        coeff = lambda n: (2 * mp.pi * n) ** (s - 1)
        tcfg = cfg.eased(12)
        cos_part = sum_trig_averaged(coeff, "cos", x, tcfg)
        sin_part = sum_trig_averaged(coeff, "sin", x, tcfg)
        value = 2 * gam * (sin_half * cos_part.value + cos_half * sin_part.value)
        err = 2 * abs(gam) * (abs(sin_half) * cos_part.err_estimate
                              + abs(cos_half) * sin_part.err_estimate)
        terms = cos_part.terms_used + sin_part.terms_used
        return SeriesResult(+value, +err, terms,
                            cos_part.converged and sin_part.converged)


def zeta_fourier_pair(s, x, kind: str = "sum",
                      cfg: PrecisionConfig = DEFAULT_CFG) -> SeriesResult:
    """zeta(s,x) +/- zeta(s,1-x) from the single-sum trigonometric forms."""
    with cfg.workprec(40):
        s = as_real(s)
        x = as_real(x)
        if s >= 1:
            raise DomainError("trigonometric route requires s < 1")
        if not 0 < x < 1:
            raise DomainError("x must lie in (0, 1)")
        gam = mp.exp(gammafuncs.log_gamma(1 - s, cfg))
        coeff = lambda n: (2 * mp.pi * n) ** (s - 1)
        tcfg = cfg.eased(12)
        if kind == "sum":
            part = sum_trig_averaged(coeff, "cos", x, tcfg)
            value = 4 * gam * mp.sinpi(s / 2) * part.value
        elif kind == "diff":
            part = sum_trig_averaged(coeff, "sin", x, tcfg)
            value = 4 * gam * mp.cospi(s / 2) * part.value
        else:
            raise ValueError("kind must be 'sum' or 'diff'")
        err = 4 * abs(gam) * part.err_estimate
        return SeriesResult(+value, +err, part.terms_used, part.converged)


def zeta(s, x=1, deriv: int = 0, method: str = "auto",
         cfg: PrecisionConfig = DEFAULT_CFG):
    """Dispatcher: Euler-Maclaurin engine for s > 1, Hasse series otherwise.

    Returns an mpf; use the route-specific functions for SeriesResult
    diagnostics.
    """
    s = as_real(s)
    if method == "auto":
        method = "em" if s > mpf(3) / 2 else "hasse"
    if method == "em":
        return hurwitz_zeta_em(s, x, deriv, cfg)
    if method == "hasse":
        return zeta_hasse(s, x, deriv, cfg).value
    if method == "fourier":
        if deriv:
            raise DomainError("trigonometric route implements deriv = 0 only")
        return zeta_fourier(s, x, cfg).value
    raise ValueError(f"unknown method {method!r}")


def zeta_prime0(x, via: str = "hasse", cfg: PrecisionConfig = DEFAULT_CFG) -> mpf:
    """zeta'(0, x); satisfies log Gamma(x) = zeta'(0,x) + log(2 pi)/2."""
    with cfg.workprec(40):
        x = as_real(x)
        if via == "hasse":
            return zeta_hasse(0, x, 1, cfg).value
        if via == "fourier":
            if not 0 < x < 1:
                raise DomainError("trigonometric route requires 0 < x < 1")
            g = mp.euler
            tcfg = cfg.eased(12)
            s1 = sum_trig_averaged(lambda n: (mp.log(2 * mp.pi * n) + g) / n,
                                   "sin", x, tcfg)
            s2 = sum_trig_averaged(lambda n: mpf(1) / n, "cos", x, tcfg)
            return +(s1.value / mp.pi + s2.value / 2)
        raise ValueError(f"unknown route {via!r}")


def zeta_doubleprime0(x, via: str = "hasse",
                      cfg: PrecisionConfig = DEFAULT_CFG) -> mpf:
    """zeta''(0, x) by the binomial series or the five-sum trigonometric form."""
    with cfg.workprec(40):
        x = as_real(x)
        if via == "hasse":
            return zeta_hasse(0, x, 2, cfg).value
        if via == "fourier":
            if not 0 < x < 1:
                raise DomainError("trigonometric route requires 0 < x < 1")
            g = mp.euler
            two_pi = 2 * mp.pi
            tcfg = cfg.eased(12)

            def lg(n):
                return mp.log(two_pi * n)

            t1 = sum_trig_averaged(lambda n: lg(n) ** 2 / (two_pi * n), "sin", x, tcfg)
            t2 = sum_trig_averaged(lambda n: lg(n) / (two_pi * n), "sin", x, tcfg)
            t3 = sum_trig_averaged(lambda n: 1 / (two_pi * n), "sin", x, tcfg)
            t4 = sum_trig_averaged(lambda n: lg(n) / (two_pi * n), "cos", x, tcfg)
            t5 = sum_trig_averaged(lambda n: 1 / (two_pi * n), "cos", x, tcfg)
            return +(2 * t1.value + 4 * g * t2.value
                     + (2 * g ** 2 - mp.pi ** 2 / 6) * t3.value
                     + 2 * mp.pi * t4.value + 2 * mp.pi * g * t5.value)
        raise ValueError(f"unknown route {via!r}")


def zeta_srivastava_choi(s, x, cfg: PrecisionConfig = DEFAULT_CFG) -> SeriesResult:
    """zeta(s, x) from the factorial-weighted expansion in zeta(s+n, x).

    Requires s > 0 (s != 1) so every zeta(s+n, x) lies in the absolutely
    convergent region; x < 1 is shifted up by the elementary recurrence.
    """
    with cfg.workprec(40):
        s = as_real(s)
        x = as_real(x)
        if abs(s - 1) < _POLE_GUARD:
            raise PoleError("s = 1 is the pole")
        if not s > 0:
            raise DomainError("expansion implemented for s > 0")
        if not x > 0:
            raise DomainError("x must be positive")
        shift = mpf(0)
        while x < 1:
            shift += x ** (-s)
            x += 1
        poch = {0: mpf(1)}

        def term(n):
            if n not in poch:
                poch[n] = poch[n - 1] * (s + n - 1) / n
            return -((-1) ** n) * poch[n] / (n + 1) * hurwitz_zeta_em(s + n, x, 0, cfg)

        res = sum_alternating_accelerated(term, cfg, n0=1)
        value = x ** (1 - s) / (s - 1) + res.value + shift
        return SeriesResult(+value, res.err_estimate, res.terms_used, res.converged)


def poisson_zeta(s, x, N: int = 10, cfg: PrecisionConfig = DEFAULT_CFG) -> SeriesResult:
    """zeta(s, x) from the Poisson-summation representation, s > 1.

    Verification-grade: N oscillatory integrals plus an integration-by-parts
    resummation of the remaining n-tail.
    """
    with cfg.workprec(40):
        s = as_real(s)
        x = as_real(x)
        if not s > 1:
            raise DomainError("Poisson representation requires s > 1")
        if not x > 0:
            raise DomainError("x must be positive")
        base = x ** (-s) / 2 + x ** (1 - s) / (s - 1)
        osc = mpf(0)
        err = mpf(0)
        for n in range(1, N + 1):
            res = integrate_oscillatory(lambda t: (x + t) ** (-s),
                                        2 * mp.pi * n, 0, cfg, mode="cos")
            osc += res.value
            err += res.err_estimate
        # cos-kernel IBP: I_n = -g'(0)/w^2 + g'''(0)/w^4 - g^(5)(0)/w^6 + ...
        gp = -s * x ** (-s - 1)
        gppp = -s * (s + 1) * (s + 2) * x ** (-s - 3)
        g5 = -s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * x ** (-s - 5)
        tail = (-gp / (2 * mp.pi) ** 2 * hurwitz_zeta_em(2, N + 1, 0, cfg)
                + gppp / (2 * mp.pi) ** 4 * hurwitz_zeta_em(4, N + 1, 0, cfg)
                - g5 / (2 * mp.pi) ** 6 * hurwitz_zeta_em(6, N + 1, 0, cfg))
        order7 = mp.fprod(s + i for i in range(7)) * x ** (-s - 7)
        err += order7 / (2 * mp.pi) ** 8 * hurwitz_zeta_em(8, N + 1, 0, cfg)
        value = base + 2 * (osc + tail)
        err = 2 * err + mpf(10) ** (-cfg.digits)
        return SeriesResult(+value, +err, N, bool(err <= mpf(10) ** -5))
