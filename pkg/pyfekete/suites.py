"""Define the verification suites run by the command line, one per subcommand."""
import asyncio
import logging
import math
from typing import Any, Callable, Dict, Iterable, Optional, Sequence

import numpy as np

from . import const
from .asymptotics import (
    c_delta,
    c_product,
    empirical_midpoint_fraction,
    envelope_constant,
    midpoint_ties,
    riemann_c_delta,
    small_delta_bound,
)
from .certify import Certificate, CertificateSweep, certificate_primes, try_certificate
from .circlezeros import (
    circle_zero_angles,
    derivative_sieve_chain,
    h_eval,
    h_grid,
    h_values,
    locate_zeros,
    max_modulus,
    random_sieve_suite,
    select_arc_parameters,
    sign_agreements,
)
from .error import DomainError, NumericalFailureError
from .mahler import (
    ensemble_limit,
    find_roots,
    littlewood_ensemble,
    m0_from_roots,
    m0_uniform,
    mahler_measure,
    mq_uniform,
    product_bound_check,
    random_product_suite,
    subarc_measures,
)
from .numtheory import Prime, as_prime, legendre_symbols, primes_in_range
from .polybase import (
    deflate_at_one,
    eval_roots_of_unity,
    expand_deflation,
    fekete,
    rudin_shapiro,
)
from .report import RunReport

_LOGGER = logging.getLogger(__name__)


def _summarise(
    report: RunReport,
    check_id: str,
    rows: Sequence[Dict[str, Any]],
    holds: Callable[[Dict[str, Any]], bool],
    measured: Callable[[Dict[str, Any]], Any],
    expected: Any = None,
    *,
    tolerance: Optional[float] = None,
    worst: Callable = max,
    key: str = "p"
):
    """Record one finding for a whole range; the subject lists failing rows."""
    if not rows:
        report.observe(check_id, None, expected, subject="empty range")
        return
    failing = [row[key] for row in rows if not holds(row)]
    subject = failing or "{}..{}".format(rows[0][key], rows[-1][key])
    report.check(
        check_id,
        not failing,
        worst(measured(row) for row in rows),
        expected,
        tolerance,
        subject,
    )


def _tabulate(report: RunReport, name: str, columns: Sequence[str], rows: Iterable):
    table = report.table(name, columns)
    for row in rows:
        table.add_row(**{column: row[column] for column in columns})


# gauss


def gauss_row(p: Prime) -> Dict[str, Any]:
    """Measure |f_p| at the p-th roots of unity."""
    n = int(p)
    grid = eval_roots_of_unity(fekete(p), n)
    root = math.sqrt(n)
    expected = root if p.residue_mod_4 == 1 else 1j * root
    return {
        "p": n,
        "p_mod_4": p.residue_mod_4,
        "max_modulus_error": float(np.abs(grid.moduli[1:] - root).max()),
        "abs_f_at_one": float(grid.moduli[0]),
        "sign_ok": bool(abs(grid.values[1] - expected) <= const.GAUSS_TOL * root),
    }


async def gauss_suite(
    runner,
    report: RunReport,
    *,
    pmin: int = const.DEFAULT_GAUSS_PMIN,
    pmax: int = const.DEFAULT_GAUSS_PMAX
):
    """Check |f_p(zeta^j)| = sqrt(p), f_p(1) = 0 and the sign of the Gauss sum."""
    rows = await runner.map_primes(gauss_row, primes_in_range(pmin, pmax))
    _summarise(
        report,
        const.CHECK_GAUSS_MODULUS,
        rows,
        lambda row: row["max_modulus_error"] <= const.GAUSS_TOL * math.sqrt(row["p"]),
        lambda row: row["max_modulus_error"] / math.sqrt(row["p"]),
        0.0,
        tolerance=const.GAUSS_TOL,
    )
    _summarise(
        report,
        const.CHECK_FEKETE_AT_ONE,
        rows,
        lambda row: row["abs_f_at_one"] <= const.GAUSS_TOL * math.sqrt(row["p"]),
        lambda row: row["abs_f_at_one"],
        0.0,
        tolerance=const.GAUSS_TOL,
    )
    _summarise(
        report,
        const.CHECK_GAUSS_SIGN,
        rows,
        lambda row: row["sign_ok"],
        lambda row: row["sign_ok"],
        True,
        worst=min,
    )
    _tabulate(report, "gauss", const.TABLE_GAUSS, rows)


# zeros


def zero_row(p: Prime, refinement: int, bisect_tol: float) -> Dict[str, Any]:
    """Count the circle zeros of f_p and audit the H_p grid."""
    n = int(p)
    root = math.sqrt(n)
    grid = h_grid(p, refinement)
    ks = np.arange(1, n)
    expected = np.where(ks % 2 == 0, 1.0, -1.0) * legendre_symbols(p)[1:] * root
    identity_error = float(np.abs(grid.values[refinement * ks] - expected).max())
    zeros = locate_zeros(p, refinement, bisect_tol)
    residual = float(np.abs(h_values(p, zeros)).max()) if zeros else 0.0
    sample_ts = np.linspace(0.0, 1.0, 7, endpoint=False) + 0.013
    route_error = max(
        abs(h_eval(p, t) - value) for t, value in zip(sample_ts, h_values(p, sample_ts))
    )
    return {
        "p": n,
        "refinement": refinement,
        "zero_count": len(zeros),
        "lower_bound": (n - 3) // 2,
        "fraction": len(zeros) / n,
        "identity_error": identity_error / root,
        "residual": residual / root,
        "route_error": route_error / root,
        "max_imag": grid.max_imag / root,
    }


def sign_row(p: Prime) -> Dict[str, Any]:
    """Count adjacent agreeing Legendre symbols."""
    return {"p": int(p), "agreements": sign_agreements(p), "expected": (int(p) - 3) // 2}


async def zeros_suite(
    runner,
    report: RunReport,
    *,
    pmin: int = const.DEFAULT_ZEROS_PMIN,
    pmax: int = const.DEFAULT_ZEROS_PMAX,
    refinement: int = const.DEFAULT_REFINEMENT,
    bisect_tol: float = const.DEFAULT_BISECT_TOL,
    signs_pmax: int = const.DEFAULT_SIGNS_PMAX,
    fraction_prime: Optional[int] = const.DEFAULT_FRACTION_PRIME,
    fraction_refinement: int = const.DEFAULT_FRACTION_REFINEMENT
):
    """Check the sign structure of H_p and the number of circle zeros."""
    signs = await runner.map_primes(sign_row, primes_in_range(5, max(5, signs_pmax)))
    _summarise(
        report,
        const.CHECK_SIGN_AGREEMENT,
        signs,
        lambda row: row["agreements"] == row["expected"],
        lambda row: abs(row["agreements"] - row["expected"]),
        0,
    )
    _tabulate(report, "signs", const.TABLE_SIGNS, signs)

    rows = await runner.map_primes(
        zero_row, primes_in_range(pmin, pmax), refinement, bisect_tol
    )
    _summarise(
        report,
        const.CHECK_HGRID,
        rows,
        lambda row: row["identity_error"] < const.H_CONSISTENCY_TOL,
        lambda row: row["identity_error"],
        0.0,
        tolerance=const.H_CONSISTENCY_TOL,
    )
    _summarise(
        report,
        const.CHECK_H_CONSISTENCY,
        rows,
        lambda row: row["route_error"] < const.H_CONSISTENCY_TOL,
        lambda row: row["route_error"],
        0.0,
        tolerance=const.H_CONSISTENCY_TOL,
    )
    _summarise(
        report,
        const.CHECK_ZERO_COUNT,
        rows,
        lambda row: row["zero_count"] >= row["lower_bound"]
        and row["residual"] < const.ZERO_RESIDUAL_TOL,
        lambda row: row["zero_count"] - row["lower_bound"],
        "zero_count >= (p - 3) / 2",
        worst=min,
    )
    _tabulate(report, "zeros", const.TABLE_ZEROS, rows)

    if fraction_prime:
        row = await runner.call(
            zero_row, as_prime(fraction_prime), fraction_refinement, bisect_tol
        )
        low, high = const.ZERO_FRACTION_BAND
        report.check(
            const.CHECK_ZERO_FRACTION,
            low <= row["fraction"] <= high,
            row["fraction"],
            list(const.ZERO_FRACTION_BAND),
            subject=row["p"],
        )
        report.table("zeros", const.TABLE_ZEROS).add_row(
            **{column: row[column] for column in const.TABLE_ZEROS}
        )


# mahler


def mahler_row(p: Prime, m0_pmax: int, samples: int) -> Dict[str, Any]:
    """Measure M_2, M_1 and M_0 of f_p and the product bound on its deflation."""
    n = int(p)
    poly = fekete(p)
    m2 = mq_uniform(poly, 2, samples=max(const.MIN_QUADRATURE_SAMPLES, 2 * n + 2))
    m1 = mq_uniform(poly, 1)
    m_half = mq_uniform(poly, 0.5).value
    m4 = mq_uniform(poly, 4).value
    m0_quadrature = m0_uniform(
        poly, samples=samples, circle_zeros=circle_zero_angles(p)
    ).value
    row = {
        "p": n,
        "m2": m2.value,
        "m2_expected": math.sqrt(n - 1),
        "m1": m1.value,
        "m0_roots": None,
        "m0_quadrature": m0_quadrature,
        "relative_gap": None,
        "product_holds": None,
        "deflation_ok": None,
    }
    if n <= m0_pmax:
        m0_roots = m0_from_roots(find_roots(poly)).value
        quotient, multiplicity = deflate_at_one(poly)
        row.update(
            m0_roots=m0_roots,
            relative_gap=abs(m0_quadrature - m0_roots) / m0_roots,
            product_holds=product_bound_check(quotient, p, m0=m0_roots).holds,
            deflation_ok=expand_deflation(quotient, multiplicity) == poly
            and sum(quotient.to_list()) != 0,
        )
    m0 = row["m0_roots"] or m0_quadrature
    slack = 1 + const.INEQUALITY_SLACK
    means = [m0, m_half, row["m1"], row["m2"], m4]
    row["monotone"] = all(low <= high * slack for low, high in zip(means, means[1:]))
    row["jensen"] = m0 <= row["m2_expected"] * slack
    high, low = max_modulus(p, const.MAX_MODULUS_SAMPLES_PER_PRIME * n)
    row.update(
        max_val=high,
        min_val=low,
        log_constant=high / (math.sqrt(n) * math.log(n)),
    )
    return row


async def mahler_suite(
    runner,
    report: RunReport,
    *,
    pmax: int = const.DEFAULT_MAHLER_PMAX,
    m0_pmax: int = const.DEFAULT_M0_PMAX,
    samples: int = const.MAHLER_SUITE_SAMPLES,
    product_instances: int = const.DEFAULT_PRODUCT_INSTANCES,
    product_degree: int = const.DEFAULT_PRODUCT_DEGREE,
    product_prime: int = const.DEFAULT_PRODUCT_PRIME,
    subarc_prime: Optional[int] = const.DEFAULT_SUBARC_PRIME,
    seed: int = const.DEFAULT_SEED
):
    """Check Parseval, the two M_0 estimators, Jensen and the product bound."""
    rows = await runner.map_primes(
        mahler_row, primes_in_range(3, pmax), m0_pmax, samples
    )
    _summarise(
        report,
        const.CHECK_PARSEVAL,
        rows,
        lambda row: abs(row["m2"] / row["m2_expected"] - 1) <= const.PARSEVAL_TOL,
        lambda row: abs(row["m2"] / row["m2_expected"] - 1),
        0.0,
        tolerance=const.PARSEVAL_TOL,
    )
    rooted = [row for row in rows if row["m0_roots"] is not None]
    _summarise(
        report,
        const.CHECK_ESTIMATOR_AGREEMENT,
        rooted,
        lambda row: row["relative_gap"] <= const.ESTIMATOR_TOL,
        lambda row: row["relative_gap"],
        0.0,
        tolerance=const.ESTIMATOR_TOL,
    )
    _summarise(
        report,
        const.CHECK_DEFLATION,
        rooted,
        lambda row: row["deflation_ok"],
        lambda row: row["deflation_ok"],
        True,
        worst=min,
    )
    _summarise(
        report,
        const.CHECK_JENSEN,
        rows,
        lambda row: row["jensen"],
        lambda row: (row["m0_roots"] or row["m0_quadrature"]) / row["m2_expected"],
        1.0,
    )
    _summarise(
        report,
        const.CHECK_POWER_MEAN,
        rows,
        lambda row: row["monotone"],
        lambda row: row["monotone"],
        True,
        worst=min,
    )
    report.observe(
        const.CHECK_M1_OBSERVED,
        sum(1 for row in rows if row["m1"] < row["m2_expected"]),
        len(rows),
    )
    _summarise(
        report,
        const.CHECK_MAX_MODULUS,
        rows,
        lambda row: row["min_val"] < row["m2_expected"] < row["max_val"]
        and row["max_val"] >= math.sqrt(row["p"]),
        lambda row: row["log_constant"],
        "min < sqrt(p - 1) < max, max >= sqrt(p)",
    )
    _tabulate(report, "mahler", const.TABLE_MAHLER, rows)
    _tabulate(report, "max_modulus", const.TABLE_MAX_MODULUS, rows)

    small = await runner.call(mahler_measure, fekete(5))
    report.check(
        const.CHECK_M0_SMALL,
        abs(small.value - 1) <= const.SMALL_PRIME_M0_TOL,
        small.value,
        1.0,
        const.SMALL_PRIME_M0_TOL,
        5,
    )

    checks = await runner.call(
        random_product_suite, product_instances, product_degree, product_prime, seed
    )
    fekete_checks = [row["product_holds"] for row in rooted]
    report.check(
        const.CHECK_PRODUCT_BOUND,
        all(check.holds for check in checks) and all(fekete_checks),
        max((check.lhs / check.rhs for check in checks), default=0.0),
        1.0,
        const.INEQUALITY_SLACK,
        "{} random, {} Fekete".format(len(checks), len(fekete_checks)),
    )

    if subarc_prime:
        p = as_prime(subarc_prime)
        n = int(p)
        widths = {
            "lower": math.log(n) ** 1.5 / math.sqrt(n),
            "upper": 2 * n ** (-0.5 + const.SUBARC_EPSILON),
        }
        for label, width in sorted(widths.items()):
            estimates = await runner.call(subarc_measures, p, 0, min(width, 2 * math.pi))
            ratios = [estimate.value / math.sqrt(n) for estimate in estimates]
            report.observe(
                const.CHECK_SUBARC,
                {"width": width, "min_ratio": min(ratios), "max_ratio": max(ratios)},
                subject="{} p={}".format(label, n),
            )


# arcs


def arc_row(
    p: Prime, epsilon: float, gamma: float, samples_per_arc: int
) -> Dict[str, Any]:
    """Classify the arcs of f_p with the scheduled delta."""
    summary = select_arc_parameters(p, epsilon, gamma, samples_per_arc=samples_per_arc)
    return summary.to_dict()


async def arcs_suite(
    runner,
    report: RunReport,
    *,
    pmin: int = const.DEFAULT_ARCS_PMIN,
    pmax: int = const.DEFAULT_ARCS_PMAX,
    epsilon: float = const.DEFAULT_EPSILON,
    gamma: float = const.DEFAULT_GAMMA,
    samples_per_arc: int = const.ARC_SAMPLES
):
    """Check the derivative count and that no nonvanishing arc holds a zero."""
    rows = await runner.map_primes(
        arc_row, primes_in_range(pmin, pmax), epsilon, gamma, samples_per_arc
    )
    _summarise(
        report,
        const.CHECK_ARC_COUNT,
        rows,
        lambda row: row["n_small_deriv"] >= row["p"] - row["p"] / (2 * gamma ** 2),
        lambda row: row["n_small_deriv"] / row["p"],
        1 - 1 / (2 * gamma ** 2),
        worst=min,
    )
    _summarise(
        report,
        const.CHECK_ARC_CONSISTENCY,
        rows,
        lambda row: row["n_inconsistent"] == 0,
        lambda row: row["n_inconsistent"],
        0,
    )
    report.observe(
        const.CHECK_ARC_COUNT,
        min((row["n_qualifying"] / row["p"] for row in rows), default=None),
        1 - epsilon,
        subject="min qualifying fraction",
    )
    _tabulate(report, "arcs", const.TABLE_ARCS, rows)


# sieve


def sieve_row(p: Prime, gamma: float, samples_per_arc: int) -> Dict[str, Any]:
    """Run the large sieve chain on the shifted derivative of f_p."""
    chain = derivative_sieve_chain(p, gamma, samples_per_arc=samples_per_arc)
    row = chain.to_dict()
    row.update(
        lhs=chain.centre_check.lhs,
        rhs=chain.centre_check.rhs,
        centre_holds=chain.centre_check.holds,
    )
    return row


async def sieve_suite(
    runner,
    report: RunReport,
    *,
    pmin: int = const.DEFAULT_ARCS_PMIN,
    pmax: int = const.DEFAULT_ARCS_PMAX,
    gamma: float = const.DEFAULT_GAMMA,
    samples_per_arc: int = const.ARC_SAMPLES,
    instances: int = const.DEFAULT_SIEVE_INSTANCES,
    max_degree: int = const.DEFAULT_SIEVE_DEGREE,
    seed: int = const.DEFAULT_SEED
):
    """Check the large sieve inequality on random instances and on f_p'."""
    checks = await runner.call(random_sieve_suite, instances, max_degree, seed)
    report.check(
        const.CHECK_SIEVE_RANDOM,
        all(check.holds for check in checks),
        max((check.lhs / check.rhs for check in checks), default=0.0),
        1.0,
        const.INEQUALITY_SLACK,
        "{} instances".format(len(checks)),
    )
    rows = await runner.map_primes(
        sieve_row, primes_in_range(pmin, pmax), gamma, samples_per_arc
    )
    _summarise(
        report,
        const.CHECK_SIEVE_CENTRES,
        rows,
        lambda row: row["centre_holds"],
        lambda row: row["lhs"] / row["rhs"],
        1.0,
    )
    _summarise(
        report,
        const.CHECK_SIEVE_CHAIN,
        rows,
        lambda row: row["holds"],
        lambda row: row["holds"],
        True,
        worst=min,
    )
    _summarise(
        report,
        const.CHECK_SIEVE_BAD_ARCS,
        rows,
        lambda row: row["m_bad"] <= row["m_bound"],
        lambda row: row["m_bad"] / row["m_bound"],
        1.0,
    )
    report.observe(
        const.CHECK_SIEVE_CHAIN,
        sum(1 for row in rows if row["final_link_holds"]),
        len(rows),
        subject="parseval bound <= p^4 / 2",
    )
    _tabulate(report, "sieve", const.TABLE_SIEVE, rows)


# cdelta


async def cdelta_suite(
    runner,
    report: RunReport,
    *,
    deltas: Sequence[float] = const.DEFAULT_DELTAS,
    tol: float = const.DEFAULT_CDELTA_TOL,
    small_delta: float = const.SMALL_DELTA,
    oracle: bool = True
):
    """Check c_delta + c_-delta = 1, the small-delta limit and the decay envelope."""
    results = []
    table = report.table("cdelta", const.TABLE_CDELTA)
    for delta in deltas:
        value, reflected = await asyncio.gather(
            runner.call(c_delta, delta, tol), runner.call(c_delta, -delta, tol)
        )
        total = value.value + reflected.value
        report.check(
            const.CHECK_CDELTA_REFLECTION,
            abs(total - 1) <= 2 * tol and 0 <= value.value <= 1,
            total,
            1.0,
            2 * tol,
            delta,
        )
        table.add_row(
            delta=delta,
            value=value.value,
            reflected=reflected.value,
            truncation_K=value.truncation_k,
            cutoff_X=value.cutoff_x,
        )
        results.append(value.to_dict())
    report.set_result("cdelta", results)

    small = await runner.call(c_delta, small_delta, tol)
    deviation = abs(small.value - 0.5)
    report.check(
        const.CHECK_CDELTA_SMALL,
        deviation < const.SMALL_DELTA_BAND
        and math.pi * deviation <= small_delta_bound(small_delta),
        deviation,
        const.SMALL_DELTA_BAND,
        subject=small_delta,
    )

    c1 = envelope_constant()
    point = const.ENVELOPE_POINT
    value = c_product(point)
    envelope = c1 * 2 ** (-3 * point / math.pi)
    report.check(
        const.CHECK_CDELTA_ENVELOPE, value <= envelope, value, envelope, subject=point
    )
    report.set_result("envelope_constant", c1)

    if oracle:
        adaptive = await runner.call(c_delta, const.ORACLE_DELTA, tol)
        brute = await runner.call(riemann_c_delta, const.ORACLE_DELTA)
        report.check(
            const.CHECK_CDELTA_ORACLE,
            abs(adaptive.value - brute) <= const.ORACLE_TOL,
            abs(adaptive.value - brute),
            0.0,
            const.ORACLE_TOL,
            const.ORACLE_DELTA,
        )


# distribution


async def distribution_suite(
    runner,
    report: RunReport,
    *,
    p: int = const.DEFAULT_DISTRIBUTION_PRIME,
    delta: float = const.DEFAULT_DISTRIBUTION_DELTA,
    tol: float = const.DEFAULT_CDELTA_TOL
):
    """Compare the fraction of midpoints with H_p < delta sqrt(p) against c_delta."""
    prime = as_prime(p)
    table = report.table("distribution", const.TABLE_DISTRIBUTION)
    grid = sorted(set(const.DISTRIBUTION_GRID) | {delta})
    fractions = {}
    for value in grid:
        fraction, limit, ties = await asyncio.gather(
            runner.call(empirical_midpoint_fraction, prime, value),
            runner.call(c_delta, value, tol),
            runner.call(midpoint_ties, prime, value),
        )
        fractions[value] = fraction
        table.add_row(
            p=int(prime),
            delta=value,
            fraction=fraction,
            c_delta=limit.value,
            difference=fraction - limit.value,
            ties=ties,
        )
        if ties:
            report.observe(const.CHECK_DISTRIBUTION, ties, 0, subject="ties at {}".format(value))
        if value == delta:
            report.check(
                const.CHECK_DISTRIBUTION,
                abs(fraction - limit.value) <= const.DISTRIBUTION_BAND,
                fraction,
                limit.value,
                const.DISTRIBUTION_BAND,
                int(prime),
            )
    ordered = [fractions[value] for value in grid]
    report.check(
        const.CHECK_DISTRIBUTION,
        all(low <= high for low, high in zip(ordered, ordered[1:])),
        ordered,
        "nondecreasing in delta",
        subject="monotone",
    )
    reflected = {
        value: fractions[value] + fractions[-value]
        for value in grid
        if value > 0 and -value in fractions
    }
    report.observe(const.CHECK_DISTRIBUTION, reflected, 1.0, subject="reflection")


# ensemble


async def ensemble_suite(
    runner,
    report: RunReport,
    *,
    n2: int = const.DEFAULT_ENSEMBLE_N2,
    n0: int = const.DEFAULT_ENSEMBLE_N0,
    samples: int = const.DEFAULT_ENSEMBLE_SAMPLES,
    seed: int = const.DEFAULT_SEED
):
    """Compare seeded Littlewood ensemble means with their large-degree limits."""
    second, zeroth, repeat = await asyncio.gather(
        runner.call(littlewood_ensemble, n2, 2, samples, seed),
        runner.call(littlewood_ensemble, n0, 0, samples, seed),
        runner.call(littlewood_ensemble, n2, 2, samples, seed),
    )
    table = report.table("ensemble", const.TABLE_ENSEMBLE)
    for result, band in ((second, const.ENSEMBLE_M2_BAND), (zeroth, const.ENSEMBLE_M0_BAND)):
        low, high = band
        report.check(
            const.CHECK_ENSEMBLE,
            low <= result.mean_ratio <= high,
            result.mean_ratio,
            list(band),
            subject="n={} q={}".format(result.n, result.q),
        )
        table.add_row(**{key: result.to_dict()[key] for key in const.TABLE_ENSEMBLE})
    report.observe(
        const.CHECK_ENSEMBLE, second.mean_power, math.gamma(2), subject="mean power"
    )
    report.observe(
        const.CHECK_ENSEMBLE,
        zeroth.mean_log_truncated,
        math.log(ensemble_limit(0)),
        subject="mean truncated log",
    )
    report.check(
        const.CHECK_ENSEMBLE_REPRODUCIBLE,
        repeat.mean_ratio == second.mean_ratio and repeat.stderr == second.stderr,
        repeat.mean_ratio,
        second.mean_ratio,
        0.0,
        seed,
    )
    report.set_result("ensemble", [second.to_dict(), zeroth.to_dict()])


# rs


def rudin_shapiro_row(n: int) -> Dict[str, Any]:
    """Audit the order-n Rudin-Shapiro pair."""
    first, second = rudin_shapiro(n)
    size = 2 ** n
    grid = 4 * size
    energy = (
        eval_roots_of_unity(first, grid).moduli ** 2
        + eval_roots_of_unity(second, grid).moduli ** 2
    )
    m0_p = m0_uniform(first).value
    return {
        "n": n,
        "degree": first.degree,
        "coefficients_ok": bool(
            np.all(np.abs(first.coeffs) == 1)
            and np.all(np.abs(second.coeffs) == 1)
            and first.degree == second.degree == size - 1
        ),
        "max_complementary_error": float(np.abs(energy / 2 ** (n + 1) - 1).max()),
        "m0_p": m0_p,
        "m0_q": m0_uniform(second).value,
        "m0_ratio": m0_p / math.sqrt(size),
    }


async def rs_suite(runner, report: RunReport, *, nmax: int = const.DEFAULT_RS_ORDER):
    """Check the Rudin-Shapiro coefficients, complementarity and Mahler measure."""
    rows = await runner.map_primes(rudin_shapiro_row, range(nmax + 1))
    for check_id, holds, measured, expected, tolerance, worst in (
        (
            const.CHECK_RS_COEFFICIENTS,
            lambda row: row["coefficients_ok"],
            lambda row: row["coefficients_ok"],
            True,
            None,
            min,
        ),
        (
            const.CHECK_RS_PARSEVAL,
            lambda row: row["max_complementary_error"] <= const.RS_COMPLEMENTARY_TOL,
            lambda row: row["max_complementary_error"],
            0.0,
            const.RS_COMPLEMENTARY_TOL,
            max,
        ),
        (
            const.CHECK_RS_MAHLER,
            lambda row: row["m0_ratio"] >= const.RS_M0_FLOOR,
            lambda row: row["m0_ratio"],
            const.RS_M0_FLOOR,
            None,
            min,
        ),
    ):
        _summarise(
            report,
            check_id,
            rows,
            holds,
            measured,
            expected,
            tolerance=tolerance,
            worst=worst,
            key="n",
        )
    _tabulate(report, "rs", const.TABLE_RS, rows)


# certify


def _record_certificate(report: RunReport, cert: Certificate):
    n = int(cert.p)
    report.check(
        const.CHECK_CERTIFICATE,
        cert.holds,
        cert.direct_m0,
        cert.bound,
        const.CERTIFICATE_SLACK,
        n,
    )
    report.check(
        const.CHECK_PRODUCT_BOUND_ZEROS,
        cert.zero_check.holds,
        cert.zero_check.lhs,
        cert.zero_check.rhs,
        const.INEQUALITY_SLACK,
        n,
    )
    report.check(
        const.CHECK_CERTIFICATE_GAUSS,
        abs(cert.gauss_product / cert.gauss_expected - 1) <= const.GAUSS_PRODUCT_TOL,
        cert.gauss_product,
        cert.gauss_expected,
        const.GAUSS_PRODUCT_TOL,
        n,
    )
    report.check(
        const.CHECK_JENSEN, cert.jensen, cert.direct_m0, math.sqrt(n - 1), subject=n
    )
    if cert.degenerate:
        report.observe(const.CHECK_CERTIFICATE_ZEROS, 0, subject=n)
    factor = n ** (-cert.m / n)
    if n < const.CERTIFICATE_FLOOR_PRIME:
        report.observe(const.CHECK_CERTIFICATE_RATIO, cert.ratio, subject=n)
        return
    report.check(
        const.CHECK_CERTIFICATE_RATIO,
        cert.ratio > const.CERTIFICATE_RATIO_FLOOR,
        cert.ratio,
        const.CERTIFICATE_RATIO_FLOOR,
        subject=n,
    )
    report.check(
        const.CHECK_CERTIFICATE_ZEROS,
        cert.k_zeros / n >= const.CERTIFICATE_ZERO_FRACTION,
        cert.k_zeros / n,
        const.CERTIFICATE_ZERO_FRACTION,
        subject=n,
    )
    report.check(
        const.CHECK_CERTIFICATE_MULTIPLICITY,
        const.MULTIPLICITY_FACTOR_FLOOR <= factor <= 1,
        factor,
        [const.MULTIPLICITY_FACTOR_FLOOR, 1.0],
        subject=n,
    )


async def certify_suite(
    runner,
    report: RunReport,
    *,
    p: Optional[int] = None,
    pmin: int = const.DEFAULT_CERTIFY_PMIN,
    pmax: int = const.DEFAULT_CERTIFY_PMAX,
    eta: Optional[float] = None,
    refinement: int = const.DEFAULT_REFINEMENT,
    bisect_tol: float = const.DEFAULT_BISECT_TOL
):
    """Build certificates and check that the measured M_0 dominates each bound."""
    if p is not None:
        prime = as_prime(p)
        if int(prime) < const.MIN_CERTIFICATE_PRIME:
            raise DomainError(
                "certificates need p >= {}".format(const.MIN_CERTIFICATE_PRIME)
            )
        primes = [prime]
    else:
        primes = certificate_primes(pmin, pmax)
    results = await runner.map_primes(
        try_certificate, primes, eta, refinement=refinement, bisect_tol=bisect_tol
    )
    sweep = CertificateSweep.from_results(primes, results)
    for prime, result in zip(primes, results):
        if isinstance(result, NumericalFailureError):
            report.numerical_failure(result, subject=int(prime))
        elif not isinstance(result, Certificate):
            report.check(
                const.CHECK_CERTIFICATE_ERROR, False, str(result), subject=int(prime)
            )
        else:
            _record_certificate(report, result)
    _tabulate(
        report,
        "certificates",
        const.TABLE_CERTIFICATES,
        [cert.to_dict() for cert in sweep],
    )
    report.set_result("sweep", sweep.to_dict())
    report.set_result("certificates", [cert.to_dict() for cert in sweep])


# report


async def report_suite(runner, report: RunReport, *, seed: int = const.DEFAULT_SEED):
    """Run every suite with its defaults into one report."""
    for command, suite in SUITES.items():
        if command == const.COMMAND_REPORT:
            continue
        _LOGGER.debug("Full sweep: %s", command)
        if command in SEEDED_COMMANDS:
            await suite(runner, report, seed=seed)
        else:
            await suite(runner, report)


SUITES = {
    const.COMMAND_GAUSS: gauss_suite,
    const.COMMAND_MAHLER: mahler_suite,
    const.COMMAND_ZEROS: zeros_suite,
    const.COMMAND_ARCS: arcs_suite,
    const.COMMAND_SIEVE: sieve_suite,
    const.COMMAND_CDELTA: cdelta_suite,
    const.COMMAND_DISTRIBUTION: distribution_suite,
    const.COMMAND_ENSEMBLE: ensemble_suite,
    const.COMMAND_RS: rs_suite,
    const.COMMAND_CERTIFY: certify_suite,
    const.COMMAND_REPORT: report_suite,
}

SEEDED_COMMANDS = (
    const.COMMAND_MAHLER,
    const.COMMAND_SIEVE,
    const.COMMAND_ENSEMBLE,
    const.COMMAND_REPORT,
)
