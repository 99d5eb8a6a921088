"""Define tests for the suite runner."""
import time

import pytest

from pyfekete import const
from pyfekete.error import DomainError, NumericalFailureError
from pyfekete.runner import SuiteRunner
from pyfekete import suites


@pytest.mark.asyncio
async def test_map_primes_ordered(runner):
    """Tests results follow the input order."""
    # Act
    results = await runner.map_primes(lambda p, k: p * k, [13, 3, 7], 2)
    # Assert
    assert results == [26, 6, 14]


@pytest.mark.asyncio
async def test_prime_events(runner):
    """Tests one event per prime, in prime order, with its result."""
    # Arrange
    seen = []

    async def listener(event):
        seen.append(event)

    runner.dispatcher.connect(const.EVENT_PRIME_FINISHED, listener)
    # Act
    await runner.run(const.COMMAND_GAUSS, {"pmin": 3, "pmax": 11})
    # Assert
    assert [event.subject for event in seen] == [3, 5, 7, 11]
    assert [event.position for event in seen] == [1, 2, 3, 4]
    assert all(event.total == 4 for event in seen)
    assert all(event.command == const.COMMAND_GAUSS for event in seen)
    assert all(event.result["p"] == event.subject for event in seen)


@pytest.mark.asyncio
async def test_prime_events_follow_input_order(runner):
    """Tests a slow first prime still has its event delivered first."""
    # Arrange
    seen = []

    def work(prime):
        if prime == 13:
            time.sleep(0.05)
        return prime

    runner.dispatcher.connect(
        const.EVENT_PRIME_FINISHED, lambda event: seen.append(event.subject)
    )
    # Act
    results = await runner.map_primes(work, [13, 3, 7])
    # Assert
    assert results == [13, 3, 7]
    assert seen == [13, 3, 7]


@pytest.mark.asyncio
async def test_suite_events(runner):
    """Tests the start and finish events frame the prime events."""
    # Arrange
    kinds = []
    for kind in const.EVENT_KINDS:
        runner.dispatcher.connect(kind, lambda event: kinds.append(event.kind))
    finished = []
    runner.dispatcher.connect(const.EVENT_SUITE_FINISHED, finished.append)
    # Act
    report = await runner.run(const.COMMAND_RS, {"nmax": 3})
    # Assert
    assert kinds[0] == const.EVENT_SUITE_STARTED
    assert kinds[1:-1] == [const.EVENT_PRIME_FINISHED] * 4
    assert kinds[-1] == const.EVENT_SUITE_FINISHED
    assert finished[0].result is report
    assert finished[0].command == const.COMMAND_RS


@pytest.mark.asyncio
async def test_run_gauss(runner):
    """Tests a small Gauss suite passes and fills its table."""
    # Act
    report = await runner.run(const.COMMAND_GAUSS, {"pmin": 3, "pmax": 50})
    # Assert
    assert report.exit_code == const.EXIT_OK
    assert len(report.tables["gauss"]) == 14
    assert {finding.check_id for finding in report.findings} == {
        const.CHECK_GAUSS_MODULUS,
        const.CHECK_FEKETE_AT_ONE,
        const.CHECK_GAUSS_SIGN,
    }
    assert "started" not in report.to_dict()


@pytest.mark.asyncio
async def test_run_mahler(runner):
    """Tests a short Mahler suite, including the power-mean chain from M_0 to M_4."""
    # Act
    report = await runner.run(
        const.COMMAND_MAHLER,
        {
            "pmax": 60,
            "m0_pmax": 60,
            "product_instances": 20,
            "product_degree": 8,
            "product_prime": 11,
            "subarc_prime": None,
        },
    )
    # Assert
    by_check = {finding.check_id: finding for finding in report.findings}
    assert by_check[const.CHECK_POWER_MEAN].passed
    assert by_check[const.CHECK_ESTIMATOR_AGREEMENT].passed
    assert by_check[const.CHECK_JENSEN].passed
    assert by_check[const.CHECK_M0_SMALL].passed
    assert len(report.tables["mahler"]) == 16


@pytest.mark.asyncio
async def test_run_sieve(runner):
    """Tests the sieve suite on a short range."""
    # Act
    report = await runner.run(
        const.COMMAND_SIEVE,
        {"pmin": 11, "pmax": 60, "instances": 40, "max_degree": 10, "seed": 3},
    )
    # Assert
    assert report.exit_code == const.EXIT_OK
    assert report.to_dict()["seed"] == 3
    assert len(report.tables["sieve"]) == 13


@pytest.mark.asyncio
async def test_run_rs(runner):
    """Tests the Rudin-Shapiro coefficient and complementarity checks."""
    # Act
    report = await runner.run(const.COMMAND_RS, {"nmax": 6})
    # Assert
    by_check = {finding.check_id: finding for finding in report.findings}
    assert by_check[const.CHECK_RS_COEFFICIENTS].passed
    assert by_check[const.CHECK_RS_PARSEVAL].passed
    assert len(report.tables["rs"]) == 7


@pytest.mark.asyncio
async def test_run_certify_single(runner):
    """Tests a single-prime certificate below the ratio floor is observed."""
    # Act
    report = await runner.run(const.COMMAND_CERTIFY, {"p": 31})
    # Assert
    assert report.exit_code == const.EXIT_OK
    assert report.results["sweep"]["count"] == 1
    ratio = [f for f in report.findings if f.check_id == const.CHECK_CERTIFICATE_RATIO]
    assert ratio[0].status == const.STATUS_OBSERVE
    by_check = {finding.check_id: finding for finding in report.findings}
    assert by_check[const.CHECK_PRODUCT_BOUND_ZEROS].passed
    assert by_check[const.CHECK_CERTIFICATE].passed


@pytest.mark.asyncio
async def test_run_certify_rejects(runner):
    """Tests a prime too small for a certificate."""
    with pytest.raises(DomainError):
        await runner.run(const.COMMAND_CERTIFY, {"p": 7})


@pytest.mark.asyncio
async def test_run_numerical_failure(runner, monkeypatch):
    """Tests a numerical failure stops the suite with its own exit code."""
    # Arrange
    async def failing(runner, report, **params):
        raise NumericalFailureError("c_delta", "did not converge", 1e-3)

    monkeypatch.setitem(suites.SUITES, const.COMMAND_CDELTA, failing)
    # Act
    report = await runner.run(const.COMMAND_CDELTA)
    # Assert
    assert report.exit_code == const.EXIT_NUMERICAL
    assert report.findings[0].check_id == const.CHECK_NUMERICAL_FAILURE


@pytest.mark.asyncio
async def test_run_unknown_command(runner):
    """Tests an unknown command."""
    with pytest.raises(DomainError):
        await runner.run("plot")


@pytest.mark.asyncio
async def test_threads_do_not_change_results():
    """Tests one and four worker threads give the same report."""
    # Arrange
    params = {"pmin": 11, "pmax": 40, "signs_pmax": 40, "fraction_prime": 0}
    # Act
    async with SuiteRunner(threads=1, timestamps=False) as single:
        first = await single.run(const.COMMAND_ZEROS, params)
    async with SuiteRunner(threads=4, timestamps=False) as pool:
        second = await pool.run(const.COMMAND_ZEROS, params)
    # Assert
    assert first.to_json() == second.to_json()
    assert first.exit_code == const.EXIT_OK


def test_threads_guard():
    """Tests at least one worker thread is required."""
    with pytest.raises(DomainError):
        SuiteRunner(threads=0)
