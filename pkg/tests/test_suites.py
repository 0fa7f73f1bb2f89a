"""Tests for the verification suites in core/suites.py"""

import random
from unittest.mock import patch

import pytest

from core.errors import VerificationError
from core.suites import SUITES, random_signed_word, resolve_suites, run_case, run_suites


class TestResolveSuites:
    """Suite name expansion."""

    def test_all(self):
        assert resolve_suites(['all']) == list(SUITES)
        assert resolve_suites([]) == list(SUITES)

    def test_registry_order(self):
        """Selected suites run in registry order, not argument order."""
        assert resolve_suites(['braid', 'flat']) == ['flat', 'braid']

    def test_unknown(self):
        with pytest.raises(ValueError, match="Invalid suite: 'thm1'"):
            resolve_suites(['thm1'])


class TestRandomWords:
    """Seeded random braid words."""

    def test_deterministic(self):
        a = random_signed_word(random.Random('0:E6'), 6, 30)
        b = random_signed_word(random.Random('0:E6'), 6, 30)
        assert a == b
        assert len(a) <= 30
        assert all(0 <= i < 6 and e in (1, -1) for i, e in a.letters)


class TestRunCase:
    """Failures are recorded, not raised."""

    def test_failure_record(self):
        def failing(case):
            raise VerificationError('flat-condition', {'datum': 'C2:sc'})

        with patch.dict(SUITES, {'flat': (SUITES['flat'][0], failing)}):
            instances, failure = run_case(('flat', 'C', 2))
        assert instances == []
        assert failure == {'identity': 'flat-condition', 'instance': {'datum': 'C2:sc'}, 'case': ['C', 2]}

    def test_failed_suite(self):
        def failing(case):
            raise VerificationError('type-c-matrix-square')

        with patch.dict(SUITES, {'type-c-matrix': (SUITES['type-c-matrix'][0], failing)}):
            [result] = run_suites(['type-c-matrix'], max_rank=2)
        assert not result.passed
        assert len(result.failures) == 1

    def test_unexpected_exception_is_recorded(self):
        """A crash in one case becomes a failure named after the exception type."""
        def crashing(case):
            raise TypeError('object of type generator has no len()')

        with patch.dict(SUITES, {'flat': (SUITES['flat'][0], crashing)}):
            instances, failure = run_case(('flat', 'A', 1))
        assert instances == []
        assert failure['identity'] == 'TypeError'
        assert failure['case'] == ['A', 1]
        assert 'no len' in failure['instance']['error']

    def test_crash_does_not_hide_other_suites(self):
        def crashing(case):
            raise ZeroDivisionError('division by zero')

        with patch.dict(SUITES, {'flat': (SUITES['flat'][0], crashing)}):
            flat, braid = run_suites(['flat', 'braid'], max_rank=2)
        assert not flat.passed
        assert {f['identity'] for f in flat.failures} == {'ZeroDivisionError'}
        assert braid.passed
        assert braid.count > 0


class TestRunSuites:
    """Small runs of the real suites."""

    def test_involution(self):
        """A1, A2, B2, C2 and G2 have 2 + 4 * 4 subsets."""
        [result] = run_suites(['involution'], max_rank=2)
        assert result.passed
        assert result.count == 18

    def test_adams_vogan_counts_words(self):
        """Exhaustive mode checks every element of W once."""
        [result] = run_suites(['adams-vogan'], max_rank=2)
        assert result.passed
        assert result.count == 2 + 6 + 8 + 8 + 12

    def test_type_c_signs(self):
        [result] = run_suites(['type-c-matrix'], max_rank=3)
        assert [i['square_sign'] for i in result.instances] == [1, -1]

    def test_e6_braid_skipped_below_rank_six(self):
        [result] = run_suites(['e6-braid'], max_rank=5)
        assert result.passed
        assert result.count == 0

    def test_theorem1_rank_one(self):
        [result] = run_suites(['theorem1'], max_rank=1)
        assert result.passed
        assert {i['datum'] for i in result.instances} == {'A1:sc', 'A1:ad'}
        assert all(i['oracle'] for i in result.instances)

    def test_theorem2_rank_one(self):
        [result] = run_suites(['theorem2'], max_rank=1)
        assert result.passed
        assert len(result.instances) == 16

    def test_flat_and_braid(self):
        results = run_suites(['flat', 'braid'], max_rank=3)
        assert [r.name for r in results] == ['flat', 'braid']
        assert all(r.passed for r in results)

    def test_jobs_do_not_change_results(self):
        serial = run_suites(['involution', 'type-c-matrix'], max_rank=3, jobs=1)
        parallel = run_suites(['involution', 'type-c-matrix'], max_rank=3, jobs=2)
        assert [r.to_document() for r in serial] == [r.to_document() for r in parallel]
