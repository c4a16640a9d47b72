from math import comb

import pytest

from rankred.reductions import ip_lemma_enumerate, ip_objective
from rankred.utils.constants import IP_LEMMA_SUITE_ELLS
from rankred.utils.exceptions import InvalidParameterError


def test_smallest_ell():
    assert ip_lemma_enumerate(6) == frozenset({(15, 0, 0, 6)})


@pytest.mark.parametrize("ell", IP_LEMMA_SUITE_ELLS)
def test_unique_minimizer(ell):
    minimizers = ip_lemma_enumerate(ell)
    assert minimizers == frozenset({(comb(ell, 2), 0, 0, ell)})
    assert ip_objective(next(iter(minimizers))) == comb(ell, 2)


def test_objective():
    assert ip_objective((1, 1, 1, 0)) == 6


@pytest.mark.parametrize("ell", [0, 5])
def test_small_ell_rejected(ell):
    with pytest.raises(InvalidParameterError):
        ip_lemma_enumerate(ell)
