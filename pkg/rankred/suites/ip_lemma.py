from math import comb
from typing import Iterator

from rankred.reductions.ip_lemma import ip_lemma_enumerate
from rankred.suites.base import AcceptanceSuite
from rankred.utils.constants import IP_LEMMA_SUITE_ELLS


class IpLemmaSuite(AcceptanceSuite):
    """The budget program behind the clique gadget has the single minimizer (C(ell, 2), 0, 0, ell)."""

    name = "ip-lemma"
    description = "unique minimizer of the clique gadget budget program for ell = 6..12"
    properties = ("unique-minimizer",)

    def generate(self) -> Iterator[int]:
        yield from IP_LEMMA_SUITE_ELLS

    def describe(self, instance: int) -> str:
        return f"ell={instance}"

    def check(self, ell: int):
        self.expect("unique-minimizer", ell, lambda: ip_lemma_enumerate(ell) == {(comb(ell, 2), 0, 0, ell)})
